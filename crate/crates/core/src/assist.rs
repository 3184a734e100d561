//! Request handling shared by the command line and the HTTP service.
//!
//! Every call is a pure function of the loaded word lists and the request.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binning::BinDistribution;
use crate::error::{Error, Result};
use crate::feedback::Pattern;
use crate::game::Game;
use crate::heuristics::{self, HeuristicId, HeuristicScore, HeuristicSpec, Scorer};
use crate::lexicon::Word;
use crate::strategy::{next_guess, Constraints, Mode, NodeState};

/// Candidates listed in a suggestion response.
pub const CANDIDATE_SAMPLE: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub guess: String,
    pub pattern: String,
}

fn default_heuristic() -> HeuristicId {
    HeuristicId::NegNumBins
}

fn default_tiebreak() -> Option<HeuristicId> {
    Some(HeuristicId::ExpBinSize)
}

fn default_top_k() -> usize {
    10
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuggestRequest {
    #[serde(default)]
    pub history: Vec<HistoryEntry>,
    #[serde(default = "default_heuristic")]
    pub heuristic: HeuristicId,
    /// Absent means `expbinsize`; an explicit `null` disables the tie-break.
    #[serde(default = "default_tiebreak")]
    pub tiebreak: Option<HeuristicId>,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default = "default_top_k")]
    pub top_k: usize,
}

impl Default for SuggestRequest {
    fn default() -> Self {
        SuggestRequest {
            history: Vec::new(),
            heuristic: default_heuristic(),
            tiebreak: default_tiebreak(),
            mode: Mode::Regular,
            top_k: default_top_k(),
        }
    }
}

impl SuggestRequest {
    pub fn spec(&self) -> HeuristicSpec {
        HeuristicSpec {
            primary: self.heuristic,
            tiebreak: self.tiebreak,
            mode: self.mode,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Suggestion {
    pub word: String,
    pub primary: HeuristicScore,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tiebreak: Option<HeuristicScore>,
    pub bins: usize,
    pub max_bin_size: usize,
    pub expected_bin_size: f64,
    /// Shannon entropy of the bin sizes, in nats.
    pub entropy: f64,
    pub superhard_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuggestResponse {
    pub remaining: usize,
    pub suggestions: Vec<Suggestion>,
    pub candidates_sample: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionRequest {
    pub guess: String,
    #[serde(default)]
    pub history: Vec<HistoryEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargestBin {
    pub pattern: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSummary {
    pub guess: String,
    pub remaining: usize,
    pub bins: usize,
    /// bin size -> number of bins of that size
    pub size_histogram: BTreeMap<usize, usize>,
    pub largest: LargestBin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListInfo {
    pub label: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub solutions: ListInfo,
    pub guesses: ListInfo,
    pub word_len: usize,
    pub heuristics: Vec<&'static str>,
    pub modes: Vec<&'static str>,
}

/// Answers suggestion and partition queries over one game.
#[derive(Clone, Debug)]
pub struct Assistant {
    game: Game,
    all_guesses: Vec<u32>,
}

impl Assistant {
    pub fn new(game: Game) -> Self {
        let all_guesses = game.all_guesses();
        Assistant { game, all_guesses }
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn meta(&self) -> Meta {
        let info = |lex: &crate::lexicon::Lexicon| ListInfo {
            label: lex.label().to_string(),
            size: lex.len(),
        };
        Meta {
            solutions: info(self.game.solutions()),
            guesses: info(self.game.guesses()),
            word_len: self.game.word_len(),
            heuristics: HeuristicId::ALL.iter().map(|h| h.name()).collect(),
            modes: Mode::ALL.iter().map(|m| m.name()).collect(),
        }
    }

    /// Checks and converts a wire-format history.
    pub fn constraints(&self, history: &[HistoryEntry]) -> Result<Constraints> {
        let mut out = Constraints::new();
        for entry in history {
            let guess = Word::new(&entry.guess)?;
            if !self.game.guesses().contains(&guess) {
                return Err(Error::UnknownGuess(entry.guess.clone()));
            }
            let pattern = Pattern::parse(&entry.pattern, self.game.word_len())?;
            out.push(guess, pattern)?;
        }
        Ok(out)
    }

    fn state(&self, mode: Mode, history: &[HistoryEntry]) -> Result<NodeState> {
        let constraints = self.constraints(history)?;
        let state = NodeState::from_constraints(&self.game, mode, &constraints);
        if state.candidates.is_empty() {
            return Err(Error::NoCandidates);
        }
        Ok(state)
    }

    /// Ranks legal next guesses. The first suggestion is the word the
    /// greedy strategy would play; the rest follow the selection key.
    pub fn suggest(&self, req: &SuggestRequest) -> Result<SuggestResponse> {
        if req.top_k == 0 {
            return Err(Error::BadRequest("top_k must be at least 1".into()));
        }
        let spec = req.spec();
        let state = self.state(req.mode, &req.history)?;
        let scorer = Scorer::new(&self.game, &state.candidates, &spec);
        let legal = state.legal(req.mode, &self.all_guesses);

        let mut ranked: Vec<(u32, Suggestion)> = legal
            .par_iter()
            .filter_map(|&g| {
                let dist = scorer.partition(g);
                if !scorer.makes_progress(g, &dist) {
                    return None;
                }
                Some((
                    g,
                    self.describe(&scorer, &spec, g, &dist, state.is_consistent(g)),
                ))
            })
            .collect();
        ranked.sort_by(|(ga, a), (gb, b)| {
            a.primary
                .cmp(&b.primary)
                .then(b.superhard_consistent.cmp(&a.superhard_consistent))
                .then_with(|| a.tiebreak.cmp(&b.tiebreak))
                .then(ga.cmp(gb))
        });

        let pick = next_guess(&self.game, &spec, &state, &self.all_guesses)?;
        if let Some(pos) = ranked.iter().position(|(g, _)| *g == pick) {
            let chosen = ranked.remove(pos);
            ranked.insert(0, chosen);
        }
        ranked.truncate(req.top_k);

        Ok(SuggestResponse {
            remaining: state.candidates.len(),
            suggestions: ranked.into_iter().map(|(_, s)| s).collect(),
            candidates_sample: state
                .candidates
                .iter()
                .take(CANDIDATE_SAMPLE)
                .map(|&s| self.game.solution_word(s).to_string())
                .collect(),
        })
    }

    fn describe(
        &self,
        scorer: &Scorer<'_>,
        spec: &HeuristicSpec,
        guess: u32,
        dist: &BinDistribution<'_>,
        consistent: bool,
    ) -> Suggestion {
        Suggestion {
            word: self.game.guess_word(guess).to_string(),
            primary: scorer.score(spec.primary, guess, dist),
            tiebreak: spec.tiebreak.map(|t| scorer.score(t, guess, dist)),
            bins: dist.num_bins(),
            max_bin_size: dist.max_size(),
            expected_bin_size: heuristics::score_expbinsize(dist).as_f64(),
            entropy: -heuristics::score_negentropy(dist).as_f64(),
            superhard_consistent: consistent,
        }
    }

    /// Bin statistics for one guess against the candidates left by `history`.
    pub fn partition(&self, req: &PartitionRequest) -> Result<PartitionSummary> {
        let guess = Word::new(&req.guess)?;
        if guess.len() != self.game.word_len() {
            return Err(Error::LengthMismatch {
                expected: self.game.word_len(),
                actual: guess.len(),
            });
        }
        let state = self.state(Mode::Regular, &req.history)?;
        let candidates: Vec<Word> = state
            .candidates
            .iter()
            .map(|&s| self.game.solution_word(s).clone())
            .collect();
        let dist = BinDistribution::partition(&guess, &candidates)?;
        let mut size_histogram = BTreeMap::new();
        for n in dist.sizes() {
            *size_histogram.entry(n).or_insert(0) += 1;
        }
        let (pattern, size) = dist.largest().expect("candidates are nonempty");
        Ok(PartitionSummary {
            guess: guess.to_string(),
            remaining: dist.total(),
            bins: dist.num_bins(),
            size_histogram,
            largest: LargestBin {
                pattern: pattern.to_string(),
                size,
            },
        })
    }
}
