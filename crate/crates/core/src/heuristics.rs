//! Bin-distribution heuristics and guess selection.
//!
//! Every heuristic maps a [`BinDistribution`] to a [`HeuristicScore`] where
//! lower is better. Most are norms of the bin-size vector:
//!
//! | heuristic          | score                                   | norm      |
//! |--------------------|-----------------------------------------|-----------|
//! | `negnumbins`       | `-(number of bins)`                     | `L^0`     |
//! | `negentropy`       | `sum (n/N) ln(n/N)`                     | `L^1`     |
//! | `expbinsize`       | `sum n^2 / N`                           | `L^2`     |
//! | `linfinity`        | `(size, count)` levels, largest first   | `L^inf`   |
//! | `negnumsingletons` | `-(number of bins of size 1)`           | `L^-inf`  |
//! | `maxbinsize`       | `max n`                                 | `L^inf`   |
//!
//! `maxsimilarity` and `maxonediffs` look at bin contents instead of sizes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::binning::BinDistribution;
use crate::error::{Error, Result};
use crate::feedback::pattern_count;
use crate::game::Game;
use crate::lexicon::{Lexicon, Word};
use crate::strategy::{Constraints, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HeuristicId {
    NegNumBins,
    NegEntropy,
    #[serde(alias = "expectation")]
    ExpBinSize,
    LInfinity,
    NegNumSingletons,
    #[serde(alias = "similarity")]
    MaxSimilarity,
    MaxBinSize,
    MaxOneDiffs,
}

impl HeuristicId {
    pub const ALL: [HeuristicId; 8] = [
        HeuristicId::NegNumBins,
        HeuristicId::NegEntropy,
        HeuristicId::ExpBinSize,
        HeuristicId::LInfinity,
        HeuristicId::NegNumSingletons,
        HeuristicId::MaxSimilarity,
        HeuristicId::MaxBinSize,
        HeuristicId::MaxOneDiffs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HeuristicId::NegNumBins => "negnumbins",
            HeuristicId::NegEntropy => "negentropy",
            HeuristicId::ExpBinSize => "expbinsize",
            HeuristicId::LInfinity => "linfinity",
            HeuristicId::NegNumSingletons => "negnumsingletons",
            HeuristicId::MaxSimilarity => "maxsimilarity",
            HeuristicId::MaxBinSize => "maxbinsize",
            HeuristicId::MaxOneDiffs => "maxonediffs",
        }
    }

    /// The `p` of the `L^p` norm this heuristic corresponds to, if any.
    pub fn norm_exponent(self) -> Option<f64> {
        match self {
            HeuristicId::NegNumBins => Some(0.0),
            HeuristicId::NegEntropy => Some(1.0),
            HeuristicId::ExpBinSize => Some(2.0),
            HeuristicId::LInfinity | HeuristicId::MaxBinSize => Some(f64::INFINITY),
            HeuristicId::NegNumSingletons => Some(f64::NEG_INFINITY),
            HeuristicId::MaxSimilarity | HeuristicId::MaxOneDiffs => None,
        }
    }

    /// Whether the score depends on which words share a bin.
    pub fn needs_contents(self) -> bool {
        matches!(self, HeuristicId::MaxSimilarity | HeuristicId::MaxOneDiffs)
    }
}

impl fmt::Display for HeuristicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HeuristicId {
    type Err = Error;

    fn from_str(s: &str) -> Result<HeuristicId> {
        let lower = s.to_ascii_lowercase();
        let alias = match lower.as_str() {
            "expectation" => Some(HeuristicId::ExpBinSize),
            "similarity" => Some(HeuristicId::MaxSimilarity),
            "entropy" => Some(HeuristicId::NegEntropy),
            _ => None,
        };
        alias
            .or_else(|| HeuristicId::ALL.into_iter().find(|h| h.name() == lower))
            .ok_or_else(|| Error::UnknownHeuristic(s.to_string()))
    }
}

/// A totally ordered heuristic value; smaller is better.
#[derive(Clone, Debug)]
pub enum HeuristicScore {
    Int(i64),
    /// `num / den`, compared exactly.
    Ratio {
        num: u64,
        den: u64,
    },
    Real(f64),
    /// `(bin size, number of bins with that size)`, largest size first.
    Levels(Vec<(u32, u32)>),
}

impl HeuristicScore {
    /// Scalar value for display. Levels report the largest bin size.
    pub fn as_f64(&self) -> f64 {
        match self {
            HeuristicScore::Int(v) => *v as f64,
            HeuristicScore::Ratio { num, den } => *num as f64 / *den as f64,
            HeuristicScore::Real(v) => *v,
            HeuristicScore::Levels(levels) => levels.first().map_or(0.0, |l| l.0 as f64),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            HeuristicScore::Int(_) => 0,
            HeuristicScore::Ratio { .. } => 1,
            HeuristicScore::Real(_) => 2,
            HeuristicScore::Levels(_) => 3,
        }
    }
}

impl Ord for HeuristicScore {
    fn cmp(&self, other: &Self) -> Ordering {
        use HeuristicScore::*;
        match (self, other) {
            (Int(a), Int(b)) => a.cmp(b),
            (Ratio { num: a, den: da }, Ratio { num: b, den: db }) => {
                (*a as u128 * *db as u128).cmp(&(*b as u128 * *da as u128))
            }
            (Real(a), Real(b)) => a.total_cmp(b),
            (Levels(a), Levels(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for HeuristicScore {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for HeuristicScore {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeuristicScore {}

impl fmt::Display for HeuristicScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeuristicScore::Int(v) => write!(f, "{v}"),
            HeuristicScore::Ratio { .. } => write!(f, "{:.4}", self.as_f64()),
            HeuristicScore::Real(v) => write!(f, "{v:.4}"),
            HeuristicScore::Levels(levels) => {
                let parts: Vec<String> = levels.iter().map(|(s, c)| format!("{s}x{c}")).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl Serialize for HeuristicScore {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HeuristicScore::Int(v) => serializer.serialize_i64(*v),
            HeuristicScore::Ratio { .. } | HeuristicScore::Real(_) => {
                serializer.serialize_f64(self.as_f64())
            }
            HeuristicScore::Levels(levels) => levels.serialize(serializer),
        }
    }
}

/// Primary heuristic, optional tie-break and the game mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeuristicSpec {
    pub primary: HeuristicId,
    pub tiebreak: Option<HeuristicId>,
    #[serde(default)]
    pub mode: Mode,
}

impl HeuristicSpec {
    pub fn new(primary: HeuristicId) -> Self {
        HeuristicSpec {
            primary,
            tiebreak: None,
            mode: Mode::Regular,
        }
    }

    pub fn with_tiebreak(mut self, tiebreak: HeuristicId) -> Self {
        self.tiebreak = Some(tiebreak);
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// Method label as used in report tables, e.g. `negnumbins-expbinsize`.
    pub fn label(&self) -> String {
        match self.tiebreak {
            Some(t) => format!("{}-{}", self.primary, t),
            None => self.primary.to_string(),
        }
    }
}

impl Default for HeuristicSpec {
    /// Most bins, ties broken by smaller expected bin size.
    fn default() -> Self {
        HeuristicSpec::new(HeuristicId::NegNumBins).with_tiebreak(HeuristicId::ExpBinSize)
    }
}

pub fn score_negnumbins(dist: &BinDistribution<'_>) -> HeuristicScore {
    HeuristicScore::Int(-(dist.num_bins() as i64))
}

/// Bin sizes in the fixed summation order used by float heuristics:
/// ascending size, ties in pattern-code order.
fn sizes_ascending(dist: &BinDistribution<'_>) -> Vec<usize> {
    let mut sizes: Vec<usize> = dist.sizes().collect();
    sizes.sort();
    sizes
}

pub fn score_negentropy(dist: &BinDistribution<'_>) -> HeuristicScore {
    let total = dist.total() as f64;
    let sum = sizes_ascending(dist)
        .into_iter()
        .map(|n| {
            let p = n as f64 / total;
            p * p.ln()
        })
        .sum::<f64>();
    HeuristicScore::Real(sum)
}

pub fn score_expbinsize(dist: &BinDistribution<'_>) -> HeuristicScore {
    let num = dist.sizes().map(|n| (n * n) as u64).sum();
    HeuristicScore::Ratio {
        num,
        den: dist.total().max(1) as u64,
    }
}

pub fn score_linfinity(dist: &BinDistribution<'_>) -> HeuristicScore {
    let mut sizes = sizes_ascending(dist);
    sizes.reverse();
    let mut levels: Vec<(u32, u32)> = Vec::new();
    for n in sizes {
        match levels.last_mut() {
            Some((size, count)) if *size == n as u32 => *count += 1,
            _ => levels.push((n as u32, 1)),
        }
    }
    HeuristicScore::Levels(levels)
}

pub fn score_negnumsingletons(dist: &BinDistribution<'_>) -> HeuristicScore {
    HeuristicScore::Int(-(dist.sizes().filter(|&n| n == 1).count() as i64))
}

pub fn score_maxbinsize(dist: &BinDistribution<'_>) -> HeuristicScore {
    HeuristicScore::Int(dist.max_size() as i64)
}

/// Letter/position concentration of a group of words: the negentropy of
/// the `26 * L` cells that count each letter at each position.
pub fn similarity<'w>(words: impl IntoIterator<Item = &'w Word>, word_len: usize) -> f64 {
    let mut cells = vec![0u32; 26 * word_len];
    let mut m = 0usize;
    for word in words {
        m += 1;
        for (pos, &b) in word.as_bytes().iter().enumerate() {
            cells[pos * 26 + (b - b'a') as usize] += 1;
        }
    }
    let total = (word_len * m) as f64;
    cells
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            p * p.ln()
        })
        .sum()
}

pub fn score_maxsimilarity(dist: &BinDistribution<'_>) -> HeuristicScore {
    let max = dist
        .bins()
        .map(|b| similarity(b.words(), dist.word_len()))
        .max_by(|a, b| a.total_cmp(b))
        .unwrap_or(f64::NEG_INFINITY);
    HeuristicScore::Real(max)
}

/// Words that differ in exactly one position.
pub fn one_diff(a: &Word, b: &Word) -> bool {
    a.len() == b.len()
        && a.as_bytes()
            .iter()
            .zip(b.as_bytes())
            .filter(|(x, y)| x != y)
            .count()
            == 1
}

pub fn score_maxonediffs(dist: &BinDistribution<'_>) -> HeuristicScore {
    let universe = dist.universe();
    let max = dist
        .member_groups()
        .map(|(_, members)| {
            let mut pairs = 0i64;
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if one_diff(&universe[a as usize], &universe[b as usize]) {
                        pairs += 1;
                    }
                }
            }
            pairs
        })
        .max()
        .unwrap_or(0);
    HeuristicScore::Int(max)
}

pub fn score(id: HeuristicId, dist: &BinDistribution<'_>) -> HeuristicScore {
    match id {
        HeuristicId::NegNumBins => score_negnumbins(dist),
        HeuristicId::NegEntropy => score_negentropy(dist),
        HeuristicId::ExpBinSize => score_expbinsize(dist),
        HeuristicId::LInfinity => score_linfinity(dist),
        HeuristicId::NegNumSingletons => score_negnumsingletons(dist),
        HeuristicId::MaxSimilarity => score_maxsimilarity(dist),
        HeuristicId::MaxBinSize => score_maxbinsize(dist),
        HeuristicId::MaxOneDiffs => score_maxonediffs(dist),
    }
}

/// One-position-difference pairs among a candidate set, so `maxonediffs`
/// can be scored per guess by checking which pairs share a bin.
struct OneDiffPairs {
    pairs: Vec<(u32, u32)>,
}

impl OneDiffPairs {
    fn new(game: &Game, candidates: &[u32]) -> Self {
        let mut pairs = Vec::new();
        for (i, &a) in candidates.iter().enumerate() {
            let wa = game.solution_word(a);
            for &b in &candidates[i + 1..] {
                if one_diff(wa, game.solution_word(b)) {
                    pairs.push((a, b));
                }
            }
        }
        OneDiffPairs { pairs }
    }

    fn score(&self, game: &Game, guess: u32, scratch: &mut Vec<u32>) -> HeuristicScore {
        let row = game.table().row(guess as usize);
        scratch.clear();
        scratch.resize(pattern_count(game.word_len()) as usize, 0);
        let mut max = 0;
        for &(a, b) in &self.pairs {
            let code = row[a as usize];
            if code == row[b as usize] {
                let slot = &mut scratch[code as usize];
                *slot += 1;
                max = max.max(*slot);
            }
        }
        HeuristicScore::Int(max as i64)
    }
}

/// Scores guesses against one candidate set.
pub(crate) struct Scorer<'g> {
    game: &'g Game,
    candidates: &'g [u32],
    one_diffs: Option<OneDiffPairs>,
}

impl<'g> Scorer<'g> {
    pub(crate) fn new(game: &'g Game, candidates: &'g [u32], spec: &HeuristicSpec) -> Self {
        let wants_pairs = spec.primary == HeuristicId::MaxOneDiffs
            || spec.tiebreak == Some(HeuristicId::MaxOneDiffs);
        Scorer {
            game,
            candidates,
            one_diffs: wants_pairs.then(|| OneDiffPairs::new(game, candidates)),
        }
    }

    pub(crate) fn score(
        &self,
        id: HeuristicId,
        guess: u32,
        dist: &BinDistribution<'_>,
    ) -> HeuristicScore {
        match (id, &self.one_diffs) {
            (HeuristicId::MaxOneDiffs, Some(pairs)) => {
                pairs.score(self.game, guess, &mut Vec::new())
            }
            _ => score(id, dist),
        }
    }

    pub(crate) fn partition(&self, guess: u32) -> BinDistribution<'g> {
        self.game.partition(guess, self.candidates)
    }

    /// A guess outside the candidate set that leaves them all in one bin
    /// teaches nothing.
    pub(crate) fn makes_progress(&self, guess: u32, dist: &BinDistribution<'_>) -> bool {
        dist.num_bins() > 1
            || self
                .game
                .guess_as_solution(guess)
                .is_some_and(|s| self.candidates.binary_search(&s).is_ok())
    }
}

/// The outcome of scanning a guess list.
#[derive(Clone, Debug)]
pub struct GuessChoice {
    /// Guess-list index of the selected word.
    pub guess: u32,
    pub primary: HeuristicScore,
    pub consistent: bool,
    pub tiebreak: Option<HeuristicScore>,
    /// How many guesses were examined before stopping.
    pub scanned: usize,
    /// The scan ended on an all-singleton distribution.
    pub early_stop: bool,
}

#[derive(Clone, Debug)]
struct Evaluated {
    guess: u32,
    primary: HeuristicScore,
    consistent: bool,
    singletons: bool,
}

const SCAN_CHUNK: usize = 256;

/// Picks a guess from `legal` (guess indices, list order) for `candidates`
/// (solution indices, ascending).
///
/// Guesses are compared by primary score, then by whether they could still
/// be the answer, then by the tie-break heuristic, then by list position.
/// The scan stops as soon as a guess splits the candidates into singletons.
pub(crate) fn choose_guess_indexed(
    game: &Game,
    candidates: &[u32],
    legal: &[u32],
    is_consistent: &(dyn Fn(u32) -> bool + Sync),
    spec: &HeuristicSpec,
) -> Result<GuessChoice> {
    if candidates.is_empty() {
        return Err(Error::Empty("candidate set"));
    }
    if legal.is_empty() {
        return Err(Error::Empty("guess set"));
    }
    let scorer = Scorer::new(game, candidates, spec);
    let mut best: Option<(Evaluated, Option<HeuristicScore>)> = None;
    let mut scanned = 0;

    for chunk in legal.chunks(SCAN_CHUNK) {
        let evaluated: Vec<Option<Evaluated>> = chunk
            .par_iter()
            .map(|&g| {
                let dist = scorer.partition(g);
                if !scorer.makes_progress(g, &dist) {
                    return None;
                }
                Some(Evaluated {
                    guess: g,
                    primary: scorer.score(spec.primary, g, &dist),
                    consistent: is_consistent(g),
                    singletons: dist.all_singletons(),
                })
            })
            .collect();

        for item in evaluated {
            scanned += 1;
            let Some(cand) = item else { continue };
            let singletons = cand.singletons;
            best = Some(match best.take() {
                None => (cand, None),
                Some((cur, cur_tb)) => prefer(&scorer, spec, cur, cur_tb, cand),
            });
            if singletons {
                let (e, tb) = best.expect("just set");
                return Ok(finish(&scorer, spec, e, tb, scanned, true));
            }
        }
    }

    let (e, tb) = best.ok_or(Error::NoLegalGuess)?;
    Ok(finish(&scorer, spec, e, tb, scanned, false))
}

fn tiebreak_of(scorer: &Scorer<'_>, id: HeuristicId, guess: u32) -> HeuristicScore {
    let dist = scorer.partition(guess);
    scorer.score(id, guess, &dist)
}

/// Keeps `cur` unless `cand` wins under the selection key. `cur` was scanned
/// earlier, so it wins full ties.
fn prefer(
    scorer: &Scorer<'_>,
    spec: &HeuristicSpec,
    cur: Evaluated,
    cur_tb: Option<HeuristicScore>,
    cand: Evaluated,
) -> (Evaluated, Option<HeuristicScore>) {
    match cand.primary.cmp(&cur.primary) {
        Ordering::Less => return (cand, None),
        Ordering::Greater => return (cur, cur_tb),
        Ordering::Equal => {}
    }
    match (cand.consistent, cur.consistent) {
        (true, false) => return (cand, None),
        (false, true) => return (cur, cur_tb),
        _ => {}
    }
    let Some(tb) = spec.tiebreak else {
        return (cur, cur_tb);
    };
    let cur_tb = cur_tb.unwrap_or_else(|| tiebreak_of(scorer, tb, cur.guess));
    let cand_tb = tiebreak_of(scorer, tb, cand.guess);
    if cand_tb < cur_tb {
        (cand, Some(cand_tb))
    } else {
        (cur, Some(cur_tb))
    }
}

fn finish(
    scorer: &Scorer<'_>,
    spec: &HeuristicSpec,
    e: Evaluated,
    tb: Option<HeuristicScore>,
    scanned: usize,
    early_stop: bool,
) -> GuessChoice {
    let tiebreak = spec
        .tiebreak
        .map(|id| tb.unwrap_or_else(|| tiebreak_of(scorer, id, e.guess)));
    GuessChoice {
        guess: e.guess,
        primary: e.primary,
        consistent: e.consistent,
        tiebreak,
        scanned,
        early_stop,
    }
}

/// Picks the next guess from `allowed` for the remaining `candidates`.
///
/// `constraints` decides which guesses could still be the answer; those
/// win ties on the primary heuristic. `spec.mode` is not applied here:
/// `allowed` is taken as already legal.
pub fn choose_guess(
    candidates: &[Word],
    allowed: &[Word],
    spec: &HeuristicSpec,
    constraints: &Constraints,
) -> Result<Word> {
    if candidates.is_empty() {
        return Err(Error::Empty("candidate set"));
    }
    if allowed.is_empty() {
        return Err(Error::Empty("guess set"));
    }
    let solutions = Lexicon::new("candidates", candidates.to_vec())?;
    let guesses = Lexicon::new("allowed", allowed.to_vec())?;
    let game = Game::new(solutions, guesses)?;
    let consistent: Vec<bool> = allowed
        .iter()
        .map(|w| constraints.is_consistent(w))
        .collect();
    let choice = choose_guess_indexed(
        &game,
        &game.all_candidates(),
        &game.all_guesses(),
        &|g| consistent[g as usize],
        spec,
    )?;
    Ok(game.guess_word(choice.guess).clone())
}
