use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::feedback::{score_code, Pattern};
use crate::game::Game;
use crate::heuristics::{choose_guess_indexed, HeuristicSpec};
use crate::lexicon::Lexicon;
use crate::strategy::rules::{Constraints, HardRequirement, Mode};
use crate::strategy::tree::{StrategyNode, StrategyTree};

/// What is known at one node of the game: remaining candidates and the
/// guesses that still fit the history.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct NodeState {
    /// Solution indices, ascending.
    pub candidates: Vec<u32>,
    /// Guess indices that could still be the answer, ascending.
    pub consistent: Vec<u32>,
    /// Guess indices legal in hard mode, ascending. Empty in other modes.
    pub hard: Vec<u32>,
}

impl NodeState {
    pub fn root(game: &Game, mode: Mode) -> Self {
        let all = game.all_guesses();
        NodeState {
            candidates: game.all_candidates(),
            hard: if mode == Mode::Hard {
                all.clone()
            } else {
                Vec::new()
            },
            consistent: all,
        }
    }

    pub fn from_constraints(game: &Game, mode: Mode, constraints: &Constraints) -> Self {
        let candidates = game
            .all_candidates()
            .into_iter()
            .filter(|&s| constraints.is_consistent(game.solution_word(s)))
            .collect();
        let consistent = game
            .all_guesses()
            .into_iter()
            .filter(|&g| constraints.is_consistent(game.guess_word(g)))
            .collect();
        let hard = if mode == Mode::Hard {
            game.all_guesses()
                .into_iter()
                .filter(|&g| constraints.is_hard_legal(game.guess_word(g)))
                .collect()
        } else {
            Vec::new()
        };
        NodeState {
            candidates,
            consistent,
            hard,
        }
    }

    /// The state after playing `guess` and seeing `code`.
    pub fn child(&self, game: &Game, mode: Mode, guess: u32, code: u16) -> Self {
        let guess_word = game.guess_word(guess);
        let consistent = self
            .consistent
            .iter()
            .copied()
            .filter(|&g| score_code(guess_word.as_bytes(), game.guess_word(g).as_bytes()) == code)
            .collect();
        let hard = if mode == Mode::Hard {
            let req = HardRequirement::new(guess_word, Pattern::from_code(code, game.word_len()));
            self.hard
                .iter()
                .copied()
                .filter(|&g| req.allows(game.guess_word(g)))
                .collect()
        } else {
            Vec::new()
        };
        NodeState {
            candidates: game.split(guess, &self.candidates, code),
            consistent,
            hard,
        }
    }

    pub fn legal<'a>(&'a self, mode: Mode, all: &'a [u32]) -> &'a [u32] {
        match mode {
            Mode::Regular => all,
            Mode::Hard => &self.hard,
            Mode::Superhard => &self.consistent,
        }
    }

    pub fn is_consistent(&self, guess: u32) -> bool {
        self.consistent.binary_search(&guess).is_ok()
    }
}

/// The guess the greedy strategy plays at `state`.
///
/// With one or two candidates left the earliest candidate is played.
pub(crate) fn next_guess(
    game: &Game,
    spec: &HeuristicSpec,
    state: &NodeState,
    all_guesses: &[u32],
) -> Result<u32> {
    if state.candidates.is_empty() {
        return Err(Error::NoCandidates);
    }
    if state.candidates.len() <= 2 {
        if let Some(g) = game.solution_as_guess(state.candidates[0]) {
            return Ok(g);
        }
    }
    let legal = state.legal(spec.mode, all_guesses);
    if legal.is_empty() {
        return Err(Error::NoLegalGuess);
    }
    let choice = choose_guess_indexed(
        game,
        &state.candidates,
        legal,
        &|g| state.is_consistent(g),
        spec,
    )?;
    Ok(choice.guess)
}

/// Builds the greedy strategy tree for every solution of `game`.
pub fn build_tree(game: &Game, spec: &HeuristicSpec) -> Result<StrategyTree> {
    let all = game.all_guesses();
    let root = NodeState::root(game, spec.mode);
    Ok(StrategyTree::new(build_node(game, spec, &all, root, 1)?))
}

/// Builds a tree from word lists; the guess list defaults to the solutions.
pub fn build_tree_from(
    solutions: &Lexicon,
    guesses: Option<&Lexicon>,
    spec: &HeuristicSpec,
) -> Result<StrategyTree> {
    let guesses = guesses.unwrap_or(solutions).clone();
    let game = Game::new(solutions.clone(), guesses)?;
    build_tree(&game, spec)
}

fn build_node(
    game: &Game,
    spec: &HeuristicSpec,
    all: &[u32],
    state: NodeState,
    depth: usize,
) -> Result<StrategyNode> {
    // every useful guess removes at least one candidate
    if depth > game.solutions().len() + 1 {
        return Err(Error::NoLegalGuess);
    }
    let guess = next_guess(game, spec, &state, all)?;
    let all_green = game.all_green();
    let dist = game.partition(guess, &state.candidates);
    let codes: Vec<u16> = dist
        .member_groups()
        .map(|(code, _)| code)
        .filter(|&code| code != all_green)
        .collect();
    let children = codes
        .into_par_iter()
        .map(|code| {
            let child = state.child(game, spec.mode, guess, code);
            let node = build_node(game, spec, all, child, depth + 1)?;
            Ok((Pattern::from_code(code, game.word_len()), node))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StrategyNode {
        guess: game.guess_word(guess).clone(),
        children: children.into_iter().collect(),
    })
}
