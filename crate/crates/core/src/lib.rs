//! Strategy synthesis for Wordle-style feedback games.
//!
//! Guesses are chosen greedily by how they split the remaining candidates
//! into bins of equal color response. The crate builds full strategy trees
//! under regular, hard and superhard rules, evaluates them, searches small
//! instances exhaustively and regenerates strategies once past answers are
//! excluded.

pub mod assist;
pub mod binning;
pub mod error;
pub mod feedback;
pub mod game;
pub mod heuristics;
pub mod history;
pub mod lexicon;
pub mod optimal;
pub mod strategy;

pub use binning::{all_singletons, partition, BinDistribution};
pub use error::{Error, Result};
pub use feedback::{score, Color, Pattern, PatternTable};
pub use game::Game;
pub use heuristics::{choose_guess, HeuristicId, HeuristicScore, HeuristicSpec};
pub use lexicon::{Lexicon, Word};
pub use strategy::{
    build_tree, build_tree_from, evaluate, legal_guesses, load_tree, serialize_tree, Constraints,
    EvalReport, Mode, StrategyNode, StrategyTree,
};
