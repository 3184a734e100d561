//! Greedy strategy trees: rules, construction, evaluation and storage.

mod build;
mod eval;
mod rules;
mod tree;

pub use build::{build_tree, build_tree_from};
pub(crate) use build::{next_guess, NodeState};
pub use eval::{
    evaluate, render_csv, render_histogram, render_table, EvalReport, ReportRow, CSV_HEADER,
};
pub use rules::{legal_guesses, Constraints, Mode};
pub use tree::{load_tree, serialize_tree, StrategyNode, StrategyTree};
