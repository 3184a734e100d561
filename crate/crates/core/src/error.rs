use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    BadLine { line: usize, message: String },

    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("duplicate word {word:?} on line {line}")]
    DuplicateWord { word: String, line: usize },

    #[error("word length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid pattern {text:?}: {reason}")]
    InvalidPattern { text: String, reason: String },

    #[error("pattern code {code} out of range for length {len}")]
    CodeOutOfRange { code: u32, len: usize },

    #[error("unknown heuristic {0:?}")]
    UnknownHeuristic(String),

    #[error("unknown mode {0:?}")]
    UnknownMode(String),

    #[error("{0} is empty")]
    Empty(&'static str),

    #[error("word {0:?} is not in the guess list")]
    UnknownGuess(String),

    #[error("no candidate solutions remain for this history")]
    NoCandidates,

    #[error("no legal guess makes progress at this node")]
    NoLegalGuess,

    #[error("solution {0:?} is not solved by the strategy tree")]
    Unsolved(String),

    #[error("malformed strategy document: {0}")]
    MalformedTree(String),

    #[error("ledger word {0:?} is not in the solution list")]
    LedgerWordUnknown(String),

    #[error("bad request: {0}")]
    BadRequest(String),

    #[error("no strategy solves every candidate within {0} guesses")]
    Infeasible(u32),
}
