//! Past answers and daily regeneration.
//!
//! The ledger is a text file of `YYYY-MM-DD word` lines with strictly
//! increasing dates. Answers are assumed never to repeat, so every ledger
//! word dated on or before a given day is removed from the solution list
//! (and optionally from the guess list) before a strategy is built.

use std::collections::HashSet;
use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::heuristics::HeuristicSpec;
use crate::lexicon::{Lexicon, Word};
use crate::strategy::{build_tree, evaluate, EvalReport, StrategyTree};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UsedLedger {
    entries: Vec<(NaiveDate, Word)>,
}

impl UsedLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut ledger = UsedLedger::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let bad = |message: String| Error::BadLine {
                line: line_no,
                message,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (date, word) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad("expected `YYYY-MM-DD word`".into()))?;
            let date = NaiveDate::parse_from_str(date, "%Y-%m-%d")
                .map_err(|e| bad(format!("bad date {date:?}: {e}")))?;
            let word = Word::new(word.trim()).map_err(|e| bad(e.to_string()))?;
            ledger.push(date, word).map_err(|e| bad(e.to_string()))?;
        }
        Ok(ledger)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        UsedLedger::parse(&text)
    }

    /// Appends an entry; dates must increase and words may not repeat.
    pub fn push(&mut self, date: NaiveDate, word: Word) -> Result<()> {
        if let Some((last, _)) = self.entries.last() {
            if date <= *last {
                return Err(Error::InvalidWord {
                    word: word.to_string(),
                    reason: format!("date {date} is not after {last}"),
                });
            }
        }
        if self.entries.iter().any(|(_, w)| *w == word) {
            return Err(Error::InvalidWord {
                word: word.to_string(),
                reason: "already used".into(),
            });
        }
        self.entries.push((date, word));
        Ok(())
    }

    pub fn entries(&self) -> &[(NaiveDate, Word)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last_date(&self) -> Option<NaiveDate> {
        self.entries.last().map(|(d, _)| *d)
    }

    /// Words used on or before `as_of`.
    pub fn used_through(&self, as_of: NaiveDate) -> HashSet<Word> {
        self.entries
            .iter()
            .take_while(|(d, _)| *d <= as_of)
            .map(|(_, w)| w.clone())
            .collect()
    }

    pub fn to_file_string(&self) -> String {
        self.entries
            .iter()
            .map(|(d, w)| format!("{} {w}\n", d.format("%Y-%m-%d")))
            .collect()
    }
}

/// `full` without the words used on or before `as_of`.
///
/// Every ledger word must belong to `full`; an unknown word usually means
/// the ledger recorded an alternate answer rather than the intended one.
pub fn remaining_solutions(
    full: &Lexicon,
    ledger: &UsedLedger,
    as_of: NaiveDate,
) -> Result<Lexicon> {
    if let Some((_, w)) = ledger.entries().iter().find(|(_, w)| !full.contains(w)) {
        return Err(Error::LedgerWordUnknown(w.to_string()));
    }
    Ok(full.subtract(&ledger.used_through(as_of)))
}

#[derive(Clone, Debug)]
pub struct DailyStrategy {
    pub date: NaiveDate,
    pub solutions: Lexicon,
    pub guesses: Lexicon,
    pub tree: StrategyTree,
    pub report: EvalReport,
}

/// Builds the strategy for `as_of` over the solutions not yet used.
///
/// `guesses` is the guess list before exclusions (usually `full` itself);
/// with `exclude_guesses` the used words are removed from it as well.
pub fn daily_strategy(
    full: &Lexicon,
    guesses: &Lexicon,
    ledger: &UsedLedger,
    as_of: NaiveDate,
    spec: &HeuristicSpec,
    exclude_guesses: bool,
) -> Result<DailyStrategy> {
    let solutions = remaining_solutions(full, ledger, as_of)?;
    if solutions.is_empty() {
        return Err(Error::Empty("remaining solution list"));
    }
    let guesses = if exclude_guesses {
        guesses.subtract(&ledger.used_through(as_of))
    } else {
        guesses.clone()
    };
    let game = Game::new(solutions.clone(), guesses.clone())?;
    let tree = build_tree(&game, spec)?;
    let report = evaluate(&tree, &solutions)?;
    Ok(DailyStrategy {
        date: as_of,
        solutions,
        guesses,
        tree,
        report,
    })
}
