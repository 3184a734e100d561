use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::feedback::score;
use crate::lexicon::Lexicon;
use crate::strategy::tree::StrategyTree;

/// How a strategy performs over a solution list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalReport {
    pub solutions: usize,
    pub total_guesses: u64,
    pub max_guesses: u32,
    /// guesses needed -> number of solutions
    pub histogram: BTreeMap<u32, usize>,
}

impl EvalReport {
    pub fn from_counts(counts: impl IntoIterator<Item = u32>) -> Self {
        let mut histogram = BTreeMap::new();
        let mut total = 0u64;
        let mut n = 0;
        for k in counts {
            *histogram.entry(k).or_insert(0) += 1;
            total += k as u64;
            n += 1;
        }
        EvalReport {
            solutions: n,
            total_guesses: total,
            max_guesses: histogram.keys().next_back().copied().unwrap_or(0),
            histogram,
        }
    }

    pub fn average(&self) -> f64 {
        if self.solutions == 0 {
            return 0.0;
        }
        self.total_guesses as f64 / self.solutions as f64
    }

    /// Percentage of solutions found within `limit` guesses.
    pub fn percent_within(&self, limit: u32) -> f64 {
        if self.solutions == 0 {
            return 100.0;
        }
        let ok: usize = self.histogram.range(..=limit).map(|(_, n)| n).sum();
        100.0 * ok as f64 / self.solutions as f64
    }

    pub fn pct6(&self) -> f64 {
        self.percent_within(6)
    }
}

/// Plays `tree` against every solution and tallies the guesses used,
/// counting the final correct guess.
pub fn evaluate(tree: &StrategyTree, solutions: &Lexicon) -> Result<EvalReport> {
    let mut counts = Vec::with_capacity(solutions.len());
    for secret in solutions {
        let mut node = &tree.root;
        let mut guesses = 1u32;
        loop {
            if node.guess == *secret {
                break;
            }
            let pattern = score(&node.guess, secret)?;
            node = node
                .children
                .get(&pattern)
                .ok_or_else(|| Error::Unsolved(secret.to_string()))?;
            guesses += 1;
        }
        counts.push(guesses);
    }
    Ok(EvalReport::from_counts(counts))
}

/// One line of a comparison table.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub method: String,
    pub start: String,
    pub guesses: usize,
    pub report: EvalReport,
}

pub const CSV_HEADER: &str = "method,start,avg,max,pct6";

impl ReportRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{:.4},{},{}",
            self.method,
            self.start,
            self.report.average(),
            self.report.max_guesses,
            format_pct(self.report.pct6())
        )
    }
}

fn format_pct(pct: f64) -> String {
    if pct >= 100.0 {
        "100".to_string()
    } else {
        format!("{pct:.2}")
    }
}

pub fn render_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

/// Aligned text table in the style of the heuristic comparison tables.
pub fn render_table(rows: &[ReportRow]) -> String {
    let header = [
        "method (& start word)",
        "guesses",
        "solutions",
        "average",
        "max",
        "% <= 6",
    ];
    let body: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                format!("{} ({})", r.method, r.start),
                r.guesses.to_string(),
                r.report.solutions.to_string(),
                format!("{:.4}", r.report.average()),
                r.report.max_guesses.to_string(),
                format_pct(r.report.pct6()),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for line in &body {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: &[&str]| {
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i == 0 {
                let _ = write!(out, "{cell:<w$}");
            } else {
                let _ = write!(out, "  {cell:>w$}");
            }
        }
        out.push('\n');
    };
    emit(&header);
    for line in &body {
        let cells: Vec<&str> = line.iter().map(String::as_str).collect();
        emit(&cells);
    }
    out
}

/// Histogram lines, e.g. `3: 1201`.
pub fn render_histogram(report: &EvalReport) -> String {
    let mut out = String::new();
    for (k, n) in &report.histogram {
        let _ = writeln!(out, "{k}: {n}");
    }
    out
}
