use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};
use wordbins::assist::{Assistant, HistoryEntry, SuggestRequest, SuggestResponse};
use wordbins::history::{daily_strategy, remaining_solutions, UsedLedger};
use wordbins::optimal::{optimal_tree, SearchConfig};
use wordbins::strategy::{render_csv, render_histogram, render_table, ReportRow};
use wordbins::{
    build_tree, evaluate, load_tree, serialize_tree, EvalReport, Game, HeuristicId, HeuristicSpec,
    Lexicon, Mode, StrategyTree,
};

#[derive(Debug, Parser)]
#[command(
    name = "wordbins",
    version,
    about = "Strategy trees and live suggestions for Wordle-style games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a greedy strategy tree and report how it performs.
    Build(BuildArgs),
    /// Evaluate a saved strategy tree against a solution list.
    Eval(EvalArgs),
    /// Rank next guesses for a game in progress.
    Suggest(SuggestArgs),
    /// Compare every heuristic on one solution list.
    Sweep(SweepArgs),
    /// Exhaustive minimum-average search (small lists only).
    Optimal(OptimalArgs),
    /// Build the strategy for one day, skipping previously used answers.
    Daily(DailyArgs),
    /// Run the HTTP service used by the assistant UI.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct Lists {
    /// Solution list, one word per line.
    #[arg(long)]
    pub solutions: PathBuf,
    /// Allowed guesses; defaults to the solution list.
    #[arg(long)]
    pub guesses: Option<PathBuf>,
}

impl Lists {
    fn load(&self) -> anyhow::Result<(Lexicon, Lexicon)> {
        let solutions = load_lexicon(&self.solutions)?;
        let guesses = match &self.guesses {
            Some(path) => load_lexicon(path)?,
            None => solutions.clone(),
        };
        Ok((solutions, guesses))
    }

    fn game(&self) -> anyhow::Result<Game> {
        let (solutions, guesses) = self.load()?;
        Ok(Game::new(solutions, guesses)?)
    }
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long, default_value = "negnumbins")]
    pub heuristic: HeuristicId,
    /// Secondary heuristic for ties, or `none`.
    #[arg(long, value_parser = parse_tiebreak)]
    pub tiebreak: Option<Tiebreak>,
    #[arg(long, default_value = "regular")]
    pub mode: Mode,
}

#[derive(Clone, Copy, Debug)]
pub struct Tiebreak(pub Option<HeuristicId>);

fn parse_tiebreak(s: &str) -> Result<Tiebreak, String> {
    if s.eq_ignore_ascii_case("none") {
        return Ok(Tiebreak(None));
    }
    s.parse()
        .map(|h| Tiebreak(Some(h)))
        .map_err(|e: wordbins::Error| e.to_string())
}

impl SpecArgs {
    fn spec(&self, default_tiebreak: Option<HeuristicId>) -> HeuristicSpec {
        HeuristicSpec {
            primary: self.heuristic,
            tiebreak: self.tiebreak.map_or(default_tiebreak, |t| t.0),
            mode: self.mode,
        }
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub lists: Lists,
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Where to write the tree document.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the one-row CSV report.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub tree: PathBuf,
    #[arg(long)]
    pub solutions: PathBuf,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Method name for the report row.
    #[arg(long, default_value = "tree")]
    pub method: String,
}

#[derive(Debug, Args)]
pub struct SuggestArgs {
    #[command(flatten)]
    pub lists: Lists,
    /// Feedback so far, e.g. `raise=BYBBG,close=GBBYB`.
    #[arg(long, default_value = "")]
    pub history: String,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = 10)]
    pub top: usize,
    /// Print the response as JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub lists: Lists,
    #[arg(long, default_value = "regular")]
    pub mode: Mode,
    /// Use `negnumbins` as primary and every other heuristic as tie-break.
    #[arg(long)]
    pub tiebreaks: bool,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OptimalArgs {
    #[command(flatten)]
    pub lists: Lists,
    #[arg(long, default_value = "regular")]
    pub mode: Mode,
    /// Guesses tried per node, most bins first; 0 searches all of them.
    #[arg(long, default_value_t = 0)]
    pub cap: usize,
    #[arg(long, default_value_t = 8)]
    pub max_depth: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DailyArgs {
    #[command(flatten)]
    pub lists: Lists,
    #[arg(long)]
    pub ledger: PathBuf,
    /// Day to build for (YYYY-MM-DD); answers dated on or before it are removed.
    #[arg(long)]
    pub date: NaiveDate,
    /// Also remove used answers from the guess list.
    #[arg(long)]
    pub exclude_guesses: bool,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[command(flatten)]
    pub lists: Lists,
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: IpAddr,
    /// Used-answer ledger; its words are dropped from the solutions.
    #[arg(long)]
    pub ledger: Option<PathBuf>,
    /// Cut-off date for the ledger; defaults to today.
    #[arg(long, requires = "ledger")]
    pub date: Option<NaiveDate>,
}

fn load_lexicon(path: &Path) -> anyhow::Result<Lexicon> {
    Lexicon::load(path).with_context(|| format!("loading word list {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn row(spec: &HeuristicSpec, tree: &StrategyTree, guesses: usize, report: EvalReport) -> ReportRow {
    ReportRow {
        method: spec.label(),
        start: tree.root.guess.to_string(),
        guesses,
        report,
    }
}

/// Splits `raise=BYBBG,close=GBBYB` into history entries.
pub fn parse_history(text: &str) -> anyhow::Result<Vec<HistoryEntry>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (guess, pattern) = item
                .split_once('=')
                .with_context(|| format!("history item {item:?} is not word=PATTERN"))?;
            Ok(HistoryEntry {
                guess: guess.trim().to_ascii_lowercase(),
                pattern: pattern.trim().to_ascii_uppercase(),
            })
        })
        .collect()
}

pub fn render_suggestions(resp: &SuggestResponse) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "remaining: {}", resp.remaining);
    let _ = writeln!(
        out,
        "{:>4}  {:<10} {:>12} {:>12} {:>6} {:>6} {:>9} {:>8}  consistent",
        "rank", "word", "primary", "tiebreak", "bins", "max", "exp.size", "entropy"
    );
    for (i, s) in resp.suggestions.iter().enumerate() {
        let tiebreak = s
            .tiebreak
            .as_ref()
            .map_or("-".to_string(), |t| t.to_string());
        let _ = writeln!(
            out,
            "{:>4}  {:<10} {:>12} {:>12} {:>6} {:>6} {:>9.4} {:>8.4}  {}",
            i + 1,
            s.word,
            s.primary.to_string(),
            tiebreak,
            s.bins,
            s.max_bin_size,
            s.expected_bin_size,
            s.entropy,
            if s.superhard_consistent { "yes" } else { "no" }
        );
    }
    if !resp.candidates_sample.is_empty() {
        let _ = writeln!(out, "candidates: {}", resp.candidates_sample.join(" "));
    }
    out
}

pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    match cli.command {
        Command::Build(args) => cmd_build(args, out),
        Command::Eval(args) => cmd_eval(args, out),
        Command::Suggest(args) => cmd_suggest(args, out),
        Command::Sweep(args) => cmd_sweep(args, out),
        Command::Optimal(args) => cmd_optimal(args, out),
        Command::Daily(args) => cmd_daily(args, out),
        Command::Serve(args) => cmd_serve(args),
    }
}

fn cmd_build(args: BuildArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let game = args.lists.game()?;
    let spec = args.spec.spec(None);
    let tree = build_tree(&game, &spec)?;
    let report = evaluate(&tree, game.solutions())?;
    if let Some(path) = &args.out {
        write_file(path, &serialize_tree(&tree))?;
    }
    let rows = [row(&spec, &tree, game.guesses().len(), report)];
    if let Some(path) = &args.csv {
        write_file(path, &render_csv(&rows))?;
    }
    write!(out, "{}", render_table(&rows))?;
    write!(out, "{}", render_histogram(&rows[0].report))?;
    Ok(())
}

fn cmd_eval(args: EvalArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let text = fs::read_to_string(&args.tree)
        .with_context(|| format!("reading {}", args.tree.display()))?;
    let tree = load_tree(&text)?;
    let solutions = load_lexicon(&args.solutions)?;
    let report = evaluate(&tree, &solutions)?;
    let rows = [ReportRow {
        method: args.method,
        start: tree.root.guess.to_string(),
        guesses: 0,
        report,
    }];
    if let Some(path) = &args.csv {
        write_file(path, &render_csv(&rows))?;
    }
    write!(out, "{}", render_table(&rows))?;
    write!(out, "{}", render_histogram(&rows[0].report))?;
    Ok(())
}

fn cmd_suggest(args: SuggestArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let game = args.lists.game()?;
    let spec = args.spec.spec(Some(HeuristicId::ExpBinSize));
    let req = SuggestRequest {
        history: parse_history(&args.history)?,
        heuristic: spec.primary,
        tiebreak: spec.tiebreak,
        mode: spec.mode,
        top_k: args.top,
    };
    let resp = Assistant::new(game).suggest(&req)?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&resp)?)?;
    } else {
        write!(out, "{}", render_suggestions(&resp))?;
    }
    Ok(())
}

/// The heuristic combinations compared by `sweep`.
pub fn sweep_specs(mode: Mode, tiebreaks: bool) -> Vec<HeuristicSpec> {
    if tiebreaks {
        HeuristicId::ALL
            .into_iter()
            .filter(|&h| h != HeuristicId::NegNumBins)
            .map(|h| {
                HeuristicSpec::new(HeuristicId::NegNumBins)
                    .with_tiebreak(h)
                    .with_mode(mode)
            })
            .collect()
    } else {
        HeuristicId::ALL
            .into_iter()
            .map(|h| HeuristicSpec::new(h).with_mode(mode))
            .collect()
    }
}

fn cmd_sweep(args: SweepArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let game = args.lists.game()?;
    let mut rows = Vec::new();
    for spec in sweep_specs(args.mode, args.tiebreaks) {
        let tree = build_tree(&game, &spec)?;
        let report = evaluate(&tree, game.solutions())?;
        rows.push(row(&spec, &tree, game.guesses().len(), report));
    }
    rows.sort_by_key(|r| r.report.total_guesses);
    if let Some(path) = &args.csv {
        write_file(path, &render_csv(&rows))?;
    }
    write!(out, "{}", render_table(&rows))?;
    Ok(())
}

fn cmd_optimal(args: OptimalArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let game = args.lists.game()?;
    let config = SearchConfig {
        mode: args.mode,
        max_depth: args.max_depth,
        cap: args.cap,
        memo: true,
    };
    let result = optimal_tree(&game, &config)?;
    if let Some(path) = &args.out {
        write_file(path, &serialize_tree(&result.tree))?;
    }
    let rows = [ReportRow {
        method: format!("optimal-{}", args.mode),
        start: result.tree.root.guess.to_string(),
        guesses: game.guesses().len(),
        report: result.report,
    }];
    write!(out, "{}", render_table(&rows))?;
    write!(out, "{}", render_histogram(&rows[0].report))?;
    writeln!(out, "exact: {}", if result.exact { "yes" } else { "no" })?;
    Ok(())
}

fn cmd_daily(args: DailyArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let (full, guesses) = args.lists.load()?;
    let ledger = UsedLedger::load(&args.ledger)?;
    let spec = args.spec.spec(Some(HeuristicId::ExpBinSize));
    let daily = daily_strategy(
        &full,
        &guesses,
        &ledger,
        args.date,
        &spec,
        args.exclude_guesses,
    )?;
    fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating {}", args.out_dir.display()))?;
    let stem = daily.date.format("%Y-%m-%d").to_string();
    let rows = [row(&spec, &daily.tree, daily.guesses.len(), daily.report)];
    write_file(
        &args.out_dir.join(format!("{stem}.tree.json")),
        &serialize_tree(&daily.tree),
    )?;
    write_file(
        &args.out_dir.join(format!("{stem}.report.csv")),
        &render_csv(&rows),
    )?;
    write_file(
        &args.out_dir.join(format!("{stem}.report.txt")),
        &render_table(&rows),
    )?;
    writeln!(out, "{stem}: {} solutions remain", daily.solutions.len())?;
    write!(out, "{}", render_table(&rows))?;
    Ok(())
}

fn cmd_serve(args: ServeArgs) -> anyhow::Result<()> {
    let (mut solutions, guesses) = args.lists.load()?;
    if let Some(path) = &args.ledger {
        let ledger = UsedLedger::load(path)?;
        let as_of = args
            .date
            .unwrap_or_else(|| chrono::Local::now().date_naive());
        solutions = remaining_solutions(&solutions, &ledger, as_of)?;
        if solutions.is_empty() {
            bail!("every solution is used by {as_of}");
        }
    }
    let assistant = Assistant::new(Game::new(solutions, guesses)?);
    let addr = SocketAddr::new(args.host, args.port);
    tokio::runtime::Runtime::new()?.block_on(crate::server::serve(assistant, addr))
}
