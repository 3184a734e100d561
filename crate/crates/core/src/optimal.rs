//! Exhaustive minimum-total-guesses search.
//!
//! Exponential in the candidate count; meant for small lists. Ties on the
//! total number of guesses go to the shallower tree, then to the
//! alphabetically earliest guess.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::feedback::{pattern_count, Pattern};
use crate::game::Game;
use crate::strategy::{EvalReport, Mode, NodeState, StrategyNode, StrategyTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: Mode,
    /// Every solution must be found within this many guesses.
    pub max_depth: u32,
    /// Guesses tried per node, most bins first; 0 tries them all.
    pub cap: usize,
    pub memo: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: Mode::Regular,
            max_depth: 8,
            cap: 0,
            memo: true,
        }
    }
}

impl SearchConfig {
    /// Only the uncapped search is guaranteed optimal.
    pub fn is_exact(&self) -> bool {
        self.cap == 0
    }
}

#[derive(Clone, Debug)]
pub struct OptimalResult {
    pub tree: StrategyTree,
    pub report: EvalReport,
    pub exact: bool,
}

/// Admissible lower bound on the total guesses needed for `size`
/// candidates when one guess can split them into at most `max_bins`
/// non-green bins: at best one candidate is found on the first guess, one
/// per bin on the second, and the rest on the third.
pub fn lower_bound(size: usize, max_bins: usize) -> u64 {
    if size == 0 {
        return 0;
    }
    let rest = (size - 1) as u64;
    let second = rest.min(max_bins as u64);
    1 + 2 * second + 3 * (rest - second)
}

/// [`lower_bound`] using the best split any guess achieves on `candidates`.
pub fn lower_bound_for(game: &Game, candidates: &[u32]) -> u64 {
    let all_green = game.all_green();
    let max_bins = (0..game.guesses().len() as u32)
        .map(|g| {
            game.partition(g, candidates)
                .member_groups()
                .filter(|(code, _)| *code != all_green)
                .count()
        })
        .max()
        .unwrap_or(0);
    lower_bound(candidates.len(), max_bins)
}

#[derive(Debug)]
struct Node {
    guess: u32,
    children: Vec<(u16, Arc<Node>)>,
}

#[derive(Clone, Debug)]
struct Solution {
    total: u64,
    depth: u32,
    node: Arc<Node>,
}

type MemoKey = (Vec<u32>, Vec<u32>, u32);

struct Search<'g> {
    game: &'g Game,
    config: SearchConfig,
    all_guesses: Vec<u32>,
    memo: HashMap<MemoKey, Option<Solution>>,
    child_bins_cap: usize,
}

impl Search<'_> {
    fn legal_key(&self, state: &NodeState) -> Vec<u32> {
        match self.config.mode {
            Mode::Regular => Vec::new(),
            Mode::Hard => state.hard.clone(),
            Mode::Superhard => state.consistent.clone(),
        }
    }

    fn better(&self, a: &Solution, b: &Solution) -> bool {
        let ord = a
            .total
            .cmp(&b.total)
            .then(a.depth.cmp(&b.depth))
            .then_with(|| {
                self.game
                    .guess_word(a.node.guess)
                    .cmp(self.game.guess_word(b.node.guess))
            });
        ord == Ordering::Less
    }

    fn solve(&mut self, state: &NodeState, depth_left: u32) -> Option<Solution> {
        if depth_left == 0 {
            return None;
        }
        if !self.config.memo {
            return self.solve_uncached(state, depth_left);
        }
        let key = (state.candidates.clone(), self.legal_key(state), depth_left);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let out = self.solve_uncached(state, depth_left);
        self.memo.insert(key, out.clone());
        out
    }

    fn ordered_guesses(&self, state: &NodeState) -> Vec<u32> {
        let legal = state.legal(self.config.mode, &self.all_guesses).to_vec();
        if self.config.cap == 0 || legal.len() <= self.config.cap {
            return legal;
        }
        let all_green = self.game.all_green();
        // (bins, could be the answer, guess); useless guesses are dropped
        let mut ranked: Vec<(usize, bool, u32)> = legal
            .into_iter()
            .filter_map(|g| {
                let dist = self.game.partition(g, &state.candidates);
                let in_set = dist.member_groups().any(|(code, _)| code == all_green);
                (dist.num_bins() > 1 || in_set).then_some((dist.num_bins(), in_set, g))
            })
            .collect();
        ranked.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
        ranked.truncate(self.config.cap);
        ranked.into_iter().map(|(_, _, g)| g).collect()
    }

    fn solve_uncached(&mut self, state: &NodeState, depth_left: u32) -> Option<Solution> {
        let n = state.candidates.len();
        let all_green = self.game.all_green();
        let mut best: Option<Solution> = None;

        for guess in self.ordered_guesses(state) {
            let dist = self.game.partition(guess, &state.candidates);
            let in_set = dist.member_groups().any(|(code, _)| code == all_green);
            if dist.num_bins() == 1 && !in_set {
                continue;
            }
            let bins: Vec<(u16, usize)> = dist
                .member_groups()
                .filter(|(code, _)| *code != all_green)
                .map(|(code, members)| (code, members.len()))
                .collect();
            if !bins.is_empty() && depth_left == 1 {
                continue;
            }
            let mut bound: u64 = n as u64
                + bins
                    .iter()
                    .map(|&(_, m)| lower_bound(m, self.child_bins_cap))
                    .sum::<u64>();
            if best.as_ref().is_some_and(|b| bound > b.total) {
                continue;
            }

            let mut total = n as u64;
            let mut depth = 1;
            let mut children = Vec::with_capacity(bins.len());
            let mut feasible = true;
            for &(code, m) in &bins {
                let child = state.child(self.game, self.config.mode, guess, code);
                let Some(sol) = self.solve(&child, depth_left - 1) else {
                    feasible = false;
                    break;
                };
                bound = bound - lower_bound(m, self.child_bins_cap) + sol.total;
                total += sol.total;
                depth = depth.max(sol.depth + 1);
                children.push((code, sol.node));
                if best.as_ref().is_some_and(|b| bound > b.total) {
                    feasible = false;
                    break;
                }
            }
            if !feasible {
                continue;
            }
            let candidate = Solution {
                total,
                depth,
                node: Arc::new(Node { guess, children }),
            };
            if best.as_ref().is_none_or(|b| self.better(&candidate, b)) {
                best = Some(candidate);
            }
        }
        best
    }
}

fn to_strategy(game: &Game, node: &Node) -> StrategyNode {
    let children: BTreeMap<Pattern, StrategyNode> = node
        .children
        .iter()
        .map(|(code, child)| {
            (
                Pattern::from_code(*code, game.word_len()),
                to_strategy(game, child),
            )
        })
        .collect();
    StrategyNode {
        guess: game.guess_word(node.guess).clone(),
        children,
    }
}

/// Finds a strategy minimizing the total guesses over all solutions.
pub fn optimal_tree(game: &Game, config: &SearchConfig) -> Result<OptimalResult> {
    let mut search = Search {
        game,
        config: *config,
        all_guesses: game.all_guesses(),
        memo: HashMap::new(),
        child_bins_cap: pattern_count(game.word_len()) as usize - 1,
    };
    let root = NodeState::root(game, config.mode);
    let sol = search
        .solve(&root, config.max_depth)
        .ok_or(Error::Infeasible(config.max_depth))?;
    let tree = StrategyTree::new(to_strategy(game, &sol.node));
    let report = crate::strategy::evaluate(&tree, game.solutions())?;
    debug_assert_eq!(report.total_guesses, sol.total);
    Ok(OptimalResult {
        tree,
        report,
        exact: config.is_exact(),
    })
}
