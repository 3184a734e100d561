#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;
use wordbins::{Constraints, Lexicon, Mode, Pattern, StrategyNode, StrategyTree, Word};

/// Reference scorer written without sharing any code with the library:
/// greens strike out their secret letter, then each remaining guess letter
/// strikes out the leftmost unstruck copy in the secret.
pub fn oracle_score(guess: &str, secret: &str) -> String {
    let g: Vec<char> = guess.chars().collect();
    let mut s: Vec<Option<char>> = secret.chars().map(Some).collect();
    assert_eq!(g.len(), s.len());
    let mut out = vec!['B'; g.len()];
    for i in 0..g.len() {
        if s[i] == Some(g[i]) {
            out[i] = 'G';
            s[i] = None;
        }
    }
    for i in 0..g.len() {
        if out[i] == 'G' {
            continue;
        }
        if let Some(j) = (0..s.len()).find(|&j| s[j] == Some(g[i])) {
            s[j] = None;
            out[i] = 'Y';
        }
    }
    out.into_iter().collect()
}

/// Base-3 code of a `GYB` string, most significant position first.
pub fn oracle_code(text: &str) -> u32 {
    text.chars().fold(0, |acc, c| {
        acc * 3
            + match c {
                'B' => 0,
                'Y' => 1,
                'G' => 2,
                other => panic!("bad symbol {other}"),
            }
    })
}

pub fn random_word(rng: &mut impl Rng, len: usize, alphabet: &[u8]) -> String {
    (0..len)
        .map(|_| *alphabet.choose(rng).unwrap() as char)
        .collect()
}

/// `n` distinct random words.
pub fn random_words(rng: &mut impl Rng, n: usize, len: usize, alphabet: &[u8]) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(n);
    while out.len() < n {
        let w = random_word(rng, len, alphabet);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

pub fn lexicon(label: &str, words: &[String]) -> Lexicon {
    Lexicon::from_strs(label, words).unwrap()
}

pub fn words(list: &[String]) -> Vec<Word> {
    list.iter().map(|w| Word::new(w).unwrap()).collect()
}

/// Groups `candidates` by their response to `guess`, keyed by pattern code.
pub fn oracle_bins<'a>(guess: &str, candidates: &[&'a str]) -> BTreeMap<u32, Vec<&'a str>> {
    let mut bins: BTreeMap<u32, Vec<&'a str>> = BTreeMap::new();
    for &c in candidates {
        bins.entry(oracle_code(&oracle_score(guess, c)))
            .or_default()
            .push(c);
    }
    bins
}

/// Guesses needed for every solution when playing `tree`, by replaying
/// the reference scorer along the path.
pub fn replay_counts(tree: &StrategyTree, solutions: &[String]) -> Vec<u32> {
    solutions
        .iter()
        .map(|s| {
            let mut node = &tree.root;
            let mut k = 1;
            loop {
                let response = oracle_score(node.guess.as_str(), s);
                if response.chars().all(|c| c == 'G') {
                    break k;
                }
                let key = Pattern::parse(&response, s.len()).unwrap();
                node = node
                    .children
                    .get(&key)
                    .unwrap_or_else(|| panic!("{s}: no branch for {response}"));
                k += 1;
                assert!(k <= 64, "{s}: tree does not terminate");
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct BruteSolution {
    pub total: u64,
    pub depth: u32,
    pub guess: String,
    pub children: BTreeMap<u32, BruteSolution>,
}

impl BruteSolution {
    pub fn to_node(&self, len: usize) -> StrategyNode {
        StrategyNode {
            guess: Word::new(&self.guess).unwrap(),
            children: self
                .children
                .iter()
                .map(|(&code, child)| (Pattern::decode(code, len).unwrap(), child.to_node(len)))
                .collect(),
        }
    }
}

/// Exhaustive strategy enumeration: every legal guess at every node,
/// keeping the tree with the fewest total guesses, then the smallest
/// depth, then the alphabetically earliest guess. Subproblems are cached
/// by (candidates, legal guesses, depth left), which is exact because a
/// subtree depends on nothing else.
pub struct BruteForce<'a> {
    pub guesses: &'a [String],
    pub mode: Mode,
    cache: HashMap<(Vec<String>, Vec<String>, u32), Option<BruteSolution>>,
}

impl<'a> BruteForce<'a> {
    pub fn new(guesses: &'a [String], mode: Mode) -> Self {
        BruteForce {
            guesses,
            mode,
            cache: HashMap::new(),
        }
    }

    pub fn solve(&mut self, candidates: &[String], max_depth: u32) -> Option<BruteSolution> {
        self.go(candidates.to_vec(), Constraints::new(), max_depth)
    }

    fn go(
        &mut self,
        candidates: Vec<String>,
        history: Constraints,
        depth_left: u32,
    ) -> Option<BruteSolution> {
        if depth_left == 0 {
            return None;
        }
        let legal: Vec<String> = self
            .guesses
            .iter()
            .filter(|g| history.allows(self.mode, &Word::new(g).unwrap()))
            .cloned()
            .collect();
        let key = (candidates.clone(), legal.clone(), depth_left);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let len = candidates[0].len();
        let green = 3u32.pow(len as u32) - 1;
        let mut best: Option<BruteSolution> = None;
        for guess in &legal {
            let refs: Vec<&str> = candidates.iter().map(String::as_str).collect();
            let bins = oracle_bins(guess, &refs);
            if bins.len() == 1 && !bins.contains_key(&green) {
                continue;
            }
            let mut total = candidates.len() as u64;
            let mut depth = 1;
            let mut children = BTreeMap::new();
            let mut ok = true;
            for (&code, members) in &bins {
                if code == green {
                    continue;
                }
                let mut next = history.clone();
                next.push(
                    Word::new(guess).unwrap(),
                    Pattern::decode(code, len).unwrap(),
                )
                .unwrap();
                let members: Vec<String> = members.iter().map(|m| m.to_string()).collect();
                match self.go(members, next, depth_left - 1) {
                    Some(sol) => {
                        total += sol.total;
                        depth = depth.max(sol.depth + 1);
                        children.insert(code, sol);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => (total, depth, guess.as_str()) < (b.total, b.depth, b.guess.as_str()),
            };
            if better {
                best = Some(BruteSolution {
                    total,
                    depth,
                    guess: guess.clone(),
                    children,
                });
            }
        }
        self.cache.insert(key, best.clone());
        best
    }
}

/// Distinct words drawn with English-like letter frequencies.
pub fn synthetic_list(seed: u64, n: usize, len: usize) -> Vec<String> {
    use rand::distributions::{Distribution, WeightedIndex};
    use rand::SeedableRng;
    let letters = b"eaoirtlsnucydhpmgbfkwvzxqj";
    let weights = [
        1233, 979, 754, 671, 673, 729, 716, 668, 575, 467, 477, 425, 393, 389, 367, 316, 311, 281,
        230, 210, 195, 153, 40, 37, 29, 27,
    ];
    let dist = WeightedIndex::new(weights).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let w: String = (0..len)
            .map(|_| letters[dist.sample(&mut rng)] as char)
            .collect();
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    out.sort();
    out
}
