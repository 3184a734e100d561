//! Partitioning candidate solutions by the response a guess would receive.

use crate::error::{Error, Result};
use crate::feedback::{pattern_count, score_code, Pattern};
use crate::lexicon::Word;

#[derive(Clone, Copy, Debug)]
struct Bin {
    code: u16,
    start: u32,
    len: u32,
}

/// Candidates grouped by response pattern for one guess.
///
/// Bins are kept in ascending pattern code; members keep candidate order.
#[derive(Clone, Debug)]
pub struct BinDistribution<'a> {
    guess: &'a Word,
    universe: &'a [Word],
    members: Vec<u32>,
    bins: Vec<Bin>,
    word_len: usize,
}

/// Borrowed view of one bin.
#[derive(Clone, Copy, Debug)]
pub struct BinRef<'d, 'a> {
    pub pattern: Pattern,
    members: &'d [u32],
    universe: &'a [Word],
}

impl<'a> BinRef<'_, 'a> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &'a Word> + '_ {
        let universe = self.universe;
        self.members.iter().map(move |&i| &universe[i as usize])
    }
}

/// Partitions `candidates` by the pattern each would produce for `guess`.
pub fn partition<'a>(guess: &'a Word, candidates: &'a [Word]) -> Result<BinDistribution<'a>> {
    BinDistribution::partition(guess, candidates)
}

/// True when every bin holds exactly one candidate.
pub fn all_singletons(dist: &BinDistribution<'_>) -> bool {
    dist.all_singletons()
}

impl<'a> BinDistribution<'a> {
    pub fn partition(guess: &'a Word, candidates: &'a [Word]) -> Result<Self> {
        if candidates.is_empty() {
            return Err(Error::Empty("candidate set"));
        }
        if let Some(bad) = candidates.iter().find(|c| c.len() != guess.len()) {
            return Err(Error::LengthMismatch {
                expected: guess.len(),
                actual: bad.len(),
            });
        }
        let indices: Vec<u32> = (0..candidates.len() as u32).collect();
        Ok(Self::from_codes(
            guess,
            candidates,
            &indices,
            guess.len(),
            |i| score_code(guess.as_bytes(), candidates[i as usize].as_bytes()),
        ))
    }

    /// Builds bins for `candidates` (indices into `universe`) using a
    /// precomputed code lookup. Candidate order is preserved inside bins.
    pub(crate) fn from_codes(
        guess: &'a Word,
        universe: &'a [Word],
        candidates: &[u32],
        word_len: usize,
        code_of: impl Fn(u32) -> u16,
    ) -> Self {
        let codes: Vec<u16> = candidates.iter().map(|&c| code_of(c)).collect();
        let mut counts = vec![0u32; pattern_count(word_len) as usize];
        for &code in &codes {
            counts[code as usize] += 1;
        }
        let mut bins = Vec::new();
        let mut offsets = counts;
        let mut start = 0u32;
        for (code, slot) in offsets.iter_mut().enumerate() {
            let len = *slot;
            if len > 0 {
                bins.push(Bin {
                    code: code as u16,
                    start,
                    len,
                });
            }
            *slot = start;
            start += len;
        }
        let mut members = vec![0u32; candidates.len()];
        for (&cand, &code) in candidates.iter().zip(&codes) {
            let slot = &mut offsets[code as usize];
            members[*slot as usize] = cand;
            *slot += 1;
        }
        BinDistribution {
            guess,
            universe,
            members,
            bins,
            word_len,
        }
    }

    pub fn guess(&self) -> &'a Word {
        self.guess
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// Total number of candidates, N.
    pub fn total(&self) -> usize {
        self.members.len()
    }

    pub fn num_bins(&self) -> usize {
        self.bins.len()
    }

    /// Bin sizes in ascending pattern-code order.
    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.bins.iter().map(|b| b.len as usize)
    }

    pub fn bins(&self) -> impl Iterator<Item = BinRef<'_, 'a>> + '_ {
        self.bins.iter().map(move |b| self.bin_ref(b))
    }

    pub fn bin(&self, pattern: Pattern) -> Option<BinRef<'_, 'a>> {
        self.bins
            .binary_search_by_key(&(pattern.code() as u16), |b| b.code)
            .ok()
            .map(|i| self.bin_ref(&self.bins[i]))
    }

    fn bin_ref(&self, b: &Bin) -> BinRef<'_, 'a> {
        BinRef {
            pattern: Pattern::from_code(b.code, self.word_len),
            members: &self.members[b.start as usize..(b.start + b.len) as usize],
            universe: self.universe,
        }
    }

    /// Per-bin member indices into the universe slice, ascending code order.
    pub(crate) fn member_groups(&self) -> impl Iterator<Item = (u16, &[u32])> + '_ {
        self.bins.iter().map(move |b| {
            (
                b.code,
                &self.members[b.start as usize..(b.start + b.len) as usize],
            )
        })
    }

    pub(crate) fn universe(&self) -> &'a [Word] {
        self.universe
    }

    pub fn max_size(&self) -> usize {
        self.sizes().max().unwrap_or(0)
    }

    /// The largest bin, lowest pattern code first on ties.
    pub fn largest(&self) -> Option<(Pattern, usize)> {
        let mut best: Option<&Bin> = None;
        for b in &self.bins {
            if best.is_none_or(|cur| b.len > cur.len) {
                best = Some(b);
            }
        }
        best.map(|b| (Pattern::from_code(b.code, self.word_len), b.len as usize))
    }

    pub fn all_singletons(&self) -> bool {
        self.bins.iter().all(|b| b.len == 1)
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::feedback::score;

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|w| Word::new(w).unwrap()).collect()
    }

    #[test]
    fn single_candidate_is_one_green_bin() {
        let cands = words(&["trace"]);
        let dist = partition(&cands[0], &cands).unwrap();
        assert_eq!(dist.num_bins(), 1);
        let bin = dist.bin(Pattern::all_green(5)).unwrap();
        assert_eq!(bin.words().collect::<Vec<_>>(), [&cands[0]]);
        assert!(dist.all_singletons());
    }

    #[test]
    fn matches_pairwise_scoring() {
        let cands = words(&["cigar", "rebut", "sissy", "humph", "awake", "blush"]);
        for guess in &cands {
            let dist = partition(guess, &cands).unwrap();
            // brute force: group by score one pair at a time
            let mut expected: BTreeMap<u32, Vec<&Word>> = BTreeMap::new();
            for c in &cands {
                expected
                    .entry(score(guess, c).unwrap().code())
                    .or_default()
                    .push(c);
            }
            let got: BTreeMap<u32, Vec<&Word>> = dist
                .bins()
                .map(|b| (b.pattern.code(), b.words().collect()))
                .collect();
            assert_eq!(got, expected);
            assert_eq!(dist.total(), cands.len());
            assert_eq!(dist.sizes().sum::<usize>(), cands.len());
        }
    }

    #[test]
    fn guess_in_candidates_is_alone_in_green_bin() {
        let cands = words(&["aaa", "aab", "aba", "baa", "abb"]);
        for guess in &cands {
            let dist = partition(guess, &cands).unwrap();
            let bin = dist.bin(Pattern::all_green(3)).unwrap();
            assert_eq!(bin.words().collect::<Vec<_>>(), [guess]);
        }
    }

    #[test]
    fn singleton_check() {
        let cands = words(&["abc", "abd", "xyz"]);
        let guess = Word::new("abc").unwrap();
        assert!(partition(&guess, &cands).unwrap().all_singletons());
        let guess = Word::new("qqq").unwrap();
        let dist = partition(&guess, &cands).unwrap();
        assert!(!dist.all_singletons());
        assert_eq!(dist.largest().unwrap().1, 3);
    }

    #[test]
    fn empty_and_mismatched_inputs_rejected() {
        let guess = Word::new("abc").unwrap();
        assert!(matches!(partition(&guess, &[]), Err(Error::Empty(_))));
        let cands = words(&["abcd"]);
        assert!(matches!(
            partition(&guess, &cands),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn bins_ascend_by_code() {
        let cands = words(&["abc", "bca", "cab", "acb", "bac", "cba", "aaa"]);
        let guess = Word::new("abc").unwrap();
        let dist = partition(&guess, &cands).unwrap();
        let codes: Vec<u32> = dist.bins().map(|b| b.pattern.code()).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
    }
}
