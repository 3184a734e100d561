use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feedback::{score, score_code, Color, Pattern};
use crate::lexicon::{Lexicon, Word};

/// Which guesses are allowed after feedback has been received.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Any word in the guess list.
    #[default]
    Regular,
    /// Revealed greens stay in place and revealed yellows are reused.
    Hard,
    /// Every guess must still be a possible answer.
    Superhard,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Regular, Mode::Hard, Mode::Superhard];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Regular => "regular",
            Mode::Hard => "hard",
            Mode::Superhard => "superhard",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownMode(s.to_string()))
    }
}

/// What one (guess, response) pair demands of a hard-mode guess.
#[derive(Clone, Debug)]
pub(crate) struct HardRequirement {
    greens: Vec<(usize, u8)>,
    min_counts: [u8; 26],
}

impl HardRequirement {
    pub(crate) fn new(guess: &Word, pattern: Pattern) -> Self {
        let mut greens = Vec::new();
        let mut min_counts = [0u8; 26];
        for (i, (&letter, color)) in guess.as_bytes().iter().zip(pattern.colors()).enumerate() {
            match color {
                Color::Green => {
                    greens.push((i, letter));
                    min_counts[(letter - b'a') as usize] += 1;
                }
                Color::Yellow => min_counts[(letter - b'a') as usize] += 1,
                Color::Gray => {}
            }
        }
        HardRequirement { greens, min_counts }
    }

    pub(crate) fn allows(&self, word: &Word) -> bool {
        let bytes = word.as_bytes();
        if self.greens.iter().any(|&(i, l)| bytes[i] != l) {
            return false;
        }
        let mut counts = [0u8; 26];
        for &b in bytes {
            counts[(b - b'a') as usize] += 1;
        }
        counts
            .iter()
            .zip(&self.min_counts)
            .all(|(have, need)| have >= need)
    }
}

/// Feedback received so far, oldest first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    history: Vec<(Word, Pattern)>,
}

impl Constraints {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_history(history: Vec<(Word, Pattern)>) -> Result<Self> {
        let mut out = Constraints::new();
        for (guess, pattern) in history {
            out.push(guess, pattern)?;
        }
        Ok(out)
    }

    /// Parses `raise=BYBBG,close=GBBYB`.
    pub fn parse(text: &str, word_len: usize) -> Result<Self> {
        let mut out = Constraints::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (guess, pattern) = item.split_once('=').ok_or_else(|| Error::InvalidPattern {
                text: item.to_string(),
                reason: "expected word=PATTERN".into(),
            })?;
            let guess = Word::new(guess.trim())?;
            let pattern = Pattern::parse(pattern.trim(), word_len)?;
            out.push(guess, pattern)?;
        }
        Ok(out)
    }

    pub fn push(&mut self, guess: Word, pattern: Pattern) -> Result<()> {
        if guess.len() != pattern.len() {
            return Err(Error::LengthMismatch {
                expected: guess.len(),
                actual: pattern.len(),
            });
        }
        if let Some((first, _)) = self.history.first() {
            if first.len() != guess.len() {
                return Err(Error::LengthMismatch {
                    expected: first.len(),
                    actual: guess.len(),
                });
            }
        }
        self.history.push((guess, pattern));
        Ok(())
    }

    pub fn history(&self) -> &[(Word, Pattern)] {
        &self.history
    }

    pub fn is_empty(&self) -> bool {
        self.history.is_empty()
    }

    /// Could `word` still be the answer?
    pub fn is_consistent(&self, word: &Word) -> bool {
        self.history.iter().all(|(g, p)| {
            g.len() == word.len() && score_code(g.as_bytes(), word.as_bytes()) as u32 == p.code()
        })
    }

    /// Does `word` keep every revealed green in place and reuse every
    /// revealed yellow (counting repeated letters)?
    pub fn is_hard_legal(&self, word: &Word) -> bool {
        self.history
            .iter()
            .all(|(g, p)| g.len() == word.len() && HardRequirement::new(g, *p).allows(word))
    }

    pub fn allows(&self, mode: Mode, word: &Word) -> bool {
        match mode {
            Mode::Regular => true,
            Mode::Hard => self.is_hard_legal(word),
            Mode::Superhard => self.is_consistent(word),
        }
    }

    /// Replays a path: the responses `secret` would have produced.
    pub fn replay(guesses: &[Word], secret: &Word) -> Result<Constraints> {
        let mut out = Constraints::new();
        for g in guesses {
            out.push(g.clone(), score(g, secret)?)?;
        }
        Ok(out)
    }
}

/// Guesses permitted by `mode` after `constraints`, in list order.
pub fn legal_guesses(guesses: &Lexicon, mode: Mode, constraints: &Constraints) -> Vec<Word> {
    guesses
        .iter()
        .filter(|w| constraints.allows(mode, w))
        .cloned()
        .collect()
}
