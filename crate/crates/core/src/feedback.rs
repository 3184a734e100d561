//! Color responses and their base-3 encoding.
//!
//! A pattern of length `L` is stored as `sum(d_i * 3^(L-1-i))` with
//! Gray = 0, Yellow = 1, Green = 2, so the first letter is the most
//! significant digit and all-Green is `3^L - 1`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, Word, MAX_WORD_LEN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Gray = 0,
    Yellow = 1,
    Green = 2,
}

impl Color {
    pub fn symbol(self) -> char {
        match self {
            Color::Gray => 'B',
            Color::Yellow => 'Y',
            Color::Green => 'G',
        }
    }

    pub fn from_symbol(c: char) -> Option<Color> {
        match c {
            'B' => Some(Color::Gray),
            'Y' => Some(Color::Yellow),
            'G' => Some(Color::Green),
            _ => None,
        }
    }

    fn from_digit(d: u32) -> Color {
        match d {
            0 => Color::Gray,
            1 => Color::Yellow,
            _ => Color::Green,
        }
    }
}

/// Number of distinct patterns for words of length `len`.
pub const fn pattern_count(len: usize) -> u32 {
    3u32.pow(len as u32)
}

/// Code of the all-Green pattern for words of length `len`.
pub const fn all_green_code(len: usize) -> u16 {
    (pattern_count(len) - 1) as u16
}

/// One color response. Ordered by code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    code: u16,
    len: u8,
}

impl Pattern {
    /// Decodes an integer code.
    pub fn decode(code: u32, len: usize) -> Result<Pattern> {
        if len == 0 || len > MAX_WORD_LEN || code >= pattern_count(len) {
            return Err(Error::CodeOutOfRange { code, len });
        }
        Ok(Pattern {
            code: code as u16,
            len: len as u8,
        })
    }

    pub(crate) fn from_code(code: u16, len: usize) -> Pattern {
        debug_assert!((code as u32) < pattern_count(len));
        Pattern {
            code,
            len: len as u8,
        }
    }

    pub fn from_colors(colors: &[Color]) -> Result<Pattern> {
        if colors.is_empty() || colors.len() > MAX_WORD_LEN {
            return Err(Error::InvalidPattern {
                text: colors.iter().map(|c| c.symbol()).collect(),
                reason: "bad length".into(),
            });
        }
        let code = colors.iter().fold(0u16, |acc, &c| acc * 3 + c as u16);
        Ok(Pattern {
            code,
            len: colors.len() as u8,
        })
    }

    pub fn all_green(len: usize) -> Pattern {
        Pattern::from_code(all_green_code(len), len)
    }

    /// Parses the `G`/`Y`/`B` text form.
    pub fn parse(text: &str, len: usize) -> Result<Pattern> {
        let invalid = |reason: String| Error::InvalidPattern {
            text: text.to_string(),
            reason,
        };
        if text.chars().count() != len {
            return Err(invalid(format!("expected {len} marks")));
        }
        let colors = text
            .chars()
            .map(|c| Color::from_symbol(c).ok_or_else(|| invalid(format!("bad mark {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Pattern::from_colors(&colors)
    }

    pub fn code(self) -> u32 {
        self.code as u32
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn is_all_green(self) -> bool {
        self.code == all_green_code(self.len as usize)
    }

    pub fn colors(self) -> Vec<Color> {
        let mut out = vec![Color::Gray; self.len as usize];
        let mut code = self.code as u32;
        for slot in out.iter_mut().rev() {
            *slot = Color::from_digit(code % 3);
            code /= 3;
        }
        out
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.colors() {
            write!(f, "{}", c.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Response code for `guess` against `secret`. Both must be the same length.
///
/// Greens are assigned and consume their secret letter first; yellows are
/// then handed out left to right while unconsumed copies of the letter remain.
pub(crate) fn score_code(guess: &[u8], secret: &[u8]) -> u16 {
    debug_assert_eq!(guess.len(), secret.len());
    let mut remaining = [0u8; 26];
    let mut green = [false; MAX_WORD_LEN];
    for (i, (&g, &s)) in guess.iter().zip(secret).enumerate() {
        if g == s {
            green[i] = true;
        } else {
            remaining[(s - b'a') as usize] += 1;
        }
    }
    let mut code = 0u16;
    for (i, &g) in guess.iter().enumerate() {
        let digit = if green[i] {
            2
        } else {
            let slot = &mut remaining[(g - b'a') as usize];
            if *slot > 0 {
                *slot -= 1;
                1
            } else {
                0
            }
        };
        code = code * 3 + digit;
    }
    code
}

/// The color response for `guess` when the answer is `secret`.
pub fn score(guess: &Word, secret: &Word) -> Result<Pattern> {
    if guess.len() != secret.len() {
        return Err(Error::LengthMismatch {
            expected: guess.len(),
            actual: secret.len(),
        });
    }
    Ok(Pattern::from_code(
        score_code(guess.as_bytes(), secret.as_bytes()),
        guess.len(),
    ))
}

/// Precomputed responses for every (guess, secret) pair of two lexicons.
#[derive(Clone, Debug)]
pub struct PatternTable {
    codes: Vec<u16>,
    secrets: usize,
    word_len: usize,
}

impl PatternTable {
    pub fn new(guesses: &Lexicon, secrets: &Lexicon) -> Result<PatternTable> {
        if guesses.word_len() != secrets.word_len() {
            return Err(Error::LengthMismatch {
                expected: guesses.word_len(),
                actual: secrets.word_len(),
            });
        }
        let n = secrets.len();
        let mut codes = vec![0u16; guesses.len() * n];
        if n > 0 {
            codes
                .par_chunks_mut(n)
                .zip(guesses.words().par_iter())
                .for_each(|(row, guess)| {
                    for (slot, secret) in row.iter_mut().zip(secrets.words()) {
                        *slot = score_code(guess.as_bytes(), secret.as_bytes());
                    }
                });
        }
        Ok(PatternTable {
            codes,
            secrets: n,
            word_len: guesses.word_len(),
        })
    }

    #[inline]
    pub fn code(&self, guess: usize, secret: usize) -> u16 {
        self.codes[guess * self.secrets + secret]
    }

    #[inline]
    pub fn row(&self, guess: usize) -> &[u16] {
        &self.codes[guess * self.secrets..(guess + 1) * self.secrets]
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }
}
