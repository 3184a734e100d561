//! Word lists.
//!
//! List order is meaningful: every tie between otherwise equal guesses is
//! resolved in favour of the word that appears first.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest supported word. Pattern codes for this length still fit in a `u16`.
pub const MAX_WORD_LEN: usize = 10;

/// A fixed-length word over lowercase `a`-`z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Box<str>);

impl Word {
    pub fn new(text: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidWord {
            word: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(invalid("empty"));
        }
        if text.len() > MAX_WORD_LEN {
            return Err(invalid("too long"));
        }
        if !text.bytes().all(|b| b.is_ascii_lowercase()) {
            return Err(invalid("letters must be a-z"));
        }
        Ok(Word(text.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// An ordered list of distinct words of one length.
#[derive(Clone, Debug)]
pub struct Lexicon {
    label: String,
    word_len: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Lexicon {
    /// Builds a lexicon from words in order. Rejects duplicates and mixed lengths.
    pub fn new(label: impl Into<String>, words: Vec<Word>) -> Result<Self> {
        let word_len = words
            .first()
            .map(Word::len)
            .ok_or(Error::Empty("word list"))?;
        let mut index = HashMap::with_capacity(words.len());
        for (i, word) in words.iter().enumerate() {
            if word.len() != word_len {
                return Err(Error::BadLine {
                    line: i + 1,
                    message: format!("{word:?} has {} letters, expected {word_len}", word.len()),
                });
            }
            if index.insert(word.clone(), i).is_some() {
                return Err(Error::DuplicateWord {
                    word: word.to_string(),
                    line: i + 1,
                });
            }
        }
        Ok(Lexicon {
            label: label.into(),
            word_len,
            words,
            index,
        })
    }

    /// Convenience constructor for word literals.
    pub fn from_strs<S: AsRef<str>>(label: impl Into<String>, words: &[S]) -> Result<Self> {
        let words = words
            .iter()
            .map(|w| Word::new(w.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Lexicon::new(label, words)
    }

    /// Parses the one-word-per-line format. Errors name the offending line.
    pub fn parse(label: impl Into<String>, text: &str) -> Result<Self> {
        let mut words = Vec::new();
        let mut seen = HashMap::new();
        let mut word_len = None;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let word = Word::new(line).map_err(|e| Error::BadLine {
                line: line_no,
                message: e.to_string(),
            })?;
            match word_len {
                None => word_len = Some(word.len()),
                Some(len) if len != word.len() => {
                    return Err(Error::BadLine {
                        line: line_no,
                        message: format!("{line:?} has {} letters, expected {len}", word.len()),
                    })
                }
                Some(_) => {}
            }
            if seen.insert(word.clone(), line_no).is_some() {
                return Err(Error::DuplicateWord {
                    word: word.to_string(),
                    line: line_no,
                });
            }
            words.push(word);
        }
        Lexicon::new(label, words)
    }

    /// Loads a word list file. The label defaults to the file stem.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Lexicon::parse(label, &text)
    }

    /// One word per line, each terminated by `\n`.
    pub fn to_file_string(&self) -> String {
        let mut out = String::with_capacity(self.words.len() * (self.word_len + 1));
        for word in &self.words {
            out.push_str(word.as_str());
            out.push('\n');
        }
        out
    }

    /// All words not in `removed`, in their original order.
    pub fn subtract(&self, removed: &HashSet<Word>) -> Lexicon {
        let words: Vec<Word> = self
            .words
            .iter()
            .filter(|w| !removed.contains(*w))
            .cloned()
            .collect();
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Lexicon {
            label: self.label.clone(),
            word_len: self.word_len,
            words,
            index,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// A lexicon can become empty only through [`Lexicon::subtract`].
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn position(&self, word: &Word) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn position_str(&self, word: &str) -> Option<usize> {
        Word::new(word).ok().and_then(|w| self.position(&w))
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.index.contains_key(word)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }
}

impl<'a> IntoIterator for &'a Lexicon {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}
