use crate::binning::BinDistribution;
use crate::error::{Error, Result};
use crate::feedback::{all_green_code, PatternTable};
use crate::lexicon::{Lexicon, Word};

/// A solution list, a guess list and their response table.
///
/// Candidates are identified by solution index and guesses by guess index;
/// both index spaces follow list order, so smaller index means earlier.
#[derive(Clone, Debug)]
pub struct Game {
    solutions: Lexicon,
    guesses: Lexicon,
    table: PatternTable,
    guess_as_solution: Vec<Option<u32>>,
    solution_as_guess: Vec<Option<u32>>,
}

impl Game {
    pub fn new(solutions: Lexicon, guesses: Lexicon) -> Result<Game> {
        if solutions.is_empty() {
            return Err(Error::Empty("solution list"));
        }
        if guesses.is_empty() {
            return Err(Error::Empty("guess list"));
        }
        let table = PatternTable::new(&guesses, &solutions)?;
        let guess_as_solution = guesses
            .iter()
            .map(|g| solutions.position(g).map(|i| i as u32))
            .collect();
        let solution_as_guess = solutions
            .iter()
            .map(|s| guesses.position(s).map(|i| i as u32))
            .collect();
        Ok(Game {
            solutions,
            guesses,
            table,
            guess_as_solution,
            solution_as_guess,
        })
    }

    /// Guesses restricted to the solution list.
    pub fn solutions_only(solutions: Lexicon) -> Result<Game> {
        let guesses = solutions.clone();
        Game::new(solutions, guesses)
    }

    pub fn solutions(&self) -> &Lexicon {
        &self.solutions
    }

    pub fn guesses(&self) -> &Lexicon {
        &self.guesses
    }

    pub fn table(&self) -> &PatternTable {
        &self.table
    }

    pub fn word_len(&self) -> usize {
        self.solutions.word_len()
    }

    pub fn all_green(&self) -> u16 {
        all_green_code(self.word_len())
    }

    pub fn guess_word(&self, guess: u32) -> &Word {
        self.guesses.get(guess as usize)
    }

    pub fn solution_word(&self, solution: u32) -> &Word {
        self.solutions.get(solution as usize)
    }

    /// The solution index of a guess word, when it is also a solution.
    pub fn guess_as_solution(&self, guess: u32) -> Option<u32> {
        self.guess_as_solution[guess as usize]
    }

    /// The guess index of a solution word, when it may be guessed.
    pub fn solution_as_guess(&self, solution: u32) -> Option<u32> {
        self.solution_as_guess[solution as usize]
    }

    pub fn code(&self, guess: u32, solution: u32) -> u16 {
        self.table.code(guess as usize, solution as usize)
    }

    /// Bins of `candidates` (sorted solution indices) under `guess`.
    pub fn partition(&self, guess: u32, candidates: &[u32]) -> BinDistribution<'_> {
        let row = self.table.row(guess as usize);
        BinDistribution::from_codes(
            self.guess_word(guess),
            self.solutions.words(),
            candidates,
            self.word_len(),
            |s| row[s as usize],
        )
    }

    /// Candidates that would answer `guess` with `code`.
    pub fn split(&self, guess: u32, candidates: &[u32], code: u16) -> Vec<u32> {
        let row = self.table.row(guess as usize);
        candidates
            .iter()
            .copied()
            .filter(|&s| row[s as usize] == code)
            .collect()
    }

    pub fn all_candidates(&self) -> Vec<u32> {
        (0..self.solutions.len() as u32).collect()
    }

    pub fn all_guesses(&self) -> Vec<u32> {
        (0..self.guesses.len() as u32).collect()
    }
}
