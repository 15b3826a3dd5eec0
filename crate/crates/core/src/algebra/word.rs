//! Words over the two-letter alphabet `{x0, x1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Composition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X0,
    X1,
}

impl Letter {
    /// The letter swap `x0 ↔ x1`.
    pub fn flip(self) -> Letter {
        match self {
            Letter::X0 => Letter::X1,
            Letter::X1 => Letter::X0,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::X0 => '0',
            Letter::X1 => '1',
        }
    }
}

/// A finite word; the empty word is allowed and stands for the constant 1.
///
/// Text form is a string over `{'0', '1'}`, e.g. `"011001"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-empty and ending in `x1`.
    pub fn is_decodable(&self) -> bool {
        self.0.last() == Some(&Letter::X1)
    }

    /// Swaps every letter.
    pub fn flipped(&self) -> Word {
        Word(self.0.iter().map(|l| l.flip()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        text.trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(Letter::X0),
                '1' => Ok(Letter::X1),
                other => Err(AlgebraError::BadLetter { position: i + 1, letter: other }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl TryFrom<String> for Word {
    type Error = AlgebraError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        Word::parse(&s)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> Self {
        w.to_string()
    }
}

/// `(s_1, ..., s_l) ↦ x0^{s_1-1} x1 ⋯ x0^{s_l-1} x1`.
pub fn encode_word(c: &Composition) -> Word {
    let mut letters = Vec::with_capacity(c.weight() as usize);
    for &s in c.parts() {
        letters.extend(std::iter::repeat_n(Letter::X0, s as usize - 1));
        letters.push(Letter::X1);
    }
    Word(letters)
}

/// Inverse of [`encode_word`]; the word must be non-empty and end in `x1`.
pub fn decode_word(w: &Word) -> Result<Composition, AlgebraError> {
    if !w.is_decodable() {
        return Err(AlgebraError::NotDecodable(w.to_string()));
    }
    let mut parts = Vec::new();
    let mut run = 1u32;
    for l in &w.0 {
        match l {
            Letter::X0 => run += 1,
            Letter::X1 => {
                parts.push(run);
                run = 1;
            }
        }
    }
    Composition::new(parts)
}
