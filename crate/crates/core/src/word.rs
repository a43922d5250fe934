//! Cyclic words over the gap letters `a < b < c`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    /// Letter for the gap of the given rank (0 = smallest).
    pub fn from_rank(rank: usize) -> Option<Letter> {
        [Letter::A, Letter::B, Letter::C].get(rank).copied()
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid gap word {0:?}: expected a non-empty string over a, b, c")]
pub struct WordParseError(pub String);

/// A word read cyclically: `letter(j)` is `letters[j mod N]` for any integer `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GapWord {
    letters: Vec<Letter>,
}

impl GapWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Cyclic access; negative indices wrap from the end.
    pub fn letter(&self, j: i64) -> Letter {
        let n = self.letters.len() as i64;
        self.letters[j.rem_euclid(n) as usize]
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }
}

impl fmt::Display for GapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for GapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GapWord({self})")
    }
}

impl FromStr for GapWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .map(|ch| match ch {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                'c' => Ok(Letter::C),
                _ => Err(WordParseError(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if letters.is_empty() {
            return Err(WordParseError(s.to_string()));
        }
        Ok(Self { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_access() {
        let w: GapWord = "baca".parse().unwrap();
        assert_eq!(w.letter(0), Letter::B);
        assert_eq!(w.letter(-1), Letter::A);
        assert_eq!(w.letter(-2), Letter::C);
        assert_eq!(w.letter(6), Letter::C);
        assert_eq!(w.letter(-9), Letter::A);
        assert_eq!(w.to_string(), "baca");
    }

    #[test]
    fn rejects_foreign_letters() {
        assert!("abd".parse::<GapWord>().is_err());
        assert!("".parse::<GapWord>().is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(Letter::from_rank(2), Some(Letter::C));
        assert_eq!(Letter::from_rank(3), None);
    }
}
