//! Finite words over small alphabets `{0, .., k-1}`.
//!
//! Letters are stored as bytes. The alphabet size is a validation bound
//! carried alongside the letters; it does not take part in equality,
//! ordering or hashing, so `01` over `{0,1}` equals `01` over `{0,..,9}`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = u8;

/// Largest alphabet expressible with one ASCII digit per letter.
pub const MAX_ALPHABET: usize = 10;

#[derive(Clone)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: u8,
}

fn check_alphabet(size: usize) -> Result<u8> {
    if size == 0 || size > MAX_ALPHABET {
        return Err(Error::InvalidAlphabet {
            size,
            max: MAX_ALPHABET,
        });
    }
    Ok(size as u8)
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: usize) -> Result<Self> {
        let alphabet = check_alphabet(alphabet)?;
        if let Some(&bad) = letters.iter().find(|&&a| a >= alphabet) {
            return Err(Error::LetterOutOfRange {
                letter: bad as usize,
                alphabet: alphabet as usize,
            });
        }
        Ok(Word { letters, alphabet })
    }

    pub fn empty(alphabet: usize) -> Result<Self> {
        Self::new(Vec::new(), alphabet)
    }

    /// Parses ASCII digits over an alphabet of the given size. Whitespace is
    /// skipped.
    pub fn parse_over(text: &str, alphabet: usize) -> Result<Self> {
        let alphabet_u8 = check_alphabet(alphabet)?;
        let mut letters = Vec::with_capacity(text.len());
        for (offset, ch) in text.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            match ch.to_digit(10) {
                Some(d) if (d as u8) < alphabet_u8 => letters.push(d as u8),
                Some(d) => {
                    return Err(Error::LetterOutOfRange {
                        letter: d as usize,
                        alphabet,
                    })
                }
                None => return Err(Error::InvalidCharacter { ch, offset }),
            }
        }
        Ok(Word {
            letters,
            alphabet: alphabet_u8,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet as usize
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Same letters, checked against a different alphabet bound.
    pub fn with_alphabet(self, alphabet: usize) -> Result<Self> {
        Word::new(self.letters, alphabet)
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter >= self.alphabet {
            return Err(Error::LetterOutOfRange {
                letter: letter as usize,
                alphabet: self.alphabet as usize,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            alphabet: self.alphabet.max(other.alphabet),
        }
    }

    /// The factor `self[start..end]`, over the same alphabet.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
            alphabet: self.alphabet,
        }
    }

    pub(crate) fn from_trusted(letters: Vec<Letter>, alphabet: usize) -> Word {
        debug_assert!(letters.iter().all(|&a| (a as usize) < alphabet));
        Word {
            letters,
            alphabet: alphabet as u8,
        }
    }

    pub(crate) fn slice_over(letters: &[Letter], alphabet: usize) -> Word {
        Word::from_trusted(letters.to_vec(), alphabet)
    }
}

/// Parses a word written as ASCII digits, with the digit alphabet `{0..9}`
/// as the bound.
pub fn parse_word(text: &str) -> Result<Word> {
    Word::parse_over(text, MAX_ALPHABET)
}

pub fn format_word(w: &[Letter]) -> String {
    w.iter().map(|&a| char::from(b'0' + a)).collect()
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.letters
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Word {}

impl PartialEq<[Letter]> for Word {
    fn eq(&self, other: &[Letter]) -> bool {
        self.letters == other
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}/{})", format_word(&self.letters), self.alphabet)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_word(&self.letters))
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_word(&text).map_err(serde::de::Error::custom)
    }
}
