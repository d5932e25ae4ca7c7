use thiserror::Error;

use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet of size {alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("alphabet size must be between 1 and {max}, got {size}")]
    InvalidAlphabet { size: usize, max: usize },

    #[error("invalid character {ch:?} at offset {offset}")]
    InvalidCharacter { ch: char, offset: usize },

    #[error("morphism needs {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("image of letter {0} is empty")]
    EmptyImage(Letter),

    #[error("morphism images disagree on the target alphabet")]
    MixedTargetAlphabet,

    #[error("morphism is not prolongable on letter {0}")]
    NotProlongable(Letter),

    #[error("morphism is not uniform")]
    NonUniform,

    #[error("factor sets cannot contain the empty word")]
    EmptyFactor,

    #[error("word is not binary")]
    NotBinary,

    #[error("word {0} contains an overlap")]
    NotOverlapFree(String),

    #[error("depth cap must be at least 1")]
    InvalidDepthCap,

    #[error("unknown name {0:?}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
