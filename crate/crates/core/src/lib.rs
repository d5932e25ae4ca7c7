//! Combinatorics on words: morphic words, repetition detection, avoidance-tree
//! search and mechanical checks of the finite case analyses behind a cubefree
//! binary word with no squares of root length 4 or more.
//!
//! ```
//! use repwords_core::{mapped_stream_prefix, is_cubefree, max_square_root, Morphism};
//!
//! let h = Morphism::quaternary_squarefree();
//! let g = Morphism::binary_coding();
//! let w = mapped_stream_prefix(&g, &h, 0, 600).unwrap();
//! assert!(is_cubefree(&w));
//! assert!(max_square_root(&w) <= 3);
//! ```

pub mod error;
pub mod morphism;
pub mod repetition;
pub mod search;
pub mod stream;
pub mod verification;
pub mod word;

pub use error::{Error, Result};
pub use morphism::{is_prolongable, morphism_apply, Morphism};
pub use repetition::{
    avoids_factors, contains_factor, find_cubes, find_factor, find_overlaps, find_squares,
    is_cubefree, is_overlapfree, is_squarefree, max_square_root, CubeOccurrence, FactorSet,
    OverlapOccurrence, RepetitionReport, SquareOccurrence,
};
pub use search::{
    longest_avoiding, search, search_with, AvoidancePredicate, LongestAvoiding, SearchReport,
    Traversal,
};
pub use stream::{fixed_point_prefix, mapped_stream_prefix, WordStream};
pub use verification::{decompose_overlapfree, run_all, VerificationReport, Verifier};
pub use word::{format_word, parse_word, Letter, Word};
