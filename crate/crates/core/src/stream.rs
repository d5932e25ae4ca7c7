//! Lazy prefixes of morphic words: fixed points `m^ω(a)` and their images
//! under a second morphism.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word::{Letter, Word};

/// Letter-by-letter generator of a fixed point, expanded on demand.
///
/// The fixed point `w` satisfies `w = m(w)`, so once the first `j` letters
/// are known, `m(w[j])` supplies the next block. `expanded` is the index of
/// the next letter whose image has not been appended yet.
#[derive(Clone, Debug)]
struct FixedPointGenerator {
    morphism: Morphism,
    letters: Vec<Letter>,
    expanded: usize,
}

impl FixedPointGenerator {
    fn new(morphism: Morphism, seed: Letter) -> Result<Self> {
        if !morphism.is_prolongable(seed)? {
            return Err(Error::NotProlongable(seed));
        }
        let letters = morphism.image(seed)?.letters().to_vec();
        Ok(FixedPointGenerator {
            morphism,
            letters,
            expanded: 1,
        })
    }

    /// Makes sure at least `n` letters are buffered.
    fn ensure(&mut self, n: usize) {
        while self.letters.len() < n {
            let a = self.letters[self.expanded];
            let image = self.morphism.images()[a as usize].letters();
            self.letters.extend_from_slice(image);
            self.expanded += 1;
        }
    }

    fn letter(&mut self, index: usize) -> Letter {
        self.ensure(index + 1);
        self.letters[index]
    }
}

/// A cursor over `m^ω(a)` or `outer(m^ω(a))`.
///
/// Taking `n` letters and then `k` more yields the same letters as taking
/// `n + k` at once.
#[derive(Clone, Debug)]
pub struct WordStream {
    inner: FixedPointGenerator,
    outer: Option<Morphism>,
    inner_cursor: usize,
    pending: VecDeque<Letter>,
    position: usize,
}

impl WordStream {
    pub fn fixed_point(m: &Morphism, seed: Letter) -> Result<Self> {
        Ok(WordStream {
            inner: FixedPointGenerator::new(m.clone(), seed)?,
            outer: None,
            inner_cursor: 0,
            pending: VecDeque::new(),
            position: 0,
        })
    }

    pub fn mapped(outer: &Morphism, m: &Morphism, seed: Letter) -> Result<Self> {
        if outer.source_alphabet() != m.target_alphabet() {
            return Err(Error::ImageCount {
                expected: m.target_alphabet(),
                found: outer.source_alphabet(),
            });
        }
        let mut stream = WordStream::fixed_point(m, seed)?;
        stream.outer = Some(outer.clone());
        Ok(stream)
    }

    pub fn alphabet_size(&self) -> usize {
        match &self.outer {
            Some(outer) => outer.target_alphabet(),
            None => self.inner.morphism.target_alphabet(),
        }
    }

    /// Number of letters emitted so far.
    pub fn position(&self) -> usize {
        self.position
    }

    /// The next `n` letters.
    pub fn take_word(&mut self, n: usize) -> Word {
        let mut out = Vec::with_capacity(n);
        out.extend(self.by_ref().take(n));
        Word::from_trusted(out, self.alphabet_size())
    }
}

impl Iterator for WordStream {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        let letter = match &self.outer {
            None => {
                let a = self.inner.letter(self.inner_cursor);
                self.inner_cursor += 1;
                a
            }
            Some(outer) => {
                if self.pending.is_empty() {
                    let a = self.inner.letter(self.inner_cursor);
                    self.inner_cursor += 1;
                    self.pending
                        .extend(outer.images()[a as usize].letters().iter().copied());
                }
                self.pending.pop_front().expect("images are nonempty")
            }
        };
        self.position += 1;
        Some(letter)
    }
}

/// First `n` letters of `m^ω(a)`.
pub fn fixed_point_prefix(m: &Morphism, a: Letter, n: usize) -> Result<Word> {
    let mut generator = FixedPointGenerator::new(m.clone(), a)?;
    generator.ensure(n);
    let mut letters = generator.letters;
    letters.truncate(n);
    Ok(Word::from_trusted(letters, m.target_alphabet()))
}

/// First `n` letters of `outer(m^ω(a))`.
pub fn mapped_stream_prefix(outer: &Morphism, m: &Morphism, a: Letter, n: usize) -> Result<Word> {
    match outer.uniform_width() {
        Some(width) => {
            if outer.source_alphabet() != m.target_alphabet() {
                return Err(Error::ImageCount {
                    expected: m.target_alphabet(),
                    found: outer.source_alphabet(),
                });
            }
            let inner = fixed_point_prefix(m, a, n.div_ceil(width))?;
            let mut letters = outer.apply(&inner)?.into_letters();
            letters.truncate(n);
            Ok(Word::from_trusted(letters, outer.target_alphabet()))
        }
        None => Ok(WordStream::mapped(outer, m, a)?.take_word(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn fixed_point_examples() {
        let h = Morphism::quaternary_squarefree();
        let mu = Morphism::thue_morse();
        assert_eq!(fixed_point_prefix(&h, 0, 20).unwrap(), w("03102010230203010201"));
        assert_eq!(
            fixed_point_prefix(&h, 0, 50).unwrap(),
            w("0310201023 0203010201 0310230102 0310201023 0201031023")
        );
        assert_eq!(fixed_point_prefix(&mu, 0, 16).unwrap(), w("0110100110010110"));
        assert!(fixed_point_prefix(&mu, 0, 0).unwrap().is_empty());
        assert_eq!(fixed_point_prefix(&mu, 0, 1).unwrap(), w("0"));
    }

    #[test]
    fn not_prolongable_is_an_error() {
        let h = Morphism::quaternary_squarefree();
        assert_eq!(fixed_point_prefix(&h, 1, 5).unwrap_err(), Error::NotProlongable(1));
        let g = Morphism::binary_coding();
        assert!(WordStream::fixed_point(&g, 0).is_err());
    }

    #[test]
    fn mapped_examples() {
        let h = Morphism::quaternary_squarefree();
        let g = Morphism::binary_coding();
        let mu = Morphism::thue_morse();
        assert_eq!(
            mapped_stream_prefix(&g, &h, 0, 60).unwrap(),
            w("010011011010010110010011011001010011010110010011011001011010")
        );
        assert_eq!(mapped_stream_prefix(&g, &h, 0, 6).unwrap(), w("010011"));
        assert_eq!(
            mapped_stream_prefix(&mu, &mu, 0, 8).unwrap(),
            fixed_point_prefix(&mu, 0, 8).unwrap()
        );
        assert!(mapped_stream_prefix(&mu, &h, 0, 8).is_err());
    }

    #[test]
    fn non_uniform_fixed_point() {
        // Fibonacci word
        let fib = Morphism::from_digits(&["01", "0"], 2).unwrap();
        assert_eq!(fixed_point_prefix(&fib, 0, 13).unwrap(), w("0100101001001"));
        let mu = Morphism::thue_morse();
        let via_stream = WordStream::mapped(&mu, &fib, 0).unwrap().take_word(10);
        assert_eq!(mapped_stream_prefix(&mu, &fib, 0, 10).unwrap(), via_stream);
        assert_eq!(via_stream, w("0110010110"));
        // non-uniform outer morphism takes the incremental path
        assert_eq!(mapped_stream_prefix(&fib, &mu, 0, 10).unwrap(), w("0100010010"));
    }

    #[test]
    fn stream_chunks_match_one_shot() {
        let h = Morphism::quaternary_squarefree();
        let g = Morphism::binary_coding();
        let mut stream = WordStream::mapped(&g, &h, 0).unwrap();
        let mut joined = Vec::new();
        for chunk in [1, 5, 7, 0, 100, 13] {
            joined.extend_from_slice(&stream.take_word(chunk));
        }
        assert_eq!(stream.position(), 126);
        assert_eq!(joined, mapped_stream_prefix(&g, &h, 0, 126).unwrap().letters());
    }
}
