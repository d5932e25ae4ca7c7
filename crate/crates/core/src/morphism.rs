//! Non-erasing morphisms given by their letter images.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Morphism {
    images: Vec<Word>,
    target_alphabet: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    uniform_width: Option<usize>,
}

impl Morphism {
    /// Builds a morphism on `{0, .., source_alphabet-1}` from one nonempty
    /// image per letter. All images must share one target alphabet bound.
    pub fn new(source_alphabet: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() != source_alphabet {
            return Err(Error::ImageCount {
                expected: source_alphabet,
                found: images.len(),
            });
        }
        let target_alphabet = match images.first() {
            Some(w) => w.alphabet_size(),
            None => return Err(Error::ImageCount { expected: 1, found: 0 }),
        };
        for (a, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::EmptyImage(a as Letter));
            }
            if image.alphabet_size() != target_alphabet {
                return Err(Error::MixedTargetAlphabet);
            }
        }
        let width = images[0].len();
        let uniform_width = images.iter().all(|w| w.len() == width).then_some(width);
        Ok(Morphism {
            images,
            target_alphabet,
            uniform_width,
        })
    }

    /// Builds a morphism from digit strings, e.g. `["01", "10"]`.
    pub fn from_digits(images: &[&str], target_alphabet: usize) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| Word::parse_over(s, target_alphabet))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images.len(), images)
    }

    /// The 10-uniform morphism on `{0,1,2,3}` whose fixed point at 0 is
    /// squarefree and avoids `12, 13, 21, 32, 231, 10302`.
    pub fn quaternary_squarefree() -> Morphism {
        Morphism::from_digits(&["0310201023", "0310230102", "0201031023", "0203010201"], 4)
            .expect("static image table")
    }

    /// The 6-uniform coding `{0,1,2,3} -> {0,1}` that turns the quaternary
    /// word into a cubefree binary word without squares of root length 4 or
    /// more.
    pub fn binary_coding() -> Morphism {
        Morphism::from_digits(&["010011", "010110", "011001", "011010"], 2)
            .expect("static image table")
    }

    /// The Thue–Morse morphism `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Morphism {
        Morphism::from_digits(&["01", "10"], 2).expect("static image table")
    }

    pub fn source_alphabet(&self) -> usize {
        self.images.len()
    }

    pub fn target_alphabet(&self) -> usize {
        self.target_alphabet
    }

    pub fn uniform_width(&self) -> Option<usize> {
        self.uniform_width
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, a: Letter) -> Result<&Word> {
        self.images
            .get(a as usize)
            .ok_or(Error::LetterOutOfRange {
                letter: a as usize,
                alphabet: self.source_alphabet(),
            })
    }

    /// Image of a word: the concatenation of the letter images in order.
    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        let mut out = Vec::with_capacity(self.image_len_hint(w.len()));
        for &a in w {
            out.extend_from_slice(self.image(a)?);
        }
        Ok(Word::from_trusted(out, self.target_alphabet))
    }

    /// True iff the image of `a` starts with `a` and is longer than one letter.
    pub fn is_prolongable(&self, a: Letter) -> Result<bool> {
        let image = self.image(a)?;
        Ok(image.len() >= 2 && image[0] == a && self.is_endomorphism())
    }

    pub fn is_endomorphism(&self) -> bool {
        self.target_alphabet == self.source_alphabet()
    }

    /// Same images with one letter of one image replaced. Used for fault
    /// injection.
    pub fn with_letter_replaced(&self, a: Letter, index: usize, replacement: Letter) -> Result<Morphism> {
        let mut images = self.images.clone();
        let target = self.target_alphabet;
        let image = images.get_mut(a as usize).ok_or(Error::LetterOutOfRange {
            letter: a as usize,
            alphabet: self.source_alphabet(),
        })?;
        let mut letters = image.letters().to_vec();
        if let Some(slot) = letters.get_mut(index) {
            *slot = replacement;
        }
        *image = Word::new(letters, target)?;
        Morphism::new(images.len(), images)
    }

    fn image_len_hint(&self, n: usize) -> usize {
        self.uniform_width.map_or(n, |width| n * width)
    }
}

pub fn morphism_apply(m: &Morphism, w: &[Letter]) -> Result<Word> {
    m.apply(w)
}

pub fn is_prolongable(m: &Morphism, a: Letter) -> Result<bool> {
    m.is_prolongable(a)
}
