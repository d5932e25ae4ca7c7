//! Where letter images of a uniform morphism can show up out of alignment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::repetition::{avoids_factors, FactorSet};
use crate::word::{Letter, Word};

/// `image(a) image(b) = t image(c) u` with `t` and `u` both nonempty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InteriorOccurrence {
    pub a: Letter,
    pub b: Letter,
    pub c: Letter,
    pub t: Word,
    pub u: Word,
    /// Whether `u` is a prefix of some letter image. When it is not, the
    /// occurrence cannot continue into an aligned factorization.
    pub u_prefixes_an_image: bool,
}

impl InteriorOccurrence {
    pub fn holds_for(&self, m: &Morphism) -> bool {
        let (Ok(ia), Ok(ib), Ok(ic)) = (m.image(self.a), m.image(self.b), m.image(self.c)) else {
            return false;
        };
        let lhs = ia.concat(ib);
        let rhs = self.t.concat(ic).concat(&self.u);
        !self.t.is_empty() && !self.u.is_empty() && lhs == rhs
    }

    /// The pair `ab` can occur in a squarefree word avoiding `factors`.
    pub fn pair_admissible(&self, factors: &FactorSet) -> bool {
        self.a != self.b && avoids_factors(&[self.a, self.b], factors)
    }
}

/// `image(a) = s t`, `image(b) = u v`, `image(c) = s v` with `a != c`,
/// `b != c` and `s`, `v` nonempty proper parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Synchronization {
    pub a: Letter,
    pub b: Letter,
    pub c: Letter,
    pub s: Word,
    pub t: Word,
    pub u: Word,
    pub v: Word,
}

impl Synchronization {
    pub fn holds_for(&self, m: &Morphism) -> bool {
        let (Ok(ia), Ok(ib), Ok(ic)) = (m.image(self.a), m.image(self.b), m.image(self.c)) else {
            return false;
        };
        self.a != self.c
            && self.b != self.c
            && !self.s.is_empty()
            && !self.v.is_empty()
            && *ia == self.s.concat(&self.t)
            && *ib == self.u.concat(&self.v)
            && *ic == self.s.concat(&self.v)
    }
}

fn uniform_width(m: &Morphism) -> Result<usize> {
    m.uniform_width().ok_or(Error::NonUniform)
}

/// All nontrivial occurrences of a letter image inside the image of a pair of
/// letters, over every pair. Sorted by `(a, b, c, |t|)`.
pub fn find_interior_occurrences(m: &Morphism) -> Result<Vec<InteriorOccurrence>> {
    let width = uniform_width(m)?;
    let k = m.source_alphabet() as Letter;
    let target = m.target_alphabet();
    let mut out = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let pair = m.image(a)?.concat(m.image(b)?);
            for c in 0..k {
                let image = m.image(c)?;
                for offset in 1..width {
                    if pair[offset..offset + width] != image[..] {
                        continue;
                    }
                    let u = Word::slice_over(&pair[offset + width..], target);
                    let u_prefixes_an_image = m.images().iter().any(|d| d.starts_with(&u));
                    out.push(InteriorOccurrence {
                        a,
                        b,
                        c,
                        t: Word::slice_over(&pair[..offset], target),
                        u,
                        u_prefixes_an_image,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// All exceptional splittings `image(c) = s v` with `s` a prefix of
/// `image(a)` and `v` a suffix of `image(b)`, where `c` is neither `a` nor `b`.
pub fn find_synchronizations(m: &Morphism) -> Result<Vec<Synchronization>> {
    let width = uniform_width(m)?;
    let k = m.source_alphabet() as Letter;
    let target = m.target_alphabet();
    let mut out = Vec::new();
    for a in 0..k {
        let ia = m.image(a)?;
        for b in 0..k {
            let ib = m.image(b)?;
            for c in (0..k).filter(|&c| c != a && c != b) {
                let ic = m.image(c)?;
                for split in 1..width {
                    if ia[..split] == ic[..split] && ib[split..] == ic[split..] {
                        out.push(Synchronization {
                            a,
                            b,
                            c,
                            s: Word::slice_over(&ia[..split], target),
                            t: Word::slice_over(&ia[split..], target),
                            u: Word::slice_over(&ib[..split], target),
                            v: Word::slice_over(&ib[split..], target),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn interior(a: Letter, b: Letter, c: Letter, t: &str, u: &str) -> (Letter, Letter, Letter, Word, Word) {
        (a, b, c, w(t), w(u))
    }

    fn key(o: &InteriorOccurrence) -> (Letter, Letter, Letter, Word, Word) {
        (o.a, o.b, o.c, o.t.clone(), o.u.clone())
    }

    #[test]
    fn quaternary_has_one_interior_occurrence() {
        let h = Morphism::quaternary_squarefree();
        let found = find_interior_occurrences(&h).unwrap();
        assert_eq!(found.iter().map(key).collect::<Vec<_>>(), vec![interior(3, 1, 2, "020301", "0102")]);
        assert!(!found[0].u_prefixes_an_image);
        assert!(found[0].holds_for(&h));
    }

    #[test]
    fn coding_interior_occurrences_on_admissible_pairs() {
        let g = Morphism::binary_coding();
        let found = find_interior_occurrences(&g).unwrap();
        // The raw list also contains pairs like 00 or 12 that never occur.
        assert_eq!(found.len(), 10);
        let f = FactorSet::forbidden_factors();
        let admissible: Vec<_> = found.iter().filter(|o| o.pair_admissible(&f)).collect();
        assert_eq!(
            admissible.iter().map(|o| key(o)).collect::<Vec<_>>(),
            vec![
                interior(0, 1, 3, "010", "110"),
                interior(1, 0, 2, "01", "0011"),
                interior(2, 3, 1, "0110", "10"),
            ]
        );
        assert!(admissible.iter().all(|o| !o.u_prefixes_an_image && o.holds_for(&g)));
    }

    #[test]
    fn thue_morse_interior_occurrences() {
        let mu = Morphism::thue_morse();
        let found = find_interior_occurrences(&mu).unwrap();
        assert_eq!(
            found.iter().map(key).collect::<Vec<_>>(),
            vec![interior(0, 0, 1, "0", "1"), interior(1, 1, 0, "1", "0")]
        );
        assert!(found.iter().all(|o| o.u_prefixes_an_image));
    }

    #[test]
    fn synchronizations() {
        assert!(find_synchronizations(&Morphism::quaternary_squarefree()).unwrap().is_empty());
        let g = Morphism::binary_coding();
        let found = find_synchronizations(&g).unwrap();
        assert_eq!(
            found,
            vec![Synchronization {
                a: 2,
                b: 1,
                c: 3,
                s: w("0110"),
                t: w("01"),
                u: w("0101"),
                v: w("10"),
            }]
        );
        assert!(found[0].holds_for(&g));
        // on two letters c would have to differ from both a and b = a
        assert!(find_synchronizations(&Morphism::thue_morse()).unwrap().is_empty());
    }

    #[test]
    fn non_uniform_is_unsupported() {
        let fib = Morphism::from_digits(&["01", "0"], 2).unwrap();
        assert_eq!(find_interior_occurrences(&fib).unwrap_err(), Error::NonUniform);
        assert_eq!(find_synchronizations(&fib).unwrap_err(), Error::NonUniform);
    }
}
