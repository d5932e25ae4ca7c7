//! Factorizations `x = u μ(y) v` of finite overlap-free binary words, with
//! `μ` the Thue–Morse morphism and `u, v` short trims.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::repetition::is_overlapfree;
use crate::word::{format_word, Letter, Word};

/// The possible left and right trims, in preference order.
pub const TRIMS: [&[Letter]; 5] = [&[], &[0], &[1], &[0, 0], &[1, 1]];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub u: Word,
    pub y: Word,
    pub v: Word,
}

impl Decomposition {
    /// Re-checks `u μ(y) v = x`, that `y` is overlap-free and that both trims
    /// are allowed.
    pub fn holds_for(&self, x: &[Letter]) -> bool {
        let trims_ok = TRIMS.contains(&self.u.letters()) && TRIMS.contains(&self.v.letters());
        let Ok(image) = Morphism::thue_morse().apply(&self.y) else {
            return false;
        };
        let rebuilt = self.u.concat(&image).concat(&self.v);
        trims_ok && rebuilt.letters() == x && is_overlapfree(&self.y)
    }
}

/// Inverse image under Thue–Morse, if `z` is a concatenation of `01`/`10`.
fn thue_morse_preimage(z: &[Letter]) -> Option<Vec<Letter>> {
    if !z.len().is_multiple_of(2) {
        return None;
    }
    z.chunks_exact(2)
        .map(|pair| match pair {
            [0, 1] => Some(0),
            [1, 0] => Some(1),
            _ => None,
        })
        .collect()
}

/// Every factorization of an overlap-free binary word as `u μ(y) v` with
/// `u, v ∈ {ε, 0, 1, 00, 11}` and `y` overlap-free. Ordered by `u` then `v`
/// in [`TRIMS`] order, so the first entry minimizes `|u|` then `|v|`.
pub fn decompose_overlapfree(x: &[Letter]) -> Result<Vec<Decomposition>> {
    if x.iter().any(|&a| a > 1) {
        return Err(Error::NotBinary);
    }
    if !is_overlapfree(x) {
        return Err(Error::NotOverlapFree(format_word(x)));
    }
    let mut out = Vec::new();
    for u in TRIMS {
        for v in TRIMS {
            if u.len() + v.len() > x.len() || !x.starts_with(u) || !x.ends_with(v) {
                continue;
            }
            let Some(y) = thue_morse_preimage(&x[u.len()..x.len() - v.len()]) else {
                continue;
            };
            if is_overlapfree(&y) {
                out.push(Decomposition {
                    u: Word::slice_over(u, 2),
                    y: Word::slice_over(&y, 2),
                    v: Word::slice_over(v, 2),
                });
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

    fn d(u: &str, y: &str, v: &str) -> Decomposition {
        Decomposition {
            u: w(u),
            y: w(y),
            v: w(v),
        }
    }

    #[test]
    fn examples() {
        assert!(decompose_overlapfree(&w("0110")).unwrap().contains(&d("", "01", "")));
        assert!(decompose_overlapfree(&w("110")).unwrap().contains(&d("1", "1", "")));
        assert!(decompose_overlapfree(&w("0")).unwrap().contains(&d("0", "", "")));
        assert_eq!(decompose_overlapfree(&[]).unwrap(), vec![d("", "", "")]);
    }

    #[test]
    fn preferred_is_first() {
        let all = decompose_overlapfree(&w("0")).unwrap();
        assert_eq!(all[0], d("", "", "0"));
    }

    #[test]
    fn every_result_holds() {
        for x in ["001011", "0110100110010110", "1101001"] {
            let x = w(x);
            let all = decompose_overlapfree(&x).unwrap();
            assert!(!all.is_empty());
            assert!(all.iter().all(|dec| dec.holds_for(&x)));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(decompose_overlapfree(&w("012")).unwrap_err(), Error::NotBinary);
        assert!(matches!(decompose_overlapfree(&w("000")), Err(Error::NotOverlapFree(_))));
        assert!(d("00", "1", "").holds_for(&w("0010")));
        assert!(!d("01", "", "").holds_for(&w("01")));
        assert!(!d("", "000", "").holds_for(&w("010101")));
    }
}
