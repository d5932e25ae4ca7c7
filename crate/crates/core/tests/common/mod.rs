//! Brute-force oracles shared by the integration tests. They test every
//! `(position, period)` pair letter by letter and share no code with the
//! detectors they check.

#![allow(dead_code)]

pub fn naive_squares(w: &[u8], min_root: usize) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for p in min_root.max(1)..=n {
            if i + 2 * p > n {
                break;
            }
            if (0..p).all(|k| w[i + k] == w[i + p + k]) {
                out.push((i, p));
            }
        }
    }
    out
}

pub fn naive_cubes(w: &[u8]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for p in 1..=n {
            if i + 3 * p > n {
                break;
            }
            if (0..2 * p).all(|k| w[i + k] == w[i + p + k]) {
                out.push((i, p));
            }
        }
    }
    out
}

/// `axaxa` occurrences as `(position, |ax|)`.
pub fn naive_overlaps(w: &[u8]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for p in 1..=n {
            if i + 2 * p + 1 > n {
                break;
            }
            if (0..=p).all(|k| w[i + k] == w[i + p + k]) {
                out.push((i, p));
            }
        }
    }
    out
}

pub fn naive_max_square_root(w: &[u8]) -> usize {
    naive_squares(w, 1).into_iter().map(|(_, p)| p).max().unwrap_or(0)
}

pub fn naive_contains(w: &[u8], f: &[u8]) -> bool {
    f.is_empty() || (0..w.len()).any(|i| i + f.len() <= w.len() && (0..f.len()).all(|k| w[i + k] == f[k]))
}

/// All binary words of length `len`.
pub fn binary_words(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << len).map(move |bits| (0..len).map(|k| ((bits >> (len - 1 - k)) & 1) as u8).collect())
}

/// Thue–Morse prefix from the bit-count definition: letter `i` is the parity
/// of the number of ones in `i`.
pub fn thue_morse_by_parity(n: usize) -> Vec<u8> {
    (0..n).map(|i| (i.count_ones() % 2) as u8).collect()
}

/// Largest square root, scanning periods from the top down and comparing
/// letters with an early exit on mismatch.
pub fn naive_max_square_root_desc(w: &[u8]) -> usize {
    let n = w.len();
    for p in (1..=n / 2).rev() {
        for i in 0..=n - 2 * p {
            let mut k = 0;
            while k < p && w[i + k] == w[i + p + k] {
                k += 1;
            }
            if k == p {
                return p;
            }
        }
    }
    0
}
