//! Squares, cubes, overlaps and forbidden factors.
//!
//! Every detector works one period `p` at a time: it walks the word once,
//! tracking the length of the current run of positions `j` with
//! `w[j] == w[j + p]`. A run of `p` such positions is a square, `2p` a cube
//! and `p + 1` an overlap `axaxa` with `|ax| = p`. That is quadratic overall,
//! which is plenty for words of up to ~10^5 letters.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{parse_word, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareOccurrence {
    pub position: usize,
    pub root_length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CubeOccurrence {
    pub position: usize,
    pub root_length: usize,
}

/// An occurrence of `axaxa` starting at `position`; `period` is `|ax|`, so the
/// occurrence spans `2 * period + 1` letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OverlapOccurrence {
    pub position: usize,
    pub period: usize,
}

impl SquareOccurrence {
    pub fn holds_in(&self, w: &[Letter]) -> bool {
        let (i, p) = (self.position, self.root_length);
        p > 0 && i + 2 * p <= w.len() && w[i..i + p] == w[i + p..i + 2 * p]
    }

    pub fn root<'a>(&self, w: &'a [Letter]) -> &'a [Letter] {
        &w[self.position..self.position + self.root_length]
    }
}

impl CubeOccurrence {
    pub fn holds_in(&self, w: &[Letter]) -> bool {
        let (i, p) = (self.position, self.root_length);
        p > 0
            && i + 3 * p <= w.len()
            && w[i..i + p] == w[i + p..i + 2 * p]
            && w[i + p..i + 2 * p] == w[i + 2 * p..i + 3 * p]
    }

    pub fn root<'a>(&self, w: &'a [Letter]) -> &'a [Letter] {
        &w[self.position..self.position + self.root_length]
    }
}

impl OverlapOccurrence {
    pub fn holds_in(&self, w: &[Letter]) -> bool {
        let (i, p) = (self.position, self.period);
        p > 0 && i + 2 * p < w.len() && w[i..=i + p] == w[i + p..=i + 2 * p]
    }
}

/// Calls `hit(start)` for every `start` with `w[j] == w[j + period]` for all
/// `j` in `start..start + span`, in increasing order. Stops early when `hit`
/// returns `false`.
fn for_each_periodic_window(
    w: &[Letter],
    period: usize,
    span: usize,
    mut hit: impl FnMut(usize) -> bool,
) {
    if period == 0 || span == 0 || period + span > w.len() {
        return;
    }
    let mut run = 0;
    for j in 0..w.len() - period {
        if w[j] == w[j + period] {
            run += 1;
            if run >= span && !hit(j + 1 - span) {
                return;
            }
        } else {
            run = 0;
        }
    }
}

fn has_periodic_window(w: &[Letter], period: usize, span: usize) -> bool {
    let mut found = false;
    for_each_periodic_window(w, period, span, |_| {
        found = true;
        false
    });
    found
}

/// All squares with `min_root <= root_length <= max_root` (no upper bound when
/// `max_root` is `None`), sorted by position then root length.
pub fn find_squares(w: &[Letter], min_root: usize, max_root: Option<usize>) -> Vec<SquareOccurrence> {
    let upper = max_root.unwrap_or(usize::MAX).min(w.len() / 2);
    let mut out = Vec::new();
    for p in min_root.max(1)..=upper {
        for_each_periodic_window(w, p, p, |position| {
            out.push(SquareOccurrence {
                position,
                root_length: p,
            });
            true
        });
    }
    out.sort_unstable();
    out
}

pub fn has_square_with_root_at_least(w: &[Letter], min_root: usize) -> bool {
    (min_root.max(1)..=w.len() / 2).any(|p| has_periodic_window(w, p, p))
}

pub fn is_squarefree(w: &[Letter]) -> bool {
    !has_square_with_root_at_least(w, 1)
}

/// Largest root length of a square in `w`, or 0 when `w` is squarefree.
pub fn max_square_root(w: &[Letter]) -> usize {
    (1..=w.len() / 2)
        .rev()
        .find(|&p| has_periodic_window(w, p, p))
        .unwrap_or(0)
}

/// One square of the largest root length, the leftmost among those.
pub fn longest_square(w: &[Letter]) -> Option<SquareOccurrence> {
    for p in (1..=w.len() / 2).rev() {
        let mut found = None;
        for_each_periodic_window(w, p, p, |position| {
            found = Some(position);
            false
        });
        if let Some(position) = found {
            return Some(SquareOccurrence {
                position,
                root_length: p,
            });
        }
    }
    None
}

pub fn find_cubes(w: &[Letter]) -> Vec<CubeOccurrence> {
    let mut out = Vec::new();
    for p in 1..=w.len() / 3 {
        for_each_periodic_window(w, p, 2 * p, |position| {
            out.push(CubeOccurrence {
                position,
                root_length: p,
            });
            true
        });
    }
    out.sort_unstable();
    out
}

pub fn is_cubefree(w: &[Letter]) -> bool {
    (1..=w.len() / 3).all(|p| !has_periodic_window(w, p, 2 * p))
}

pub fn find_overlaps(w: &[Letter]) -> Vec<OverlapOccurrence> {
    let mut out = Vec::new();
    for p in 1..=w.len().saturating_sub(1) / 2 {
        for_each_periodic_window(w, p, p + 1, |position| {
            out.push(OverlapOccurrence { position, period: p });
            true
        });
    }
    out.sort_unstable();
    out
}

pub fn is_overlapfree(w: &[Letter]) -> bool {
    (1..=w.len().saturating_sub(1) / 2).all(|p| !has_periodic_window(w, p, p + 1))
}

// Repetitions ending exactly at the last letter. These are what a search
// needs when every proper prefix is already known to be clean.

/// Root length of a square suffix with root at least `min_root`, if any.
pub fn suffix_square(w: &[Letter], min_root: usize) -> Option<usize> {
    let n = w.len();
    (min_root.max(1)..=n / 2).find(|&p| w[n - 2 * p..n - p] == w[n - p..])
}

pub fn suffix_cube(w: &[Letter]) -> Option<usize> {
    let n = w.len();
    (1..=n / 3).find(|&p| w[n - 3 * p..n - p] == w[n - 2 * p..])
}

pub fn suffix_overlap(w: &[Letter]) -> Option<usize> {
    let n = w.len();
    (1..=n.saturating_sub(1) / 2).find(|&p| w[n - 2 * p - 1..n - p] == w[n - p - 1..])
}

/// A set of nonempty words to be avoided as factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Word>", into = "Vec<Word>")]
pub struct FactorSet {
    members: BTreeSet<Word>,
}

impl FactorSet {
    pub fn new(members: impl IntoIterator<Item = Word>) -> Result<Self> {
        let members: BTreeSet<Word> = members.into_iter().collect();
        if members.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyFactor);
        }
        Ok(FactorSet { members })
    }

    pub fn empty() -> Self {
        FactorSet::default()
    }

    /// Parses a comma- or whitespace-separated list such as `"12,13,21"`.
    pub fn parse(text: &str) -> Result<Self> {
        let members = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(parse_word)
            .collect::<Result<Vec<_>>>()?;
        FactorSet::new(members)
    }

    /// `{12, 13, 21, 32}`: the letter pairs the quaternary word never uses.
    pub fn forbidden_pairs() -> Self {
        FactorSet::parse("12,13,21,32").expect("static factor list")
    }

    /// `{12, 13, 21, 32, 231, 10302}`.
    pub fn forbidden_factors() -> Self {
        FactorSet::parse("12,13,21,32,231,10302").expect("static factor list")
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.members.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// First occurrence (leftmost start, then shortest member) of any member.
    pub fn first_occurrence(&self, w: &[Letter]) -> Option<(usize, &Word)> {
        self.members
            .iter()
            .filter_map(|f| find_factor(w, f).map(|i| (i, f)))
            .min_by_key(|(i, f)| (*i, f.len()))
    }

    /// A member occurring as a suffix of `w`.
    pub fn suffix_member(&self, w: &[Letter]) -> Option<&Word> {
        self.members.iter().find(|f| w.ends_with(f))
    }

    /// True iff the set is binary and closed under exchanging 0 and 1.
    pub fn is_swap_symmetric(&self) -> bool {
        self.members.iter().all(|f| {
            let swapped: Vec<Letter> = f.iter().map(|&a| 1 - a.min(1)).collect();
            f.iter().all(|&a| a < 2) && self.members.iter().any(|g| g.letters() == swapped)
        })
    }
}

impl TryFrom<Vec<Word>> for FactorSet {
    type Error = Error;

    fn try_from(members: Vec<Word>) -> Result<Self> {
        FactorSet::new(members)
    }
}

impl From<FactorSet> for Vec<Word> {
    fn from(set: FactorSet) -> Vec<Word> {
        set.members.into_iter().collect()
    }
}

pub fn find_factor(w: &[Letter], f: &[Letter]) -> Option<usize> {
    if f.is_empty() {
        return Some(0);
    }
    w.windows(f.len()).position(|window| window == f)
}

pub fn contains_factor(w: &[Letter], f: &[Letter]) -> bool {
    find_factor(w, f).is_some()
}

pub fn avoids_factors(w: &[Letter], factors: &FactorSet) -> bool {
    factors.iter().all(|f| !contains_factor(w, f))
}

/// Every square, cube and overlap of a word, plus its largest square root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepetitionReport {
    pub squares: Vec<SquareOccurrence>,
    pub cubes: Vec<CubeOccurrence>,
    pub overlaps: Vec<OverlapOccurrence>,
    pub max_square_root: usize,
}

impl RepetitionReport {
    pub fn analyze(w: &[Letter]) -> Self {
        Self::analyze_from(w, 1)
    }

    /// Like [`analyze`](Self::analyze) but only lists squares whose root is at
    /// least `min_root`. `max_square_root` always covers every square.
    pub fn analyze_from(w: &[Letter], min_root: usize) -> Self {
        RepetitionReport {
            squares: find_squares(w, min_root, None),
            cubes: find_cubes(w),
            overlaps: find_overlaps(w),
            max_square_root: max_square_root(w),
        }
    }

    pub fn holds_in(&self, w: &[Letter]) -> bool {
        self.squares.iter().all(|s| s.holds_in(w))
            && self.cubes.iter().all(|c| c.holds_in(w))
            && self.overlaps.iter().all(|o| o.holds_in(w))
            && (self.max_square_root == 0
                || SquareOccurrence::holds_in_some_position(w, self.max_square_root))
    }
}

impl SquareOccurrence {
    fn holds_in_some_position(w: &[Letter], root_length: usize) -> bool {
        (0..=w.len().saturating_sub(2 * root_length)).any(|position| {
            SquareOccurrence {
                position,
                root_length,
            }
            .holds_in(w)
        })
    }
}
