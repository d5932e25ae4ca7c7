//! Exhaustive avoidance-tree search.
//!
//! The tree is rooted at the empty word (or at a single fixed letter). A node
//! whose label passes the predicate has one child per letter; a node whose
//! label contains a violation is a leaf. Since the predicates here are closed
//! under taking factors, the tree is finite iff every long enough word
//! contains a violation, and its height is one more than the length of the
//! longest avoiding word.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repetition::{
    avoids_factors, has_square_with_root_at_least, is_cubefree, is_overlapfree, suffix_cube,
    suffix_overlap, suffix_square, FactorSet,
};
use crate::word::{Letter, Word, MAX_ALPHABET};

/// Depth cap used when none is given.
pub const DEFAULT_DEPTH_CAP: usize = 64;

/// Which words count as violating: squares with a root of at least some
/// length, cubes, overlaps and explicit factors, in any combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AvoidancePredicate {
    pub alphabet_size: usize,
    /// Squares whose root length is at least this are forbidden.
    pub min_forbidden_square_root: Option<usize>,
    pub forbid_cubes: bool,
    pub forbid_overlaps: bool,
    pub forbidden_factors: FactorSet,
}

impl AvoidancePredicate {
    pub fn new(alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet {
                size: alphabet_size,
                max: MAX_ALPHABET,
            });
        }
        Ok(AvoidancePredicate {
            alphabet_size,
            min_forbidden_square_root: None,
            forbid_cubes: false,
            forbid_overlaps: false,
            forbidden_factors: FactorSet::empty(),
        })
    }

    pub fn squarefree(alphabet_size: usize) -> Result<Self> {
        Ok(Self::new(alphabet_size)?.forbid_squares_from(1))
    }

    /// Forbids squares `xx` with `|x| >= min_root`.
    pub fn forbid_squares_from(mut self, min_root: usize) -> Self {
        self.min_forbidden_square_root = Some(min_root.max(1));
        self
    }

    pub fn forbid_cubes(mut self) -> Self {
        self.forbid_cubes = true;
        self
    }

    pub fn forbid_overlaps(mut self) -> Self {
        self.forbid_overlaps = true;
        self
    }

    pub fn forbid_factors(mut self, factors: FactorSet) -> Self {
        self.forbidden_factors = factors;
        self
    }

    /// Full evaluation: true iff `w` contains no forbidden repetition or factor.
    pub fn passes(&self, w: &[Letter]) -> bool {
        w.iter().all(|&a| (a as usize) < self.alphabet_size)
            && !self
                .min_forbidden_square_root
                .is_some_and(|m| has_square_with_root_at_least(w, m))
            && (!self.forbid_cubes || is_cubefree(w))
            && (!self.forbid_overlaps || is_overlapfree(w))
            && avoids_factors(w, &self.forbidden_factors)
    }

    /// Same answer as [`passes`](Self::passes), provided every proper prefix
    /// of `w` passes: only violations ending at the last letter are examined.
    /// On other inputs the result is unspecified.
    pub fn passes_incremental(&self, w: &[Letter]) -> bool {
        let Some(&last) = w.last() else {
            return true;
        };
        (last as usize) < self.alphabet_size
            && !self
                .min_forbidden_square_root
                .is_some_and(|m| suffix_square(w, m).is_some())
            && !(self.forbid_cubes && suffix_cube(w).is_some())
            && !(self.forbid_overlaps && suffix_overlap(w).is_some())
            && self.forbidden_factors.suffix_member(w).is_none()
    }

    /// True when exchanging the letters 0 and 1 maps passing words to passing
    /// words, so fixing the first letter halves the tree.
    pub fn is_swap_symmetric(&self) -> bool {
        self.alphabet_size == 2 && self.forbidden_factors.is_swap_symmetric()
    }
}

pub fn incremental_violation_check(w: &[Letter], p: &AvoidancePredicate) -> bool {
    p.passes_incremental(w)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Traversal {
    #[default]
    DepthFirst,
    /// Queue-driven level order.
    BreadthFirst,
    /// Depth-first over disjoint subtrees on the rayon pool.
    Parallel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    /// False when some node at the depth cap still passed.
    pub finite: bool,
    pub leaf_count: usize,
    /// Length of the longest leaf label.
    pub height: usize,
    pub nodes_visited: usize,
    /// Leaves of length `height`, sorted.
    pub deepest_words: Vec<Word>,
    /// The longest passing words, sorted. When the cap was reached these are
    /// the passing words at the cap.
    pub maximal_avoiding: Vec<Word>,
}

impl SearchReport {
    /// Length of the longest passing word found.
    pub fn longest_avoiding_len(&self) -> usize {
        self.maximal_avoiding.first().map_or(0, |w| w.len())
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    leaf_count: usize,
    nodes_visited: usize,
    height: usize,
    deepest: Vec<Vec<Letter>>,
    longest_pass: usize,
    maximal: Vec<Vec<Letter>>,
    live: bool,
}

impl Tally {
    /// Records one node. Returns whether it should be expanded.
    fn visit(&mut self, p: &AvoidancePredicate, w: &[Letter], cap: usize) -> bool {
        self.nodes_visited += 1;
        if !p.passes_incremental(w) {
            self.leaf_count += 1;
            keep_longest(&mut self.height, &mut self.deepest, w);
            return false;
        }
        keep_longest(&mut self.longest_pass, &mut self.maximal, w);
        if w.len() >= cap {
            self.live = true;
            return false;
        }
        true
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.leaf_count += other.leaf_count;
        self.nodes_visited += other.nodes_visited;
        self.live |= other.live;
        merge_longest(&mut self.height, &mut self.deepest, other.height, other.deepest);
        merge_longest(&mut self.longest_pass, &mut self.maximal, other.longest_pass, other.maximal);
        self
    }

    fn into_report(self, alphabet: usize) -> SearchReport {
        let finish = |mut words: Vec<Vec<Letter>>| {
            words.sort_unstable();
            words.dedup();
            words
                .into_iter()
                .map(|w| Word::from_trusted(w, alphabet))
                .collect::<Vec<_>>()
        };
        SearchReport {
            finite: !self.live,
            leaf_count: self.leaf_count,
            height: self.height,
            nodes_visited: self.nodes_visited,
            deepest_words: finish(self.deepest),
            maximal_avoiding: finish(self.maximal),
        }
    }
}

fn keep_longest(best: &mut usize, words: &mut Vec<Vec<Letter>>, w: &[Letter]) {
    if w.len() > *best || words.is_empty() {
        *best = w.len();
        words.clear();
    }
    if w.len() == *best {
        words.push(w.to_vec());
    }
}

fn merge_longest(best: &mut usize, words: &mut Vec<Vec<Letter>>, other: usize, mut others: Vec<Vec<Letter>>) {
    if others.is_empty() {
        return;
    }
    if other > *best || words.is_empty() {
        *best = other;
        *words = others;
    } else if other == *best {
        words.append(&mut others);
    }
}

/// Depth-first walk from `root`. `visit` decides which nodes get children.
fn walk(
    alphabet: usize,
    root: &[Letter],
    mut visit: impl FnMut(&[Letter]) -> bool,
) {
    let mut label = root.to_vec();
    if !visit(&label) {
        return;
    }
    // next child letter to try, one entry per expanded node on the path
    let mut pending: Vec<u8> = vec![0];
    while let Some(next) = pending.last_mut() {
        if *next as usize == alphabet {
            pending.pop();
            label.pop();
            continue;
        }
        let a = *next;
        *next += 1;
        label.push(a);
        if visit(&label) {
            pending.push(0);
        } else {
            label.pop();
        }
    }
}

fn root_label(p: &AvoidancePredicate, fix_first_letter: Option<Letter>) -> Result<Vec<Letter>> {
    match fix_first_letter {
        Some(a) if (a as usize) >= p.alphabet_size => Err(Error::LetterOutOfRange {
            letter: a as usize,
            alphabet: p.alphabet_size,
        }),
        Some(a) => Ok(vec![a]),
        None => Ok(Vec::new()),
    }
}

/// Explores the avoidance tree depth-first. See [`search_with`].
pub fn search(
    p: &AvoidancePredicate,
    fix_first_letter: Option<Letter>,
    depth_cap: usize,
) -> Result<SearchReport> {
    search_with(p, fix_first_letter, depth_cap, Traversal::DepthFirst)
}

/// Explores the avoidance tree rooted at the empty word, or at the single
/// letter `fix_first_letter`. Passing nodes at `depth_cap` letters are not
/// expanded; if there are any the report has `finite == false`. The report
/// does not depend on the traversal.
pub fn search_with(
    p: &AvoidancePredicate,
    fix_first_letter: Option<Letter>,
    depth_cap: usize,
    traversal: Traversal,
) -> Result<SearchReport> {
    if depth_cap == 0 {
        return Err(Error::InvalidDepthCap);
    }
    let root = root_label(p, fix_first_letter)?;
    let tally = match traversal {
        Traversal::DepthFirst => depth_first(p, &root, depth_cap),
        Traversal::BreadthFirst => breadth_first(p, root, depth_cap),
        Traversal::Parallel => parallel(p, root, depth_cap),
    };
    Ok(tally.into_report(p.alphabet_size))
}

fn depth_first(p: &AvoidancePredicate, root: &[Letter], cap: usize) -> Tally {
    let mut tally = Tally::default();
    walk(p.alphabet_size, root, |w| tally.visit(p, w, cap));
    tally
}

fn breadth_first(p: &AvoidancePredicate, root: Vec<Letter>, cap: usize) -> Tally {
    let mut tally = Tally::default();
    let mut queue = VecDeque::from([root]);
    while let Some(label) = queue.pop_front() {
        if tally.visit(p, &label, cap) {
            for a in 0..p.alphabet_size as Letter {
                let mut child = label.clone();
                child.push(a);
                queue.push_back(child);
            }
        }
    }
    tally
}

fn parallel(p: &AvoidancePredicate, root: Vec<Letter>, cap: usize) -> Tally {
    let wanted = 8 * rayon::current_num_threads().max(1);
    let mut tally = Tally::default();
    let mut level = vec![root];
    // Expand level by level until there are enough independent subtrees.
    while !level.is_empty() && level.len() < wanted {
        let mut next = Vec::new();
        for label in level {
            if tally.visit(p, &label, cap) {
                for a in 0..p.alphabet_size as Letter {
                    let mut child = label.clone();
                    child.push(a);
                    next.push(child);
                }
            }
        }
        level = next;
    }
    level
        .par_iter()
        .map(|label| depth_first(p, label, cap))
        .reduce(Tally::default, Tally::merge)
        .merge(tally)
}

/// Every passing word of exactly `length` letters, in lexicographic order.
pub fn enumerate_passing(p: &AvoidancePredicate, length: usize) -> Vec<Word> {
    let mut out = Vec::new();
    walk(p.alphabet_size, &[], |w| {
        if !p.passes_incremental(w) {
            return false;
        }
        if w.len() == length {
            out.push(Word::from_trusted(w.to_vec(), p.alphabet_size));
            return false;
        }
        true
    });
    out
}

/// Every passing word with between 1 and `max_length` letters, shortest
/// first, lexicographic within one length.
pub fn enumerate_passing_up_to(p: &AvoidancePredicate, max_length: usize) -> Vec<Word> {
    let mut out = Vec::new();
    walk(p.alphabet_size, &[], |w| {
        if !p.passes_incremental(w) {
            return false;
        }
        if !w.is_empty() {
            out.push(Word::from_trusted(w.to_vec(), p.alphabet_size));
        }
        w.len() < max_length
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongestAvoiding {
    pub length: usize,
    pub words: Vec<Word>,
    /// True when the tree was cut off by the cap, so `length` is only a lower
    /// bound on how long avoiding words get.
    pub lower_bound: bool,
}

pub fn longest_avoiding(
    p: &AvoidancePredicate,
    fix_first_letter: Option<Letter>,
    depth_cap: usize,
) -> Result<LongestAvoiding> {
    let report = search(p, fix_first_letter, depth_cap)?;
    Ok(LongestAvoiding {
        length: report.longest_avoiding_len(),
        lower_bound: !report.finite,
        words: report.maximal_avoiding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn cube_and_long_square() -> AvoidancePredicate {
        AvoidancePredicate::new(2).unwrap().forbid_cubes().forbid_squares_from(3)
    }

    #[test]
    fn incremental_examples() {
        let sf = AvoidancePredicate::squarefree(2).unwrap();
        assert!(!sf.passes_incremental(&w("00")));
        let p = cube_and_long_square();
        assert!(p.passes_incremental(&w("001100101")));
        assert!(p.passes(&w("001100101")));
        let cubes = AvoidancePredicate::new(2).unwrap().forbid_cubes();
        assert!(!cubes.passes_incremental(&w("000")));
        assert!(sf.passes_incremental(&[]));
        assert!(!sf.passes_incremental(&[2]));
    }

    #[test]
    fn binary_squares_unavoidable_at_four() {
        let sf = AvoidancePredicate::squarefree(2).unwrap();
        let report = search(&sf, Some(0), 10).unwrap();
        assert!(report.finite);
        assert_eq!(report.height, 4);
        assert_eq!(report.leaf_count, 4);
        assert_eq!(report.maximal_avoiding, vec![w("010")]);
        assert_eq!(report.deepest_words, vec![w("0100"), w("0101")]);
    }

    #[test]
    fn cube_and_long_square_tree() {
        let report = search(&cube_and_long_square(), Some(0), 40).unwrap();
        assert!(report.finite);
        assert_eq!(report.leaf_count, 289);
        assert_eq!(report.height, 30);
        assert_eq!(report.nodes_visited, 577);
        assert_eq!(report.maximal_avoiding, vec![w("00110010100110101100101001100")]);
        assert_eq!(report.deepest_words.len(), 2);
    }

    #[test]
    fn traversals_agree() {
        let p = cube_and_long_square();
        let dfs = search_with(&p, Some(0), 40, Traversal::DepthFirst).unwrap();
        for t in [Traversal::BreadthFirst, Traversal::Parallel] {
            assert_eq!(search_with(&p, Some(0), 40, t).unwrap(), dfs);
        }
        let capped = search_with(&p, None, 12, Traversal::DepthFirst).unwrap();
        for t in [Traversal::BreadthFirst, Traversal::Parallel] {
            assert_eq!(search_with(&p, None, 12, t).unwrap(), capped);
        }
    }

    #[test]
    fn cap_reached_is_not_finite() {
        let p = AvoidancePredicate::new(2).unwrap().forbid_cubes().forbid_squares_from(4);
        let report = search(&p, Some(0), 20).unwrap();
        assert!(!report.finite);
        assert!(report.maximal_avoiding.iter().all(|w| w.len() == 20 && p.passes(w)));
        let longest = longest_avoiding(&p, Some(0), 20).unwrap();
        assert!(longest.lower_bound);
        assert_eq!(longest.length, 20);
    }

    #[test]
    fn overlap_free_short_squares_is_finite() {
        let p = AvoidancePredicate::new(2).unwrap().forbid_overlaps().forbid_squares_from(2);
        let longest = longest_avoiding(&p, Some(0), 64).unwrap();
        assert!(!longest.lower_bound);
        assert_eq!(longest.length, 8);
        assert_eq!(longest.words, vec![w("00110010"), w("01001100"), w("01001101")]);
    }

    #[test]
    fn errors() {
        let p = cube_and_long_square();
        assert_eq!(search(&p, Some(0), 0).unwrap_err(), Error::InvalidDepthCap);
        assert!(search(&p, Some(2), 5).is_err());
        assert!(AvoidancePredicate::new(0).is_err());
    }

    #[test]
    fn enumerations() {
        let p = AvoidancePredicate::squarefree(4)
            .unwrap()
            .forbid_factors(FactorSet::forbidden_pairs());
        let words = enumerate_passing(&p, 5);
        assert_eq!(words.len(), 49);
        assert!(words.windows(2).all(|pair| pair[0] < pair[1]));
        let up_to = enumerate_passing_up_to(&AvoidancePredicate::squarefree(2).unwrap(), 5);
        assert_eq!(up_to, vec![w("0"), w("1"), w("01"), w("10"), w("010"), w("101")]);
    }
}
