//! Mechanical checks of the finite case analyses behind the cubefree
//! construction: the quaternary morphism `h` (here
//! [`Morphism::quaternary_squarefree`]) and the binary coding `g`
//! ([`Morphism::binary_coding`]).
//!
//! Each check returns a [`VerificationReport`] whose witnesses can be
//! re-validated on their own by plain letter comparison.

mod decomposition;
mod synchronization;

pub use decomposition::{decompose_overlapfree, Decomposition, TRIMS};
pub use synchronization::{
    find_interior_occurrences, find_synchronizations, InteriorOccurrence, Synchronization,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::repetition::{
    avoids_factors, find_factor, find_squares, is_squarefree, longest_square, FactorSet,
};
use crate::search::{enumerate_passing, enumerate_passing_up_to, AvoidancePredicate};
use crate::word::{parse_word, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub passed: bool,
    pub expected_count: Option<usize>,
    pub actual_count: Option<usize>,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    fn new(name: &str) -> Self {
        VerificationReport {
            check_name: name.to_string(),
            passed: false,
            expected_count: None,
            actual_count: None,
            witnesses: Vec::new(),
        }
    }

    /// Every witness re-validates against its subject.
    pub fn witnesses_hold(&self) -> bool {
        self.witnesses.iter().all(Witness::revalidate)
    }
}

/// One finding about `subject`, the word derived from `input`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: Vec<Word>,
    pub subject: Word,
    pub finding: Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    Square {
        position: usize,
        root: Word,
    },
    Cube {
        position: usize,
        root: Word,
    },
    Factor {
        position: usize,
        factor: Word,
    },
    /// `subject` is `image(a) image(b)`.
    Interior {
        occurrence: InteriorOccurrence,
        letter_image: Word,
    },
    /// `subject` is `image(c)`.
    Synchronization {
        synchronization: Synchronization,
        image_a: Word,
        image_b: Word,
    },
    /// `subject` is the decomposed word.
    Decomposition { decomposition: Decomposition },
    /// `subject` should have contained a violation but does not.
    Counterexample { forbidden: FactorSet },
}

impl Witness {
    pub fn revalidate(&self) -> bool {
        let w = self.subject.letters();
        let repeated = |position: usize, root: &[Letter], times: usize| {
            let p = root.len();
            p > 0
                && position + times * p <= w.len()
                && (0..times).all(|k| &w[position + k * p..position + (k + 1) * p] == root)
        };
        match &self.finding {
            Finding::Square { position, root } => repeated(*position, root, 2),
            Finding::Cube { position, root } => repeated(*position, root, 3),
            Finding::Factor { position, factor } => {
                !factor.is_empty() && w.get(*position..*position + factor.len()) == Some(factor.letters())
            }
            Finding::Interior {
                occurrence,
                letter_image,
            } => {
                !occurrence.t.is_empty()
                    && !occurrence.u.is_empty()
                    && occurrence.t.concat(letter_image).concat(&occurrence.u) == self.subject
            }
            Finding::Synchronization {
                synchronization: s,
                image_a,
                image_b,
            } => {
                s.a != s.c
                    && s.b != s.c
                    && *image_a == s.s.concat(&s.t)
                    && *image_b == s.u.concat(&s.v)
                    && self.subject == s.s.concat(&s.v)
            }
            Finding::Decomposition { decomposition } => decomposition.holds_for(w),
            Finding::Counterexample { forbidden } => is_squarefree(w) && avoids_factors(w, forbidden),
        }
    }
}

fn square_witness(input: Vec<Word>, subject: &Word, position: usize, root_length: usize) -> Witness {
    Witness {
        input,
        finding: Finding::Square {
            position,
            root: subject.factor(position, position + root_length),
        },
        subject: subject.clone(),
    }
}

fn factor_witness(input: Vec<Word>, subject: &Word, position: usize, factor: &Word) -> Witness {
    Witness {
        input,
        subject: subject.clone(),
        finding: Finding::Factor {
            position,
            factor: factor.clone(),
        },
    }
}

/// A violation in `w`: its longest square, else a forbidden factor.
fn violation_in(w: &Word, forbidden: &FactorSet) -> Option<Witness> {
    if let Some(square) = longest_square(w) {
        return Some(square_witness(vec![], w, square.position, square.root_length));
    }
    forbidden
        .first_occurrence(w)
        .map(|(position, factor)| factor_witness(vec![], w, position, factor))
}

fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|s| parse_word(s).expect("static word")).collect()
}

/// All squarefree words of exactly `length` letters over `{0,1,2,3}` that avoid
/// `factors`, in lexicographic order.
pub fn enumerate_valid_words(length: usize, factors: &FactorSet) -> Vec<Word> {
    let predicate = AvoidancePredicate::squarefree(4)
        .expect("alphabet of four letters")
        .forbid_factors(factors.clone());
    enumerate_passing(&predicate, length)
}

/// No member of `factors` occurs inside a letter image or across the seam of
/// two adjacent images. Seam windows keep `max|f| - 1` letters on each side.
pub fn check_factor_closure(m: &Morphism, factors: &FactorSet) -> VerificationReport {
    let mut report = VerificationReport::new("h-factor-closure");
    let reach = factors.max_len().saturating_sub(1);
    let k = m.source_alphabet() as Letter;
    let mut record = |input: Vec<Word>, subject: Word| {
        for f in factors.iter() {
            if let Some(position) = find_factor(&subject, f) {
                report.witnesses.push(factor_witness(input.clone(), &subject, position, f));
            }
        }
    };
    for a in 0..k {
        let ia = &m.images()[a as usize];
        record(vec![Word::slice_over(&[a], k as usize)], ia.clone());
    }
    for a in 0..k {
        for b in 0..k {
            let ia = &m.images()[a as usize];
            let ib = &m.images()[b as usize];
            let left = ia.factor(ia.len().saturating_sub(reach), ia.len());
            let right = ib.factor(0, reach.min(ib.len()));
            record(vec![Word::slice_over(&[a, b], k as usize)], left.concat(&right));
        }
    }
    report.actual_count = Some(report.witnesses.len());
    report.expected_count = Some(0);
    report.passed = report.witnesses.is_empty();
    report
}

/// The check names reported by [`Verifier::run_all`], in order.
pub const CHECK_NAMES: [&str; 11] = [
    "h-factor-closure",
    "h-short-words-squarefree",
    "g-short-words-long-squares",
    "h-interior-occurrences",
    "h-synchronization",
    "g-interior-occurrences",
    "g-synchronization",
    "sandwich-1a3a2",
    "g-forbidden-images",
    "g-cube-shortlist",
    "overlap-free-decomposition",
];

/// Longest words checked by [`Verifier::check_overlapfree_decomposition`].
pub const DECOMPOSITION_MAX_LEN: usize = 20;

/// Runs the checks against a pair of morphisms. [`Verifier::standard`] uses
/// the real ones; other pairs are for fault injection.
#[derive(Clone, Debug)]
pub struct Verifier {
    pub quaternary: Morphism,
    pub coding: Morphism,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::standard()
    }
}

impl Verifier {
    pub fn standard() -> Self {
        Verifier {
            quaternary: Morphism::quaternary_squarefree(),
            coding: Morphism::binary_coding(),
        }
    }

    pub fn run_all(&self) -> Vec<VerificationReport> {
        CHECK_NAMES
            .par_iter()
            .map(|name| self.run(name).expect("known check name"))
            .collect()
    }

    pub fn run(&self, name: &str) -> Result<VerificationReport> {
        let mut report = match name {
            "h-factor-closure" => check_factor_closure(&self.quaternary, &FactorSet::forbidden_factors()),
            "h-short-words-squarefree" => self.check_h_short_words(),
            "g-short-words-long-squares" => self.check_g_short_words(),
            "h-interior-occurrences" => self.check_h_interior(),
            "h-synchronization" => self.check_h_synchronization(),
            "g-interior-occurrences" => self.check_g_interior(),
            "g-synchronization" => self.check_g_synchronization(),
            "sandwich-1a3a2" => self.check_sandwich(),
            "g-forbidden-images" => self.check_g_forbidden_images(),
            "g-cube-shortlist" => self.check_g_cube_shortlist(),
            "overlap-free-decomposition" => self.check_overlapfree_decomposition(),
            other => return Err(Error::UnknownName(other.to_string())),
        };
        report.check_name = name.to_string();
        Ok(report)
    }

    /// `h(w)` is squarefree for each of the 49 squarefree words of length 5
    /// avoiding `12, 13, 21, 32`.
    pub fn check_h_short_words(&self) -> VerificationReport {
        let mut report = VerificationReport::new("h-short-words-squarefree");
        let inputs = enumerate_valid_words(5, &FactorSet::forbidden_pairs());
        for w in &inputs {
            let Ok(image) = self.quaternary.apply(w) else {
                continue;
            };
            if let Some(square) = longest_square(&image) {
                report
                    .witnesses
                    .push(square_witness(vec![w.clone()], &image, square.position, square.root_length));
            }
        }
        report.expected_count = Some(49);
        report.actual_count = Some(inputs.len());
        report.passed = inputs.len() == 49 && report.witnesses.is_empty();
        report
    }

    /// `g(w)` has no square with root length 4 or more for each of the 41
    /// valid words of length 5.
    pub fn check_g_short_words(&self) -> VerificationReport {
        let mut report = VerificationReport::new("g-short-words-long-squares");
        let inputs = enumerate_valid_words(5, &FactorSet::forbidden_factors());
        for w in &inputs {
            let Ok(image) = self.coding.apply(w) else {
                continue;
            };
            if let Some(square) = find_squares(&image, 4, None).first() {
                report
                    .witnesses
                    .push(square_witness(vec![w.clone()], &image, square.position, square.root_length));
            }
        }
        report.expected_count = Some(41);
        report.actual_count = Some(inputs.len());
        report.passed = inputs.len() == 41 && report.witnesses.is_empty();
        report
    }

    fn interior_report(
        &self,
        name: &str,
        m: &Morphism,
        factors: &FactorSet,
        expected: &[(Letter, Letter, Letter, &str, &str)],
    ) -> VerificationReport {
        let mut report = VerificationReport::new(name);
        let found = match find_interior_occurrences(m) {
            Ok(found) => found,
            Err(_) => return report,
        };
        let admissible: Vec<_> = found.into_iter().filter(|o| o.pair_admissible(factors)).collect();
        let matches_expected = admissible.len() == expected.len()
            && admissible.iter().zip(expected).all(|(o, &(a, b, c, t, u))| {
                (o.a, o.b, o.c) == (a, b, c)
                    && o.t.to_string() == t
                    && o.u.to_string() == u
                    && !o.u_prefixes_an_image
            });
        report.expected_count = Some(expected.len());
        report.actual_count = Some(admissible.len());
        report.passed = matches_expected;
        report.witnesses = admissible
            .into_iter()
            .map(|o| Witness {
                input: vec![Word::slice_over(&[o.a, o.b], m.source_alphabet())],
                subject: m.images()[o.a as usize].concat(&m.images()[o.b as usize]),
                finding: Finding::Interior {
                    letter_image: m.images()[o.c as usize].clone(),
                    occurrence: o,
                },
            })
            .collect();
        report
    }

    fn synchronization_report(
        &self,
        name: &str,
        m: &Morphism,
        expected: &[(Letter, Letter, Letter, &str, &str, &str, &str)],
    ) -> VerificationReport {
        let mut report = VerificationReport::new(name);
        let found = match find_synchronizations(m) {
            Ok(found) => found,
            Err(_) => return report,
        };
        let matches_expected = found.len() == expected.len()
            && found.iter().zip(expected).all(|(f, &(a, b, c, s, t, u, v))| {
                (f.a, f.b, f.c) == (a, b, c)
                    && [&f.s, &f.t, &f.u, &f.v].map(|x| x.to_string()) == [s, t, u, v]
            });
        report.expected_count = Some(expected.len());
        report.actual_count = Some(found.len());
        report.passed = matches_expected;
        report.witnesses = found
            .into_iter()
            .map(|f| Witness {
                input: vec![Word::slice_over(&[f.a, f.b, f.c], m.source_alphabet())],
                subject: m.images()[f.c as usize].clone(),
                finding: Finding::Synchronization {
                    image_a: m.images()[f.a as usize].clone(),
                    image_b: m.images()[f.b as usize].clone(),
                    synchronization: f,
                },
            })
            .collect();
        report
    }

    /// Exactly one nontrivial interior occurrence, `h(31) = 020301 h(2) 0102`,
    /// and `0102` starts no image.
    pub fn check_h_interior(&self) -> VerificationReport {
        self.interior_report(
            "h-interior-occurrences",
            &self.quaternary,
            &FactorSet::forbidden_pairs(),
            &[(3, 1, 2, "020301", "0102")],
        )
    }

    pub fn check_h_synchronization(&self) -> VerificationReport {
        self.synchronization_report("h-synchronization", &self.quaternary, &[])
    }

    /// On the pairs that can occur, exactly `g(01) = 010 g(3) 110`,
    /// `g(10) = 01 g(2) 0011` and `g(23) = 0110 g(1) 10`.
    pub fn check_g_interior(&self) -> VerificationReport {
        self.interior_report(
            "g-interior-occurrences",
            &self.coding,
            &FactorSet::forbidden_factors(),
            &[(0, 1, 3, "010", "110"), (1, 0, 2, "01", "0011"), (2, 3, 1, "0110", "10")],
        )
    }

    pub fn check_g_synchronization(&self) -> VerificationReport {
        self.synchronization_report(
            "g-synchronization",
            &self.coding,
            &[(2, 1, 3, "0110", "01", "0101", "10")],
        )
    }

    /// Every `w = 1 α 3 α 2` contains a square or a forbidden factor.
    ///
    /// Short `α` (at most 4 letters) are checked outright. Longer ones are
    /// written `α = P w' S` with `|P| = 3`, `|S| = 2` and `w'` unknown; the
    /// factors `1P`, `S3P` and `S2` are then fully determined. When none of
    /// them violates, the case splits into `w'` empty (a concrete word) and
    /// `w'` ending in each letter `x` (suffix `xS`), recursively.
    pub fn check_sandwich(&self) -> VerificationReport {
        let mut report = VerificationReport::new("sandwich-1a3a2");
        let forbidden = FactorSet::forbidden_factors();
        let sandwich = |alpha: &[Letter]| {
            let mut w = vec![1];
            w.extend_from_slice(alpha);
            w.push(3);
            w.extend_from_slice(alpha);
            w.push(2);
            Word::slice_over(&w, 4)
        };
        let mut closed = 0;
        let mut cases = 0;

        for len in 0..=4 {
            for alpha in enumerate_all(4, len) {
                cases += 1;
                let w = sandwich(&alpha);
                match violation_in(&w, &forbidden) {
                    Some(_) => closed += 1,
                    None => report.witnesses.push(counterexample(vec![Word::slice_over(&alpha, 4)], &w, &forbidden)),
                }
            }
        }

        for head in enumerate_all(4, 3) {
            for tail in enumerate_all(4, 2) {
                cases += 1;
                let mut evidence = Vec::new();
                if close_sandwich(&head, tail.clone(), &forbidden, &sandwich, 0, &mut evidence) {
                    closed += 1;
                }
                // Only tuples that needed a case split are worth reporting.
                if evidence.len() > 1 || evidence.iter().any(|w| matches!(w.finding, Finding::Counterexample { .. })) {
                    report.witnesses.extend(evidence);
                }
            }
        }

        report.expected_count = Some(cases);
        report.actual_count = Some(closed);
        report.passed = closed == cases;
        report
    }

    /// The squares and cube that show why each of `12, 13, 21, 32, 231,
    /// 10302` has to be excluded before applying `g`.
    pub fn check_g_forbidden_images(&self) -> VerificationReport {
        let mut report = VerificationReport::new("g-forbidden-images");
        let claims: [(&str, &str, usize); 8] = [
            ("12", "0110", 2),
            ("12", "1100", 2),
            ("12", "1001", 2),
            ("13", "0110", 2),
            ("21", "01", 3),
            ("32", "1001", 2),
            ("231", "10010110", 2),
            ("10302", "100100110110", 2),
        ];
        let mut confirmed = 0;
        for (input, root, power) in claims {
            let input = parse_word(input).expect("static word");
            let root = parse_word(root).expect("static word");
            let Ok(image) = self.coding.apply(&input) else {
                continue;
            };
            let pattern: Vec<Letter> = root.iter().copied().cycle().take(root.len() * power).collect();
            if let Some(position) = find_factor(&image, &pattern) {
                confirmed += 1;
                let finding = if power == 3 {
                    Finding::Cube { position, root }
                } else {
                    Finding::Square { position, root }
                };
                report.witnesses.push(Witness {
                    input: vec![input],
                    subject: image,
                    finding,
                });
            }
        }
        report.expected_count = Some(claims.len());
        report.actual_count = Some(confirmed);
        report.passed = confirmed == claims.len();
        report
    }

    /// None of the ten short cubes occurs in `g(w)` for the 16 valid words of
    /// length 3.
    pub fn check_g_cube_shortlist(&self) -> VerificationReport {
        let mut report = VerificationReport::new("g-cube-shortlist");
        let cubes = words(&[
            "000",
            "111",
            "010101",
            "101010",
            "001001001",
            "010010010",
            "011011011",
            "100100100",
            "101101101",
            "110110110",
        ]);
        let inputs = enumerate_valid_words(3, &FactorSet::forbidden_factors());
        for w in &inputs {
            let Ok(image) = self.coding.apply(w) else {
                continue;
            };
            for cube in &cubes {
                if let Some(position) = find_factor(&image, cube) {
                    report.witnesses.push(factor_witness(vec![w.clone()], &image, position, cube));
                }
            }
        }
        report.expected_count = Some(16);
        report.actual_count = Some(inputs.len());
        report.passed = inputs.len() == 16 && report.witnesses.is_empty();
        report
    }

    /// Every overlap-free binary word with 1 to [`DECOMPOSITION_MAX_LEN`]
    /// letters has a decomposition `u μ(y) v`.
    pub fn check_overlapfree_decomposition(&self) -> VerificationReport {
        let mut report = VerificationReport::new("overlap-free-decomposition");
        let predicate = AvoidancePredicate::new(2).expect("binary").forbid_overlaps();
        let inputs = enumerate_passing_up_to(&predicate, DECOMPOSITION_MAX_LEN);
        for x in &inputs {
            let found = decompose_overlapfree(x).unwrap_or_default();
            if found.is_empty() {
                report.witnesses.push(counterexample(vec![x.clone()], x, &FactorSet::empty()));
            }
        }
        report.actual_count = Some(inputs.len());
        report.passed = !inputs.is_empty() && report.witnesses.is_empty();
        report
    }
}

fn counterexample(input: Vec<Word>, w: &Word, forbidden: &FactorSet) -> Witness {
    Witness {
        input,
        subject: w.clone(),
        finding: Finding::Counterexample {
            forbidden: forbidden.clone(),
        },
    }
}

/// All words of length `len` over `{0, .., k-1}` in lexicographic order.
fn enumerate_all(k: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as Letter).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

/// Longest chain of suffix extensions tried before giving up on a tuple.
const MAX_SPLIT_DEPTH: usize = 8;

/// Closes the case `α = head w' tail` (see [`Verifier::check_sandwich`]).
/// Pushes one witness per closed leaf of the case split.
fn close_sandwich(
    head: &[Letter],
    tail: Vec<Letter>,
    forbidden: &FactorSet,
    sandwich: &impl Fn(&[Letter]) -> Word,
    depth: usize,
    evidence: &mut Vec<Witness>,
) -> bool {
    let input = vec![Word::slice_over(head, 4), Word::slice_over(&tail, 4)];
    let segments = [
        [&[1][..], head].concat(),
        [&tail[..], &[3], head].concat(),
        [&tail[..], &[2]].concat(),
    ];
    for segment in segments {
        let segment = Word::slice_over(&segment, 4);
        if let Some(mut witness) = violation_in(&segment, forbidden) {
            witness.input = input;
            evidence.push(witness);
            return true;
        }
    }
    if depth == MAX_SPLIT_DEPTH {
        evidence.push(counterexample(input, &sandwich(&[head, &tail[..]].concat()), forbidden));
        return false;
    }
    // w' empty: α is fully known
    let concrete = sandwich(&[head, &tail[..]].concat());
    match violation_in(&concrete, forbidden) {
        Some(mut witness) => {
            witness.input = input.clone();
            evidence.push(witness);
        }
        None => {
            evidence.push(counterexample(input, &concrete, forbidden));
            return false;
        }
    }
    (0..4).all(|x| {
        let mut longer = vec![x];
        longer.extend_from_slice(&tail);
        close_sandwich(head, longer, forbidden, sandwich, depth + 1, evidence)
    })
}

/// Runs every check with the standard morphisms.
pub fn run_all() -> Vec<VerificationReport> {
    Verifier::standard().run_all()
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

pub fn check_h_short_words() -> VerificationReport {
    Verifier::standard().check_h_short_words()
}

pub fn check_g_short_words() -> VerificationReport {
    Verifier::standard().check_g_short_words()
}

pub fn check_sandwich() -> VerificationReport {
    Verifier::standard().check_sandwich()
}

pub fn check_g_forbidden_images() -> VerificationReport {
    Verifier::standard().check_g_forbidden_images()
}

pub fn check_g_cube_shortlist() -> VerificationReport {
    Verifier::standard().check_g_cube_shortlist()
}
