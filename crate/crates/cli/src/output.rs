use std::io::{self, Write};

use clap::ValueEnum;
use repwords_core::verification::Finding;
use repwords_core::{SearchReport, VerificationReport, Word};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
pub struct Generated {
    pub name: &'static str,
    pub length: usize,
    pub word: Word,
}

/// Pretty JSON followed by a newline. Field order follows the struct
/// definitions, so parsing and re-rendering gives the same bytes.
pub fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// How many words of a list are spelled out in text output.
const SHOWN: usize = 10;

fn write_words(out: &mut impl Write, label: &str, words: &[Word]) -> io::Result<()> {
    writeln!(out, "{label}: {}", words.len())?;
    for w in words.iter().take(SHOWN) {
        writeln!(out, "  {w}")?;
    }
    if words.len() > SHOWN {
        writeln!(out, "  ... {} more", words.len() - SHOWN)?;
    }
    Ok(())
}

pub fn write_search_text(out: &mut impl Write, report: &SearchReport, cap: usize) -> io::Result<()> {
    if report.finite {
        writeln!(out, "finite: true")?;
    } else {
        writeln!(out, "finite: false (depth cap {cap} reached; lengths are lower bounds)")?;
    }
    writeln!(out, "leaf_count: {}", report.leaf_count)?;
    writeln!(out, "height: {}", report.height)?;
    writeln!(out, "nodes_visited: {}", report.nodes_visited)?;
    writeln!(out, "longest_avoiding_length: {}", report.longest_avoiding_len())?;
    write_words(out, "deepest_words", &report.deepest_words)?;
    write_words(out, "maximal_avoiding", &report.maximal_avoiding)
}

fn describe(finding: &Finding) -> String {
    match finding {
        Finding::Square { position, root } => format!("square ({root})^2 at {position}"),
        Finding::Cube { position, root } => format!("cube ({root})^3 at {position}"),
        Finding::Factor { position, factor } => format!("factor {factor} at {position}"),
        Finding::Interior {
            occurrence: o,
            letter_image,
        } => format!(
            "({},{},{}) t={} u={} image={} u starts an image: {}",
            o.a, o.b, o.c, o.t, o.u, letter_image, o.u_prefixes_an_image
        ),
        Finding::Synchronization { synchronization: s, .. } => format!(
            "({},{},{}) s={} t={} u={} v={}",
            s.a, s.b, s.c, s.s, s.t, s.u, s.v
        ),
        Finding::Decomposition { decomposition: d } => {
            format!("u={} y={} v={}", d.u, d.y, d.v)
        }
        Finding::Counterexample { .. } => "no violation found".to_string(),
    }
}

pub fn write_verification_text(out: &mut impl Write, reports: &[VerificationReport]) -> io::Result<()> {
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        write!(out, "{status} {}", r.check_name)?;
        match (r.expected_count, r.actual_count) {
            (Some(e), Some(a)) => write!(out, " (expected {e}, actual {a})")?,
            (None, Some(a)) => write!(out, " (actual {a})")?,
            _ => {}
        }
        writeln!(out)?;
        for w in &r.witnesses {
            let input: Vec<String> = w.input.iter().map(Word::to_string).collect();
            writeln!(out, "  [{}] in {}: {}", input.join(" "), w.subject, describe(&w.finding))?;
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    writeln!(out, "{passed}/{} checks passed", reports.len())
}
