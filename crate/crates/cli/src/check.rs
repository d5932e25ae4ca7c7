use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::Args;
use repwords_core::{parse_word, FactorSet, RepetitionReport, Word};
use serde::Serialize;

use crate::output::{self, Format};
use crate::{CliError, NamedWord, EXIT_OK, EXIT_VIOLATION};

/// Largest word accepted by `check`, in letters.
pub const MAX_LETTERS: usize = 1_000_000;

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Word given on the command line.
    #[arg(long, conflicts_with_all = ["file", "named"])]
    word: Option<String>,
    /// File with one word per line.
    #[arg(long, conflicts_with = "named")]
    file: Option<PathBuf>,
    /// Check a prefix of a named word.
    #[arg(long, value_enum, requires = "length")]
    named: Option<NamedWord>,
    /// Prefix length for --named.
    #[arg(long, requires = "named")]
    length: Option<usize>,
    /// Forbid all squares. This is the default when no other rule is given.
    #[arg(long, conflicts_with = "min_square_root")]
    squarefree: bool,
    /// Forbid squares whose root has at least R letters.
    #[arg(long, value_name = "R", value_parser = clap::value_parser!(u64).range(1..))]
    min_square_root: Option<u64>,
    /// Forbid cubes.
    #[arg(long)]
    cubes: bool,
    /// Forbid overlaps.
    #[arg(long)]
    overlaps: bool,
    /// Comma-separated forbidden factors.
    #[arg(long, value_name = "LIST")]
    factors: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

struct Rules {
    min_square_root: Option<usize>,
    cubes: bool,
    overlaps: bool,
    factors: FactorSet,
}

#[derive(Serialize)]
struct FactorHit {
    position: usize,
    factor: Word,
}

#[derive(Serialize)]
struct WordResult {
    index: usize,
    length: usize,
    passed: bool,
    report: RepetitionReport,
    factor_hits: Vec<FactorHit>,
}

impl Rules {
    fn from_args(args: &CheckArgs) -> Result<Self, CliError> {
        let factors = match &args.factors {
            Some(list) => FactorSet::parse(list)?,
            None => FactorSet::empty(),
        };
        let explicit = args.squarefree
            || args.min_square_root.is_some()
            || args.cubes
            || args.overlaps
            || !factors.is_empty();
        let min_square_root = match args.min_square_root {
            Some(r) => Some(r as usize),
            None if args.squarefree || !explicit => Some(1),
            None => None,
        };
        Ok(Rules {
            min_square_root,
            cubes: args.cubes,
            overlaps: args.overlaps,
            factors,
        })
    }

    fn evaluate(&self, index: usize, w: &Word) -> WordResult {
        // Squares are listed only when forbidden, from the forbidden root length.
        let mut report = RepetitionReport::analyze_from(w, self.min_square_root.unwrap_or(1));
        if self.min_square_root.is_none() {
            report.squares.clear();
        }
        let mut factor_hits = Vec::new();
        for f in self.factors.iter() {
            for position in 0..(w.len() + 1).saturating_sub(f.len()) {
                if w[position..].starts_with(f) {
                    factor_hits.push(FactorHit {
                        position,
                        factor: f.clone(),
                    });
                }
            }
        }
        factor_hits.sort_by(|x, y| (x.position, &x.factor).cmp(&(y.position, &y.factor)));
        let passed = report.squares.is_empty()
            && (!self.cubes || report.cubes.is_empty())
            && (!self.overlaps || report.overlaps.is_empty())
            && factor_hits.is_empty();
        WordResult {
            index,
            length: w.len(),
            passed,
            report,
            factor_hits,
        }
    }
}

fn parse_line(line: &str, number: usize) -> Result<Word, CliError> {
    parse_word(line).map_err(|e| CliError::Input(format!("line {number}: {e}")))
}

fn read_words(args: &CheckArgs) -> Result<Vec<Word>, CliError> {
    if let Some(name) = args.named {
        let length = args.length.unwrap_or(0);
        if length > MAX_LETTERS {
            return Err(too_long(length));
        }
        return Ok(vec![name.stream().take_word(length)]);
    }
    if let Some(text) = &args.word {
        return Ok(vec![parse_line(text, 1)?]);
    }
    let text = match &args.file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            text
        }
    };
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| parse_line(line, i + 1))
        .collect()
}

fn too_long(length: usize) -> CliError {
    CliError::Input(format!("word of {length} letters exceeds the limit of {MAX_LETTERS}"))
}

pub fn run(args: CheckArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let rules = Rules::from_args(&args)?;
    let words = read_words(&args)?;
    if let Some(w) = words.iter().find(|w| w.len() > MAX_LETTERS) {
        return Err(too_long(w.len()));
    }
    let results: Vec<WordResult> = words
        .iter()
        .enumerate()
        .map(|(i, w)| rules.evaluate(i, w))
        .collect();
    match args.format {
        Format::Text => write_text(out, &rules, &results)?,
        Format::Json => output::write_json(out, &results)?,
    }
    Ok(if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn count_line(out: &mut impl Write, label: &str, count: usize, forbidden: bool) -> io::Result<()> {
    let note = if forbidden { "" } else { " (allowed)" };
    writeln!(out, "  {label}: {count}{note}")
}

fn write_text(out: &mut impl Write, rules: &Rules, results: &[WordResult]) -> io::Result<()> {
    for r in results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "word {}: {verdict}, length {}", r.index + 1, r.length)?;
        writeln!(out, "  max square root: {}", r.report.max_square_root)?;
        if let Some(min) = rules.min_square_root {
            writeln!(out, "  squares with root >= {min}: {}", r.report.squares.len())?;
            if let Some(s) = r.report.squares.first() {
                writeln!(out, "    first at {} with root length {}", s.position, s.root_length)?;
            }
        }
        count_line(out, "cubes", r.report.cubes.len(), rules.cubes)?;
        if rules.cubes {
            if let Some(c) = r.report.cubes.first() {
                writeln!(out, "    first at {} with root length {}", c.position, c.root_length)?;
            }
        }
        count_line(out, "overlaps", r.report.overlaps.len(), rules.overlaps)?;
        if rules.overlaps {
            if let Some(o) = r.report.overlaps.first() {
                writeln!(out, "    first at {} with period {}", o.position, o.period)?;
            }
        }
        if !rules.factors.is_empty() {
            writeln!(out, "  forbidden factors: {}", r.factor_hits.len())?;
            if let Some(h) = r.factor_hits.first() {
                writeln!(out, "    first {} at {}", h.factor, h.position)?;
            }
        }
    }
    Ok(())
}
