//! `repwords`: generate morphic words, check them for repetitions, re-run the
//! verification checks and explore avoidance trees.

mod check;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use repwords_core::search::DEFAULT_DEPTH_CAP;
use repwords_core::verification::CHECK_NAMES;
use repwords_core::{
    search_with, AvoidancePredicate, Error, FactorSet, Morphism, Traversal, Verifier, WordStream,
};

use crate::output::Format;

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP_REACHED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "repwords", version, about = "Repetitions in morphic words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of a named infinite word.
    Generate {
        name: NamedWord,
        /// Number of letters.
        length: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Look for squares, cubes, overlaps and forbidden factors in words.
    Check(check::CheckArgs),
    /// Re-run the verification checks.
    Verify {
        /// Run a single check.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(CHECK_NAMES))]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Explore the tree of words avoiding a set of repetitions.
    Search(SearchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NamedWord {
    /// Fixed point of the 10-uniform squarefree morphism at 0.
    HFixedPoint,
    /// Binary coding of that fixed point: cubefree, no squares of root >= 4.
    GOfH,
    /// The Thue-Morse word.
    ThueMorse,
}

impl NamedWord {
    pub fn stream(self) -> WordStream {
        let h = Morphism::quaternary_squarefree();
        let stream = match self {
            NamedWord::HFixedPoint => WordStream::fixed_point(&h, 0),
            NamedWord::GOfH => WordStream::mapped(&Morphism::binary_coding(), &h, 0),
            NamedWord::ThueMorse => WordStream::fixed_point(&Morphism::thue_morse(), 0),
        };
        stream.expect("named words are prolongable")
    }

    fn label(self) -> &'static str {
        match self {
            NamedWord::HFixedPoint => "h-fixed-point",
            NamedWord::GOfH => "g-of-h",
            NamedWord::ThueMorse => "thue-morse",
        }
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    /// Forbid all squares.
    #[arg(long, conflicts_with = "max_square_root")]
    squarefree: bool,
    /// Tolerate squares with root length up to R; longer roots are forbidden.
    #[arg(long, value_name = "R")]
    max_square_root: Option<usize>,
    #[arg(long)]
    no_cubes: bool,
    #[arg(long)]
    no_overlaps: bool,
    /// Comma-separated forbidden factors, e.g. 12,13,21.
    #[arg(long, value_name = "LIST")]
    factors: Option<String>,
    /// Root the tree at this single letter instead of the empty word.
    #[arg(long, value_name = "LETTER")]
    fix_first: Option<u8>,
    #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
    depth_cap: usize,
    #[arg(long, value_enum, default_value_t = TraversalArg::Dfs)]
    traversal: TraversalArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TraversalArg {
    Dfs,
    Bfs,
    Parallel,
}

impl From<TraversalArg> for Traversal {
    fn from(t: TraversalArg) -> Self {
        match t {
            TraversalArg::Dfs => Traversal::DepthFirst,
            TraversalArg::Bfs => Traversal::BreadthFirst,
            TraversalArg::Parallel => Traversal::Parallel,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(err) => {
            let _ = out.flush();
            eprintln!("repwords: {err}");
            EXIT_INPUT
        }
    };
    if let Err(err) = out.flush() {
        if err.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("repwords: {err}");
        }
    }
    ExitCode::from(code)
}

#[derive(Debug)]
pub enum CliError {
    Word(Error),
    Io(io::Error),
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Word(e) => e.fmt(f),
            CliError::Io(e) => e.fmt(f),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Word(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, CliError> {
    match command {
        Command::Generate { name, length, format } => {
            generate(name, length, format, out)?;
            Ok(EXIT_OK)
        }
        Command::Check(args) => check::run(args, out),
        Command::Verify { only, format } => verify(only, format, out),
        Command::Search(args) => search(args, out),
    }
}

const CHUNK: usize = 1 << 16;

fn generate(name: NamedWord, length: usize, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    let mut stream = name.stream();
    match format {
        Format::Text => {
            let mut remaining = length;
            while remaining > 0 {
                let chunk = stream.take_word(remaining.min(CHUNK));
                remaining -= chunk.len();
                out.write_all(chunk.to_string().as_bytes())?;
            }
            if length > 0 {
                writeln!(out)?;
            }
        }
        Format::Json => {
            let word = stream.take_word(length);
            output::write_json(
                out,
                &output::Generated {
                    name: name.label(),
                    length,
                    word,
                },
            )?;
        }
    }
    Ok(())
}

fn verify(only: Option<String>, format: Format, out: &mut impl Write) -> Result<u8, CliError> {
    let verifier = Verifier::standard();
    let reports = match only {
        Some(name) => vec![verifier.run(&name)?],
        None => verifier.run_all(),
    };
    match format {
        Format::Text => output::write_verification_text(out, &reports)?,
        Format::Json => output::write_json(out, &reports)?,
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn search(args: SearchArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let mut predicate = AvoidancePredicate::new(args.alphabet)?;
    if args.squarefree {
        predicate = predicate.forbid_squares_from(1);
    }
    if let Some(r) = args.max_square_root {
        predicate = predicate.forbid_squares_from(r + 1);
    }
    if args.no_cubes {
        predicate = predicate.forbid_cubes();
    }
    if args.no_overlaps {
        predicate = predicate.forbid_overlaps();
    }
    if let Some(list) = &args.factors {
        predicate = predicate.forbid_factors(FactorSet::parse(list)?);
    }
    let report = search_with(&predicate, args.fix_first, args.depth_cap, args.traversal.into())?;
    match args.format {
        Format::Text => output::write_search_text(out, &report, args.depth_cap)?,
        Format::Json => output::write_json(out, &report)?,
    }
    Ok(if report.finite { EXIT_OK } else { EXIT_CAP_REACHED })
}
