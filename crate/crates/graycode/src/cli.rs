//! The `graycode` command-line front end.
//!
//! Exit status: 0 on success, 1 on a semantic failure (failed verification,
//! invalid word or permutation, refused size), 2 on a usage error.

use std::ffi::OsString;
use std::io::{self, BufRead, BufWriter, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use graycode_core::{
    check_binary_properties, check_coverage, check_perm_properties, cycle_stream, distance_bfs, enumerate_avoiders,
    gap_profile, path_stream, psi, psi_inv, BinaryWord, CheckOptions, Listing, PermPropertySet, Permutation,
    PropertyReport, PropertySet, Variant, AVOIDER_CAP,
};

use crate::config::{oracle_cap, GENERATION_LIMIT};
use crate::format::{self, Format};
use crate::{AppError, Result};

#[derive(Debug, Parser)]
#[command(name = "graycode", version, about = "Gray codes on the augmentation graph and 132-312-avoiding permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every binary word of length N.
    GenBinary(GenArgs),
    /// List every 132-312-avoiding permutation of size N.
    GenPerm(GenArgs),
    /// Check a listing against a property set.
    Verify(VerifyArgs),
    /// Map a binary word to its permutation.
    Psi {
        #[arg(long)]
        word: BinaryWord,
    },
    /// Map a 132-312-avoiding permutation back to its binary word.
    PsiInv {
        #[arg(long)]
        perm: Permutation,
    },
    /// Enumerate the permutations of a size avoiding every given pattern.
    Avoiders {
        #[arg(long)]
        size: usize,
        /// Comma-separated patterns, e.g. 132,312.
        #[arg(long, value_delimiter = ',', required = true)]
        patterns: Vec<Permutation>,
    },
    /// Breadth-first graph distance between two words.
    Distance {
        #[arg(long)]
        u: BinaryWord,
        #[arg(long)]
        v: BinaryWord,
    },
    /// Gap class of every consecutive pair of a binary listing.
    GapProfile(SourceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenVariant {
    Cycle,
    Path,
}

impl From<GenVariant> for Variant {
    fn from(v: GenVariant) -> Self {
        match v {
            GenVariant::Cycle => Variant::Cycle,
            GenVariant::Path => Variant::Path,
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    variant: GenVariant,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
    /// Allow word lengths above the generation limit.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SourceVariant {
    Cycle,
    Path,
    PermCycle,
    PermPath,
}

#[derive(Debug, Args)]
struct SourceArgs {
    #[arg(long, value_enum, requires = "n", required_unless_present = "stdin", conflicts_with = "stdin")]
    variant: Option<SourceVariant>,
    #[arg(long, requires = "variant", conflicts_with = "stdin")]
    n: Option<usize>,
    /// Read the listing from standard input (lines or JSON).
    #[arg(long)]
    stdin: bool,
    /// Allow word lengths above the generation limit.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SetArg {
    #[value(name = "L")]
    L,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum)]
    set: Option<SetArg>,
    /// Accept the splice pair of A3/B3 in either order.
    #[arg(long)]
    unordered_pairs: bool,
    /// Report every counterexample rather than only the first.
    #[arg(long)]
    all: bool,
}

enum Loaded {
    Binary(Listing),
    Perm(Vec<Permutation>),
}

/// Parses `args` (program name first) and executes the verb. Returns the
/// process exit status.
pub fn run<I, T, R, W, E>(args: I, mut stdin: R, stdout: W, mut stderr: E) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                let _ = write!(stderr, "{}", err.render());
                2
            } else {
                let mut out = stdout;
                let _ = write!(out, "{}", err.render());
                0
            };
            return code;
        }
    };
    let mut out = BufWriter::new(stdout);
    let outcome = execute(cli.command, &mut stdin, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(AppError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(stderr, "graycode: {e}");
            1
        }
    }
}

fn check_size(words: usize, force: bool) -> Result<()> {
    if words > GENERATION_LIMIT && !force {
        return Err(AppError::Input(format!(
            "refusing word length {words} (> {GENERATION_LIMIT}) without --force: output would have 2^{words} entries"
        )));
    }
    Ok(())
}

fn binary_stream(variant: Variant, n: usize) -> Result<graycode_core::SpliceStream> {
    Ok(match variant {
        Variant::Cycle => cycle_stream(n)?,
        Variant::Path => path_stream(n)?,
    })
}

// Word length of the binary listing behind a permutation listing of size n.
fn perm_words(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(AppError::Input(format!("permutation size must be at least 2, got {n}")));
    }
    Ok(n - 1)
}

fn execute<R: BufRead, W: Write>(command: Command, stdin: &mut R, out: &mut W) -> Result<bool> {
    match command {
        Command::GenBinary(a) => {
            check_size(a.n, a.force)?;
            let variant = a.variant.into();
            let stream = binary_stream(variant, a.n)?;
            format::write_entries(out, a.format, a.n, format::binary_tag(variant), stream)?;
        }
        Command::GenPerm(a) => {
            let words = perm_words(a.n)?;
            check_size(words, a.force)?;
            let variant = a.variant.into();
            let stream = binary_stream(variant, words)?.map(|w| psi(&w));
            format::write_entries(out, a.format, a.n, format::perm_tag(variant), stream)?;
        }
        Command::Verify(a) => return verify(a, stdin, out),
        Command::Psi { word } => writeln!(out, "{}", psi(&word))?,
        Command::PsiInv { perm } => writeln!(out, "{}", psi_inv(&perm)?)?,
        Command::Avoiders { size, patterns } => {
            for p in enumerate_avoiders(size, &patterns, AVOIDER_CAP)? {
                writeln!(out, "{p}")?;
            }
        }
        Command::Distance { u, v } => writeln!(out, "{}", distance_bfs(&u, &v, oracle_cap()?)?)?,
        Command::GapProfile(source) => match load(&source, stdin)? {
            (Loaded::Binary(listing), _) => {
                for g in gap_profile(&listing).as_slice() {
                    writeln!(out, "{g}")?;
                }
            }
            (Loaded::Perm(_), _) => return Err(AppError::Input("gap-profile takes a binary listing".into())),
        },
    }
    Ok(true)
}

// Loads the listing named by `source`, along with the property set implied by
// its variant when one is known.
fn load<R: BufRead>(source: &SourceArgs, stdin: &mut R) -> Result<(Loaded, Option<SetArg>)> {
    if source.stdin {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        let (entries, tag) = format::read_entries(&text)?;
        let first = entries.first().ok_or_else(|| AppError::Input("empty listing on standard input".into()))?;
        let implied = match tag.as_deref() {
            Some("cycle") => Some(SetArg::L),
            Some("path") => Some(SetArg::C),
            Some("perm-cycle") => Some(SetArg::P),
            Some("perm-path") => Some(SetArg::Q),
            Some(other) => return Err(AppError::Input(format!("unknown variant {other:?}"))),
            None => None,
        };
        let perm = matches!(implied, Some(SetArg::P | SetArg::Q)) || first.contains(char::is_whitespace);
        let loaded = if perm {
            Loaded::Perm(format::parse_perm_listing(&entries)?)
        } else {
            Loaded::Binary(format::parse_binary_listing(&entries)?)
        };
        return Ok((loaded, implied));
    }
    let (variant, n) = match (source.variant, source.n) {
        (Some(v), Some(n)) => (v, n),
        _ => return Err(AppError::Input("--variant and --n are required without --stdin".into())),
    };
    Ok(match variant {
        SourceVariant::Cycle | SourceVariant::Path => {
            check_size(n, source.force)?;
            let (v, set) =
                if variant == SourceVariant::Cycle { (Variant::Cycle, SetArg::L) } else { (Variant::Path, SetArg::C) };
            let words: Vec<BinaryWord> = binary_stream(v, n)?.collect();
            (Loaded::Binary(Listing::from_words(n, words)?), Some(set))
        }
        SourceVariant::PermCycle | SourceVariant::PermPath => {
            let words = perm_words(n)?;
            check_size(words, source.force)?;
            let (v, set) = if variant == SourceVariant::PermCycle {
                (Variant::Cycle, SetArg::P)
            } else {
                (Variant::Path, SetArg::Q)
            };
            (Loaded::Perm(binary_stream(v, words)?.map(|w| psi(&w)).collect()), Some(set))
        }
    })
}

fn all_ones(listing: &Listing) -> bool {
    listing.last().is_some_and(|w| w.count_ones() == w.len())
}

fn print_reports<W: Write>(out: &mut W, reports: &[PropertyReport], all: bool) -> Result<bool> {
    let mut ok = true;
    for r in reports {
        ok &= r.passed();
        if all && r.counterexamples().len() > 1 {
            for c in r.counterexamples() {
                writeln!(out, "{} FAIL @index={} {}", r.id, c.position, c.detail)?;
            }
        } else {
            writeln!(out, "{r}")?;
        }
    }
    Ok(ok)
}

fn verify<R: BufRead, W: Write>(a: VerifyArgs, stdin: &mut R, out: &mut W) -> Result<bool> {
    let opts = CheckOptions { unordered_pairs: a.unordered_pairs, exhaustive: a.all };
    let (loaded, implied) = load(&a.source, stdin)?;
    match loaded {
        Loaded::Binary(listing) => {
            let set = match a.set.or(implied) {
                Some(SetArg::L) => PropertySet::L,
                Some(SetArg::A) => PropertySet::A,
                Some(SetArg::B) => PropertySet::B,
                Some(SetArg::C) => PropertySet::C,
                Some(SetArg::P | SetArg::Q) => {
                    return Err(AppError::Input("sets P and Q apply to permutation listings".into()))
                }
                None if all_ones(&listing) => PropertySet::C,
                None => PropertySet::L,
            };
            let coverage = check_coverage(&listing);
            let mut ok = true;
            if !coverage.passed() {
                ok = print_reports(out, &[coverage], false)?;
            }
            Ok(print_reports(out, &check_binary_properties(&listing, set, &opts), a.all)? && ok)
        }
        Loaded::Perm(perms) => {
            let set = match a.set.or(implied) {
                Some(SetArg::P) => PermPropertySet::P,
                Some(SetArg::Q) => PermPropertySet::Q,
                Some(_) => return Err(AppError::Input("sets L, A, B and C apply to binary listings".into())),
                None if perms.last().is_some_and(|p| *p == Permutation::reversal(p.len())) => PermPropertySet::Q,
                None => PermPropertySet::P,
            };
            let mut ok = perm_coverage(out, &perms)?;
            ok &= print_reports(out, &check_perm_properties(&perms, set, &opts), a.all)?;
            Ok(ok)
        }
    }
}

// A permutation listing covers the class exactly when its preimages cover
// the words of length size - 1. Prints a COVERAGE line only on failure.
fn perm_coverage<W: Write>(out: &mut W, perms: &[Permutation]) -> Result<bool> {
    let size = perms.first().map_or(0, Permutation::len);
    let words = perm_words(size)?;
    let mut preimages = Listing::new(words)?;
    for (i, p) in perms.iter().enumerate() {
        let found = if p.len() != size { None } else { psi_inv(p).ok() };
        match found {
            Some(w) => preimages.push(w)?,
            None => {
                writeln!(
                    out,
                    "COVERAGE FAIL @index={} {p} is not a 132-312-avoiding permutation of size {size}",
                    i + 1
                )?;
                return Ok(false);
            }
        }
    }
    let report = check_coverage(&preimages);
    if report.passed() {
        return Ok(true);
    }
    print_reports(out, &[report], false)
}
