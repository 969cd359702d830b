//! Command-line front end for exact computations on ordinary metacyclic p-groups.
//!
//! [`run`] parses arguments, builds an [`OutputDocument`] and writes it as
//! JSON or text. Exit codes: 0 success, 1 invalid parameters, 2 a
//! verification mismatch, 64 usage errors (including size bounds).

pub mod commands;
pub mod document;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use metacyclic::oracle::DEFAULT_BOUND;
use metacyclic::presentation::{validate, MetacyclicParams, Presentation};
use metacyclic::Error;

pub use document::{OutputDocument, Payload, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "metacyclic", version, about = "Exact representation theory of ordinary metacyclic p-groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// The tuple (p, n, m, r, s) of `a^(p^n) = 1, b^(p^m) = a^(p^(n-r)), b a b^-1 = a^(1+p^(n-s))`.
#[derive(Debug, Clone, Copy, Args)]
struct GroupArgs {
    #[arg(short = 'p')]
    p: u64,
    #[arg(short = 'n')]
    n: u32,
    #[arg(short = 'm')]
    m: u32,
    #[arg(short = 'r')]
    r: u32,
    #[arg(short = 's')]
    s: u32,
}

impl GroupArgs {
    fn params(self) -> MetacyclicParams {
        MetacyclicParams::new(self.p, self.n, self.m, self.r, self.s)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the tuple is a uniquely reduced presentation.
    Validate(GroupArgs),
    /// Group order p^(n+m).
    Order(GroupArgs),
    /// Orbit census of the twisting action on the p^n-th roots of unity.
    Orbits(GroupArgs),
    /// Irreducible complex characters.
    Irreps(GroupArgs),
    /// Character table over the conjugacy classes.
    Chartable {
        #[command(flatten)]
        group: GroupArgs,
        /// Largest group order to enumerate.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Galois conjugacy classes of irreducible characters.
    GaloisClasses(GroupArgs),
    /// Rational irreducible counts by degree.
    RationalCount(GroupArgs),
    /// Wedderburn decomposition of the rational group algebra.
    Wedderburn(GroupArgs),
    /// Integral matrices of a rational irreducible representation.
    RationalRep {
        #[command(flatten)]
        group: GroupArgs,
        /// Class id as listed by `galois-classes`.
        #[arg(long)]
        class: usize,
    },
    /// Run every closed form against its enumeration counterpart.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Largest group order for the enumeration checks.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Decompose every reduced tuple with p in {2, 3, 5} up to an order.
    Sweep {
        #[arg(long)]
        max_order: u64,
    },
    /// Compare the decompositions of two tuples given as `p,n,m,r,s`.
    Compare {
        #[arg(value_parser = parse_tuple)]
        first: MetacyclicParams,
        #[arg(value_parser = parse_tuple)]
        second: MetacyclicParams,
    },
}

fn parse_tuple(s: &str) -> Result<MetacyclicParams, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!("expected p,n,m,r,s but got {s:?}"));
    }
    let p = parts[0].parse::<u64>().map_err(|e| e.to_string())?;
    let rest: Vec<u32> = parts[1..].iter().map(|x| x.parse::<u32>()).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    Ok(MetacyclicParams::new(p, rest[0], rest[1], rest[2], rest[3]))
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Validation(_) => EXIT_INVALID,
            Error::Mismatch(_) | Error::OrthogonalityFailure(..) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn group(params: MetacyclicParams) -> Result<Presentation, Failure> {
    validate(params).map_err(|e| Failure { code: EXIT_INVALID, message: format!("{params}: {e}") })
}

fn execute(command: &Command) -> Result<(OutputDocument, i32), Failure> {
    let doc = |name: &str, params: MetacyclicParams, payload: Payload| OutputDocument::new(name, Some(params), payload);
    Ok(match command {
        Command::Validate(g) => {
            let (payload, err) = commands::validation(g.params());
            let code = if err.is_some() { EXIT_INVALID } else { EXIT_OK };
            (doc("validate", g.params(), payload), code)
        }
        Command::Order(g) => (doc("order", g.params(), commands::order(&group(g.params())?)), EXIT_OK),
        Command::Orbits(g) => (doc("orbits", g.params(), commands::orbits(&group(g.params())?)), EXIT_OK),
        Command::Irreps(g) => (doc("irreps", g.params(), commands::irreps(&group(g.params())?)?), EXIT_OK),
        Command::Chartable { group: g, bound } => {
            let payload = commands::character_table(&group(g.params())?, *bound)?;
            (doc("chartable", g.params(), payload), EXIT_OK)
        }
        Command::GaloisClasses(g) => {
            (doc("galois-classes", g.params(), commands::galois_class_list(&group(g.params())?)?), EXIT_OK)
        }
        Command::RationalCount(g) => {
            (doc("rational-count", g.params(), commands::rational_counts(&group(g.params())?)), EXIT_OK)
        }
        Command::Wedderburn(g) => (doc("wedderburn", g.params(), commands::wedderburn(&group(g.params())?)), EXIT_OK),
        Command::RationalRep { group: g, class } => {
            (doc("rational-rep", g.params(), commands::rational_rep(&group(g.params())?, *class)?), EXIT_OK)
        }
        Command::Verify { group: g, bound } => {
            let payload = commands::verify(&group(g.params())?, *bound)?;
            let code = match &payload {
                Payload::Verification(v) if !v.all_passed => EXIT_MISMATCH,
                _ => EXIT_OK,
            };
            (doc("verify", g.params(), payload), code)
        }
        Command::Sweep { max_order } => {
            let payload = commands::sweep(*max_order);
            let code = match &payload {
                Payload::Sweep(s) if !s.all_passed => EXIT_MISMATCH,
                _ => EXIT_OK,
            };
            (OutputDocument::new("sweep", None, payload), code)
        }
        Command::Compare { first, second } => {
            let payload = commands::comparison(&group(*first)?, &group(*second)?);
            (OutputDocument::new("compare", None, payload), EXIT_OK)
        }
    })
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("documents serialize"),
        Format::Text => doc.payload.to_string(),
    }
}

/// Run the CLI on `args` (program name first) and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    match execute(&cli.command) {
        Ok((doc, code)) => {
            let _ = writeln!(out, "{}", render(&doc, cli.format));
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::Mismatch("x".into())), EXIT_MISMATCH);
        assert_eq!(code(Error::OrthogonalityFailure(0, 1)), EXIT_MISMATCH);
        assert_eq!(code(Error::Validation(metacyclic::ValidationError::NotPrime(4))), EXIT_INVALID);
        assert_eq!(code(Error::TooLarge("x".into())), EXIT_USAGE);
    }

    #[test]
    fn tuples_parse() {
        assert_eq!(parse_tuple("2, 5,3,0,2").unwrap(), MetacyclicParams::new(2, 5, 3, 0, 2));
        assert!(parse_tuple("2,5,3").is_err());
        assert!(parse_tuple("2,x,3,0,2").is_err());
    }
}
