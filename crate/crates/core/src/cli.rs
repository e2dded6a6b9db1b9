//! Command-line interface.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes: 0 on
//! success, 2 for malformed input, 3 for well-formed input outside the
//! domain, 4 when the output file cannot be written.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::blocks::core_by_ops;
use crate::error::Error;
use crate::partitions::{Modulus, Multicharge, Multipartition, Partition};
use crate::table::{BlockTable, Format};
use crate::uglov::{is_core, tau, tau_inverse};
use crate::weights::block_weight;

pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_OUTPUT: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "akcores",
    version,
    about = "Cores, weights and blocks of multipartitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; defaults to $AKCORES_FORMAT, then json.
    #[arg(long, global = true, value_enum, env = "AKCORES_FORMAT")]
    pub format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Block weight of a multipartition.
    Weight(Query),
    /// Core, core charge, weight and normalizing permutation.
    Core(Query),
    /// Uglov image of a multipartition.
    Tau(Query),
    /// Whether a multipartition is a core.
    IsCore(Query),
    /// Preimage of a charged partition under the Uglov map.
    TauInverse(TauInverseArgs),
    /// Block table of all multipartitions of n with l components.
    Blocks(BlocksArgs),
}

#[derive(Debug, Args)]
pub struct Query {
    #[arg(long)]
    pub e: i64,
    /// Comma-separated integers, e.g. 0,-1,3.
    #[arg(long, allow_hyphen_values = true)]
    pub charge: Multicharge,
    /// JSON nested arrays, e.g. "[[3,2],[1]]".
    #[arg(long)]
    pub mp: Multipartition,
}

#[derive(Debug, Args)]
pub struct TauInverseArgs {
    #[arg(long)]
    pub e: i64,
    #[arg(long)]
    pub l: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub charge_total: i64,
    /// JSON array of parts, e.g. "[5,2,2]".
    #[arg(long, value_parser = parse_partition)]
    pub p: Partition,
}

#[derive(Debug, Args)]
pub struct BlocksArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub e: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub charge: Multicharge,
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::from_json(s)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

/// A single-record result rendered in any output format.
struct Record(Vec<(&'static str, Value)>);

impl Record {
    fn render(&self, format: Format) -> String {
        let cell = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let names: Vec<&str> = self.0.iter().map(|(k, _)| *k).collect();
        let values: Vec<String> = self.0.iter().map(|(_, v)| cell(v)).collect();
        match format {
            Format::Json => {
                let map: Map<String, Value> = self
                    .0
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                format!("{}\n", Value::Object(map))
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&names).expect("in-memory write");
                w.write_record(&values).expect("in-memory write");
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("UTF-8")
            }
            Format::Md => format!(
                "| {} |\n|{}\n| {} |\n",
                names.join(" | "),
                " --- |".repeat(names.len()),
                values.join(" | ")
            ),
        }
    }
}

pub fn cmd_weight(q: &Query) -> Result<Vec<(&'static str, Value)>, Error> {
    let w = block_weight(&q.mp, &q.charge, Modulus::new(q.e)?)?;
    Ok(vec![("weight", json!(w))])
}

pub fn cmd_core(q: &Query) -> Result<Vec<(&'static str, Value)>, Error> {
    let c = core_by_ops(&q.mp, &q.charge, Modulus::new(q.e)?)?;
    Ok(vec![
        ("core", to_value(&c.core)),
        ("charge", to_value(&c.charge)),
        ("weight", json!(c.weight)),
        ("sigma", to_value(&c.sigma_one_based())),
    ])
}

pub fn cmd_tau(q: &Query) -> Result<Vec<(&'static str, Value)>, Error> {
    let (p, charge) = tau(&q.mp, &q.charge, Modulus::new(q.e)?)?;
    Ok(vec![("partition", to_value(&p)), ("charge", json!(charge))])
}

pub fn cmd_is_core(q: &Query) -> Result<Vec<(&'static str, Value)>, Error> {
    let b = is_core(&q.mp, &q.charge, Modulus::new(q.e)?)?;
    Ok(vec![("is_core", json!(b))])
}

pub fn cmd_tau_inverse(a: &TauInverseArgs) -> Result<Vec<(&'static str, Value)>, Error> {
    let (mp, s) = tau_inverse(&a.p, a.charge_total, a.l, Modulus::new(a.e)?)?;
    Ok(vec![
        ("multipartition", to_value(&mp)),
        ("charge", to_value(&s)),
    ])
}

pub fn cmd_blocks(a: &BlocksArgs) -> Result<BlockTable, Error> {
    BlockTable::build(a.n, a.l, Modulus::new(a.e)?, &a.charge)
}

/// Runs a parsed command and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String, Error> {
    let format = cli.format.unwrap_or_default();
    let record = match &cli.command {
        Command::Weight(q) => cmd_weight(q)?,
        Command::Core(q) => cmd_core(q)?,
        Command::Tau(q) => cmd_tau(q)?,
        Command::IsCore(q) => cmd_is_core(q)?,
        Command::TauInverse(a) => cmd_tau_inverse(a)?,
        Command::Blocks(a) => return cmd_blocks(a)?.render(format),
    };
    Ok(Record(record).render(format))
}

/// Parses `args`, runs the command and writes the result. Returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    let output = match run(&cli) {
        Ok(out) => out,
        Err(err) => {
            eprintln!("error: {err}");
            let code = if matches!(err, Error::Parse(_)) {
                EXIT_PARSE
            } else {
                EXIT_DOMAIN
            };
            return ExitCode::from(code);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, &output) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(EXIT_OUTPUT);
            }
        }
        None => {
            let _ = std::io::stdout().lock().write_all(output.as_bytes());
        }
    }
    ExitCode::SUCCESS
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String, Error> {
        let cli =
            Cli::try_parse_from(std::iter::once("akcores").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn weight_command() {
        let out =
            run_args(&["weight", "--e", "4", "--charge", "0,1", "--mp", "[[3],[1]]"]).unwrap();
        assert_eq!(out, "{\"weight\":1}\n");
        let out = run_args(&[
            "weight",
            "--e",
            "3",
            "--charge",
            "0",
            "--mp",
            "[[5,4,2,1,1]]",
        ])
        .unwrap();
        assert_eq!(out, "{\"weight\":3}\n");
        let out = run_args(&["weight", "--e", "4", "--charge", "0,1", "--mp", "[[],[]]"]).unwrap();
        assert_eq!(out, "{\"weight\":0}\n");
    }

    #[test]
    fn core_command() {
        let out = run_args(&[
            "core",
            "--e",
            "4",
            "--charge",
            "0,1,3",
            "--mp",
            "[[3,2],[1,1],[2,2,1]]",
        ])
        .unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["core"], json!([[1], [], []]));
        assert_eq!(v["charge"], json!([0, 2, 2]));
        assert_eq!(v["weight"], json!(8));
        assert_eq!(v["sigma"], json!([1, 2, 3]));
    }

    #[test]
    fn negative_charges_parse() {
        let out = run_args(&[
            "is-core",
            "--e",
            "4",
            "--charge",
            "-1,2",
            "--mp",
            "[[],[1,1]]",
        ])
        .unwrap();
        assert_eq!(out, "{\"is_core\":true}\n");
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            run_args(&["weight", "--e", "1", "--charge", "0", "--mp", "[[1]]"]),
            Err(Error::InvalidModulus(1))
        ));
        assert!(matches!(
            run_args(&["weight", "--e", "3", "--charge", "0,1", "--mp", "[[1]]"]),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn malformed_input_is_rejected_by_the_parser() {
        let bad = Cli::try_parse_from([
            "akcores", "weight", "--e", "3", "--charge", "0", "--mp", "[[1,2]]",
        ]);
        assert!(bad.is_err());
        let bad = Cli::try_parse_from([
            "akcores", "weight", "--e", "3", "--charge", "x", "--mp", "[[1]]",
        ]);
        assert!(bad.is_err());
    }

    #[test]
    fn record_formats() {
        let r = Record(vec![("weight", json!(2)), ("charge", json!([0, 1]))]);
        assert_eq!(r.render(Format::Csv), "weight,charge\n2,\"[0,1]\"\n");
        assert_eq!(
            r.render(Format::Md),
            "| weight | charge |\n| --- | --- |\n| 2 | [0,1] |\n"
        );
    }
}
