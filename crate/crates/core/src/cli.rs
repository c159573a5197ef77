//! The `hessenpave` command line.
//!
//! Exit codes: 0 on success, 1 on validation errors (bad flags, malformed
//! roots or functions, rank bounds), 2 on internal consistency failures such
//! as a point-count mismatch or a failed lemma check.
//!
//! CSV columns, in order:
//!
//! | command | columns |
//! |---|---|
//! | `paving`, `sweep` | `type,rank,hessenberg,word,length,nonempty,dim,row_profile` |
//! | `betti` | `type,rank,hessenberg,k,betti` |
//! | `enumerate-hess` | `index,neg_count,function,hessenberg` |
//! | `witness` | `stage,kernel_dim,solution` |
//! | `verify-lemmata` | `name,status,detail` |
//! | `count-points` | `perm,count,predicted` |
//!
//! `hessenberg` is the `neg=` text form, lists inside a cell are separated by
//! spaces and absent values are empty.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fforacle::{tally_points, PointCount};
use crate::hessenberg::{enumerate_hessenberg, HessenbergSpace};
use crate::liealg::{find_witness, verify_lemmata, ChevalleyRealization, LemmaReport, NilpotentElement, WitnessRecord};
use crate::linalg::rat;
use crate::paving::{HessenbergRecord, PavingRecord};
use crate::rootcore::{LieType, RootSystem};

pub const DEFAULT_SEED: u64 = 20_240_607;
pub const SEED_ENV: &str = "HESSENPAVE_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "hessenpave",
    version,
    about = "Affine pavings of regular nilpotent Hessenberg varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cells, dimensions and Betti numbers of one Hessenberg variety.
    Paving {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        hess: HessArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Betti numbers only.
    Betti {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        hess: HessArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Lists every Hessenberg space of a root system.
    EnumerateHess {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Explicit point `u ∈ U_w` of a nonempty cell.
    Witness {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        hess: HessArgs,
        /// Reduced word, e.g. "1 2" or "1,2"; empty for the identity.
        #[arg(long)]
        word: String,
        /// `simple`: the sum of simple root vectors; `all`: the sum of all
        /// positive root vectors.
        #[arg(long, value_enum, default_value_t = Nilpotent::Simple)]
        nilpotent: Nilpotent,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Randomized exact checks of the identities behind the paving.
    VerifyLemmata {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Overridden by HESSENPAVE_SEED when set.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Brute-force point counts over F_q in type A.
    CountPoints {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Hessenberg function, e.g. `2,3,3`.
        #[arg(long = "hess-fn")]
        hess_fn: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Pavings of every Hessenberg space; all classical systems up to
    /// `--max-rank` unless a type or rank is given.
    Sweep {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: Option<LieType>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Accepted for reproducible batch configs; the sweep is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct SystemArgs {
    #[arg(long = "type", value_parser = parse_type)]
    lie_type: LieType,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct HessArgs {
    /// `full`, `borel`, `peterson` or `neg=<root>;<root>...`.
    #[arg(long)]
    hess: Option<String>,
    /// Type-A Hessenberg function, e.g. `2,3,3`.
    #[arg(long = "hess-fn")]
    hess_fn: Option<String>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Writes to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Nilpotent {
    Simple,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

fn parse_type(s: &str) -> std::result::Result<LieType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_function(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("malformed Hessenberg function {s:?}"))
        })
        .collect()
}

impl HessArgs {
    fn resolve<'rs>(&self, rs: &'rs RootSystem) -> Result<HessenbergSpace<'rs>> {
        match (&self.hess, &self.hess_fn) {
            (Some(s), None) => HessenbergSpace::parse(rs, s),
            (None, Some(f)) => HessenbergSpace::from_function(rs, &parse_function(f).map_err(Error::Parse)?),
            _ => Err(Error::Parse("exactly one of --hess and --hess-fn is required".into())),
        }
    }
}

impl SystemArgs {
    fn system(&self) -> Result<RootSystem> {
        RootSystem::new(self.lie_type, self.rank)
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV} is not an unsigned integer: {v:?}"))),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_SEED)),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// [`main_with_args`] with explicit output streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::Inconsistent(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

/// The artifact is emitted in both cases; `Inconsistent` sets exit code 2.
enum Outcome {
    Success,
    Inconsistent(String),
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Paving { system, hess, out } => {
            let rs = system.system()?;
            let h = hess.resolve(&rs)?;
            let record = PavingRecord::compute(&h);
            emit(
                &out,
                stdout,
                &record,
                |w| paving_csv(w, std::slice::from_ref(&record)),
                || paving_table(&record),
            )?;
        }
        Command::Betti { system, hess, out } => {
            let rs = system.system()?;
            let h = hess.resolve(&rs)?;
            let record = BettiRecord::new(&rs, &h);
            emit(
                &out,
                stdout,
                &record,
                |w| betti_csv(w, &record),
                || betti_table(&record),
            )?;
        }
        Command::EnumerateHess { system, out } => {
            let rs = system.system()?;
            let records: Vec<SpaceRecord> = enumerate_hessenberg(&rs)
                .iter()
                .map(|h| SpaceRecord {
                    neg: h.negative_part().iter().map(|r| r.to_text()).collect(),
                    function: h.to_function(),
                })
                .collect();
            emit(
                &out,
                stdout,
                &records,
                |w| spaces_csv(w, &records),
                || spaces_table(&records),
            )?;
        }
        Command::Witness {
            system,
            hess,
            word,
            nilpotent,
            out,
        } => {
            let rs = system.system()?;
            let h = hess.resolve(&rs)?;
            let w = rs.parse_weyl(&word.replace(',', " "))?;
            let real = ChevalleyRealization::new(&rs)?;
            let n = match nilpotent {
                Nilpotent::Simple => NilpotentElement::sum_of_simple(&rs),
                Nilpotent::All => NilpotentElement::from_coeffs(vec![rat(1); rs.num_positive()]),
            };
            let result = find_witness(&real, &w, &h, &n)?;
            let record = WitnessRecord::new(&rs, &w, &h, &result);
            emit(
                &out,
                stdout,
                &record,
                |w| witness_csv(w, &record),
                || witness_table(&record),
            )?;
            if !record.verified {
                return Ok(Outcome::Inconsistent(format!(
                    "witness for {} failed verification",
                    record.word
                )));
            }
        }
        Command::VerifyLemmata {
            system,
            trials,
            seed,
            out,
        } => {
            let rs = system.system()?;
            let seed = resolve_seed(seed)?;
            let real = ChevalleyRealization::new(&rs)?;
            let report = verify_lemmata(&real, trials, seed);
            emit(
                &out,
                stdout,
                &report,
                |w| lemmata_csv(w, &report),
                || lemmata_table(&report),
            )?;
            if let Err(e) = report.into_result() {
                return Ok(Outcome::Inconsistent(e.to_string()));
            }
        }
        Command::CountPoints { n, q, hess_fn, out } => {
            let h = parse_function(&hess_fn).map_err(Error::Parse)?;
            let counts = tally_points(n, q, &h)?;
            emit(
                &out,
                stdout,
                &counts,
                |w| counts_csv(w, &counts),
                || counts_table(&counts),
            )?;
            if let Err(e) = counts.check() {
                return Ok(Outcome::Inconsistent(e.to_string()));
            }
        }
        Command::Sweep {
            lie_type,
            rank,
            max_rank,
            seed,
            out,
        } => {
            resolve_seed(seed)?;
            let records = sweep(lie_type, rank, max_rank)?;
            emit(
                &out,
                stdout,
                &records,
                |w| paving_csv(w, &records),
                || records.iter().map(paving_table).collect::<Vec<_>>().join("\n"),
            )?;
        }
    }
    Ok(Outcome::Success)
}

/// Paving records for every Hessenberg space of the selected systems, in
/// type, rank and enumeration order.
pub fn sweep(lie_type: Option<LieType>, rank: Option<usize>, max_rank: usize) -> Result<Vec<PavingRecord>> {
    let types: Vec<LieType> = match lie_type {
        Some(t) => vec![t],
        None => LieType::ALL.to_vec(),
    };
    let mut systems = Vec::new();
    for t in types {
        match rank {
            Some(r) => systems.push(RootSystem::new(t, r)?),
            None => {
                for r in t.min_rank()..=max_rank {
                    systems.push(RootSystem::new(t, r)?);
                }
            }
        }
    }
    let per_system: Vec<Vec<PavingRecord>> = std::thread::scope(|s| {
        let handles: Vec<_> = systems
            .iter()
            .map(|rs| s.spawn(move || enumerate_hessenberg(rs).iter().map(PavingRecord::compute).collect()))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    Ok(per_system.into_iter().flatten().collect())
}

#[derive(Serialize)]
struct BettiRecord {
    #[serde(rename = "type")]
    lie_type: LieType,
    rank: usize,
    hessenberg: HessenbergRecord,
    betti: Vec<u64>,
}

impl BettiRecord {
    fn new(rs: &RootSystem, h: &HessenbergSpace<'_>) -> Self {
        let paving = PavingRecord::compute(h);
        BettiRecord {
            lie_type: rs.lie_type(),
            rank: rs.rank(),
            hessenberg: paving.hessenberg,
            betti: paving.betti,
        }
    }
}

#[derive(Serialize)]
struct SpaceRecord {
    neg: Vec<String>,
    function: Option<Vec<usize>>,
}

fn emit<T: Serialize>(
    args: &OutputArgs,
    stdout: &mut dyn Write,
    value: &T,
    csv: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>,
    table: impl FnOnce() -> String,
) -> Result<()> {
    let bytes = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            csv(&mut w)?;
            w.into_inner().map_err(|e| Error::Io(e.into_error()))?
        }
        Format::Table => {
            let mut s = table();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s.into_bytes()
        }
    };
    match &args.output {
        Some(path) => File::create(path)?.write_all(&bytes)?,
        None => stdout.write_all(&bytes)?,
    }
    Ok(())
}

fn neg_text(h: &HessenbergRecord) -> String {
    format!("neg={}", h.neg.join(";"))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn word_or_e(word: &str) -> &str {
    if word.is_empty() {
        "e"
    } else {
        word
    }
}

fn paving_csv(w: &mut csv::Writer<Vec<u8>>, records: &[PavingRecord]) -> Result<()> {
    w.write_record([
        "type",
        "rank",
        "hessenberg",
        "word",
        "length",
        "nonempty",
        "dim",
        "row_profile",
    ])?;
    for r in records {
        let hess = neg_text(&r.hessenberg);
        for c in &r.cells {
            w.write_record([
                r.lie_type.to_string(),
                r.rank.to_string(),
                hess.clone(),
                c.word.clone(),
                c.length.to_string(),
                c.nonempty.to_string(),
                c.dim.map(|d| d.to_string()).unwrap_or_default(),
                c.row_profile.as_deref().map(join).unwrap_or_default(),
            ])?;
        }
    }
    Ok(())
}

fn paving_table(r: &PavingRecord) -> String {
    let mut s = format!("{}{} {}\n", r.lie_type, r.rank, neg_text(&r.hessenberg));
    s += &format!(
        "{:<24} {:>6} {:>8} {:>4}  {}\n",
        "word", "length", "nonempty", "dim", "row_profile"
    );
    for c in &r.cells {
        s += &format!(
            "{:<24} {:>6} {:>8} {:>4}  {}\n",
            word_or_e(&c.word),
            c.length,
            c.nonempty,
            c.dim.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
            c.row_profile.as_deref().map(join).unwrap_or_else(|| "-".into()),
        );
    }
    s + &format!("betti {:?}\n", r.betti)
}

fn betti_csv(w: &mut csv::Writer<Vec<u8>>, r: &BettiRecord) -> Result<()> {
    w.write_record(["type", "rank", "hessenberg", "k", "betti"])?;
    let hess = neg_text(&r.hessenberg);
    for (k, b) in r.betti.iter().enumerate() {
        w.write_record([
            r.lie_type.to_string(),
            r.rank.to_string(),
            hess.clone(),
            k.to_string(),
            b.to_string(),
        ])?;
    }
    Ok(())
}

fn betti_table(r: &BettiRecord) -> String {
    let mut s = format!("{}{} {}\n", r.lie_type, r.rank, neg_text(&r.hessenberg));
    for (k, b) in r.betti.iter().enumerate() {
        s += &format!("b_{k:<3} {b}\n");
    }
    s
}

fn spaces_csv(w: &mut csv::Writer<Vec<u8>>, records: &[SpaceRecord]) -> Result<()> {
    w.write_record(["index", "neg_count", "function", "hessenberg"])?;
    for (k, r) in records.iter().enumerate() {
        w.write_record([
            k.to_string(),
            r.neg.len().to_string(),
            r.function.as_deref().map(join).unwrap_or_default(),
            format!("neg={}", r.neg.join(";")),
        ])?;
    }
    Ok(())
}

fn spaces_table(records: &[SpaceRecord]) -> String {
    let mut s = format!("{:>5} {:>9}  {:<12} {}\n", "index", "neg_count", "function", "neg");
    for (k, r) in records.iter().enumerate() {
        s += &format!(
            "{k:>5} {:>9}  {:<12} {}\n",
            r.neg.len(),
            r.function.as_deref().map(join).unwrap_or_else(|| "-".into()),
            r.neg.join(";")
        );
    }
    s
}

fn solution_text(sol: &std::collections::BTreeMap<String, String>) -> String {
    sol.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn witness_csv(w: &mut csv::Writer<Vec<u8>>, r: &WitnessRecord) -> Result<()> {
    w.write_record(["stage", "kernel_dim", "solution"])?;
    for s in &r.stages {
        w.write_record([
            s.stage.to_string(),
            s.kernel_dim.to_string(),
            solution_text(&s.solution),
        ])?;
    }
    Ok(())
}

fn witness_table(r: &WitnessRecord) -> String {
    let mut s = format!(
        "{}{} w = {} {}\n",
        r.lie_type,
        r.rank,
        word_or_e(&r.word),
        neg_text(&r.hessenberg)
    );
    for st in &r.stages {
        s += &format!(
            "stage {:>2}  kernel {:>2}  {}\n",
            st.stage,
            st.kernel_dim,
            solution_text(&st.solution)
        );
    }
    s += &format!("image {}\nverified {}\n", solution_text(&r.image), r.verified);
    s
}

fn lemmata_csv(w: &mut csv::Writer<Vec<u8>>, r: &LemmaReport) -> Result<()> {
    w.write_record(["name", "status", "detail"])?;
    for c in &r.checks {
        let status = serde_json::to_value(c.status)?;
        w.write_record([c.name.as_str(), status.as_str().unwrap_or_default(), c.detail.as_str()])?;
    }
    Ok(())
}

fn lemmata_table(r: &LemmaReport) -> String {
    let mut s = format!("seed {} trials {}\n", r.seed, r.trials);
    for c in &r.checks {
        let status = serde_json::to_value(c.status).ok();
        let status = status.as_ref().and_then(|v| v.as_str()).unwrap_or_default();
        s += &format!("{:<16} {:<5} {}\n", c.name, status, c.detail);
        if let Some(cx) = &c.counterexample {
            s += &format!("{:<16} counterexample {cx}\n", "");
        }
    }
    s
}

fn counts_csv(w: &mut csv::Writer<Vec<u8>>, r: &PointCount) -> Result<()> {
    w.write_record(["perm", "count", "predicted"])?;
    for c in &r.cells {
        w.write_record([c.perm.clone(), c.count.to_string(), c.predicted.to_string()])?;
    }
    Ok(())
}

fn counts_table(r: &PointCount) -> String {
    let mut s = format!("n = {} q = {} h = {}\n", r.n, r.q, join(&r.h));
    for c in &r.cells {
        s += &format!("{:<8} {:>6} {:>9}\n", c.perm, c.count, c.predicted);
    }
    s + &format!("total {} betti_eval {}\n", r.total, r.betti_eval)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hessenpave").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn peterson_paving() {
        let (code, out, _) = call(&["paving", "--type", "A", "--rank", "2", "--hess-fn", "2,3,3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["betti"], serde_json::json!([1, 2, 1]));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["paving", "--type", "A", "--rank", "2"]).0, 1);
        assert_eq!(call(&["paving", "--type", "E", "--rank", "6", "--hess", "full"]).0, 1);
        assert_eq!(call(&["betti", "--type", "D", "--rank", "2", "--hess", "full"]).0, 1);
        assert_eq!(
            call(&["count-points", "--n", "9", "--q", "2", "--hess-fn", "9,9,9,9,9,9,9,9,9"]).0,
            1
        );
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn count_points_total() {
        let (code, out, _) = call(&["count-points", "--n", "3", "--q", "2", "--hess-fn", "2,3,3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["total"], 9);
    }

    #[test]
    fn csv_columns() {
        let (_, out, _) = call(&[
            "betti", "--type", "A", "--rank", "2", "--hess", "full", "--format", "csv",
        ]);
        assert_eq!(out.lines().next(), Some("type,rank,hessenberg,k,betti"));
        assert_eq!(out.lines().count(), 5);
    }
}
