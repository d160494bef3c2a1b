//! `lscoinv`: compute, verify and export graded character data.
//!
//! Data goes to stdout, diagnostics to stderr. Every command is a
//! deterministic function of its arguments, with or without the cache.

pub mod cache;

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lscoinv_core::lsalgo::GradedMatrix;
use lscoinv_core::verify::{verify_with, Options, Status};
use lscoinv_core::weyl::{CycleType, Molien};
use lscoinv_core::{ls_factorize, Family, Label, LaurentPoly, LsResult, RatFunc, Report, Suite, Table, WeylType};

pub use cache::Cache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Parser)]
#[command(name = "lscoinv", version, about = "Graded characters, Lusztig-Shoji factorization and Kostka polynomials for types A and B")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Weyl group family (C is accepted as a synonym for B).
    #[arg(long, global = true)]
    pub family: Option<Family>,

    /// Rank n: S_n for type A, W_n for type B.
    #[arg(long, global = true)]
    pub rank: Option<usize>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub out: Format,

    /// Directory for cached character tables and posets.
    #[arg(long, global = true, env = "LSCOINV_CACHE")]
    pub cache_dir: Option<PathBuf>,

    /// Ignore the cache directory entirely.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Seed for sampling linear extensions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of linear extensions checked by `verify`.
    #[arg(long, global = true, default_value_t = 3)]
    pub refinements: usize,

    /// Also print power-series expansions below this exponent.
    #[arg(long, global = true)]
    pub truncate: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fake degrees and the matrix [P:L].
    FakeDegrees,
    /// [K:L], the diagonal D and the modified Kostka matrix.
    Kostka,
    /// Run a verification suite: golden-a3, oracle-a, gates-b or all.
    /// `--rank` narrows oracle-a and gates-b to one rank.
    Verify { suite: Suite },
    /// Character table.
    CharTable,
    /// Orbit poset: labels, d and the closure order.
    Poset,
}

/// What a command printed and whether it succeeded.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Cli {
    fn weyl_type(&self) -> anyhow::Result<WeylType> {
        let (Some(family), Some(rank)) = (self.family, self.rank) else {
            bail!("--family and --rank are required for this command");
        };
        let wt = WeylType::new(family, rank)?;
        wt.check_supported()?;
        Ok(wt)
    }

    fn cache(&self) -> Cache {
        match (&self.cache_dir, self.no_cache) {
            (Some(dir), false) => Cache::new(dir),
            _ => Cache::disabled(),
        }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let mut cache = cli.cache();
    let stdout = match &cli.command {
        Command::FakeDegrees => fake_degrees(cli, &mut cache)?,
        Command::Kostka => kostka(cli, &mut cache)?,
        Command::CharTable => char_table(cli, &mut cache)?,
        Command::Poset => poset(cli, &mut cache)?,
        Command::Verify { suite } => return verify(cli, &mut cache, *suite),
    };
    Ok(Outcome { stdout, success: true })
}

fn pretty(v: &impl serde::Serialize) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn series_matrix(m: &GradedMatrix, order: i64) -> anyhow::Result<Vec<Vec<String>>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| series_text(x, order)).collect())
        .collect()
}

fn series_text(x: &RatFunc, order: i64) -> anyhow::Result<String> {
    let s = x.series_expand(order).with_context(|| format!("expanding {x}"))?;
    Ok(format!("{s} + O(t^{order})"))
}

fn sections(fmt: Format, parts: &[(&str, Table)]) -> String {
    let mut out = String::new();
    for (i, (title, table)) in parts.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match fmt {
            Format::Csv => out.push_str(&table.to_csv()),
            Format::Md => {
                out.push_str(&format!("## {title}\n\n"));
                out.push_str(&table.to_markdown());
            }
            Format::Json => unreachable!("json is rendered separately"),
        }
    }
    out
}

#[derive(Serialize)]
struct SeriesJson<T> {
    order: i64,
    entries: Vec<T>,
}

#[derive(Serialize)]
struct FakeDegreesJson<'a> {
    family: Family,
    rank: usize,
    labels: &'a [Label],
    fake_degrees: &'a [LaurentPoly],
    #[serde(rename = "P")]
    p: &'a GradedMatrix,
    /// `Q = prod (1 - t^(2 d_i))`; `P_numerators = Q * P` entrywise.
    invariant_denominator: &'a LaurentPoly,
    #[serde(rename = "P_numerators")]
    p_numerators: &'a [Vec<LaurentPoly>],
    #[serde(rename = "P_series", skip_serializing_if = "Option::is_none")]
    p_series: Option<SeriesJson<Vec<String>>>,
}

#[derive(Serialize)]
struct KostkaJson<'a> {
    #[serde(flatten)]
    res: &'a LsResult,
    #[serde(rename = "D_series", skip_serializing_if = "Option::is_none")]
    d_series: Option<SeriesJson<String>>,
}

fn fake_degrees(cli: &Cli, cache: &mut Cache) -> anyhow::Result<String> {
    let wt = cli.weyl_type()?;
    let molien = Molien::new(cache.char_table(wt));
    let labels = molien.table().labels.clone();
    let fakes: Vec<LaurentPoly> = molien.fake_degrees();
    let p = molien.pl_matrix();
    let q = molien.invariant_denominator().clone();
    let m = labels.len();
    let numerators: Vec<Vec<LaurentPoly>> = (0..m).map(|i| (0..m).map(|j| molien.numerator(i, j)).collect()).collect();
    let series = cli.truncate.map(|n| series_matrix(&p, n).map(|s| (n, s))).transpose()?;
    if cli.out == Format::Json {
        return pretty(&FakeDegreesJson {
            family: wt.family,
            rank: wt.rank,
            labels: &labels,
            fake_degrees: &fakes,
            p: &p,
            invariant_denominator: &q,
            p_numerators: &numerators,
            p_series: series.map(|(order, entries)| SeriesJson { order, entries }),
        });
    }
    let mut parts = vec![
        ("Fake degrees", Table::column("label", "fake degree", &labels, &fakes)),
        ("[P:L]", Table::from_matrix("[P:L]", &p)),
        (
            "Q * [P:L]",
            Table::square(&format!("[P:L] * ({q})"), &labels, &numerators),
        ),
    ];
    if let Some((n, s)) = series {
        parts.push(("[P:L] series", Table::square(&format!("[P:L] mod t^{n}"), &labels, &s)));
    }
    Ok(sections(cli.out, &parts))
}

fn kostka(cli: &Cli, cache: &mut Cache) -> anyhow::Result<String> {
    let wt = cli.weyl_type()?;
    let p = Molien::new(cache.char_table(wt)).pl_matrix();
    let poset = cache.poset(wt)?;
    let res = ls_factorize(&p, &poset).with_context(|| format!("factorizing [P:L] for {wt}"))?;
    let series = cli
        .truncate
        .map(|n| res.d.iter().map(|x| series_text(x, n)).collect::<anyhow::Result<Vec<_>>>().map(|s| (n, s)))
        .transpose()?;
    match cli.out {
        Format::Json => pretty(&KostkaJson {
            res: &res,
            d_series: series.map(|(order, entries)| SeriesJson { order, entries }),
        }),
        Format::Csv => Ok(Table::square("shape\\weight", &res.labels, &res.kostka).to_csv()),
        Format::Md => {
            let mut parts = vec![
                ("[K:L]", Table::from_matrix("[K:L]", &res.k)),
                ("D = [K~:K]", Table::column("label", "D", &res.labels, &res.d)),
                ("Modified Kostka polynomials", Table::square("shape\\weight", &res.labels, &res.kostka)),
            ];
            if let Some((n, s)) = series {
                parts.push(("D series", Table::column("label", &format!("D mod t^{n}"), &res.labels, &s)));
            }
            Ok(sections(Format::Md, &parts))
        }
    }
}

fn class_name(c: &CycleType) -> String {
    match c {
        CycleType::A(mu) => mu.to_string(),
        CycleType::B { pos, neg } => format!("{pos};{neg}"),
    }
}

fn char_table(cli: &Cli, cache: &mut Cache) -> anyhow::Result<String> {
    let wt = cli.weyl_type()?;
    let t = cache.char_table(wt);
    if cli.out == Format::Json {
        return pretty(&t);
    }
    let table = Table {
        corner: "label\\class".into(),
        columns: t.classes.iter().map(|c| format!("{} [{}]", class_name(&c.cycles), c.size)).collect(),
        rows: t
            .labels
            .iter()
            .zip(&t.values)
            .map(|(l, r)| (l.to_string(), r.iter().map(ToString::to_string).collect()))
            .collect(),
    };
    Ok(sections(cli.out, &[("Character table", table)]))
}

fn poset(cli: &Cli, cache: &mut Cache) -> anyhow::Result<String> {
    let wt = cli.weyl_type()?;
    let p = cache.poset(wt)?;
    if cli.out == Format::Json {
        return pretty(&p);
    }
    let table = Table {
        corner: "label".into(),
        columns: std::iter::once("d".to_string()).chain(p.labels.iter().map(|l| format!("<= {l}"))).collect(),
        rows: (0..p.len())
            .map(|i| {
                let cells = std::iter::once(p.d[i].to_string())
                    .chain(p.leq[i].iter().map(|&b| u8::from(b).to_string()))
                    .collect();
                (p.labels[i].to_string(), cells)
            })
            .collect(),
    };
    Ok(sections(cli.out, &[("Closure order", table)]))
}

fn verify(cli: &Cli, cache: &mut Cache, suite: Suite) -> anyhow::Result<Outcome> {
    let opts = Options { refinements: cli.refinements, seed: cli.seed };
    let mut reports = Vec::new();
    for wt in suite.targets(cli.rank) {
        wt.check_supported()?;
        let table = cache.char_table(wt);
        let poset = cache.poset(wt)?;
        let rep = verify_with(table, poset, opts).with_context(|| format!("verifying {wt}"))?;
        eprintln!("{suite} {rep}");
        reports.push(rep);
    }
    let success = reports.iter().all(Report::passed);
    let stdout = match cli.out {
        Format::Json => pretty(&reports)?,
        Format::Csv => verify_csv(&reports),
        Format::Md => verify_md(&reports),
    };
    Ok(Outcome { stdout, success })
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

fn subject_text(r: &lscoinv_core::verify::CheckRecord) -> String {
    r.subject.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ; ")
}

fn verify_csv(reports: &[Report]) -> String {
    let table = Table {
        corner: "family".into(),
        columns: ["rank", "name", "subject", "status", "detail"].map(String::from).to_vec(),
        rows: reports
            .iter()
            .flat_map(|rep| {
                rep.checks.iter().map(move |c| {
                    let cells = vec![
                        rep.rank.to_string(),
                        c.name.clone(),
                        subject_text(c),
                        status_text(c.status).to_string(),
                        c.detail.clone(),
                    ];
                    (rep.family.to_string(), cells)
                })
            })
            .collect(),
    };
    table.to_csv()
}

fn verify_md(reports: &[Report]) -> String {
    let mut out = String::new();
    for (i, rep) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("## {rep}\n\n"));
        let mut names: Vec<&str> = rep.checks.iter().map(|c| c.name.as_str()).collect();
        names.dedup();
        let table = Table {
            corner: "check".into(),
            columns: vec!["pass".into(), "fail".into()],
            rows: names
                .iter()
                .map(|n| {
                    let pass = rep.named(n).filter(|c| c.status == Status::Pass).count();
                    let fail = rep.named(n).count() - pass;
                    (n.to_string(), vec![pass.to_string(), fail.to_string()])
                })
                .collect(),
        };
        out.push_str(&table.to_markdown());
        let failures: Vec<_> = rep.failures().collect();
        if !failures.is_empty() {
            out.push_str("\nFailures:\n\n");
            for c in failures {
                out.push_str(&format!("- {} [{}]: {}\n", c.name, subject_text(c), c.detail));
            }
        }
    }
    out
}

