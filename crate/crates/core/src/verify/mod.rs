//! Invariant checks and independent oracles for the whole pipeline.
//!
//! Every check is an exact canonical-form comparison. Results are collected
//! as one record per (check, label pair) and sorted before emission, so two
//! reports can be diffed line by line.

mod charge;
mod checks;
mod golden;
mod linalg;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use charge::{charge, cocharge_kostka_oracle, reading_word, semistandard_tableaux, Tableau};
pub use checks::{
    cartan_determinant, check_cartan, check_char_table, check_cocharge_oracle, check_coinvariant, check_d_series,
    check_dictionary, check_kostka_diagonal, check_minimum_row, check_parity_typeb, check_positivity,
    check_reciprocity, check_refinements, check_support, euler_orthogonality, is_t4_parity, COFACTOR_LIMIT,
};
pub use golden::{check_golden_a3, Golden};
pub use linalg::{det_bareiss, det_cofactor, expand_in_basis, inverse};

use crate::lsalgo::ls_factorize;
use crate::springer::{build_poset, Family, Label, OrbitPoset, WeylType};
use crate::weyl::{char_table, CharTable, Molien};
use crate::Error as CrateError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("basis matrix is singular")]
    Singular,
    #[error("vector length does not match the basis")]
    Dimension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub subject: Vec<Label>,
    pub status: Status,
    pub detail: String,
}

/// `{"family", "rank", "checks": [{"name", "subject", "status", "detail"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub family: Family,
    pub rank: usize,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    /// Sorts the records by `(name, subject, detail)`.
    pub fn new(wt: WeylType, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| (&a.name, &a.subject, &a.detail).cmp(&(&b.name, &b.subject, &b.detail)));
        Self {
            family: wt.family,
            rank: wt.rank,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Records with the given check name.
    pub fn named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a CheckRecord> + 'a {
        self.checks.iter().filter(move |c| c.name == name)
    }
}

impl fmt::Display for Report {
    /// One-line summary.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        write!(
            f,
            "{}{}: {} checks, {} failed",
            self.family,
            self.rank,
            self.checks.len(),
            failed
        )
    }
}

/// Named groups of verification targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `A3` against transcribed reference data.
    GoldenA3,
    /// Type A with the charge oracle, ranks 1 to 5 by default.
    OracleA,
    /// Type B property gates, ranks 1 to 3 by default.
    GatesB,
    All,
}

impl Suite {
    /// Weyl types the suite covers; `rank` narrows oracle-a and gates-b to a
    /// single rank.
    pub fn targets(self, rank: Option<usize>) -> Vec<WeylType> {
        let range = |fam: Family, default: std::ops::RangeInclusive<usize>| match rank {
            Some(r) => vec![WeylType { family: fam, rank: r }],
            None => default.map(|r| WeylType { family: fam, rank: r }).collect(),
        };
        match self {
            Suite::GoldenA3 => vec![WeylType::a(3)],
            Suite::OracleA => range(Family::A, 1..=5),
            Suite::GatesB => range(Family::B, 1..=3),
            Suite::All => {
                let mut v: Vec<WeylType> = (1..=5).map(WeylType::a).collect();
                v.extend((1..=3).map(WeylType::b));
                v
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::GoldenA3 => "golden-a3",
            Suite::OracleA => "oracle-a",
            Suite::GatesB => "gates-b",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "golden-a3" => Ok(Suite::GoldenA3),
            "oracle-a" => Ok(Suite::OracleA),
            "gates-b" => Ok(Suite::GatesB),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?} (expected golden-a3, oracle-a, gates-b or all)")),
        }
    }
}

/// Knobs for [`verify_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Number of linear extensions to factorize along.
    pub refinements: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self { refinements: 3, seed: 0 }
    }
}

/// Full pipeline and every applicable check for `(family, rank)`.
pub fn verify_all(family: Family, rank: usize) -> Result<Report, CrateError> {
    let wt = WeylType::new(family, rank)?;
    wt.check_supported()?;
    verify_with(char_table(wt), build_poset(wt)?, Options::default())
}

/// As [`verify_all`], starting from a character table and poset that may
/// come from a cache.
pub fn verify_with(table: CharTable, poset: OrbitPoset, opts: Options) -> Result<Report, CrateError> {
    let wt = table.wt;
    wt.check_supported()?;
    let mut recs = check_char_table(&table);
    recs.extend(check_dictionary(&table, &poset));

    let molien = Molien::new(table);
    let fakes = molien.fake_degrees();
    recs.extend(check_coinvariant(molien.table(), &fakes));
    let p = molien.pl_matrix();
    let res = ls_factorize(&p, &poset)?;

    recs.extend(check_reciprocity(&p, &res.k, &res.d));
    recs.extend(check_cartan(&p, &res.d));
    recs.extend(check_support(&res.k, &poset));
    recs.extend(check_positivity(&res.k, &poset));
    recs.extend(check_kostka_diagonal(&res, &poset));
    recs.extend(check_minimum_row(&res.k, &poset, &fakes));
    let order = 4 * wt.fundamental_degrees().iter().sum::<usize>() as i64;
    recs.extend(check_d_series(&poset.labels, &res.d, order));
    recs.extend(euler_orthogonality(&res.k, &res.d));
    recs.extend(check_refinements(&p, &poset, &res, opts.refinements, opts.seed));
    match wt.family {
        Family::A => recs.extend(check_cocharge_oracle(&res)),
        Family::B => recs.extend(check_parity_typeb(&res.k)),
    }
    if wt == WeylType::a(3) {
        recs.extend(check_golden_a3(&p, &res));
    }
    Ok(Report::new(wt, recs))
}
