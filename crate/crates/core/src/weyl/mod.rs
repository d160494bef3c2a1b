//! Weyl groups of type `A_{n-1}` (the symmetric group `S_n`) and `B_n` (the
//! hyperoctahedral group `W_n`): character tables and graded multiplicities
//! in `C[t]` with the reflection representation placed in degree 2.

mod chartable;
mod molien;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chartable::{char_table, CharTable, ConjClass, CycleType};
pub use molien::{fake_degree, graded_mult, pl_matrix, Molien};

use crate::springer::{sort_labels, Label, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, WeylError> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" | "C" | "c" => Ok(Family::B),
            _ => Err(WeylError::UnknownFamily(s.to_string())),
        }
    }
}

/// A Weyl group. For type A, `rank = n` means `S_n`, whose reflection
/// representation has dimension `n - 1`; for type B it means `W_n` acting on
/// an `n`-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylType {
    pub family: Family,
    pub rank: usize,
}

/// Largest ranks accepted by the full pipeline.
pub const MAX_RANK_A: usize = 8;
pub const MAX_RANK_B: usize = 6;

impl WeylType {
    pub fn new(family: Family, rank: usize) -> Result<Self, WeylError> {
        if rank == 0 {
            return Err(WeylError::InvalidRank(rank));
        }
        Ok(Self { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("rank >= 1")
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("rank >= 1")
    }

    /// Errors for ranks beyond the supported pipeline bounds.
    pub fn check_supported(&self) -> Result<(), WeylError> {
        let max = match self.family {
            Family::A => MAX_RANK_A,
            Family::B => MAX_RANK_B,
        };
        if self.rank == 0 || self.rank > max {
            return Err(WeylError::Unsupported(*self));
        }
        Ok(())
    }

    /// Degrees of the basic invariants (ungraded convention).
    pub fn fundamental_degrees(&self) -> Vec<usize> {
        match self.family {
            Family::A => (2..=self.rank).collect(),
            Family::B => (1..=self.rank).map(|i| 2 * i).collect(),
        }
    }

    pub fn reflection_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank - 1,
            Family::B => self.rank,
        }
    }

    pub fn order(&self) -> u64 {
        let fact: u64 = (1..=self.rank as u64).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << self.rank,
        }
    }

    /// Label of the trivial representation, which is also the open orbit.
    pub fn trivial_label(&self) -> Label {
        let row = Partition::new(vec![self.rank]).unwrap();
        match self.family {
            Family::A => Label::a(row),
            Family::B => Label::b(row, Partition::empty()),
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("unknown family {0:?}; expected A or B")]
    UnknownFamily(String),
    #[error("{0} is beyond the supported ranks (A <= {MAX_RANK_A}, B <= {MAX_RANK_B})")]
    Unsupported(WeylType),
    #[error("label {label} is not an irreducible of {wt}")]
    UnknownLabel { wt: WeylType, label: Label },
    #[error("malformed character table: {0}")]
    MalformedTable(String),
}

/// Irreducible labels of `wt`, sorted in the reference total order of the
/// orbit poset (`d` ascending, so the trivial representation comes first).
pub fn enumerate_labels(wt: WeylType) -> Vec<Label> {
    let n = wt.rank;
    let mut labels: Vec<Label> = match wt.family {
        Family::A => Partition::all(n).into_iter().map(Label::a).collect(),
        Family::B => (0..=n)
            .rev()
            .flat_map(|k| {
                Partition::all(k)
                    .into_iter()
                    .flat_map(move |a| Partition::all(n - k).into_iter().map(move |b| Label::b(a.clone(), b)))
            })
            .collect(),
    };
    sort_labels(wt, &mut labels).expect("generated labels are valid");
    labels
}
