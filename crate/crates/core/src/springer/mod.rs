//! Orbit posets: labels, closure order and the dimension function `d`.
//!
//! Type A labels are partitions of `n` (Jordan types of nilpotent orbits) with
//! the dominance order and `d = 2 n(lambda)`. Type B labels are bipartitions
//! (exotic nilpotent orbits) with dominance of the interleaved sequence
//! `(a1, b1, a2, b2, ...)` and `d = 2 b(alpha; beta)`, where
//! `b(alpha; beta) = 2 n(alpha) + 2 n(beta) + |beta|` is the dimension of the
//! exotic Springer fibre.
//!
//! The type B order and `d` are not derived here; they are checked. The
//! poset builder rejects any configuration in which `d` fails to be strictly
//! order-reversing or the extremal orbits have the wrong `d`, and the
//! [`verify`](crate::verify) gates reject any whose factorization fails
//! positivity or parity.

mod label;
mod refine;

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use label::{Label, Partition};
pub use refine::{is_linear_extension, linear_extensions};

pub use crate::weyl::{Family, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpringerError {
    #[error("label {label} does not belong to {wt}")]
    UnknownLabel { wt: WeylType, label: Label },
    #[error("labels {0} and {1} have different sizes")]
    SizeMismatch(Label, Label),
    #[error("invalid orbit poset configuration for {wt}: {reason}")]
    Configuration { wt: WeylType, reason: String },
}

/// `sum_i (i - 1) * p_i`.
pub fn n_invariant(p: &Partition) -> usize {
    p.n_invariant()
}

fn check_label(wt: WeylType, label: &Label) -> Result<(), SpringerError> {
    let family_ok = matches!(
        (wt.family, label),
        (Family::A, Label::A { .. }) | (Family::B, Label::B { .. })
    );
    if family_ok && label.size() == wt.rank {
        Ok(())
    } else {
        Err(SpringerError::UnknownLabel { wt, label: label.clone() })
    }
}

/// Twice the dimension of the Springer fibre over the orbit `label`.
pub fn d_value(wt: WeylType, label: &Label) -> Result<usize, SpringerError> {
    check_label(wt, label)?;
    Ok(match label {
        Label::A { partition } => 2 * partition.n_invariant(),
        Label::B { alpha, beta } => 2 * (2 * alpha.n_invariant() + 2 * beta.n_invariant() + beta.size()),
    })
}

/// `lambda <= mu` in the closure order: the orbit of `lambda` lies in the
/// closure of the orbit of `mu`.
pub fn closure_leq(wt: WeylType, lambda: &Label, mu: &Label) -> Result<bool, SpringerError> {
    if lambda.size() != mu.size() {
        return Err(SpringerError::SizeMismatch(lambda.clone(), mu.clone()));
    }
    check_label(wt, lambda)?;
    check_label(wt, mu)?;
    Ok(dominated(&lambda.flattened(), &mu.flattened()))
}

fn dominated(x: &[usize], y: &[usize]) -> bool {
    let (mut sx, mut sy) = (0, 0);
    for (a, b) in x.iter().zip(y) {
        sx += a;
        sy += b;
        if sx > sy {
            return false;
        }
    }
    true
}

/// Sorts labels into the reference total order: `d` ascending, ties broken by
/// decreasing lexicographic order of [`Label::flattened`].
pub fn sort_labels(wt: WeylType, labels: &mut [Label]) -> Result<(), SpringerError> {
    let mut keyed = Vec::with_capacity(labels.len());
    for l in labels.iter() {
        keyed.push((d_value(wt, l)?, Reverse(l.flattened()), l.clone()));
    }
    keyed.sort();
    for (slot, (_, _, l)) in labels.iter_mut().zip(keyed) {
        *slot = l;
    }
    Ok(())
}

/// The closure order on orbit labels together with `d` and the reference
/// total order used for matrix indexing.
///
/// `labels` are stored already sorted in the reference order, so
/// `total_order` is the identity permutation; other linear extensions are
/// permutations of these indices (see [`refinements`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PosetJson", try_from = "PosetJson")]
pub struct OrbitPoset {
    pub wt: WeylType,
    pub labels: Vec<Label>,
    /// `leq[i][j]` iff `labels[i] <= labels[j]`.
    pub leq: Vec<Vec<bool>>,
    pub d: Vec<usize>,
    pub total_order: Vec<usize>,
}

impl OrbitPoset {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Strictly below: `i <= j` and `i != j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// The unique maximal label (open orbit), if there is one.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&j| (0..self.len()).all(|i| self.leq[i][j]))
    }

    /// The unique minimal label (zero orbit), if there is one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }

    /// Checks every structural invariant; `build_poset` calls this.
    pub fn validate(&self) -> Result<(), SpringerError> {
        let fail = |reason: String| Err(SpringerError::Configuration { wt: self.wt, reason });
        let m = self.len();
        if self.leq.len() != m || self.leq.iter().any(|r| r.len() != m) || self.d.len() != m {
            return fail("relation or d has the wrong shape".into());
        }
        for i in 0..m {
            if !self.leq[i][i] {
                return fail(format!("closure order not reflexive at {}", self.labels[i]));
            }
            for j in 0..m {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return fail(format!("closure order not antisymmetric: {} ~ {}", self.labels[i], self.labels[j]));
                }
                for k in 0..m {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        return fail(format!(
                            "closure order not transitive: {} <= {} <= {}",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
                if self.lt(i, j) && self.d[i] <= self.d[j] {
                    return fail(format!(
                        "d is not strictly order-reversing: {} < {} but d = {} <= {}",
                        self.labels[i], self.labels[j], self.d[i], self.d[j]
                    ));
                }
            }
        }
        if self.d.iter().any(|d| d % 2 != 0) {
            return fail("d must be even".into());
        }
        if !is_linear_extension(&self.leq, &self.total_order) {
            return fail("total order does not refine the closure order".into());
        }
        Ok(())
    }
}

/// Builds and validates the orbit poset for `wt`.
pub fn build_poset(wt: WeylType) -> Result<OrbitPoset, SpringerError> {
    let labels = crate::weyl::enumerate_labels(wt);
    let m = labels.len();
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            leq[i][j] = closure_leq(wt, &labels[i], &labels[j])?;
        }
    }
    let d = labels.iter().map(|l| d_value(wt, l)).collect::<Result<Vec<_>, _>>()?;
    let poset = OrbitPoset {
        wt,
        labels,
        leq,
        d,
        total_order: (0..m).collect(),
    };
    poset.validate()?;

    let fail = |reason: String| Err(SpringerError::Configuration { wt, reason });
    match poset.maximum() {
        Some(0) if poset.d[0] == 0 && poset.labels[0] == wt.trivial_label() => {}
        _ => return fail("the trivial label must be the unique maximum with d = 0".into()),
    }
    let expected_min_d = 2 * wt.fundamental_degrees().iter().map(|d| d - 1).sum::<usize>();
    match poset.minimum() {
        Some(i) if poset.d[i] == expected_min_d => {}
        Some(i) => {
            return fail(format!(
                "zero orbit {} has d = {}, expected {expected_min_d}",
                poset.labels[i], poset.d[i]
            ))
        }
        None => return fail("no unique minimum".into()),
    }
    Ok(poset)
}

/// Up to `count` distinct linear extensions of the closure order, the
/// reference total order first. Deterministic in `seed`. Returns all of them
/// when fewer than `count` exist.
pub fn refinements(poset: &OrbitPoset, count: usize, seed: u64) -> Vec<Vec<usize>> {
    refine::sample_extensions(&poset.leq, &poset.total_order, count, seed)
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    family: Family,
    rank: usize,
    labels: Vec<Label>,
    d: Vec<usize>,
    leq: Vec<Vec<u8>>,
    total_order: Vec<usize>,
}

impl From<OrbitPoset> for PosetJson {
    fn from(p: OrbitPoset) -> Self {
        PosetJson {
            family: p.wt.family,
            rank: p.wt.rank,
            labels: p.labels,
            d: p.d,
            leq: p.leq.iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect(),
            total_order: p.total_order,
        }
    }
}

impl TryFrom<PosetJson> for OrbitPoset {
    type Error = SpringerError;
    fn try_from(j: PosetJson) -> Result<Self, SpringerError> {
        let wt = WeylType::new(j.family, j.rank).map_err(|e| SpringerError::Configuration {
            wt: WeylType { family: j.family, rank: j.rank },
            reason: e.to_string(),
        })?;
        let p = OrbitPoset {
            wt,
            labels: j.labels,
            leq: j.leq.iter().map(|r| r.iter().map(|&b| b != 0).collect()).collect(),
            d: j.d,
            total_order: j.total_order,
        };
        p.validate()?;
        Ok(p)
    }
}
