//! The Lusztig-Shoji factorization `[P:L] = K^T D K`.
//!
//! Given the symmetric matrix `[P:L]` and a linear order refining the closure
//! order (more open orbits first), there is exactly one lower unitriangular
//! `K = [K:L]` and diagonal `D = [K~:K]` with `P = K^T D K`. Row `gamma` of
//! `K` only enters `P` through the rank-one term `D_gamma K_gamma^T K_gamma`,
//! and the last row is the only one touching the last diagonal entry, so the
//! factors are peeled off from the most closed orbit upwards:
//!
//! ```text
//! D_g      = A[g][g]
//! K[g][j]  = A[g][j] / D_g                 (j < g)
//! A[i][j] -= D_g K[g][i] K[g][j]           (i, j < g)
//! ```
//!
//! The closure-order vanishing `K[l][m] = 0` unless `l <= m` is not imposed;
//! it is checked afterwards, and a violation means the order, `d` or label
//! dictionary do not match `P`.

mod matrix;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use matrix::GradedMatrix;

use crate::ring::{LaurentPoly, RatFunc};
use crate::springer::{is_linear_extension, Label, OrbitPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LsError {
    #[error("matrix labels do not match the orbit poset")]
    LabelMismatch,
    #[error("input matrix is not symmetric at ({0}, {1})")]
    Asymmetric(Label, Label),
    #[error("elimination order is not a linear extension of the closure order")]
    NotLinearExtension,
    #[error("zero pivot at {0}: singular leading minor")]
    ZeroPivot(Label),
    #[error("order/input mismatch: [K_{row} : L_{col}] = {value} is nonzero but {row} is not below {col}")]
    SupportViolation { row: Label, col: Label, value: Box<RatFunc> },
    #[error("parity/normalization failure at ({lambda}, {mu}): {detail}")]
    Normalization { lambda: Label, mu: Label, detail: String },
}

/// Output of [`ls_factorize`], always indexed by the poset's reference order.
///
/// JSON: `{"labels": [...], "K": [[ratfunc]], "D": [ratfunc], "kostka": [[poly]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "LsResultJson")]
pub struct LsResult {
    pub labels: Vec<Label>,
    /// `K[lambda][mu] = [K_lambda : L_mu]`, lower unitriangular.
    pub k: GradedMatrix,
    /// Diagonal of `[K~ : K]`.
    pub d: Vec<RatFunc>,
    /// `kostka[mu][lambda] = K_{mu,lambda}(t)`.
    pub kostka: Vec<Vec<LaurentPoly>>,
}

impl LsResult {
    /// `[K_lambda : L_mu]` as a Laurent polynomial, if it is one.
    pub fn k_poly(&self, lambda: usize, mu: usize) -> Option<&LaurentPoly> {
        self.k.get(lambda, mu).as_laurent()
    }
}

#[derive(Serialize)]
struct LsResultRef<'a> {
    labels: &'a [Label],
    #[serde(rename = "K")]
    k: &'a [Vec<RatFunc>],
    #[serde(rename = "D")]
    d: &'a [RatFunc],
    kostka: &'a [Vec<LaurentPoly>],
}

impl Serialize for LsResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LsResultRef {
            labels: &self.labels,
            k: self.k.rows(),
            d: &self.d,
            kostka: &self.kostka,
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
struct LsResultJson {
    labels: Vec<Label>,
    #[serde(rename = "K")]
    k: Vec<Vec<RatFunc>>,
    #[serde(rename = "D")]
    d: Vec<RatFunc>,
    kostka: Vec<Vec<LaurentPoly>>,
}

impl TryFrom<LsResultJson> for LsResult {
    type Error = String;
    fn try_from(j: LsResultJson) -> Result<Self, String> {
        let m = j.labels.len();
        if j.d.len() != m || j.kostka.len() != m || j.kostka.iter().any(|r| r.len() != m) {
            return Err("LS result arrays do not match the label count".into());
        }
        Ok(LsResult {
            k: GradedMatrix::new(j.labels.clone(), j.k)?,
            labels: j.labels,
            d: j.d,
            kostka: j.kostka,
        })
    }
}

/// `K^T diag(D) K`.
pub fn reconstruct(k: &GradedMatrix, d: &[RatFunc]) -> GradedMatrix {
    let diag = GradedMatrix::diagonal(k.labels().to_vec(), d);
    k.transpose().mul(&diag).mul(k)
}

/// Factorizes along the poset's reference total order.
pub fn ls_factorize(p: &GradedMatrix, poset: &OrbitPoset) -> Result<LsResult, LsError> {
    ls_factorize_with_order(p, poset, &poset.total_order)
}

/// Factorizes along `order`, a linear extension of the closure order given as
/// a permutation of the poset's label indices. Results are mapped back to the
/// reference order, so runs along different extensions compare directly.
pub fn ls_factorize_with_order(p: &GradedMatrix, poset: &OrbitPoset, order: &[usize]) -> Result<LsResult, LsError> {
    if p.labels() != poset.labels.as_slice() {
        return Err(LsError::LabelMismatch);
    }
    if let Some((i, j)) = p.asymmetry() {
        return Err(LsError::Asymmetric(p.labels()[i].clone(), p.labels()[j].clone()));
    }
    if !is_linear_extension(&poset.leq, order) {
        return Err(LsError::NotLinearExtension);
    }
    let m = p.len();
    let work = p.permuted(order);
    let mut a: Vec<Vec<RatFunc>> = work.rows().to_vec();
    let mut kp = vec![vec![RatFunc::zero(); m]; m];
    let mut dp = vec![RatFunc::zero(); m];

    for g in (0..m).rev() {
        let pivot = a[g][g].clone();
        if pivot.is_zero() {
            return Err(LsError::ZeroPivot(work.labels()[g].clone()));
        }
        let row: Vec<RatFunc> = (0..g).map(|j| &a[g][j] / &pivot).collect();
        kp[g][..g].clone_from_slice(&row);
        kp[g][g] = RatFunc::one();
        // rank-one update of the leading g x g block, upper triangle then mirror
        let scaled: Vec<RatFunc> = row.iter().map(|x| x * &pivot).collect();
        let updates: Vec<Vec<RatFunc>> = (0..g)
            .into_par_iter()
            .map(|i| {
                (i..g)
                    .map(|j| {
                        if scaled[i].is_zero() || row[j].is_zero() {
                            a[i][j].clone()
                        } else {
                            &a[i][j] - &(&scaled[i] * &row[j])
                        }
                    })
                    .collect()
            })
            .collect();
        for (i, upd) in updates.into_iter().enumerate() {
            for (off, v) in upd.into_iter().enumerate() {
                let j = i + off;
                a[j][i] = v.clone();
                a[i][j] = v;
            }
        }
        dp[g] = pivot;
    }

    let mut k = GradedMatrix::identity(poset.labels.clone());
    let mut d = vec![RatFunc::zero(); m];
    for a_ in 0..m {
        d[order[a_]] = dp[a_].clone();
        for b in 0..m {
            k.set(order[a_], order[b], kp[a_][b].clone());
        }
    }

    for i in 0..m {
        for j in 0..m {
            if !k.get(i, j).is_zero() && !poset.leq[i][j] {
                return Err(LsError::SupportViolation {
                    row: poset.labels[i].clone(),
                    col: poset.labels[j].clone(),
                    value: Box::new(k.get(i, j).clone()),
                });
            }
        }
    }

    let kostka = kostka_normalize(&k, poset)?;
    Ok(LsResult {
        labels: poset.labels.clone(),
        k,
        d,
        kostka,
    })
}

/// Modified Kostka polynomials from `[K:L]`: `K_{mu,lambda}(t)` is defined by
/// `K_{mu,lambda}(t^2) = t^(d_lambda) * bar([K_lambda : L_mu])`.
///
/// Returns `kostka[mu][lambda]`. Fails if an entry of `K` is not a Laurent
/// polynomial, or if the rescaled entry has an odd or negative exponent.
pub fn kostka_normalize(k: &GradedMatrix, poset: &OrbitPoset) -> Result<Vec<Vec<LaurentPoly>>, LsError> {
    let m = poset.len();
    let mut out = vec![vec![LaurentPoly::zero(); m]; m];
    for lambda in 0..m {
        for mu in 0..m {
            let fail = |detail: String| LsError::Normalization {
                lambda: poset.labels[lambda].clone(),
                mu: poset.labels[mu].clone(),
                detail,
            };
            let entry = k.get(lambda, mu);
            let poly = entry
                .as_laurent()
                .ok_or_else(|| fail(format!("[K:L] entry {entry} is not a Laurent polynomial")))?;
            let shifted = poly.bar().shift(poset.d[lambda] as i64);
            let halved = shifted
                .halve_exponents()
                .ok_or_else(|| fail(format!("odd exponent in {shifted}")))?;
            if !halved.is_polynomial() {
                return Err(fail(format!("negative exponent in {halved}")));
            }
            out[mu][lambda] = halved;
        }
    }
    Ok(out)
}
