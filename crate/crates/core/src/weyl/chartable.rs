//! Character tables via the Murnaghan-Nakayama rule.
//!
//! For `S_n`, `chi_lambda(mu)` is the signed count of rim-hook removals of
//! lengths `mu_1, mu_2, ...`. For `W_n` the irreducibles are indexed by
//! bipartitions `(alpha; beta)`: the `alpha` part is trivial on the sign
//! changes and the `beta` part is twisted by the character sending each sign
//! change to `-1`. A positive `k`-cycle removes a `k`-hook from either
//! component with sign `(-1)^height`; a negative `k`-cycle does the same but
//! picks up an extra `-1` when the hook comes from `beta`. In this convention
//! `((n); ())` is trivial and `((); (1^n))` is the determinant of the
//! reflection representation.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{enumerate_labels, Family, WeylError, WeylType};
use crate::ring::{cyclotomic_product, LaurentPoly};
use crate::springer::{Label, Partition};

/// Cycle data of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CycleType {
    /// Cycle lengths of a permutation.
    A(Partition),
    /// Lengths of the positive and negative cycles of a signed permutation.
    B { pos: Partition, neg: Partition },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClass {
    pub cycles: CycleType,
    pub size: u64,
}

impl ConjClass {
    /// `det(1 - t^2 w)` on the reflection representation, from the cycle type:
    /// a positive `k`-cycle contributes `1 - t^(2k)`, a negative one
    /// `1 + t^(2k)`; type A then drops the trivial summand `1 - t^2`.
    pub fn reflection_det(&self) -> LaurentPoly {
        match &self.cycles {
            CycleType::A(mu) => {
                let perm = cyclotomic_product(mu.parts().iter().map(|&k| 2 * k as i64));
                perm.exact_div(&cyclotomic_product([2])).expect("1 - t^2 divides")
            }
            CycleType::B { pos, neg } => {
                let p = cyclotomic_product(pos.parts().iter().map(|&k| 2 * k as i64));
                neg.parts().iter().fold(p, |acc, &k| {
                    &acc * &(&LaurentPoly::one() + &LaurentPoly::t_pow(2 * k as i64))
                })
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.cycles {
            CycleType::A(mu) => mu.parts().iter().all(|&k| k == 1),
            CycleType::B { pos, neg } => neg.is_empty() && pos.parts().iter().all(|&k| k == 1),
        }
    }
}

/// Irreducible characters of a Weyl group, `values[label][class]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableJson", try_from = "TableJson")]
pub struct CharTable {
    pub wt: WeylType,
    pub labels: Vec<Label>,
    pub classes: Vec<ConjClass>,
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn order(&self) -> u64 {
        self.wt.order()
    }

    pub fn label_index(&self, label: &Label) -> Result<usize, WeylError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| WeylError::UnknownLabel { wt: self.wt, label: label.clone() })
    }

    pub fn identity_class(&self) -> usize {
        self.classes.iter().position(ConjClass::is_identity).expect("identity class present")
    }

    /// `chi_label(1)`.
    pub fn dim(&self, label: usize) -> i64 {
        self.values[label][self.identity_class()]
    }

    /// `sum_c |c| chi_i(c) chi_j(c)`; equals `|W| delta_ij` for a correct table.
    pub fn row_inner(&self, i: usize, j: usize) -> i128 {
        self.classes
            .iter()
            .enumerate()
            .map(|(c, cl)| cl.size as i128 * self.values[i][c] as i128 * self.values[j][c] as i128)
            .sum()
    }

    /// `sum_chi chi(c) chi(c')`; equals `delta_cc' |W| / |c|`.
    pub fn column_inner(&self, c: usize, c2: usize) -> i128 {
        self.values.iter().map(|row| row[c] as i128 * row[c2] as i128).sum()
    }

    /// Exhaustive orthogonality check for rows and columns.
    pub fn check_orthogonality(&self) -> Result<(), WeylError> {
        let order = self.order() as i128;
        let m = self.labels.len();
        for i in 0..m {
            for j in 0..m {
                let expect = if i == j { order } else { 0 };
                if self.row_inner(i, j) != expect {
                    return Err(WeylError::MalformedTable(format!(
                        "rows {} and {} fail orthogonality",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        for c in 0..self.classes.len() {
            for c2 in 0..self.classes.len() {
                let expect = if c == c2 { order / self.classes[c].size as i128 } else { 0 };
                if self.column_inner(c, c2) != expect {
                    return Err(WeylError::MalformedTable(format!("columns {c} and {c2} fail orthogonality")));
                }
            }
        }
        Ok(())
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_mu = prod_k k^(m_k) m_k!`, the centralizer order in `S_n`.
fn z_a(mu: &Partition) -> u64 {
    mu.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Centralizer order in `W_n` of the class with the given signed cycles.
fn z_b(pos: &Partition, neg: &Partition) -> u64 {
    let twos = 1u64 << (pos.len() + neg.len());
    twos * z_a(pos) * z_a(neg)
}

fn classes(wt: WeylType) -> Vec<ConjClass> {
    let n = wt.rank;
    let order = wt.order();
    match wt.family {
        Family::A => Partition::all(n)
            .into_iter()
            .map(|mu| ConjClass {
                size: order / z_a(&mu),
                cycles: CycleType::A(mu),
            })
            .collect(),
        Family::B => (0..=n)
            .rev()
            .flat_map(|k| {
                Partition::all(k).into_iter().flat_map(move |p| {
                    Partition::all(n - k).into_iter().map(move |q| ConjClass {
                        size: order / z_b(&p, &q),
                        cycles: CycleType::B { pos: p.clone(), neg: q },
                    })
                })
            })
            .collect(),
    }
}

/// All ways to remove a rim hook of length `k` from `lam`, with the hook's
/// height (number of rows minus one). Uses beta-numbers: removing a `k`-hook
/// moves one bead from `b` to the free position `b - k`.
fn rim_hooks(lam: &[usize], k: usize) -> Vec<(Vec<usize>, usize)> {
    let len = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut nb: Vec<usize> = beta.iter().map(|&c| if c == b { target } else { c }).collect();
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let mut shape: Vec<usize> = nb.iter().enumerate().map(|(i, &c)| c - (len - 1 - i)).collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        out.push((shape, height));
    }
    out
}

fn sign(h: usize) -> i64 {
    if h.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Default)]
struct MnMemo {
    a: HashMap<(Vec<usize>, Vec<usize>), i64>,
    b: HashMap<(Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>), i64>,
}

impl MnMemo {
    fn chi_a(&mut self, lam: &[usize], cycles: &[usize]) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else {
            return lam.is_empty() as i64;
        };
        let key = (lam.to_vec(), cycles.to_vec());
        if let Some(&v) = self.a.get(&key) {
            return v;
        }
        let v = rim_hooks(lam, k)
            .into_iter()
            .map(|(sh, h)| sign(h) * self.chi_a(&sh, rest))
            .sum();
        self.a.insert(key, v);
        v
    }

    fn chi_b(&mut self, alpha: &[usize], beta: &[usize], pos: &[usize], neg: &[usize]) -> i64 {
        let (k, pos_rest, neg_rest, beta_sign) = match (pos.split_first(), neg.split_first()) {
            (Some((&k, r)), _) => (k, r, neg, 1),
            (None, Some((&k, r))) => (k, pos, r, -1),
            (None, None) => return (alpha.is_empty() && beta.is_empty()) as i64,
        };
        let key = (alpha.to_vec(), beta.to_vec(), pos.to_vec(), neg.to_vec());
        if let Some(&v) = self.b.get(&key) {
            return v;
        }
        let mut v = 0;
        for (sh, h) in rim_hooks(alpha, k) {
            v += sign(h) * self.chi_b(&sh, beta, pos_rest, neg_rest);
        }
        for (sh, h) in rim_hooks(beta, k) {
            v += beta_sign * sign(h) * self.chi_b(alpha, &sh, pos_rest, neg_rest);
        }
        self.b.insert(key, v);
        v
    }
}

/// The character table of `wt`, rows in [`enumerate_labels`] order.
pub fn char_table(wt: WeylType) -> CharTable {
    let labels = enumerate_labels(wt);
    let classes = classes(wt);
    let mut memo = MnMemo::default();
    let values = labels
        .iter()
        .map(|l| {
            classes
                .iter()
                .map(|c| match (l, &c.cycles) {
                    (Label::A { partition }, CycleType::A(mu)) => memo.chi_a(partition.parts(), mu.parts()),
                    (Label::B { alpha, beta }, CycleType::B { pos, neg }) => {
                        memo.chi_b(alpha.parts(), beta.parts(), pos.parts(), neg.parts())
                    }
                    _ => unreachable!("labels and classes share the family"),
                })
                .collect()
        })
        .collect();
    CharTable {
        wt,
        labels,
        classes,
        values,
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    family: Family,
    rank: usize,
    labels: Vec<Label>,
    classes: Vec<ConjClass>,
    values: Vec<Vec<i64>>,
}

impl From<CharTable> for TableJson {
    fn from(t: CharTable) -> Self {
        TableJson {
            family: t.wt.family,
            rank: t.wt.rank,
            labels: t.labels,
            classes: t.classes,
            values: t.values,
        }
    }
}

impl TryFrom<TableJson> for CharTable {
    type Error = WeylError;

    /// Rejects anything that is not the table this crate would compute, so a
    /// stale or damaged cache entry cannot leak into results.
    fn try_from(j: TableJson) -> Result<Self, WeylError> {
        let wt = WeylType::new(j.family, j.rank)?;
        let m = j.labels.len();
        if j.values.len() != m || j.classes.len() != m || j.values.iter().any(|r| r.len() != m) {
            return Err(WeylError::MalformedTable("table is not square".into()));
        }
        if j.labels != enumerate_labels(wt) {
            return Err(WeylError::MalformedTable("label list does not match".into()));
        }
        if j.classes.iter().map(|c| c.size as u128).sum::<u128>() != wt.order() as u128 {
            return Err(WeylError::MalformedTable("class sizes do not sum to |W|".into()));
        }
        let t = CharTable {
            wt,
            labels: j.labels,
            classes: j.classes,
            values: j.values,
        };
        t.check_orthogonality()?;
        Ok(t)
    }
}
