use serde::{Deserialize, Serialize};

use crate::ring::RatFunc;
use crate::springer::Label;

/// A square matrix over `Q(t)` whose rows and columns are both indexed by
/// `labels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson")]
pub struct GradedMatrix {
    labels: Vec<Label>,
    entries: Vec<Vec<RatFunc>>,
}

#[derive(Deserialize)]
struct MatrixJson {
    labels: Vec<Label>,
    entries: Vec<Vec<RatFunc>>,
}

impl TryFrom<MatrixJson> for GradedMatrix {
    type Error = String;
    fn try_from(j: MatrixJson) -> Result<Self, String> {
        GradedMatrix::new(j.labels, j.entries)
    }
}

impl GradedMatrix {
    pub fn new(labels: Vec<Label>, entries: Vec<Vec<RatFunc>>) -> Result<Self, String> {
        let m = labels.len();
        if entries.len() != m || entries.iter().any(|r| r.len() != m) {
            return Err(format!("expected a {m}x{m} matrix"));
        }
        Ok(Self { labels, entries })
    }

    pub fn from_fn(labels: Vec<Label>, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let m = labels.len();
        let entries = (0..m).map(|i| (0..m).map(|j| f(i, j)).collect()).collect();
        Self { labels, entries }
    }

    pub fn identity(labels: Vec<Label>) -> Self {
        Self::from_fn(labels, |i, j| if i == j { RatFunc::one() } else { RatFunc::zero() })
    }

    pub fn diagonal(labels: Vec<Label>, diag: &[RatFunc]) -> Self {
        Self::from_fn(labels, |i, j| if i == j { diag[i].clone() } else { RatFunc::zero() })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.labels.clone(), |i, j| self.entries[j][i].clone())
    }

    /// Matrix product; panics if the label lists differ.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.labels, rhs.labels, "label lists must agree");
        let m = self.len();
        Self::from_fn(self.labels.clone(), |i, j| {
            (0..m)
                .filter(|&k| !self.entries[i][k].is_zero() && !rhs.entries[k][j].is_zero())
                .map(|k| &self.entries[i][k] * &rhs.entries[k][j])
                .sum()
        })
    }

    /// First asymmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        let m = self.len();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .find(|&(i, j)| self.entries[i][j] != self.entries[j][i])
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    /// Reindexed copy: entry `(a, b)` of the result is entry
    /// `(perm[a], perm[b])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        Self::from_fn(labels, |a, b| self.entries[perm[a]][perm[b]].clone())
    }
}
