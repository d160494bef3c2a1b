use std::fmt;

use serde::{Deserialize, Serialize};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and wraps; zero parts at the end are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, String> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err(format!("parts {parts:?} contain an interior zero"));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `sum_i (i - 1) * p_i` with 1-based `i`.
    pub fn n_invariant(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Self((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Multiplicity of each part size: `m[k]` = number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = String;
    fn try_from(v: Vec<usize>) -> Result<Self, String> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Shorthand for tests and examples: `partition![2, 1]`.
#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::springer::Partition::new(vec![$($p),*]).expect("valid partition")
    };
}

/// An orbit / irreducible-character label: a partition for type A, an ordered
/// bipartition `(alpha; beta)` for type B.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    A { partition: Partition },
    B { alpha: Partition, beta: Partition },
}

impl Label {
    pub fn a(p: Partition) -> Self {
        Label::A { partition: p }
    }

    pub fn b(alpha: Partition, beta: Partition) -> Self {
        Label::B { alpha, beta }
    }

    pub fn size(&self) -> usize {
        match self {
            Label::A { partition } => partition.size(),
            Label::B { alpha, beta } => alpha.size() + beta.size(),
        }
    }

    /// The sequence compared by the closure order: the partition itself for
    /// type A, `(a1, b1, a2, b2, ...)` for type B, padded with zeros to length
    /// `2 * size`.
    pub fn flattened(&self) -> Vec<usize> {
        let n = self.size();
        match self {
            Label::A { partition } => (0..n.max(1)).map(|i| partition.part(i)).collect(),
            Label::B { alpha, beta } => (0..n.max(1)).flat_map(|i| [alpha.part(i), beta.part(i)]).collect(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A { partition } => write!(f, "{partition}"),
            Label::B { alpha, beta } => write!(f, "({alpha},{beta})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_small_n() {
        let p5 = Partition::all(5);
        assert_eq!(p5.len(), 7);
        assert_eq!(p5[0], partition![5]);
        assert_eq!(p5[6], partition![1, 1, 1, 1, 1]);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn n_invariant_examples() {
        assert_eq!(partition![3].n_invariant(), 0);
        assert_eq!(partition![2, 1].n_invariant(), 1);
        assert_eq!(partition![1, 1, 1].n_invariant(), 3);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn label_json() {
        let a = Label::a(partition![2, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"partition":[2,1]}"#);
        let b = Label::b(partition![1], Partition::empty());
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"alpha":[1],"beta":[]}"#);
        assert_eq!(serde_json::from_str::<Label>(r#"{"alpha":[1],"beta":[]}"#).unwrap(), b);
        assert_eq!(b.to_string(), "((1),())");
    }

    #[test]
    fn conjugate_involution() {
        for p in Partition::all(6) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
}
