//! Graded multiplicities `[P_lambda : L_mu] = gdim Hom_W(L_mu, L_lambda (x) C[t])`
//! as Molien series, with `t*` in degree 2.
//!
//! Every `det(1 - t^2 w)` divides `Q = prod_i (1 - t^(2 d_i))`, so the sum is
//! taken over that common denominator with integer polynomial arithmetic and
//! reduced once at the end.

use rayon::prelude::*;

use super::{char_table, CharTable, WeylError, WeylType};
use crate::lsalgo::GradedMatrix;
use crate::ring::{cyclotomic_product, LaurentPoly, RatFunc};
use crate::springer::Label;

/// Molien-series evaluator for one Weyl group.
#[derive(Clone, Debug)]
pub struct Molien {
    table: CharTable,
    denominator: LaurentPoly,
    cofactors: Vec<LaurentPoly>,
}

impl Molien {
    pub fn new(table: CharTable) -> Self {
        let denominator = cyclotomic_product(table.wt.fundamental_degrees().iter().map(|&d| 2 * d as i64));
        let cofactors = table
            .classes
            .iter()
            .map(|c| denominator.exact_div(&c.reflection_det()).expect("det(1 - t^2 w) divides the invariant denominator"))
            .collect();
        Self {
            table,
            denominator,
            cofactors,
        }
    }

    pub fn table(&self) -> &CharTable {
        &self.table
    }

    pub fn wt(&self) -> WeylType {
        self.table.wt
    }

    /// `prod_i (1 - t^(2 d_i))` over the fundamental degrees.
    pub fn invariant_denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    /// `[P_i : L_j] * Q` as a polynomial.
    pub fn numerator(&self, i: usize, j: usize) -> LaurentPoly {
        let t = &self.table;
        let sum: LaurentPoly = t
            .classes
            .iter()
            .enumerate()
            .map(|(c, cl)| {
                let w = cl.size as i128 * t.values[i][c] as i128 * t.values[j][c] as i128;
                self.cofactors[c].scale(&w.into())
            })
            .sum();
        sum.div_scalar(&t.order().into()).expect("Molien sums are integral")
    }

    pub fn graded_mult_at(&self, i: usize, j: usize) -> RatFunc {
        RatFunc::new(self.numerator(i, j), self.denominator.clone()).expect("nonzero denominator")
    }

    pub fn graded_mult(&self, lambda: &Label, mu: &Label) -> Result<RatFunc, WeylError> {
        Ok(self.graded_mult_at(self.table.label_index(lambda)?, self.table.label_index(mu)?))
    }

    /// Fake degree of `mu`: its graded multiplicity in the coinvariant algebra.
    pub fn fake_degree(&self, mu: &Label) -> Result<LaurentPoly, WeylError> {
        let j = self.table.label_index(mu)?;
        Ok(self.numerator(0, j))
    }

    /// All fake degrees, in label order.
    pub fn fake_degrees(&self) -> Vec<LaurentPoly> {
        (0..self.table.labels.len()).map(|j| self.numerator(0, j)).collect()
    }

    /// The symmetric matrix `[P:L]`, indexed by the table's label order.
    pub fn pl_matrix(&self) -> GradedMatrix {
        let m = self.table.labels.len();
        let upper: Vec<(usize, usize, RatFunc)> = (0..m)
            .flat_map(|i| (i..m).map(move |j| (i, j)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(i, j)| (i, j, self.graded_mult_at(i, j)))
            .collect();
        let mut entries = vec![vec![RatFunc::zero(); m]; m];
        for (i, j, v) in upper {
            entries[j][i] = v.clone();
            entries[i][j] = v;
        }
        GradedMatrix::new(self.table.labels.clone(), entries).expect("square by construction")
    }
}

pub fn graded_mult(wt: WeylType, lambda: &Label, mu: &Label) -> Result<RatFunc, WeylError> {
    Molien::new(char_table(wt)).graded_mult(lambda, mu)
}

pub fn fake_degree(wt: WeylType, mu: &Label) -> Result<LaurentPoly, WeylError> {
    Molien::new(char_table(wt)).fake_degree(mu)
}

pub fn pl_matrix(wt: WeylType) -> GradedMatrix {
    Molien::new(char_table(wt)).pl_matrix()
}
