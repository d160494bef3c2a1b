//! Exact linear algebra over `Q(t)` used by the checks. Deliberately separate
//! from the LS elimination: plain Gaussian elimination for solves and
//! inverses, fraction-free Bareiss over `Z[t, t^-1]` for determinants.

use crate::lsalgo::GradedMatrix;
use crate::ring::{LaurentPoly, RatFunc};

use super::VerifyError;

/// Solves `x A = b` for the row vector `x` by Gaussian elimination on `A^T`.
fn solve_left(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Result<Vec<RatFunc>, VerifyError> {
    let m = a.len();
    // augmented system A^T x^T = b^T
    let mut rows: Vec<Vec<RatFunc>> = (0..m)
        .map(|i| {
            let mut r: Vec<RatFunc> = (0..m).map(|j| a[j][i].clone()).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !rows[r][col].is_zero()).ok_or(VerifyError::Singular)?;
        rows.swap(col, piv);
        let inv = rows[col][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<RatFunc> = rows[col].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[c] = &row[c] - &(&f * pv);
                }
            }
        }
        rows[col] = pivot_row;
    }
    Ok(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Coordinates of the character vector `v` (in `L`-coordinates) with respect
/// to the basis whose `i`-th element is row `i` of `basis`.
pub fn expand_in_basis(v: &[RatFunc], basis: &GradedMatrix) -> Result<Vec<RatFunc>, VerifyError> {
    if v.len() != basis.len() {
        return Err(VerifyError::Dimension);
    }
    solve_left(basis.rows(), v)
}

/// Matrix inverse by solving against unit vectors.
pub fn inverse(m: &GradedMatrix) -> Result<GradedMatrix, VerifyError> {
    let n = m.len();
    let mut inv_rows = Vec::with_capacity(n);
    for i in 0..n {
        let e: Vec<RatFunc> = (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect();
        // row i of M^-1 satisfies x M = e_i
        inv_rows.push(solve_left(m.rows(), &e)?);
    }
    Ok(GradedMatrix::new(m.labels().to_vec(), inv_rows).expect("square"))
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = a.gcd(b);
    (a * b).exact_div(&g).expect("gcd divides the product")
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// The matrix is first cleared to `Z[t, t^-1]` by the LCM of its
/// denominators; every division in the elimination is then exact.
pub fn det_bareiss(m: &GradedMatrix) -> RatFunc {
    let n = m.len();
    if n == 0 {
        return RatFunc::one();
    }
    let common = m
        .rows()
        .iter()
        .flatten()
        .fold(LaurentPoly::one(), |acc, x| lcm(&acc, x.denom()));
    let mut a: Vec<Vec<LaurentPoly>> = m
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.numer() * &common.exact_div(x.denom()).expect("lcm is a multiple"))
                .collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return RatFunc::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    RatFunc::new(det, common.pow(n as u32)).expect("nonzero denominator")
}

/// Laplace expansion along the first row. Exponential; small matrices only.
pub fn det_cofactor(m: &GradedMatrix) -> RatFunc {
    fn rec(rows: &[Vec<RatFunc>], cols: &[usize]) -> RatFunc {
        let k = rows.len() - cols.len();
        if cols.is_empty() {
            return RatFunc::one();
        }
        let mut acc = RatFunc::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let x = &rows[k][c];
            if x.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
            let term = x * &rec(rows, &rest);
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let cols: Vec<usize> = (0..m.len()).collect();
    rec(m.rows(), &cols)
}
