//! Individual checks. Each returns report records and never fails outright:
//! a violated identity is a `fail` record naming the labels involved.

use num_bigint::BigInt;

use super::linalg::{det_bareiss, det_cofactor, expand_in_basis};
use super::{CheckRecord, Status};
use crate::lsalgo::{ls_factorize_with_order, reconstruct, GradedMatrix, LsResult};
use crate::ring::{cyclotomic_product, LaurentPoly, RatFunc};
use crate::springer::{linear_extensions, refinements, Family, Label, OrbitPoset, Partition, WeylType};
use crate::weyl::{CharTable, CycleType};

fn record(name: &str, subject: Vec<Label>, ok: bool, detail: impl Into<String>) -> CheckRecord {
    CheckRecord {
        name: name.to_string(),
        subject,
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn pair(labels: &[Label], i: usize, j: usize) -> Vec<Label> {
    vec![labels[i].clone(), labels[j].clone()]
}

/// `P = K^T D K` entrywise, and each row of `P` expanded in the `K~` basis
/// (rows of `diag(D) K`) equals the corresponding column of `K`.
pub fn check_reciprocity(p: &GradedMatrix, k: &GradedMatrix, d: &[RatFunc]) -> Vec<CheckRecord> {
    let labels = p.labels();
    let m = p.len();
    let mut out = Vec::new();
    let rebuilt = reconstruct(k, d);
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (p.get(i, j), rebuilt.get(i, j));
            let detail = if a == b { format!("{a}") } else { format!("P = {a}, K^T D K = {b}") };
            out.push(record("reciprocity.bhrec", pair(labels, i, j), a == b, detail));
        }
    }
    let ktilde = GradedMatrix::from_fn(labels.to_vec(), |i, j| &d[i] * k.get(i, j));
    for lambda in 0..m {
        match expand_in_basis(p.row(lambda), &ktilde) {
            Ok(x) => {
                for (mu, xm) in x.iter().enumerate() {
                    let want = k.get(mu, lambda);
                    let detail = if xm == want {
                        format!("{xm}")
                    } else {
                        format!("[P:K~] = {xm}, [K:L] = {want}")
                    };
                    out.push(record("reciprocity.p_in_ktilde", pair(labels, lambda, mu), xm == want, detail));
                }
            }
            Err(e) => out.push(record("reciprocity.p_in_ktilde", vec![labels[lambda].clone()], false, e.to_string())),
        }
    }
    out
}

/// Exact determinant of `P` by fraction-free elimination.
pub fn cartan_determinant(p: &GradedMatrix) -> RatFunc {
    det_bareiss(p)
}

/// Largest size for which the cofactor expansion is also run.
pub const COFACTOR_LIMIT: usize = 7;

/// `det P = prod D`, by Bareiss and (for small sizes) by cofactor expansion.
pub fn check_cartan(p: &GradedMatrix, d: &[RatFunc]) -> Vec<CheckRecord> {
    let prod: RatFunc = d.iter().cloned().product();
    let det = cartan_determinant(p);
    let mut out = vec![record(
        "cartan_determinant.bareiss",
        vec![],
        det == prod,
        format!("det = {det}, prod D = {prod}"),
    )];
    if p.len() <= COFACTOR_LIMIT {
        let cof = det_cofactor(p);
        out.push(record(
            "cartan_determinant.cofactor",
            vec![],
            cof == prod,
            format!("det = {cof}, prod D = {prod}"),
        ));
    }
    out
}

/// Whether `f = t^k Q(t^4)` with `k >= 0` and `Q` in `N[t]`.
pub fn is_t4_parity(f: &LaurentPoly) -> bool {
    let Some(low) = f.low_exp() else { return true };
    low >= 0 && f.has_nonnegative_coeffs() && f.terms().all(|(e, _)| (e - low) % 4 == 0)
}

/// Every entry of `[K:L]` is `t^k Q(t^4)` with non-negative `Q`.
pub fn check_parity_typeb(k: &GradedMatrix) -> Vec<CheckRecord> {
    let labels = k.labels();
    let m = k.len();
    let mut out = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let e = k.get(i, j);
            let ok = e.as_laurent().is_some_and(is_t4_parity);
            out.push(record("parity_t4", pair(labels, i, j), ok, e.to_string()));
        }
    }
    out
}

/// Non-negative integer coefficients, and `deg K[l][m] <= d_l` with equality
/// only in the trivial column.
pub fn check_positivity(k: &GradedMatrix, poset: &OrbitPoset) -> Vec<CheckRecord> {
    let labels = k.labels();
    let triv = poset.wt.trivial_label();
    let m = k.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let e = k.get(i, j);
            let poly = e.as_laurent().filter(|f| f.is_polynomial() && f.has_nonnegative_coeffs());
            out.push(record("positivity", pair(labels, i, j), poly.is_some(), e.to_string()));
            let Some(f) = poly else { continue };
            let Some(deg) = f.high_exp() else { continue };
            let bound = poset.d[i] as i64;
            let ok = if labels[j] == triv { deg == bound } else { deg < bound };
            out.push(record(
                "degree_bound",
                pair(labels, i, j),
                ok,
                format!("deg = {deg}, d = {bound}"),
            ));
        }
    }
    out
}

/// `K[l][m] != 0` only if `l <= m` in the closure order.
pub fn check_support(k: &GradedMatrix, poset: &OrbitPoset) -> Vec<CheckRecord> {
    let labels = k.labels();
    let m = k.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let e = k.get(i, j);
            let ok = e.is_zero() || poset.leq[i][j];
            out.push(record("support", pair(labels, i, j), ok, e.to_string()));
        }
    }
    out
}

/// `K` is unitriangular and `kostka[l][l] = t^(d_l / 2)`.
pub fn check_kostka_diagonal(res: &LsResult, poset: &OrbitPoset) -> Vec<CheckRecord> {
    (0..poset.len())
        .flat_map(|i| {
            let subject = vec![poset.labels[i].clone()];
            let want = LaurentPoly::t_pow(poset.d[i] as i64 / 2);
            let got = &res.kostka[i][i];
            let unit = res.k.get(i, i);
            [
                record("unitriangular", subject.clone(), unit.is_one(), unit.to_string()),
                record("kostka_diagonal", subject, *got == want, format!("{got}, expected {want}")),
            ]
        })
        .collect()
}

/// Row of the zero orbit equals `t^d * bar(fake degree)`.
pub fn check_minimum_row(k: &GradedMatrix, poset: &OrbitPoset, fake_degrees: &[LaurentPoly]) -> Vec<CheckRecord> {
    let Some(lo) = poset.minimum() else {
        return vec![record("minimum_row", vec![], true, "skipped: no unique minimum")];
    };
    let shift = poset.d[lo] as i64;
    (0..poset.len())
        .map(|mu| {
            let want = RatFunc::from(fake_degrees[mu].bar().shift(shift));
            let got = k.get(lo, mu);
            record(
                "minimum_row",
                pair(&poset.labels, lo, mu),
                *got == want,
                format!("{got}, expected {want}"),
            )
        })
        .collect()
}

/// Each `D_g` expands to a power series with non-negative integer
/// coefficients, checked below `order`.
pub fn check_d_series(labels: &[Label], d: &[RatFunc], order: i64) -> Vec<CheckRecord> {
    labels
        .iter()
        .zip(d)
        .map(|(l, dg)| {
            let (ok, detail) = match dg.series_expand(order) {
                Ok(s) => (s.is_polynomial() && s.has_nonnegative_coeffs(), format!("{dg} = {s} + O(t^{order})")),
                Err(e) => (false, format!("{dg}: {e}")),
            };
            record("d_series", vec![l.clone()], ok, detail)
        })
        .collect()
}

/// Pairing of `K~_l` (in `P`-coordinates) against `K*_m` (in
/// `L`-coordinates) with `<a, b> = sum bar(a_i) b_i`; must be the identity.
///
/// `K~_l` is first written in `L`-coordinates as row `l` of `diag(D) K`, then
/// expanded in the basis of projectives recomputed as `K^T D K`.
pub fn euler_orthogonality(k: &GradedMatrix, d: &[RatFunc]) -> Vec<CheckRecord> {
    let labels = k.labels();
    let m = k.len();
    let p = reconstruct(k, d);
    let mut out = Vec::new();
    for lambda in 0..m {
        let ktilde: Vec<RatFunc> = k.row(lambda).iter().map(|x| &d[lambda] * x).collect();
        let a = match expand_in_basis(&ktilde, &p) {
            Ok(a) => a,
            Err(e) => {
                out.push(record("euler_pairing", vec![labels[lambda].clone()], false, e.to_string()));
                continue;
            }
        };
        for mu in 0..m {
            let v: RatFunc = (0..m)
                .filter(|&nu| !a[nu].is_zero() && !k.get(mu, nu).is_zero())
                .map(|nu| &a[nu].bar() * &k.get(mu, nu).bar())
                .sum();
            let ok = if lambda == mu { v.is_one() } else { v.is_zero() };
            out.push(record("euler_pairing", pair(labels, lambda, mu), ok, v.to_string()));
        }
    }
    out
}

/// Same `K`, `D` and Kostka matrix along other linear extensions.
pub fn check_refinements(p: &GradedMatrix, poset: &OrbitPoset, reference: &LsResult, count: usize, seed: u64) -> Vec<CheckRecord> {
    let orders = refinements(poset, count, seed);
    let available = linear_extensions(&poset.leq, count).len();
    let mut out = vec![record(
        "refinement_count",
        vec![],
        orders.len() == available.min(count),
        format!("{} linear extensions sampled (requested {count})", orders.len()),
    )];
    for (i, order) in orders.iter().enumerate() {
        let (ok, detail) = match ls_factorize_with_order(p, poset, order) {
            Ok(r) if r == *reference => (true, format!("extension {i}: {order:?}")),
            Ok(_) => (false, format!("extension {i}: {order:?} gives a different factorization")),
            Err(e) => (false, format!("extension {i}: {order:?}: {e}")),
        };
        out.push(record("refinement_independence", vec![], ok, detail));
    }
    out
}

/// Type A: normalized Kostka matrix against the charge oracle on every pair.
pub fn check_cocharge_oracle(res: &LsResult) -> Vec<CheckRecord> {
    let m = res.labels.len();
    let mut out = Vec::with_capacity(m * m);
    for shape in 0..m {
        for weight in 0..m {
            let (Label::A { partition: s }, Label::A { partition: w }) = (&res.labels[shape], &res.labels[weight]) else {
                out.push(record("cocharge_oracle", pair(&res.labels, shape, weight), false, "not a type A label"));
                continue;
            };
            let want = super::cocharge_kostka_oracle(s, w);
            let got = &res.kostka[shape][weight];
            let detail = if *got == want { got.to_string() } else { format!("{got}, oracle {want}") };
            out.push(record("cocharge_oracle", pair(&res.labels, shape, weight), *got == want, detail));
        }
    }
    out
}

/// Row and column orthogonality of the character table.
pub fn check_char_table(table: &CharTable) -> Vec<CheckRecord> {
    let (ok, detail) = match table.check_orthogonality() {
        Ok(()) => (true, format!("{} classes", table.classes.len())),
        Err(e) => (false, e.to_string()),
    };
    vec![record("char_table.orthogonality", vec![], ok, detail)]
}

/// `sum_l dim(l) * fake(l) = prod (1 - t^(2 d_i)) / (1 - t^2)^r`, the graded
/// dimension of the coinvariant algebra.
pub fn check_coinvariant(table: &CharTable, fake_degrees: &[LaurentPoly]) -> Vec<CheckRecord> {
    let wt = table.wt;
    let lhs: LaurentPoly = fake_degrees
        .iter()
        .enumerate()
        .map(|(j, f)| f.scale(&BigInt::from(table.dim(j))))
        .sum();
    let mut rhs = cyclotomic_product(wt.fundamental_degrees().iter().map(|&d| 2 * d as i64));
    let base = cyclotomic_product([2]);
    for _ in 0..wt.reflection_dim() {
        rhs = rhs.exact_div(&base).expect("each 1 - t^(2d) is divisible by 1 - t^2");
    }
    vec![record("coinvariant_poincare", vec![], lhs == rhs, format!("{lhs}"))]
}

/// The determinant and (type B) sign-permutation characters, located by their
/// values rather than by label, must sit where the dictionary says with the
/// expected `d`.
pub fn check_dictionary(table: &CharTable, poset: &OrbitPoset) -> Vec<CheckRecord> {
    let wt: WeylType = table.wt;
    let n = wt.rank;
    let parity = |k: usize| if k.is_multiple_of(2) { -1i64 } else { 1 };
    let det_char: Vec<i64> = table
        .classes
        .iter()
        .map(|c| match &c.cycles {
            CycleType::A(mu) => mu.parts().iter().map(|&k| parity(k)).product(),
            CycleType::B { pos, neg } => {
                pos.parts().iter().map(|&k| parity(k)).product::<i64>() * neg.parts().iter().map(|&k| -parity(k)).product::<i64>()
            }
        })
        .collect();
    let perm_sign: Vec<i64> = table
        .classes
        .iter()
        .map(|c| match &c.cycles {
            CycleType::A(mu) => mu.parts().iter().map(|&k| parity(k)).product(),
            CycleType::B { pos, neg } => pos.parts().iter().chain(neg.parts()).map(|&k| parity(k)).product(),
        })
        .collect();
    let ones = Partition::new(vec![1; n]).unwrap();
    let locate = |values: &[i64]| table.values.iter().position(|row| row == values).map(|i| table.labels[i].clone());

    let mut out = Vec::new();
    let mut gate = |name: &str, values: &[i64], expected: Label, d: usize, minimum: bool| {
        let found = locate(values);
        let idx = found.as_ref().and_then(|l| poset.index_of(l));
        let ok = found.as_ref() == Some(&expected)
            && idx.is_some_and(|i| poset.d[i] == d && (!minimum || poset.minimum() == Some(i)));
        let detail = match (&found, idx) {
            (Some(l), Some(i)) => format!("character found at {l} with d = {}, expected {expected} with d = {d}", poset.d[i]),
            _ => "character not found among the irreducibles".to_string(),
        };
        out.push(record(name, vec![expected], ok, detail));
    };
    match wt.family {
        Family::A => gate("dictionary.sgn", &det_char, Label::a(ones), n * (n - 1), true),
        Family::B => {
            gate("dictionary.sgn", &det_char, Label::b(Partition::empty(), ones.clone()), 2 * n * n, true);
            gate("dictionary.ssgn", &perm_sign, Label::b(ones, Partition::empty()), 2 * n * n - 2 * n, false);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lsalgo::ls_factorize;
    use crate::springer::build_poset;
    use crate::weyl::{char_table, pl_matrix, Molien};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn all_pass(recs: &[CheckRecord]) -> bool {
        recs.iter().all(|r| r.status == Status::Pass)
    }

    fn pipeline(wt: WeylType) -> (GradedMatrix, OrbitPoset, LsResult) {
        let p = pl_matrix(wt);
        let poset = build_poset(wt).unwrap();
        let res = ls_factorize(&p, &poset).unwrap();
        (p, poset, res)
    }

    #[test]
    fn parity_patterns() {
        assert!(is_t4_parity(&LaurentPoly::zero()));
        assert!(is_t4_parity(&lp("t^2 + t^6")));
        assert!(!is_t4_parity(&lp("t^2 + t^4")));
        assert!(!is_t4_parity(&lp("t^2 - t^6")));
        assert!(!is_t4_parity(&lp("t^-2")));
    }

    #[test]
    fn reciprocity_passes_and_detects_fault() {
        let (p, _, res) = pipeline(WeylType::a(3));
        assert!(all_pass(&check_reciprocity(&p, &res.k, &res.d)));
        let mut bad = p.clone();
        bad.set(1, 2, bad.get(1, 2) + &RatFunc::from(LaurentPoly::t_pow(1)));
        let recs = check_reciprocity(&bad, &res.k, &res.d);
        let failed: Vec<_> = recs
            .iter()
            .filter(|r| r.name == "reciprocity.bhrec" && r.status == Status::Fail)
            .map(|r| r.subject.clone())
            .collect();
        assert_eq!(failed, vec![vec![p.labels()[1].clone(), p.labels()[2].clone()]]);
    }

    #[test]
    fn cartan_a2_and_faulty_d() {
        let (p, _, res) = pipeline(WeylType::a(2));
        assert!(all_pass(&check_cartan(&p, &res.d)));
        let mut d = res.d.clone();
        d[0] = RatFunc::from(2);
        assert!(!all_pass(&check_cartan(&p, &d)));
    }

    #[test]
    fn euler_pairing_is_d_independent() {
        let (_, _, res) = pipeline(WeylType::b(2));
        assert!(all_pass(&euler_orthogonality(&res.k, &res.d)));
        let wrong: Vec<RatFunc> = res.d.iter().map(|x| x * &RatFunc::from(3)).collect();
        assert!(all_pass(&euler_orthogonality(&res.k, &wrong)));
    }

    #[test]
    fn minimum_row_b1() {
        let (_, poset, res) = pipeline(WeylType::b(1));
        let fakes = Molien::new(char_table(WeylType::b(1))).fake_degrees();
        assert_eq!(fakes, vec![lp("1"), lp("t^2")]);
        assert!(all_pass(&check_minimum_row(&res.k, &poset, &fakes)));
        assert_eq!(res.k.get(1, 0), &RatFunc::from(lp("t^2")));
    }

    #[test]
    fn gates_on_b3() {
        let wt = WeylType::b(3);
        let (p, poset, res) = pipeline(wt);
        assert!(all_pass(&check_parity_typeb(&res.k)));
        assert!(all_pass(&check_positivity(&res.k, &poset)));
        assert!(all_pass(&check_support(&res.k, &poset)));
        assert!(all_pass(&check_kostka_diagonal(&res, &poset)));
        assert!(all_pass(&check_dictionary(&char_table(wt), &poset)));
        assert!(all_pass(&check_d_series(&poset.labels, &res.d, 40)));
        assert!(all_pass(&check_refinements(&p, &poset, &res, 3, 7)));
    }

    #[test]
    fn oracle_on_a4() {
        let (_, _, res) = pipeline(WeylType::a(4));
        let recs = check_cocharge_oracle(&res);
        assert_eq!(recs.len(), 25);
        assert!(all_pass(&recs));
    }

    #[test]
    fn support_flags_violation() {
        let (_, poset, res) = pipeline(WeylType::a(3));
        let mut k = res.k.clone();
        k.set(0, 2, RatFunc::one());
        let fails = check_support(&k, &poset).into_iter().filter(|r| r.status == Status::Fail).count();
        assert_eq!(fails, 1);
    }
}
