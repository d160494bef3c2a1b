//! Character tables and class data against explicit enumeration of the
//! group elements.

use lscoinv_core::weyl::{char_table, CharTable, CycleType, Molien};
use lscoinv_core::{Label, LaurentPoly, Partition, WeylType};

/// All permutations of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Cycles of `perm` as lists of points.
fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            c.push(i);
            i = perm[i];
        }
        out.push(c);
    }
    out
}

fn partition(mut parts: Vec<usize>) -> Partition {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// A signed permutation `x_i -> signs[i] x_{perm[i]}` with its cycle type.
struct Signed {
    perm: Vec<usize>,
    signs: Vec<i64>,
}

impl Signed {
    fn all(n: usize) -> Vec<Signed> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(Signed { perm: perm.clone(), signs });
            }
        }
        out
    }

    fn cycle_type(&self) -> CycleType {
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for c in cycles(&self.perm) {
            let sign: i64 = c.iter().map(|&i| self.signs[i]).product();
            if sign == 1 { pos.push(c.len()) } else { neg.push(c.len()) }
        }
        CycleType::B { pos: partition(pos), neg: partition(neg) }
    }

    /// Matrix `M` with `M e_i = signs[i] e_{perm[i]}`.
    fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.perm.len();
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[self.perm[i]][i] = self.signs[i];
        }
        m
    }
}

/// `det(1 - t^2 M)` by the Leibniz formula.
fn det_one_minus(m: &[Vec<i64>]) -> LaurentPoly {
    let n = m.len();
    let entry = |i: usize, j: usize| {
        let delta = LaurentPoly::constant(i64::from(i == j));
        &delta - &LaurentPoly::monomial(m[i][j], 2)
    };
    permutations(n)
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term = (0..n).fold(LaurentPoly::one(), |acc, i| &acc * &entry(i, p[i]));
            if inversions % 2 == 0 { term } else { -term }
        })
        .sum()
}

fn class_of(table: &CharTable, ct: &CycleType) -> usize {
    table.classes.iter().position(|c| &c.cycles == ct).expect("cycle type has a class")
}

#[test]
fn type_b_class_sizes_traces_and_determinants() {
    for n in 1..=3 {
        let wt = WeylType::b(n);
        let table = char_table(wt);
        let elements = Signed::all(n);
        assert_eq!(elements.len() as u64, wt.order());
        let mut sizes = vec![0u64; table.classes.len()];
        let refl = table
            .label_index(&Label::b(partition(vec![n - 1].into_iter().filter(|&p| p > 0).collect()), partition(vec![1])))
            .unwrap();
        for w in &elements {
            let c = class_of(&table, &w.cycle_type());
            sizes[c] += 1;
            let m = w.matrix();
            let trace: i64 = (0..n).map(|i| m[i][i]).sum();
            assert_eq!(table.values[refl][c], trace, "B{n} reflection character");
            assert_eq!(table.classes[c].reflection_det(), det_one_minus(&m), "B{n} det(1 - t^2 w)");
        }
        let expected: Vec<u64> = table.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, expected, "B{n} class sizes");
    }
}

#[test]
fn type_b_elementwise_orthogonality() {
    for n in 1..=3 {
        let table = char_table(WeylType::b(n));
        let cls: Vec<usize> = Signed::all(n).iter().map(|w| class_of(&table, &w.cycle_type())).collect();
        for i in 0..table.labels.len() {
            for j in 0..table.labels.len() {
                let s: i64 = cls.iter().map(|&c| table.values[i][c] * table.values[j][c]).sum();
                assert_eq!(s, if i == j { table.order() as i64 } else { 0 });
            }
        }
    }
}

#[test]
fn type_a_class_sizes_and_determinants() {
    for n in 1..=5 {
        let wt = WeylType::a(n);
        let table = char_table(wt);
        let mut sizes = vec![0u64; table.classes.len()];
        for p in permutations(n) {
            let ct = CycleType::A(partition(cycles(&p).iter().map(Vec::len).collect()));
            let c = class_of(&table, &ct);
            sizes[c] += 1;
            let w = Signed { perm: p, signs: vec![1; n] };
            let perm_det = det_one_minus(&w.matrix());
            let expected = perm_det.exact_div(&LaurentPoly::from_i64s(&[1, 0, -1])).unwrap();
            assert_eq!(table.classes[c].reflection_det(), expected);
        }
        let expected: Vec<u64> = table.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, expected, "S{n} class sizes");
    }
}

#[test]
fn orthogonality_symmetric_and_hyperoctahedral() {
    for n in 1..=6 {
        char_table(WeylType::a(n)).check_orthogonality().unwrap();
    }
    for n in 1..=4 {
        char_table(WeylType::b(n)).check_orthogonality().unwrap();
    }
}

#[test]
fn coinvariant_poincare_polynomial() {
    let mut types: Vec<WeylType> = (1..=8).map(WeylType::a).collect();
    types.extend((1..=6).map(WeylType::b));
    for wt in types {
        let mol = Molien::new(char_table(wt));
        let lhs: LaurentPoly = mol
            .fake_degrees()
            .iter()
            .enumerate()
            .map(|(j, f)| f.scale(&mol.table().dim(j).into()))
            .sum();
        // [d_1]_{t^2} ... [d_r]_{t^2}
        let rhs = wt.fundamental_degrees().iter().fold(LaurentPoly::one(), |acc, &d| {
            let q: LaurentPoly = (0..d as i64).map(|k| LaurentPoly::t_pow(2 * k)).sum();
            &acc * &q
        });
        assert_eq!(lhs, rhs, "{wt}");
    }
}
