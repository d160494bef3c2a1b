//! Linear extensions of the closure order, listed more-open first: if
//! `leq[i][j]` with `i != j` then `j` precedes `i`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// True iff `order` is a permutation of `0..leq.len()` placing every element
/// after all elements strictly above it.
pub fn is_linear_extension(leq: &[Vec<bool>], order: &[usize]) -> bool {
    let m = leq.len();
    if order.len() != m {
        return false;
    }
    let mut pos = vec![usize::MAX; m];
    for (p, &i) in order.iter().enumerate() {
        if i >= m || pos[i] != usize::MAX {
            return false;
        }
        pos[i] = p;
    }
    (0..m).all(|i| (0..m).all(|j| i == j || !leq[i][j] || pos[j] < pos[i]))
}

/// Elements whose strict upper set is already placed.
fn available(leq: &[Vec<bool>], placed: &[bool]) -> Vec<usize> {
    let m = leq.len();
    (0..m)
        .filter(|&i| !placed[i] && (0..m).all(|j| j == i || !leq[i][j] || placed[j]))
        .collect()
}

/// Up to `limit` linear extensions by exhaustive depth-first search, in
/// lexicographic order of the index sequence.
pub fn linear_extensions(leq: &[Vec<bool>], limit: usize) -> Vec<Vec<usize>> {
    fn rec(leq: &[Vec<bool>], placed: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if cur.len() == leq.len() {
            out.push(cur.clone());
            return;
        }
        for i in available(leq, placed) {
            placed[i] = true;
            cur.push(i);
            rec(leq, placed, cur, out, limit);
            cur.pop();
            placed[i] = false;
        }
    }
    let mut out = Vec::new();
    rec(leq, &mut vec![false; leq.len()], &mut Vec::new(), &mut out, limit);
    out
}

fn random_extension(leq: &[Vec<bool>], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut placed = vec![false; leq.len()];
    let mut order = Vec::with_capacity(leq.len());
    while order.len() < leq.len() {
        let i = *available(leq, &placed).choose(rng).expect("a finite poset has a maximal element");
        placed[i] = true;
        order.push(i);
    }
    order
}

/// `reference` first, then seeded random extensions; falls back to
/// exhaustive enumeration when sampling stalls, so a short result means the
/// poset has no more extensions.
pub(crate) fn sample_extensions(leq: &[Vec<bool>], reference: &[usize], count: usize, seed: u64) -> Vec<Vec<usize>> {
    let count = count.max(1);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = vec![reference.to_vec()];
    seen.insert(reference.to_vec());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 * count {
        if out.len() >= count {
            return out;
        }
        let ext = random_extension(leq, &mut rng);
        if seen.insert(ext.clone()) {
            out.push(ext);
        }
    }
    for ext in linear_extensions(leq, count + 1) {
        if out.len() >= count {
            break;
        }
        if seen.insert(ext.clone()) {
            out.push(ext);
        }
    }
    out
}
