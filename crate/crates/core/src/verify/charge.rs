//! Modified Kostka polynomials from the charge statistic, as an oracle for
//! type A that shares no code with the Molien / elimination pipeline.
//!
//! For a tableau `T` of partition weight `w`:
//!
//! 1. Read `T` row by row from the bottom row to the top, each row left to
//!    right.
//! 2. Split the word into standard subwords: take the rightmost `1`, then scan
//!    leftwards (wrapping around from the start to the end) for a `2`, then
//!    a `3`, and so on up to the largest letter left. Remove those letters and
//!    repeat on what remains.
//! 3. In each standard subword give `1` index 0. If `r + 1` sits to the right
//!    of `r`, its index is one more than that of `r`, otherwise the same.
//!    The charge of the subword is the sum of its indices.
//! 4. `charge(T)` is the sum over subwords, and `cocharge(T) = n(w) - charge(T)`.
//!
//! `K~_{shape,weight}(t) = sum_T t^cocharge(T)` over semistandard tableaux.

use num_bigint::BigInt;

use crate::ring::LaurentPoly;
use crate::springer::Partition;

/// Rows of a semistandard tableau with entries `1..`.
pub type Tableau = Vec<Vec<usize>>;

/// All semistandard tableaux of `shape` with content `weight`.
///
/// Letter `i` occupies a horizontal strip, so the tableaux correspond to
/// chains of partitions growing by horizontal strips of sizes `weight_i`.
pub fn semistandard_tableaux(shape: &Partition, weight: &Partition) -> Vec<Tableau> {
    fn grow(shape: &[usize], weight: &[usize], letter: usize, cur: &mut Vec<usize>, tab: &mut Tableau, out: &mut Vec<Tableau>) {
        if letter == weight.len() {
            if cur.as_slice() == shape {
                out.push(tab.clone());
            }
            return;
        }
        // distribute weight[letter] boxes over rows; row r may grow to at most
        // min(shape[r], previous length of row r - 1)
        fn place(
            r: usize,
            left: usize,
            shape: &[usize],
            weight: &[usize],
            letter: usize,
            prev: &[usize],
            cur: &mut Vec<usize>,
            tab: &mut Tableau,
            out: &mut Vec<Tableau>,
        ) {
            if r == shape.len() {
                if left == 0 {
                    grow(shape, weight, letter + 1, cur, tab, out);
                }
                return;
            }
            let cap = if r == 0 { shape[0] } else { shape[r].min(prev[r - 1]) };
            let room = cap.saturating_sub(prev[r]);
            for k in (0..=room.min(left)).rev() {
                cur[r] = prev[r] + k;
                tab[r].extend(std::iter::repeat_n(letter + 1, k));
                place(r + 1, left - k, shape, weight, letter, prev, cur, tab, out);
                let len = tab[r].len();
                tab[r].truncate(len - k);
            }
            cur[r] = prev[r];
        }
        let prev = cur.clone();
        place(0, weight[letter], shape, weight, letter, &prev, cur, tab, out);
    }

    if shape.size() != weight.size() {
        return Vec::new();
    }
    let shape = shape.parts();
    let mut out = Vec::new();
    let mut cur = vec![0; shape.len()];
    let mut tab = vec![Vec::new(); shape.len()];
    grow(shape, weight.parts(), 0, &mut cur, &mut tab, &mut out);
    out
}

/// Bottom row first, each row left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut alive: Vec<bool> = vec![true; word.len()];
    let mut left = word.len();
    let mut total = 0;
    while left > 0 {
        let max = (0..word.len()).filter(|&i| alive[i]).map(|i| word[i]).max().unwrap();
        // positions of 1, 2, ..., max in this subword
        let mut pos = Vec::with_capacity(max);
        let mut start = word.len();
        for letter in 1..=max {
            let found = (0..word.len())
                .map(|k| (start + word.len() - 1 - k) % word.len())
                .find(|&i| alive[i] && word[i] == letter)
                .expect("content is a partition");
            pos.push(found);
            start = found;
        }
        let mut index = 0;
        for r in 1..max {
            if pos[r] > pos[r - 1] {
                index += 1;
            }
            total += index;
        }
        for p in pos {
            alive[p] = false;
        }
        left -= max;
    }
    total
}

/// `sum_T t^(n(weight) - charge(T))` over tableaux of `shape` and `weight`.
pub fn cocharge_kostka_oracle(shape: &Partition, weight: &Partition) -> LaurentPoly {
    let n = weight.n_invariant() as i64;
    semistandard_tableaux(shape, weight)
        .iter()
        .map(|t| LaurentPoly::monomial(BigInt::from(1), n - charge(&reading_word(t)) as i64))
        .sum()
}
