//! Helpers shared by the integration tests.

#![allow(dead_code)]

use qtoric::CharPair;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn cp(n: usize, m: usize, a: &[i64], b: &[i64]) -> CharPair {
    CharPair::new(n, m, a.to_vec(), b.to_vec()).expect("well-shaped test data")
}

/// `count` copies of `value` followed by zeros, total length `len`.
pub fn block(value: i64, count: usize, len: usize) -> Vec<i64> {
    let mut v = vec![value; count];
    v.resize(len, 0);
    v
}

/// Non-Bott data with `s` twos on the `a` side and `r` ones on the `b` side.
pub fn s_r_pair(n: usize, m: usize, s: usize, r: usize) -> CharPair {
    cp(n, m, &block(2, s, m), &block(1, r, n))
}

/// Non-Bott data with `s` ones on the `a` side and `r` twos on the `b` side.
pub fn s_r_pair_swapped_roles(n: usize, m: usize, s: usize, r: usize) -> CharPair {
    cp(n, m, &block(1, s, m), &block(2, r, n))
}

/// Random non-singular data: a mix of products, Bott twists on either side,
/// and non-Bott data with random signs, positions and orientation.
pub fn random_valid_pair<R: Rng>(rng: &mut R, max_dim: usize) -> CharPair {
    let n = rng.gen_range(1..=max_dim);
    let m = rng.gen_range(1..=max_dim);
    let (a, b) = match rng.gen_range(0..4) {
        0 => (vec![0; m], vec![0; n]),
        1 => ((0..m).map(|_| rng.gen_range(-5..=5)).collect(), vec![0; n]),
        2 => (vec![0; m], (0..n).map(|_| rng.gen_range(-5..=5)).collect()),
        _ => {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let (big, small) = if rng.gen_bool(0.5) { (2, 1) } else { (1, 2) };
            let s = rng.gen_range(1..=m);
            let r = rng.gen_range(1..=n);
            let mut a = block(big * sign, s, m);
            let mut b = block(small * sign, r, n);
            a.shuffle(rng);
            b.shuffle(rng);
            (a, b)
        }
    };
    cp(n, m, &a, &b)
}

/// Rank over the rationals by fraction-free elimination. Independent of the
/// library's normal-form code.
pub fn rational_rank(rows: &[Vec<num_bigint::BigInt>]) -> usize {
    use num_traits::Zero;
    let mut a: Vec<Vec<num_bigint::BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let g = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x = &*x * &pivot[c] - p * &g;
            }
        }
        rank += 1;
    }
    rank
}

pub fn bigs(v: &[i64]) -> Vec<num_bigint::BigInt> {
    v.iter().map(|&x| num_bigint::BigInt::from(x)).collect()
}
