#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tlgsb::scalars::rational;
use tlgsb::{DeltaPoly, NcPoly, Word};

/// `"00.1.0"` reads as E0 E0 E1 E0: each dot-separated group is a run of
/// single-digit letters.
pub fn w(s: &str) -> Word {
    Word::new(s.chars().filter(|c| *c != '.').map(|c| c.to_digit(10).unwrap() as u8).collect())
}

pub fn word_set(items: &[&str]) -> BTreeSet<Word> {
    items.iter().map(|s| w(s)).collect()
}

/// Standard monomials of T(A_2).
pub const GOLDEN_A2: [&str; 5] = ["", "1", "21", "2", "1.2"];

/// Standard monomials of T(A_3).
pub const GOLDEN_A3: [&str; 14] = [
    "", "1", "21", "2", "1.2", "321", "32", "3", "1.32", "1.3", "21.32", "21.3", "2.3", "1.2.3",
];

/// Standard monomials of T(B_3) containing E0.
pub const GOLDEN_B3_ZERO: [&str; 19] = [
    "0", "0.10", "10", "0.1", "1.0.1", "0.210", "210", "0.21", "2.1.0.1", "0.2", "2.1.0.1.2", "0.10.210",
    "10.210", "0.10.21", "10.21", "0.10.2", "10.2", "0.1.2", "1.0.1.2",
];

/// Standard monomials of T(3,3) containing E0².
pub const GOLDEN_T33_ZERO_SQ: [&str; 35] = [
    "00",
    "00.1",
    "00.1.2",
    "00.21",
    "00.2",
    "00.10",
    "00.10.21",
    "00.10.2",
    "1.00",
    "1.00.21",
    "1.00.2",
    "0.1.00",
    "0.1.00.21",
    "0.1.00.2",
    "00.1.00",
    "00.1.00.21",
    "00.1.00.2",
    "00.210",
    "00.10.210",
    "1.00.210",
    "0.1.00.210",
    "00.1.00.210",
    "21.00",
    "0.21.00",
    "00.21.00",
    "10.21.00",
    "1.00.21.00",
    "0.10.21.00",
    "00.10.21.00",
    "0.1.00.21.00",
    "00.1.00.21.00",
    "1.00.1",
    "1.00.1.2",
    "21.00.1",
    "21.00.1.2",
];

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u128) -> u128 {
    binom(2 * n, n) / (n + 1)
}

/// Ballot number: lattice paths from (0,0) to (n,k) staying weakly below
/// the diagonal, counted by dynamic programming.
pub fn ballot(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut grid = vec![vec![0u128; n + 1]; n + 1];
    grid[0][0] = 1;
    for x in 0..=n {
        for y in 0..=x {
            if x == 0 && y == 0 {
                continue;
            }
            let from_left = if x > 0 && y <= x - 1 { grid[x - 1][y] } else { 0 };
            let from_below = if y > 0 { grid[x][y - 1] } else { 0 };
            grid[x][y] = from_left + from_below;
        }
    }
    grid[n][k]
}

/// Σ_{s ≤ k} C(n,s) x^{k-s}.
pub fn triangle_poly(n: usize, k: usize, x: u128) -> u128 {
    (0..=k).map(|s| ballot(n, s) * x.pow((k - s) as u32)).sum()
}

pub fn oracle_dimension(d: usize, n: usize) -> u128 {
    let d = d as u128;
    (d - 1) * (triangle_poly(n, n - 1, d) - 1) + d * catalan(n as u128)
}

pub fn random_coeff(rng: &mut ChaCha8Rng) -> DeltaPoly {
    let num = loop {
        let v = rng.gen_range(-5i64..=5);
        if v != 0 {
            break v;
        }
    };
    DeltaPoly::monomial(rational(num, rng.gen_range(1i64..=4)), rng.gen_range(0..=2))
}

/// Up to four terms, words of length at most eight over `letters`.
pub fn random_poly(rng: &mut ChaCha8Rng, letters: &[u8]) -> NcPoly {
    let terms = rng.gen_range(1..=4);
    NcPoly::from_terms((0..terms).map(|_| {
        let len = rng.gen_range(0..=8);
        let word = Word::new((0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect());
        (word, random_coeff(rng))
    }))
}
