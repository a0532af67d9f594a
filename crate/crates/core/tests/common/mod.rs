//! Helpers shared by the integration suites: seeded random graphs and
//! independent product-formula evaluators for the five graph families.
//!
//! The product formulas here are deliberately written from scratch (plain
//! big-integer products of linear forms) so they can serve as oracles for
//! the determinant-based polynomial evaluation.
#![allow(dead_code)] // each test binary uses a different subset

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treeparity::graph::dual_partition;
use treeparity::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi sample, retried until connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_assignment(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-3..=3)).collect()
}

fn product(values: &[i64]) -> BigInt {
    values.iter().map(|&v| BigInt::from(v)).product()
}

fn sum(values: &[i64]) -> i64 {
    values.iter().sum()
}

fn pow(base: i64, exp: usize) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// `x1 x2 ... xn (x1 + ... + xn)^(n-2)`, valid for n >= 2.
pub fn product_formula_complete(x: &[i64]) -> BigInt {
    let n = x.len();
    assert!(n >= 2);
    product(x) * pow(sum(x), n - 2)
}

/// Product over parts of `(total - part sum)^(size-1)`, times the grand
/// total to the `k-2`, times all the variables.
pub fn product_formula_multipartite(parts: &[usize], x: &[i64]) -> BigInt {
    let k = parts.len();
    let total = sum(x);
    let mut result = product(x) * pow(total, k - 2);
    let mut offset = 0;
    for &size in parts {
        let part_sum = sum(&x[offset..offset + size]);
        result *= pow(total - part_sum, size - 1);
        offset += size;
    }
    result
}

/// Complete graph minus the canonical matching on the first 2p vertices.
pub fn product_formula_almost_complete(n: usize, p: usize, x: &[i64]) -> BigInt {
    assert!(n >= p + 2, "exponent n-p-2 must be non-negative");
    let total = sum(x);
    let mut result = product(x) * pow(total, n - p - 2);
    for i in 0..p {
        result *= BigInt::from(total - x[2 * i] - x[2 * i + 1]);
    }
    result
}

/// Clique variables first, independent-set variables after.
pub fn product_formula_complete_split(m: usize, n: usize, x: &[i64]) -> BigInt {
    let clique_sum = sum(&x[..m]);
    product(x) * pow(clique_sum, n - 1) * pow(sum(x), m - 1)
}

/// Row variables first, column variables after.
pub fn product_formula_ferrers(partition: &[usize], x: &[i64]) -> BigInt {
    let m = partition.len();
    let dual = dual_partition(partition).unwrap();
    let cols = &x[m..];
    let mut result = product(x);
    for &row_len in &partition[1..] {
        result *= BigInt::from(sum(&cols[..row_len]));
    }
    for &col_len in &dual[1..] {
        result *= BigInt::from(sum(&x[..col_len]));
    }
    result
}
