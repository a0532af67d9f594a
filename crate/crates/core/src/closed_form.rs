//! Direct big-integer evaluation of the per-family odd-spanning-tree
//! formulas. Independent of the sign-sum engine: these are finite sums over
//! small index tuples, not determinant evaluations.
//!
//! All formulas use the 0^0 = 1 convention at boundary exponents and defer
//! the final division by the power of two to the very end, where it is
//! checked to be exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::graph::{dual_partition, FamilySpec};
use crate::parity::CountReport;

/// Binomial coefficient with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut result = BigInt::one();
    for i in 0..k.min(n - k) {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn pow(base: BigInt, exp: usize) -> BigInt {
    base.pow(exp as u32)
}

/// Divides the accumulated signed sum by `2^order`, checking exactness and
/// non-negativity; any formula bug trips the assertion instead of silently
/// truncating.
fn finish(sum: BigInt, order: usize) -> BigInt {
    let (count, rem) = sum.div_rem(&(BigInt::one() << order));
    assert!(rem.is_zero(), "family formula sum must be divisible by 2^n");
    assert!(!count.is_negative(), "family formula count must be non-negative");
    count
}

/// Sums `term` over all tuples `t` with `0 <= t[i] <= bounds[i]`.
fn sum_over_boxes<F: FnMut(&[usize]) -> BigInt>(bounds: &[usize], mut term: F) -> BigInt {
    let mut tuple = vec![0usize; bounds.len()];
    let mut total = BigInt::zero();
    loop {
        total += term(&tuple);
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == bounds.len() {
                return total;
            }
            if tuple[pos] < bounds[pos] {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// Odd spanning trees of the complete graph on `n` vertices.
pub fn odd_count_complete(n: usize) -> Result<BigInt> {
    FamilySpec::Complete { n }.validate()?;
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let sum = (0..=n)
        .map(|k| binomial(n, k) * pow(BigInt::from(2 * k as i64 - n as i64), n - 2))
        .sum();
    Ok(finish(sum, n))
}

/// Odd spanning trees of the complete multipartite graph with the given
/// part sizes.
pub fn odd_count_multipartite(parts: &[usize]) -> Result<BigInt> {
    FamilySpec::Multipartite {
        parts: parts.to_vec(),
    }
    .validate()?;
    let n: usize = parts.iter().sum();
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let k = parts.len();
    let sum = sum_over_boxes(parts, |plus_counts| {
        // In part l, plus_counts[l] vertices take +1; the part's signed sum
        // is m_l = 2*r_l - n_l and M is the grand total.
        let m: Vec<i64> = plus_counts
            .iter()
            .zip(parts)
            .map(|(&r, &size)| 2 * r as i64 - size as i64)
            .collect();
        let grand: i64 = m.iter().sum();
        let mut term: BigInt = plus_counts
            .iter()
            .zip(parts)
            .map(|(&r, &size)| binomial(size, r))
            .product();
        for (&m_l, &size) in m.iter().zip(parts) {
            term *= pow(BigInt::from(grand - m_l), size - 1);
        }
        term * pow(BigInt::from(grand), k - 2)
    });
    Ok(finish(sum, n))
}

/// Odd spanning trees of the complete graph on `n` vertices minus a
/// matching of `p` edges.
pub fn odd_count_almost_complete(n: usize, p: usize) -> Result<BigInt> {
    FamilySpec::AlmostComplete { n, p }.validate()?;
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    if n == 2 && p == 1 {
        // Removing the only edge disconnects the graph.
        return Ok(BigInt::zero());
    }
    let free = n - 2 * p;
    let p_factorial = factorial(p);
    let mut sum = BigInt::zero();
    // (a, b, c) splits the matching edges by how their endpoints are
    // signed: both +1, mixed, both -1.
    for a in 0..=p {
        for b in 0..=p - a {
            let c = p - a - b;
            let multinomial = {
                let denom = factorial(a) * factorial(b) * factorial(c);
                let (q, rem) = p_factorial.div_rem(&denom);
                assert!(rem.is_zero());
                q
            };
            let ways = multinomial * (BigInt::one() << b);
            for r in 0..=free {
                let s = 4 * a as i64 + 2 * b as i64 + 2 * r as i64 - n as i64;
                let term = &ways
                    * binomial(free, r)
                    * pow(BigInt::from(s), n - p - 2)
                    * pow(BigInt::from(s - 2), a)
                    * pow(BigInt::from(s), b)
                    * pow(BigInt::from(s + 2), c);
                sum += term;
            }
        }
    }
    Ok(finish(sum, n))
}

/// Odd spanning trees of the join of an `m`-clique with an independent set
/// of `n` vertices.
pub fn odd_count_complete_split(m: usize, n: usize) -> Result<BigInt> {
    FamilySpec::CompleteSplit { m, n }.validate()?;
    if (m + n) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let mut sum = BigInt::zero();
    for k in 0..=m {
        for l in 0..=n {
            let clique_sum = 2 * k as i64 - m as i64;
            let total_sum = clique_sum + 2 * l as i64 - n as i64;
            sum += binomial(m, k)
                * binomial(n, l)
                * pow(BigInt::from(clique_sum), n - 1)
                * pow(BigInt::from(total_sum), m - 1);
        }
    }
    Ok(finish(sum, m + n))
}

/// Odd spanning trees of the bipartite graph of a partition. The count
/// factors into two independent sums, one per side of the bipartition.
pub fn odd_count_ferrers(partition: &[usize]) -> Result<BigInt> {
    let dual = dual_partition(partition)?;
    let m = partition.len();
    let n = dual.len();
    if (m + n) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let row_factor = ferrers_side_sum(partition);
    let col_factor = ferrers_side_sum(&dual);
    Ok(finish(row_factor * col_factor, m + n))
}

/// One side of the factored sum: with step sizes `p[i] = parts[i] -
/// parts[i+1]`, sums over tuples `k` the product of binomials times
/// `prod_{i>=2} (2 * suffix_sum(k, i) - parts[i])`.
fn ferrers_side_sum(parts: &[usize]) -> BigInt {
    let m = parts.len();
    let steps: Vec<usize> = (0..m)
        .map(|i| parts[i] - parts.get(i + 1).copied().unwrap_or(0))
        .collect();
    sum_over_boxes(&steps, |tuple| {
        let mut term: BigInt = tuple
            .iter()
            .zip(&steps)
            .map(|(&k, &p)| binomial(p, k))
            .product();
        let mut suffix: i64 = 0;
        // Walk i = m..2 accumulating the suffix sum of the tuple.
        for i in (1..m).rev() {
            suffix += tuple[i] as i64;
            term *= BigInt::from(2 * suffix - parts[i] as i64);
        }
        term
    })
}

/// Dispatches a family instance to its closed-form count.
pub fn odd_count(spec: &FamilySpec) -> Result<CountReport> {
    spec.validate()?;
    let count = match spec {
        FamilySpec::Complete { n } => odd_count_complete(*n)?,
        FamilySpec::Multipartite { parts } => odd_count_multipartite(parts)?,
        FamilySpec::AlmostComplete { n, p } => odd_count_almost_complete(*n, *p)?,
        FamilySpec::CompleteSplit { m, n } => odd_count_complete_split(*m, *n)?,
        FamilySpec::Ferrers { partition } => odd_count_ferrers(partition)?,
    };
    Ok(CountReport::closed_form(count, spec.order()))
}
