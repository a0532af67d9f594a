//! The vertex-weighted Laplacian and exact evaluation of the spanning-tree
//! generating polynomial at integer points.
//!
//! With per-vertex weights `x`, every edge `(i, j)` carries weight
//! `x[i] * x[j]`; a cofactor of the resulting Laplacian equals the sum over
//! spanning trees `T` of `prod_i x[i]^(deg_T(i))`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{det_bareiss, IntMatrix};

/// Per-vertex integer weights; the sign case restricts entries to ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<i64>,
}

impl Assignment {
    pub fn new(values: Vec<i64>) -> Self {
        Assignment { values }
    }

    /// The all-ones assignment, which reduces the weighted Laplacian to the
    /// ordinary one.
    pub fn all_ones(n: usize) -> Self {
        Assignment { values: vec![1; n] }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl From<Vec<i64>> for Assignment {
    fn from(values: Vec<i64>) -> Self {
        Assignment::new(values)
    }
}

fn check_length(g: &Graph, x: &Assignment) -> Result<()> {
    if x.len() != g.order() {
        return Err(Error::DimensionMismatch(format!(
            "graph has {} vertices but assignment has {} entries",
            g.order(),
            x.len()
        )));
    }
    Ok(())
}

/// Builds the weighted Laplacian: diagonal `x[i] * sum of x over neighbors`,
/// off-diagonal `-x[i] * x[j]` on edges, zero elsewhere.
pub fn weighted_laplacian(g: &Graph, x: &Assignment) -> Result<IntMatrix> {
    check_length(g, x)?;
    let vals = x.values();
    let n = g.order();
    let mut m = IntMatrix::zero(n);
    for i in 0..n {
        let neighbor_sum: i64 = g.neighbors(i).iter().map(|&k| vals[k]).sum();
        *m.at_mut(i, i) = BigInt::from(vals[i]) * neighbor_sum;
        for &j in g.neighbors(i) {
            *m.at_mut(i, j) = BigInt::from(-vals[i] * vals[j]);
        }
    }
    Ok(m)
}

/// Evaluates the spanning-tree generating polynomial at `x`, as the
/// determinant of the Laplacian with the last row and column deleted.
///
/// Any cofactor choice gives the same value; fixing the last one keeps
/// results reproducible. A single-vertex graph evaluates to 1.
pub fn eval_tree_polynomial(g: &Graph, x: &Assignment) -> Result<BigInt> {
    check_length(g, x)?;
    let n = g.order();
    if n == 1 {
        return Ok(BigInt::one());
    }
    let lap = weighted_laplacian(g, x)?;
    Ok(det_bareiss(&lap.minor(n - 1, n - 1)))
}

/// Number of spanning trees (the polynomial at the all-ones point). Zero
/// for a disconnected graph of order at least two.
pub fn count_spanning_trees(g: &Graph) -> BigInt {
    eval_tree_polynomial(g, &Assignment::all_ones(g.order()))
        .expect("all-ones assignment always matches the graph order")
}
