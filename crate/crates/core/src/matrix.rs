//! Dense square matrices of arbitrary-precision integers and exact
//! determinants. Everything here is fraction-free: no rationals, no floats.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest dimension accepted by the O(k!) cofactor-expansion routines.
pub const MAX_COFACTOR_DIM: usize = 10;

/// A dense square matrix of `BigInt` entries, row-major.
///
/// `dim == 0` is allowed; its determinant is 1 by the empty-product
/// convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a zero matrix of the given dimension.
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    /// Builds the identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of primitive integers. Panics if the rows
    /// do not form a square matrix.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[&[T]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "rows must form a square matrix");
            entries.extend(row.iter().map(|&v| v.into()));
        }
        IntMatrix { dim, entries }
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(dim: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.entries[row * self.dim + col]
    }

    /// Returns the submatrix with `row` and `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> IntMatrix {
        assert!(row < self.dim && col < self.dim);
        let dim = self.dim - 1;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in (0..self.dim).filter(|&i| i != row) {
            for j in (0..self.dim).filter(|&j| j != col) {
                entries.push(self.at(i, j).clone());
            }
        }
        IntMatrix { dim, entries }
    }

    /// Adds the rank-one product `a * b^T` to this matrix.
    pub fn add_rank_one(&self, a: &[BigInt], b: &[BigInt]) -> Result<IntMatrix> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {0}x{0} but vectors have lengths {1} and {2}",
                self.dim,
                a.len(),
                b.len()
            )));
        }
        let mut out = self.clone();
        for (i, a_i) in a.iter().enumerate() {
            for (j, b_j) in b.iter().enumerate() {
                *out.at_mut(i, j) += a_i * b_j;
            }
        }
        Ok(out)
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Row swaps use the first nonzero pivot in column order; every exact
/// division is checked (remainder must vanish), so a corrupted elimination
/// panics instead of silently truncating.
// TODO: i128 fast path with overflow detection for small dimensions; the
// intermediates are minors, which stay tiny for the graphs seen in practice.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let mut work = m.entries.clone();
    det_bareiss_in_place(&mut work, m.dim)
}

/// In-place Bareiss determinant over a row-major `dim * dim` buffer.
/// The buffer contents are clobbered.
pub fn det_bareiss_in_place(work: &mut [BigInt], dim: usize) -> BigInt {
    assert_eq!(work.len(), dim * dim);
    if dim == 0 {
        return BigInt::one();
    }
    let mut negated = false;
    let mut prev_pivot = BigInt::one();
    for k in 0..dim - 1 {
        if work[k * dim + k].is_zero() {
            let swap_row = match (k + 1..dim).find(|&r| !work[r * dim + k].is_zero()) {
                Some(r) => r,
                None => return BigInt::zero(),
            };
            for j in k..dim {
                work.swap(k * dim + j, swap_row * dim + j);
            }
            negated = !negated;
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let numer =
                    &work[k * dim + k] * &work[i * dim + j] - &work[i * dim + k] * &work[k * dim + j];
                let (q, r) = numer.div_rem(&prev_pivot);
                assert!(r.is_zero(), "Bareiss division must be exact");
                work[i * dim + j] = q;
            }
            work[i * dim + k] = BigInt::zero();
        }
        prev_pivot = work[k * dim + k].clone();
    }
    let det = std::mem::take(&mut work[dim * dim - 1]);
    if negated {
        -det
    } else {
        det
    }
}

/// Determinant by Laplace expansion along the first row. O(k!) — a test
/// oracle for `det_bareiss`, guarded to `dim <= 10`.
pub fn det_cofactor(m: &IntMatrix) -> Result<BigInt> {
    if m.dim > MAX_COFACTOR_DIM {
        return Err(Error::DimensionTooLarge {
            dim: m.dim,
            limit: MAX_COFACTOR_DIM,
        });
    }
    Ok(det_cofactor_rec(m))
}

fn det_cofactor_rec(m: &IntMatrix) -> BigInt {
    match m.dim {
        0 => BigInt::one(),
        1 => m.at(0, 0).clone(),
        _ => {
            let mut det = BigInt::zero();
            for j in 0..m.dim {
                if m.at(0, j).is_zero() {
                    continue;
                }
                let term = m.at(0, j) * det_cofactor_rec(&m.minor(0, j));
                if j % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
    }
}

/// Determinant of `a_mat + a_vec * b_vec^T` via the rank-one update identity
/// `det(A) + b^T adj(A) a`, with the adjugate taken from cofactor expansions.
pub fn det_rank_one_update(a_mat: &IntMatrix, a_vec: &[BigInt], b_vec: &[BigInt]) -> Result<BigInt> {
    let dim = a_mat.dim;
    if a_vec.len() != dim || b_vec.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {dim}x{dim} but vectors have lengths {} and {}",
            a_vec.len(),
            b_vec.len()
        )));
    }
    if dim > MAX_COFACTOR_DIM {
        return Err(Error::DimensionTooLarge {
            dim,
            limit: MAX_COFACTOR_DIM,
        });
    }
    // b^T adj(A) a with adj(A)[i][j] = (-1)^{i+j} det(A minus row j, col i).
    let mut correction = BigInt::zero();
    for (i, b_i) in b_vec.iter().enumerate() {
        if b_i.is_zero() {
            continue;
        }
        for (j, a_j) in a_vec.iter().enumerate() {
            if a_j.is_zero() {
                continue;
            }
            let cof = det_cofactor_rec(&a_mat.minor(j, i));
            let term = b_i * cof * a_j;
            if (i + j) % 2 == 0 {
                correction += term;
            } else {
                correction -= term;
            }
        }
    }
    Ok(det_cofactor_rec(a_mat) + correction)
}
