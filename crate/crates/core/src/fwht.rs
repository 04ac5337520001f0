//! Fast Walsh-Hadamard transform and the dense O(n²) oracle.
//!
//! `fwht` computes `H·v` for the Sylvester-ordered Walsh-Hadamard matrix
//! `H_{2n} = [[H_n, H_n], [H_n, -H_n]]` with the usual in-place butterfly,
//! `O(n log n)` multiply-adds, unnormalized (no `1/√n` factor). Normalization
//! is applied once at the estimator layer, matching `M⁻¹ = (1/n)Mᵀ`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// In-place Walsh-Hadamard butterfly. Length must be a power of two.
pub fn fwht_in_place(data: &mut [f64]) -> Result<()> {
    let n = data.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { len: n });
    }
    let mut half = 1;
    while half < n {
        let stride = half * 2;
        for block in (0..n).step_by(stride) {
            for i in block..block + half {
                let a = data[i];
                let b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
        half = stride;
    }
    Ok(())
}

/// Returns `H·v` for Sylvester `H`. See [`fwht_in_place`].
pub fn fwht(v: &[f64]) -> Result<Vec<f64>> {
    let mut out = v.to_vec();
    fwht_in_place(&mut out)?;
    Ok(out)
}

/// Textbook O(n²) matrix-vector product. This is the correctness oracle for
/// every fast path in the crate and deliberately stays naive.
pub fn naive_matvec(rows: &DMatrix<f64>, v: &[f64]) -> Result<Vec<f64>> {
    if rows.ncols() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: rows.ncols(),
            got: v.len(),
        });
    }
    let mut out = vec![0.0; rows.nrows()];
    for i in 0..rows.nrows() {
        let mut acc = 0.0;
        for j in 0..rows.ncols() {
            acc += rows[(i, j)] * v[j];
        }
        out[i] = acc;
    }
    Ok(out)
}

/// Explicit Sylvester Walsh-Hadamard matrix, for oracles and small tests.
/// `H[i][j] = (-1)^{popcount(i & j)}`.
pub fn dense_hadamard(n: usize) -> Result<DMatrix<f64>> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { len: n });
    }
    Ok(DMatrix::from_fn(n, n, |i, j| {
        if (i & j).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }))
}
