//! Thin wrappers around faer's self-adjoint eigendecomposition.
//!
//! Everything downstream assumes ascending eigenvalues. Parallelism is
//! pinned to sequential once, globally: run-to-run bit determinism matters
//! more here than the last factor of two in throughput.

use crate::error::{Error, Result};
use faer::{c64, Mat};
use std::sync::Once;

static PIN_SEQ: Once = Once::new();

fn pin_deterministic() {
    PIN_SEQ.call_once(|| {
        faer::set_global_parallelism(faer::Par::Seq);
    });
}

/// Eigendecomposition of a Hermitian complex matrix, eigenvalues ascending.
pub struct HermEigen {
    pub evals: Vec<f64>,
    /// Eigenvectors as columns, in the order of `evals`.
    pub vecs: Mat<c64>,
}

/// Eigendecomposition of a symmetric real matrix, eigenvalues ascending.
pub struct SymEigen {
    pub evals: Vec<f64>,
    pub vecs: Mat<f64>,
}

pub fn eigh_complex(mat: &Mat<c64>) -> Result<HermEigen> {
    pin_deterministic();
    let n = mat.nrows();
    if n != mat.ncols() {
        return Err(Error::InvalidArgument(format!(
            "eigh: matrix is {}x{}, expected square",
            n,
            mat.ncols()
        )));
    }
    let evd = mat
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Accuracy(format!("hermitian eigensolve failed: {e:?}")))?;
    let s = evd.S().column_vector().to_owned();
    let u = evd.U();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[i].re.partial_cmp(&s[j].re).unwrap());
    let evals: Vec<f64> = order.iter().map(|&i| s[i].re).collect();
    let mut vecs = Mat::<c64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vecs[(r, dst)] = u[(r, src)];
        }
    }
    Ok(HermEigen { evals, vecs })
}

pub fn eigh_real(mat: &Mat<f64>) -> Result<SymEigen> {
    pin_deterministic();
    let n = mat.nrows();
    if n != mat.ncols() {
        return Err(Error::InvalidArgument(format!(
            "eigh: matrix is {}x{}, expected square",
            n,
            mat.ncols()
        )));
    }
    let evd = mat
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Accuracy(format!("symmetric eigensolve failed: {e:?}")))?;
    let s = evd.S().column_vector().to_owned();
    let u = evd.U();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[i].partial_cmp(&s[j]).unwrap());
    let evals: Vec<f64> = order.iter().map(|&i| s[i]).collect();
    let mut vecs = Mat::<f64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vecs[(r, dst)] = u[(r, src)];
        }
    }
    Ok(SymEigen { evals, vecs })
}

/// Hermitian part (M + M^H)/2, used to scrub accumulated rounding noise
/// off operators that are Hermitian by construction.
pub fn hermitian_part(mat: &Mat<c64>) -> Mat<c64> {
    let n = mat.nrows();
    let mut out = Mat::<c64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = 0.5 * (mat[(i, j)] + mat[(j, i)].conj());
        }
    }
    out
}
