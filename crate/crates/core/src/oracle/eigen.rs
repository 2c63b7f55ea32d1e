use super::assemble::TruncatedOperator;
use super::matrix::DenseMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: DenseMatrix,
    pub sweeps: usize,
    /// Largest off-diagonal magnitude left when the sweeps stopped.
    pub off_diagonal: f64,
}

impl EigenReport {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        self.eigenvectors.column(k)
    }

    /// `max |QᵀQ - I|` over the first `columns` eigenvectors.
    pub fn orthogonality_defect(&self, columns: usize) -> f64 {
        let q = &self.eigenvectors;
        let m = columns.min(q.cols());
        let cols: Vec<Vec<f64>> = (0..m).map(|k| q.column(k)).collect();
        let mut worst = 0.0_f64;
        for a in 0..m {
            for b in a..m {
                let dot: f64 = cols[a].iter().zip(&cols[b]).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max |QΛQᵀ - H|`.
    pub fn reconstruction_residual(&self, h: &DenseMatrix) -> f64 {
        let q = &self.eigenvectors;
        let n = self.dim();
        let scaled = DenseMatrix::from_fn(n, n, |i, k| q[(i, k)] * self.eigenvalues[k]);
        match scaled.matmul(&q.transpose()) {
            Ok(rebuilt) => rebuilt.max_abs_diff(h),
            Err(_) => f64::INFINITY,
        }
    }
}

pub fn diagonalize(op: &TruncatedOperator, tol: f64) -> Result<EigenReport> {
    jacobi_eigen(&op.matrix, tol)
}

/// Cyclic Jacobi: sweeps of plane rotations over every pair `(p, q)` until
/// the largest off-diagonal entry falls below `tol * ‖H‖_F`.
pub fn jacobi_eigen(h: &DenseMatrix, tol: f64) -> Result<EigenReport> {
    if !h.is_square() {
        return Err(Error::InvalidArgument(format!(
            "matrix is {}x{}, not square",
            h.rows(),
            h.cols()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let n = h.rows();
    let scale = h.max_abs();
    if !scale.is_finite() {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    let asym = h.max_asymmetry();
    if asym > 1e-14 * scale {
        return Err(Error::InvalidArgument(format!(
            "matrix is not symmetric (max asymmetry {asym:e})"
        )));
    }

    let mut a = h.clone();
    // Row k of `vt` is the k-th eigenvector, so rotations touch contiguous rows.
    let mut vt = DenseMatrix::identity(n);
    let threshold = tol * h.frobenius();

    let mut sweeps = 0;
    let mut off = max_off_diagonal(&a);
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut vt, p, q);
            }
        }
        off = max_off_diagonal(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let eigenvalues = order.iter().map(|&i| a[(i, i)]).collect();
    let eigenvectors = DenseMatrix::from_fn(n, n, |row, col| vt[(order[col], row)]);
    Ok(EigenReport {
        eigenvalues,
        eigenvectors,
        sweeps,
        off_diagonal: off,
    })
}

fn max_off_diagonal(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for &v in &a.row(i)[(i + 1)..] {
            worst = worst.max(v.abs());
        }
    }
    worst
}

fn rotate(a: &mut DenseMatrix, vt: &mut DenseMatrix, p: usize, q: usize) {
    let n = a.rows();
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let app = a[(p, p)];
    let aqq = a[(q, q)];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    rotate_rows(a.as_mut_slice(), n, p, q, c, s);
    for k in 0..n {
        if k != p && k != q {
            a[(k, p)] = a[(p, k)];
            a[(k, q)] = a[(q, k)];
        }
    }
    a[(p, p)] = app - t * apq;
    a[(q, q)] = aqq + t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;

    rotate_rows(vt.as_mut_slice(), n, p, q, c, s);
}

/// `row_p <- c row_p - s row_q`, `row_q <- s row_p + c row_q`.
#[inline]
fn rotate_rows(data: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    debug_assert!(p < q);
    let (head, tail) = data.split_at_mut(q * n);
    let rp = &mut head[p * n..(p + 1) * n];
    let rq = &mut tail[..n];
    for (x, y) in rp.iter_mut().zip(rq.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = c * xp - s * xq;
        *y = s * xp + c * xq;
    }
}
