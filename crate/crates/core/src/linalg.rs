//! Dense row-major matrices, a cyclic Jacobi eigensolver for symmetric
//! matrices, and the transports between the eigenvectors of `ZᵗZ` and `ZZᵗ`.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Default convergence tolerance of [`eigen_sym`], relative to `‖A‖_F`.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;
/// Sweep limit of the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;
/// An eigenvalue is treated as strictly positive when it exceeds this
/// fraction of the largest eigenvalue.
pub const RANK_TOL_FACTOR: f64 = 1e-10;

/// Dense real matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from row-major data. Every entry must be finite.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} values supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::from_row_major(rows.len(), cols, rows.concat())
    }

    pub(crate) fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, values: &[f64]) {
        assert_eq!(values.len(), self.rows);
        for (i, v) in values.iter().enumerate() {
            self[(i, j)] = *v;
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Keeps the first `k` columns.
    pub fn leading_columns(&self, k: usize) -> Matrix {
        assert!(k <= self.cols);
        Matrix::from_fn(self.rows, k, |i, j| self[(i, j)])
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `AᵗA`, computed on the upper triangle and mirrored so the result is
    /// exactly symmetric.
    pub fn gram_columns(&self) -> Matrix {
        let n = self.cols;
        let mut g = Matrix::zeros(n, n);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..n {
                let a = row[i];
                if a == 0.0 {
                    continue;
                }
                let g_row = &mut g.data[i * n..(i + 1) * n];
                for j in i..n {
                    g_row[j] += a * row[j];
                }
            }
        }
        g.mirror_upper();
        g
    }

    /// `AAᵗ`, exactly symmetric.
    pub fn gram_rows(&self) -> Matrix {
        let m = self.rows;
        let mut g = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                g.data[i * m + j] = dot(self.row(i), self.row(j));
            }
        }
        g.mirror_upper();
        g
    }

    fn mirror_upper(&mut self) {
        let n = self.rows;
        for i in 0..n {
            for j in 0..i {
                self.data[i * n + j] = self.data[j * n + i];
            }
        }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn tr_mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![0.0; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += a * vi;
            }
        }
        Ok(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scale(&mut self, factor: f64) {
        self.data.iter_mut().for_each(|v| *v *= factor);
    }

    pub fn negate_column(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean length.
pub fn vector_norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Spectral decomposition `A = V·diag(values)·Vᵗ` of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: Matrix,
    /// Eigenvalues at or below this are treated as zero.
    pub rank_tol: f64,
}

impl EigenDecomposition {
    /// Number of eigenvalues strictly above `rank_tol`.
    pub fn rank(&self) -> usize {
        self.values
            .iter()
            .take_while(|&&v| v > self.rank_tol)
            .count()
    }

    /// `max |vᵢᵗvⱼ − δᵢⱼ|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let g = self.vectors.gram_columns();
        let mut worst: f64 = 0.0;
        for i in 0..g.n_rows() {
            for j in 0..g.n_cols() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g[(i, j)] - target).abs());
            }
        }
        worst
    }

    /// Worst scaled eigen-equation residual
    /// `‖A·v_k − λ_k·v_k‖∞ / max(1, |λ_k|)` over all pairs.
    pub fn eigen_residual(&self, a: &Matrix) -> f64 {
        let av = a
            .matmul(&self.vectors)
            .expect("conformable by construction");
        let mut worst: f64 = 0.0;
        for (k, &lambda) in self.values.iter().enumerate() {
            let scale = lambda.abs().max(1.0);
            for i in 0..av.n_rows() {
                let r = (av[(i, k)] - lambda * self.vectors[(i, k)]).abs() / scale;
                worst = worst.max(r);
            }
        }
        worst
    }

    /// `V·diag(values)·Vᵗ`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.vectors.n_rows();
        let mut scaled = self.vectors.clone();
        for k in 0..self.values.len() {
            for i in 0..n {
                scaled[(i, k)] *= self.values[k];
            }
        }
        scaled
            .matmul(&self.vectors.transpose())
            .expect("square by construction")
    }
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps run over the upper triangle in row order and stop once the
/// off-diagonal Frobenius norm falls below `tol·‖A‖_F`. Eigenpairs come
/// back in descending eigenvalue order, and each eigenvector is oriented so
/// that its entry of largest magnitude (lowest index on ties) is positive.
pub fn eigen_sym(a: &Matrix, tol: f64) -> Result<EigenDecomposition> {
    let (rows, cols) = a.shape();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let n = rows;
    let scale = a.as_slice().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = (a[(i, j)] - a[(j, i)]).abs();
            if diff > 1e-12 * scale {
                return Err(Error::NotSymmetric { i, j, diff });
            }
        }
    }

    let mut work = a.clone();
    work.mirror_upper();
    // Eigenvectors are accumulated as rows so each rotation touches two
    // contiguous slices.
    let mut vt = Matrix::identity(n);
    let threshold = tol * a.frobenius_norm();
    let skip = threshold / (2.0 * n.max(1) as f64);

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(&work) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                // Entries this small cannot keep the off-diagonal norm above
                // the threshold even if every one of them survives.
                if work[(p, q)].abs() > skip {
                    rotate(&mut work, &mut vt, p, q);
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&work) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    // Cleanup sweep. Convergence is quadratic, so this takes what is left
    // down to rounding level relative to the diagonal. Without it the
    // residue mixes axes with small eigenvalues, and the `1/√λ` transport
    // magnifies that mixing. Pairs inside the numerical null space are left
    // alone since neither vector is ever retained.
    let peak = (0..n).fold(0.0_f64, |m, i| m.max(work[(i, i)]));
    let live = RANK_TOL_FACTOR * peak;
    for p in 0..n {
        for q in (p + 1)..n {
            if work[(p, p)] <= live && work[(q, q)] <= live {
                continue;
            }
            let floor = f64::EPSILON * (work[(p, p)] * work[(q, q)]).abs().sqrt();
            if work[(p, q)].abs() > floor {
                rotate(&mut work, &mut vt, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| work[(j, j)].total_cmp(&work[(i, i)]).then(i.cmp(&j)));

    let values: Vec<f64> = order.iter().map(|&k| work[(k, k)]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut v = vt.row(src).to_vec();
        orient(&mut v);
        vectors.set_column(dst, &v);
    }
    let rank_tol = RANK_TOL_FACTOR * values.first().copied().unwrap_or(0.0).max(0.0);
    Ok(EigenDecomposition {
        values,
        vectors,
        rank_tol,
    })
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.n_rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += 2.0 * a[(i, j)] * a[(i, j)];
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation annihilating `a[p][q]` (`p < q`). Rows `p` and `q`
/// are rotated in place and mirrored into columns `p` and `q`, which keeps
/// `a` exactly symmetric.
fn rotate(a: &mut Matrix, vt: &mut Matrix, p: usize, q: usize) {
    let n = a.n_rows();
    let apq = a.data[p * n + q];
    let app = a.data[p * n + p];
    let aqq = a.data[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let data = &mut a.data;
    {
        let (head, tail) = data.split_at_mut(q * n);
        let row_p = &mut head[p * n..(p + 1) * n];
        let row_q = &mut tail[..n];
        for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
            let apk = *x;
            let aqk = *y;
            *x = c * apk - s * aqk;
            *y = s * apk + c * aqk;
        }
        row_p[p] = app - t * apq;
        row_q[q] = aqq + t * apq;
        row_p[q] = 0.0;
        row_q[p] = 0.0;
    }
    for k in 0..n {
        if k != p && k != q {
            data[k * n + p] = data[p * n + k];
            data[k * n + q] = data[q * n + k];
        }
    }

    let (head, tail) = vt.data.split_at_mut(q * n);
    let vp = &mut head[p * n..(p + 1) * n];
    let vq = &mut tail[..n];
    for (x, y) in vp.iter_mut().zip(vq.iter_mut()) {
        let a = *x;
        let b = *y;
        *x = c * a - s * b;
        *y = s * a + c * b;
    }
}

/// Flips `v` so its largest-magnitude entry is positive.
pub(crate) fn orient(v: &mut [f64]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v.get(best).is_some_and(|&x| x < 0.0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

fn transport(image: Vec<f64>, lambda: f64, tol: f64) -> Result<Vec<f64>> {
    if !(lambda > tol) {
        return Err(Error::RankDeficient { lambda, tol });
    }
    let s = lambda.sqrt();
    Ok(image.into_iter().map(|x| x / s).collect())
}

/// `u = Zᵗv/√λ`: maps an eigenvector of `ZZᵗ` to the matching eigenvector
/// of `ZᵗZ`. Fails when `λ` is not above `tol`.
pub fn dual_u_from_v(z: &Matrix, v: &[f64], lambda: f64, tol: f64) -> Result<Vec<f64>> {
    transport(z.tr_mul_vec(v)?, lambda, tol)
}

/// `v = Zu/√λ`: maps an eigenvector of `ZᵗZ` to the matching eigenvector
/// of `ZZᵗ`.
pub fn dual_v_from_u(z: &Matrix, u: &[f64], lambda: f64, tol: f64) -> Result<Vec<f64>> {
    transport(z.mul_vec(u)?, lambda, tol)
}
