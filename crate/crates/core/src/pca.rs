//! Centers-method PCA for interval tables, with interval correlations
//! between variables and components recovered through the duality between
//! the eigenvectors of `ZᵗZ` and `ZZᵗ`.
//!
//! Both eigenproblems lead to the same result. [`pca_zzt`] solves the m×m
//! problem on objects and transports to variable loadings, [`pca_ztz`] solves
//! the n×n problem on variables and transports back to object axes, and
//! [`pca_auto`] picks whichever matrix is smaller.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{interval_project, numbered_labels, BoundsPair, Interval, IntervalMatrix};
use crate::linalg::{
    dual_u_from_v, dual_v_from_u, eigen_sym, EigenDecomposition, Matrix, DEFAULT_EIGEN_TOL,
};
use crate::table::write_interval_csv;

/// Midpoint matrix `X^c`.
pub fn centers_matrix(x: &IntervalMatrix) -> Matrix {
    x.midpoints()
}

/// Standardized centers together with the equally transformed bounds.
#[derive(Debug, Clone)]
pub struct StandardizedBundle {
    /// `z_ij = (x^c_ij − mean_j) / (σ_j·√m)`.
    pub z: Matrix,
    /// Lower and upper interval bounds under the same affine map.
    pub bounds: BoundsPair,
    pub col_means: Vec<f64>,
    /// Population standard deviations (divisor m).
    pub col_stds: Vec<f64>,
    pub m: usize,
    pub n: usize,
}

fn column_means(x: &Matrix) -> Vec<f64> {
    let (m, n) = x.shape();
    let mut means = vec![0.0; n];
    for i in 0..m {
        for (acc, v) in means.iter_mut().zip(x.row(i)) {
            *acc += v;
        }
    }
    means.iter_mut().for_each(|s| *s /= m as f64);
    means
}

/// Centers and reduces the midpoint matrix so every column of `z` has zero
/// mean and unit Euclidean norm; `ZᵗZ` is then the correlation matrix of
/// the centers.
pub fn standardize(x: &IntervalMatrix) -> Result<StandardizedBundle> {
    let (m, n) = x.shape();
    if m < 2 {
        return Err(Error::Dimension(format!(
            "need at least 2 objects, found {m}"
        )));
    }
    if n == 0 {
        return Err(Error::EmptyInput("interval table has no columns"));
    }
    let centers = centers_matrix(x);
    let col_means = column_means(&centers);
    let mut col_stds = Vec::with_capacity(n);
    for j in 0..n {
        let mut ss = 0.0;
        let mut peak: f64 = 0.0;
        for i in 0..m {
            let d = centers[(i, j)] - col_means[j];
            ss += d * d;
            peak = peak.max(centers[(i, j)].abs());
        }
        let sd = (ss / m as f64).sqrt();
        if !(sd > 16.0 * f64::EPSILON * peak) {
            return Err(Error::ConstantColumn(x.col_labels()[j].clone()));
        }
        col_stds.push(sd);
    }

    let root_m = (m as f64).sqrt();
    let affine = |v: f64, j: usize| (v - col_means[j]) / col_stds[j] / root_m;
    let z = Matrix::from_fn(m, n, |i, j| affine(centers[(i, j)], j));
    let low = Matrix::from_fn(m, n, |i, j| affine(x.get(i, j).lo(), j));
    let high = Matrix::from_fn(m, n, |i, j| affine(x.get(i, j).hi(), j));
    Ok(StandardizedBundle {
        z,
        bounds: BoundsPair::new(low, high)?,
        col_means,
        col_stds,
        m,
        n,
    })
}

/// Which eigenproblem produced a [`PcaResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// m×m problem on `ZZᵗ`.
    Zzt,
    /// n×n problem on `ZᵗZ`.
    Ztz,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Zzt => "zzt",
            Method::Ztz => "ztz",
        }
    }
}

/// Output of the duality centers method.
///
/// Interval scores and center scores are reported on the unit-variance
/// standardized scale, i.e. `√m` times the projection of the `z` bounds, so
/// that they are directly comparable with ordinary PCA scores of the
/// standardized centers. Interval correlations are raw projections and may
/// leave `[-1, 1]`; clamp them for display with
/// [`IntervalMatrix::clamped_unit`].
#[derive(Debug, Clone)]
pub struct PcaResult {
    /// The q retained eigenvalues, descending and positive.
    pub eigenvalues: Vec<f64>,
    /// Every eigenvalue of the matrix that was decomposed.
    pub spectrum: Vec<f64>,
    /// n×q, eigenvectors of `ZᵗZ`.
    pub loadings_u: Matrix,
    /// m×q, eigenvectors of `ZZᵗ`.
    pub axes_v: Matrix,
    /// m×q interval principal components.
    pub scores: IntervalMatrix,
    /// n×q interval correlations between variables and components.
    pub correlations: IntervalMatrix,
    pub center_scores: Matrix,
    pub center_correlations: Matrix,
    pub method_used: Method,
}

fn component_labels(q: usize) -> Vec<String> {
    numbered_labels("PC", q)
}

fn retained(e: &EigenDecomposition, q: Option<usize>) -> Result<usize> {
    let available = e.rank();
    match q {
        None if available == 0 => Err(Error::ComponentsOutOfRange {
            requested: 1,
            available,
        }),
        None => Ok(available),
        Some(k) if k == 0 || k > available => Err(Error::ComponentsOutOfRange {
            requested: k,
            available,
        }),
        Some(k) => Ok(k),
    }
}

/// Scores on the unit-variance scale from the `z` bounds.
fn interval_scores(s: &StandardizedBundle, loadings: &Matrix) -> Result<IntervalMatrix> {
    let root_m = (s.m as f64).sqrt();
    Ok(interval_project(&s.bounds, loadings)?.map(|iv| iv.scale(root_m)))
}

fn interval_correlations(s: &StandardizedBundle, axes: &Matrix) -> Result<IntervalMatrix> {
    interval_project(&s.bounds.transpose(), axes)
}

fn assemble(
    x: &IntervalMatrix,
    s: &StandardizedBundle,
    eig: &EigenDecomposition,
    loadings_u: Matrix,
    axes_v: Matrix,
    scores: IntervalMatrix,
    correlations: IntervalMatrix,
    method_used: Method,
) -> Result<PcaResult> {
    let q = loadings_u.n_cols();
    let pcs = component_labels(q);
    let mut center_scores = s.z.matmul(&loadings_u)?;
    center_scores.scale((s.m as f64).sqrt());
    let center_correlations = s.z.transpose().matmul(&axes_v)?;
    Ok(PcaResult {
        eigenvalues: eig.values[..q].to_vec(),
        spectrum: eig.values.clone(),
        loadings_u,
        axes_v,
        scores: scores.with_labels(x.row_labels().to_vec(), pcs.clone())?,
        correlations: correlations.with_labels(x.col_labels().to_vec(), pcs)?,
        center_scores,
        center_correlations,
        method_used,
    })
}

/// Duality centers PCA through the m×m eigenproblem on `ZZᵗ`.
///
/// Correlations come straight from the object axes `V`; loadings are then
/// transported with `u = Zᵗv/√λ` and projected to get the scores.
/// `q = None` keeps every eigenvalue above the rank tolerance.
pub fn pca_zzt(x: &IntervalMatrix, q: Option<usize>) -> Result<PcaResult> {
    let s = standardize(x)?;
    let eig = eigen_sym(&s.z.gram_rows(), DEFAULT_EIGEN_TOL)?;
    let q = retained(&eig, q)?;
    let axes_v = eig.vectors.leading_columns(q);
    let correlations = interval_correlations(&s, &axes_v)?;
    let mut loadings_u = Matrix::zeros(s.n, q);
    for k in 0..q {
        let u = dual_u_from_v(&s.z, &axes_v.column(k), eig.values[k], eig.rank_tol)?;
        loadings_u.set_column(k, &u);
    }
    let scores = interval_scores(&s, &loadings_u)?;
    assemble(
        x,
        &s,
        &eig,
        loadings_u,
        axes_v,
        scores,
        correlations,
        Method::Zzt,
    )
}

/// Duality centers PCA through the n×n eigenproblem on `ZᵗZ`.
///
/// Scores come straight from the loadings `U`; object axes are transported
/// with `v = Zu/√λ` and projected to get the interval correlations.
pub fn pca_ztz(x: &IntervalMatrix, q: Option<usize>) -> Result<PcaResult> {
    let s = standardize(x)?;
    let eig = eigen_sym(&s.z.gram_columns(), DEFAULT_EIGEN_TOL)?;
    let q = retained(&eig, q)?;
    let loadings_u = eig.vectors.leading_columns(q);
    let scores = interval_scores(&s, &loadings_u)?;
    let mut axes_v = Matrix::zeros(s.m, q);
    for k in 0..q {
        let v = dual_v_from_u(&s.z, &loadings_u.column(k), eig.values[k], eig.rank_tol)?;
        axes_v.set_column(k, &v);
    }
    let correlations = interval_correlations(&s, &axes_v)?;
    assemble(
        x,
        &s,
        &eig,
        loadings_u,
        axes_v,
        scores,
        correlations,
        Method::Ztz,
    )
}

/// The eigenproblem [`pca_auto`] picks for an m×n table: `ZZᵗ` when
/// `m <= n`, otherwise `ZᵗZ`.
pub fn auto_method(m: usize, n: usize) -> Method {
    if m <= n {
        Method::Zzt
    } else {
        Method::Ztz
    }
}

/// Runs whichever path has the smaller eigenproblem.
pub fn pca_auto(x: &IntervalMatrix, q: Option<usize>) -> Result<PcaResult> {
    pca_with(x, auto_method(x.n_rows(), x.n_cols()), q)
}

pub fn pca_with(x: &IntervalMatrix, method: Method, q: Option<usize>) -> Result<PcaResult> {
    match method {
        Method::Zzt => pca_zzt(x, q),
        Method::Ztz => pca_ztz(x, q),
    }
}

/// Interval scores of the original centers method: midpoints are centered
/// but not reduced, the loadings are eigenvectors of `(X^c)ᵗX^c`, and the
/// centered bounds are projected onto them.
pub fn interval_scores_raw(x: &IntervalMatrix, q: Option<usize>) -> Result<IntervalMatrix> {
    let (m, n) = x.shape();
    if m < 2 {
        return Err(Error::Dimension(format!(
            "need at least 2 objects, found {m}"
        )));
    }
    let centers = centers_matrix(x);
    let means = column_means(&centers);
    let centered = Matrix::from_fn(m, n, |i, j| centers[(i, j)] - means[j]);
    let eig = eigen_sym(&centered.gram_columns(), DEFAULT_EIGEN_TOL)?;
    let q = retained(&eig, q)?;
    let low = Matrix::from_fn(m, n, |i, j| x.get(i, j).lo() - means[j]);
    let high = Matrix::from_fn(m, n, |i, j| x.get(i, j).hi() - means[j]);
    interval_project(
        &BoundsPair::new(low, high)?,
        &eig.vectors.leading_columns(q),
    )?
    .with_labels(x.row_labels().to_vec(), component_labels(q))
}

impl PcaResult {
    pub fn n_components(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Reverses the orientation of component `k`: both eigenvector columns
    /// and the center values change sign, and every interval `[a, b]` of the
    /// component becomes `[-b, -a]`.
    pub fn flip_component(&mut self, k: usize) {
        self.loadings_u.negate_column(k);
        self.axes_v.negate_column(k);
        self.center_scores.negate_column(k);
        self.center_correlations.negate_column(k);
        self.scores.negate_column(k);
        self.correlations.negate_column(k);
    }

    /// Copy of `self` with each component oriented like the same component
    /// of `reference` (non-negative loading inner product).
    pub fn aligned_to(&self, reference: &PcaResult) -> PcaResult {
        let mut out = self.clone();
        let q = self.n_components().min(reference.n_components());
        for k in 0..q {
            let d: f64 = (0..self.loadings_u.n_rows())
                .map(|i| self.loadings_u[(i, k)] * reference.loadings_u[(i, k)])
                .sum();
            if d < 0.0 {
                out.flip_component(k);
            }
        }
        out
    }

    /// JSON document with labels, eigenvalues, and the four result
    /// matrices. Interval correlations are clamped to `[-1, 1]` when
    /// `clamp` is set.
    pub fn to_json(&self, clamp: bool) -> String {
        let correlations = if clamp {
            self.correlations.clamped_unit()
        } else {
            self.correlations.clone()
        };
        let doc = PcaDocument {
            method_used: self.method_used,
            eigenvalues: &self.eigenvalues,
            objects: self.scores.row_labels(),
            variables: self.correlations.row_labels(),
            components: self.scores.col_labels(),
            clamped: clamp,
            scores: interval_rows(&self.scores),
            correlations: interval_rows(&correlations),
            center_scores: self.center_scores.to_rows(),
            center_correlations: self.center_correlations.to_rows(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("result serializes");
        s.push('\n');
        s
    }

    pub fn scores_csv(&self) -> String {
        write_interval_csv(&self.scores)
    }

    pub fn correlations_csv(&self, clamp: bool) -> String {
        if clamp {
            write_interval_csv(&self.correlations.clamped_unit())
        } else {
            write_interval_csv(&self.correlations)
        }
    }
}

#[derive(Serialize)]
struct PcaDocument<'a> {
    method_used: Method,
    eigenvalues: &'a [f64],
    objects: &'a [String],
    variables: &'a [String],
    components: &'a [String],
    clamped: bool,
    scores: Vec<Vec<Interval>>,
    correlations: Vec<Vec<Interval>>,
    center_scores: Vec<Vec<f64>>,
    center_correlations: Vec<Vec<f64>>,
}

fn interval_rows(t: &IntervalMatrix) -> Vec<Vec<Interval>> {
    (0..t.n_rows()).map(|i| t.row(i).to_vec()).collect()
}

/// Largest absolute difference between two results over eigenvalues,
/// eigenvectors, center values and interval endpoints. Orientation is
/// compared as is; align first with [`PcaResult::aligned_to`].
pub fn max_deviation(a: &PcaResult, b: &PcaResult) -> f64 {
    assert_eq!(
        a.n_components(),
        b.n_components(),
        "component counts differ"
    );
    let mut worst: f64 = a
        .eigenvalues
        .iter()
        .zip(&b.eigenvalues)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    for (x, y) in [
        (&a.loadings_u, &b.loadings_u),
        (&a.axes_v, &b.axes_v),
        (&a.center_scores, &b.center_scores),
        (&a.center_correlations, &b.center_correlations),
    ] {
        worst = worst.max(x.max_abs_diff(y));
    }
    for (x, y) in [(&a.scores, &b.scores), (&a.correlations, &b.correlations)] {
        for (p, r) in x.cells().iter().zip(y.cells()) {
            worst = worst
                .max((p.lo() - r.lo()).abs())
                .max((p.hi() - r.hi()).abs());
        }
    }
    worst
}
