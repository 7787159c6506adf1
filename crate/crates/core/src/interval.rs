//! Closed intervals, labelled interval tables, and the signed-weight
//! projection of interval boxes onto linear directions.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Largest dimension [`vertex_extremes`] will enumerate (2^25 vertices).
pub const MAX_ENUMERATION_DIM: usize = 25;

/// A closed real interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() {
            return Err(Error::NonFinite(lo));
        }
        if !hi.is_finite() {
            return Err(Error::NonFinite(hi));
        }
        if lo > hi {
            return Err(Error::InvertedInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// The degenerate interval `[v, v]`.
    pub fn point(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn midpoint(&self) -> f64 {
        (self.lo + self.hi) / 2.0
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `[a, b] -> [-b, -a]`.
    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn scale(&self, factor: f64) -> Interval {
        let (a, b) = (self.lo * factor, self.hi * factor);
        Interval {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    /// Clamps both endpoints into `[min, max]`.
    pub fn clamp(&self, min: f64, max: f64) -> Interval {
        Interval {
            lo: self.lo.clamp(min, max),
            hi: self.hi.clamp(min, max),
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Elementwise lower and upper bound matrices of an interval table.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsPair {
    low: Matrix,
    high: Matrix,
}

impl BoundsPair {
    pub fn new(low: Matrix, high: Matrix) -> Result<Self> {
        if low.shape() != high.shape() {
            return Err(Error::Dimension(format!(
                "lower bounds are {:?} but upper bounds are {:?}",
                low.shape(),
                high.shape()
            )));
        }
        for (&l, &h) in low.as_slice().iter().zip(high.as_slice()) {
            if l > h {
                return Err(Error::InvertedInterval { lo: l, hi: h });
            }
        }
        Ok(BoundsPair { low, high })
    }

    /// Both bounds equal to `points`.
    pub fn degenerate(points: Matrix) -> Self {
        BoundsPair {
            low: points.clone(),
            high: points,
        }
    }

    pub fn low(&self) -> &Matrix {
        &self.low
    }

    pub fn high(&self) -> &Matrix {
        &self.high
    }

    pub fn shape(&self) -> (usize, usize) {
        self.low.shape()
    }

    pub fn transpose(&self) -> BoundsPair {
        BoundsPair {
            low: self.low.transpose(),
            high: self.high.transpose(),
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> Interval {
        Interval {
            lo: self.low[(i, j)],
            hi: self.high[(i, j)],
        }
    }

    pub fn row(&self, i: usize) -> Vec<Interval> {
        (0..self.shape().1).map(|j| self.cell(i, j)).collect()
    }
}

/// A labelled m×n grid of intervals: rows are objects, columns variables.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalMatrix {
    rows: Vec<String>,
    cols: Vec<String>,
    cells: Vec<Interval>,
}

fn check_unique(axis: &'static str, labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel {
                axis,
                label: l.clone(),
            });
        }
    }
    Ok(())
}

/// Labels `prefix1, prefix2, ...`.
pub fn numbered_labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

impl IntervalMatrix {
    /// Builds a table from row-major cells.
    pub fn new(rows: Vec<String>, cols: Vec<String>, cells: Vec<Interval>) -> Result<Self> {
        if cells.len() != rows.len() * cols.len() {
            return Err(Error::Dimension(format!(
                "{} cells supplied for {} rows and {} columns",
                cells.len(),
                rows.len(),
                cols.len()
            )));
        }
        check_unique("row", &rows)?;
        check_unique("column", &cols)?;
        Ok(IntervalMatrix { rows, cols, cells })
    }

    pub fn from_bounds(rows: Vec<String>, cols: Vec<String>, bounds: &BoundsPair) -> Result<Self> {
        let (m, n) = bounds.shape();
        if (m, n) != (rows.len(), cols.len()) {
            return Err(Error::Dimension(format!(
                "bounds are {m}x{n} but {} row and {} column labels were given",
                rows.len(),
                cols.len()
            )));
        }
        let cells = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| bounds.cell(i, j))
            .collect();
        IntervalMatrix::new(rows, cols, cells)
    }

    /// Table of degenerate intervals `[x, x]`.
    pub fn from_points(rows: Vec<String>, cols: Vec<String>, points: &Matrix) -> Result<Self> {
        IntervalMatrix::from_bounds(rows, cols, &BoundsPair::degenerate(points.clone()))
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Interval {
        self.cells[i * self.cols.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Interval) {
        let n = self.cols.len();
        self.cells[i * n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Interval] {
        let n = self.cols.len();
        &self.cells[i * n..(i + 1) * n]
    }

    pub fn cells(&self) -> &[Interval] {
        &self.cells
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.rows.iter().position(|r| r == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.cols.iter().position(|c| c == label)
    }

    pub fn bounds(&self) -> BoundsPair {
        let (m, n) = self.shape();
        BoundsPair {
            low: Matrix::from_fn(m, n, |i, j| self.get(i, j).lo),
            high: Matrix::from_fn(m, n, |i, j| self.get(i, j).hi),
        }
    }

    pub fn midpoints(&self) -> Matrix {
        let (m, n) = self.shape();
        Matrix::from_fn(m, n, |i, j| self.get(i, j).midpoint())
    }

    pub fn with_labels(mut self, rows: Vec<String>, cols: Vec<String>) -> Result<Self> {
        if rows.len() != self.rows.len() || cols.len() != self.cols.len() {
            return Err(Error::Dimension(
                "label count does not match the table".into(),
            ));
        }
        check_unique("row", &rows)?;
        check_unique("column", &cols)?;
        self.rows = rows;
        self.cols = cols;
        Ok(self)
    }

    pub fn map(&self, f: impl Fn(Interval) -> Interval) -> IntervalMatrix {
        IntervalMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            cells: self.cells.iter().copied().map(f).collect(),
        }
    }

    /// Every endpoint clamped into `[-1, 1]`.
    pub fn clamped_unit(&self) -> IntervalMatrix {
        self.map(|iv| iv.clamp(-1.0, 1.0))
    }

    /// Applies `[a, b] -> [-b, -a]` to every cell of column `j`.
    pub fn negate_column(&mut self, j: usize) {
        for i in 0..self.rows.len() {
            let v = self.get(i, j).neg();
            self.set(i, j, v);
        }
    }

    /// Drops the named columns; unknown names are an error.
    pub fn without_columns(&self, drop: &[String]) -> Result<IntervalMatrix> {
        for name in drop {
            if self.col_index(name).is_none() {
                return Err(Error::MissingColumn(name.clone()));
            }
        }
        let keep: Vec<usize> = (0..self.n_cols())
            .filter(|&j| !drop.contains(&self.cols[j]))
            .collect();
        let cols = keep.iter().map(|&j| self.cols[j].clone()).collect();
        let cells = (0..self.n_rows())
            .flat_map(|i| keep.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        IntervalMatrix::new(self.rows.clone(), cols, cells)
    }
}

/// Projects every row of an interval box table onto every weight column.
///
/// For a bounds table of shape m×n and weights of shape n×q, entry `(i, k)`
/// of the result is the exact range of `Σ_j x_j·w_jk` over the box
/// `[low[i][j], high[i][j]]`: negative weights pair with the opposite bound,
/// positive weights with the same bound, and zero weights drop out. To
/// project columns instead, pass `bounds.transpose()`.
pub fn interval_project(bounds: &BoundsPair, weights: &Matrix) -> Result<IntervalMatrix> {
    let (m, n) = bounds.shape();
    if weights.n_rows() != n {
        return Err(Error::Dimension(format!(
            "cannot project {m}x{n} bounds onto {}x{} weights",
            weights.n_rows(),
            weights.n_cols()
        )));
    }
    let q = weights.n_cols();
    let mut cells = Vec::with_capacity(m * q);
    for i in 0..m {
        let low = bounds.low.row(i);
        let high = bounds.high.row(i);
        for k in 0..q {
            let mut lo = 0.0;
            let mut hi = 0.0;
            for j in 0..n {
                let w = weights[(j, k)];
                if w < 0.0 {
                    lo += high[j] * w;
                    hi += low[j] * w;
                } else if w > 0.0 {
                    lo += low[j] * w;
                    hi += high[j] * w;
                }
            }
            cells.push(Interval { lo, hi });
        }
    }
    IntervalMatrix::new(numbered_labels("", m), numbered_labels("", q), cells)
}

/// Brute-force range of `Σ_j x_j·w_j` over the vertices of a box.
///
/// Enumerates all 2^n corners, so it is limited to
/// [`MAX_ENUMERATION_DIM`] coordinates. Used as a test oracle for
/// [`interval_project`].
pub fn vertex_extremes(row: &[Interval], weight: &[f64]) -> Result<Interval> {
    if row.len() != weight.len() {
        return Err(Error::Dimension(format!(
            "{} intervals against {} weights",
            row.len(),
            weight.len()
        )));
    }
    let n = row.len();
    if n > MAX_ENUMERATION_DIM {
        return Err(Error::TooManyVertices(n));
    }
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for mask in 0u32..(1u32 << n) {
        let p: f64 = row
            .iter()
            .zip(weight)
            .enumerate()
            .map(|(j, (iv, w))| {
                if mask >> j & 1 == 1 {
                    iv.hi * w
                } else {
                    iv.lo * w
                }
            })
            .sum();
        min = min.min(p);
        max = max.max(p);
    }
    Ok(Interval { lo: min, hi: max })
}
