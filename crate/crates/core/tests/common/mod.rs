#![allow(dead_code)]

use symbolic_pca::bench::random_interval_table;
use symbolic_pca::{Interval, IntervalMatrix, Matrix};

/// Interval correlations for the oils table, clamped to [-1, 1]; rows GRA,
/// FRE, IOD, SAP; columns PC1..PC4.
pub const OILS_CORRELATIONS: [[(f64, f64); 4]; 4] = [
    [
        (0.827, 1.000),
        (-0.443, -0.265),
        (-0.038, 0.087),
        (-0.238, -0.084),
    ],
    [
        (-1.000, -0.760),
        (0.044, 0.372),
        (-0.428, -0.220),
        (-0.288, 0.019),
    ],
    [
        (0.726, 1.000),
        (-0.124, 0.191),
        (-0.565, -0.401),
        (-0.024, 0.161),
    ],
    [
        (-1.000, 0.190),
        (-1.000, 0.371),
        (-0.442, 0.163),
        (-0.231, 0.325),
    ],
];

/// Correlations between the centers and the components.
pub const OILS_CENTER_CORRELATIONS: [[f64; 4]; 4] = [
    [0.9210665, -0.3537703, 0.0246894, -0.1608524],
    [-0.9130654, 0.2080771, -0.3238118, -0.1347643],
    [0.8724116, 0.0337627, -0.4827661, 0.0685206],
    [-0.7354523, -0.6613331, -0.1397354, 0.0471425],
];

/// Interval principal components; rows Linseed, Perilla, Cotton, Sesame,
/// Camellia, Olive, Beef, Hog.
pub const OILS_SCORES: [[(f64, f64); 4]; 8] = [
    [
        (1.275, 4.733),
        (-1.353, 4.428),
        (-1.025, 1.289),
        (-0.989, 0.989),
    ],
    [
        (1.059, 1.701),
        (-1.128, -0.343),
        (-1.508, -1.046),
        (-0.134, 0.334),
    ],
    [
        (-0.236, 0.399),
        (-0.969, -0.213),
        (-0.170, 0.368),
        (-0.246, 0.204),
    ],
    [
        (0.154, 0.658),
        (-0.745, -0.179),
        (-0.027, 0.342),
        (-0.369, 0.028),
    ],
    [
        (0.151, 0.613),
        (-0.881, -0.437),
        (0.807, 1.204),
        (0.113, 0.538),
    ],
    [
        (-0.594, 0.100),
        (-0.775, 0.043),
        (0.019, 0.545),
        (-0.645, -0.101),
    ],
    [
        (-3.046, -2.226),
        (0.234, 1.162),
        (-0.392, 0.152),
        (-0.530, 0.193),
    ],
    [
        (-2.900, -1.841),
        (0.020, 1.135),
        (-0.729, 0.171),
        (-0.105, 0.720),
    ],
];

/// Worst absolute endpoint error of component `k` against `expected`,
/// taking the better of the two orientations.
pub fn interval_column_error<const R: usize>(
    got: &IntervalMatrix,
    expected: &[[(f64, f64); 4]; R],
    k: usize,
) -> f64 {
    let direct = (0..R)
        .map(|i| {
            let g = got.get(i, k);
            let (lo, hi) = expected[i][k];
            (g.lo() - lo).abs().max((g.hi() - hi).abs())
        })
        .fold(0.0, f64::max);
    let flipped = (0..R)
        .map(|i| {
            let g = got.get(i, k);
            let (lo, hi) = expected[i][k];
            (-g.hi() - lo).abs().max((-g.lo() - hi).abs())
        })
        .fold(0.0, f64::max);
    direct.min(flipped)
}

pub fn point_column_error(got: &Matrix, expected: &[[f64; 4]; 4], k: usize) -> f64 {
    let direct = (0..4)
        .map(|i| (got[(i, k)] - expected[i][k]).abs())
        .fold(0.0, f64::max);
    let flipped = (0..4)
        .map(|i| (-got[(i, k)] - expected[i][k]).abs())
        .fold(0.0, f64::max);
    direct.min(flipped)
}

/// `|a - b| <= 1e-12 * max(1, |a|, |b|)`.
pub fn close_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

pub fn intervals_close(a: Interval, b: Interval, tol: f64) -> bool {
    close_rel(a.lo(), b.lo(), tol) && close_rel(a.hi(), b.hi(), tol)
}

/// The random part of the shared test corpus: `count` tables with
/// `2 <= m, n <= 10`, all derived from fixed seeds.
pub fn random_corpus(count: usize) -> Vec<IntervalMatrix> {
    (0..count as u64)
        .map(|i| {
            let m = 2 + (i as usize * 7 + 3) % 9;
            let n = 2 + (i as usize * 5 + 1) % 9;
            random_interval_table(m, n, 1000 + i)
        })
        .collect()
}
