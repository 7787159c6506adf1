//! Exit criteria, one line per criterion. Runs as a plain binary so the
//! report is always printed; any failure makes the process exit nonzero.

mod common;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use symbolic_pca::bench::{run_bench, BenchConfig};
use symbolic_pca::datasets::oils;
use symbolic_pca::linalg::DEFAULT_EIGEN_TOL;
use symbolic_pca::pca::{max_deviation, standardize};
use symbolic_pca::table::{aggregate_classic, ClassicTable};
use symbolic_pca::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Oils plus 200 seeded random tables with 2 <= m, n <= 10.
fn corpus() -> Vec<IntervalMatrix> {
    let mut all = vec![oils()];
    all.extend(random_corpus(200));
    all
}

fn oils_correlations() -> Outcome {
    let start = Instant::now();
    let r = pca_auto(&oils(), None).unwrap();
    let elapsed = start.elapsed();
    let clamped = r.correlations.clamped_unit();
    let err = (0..4)
        .map(|k| interval_column_error(&clamped, &OILS_CORRELATIONS, k))
        .fold(0.0, f64::max);
    outcome(
        err <= 5e-3 && elapsed.as_secs_f64() < 1.0 && r.n_components() == 4,
        format!(
            "max |err| {err:.2e} (tol 5e-3), runtime {:.3} ms",
            elapsed.as_secs_f64() * 1e3
        ),
    )
}

fn oils_center_correlations() -> Outcome {
    let r = pca_auto(&oils(), None).unwrap();
    let err = (0..4)
        .map(|k| point_column_error(&r.center_correlations, &OILS_CENTER_CORRELATIONS, k))
        .fold(0.0, f64::max);
    outcome(err <= 1e-5, format!("max |err| {err:.2e} (tol 1e-5)"))
}

fn oils_scores() -> Outcome {
    let r = pca_auto(&oils(), None).unwrap();
    let err = (0..4)
        .map(|k| interval_column_error(&r.scores, &OILS_SCORES, k))
        .fold(0.0, f64::max);
    outcome(err <= 5e-3, format!("max |err| {err:.2e} (tol 5e-3)"))
}

fn containment(tables: &[IntervalMatrix]) -> Outcome {
    let mut violations = 0;
    let mut checked = 0;
    for t in tables {
        let r = pca_auto(t, None).unwrap();
        for i in 0..r.correlations.n_rows() {
            for k in 0..r.n_components() {
                checked += 1;
                violations += usize::from(
                    !r.correlations
                        .get(i, k)
                        .contains(r.center_correlations[(i, k)]),
                );
            }
        }
        for i in 0..r.scores.n_rows() {
            for k in 0..r.n_components() {
                checked += 1;
                violations += usize::from(!r.scores.get(i, k).contains(r.center_scores[(i, k)]));
            }
        }
    }
    outcome(
        violations == 0,
        format!("{violations} violations in {checked} cells"),
    )
}

fn vertex_oracle(tables: &[IntervalMatrix]) -> Outcome {
    let mut violations = 0;
    let mut checked = 0;
    for t in tables {
        let s = standardize(t).unwrap();
        for method in [Method::Zzt, Method::Ztz] {
            let r = pca::pca_with(t, method, None).unwrap();
            let root_m = (s.m as f64).sqrt();
            for k in 0..r.n_components() {
                let v = r.axes_v.column(k);
                let u = r.loadings_u.column(k);
                for j in 0..s.n {
                    let column: Vec<Interval> = (0..s.m).map(|i| s.bounds.cell(i, j)).collect();
                    let oracle = vertex_extremes(&column, &v).unwrap();
                    checked += 1;
                    violations +=
                        usize::from(!intervals_close(r.correlations.get(j, k), oracle, 1e-12));
                }
                for i in 0..s.m {
                    let oracle = vertex_extremes(&s.bounds.row(i), &u).unwrap().scale(root_m);
                    checked += 1;
                    violations += usize::from(!intervals_close(r.scores.get(i, k), oracle, 1e-12));
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{violations} violations in {checked} projections"),
    )
}

fn duality(tables: &[IntervalMatrix]) -> Outcome {
    let mut worst_eig: f64 = 0.0;
    let mut worst_interval: f64 = 0.0;
    let mut shape_mismatch = 0;
    for t in tables {
        let a = pca_zzt(t, None).unwrap();
        let b = pca_ztz(t, None).unwrap();
        if a.n_components() != b.n_components() {
            shape_mismatch += 1;
            continue;
        }
        for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
            worst_eig = worst_eig.max((x - y).abs() / x.abs().max(y.abs()));
        }
        let a = a.aligned_to(&b);
        for (p, q) in [(&a.scores, &b.scores), (&a.correlations, &b.correlations)] {
            for (x, y) in p.cells().iter().zip(q.cells()) {
                worst_interval = worst_interval
                    .max((x.lo() - y.lo()).abs())
                    .max((x.hi() - y.hi()).abs());
            }
        }
        worst_interval = worst_interval.max(max_deviation(&a, &b));
    }
    outcome(
        shape_mismatch == 0 && worst_eig <= 1e-9 && worst_interval <= 1e-9,
        format!(
            "eigenvalue rel diff {worst_eig:.2e} (tol 1e-9), output diff {worst_interval:.2e} (tol 1e-9), rank mismatches {shape_mismatch}"
        ),
    )
}

fn eigen_invariants(tables: &[IntervalMatrix]) -> Outcome {
    let mut worst_orth: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    let mut worst_trace: f64 = 0.0;
    let mut count = 0;
    for t in tables {
        let s = standardize(t).unwrap();
        for (gram, is_small) in [(s.z.gram_rows(), false), (s.z.gram_columns(), true)] {
            let e = eigen_sym(&gram, DEFAULT_EIGEN_TOL).unwrap();
            count += 1;
            worst_orth = worst_orth.max(e.orthonormality_residual());
            worst_res = worst_res.max(e.eigen_residual(&gram));
            if is_small {
                worst_trace = worst_trace.max((e.values.iter().sum::<f64>() - s.n as f64).abs());
            }
        }
        for method in [Method::Zzt, Method::Ztz] {
            let r = pca::pca_with(t, method, None).unwrap();
            worst_trace = worst_trace.max((r.spectrum.iter().sum::<f64>() - s.n as f64).abs());
        }
    }
    outcome(
        worst_orth <= 1e-10 && worst_res <= 1e-9 && worst_trace <= 1e-9,
        format!(
            "{count} decompositions: orthonormality {worst_orth:.2e} (tol 1e-10), residual {worst_res:.2e} (tol 1e-9), trace error {worst_trace:.2e} (tol 1e-9)"
        ),
    )
}

/// Classical correlation PCA of the midpoints, computed without the
/// interval machinery: correlation matrix from covariances, scores of the
/// unit-variance standardized data, correlations `√λ·u`.
fn classical_pca(x: &Matrix) -> (Vec<f64>, Matrix, Matrix, Matrix) {
    let (m, n) = x.shape();
    let means: Vec<f64> = (0..n)
        .map(|j| x.column(j).iter().sum::<f64>() / m as f64)
        .collect();
    let sds: Vec<f64> = (0..n)
        .map(|j| {
            (x.column(j)
                .iter()
                .map(|v| (v - means[j]).powi(2))
                .sum::<f64>()
                / m as f64)
                .sqrt()
        })
        .collect();
    let mut corr = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let cov: f64 = (0..m)
                .map(|i| (x[(i, a)] - means[a]) * (x[(i, b)] - means[b]))
                .sum::<f64>()
                / m as f64;
            corr[(a, b)] = cov / (sds[a] * sds[b]);
        }
    }
    for a in 0..n {
        for b in 0..a {
            corr[(a, b)] = corr[(b, a)];
        }
    }
    let e = eigen_sym(&corr, DEFAULT_EIGEN_TOL).unwrap();
    let q = e.rank();
    let u = e.vectors.leading_columns(q);
    let standardized = Matrix::from_rows(
        &(0..m)
            .map(|i| (0..n).map(|j| (x[(i, j)] - means[j]) / sds[j]).collect())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let scores = standardized.matmul(&u).unwrap();
    let mut loadings_corr = u.clone();
    for k in 0..q {
        let root = e.values[k].sqrt();
        for j in 0..n {
            loadings_corr[(j, k)] *= root;
        }
    }
    (e.values[..q].to_vec(), u, scores, loadings_corr)
}

fn degenerate_reduction(tables: &[IntervalMatrix]) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut rank_mismatch = 0;
    for t in tables {
        let mids = t.midpoints();
        let collapsed =
            IntervalMatrix::from_points(t.row_labels().to_vec(), t.col_labels().to_vec(), &mids)
                .unwrap();
        let r = pca_auto(&collapsed, None).unwrap();
        let (values, u, scores, corr) = classical_pca(&mids);
        if values.len() != r.n_components() {
            rank_mismatch += 1;
            continue;
        }
        for k in 0..values.len() {
            let d: f64 = (0..u.n_rows())
                .map(|j| u[(j, k)] * r.loadings_u[(j, k)])
                .sum();
            let sign = if d < 0.0 { -1.0 } else { 1.0 };
            for i in 0..scores.n_rows() {
                let iv = r.scores.get(i, k);
                worst = worst
                    .max(iv.width())
                    .max((iv.lo() - sign * scores[(i, k)]).abs());
            }
            for j in 0..corr.n_rows() {
                let iv = r.correlations.get(j, k);
                worst = worst
                    .max(iv.width())
                    .max((iv.lo() - sign * corr[(j, k)]).abs());
            }
        }
    }
    outcome(
        worst <= 1e-10 && rank_mismatch == 0,
        format!("max deviation {worst:.2e} (tol 1e-10), rank mismatches {rank_mismatch}"),
    )
}

fn aggregation_shape() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1994);
    let states: Vec<u32> = (0..46).map(|s| s * 2 + 1).collect();
    let m = 1994;
    let keys: Vec<String> = (0..m)
        .map(|i| {
            // Every state appears at least once.
            let s = if i < 46 {
                states[i]
            } else {
                states[rng.gen_range(0..46)]
            };
            s.to_string()
        })
        .collect();
    let mut cols = vec!["fold".to_string()];
    cols.extend((1..102).map(|j| format!("x{j}")));
    let values: Vec<f64> = (0..m * 102)
        .map(|c| {
            if c % 102 == 0 {
                f64::from(rng.gen_range(1..=10))
            } else {
                (rng.gen::<f64>() * 100.0).round() / 100.0
            }
        })
        .collect();
    let table = ClassicTable::new(
        (1..=m).map(|i| i.to_string()).collect(),
        cols,
        Matrix::from_row_major(m, 102, values).unwrap(),
    )
    .unwrap()
    .with_concept("state", keys.clone())
    .unwrap();
    let agg = aggregate_classic(&table, "state").unwrap();
    let mut violations = 0;
    for (i, key) in keys.iter().enumerate() {
        let g = agg.row_index(key).unwrap();
        for j in 0..102 {
            violations += usize::from(!agg.get(g, j).contains(table.values()[(i, j)]));
        }
    }
    outcome(
        agg.shape() == (46, 102) && violations == 0,
        format!(
            "1994x103 -> {}x{}, {violations} containment violations",
            agg.n_rows(),
            agg.n_cols()
        ),
    )
}

fn bench_ordering() -> Outcome {
    let report = run_bench(BenchConfig {
        m: 2000,
        n: 20,
        trials: 3,
        seed: 42,
    })
    .unwrap();
    outcome(
        report.ztz_median() < report.zzt_median() && report.auto_choice == Method::Ztz,
        format!(
            "median zzt {:.1} ms, ztz {:.3} ms, auto {}",
            report.zzt_median().as_secs_f64() * 1e3,
            report.ztz_median().as_secs_f64() * 1e3,
            report.auto_choice.as_str()
        ),
    )
}

fn main() {
    let tables = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 oils interval correlations", Box::new(oils_correlations)),
        (
            "2 oils center correlations",
            Box::new(oils_center_correlations),
        ),
        ("3 oils interval scores", Box::new(oils_scores)),
        ("4 containment", Box::new(|| containment(&tables))),
        ("5 vertex oracle", Box::new(|| vertex_oracle(&tables))),
        ("6 duality equivalence", Box::new(|| duality(&tables))),
        ("7 eigen invariants", Box::new(|| eigen_invariants(&tables))),
        (
            "8 degenerate reduction",
            Box::new(|| degenerate_reduction(&tables)),
        ),
        ("9 aggregation shape", Box::new(aggregation_shape)),
        ("10 bench ordering", Box::new(bench_ordering)),
    ];
    let mut failures = 0;
    for (name, check) in &criteria {
        let o = check();
        failures += usize::from(!o.pass);
        println!(
            "[{}] {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
