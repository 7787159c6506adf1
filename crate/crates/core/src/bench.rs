//! Seeded synthetic interval tables and a wall-clock comparison of the two
//! eigenproblem paths.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::interval::{numbered_labels, Interval, IntervalMatrix};
use crate::pca::{auto_method, pca_ztz, pca_zzt, Method};

/// An m×n interval table drawn from a seeded generator. Each column gets its
/// own location and scale; interval widths are proportional to the column
/// scale. Identical arguments always give identical tables.
pub fn random_interval_table(m: usize, n: usize, seed: u64) -> IntervalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let columns: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen_range(-50.0..50.0), rng.gen_range(0.5..10.0)))
        .collect();
    let mut cells = Vec::with_capacity(m * n);
    for _ in 0..m {
        for &(loc, scale) in &columns {
            let center = loc + scale * rng.gen_range(-1.0..1.0);
            let half = scale * rng.gen_range(0.0..0.4);
            cells.push(
                Interval::new(center - half, center + half).expect("half-width is non-negative"),
            );
        }
    }
    IntervalMatrix::new(numbered_labels("S", m), numbered_labels("X", n), cells)
        .expect("labels are unique")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub zzt_times: Vec<Duration>,
    pub ztz_times: Vec<Duration>,
    /// The path `pca_auto` takes for this shape.
    pub auto_choice: Method,
}

pub fn median(times: &[Duration]) -> Duration {
    let mut sorted = times.to_vec();
    sorted.sort();
    match sorted.len() {
        0 => Duration::ZERO,
        n if n % 2 == 1 => sorted[n / 2],
        n => (sorted[n / 2 - 1] + sorted[n / 2]) / 2,
    }
}

impl BenchReport {
    pub fn zzt_median(&self) -> Duration {
        median(&self.zzt_times)
    }

    pub fn ztz_median(&self) -> Duration {
        median(&self.ztz_times)
    }

    pub fn faster(&self) -> Method {
        if self.ztz_median() < self.zzt_median() {
            Method::Ztz
        } else {
            Method::Zzt
        }
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "m={} n={} trials={} seed={}", c.m, c.n, c.trials, c.seed)?;
        writeln!(
            f,
            "{:<6} {:>12} {:>14}",
            "path", "eigen size", "median (ms)"
        )?;
        writeln!(
            f,
            "{:<6} {:>12} {:>14.3}",
            "zzt",
            format!("{0}x{0}", c.m),
            self.zzt_median().as_secs_f64() * 1e3
        )?;
        writeln!(
            f,
            "{:<6} {:>12} {:>14.3}",
            "ztz",
            format!("{0}x{0}", c.n),
            self.ztz_median().as_secs_f64() * 1e3
        )?;
        writeln!(f, "faster: {}", self.faster().as_str())?;
        write!(f, "auto:   {}", self.auto_choice.as_str())
    }
}

/// Times both paths on the same seeded table, one trial after another.
pub fn run_bench(config: BenchConfig) -> Result<BenchReport> {
    let table = random_interval_table(config.m, config.n, config.seed);
    let mut zzt_times = Vec::with_capacity(config.trials);
    let mut ztz_times = Vec::with_capacity(config.trials);
    for _ in 0..config.trials {
        let start = Instant::now();
        std::hint::black_box(pca_zzt(&table, None)?);
        zzt_times.push(start.elapsed());

        let start = Instant::now();
        std::hint::black_box(pca_ztz(&table, None)?);
        ztz_times.push(start.elapsed());
    }
    Ok(BenchReport {
        config,
        zzt_times,
        ztz_times,
        auto_choice: auto_method(config.m, config.n),
    })
}
