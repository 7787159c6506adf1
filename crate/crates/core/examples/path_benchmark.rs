//! Wall-clock comparison of the ZZᵗ and ZᵗZ paths on seeded random tables.
//!
//! ```bash
//! cargo run --release -p symbolic-pca --example path_benchmark -- 2000 20 3
//! ```

use symbolic_pca::bench::{run_bench, BenchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let shapes: Vec<(usize, usize)> = match args.as_slice() {
        [m, n, ..] => vec![(*m, *n)],
        _ => vec![(200, 20), (20, 200), (500, 10)],
    };
    let trials = args.get(2).copied().unwrap_or(3);
    for (m, n) in shapes {
        let report = run_bench(BenchConfig {
            m,
            n,
            trials,
            seed: 42,
        })?;
        println!("{report}\n");
    }
    Ok(())
}
