//! The same analysis through both eigenproblems. The m×m and n×n routes
//! share their nonzero spectrum, and the transported axes agree once
//! signs are aligned.
//!
//! ```bash
//! cargo run -p symbolic-pca --example duality_paths -- 6 40
//! ```

use symbolic_pca::bench::random_interval_table;
use symbolic_pca::linalg::{dot, DEFAULT_EIGEN_TOL};
use symbolic_pca::pca::{max_deviation, standardize};
use symbolic_pca::{dual_u_from_v, eigen_sym, pca_ztz, pca_zzt};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (m, n) = match args.as_slice() {
        [m, n, ..] => (*m, *n),
        _ => (6, 40),
    };
    let table = random_interval_table(m, n, 7);
    let s = standardize(&table)?;

    let rows = eigen_sym(&s.z.gram_rows(), DEFAULT_EIGEN_TOL)?;
    let cols = eigen_sym(&s.z.gram_columns(), DEFAULT_EIGEN_TOL)?;
    println!("{m}x{n} table, rank {}", rows.rank());
    for k in 0..rows.rank() {
        let u = dual_u_from_v(&s.z, &rows.vectors.column(k), rows.values[k], rows.rank_tol)?;
        let cosine = dot(&u, &cols.vectors.column(k)).abs();
        println!(
            "k={:<2} lambda zzt {:.10}  ztz {:.10}  |cos(u_transported, u_direct)| {:.12}",
            k + 1,
            rows.values[k],
            cols.values[k],
            cosine
        );
    }

    let a = pca_zzt(&table, None)?;
    let b = pca_ztz(&table, None)?;
    println!(
        "max output difference after sign alignment: {:.2e}",
        max_deviation(&a.aligned_to(&b), &b)
    );
    Ok(())
}
