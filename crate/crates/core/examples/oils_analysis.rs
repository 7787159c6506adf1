//! Centers PCA of the bundled oils table: spectrum, interval correlations,
//! and interval scores.
//!
//! ```bash
//! cargo run -p symbolic-pca --example oils_analysis
//! ```

use symbolic_pca::datasets::oils;
use symbolic_pca::pca_auto;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = oils();
    let result = pca_auto(&table, None)?;
    println!("path: {}", result.method_used.as_str());

    let total: f64 = result.spectrum.iter().sum();
    for (k, lambda) in result.eigenvalues.iter().enumerate() {
        println!(
            "PC{}  lambda {:.4}  ({:.1}%)",
            k + 1,
            lambda,
            100.0 * lambda / total
        );
    }

    println!("\ninterval correlations (clamped):");
    let corr = result.correlations.clamped_unit();
    for (i, name) in corr.row_labels().iter().enumerate() {
        let cells: Vec<String> = corr
            .row(i)
            .iter()
            .map(|iv| format!("{:>17}", format!("[{:.3},{:.3}]", iv.lo(), iv.hi())))
            .collect();
        println!("{name:<4} {}", cells.join(" "));
    }

    println!("\ninterval scores:");
    for (i, name) in result.scores.row_labels().iter().enumerate() {
        let pc = |k: usize| {
            let iv = result.scores.get(i, k);
            format!("[{:.3},{:.3}]", iv.lo(), iv.hi())
        };
        println!("{name:<9} {:>17} {:>17}", pc(0), pc(1));
    }
    Ok(())
}
