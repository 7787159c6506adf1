//! Closed-form interval projection against brute-force enumeration of the
//! hyperrectangle's vertices.
//!
//! ```bash
//! cargo run -p symbolic-pca --example vertex_oracle
//! ```

use symbolic_pca::{interval_project, vertex_extremes, BoundsPair, Interval, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let row = [
        Interval::new(-1.0, 2.0)?,
        Interval::new(0.5, 0.75)?,
        Interval::point(3.0),
        Interval::new(-4.0, -2.5)?,
    ];
    let weights = [0.6, -0.2, 0.0, -0.77];

    let low = Matrix::from_row_major(1, 4, row.iter().map(|iv| iv.lo()).collect())?;
    let high = Matrix::from_row_major(1, 4, row.iter().map(|iv| iv.hi()).collect())?;
    let w = Matrix::from_row_major(4, 1, weights.to_vec())?;
    let closed = interval_project(&BoundsPair::new(low, high)?, &w)?.get(0, 0);
    let brute = vertex_extremes(&row, &weights)?;

    println!("closed form: {closed}");
    println!("16 vertices: {brute}");
    println!(
        "difference:  {:.1e}",
        (closed.lo() - brute.lo())
            .abs()
            .max((closed.hi() - brute.hi()).abs())
    );
    Ok(())
}
