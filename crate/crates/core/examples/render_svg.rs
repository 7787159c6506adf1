//! Writes the correlation circle and the principal plane of the oils table
//! as SVG files.
//!
//! ```bash
//! cargo run -p symbolic-pca --example render_svg -- /tmp/plots
//! ```

use std::fs;
use std::path::PathBuf;

use symbolic_pca::datasets::oils;
use symbolic_pca::pca_auto;
use symbolic_pca::render::{render_circle, render_plane, PlotSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    fs::create_dir_all(&dir)?;
    let result = pca_auto(&oils(), None)?;

    let circle = dir.join("oils_circle.svg");
    let spec = PlotSpec::default().with_title("oils: correlation circle");
    fs::write(
        &circle,
        render_circle(&result.correlations.clamped_unit(), &spec)?,
    )?;

    let plane = dir.join("oils_plane.svg");
    let spec = PlotSpec::default()
        .with_axes(1, 2)
        .with_title("oils: PC1 x PC2");
    fs::write(&plane, render_plane(&result.scores, &spec)?)?;

    println!("wrote {} and {}", circle.display(), plane.display());
    Ok(())
}
