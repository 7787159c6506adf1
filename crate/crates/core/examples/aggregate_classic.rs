//! Turns a classic table into an interval table by grouping rows on a
//! concept column, then runs the PCA on the groups.
//!
//! ```bash
//! cargo run -p symbolic-pca --example aggregate_classic
//! ```

use symbolic_pca::pca_auto;
use symbolic_pca::table::{aggregate_classic, parse_classic_csv, write_interval_csv};

const SALES: &str = "\
region,units,price,returns
north,120,9.5,3
north,135,9.1,5
north,128,9.8,2
south,80,11.2,7
south,95,10.4,4
east,150,8.7,1
east,142,8.9,6
east,160,8.2,2
west,70,12.5,8
west,88,12.1,5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let classic = parse_classic_csv(SALES, Some("region"))?;
    let intervals = aggregate_classic(&classic, "region")?;
    print!("{}", write_interval_csv(&intervals));

    let result = pca_auto(&intervals, Some(2))?;
    println!(
        "\npath {}, first two eigenvalues {:.3?}",
        result.method_used.as_str(),
        result.eigenvalues
    );
    for (i, region) in result.scores.row_labels().iter().enumerate() {
        println!("{region:<6} PC1 {}", result.scores.get(i, 0));
    }
    Ok(())
}
