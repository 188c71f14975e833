//! Generating functions Σ_g GHZ_{n,g} z^g and Σ_g Max_{n,g} z^g.
//!
//! cargo run --example generating_functions

use quon::graphic::{genus_dim_table, ghz_genfun, max_genfun};
use quon::mtc::ising;

fn main() -> quon::Result<()> {
    let m = ising();
    let n = 2;
    let names = m.ring().names();
    let ghz = ghz_genfun(&m, n)?;
    let max = max_genfun(&m, n)?;
    let table = genus_dim_table(&m, n, 4)?;
    println!("GHZ_{n}(z) for {}:", m.name());
    for (x, f) in ghz.nonzero() {
        println!("  |{} {}>  {f}", names[x[0]], names[x[1]]);
    }
    println!("Max_{n}(z):");
    for (x, f) in max.nonzero() {
        println!("  |{} {}>  {f}", names[x[0]], names[x[1]]);
        let series: Vec<String> = (0..=4).map(|g| format!("{:.6}", f.series_coeff(g).re)).collect();
        let dims: Vec<String> = (0..=4)
            .map(|g| format!("{:.6}", m.delta().powi(2 - n as i32 - 2 * g) * table.get(&x, g as usize) as f64))
            .collect();
        println!("    series   {}", series.join(" "));
        println!("    δ^..·dim {}", dims.join(" "));
    }
    Ok(())
}
