//! Fourier self-duality of |6j|² through the tetrahedron.
//!
//! cargo run --release --example six_j_self_duality [-- <category>]

use quon::graph::tetrahedron_graph;
use quon::graphic::{check_self_duality, graph_coefficient, DualityOptions};
use quon::mtc::builtin;
use quon::recoupling::build_recoupling;

fn main() -> quon::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fibonacci".into());
    let m = builtin(&name)?;
    let rd = build_recoupling(&m)?;
    let t = tetrahedron_graph();
    let names = m.ring().names();
    println!("nonzero tetrahedron coefficients for {}:", m.name());
    for x in m.tuples(6) {
        let v = graph_coefficient(&m, &rd, &t, &x)?;
        if v > 1e-12 {
            let labels: Vec<&str> = x.iter().map(|&i| names[i].as_str()).collect();
            println!("  {:<40} {v:.9}", labels.join(" "));
        }
    }
    let report = check_self_duality(&m, &rd, &t, DualityOptions::default())?;
    for c in &report.checks {
        println!("{} {} max error {:.2e} {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.max_error,
            c.note.as_deref().unwrap_or(""));
    }
    Ok(())
}
