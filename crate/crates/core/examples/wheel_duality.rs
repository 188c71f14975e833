//! Self-duality of the wheel graphs.
//!
//! cargo run --release --example wheel_duality

use quon::graph::wheel_graph;
use quon::graphic::{check_self_duality, DualityOptions};
use quon::mtc::{fibonacci, ising};
use quon::recoupling::build_recoupling;

fn main() -> quon::Result<()> {
    for m in [fibonacci(), ising()] {
        let rd = build_recoupling(&m)?;
        for n in 2..=4 {
            let w = wheel_graph(n)?;
            let report = check_self_duality(&m, &rd, &w, DualityOptions::default())?;
            let relabel = report.check("self_duality.relabeled").and_then(|c| c.note.clone()).unwrap_or_default();
            println!(
                "{:<10} wheel {n}: {} max error {:.2e}  {relabel}",
                m.name(),
                if report.passed() { "ok" } else { "FAILED" },
                report.max_error()
            );
        }
    }
    Ok(())
}
