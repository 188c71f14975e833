//! Modular data of the built-in categories and the axiom suite.
//!
//! cargo run --example modular_data [-- <name>...]

use quon::mtc::{builtin, verify_modular_data};

fn main() -> quon::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names = if args.is_empty() {
        vec!["fibonacci".to_string(), "ising".into(), "semion".into(), "pointed_z:4".into(), "su2:3".into()]
    } else {
        args
    };
    for name in names {
        let m = builtin(&name)?;
        println!("{} (rank {}, global dimension δ = {:.6})", m.name(), m.rank(), m.delta());
        for x in m.labels() {
            let row: Vec<String> = (0..m.rank())
                .map(|y| {
                    let s = m.s_entry(x.index(), y);
                    format!("{:+.4}{:+.4}i", s.re, s.im)
                })
                .collect();
            println!("  {:>6}  d = {:.6}  S row: {}", m.label_name(x), m.dim(x.index()), row.join("  "));
        }
        let report = verify_modular_data(&m, 1e-9)?;
        println!(
            "  axioms: {} ({} checks, max error {:.2e})\n",
            if report.passed() { "ok" } else { "FAILED" },
            report.checks.len(),
            report.max_error()
        );
    }
    Ok(())
}
