//! Fusion subcategories, their biprojections and Müger centers.
//!
//! cargo run --example subcategories [-- <category>]

use quon::fourier::{
    check_biprojection_duality, check_gannon_inequality, enumerate_fusion_subsets, mueger_center,
    projection, supp, DEFAULT_SUPPORT_TOL,
};
use quon::mtc::builtin;
use quon::quon::sft;

fn main() -> quon::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "su2:4".into());
    let m = builtin(&name)?;
    println!("{}: δ² = {:.6}", m.name(), m.mu());
    for k in enumerate_fusion_subsets(&m)? {
        let center = mueger_center(&m, &k, DEFAULT_SUPPORT_TOL);
        let p = projection(&m, &k);
        let a = supp(&m, &p, DEFAULT_SUPPORT_TOL)?;
        let b = supp(&m, &sft(&m, &p)?, DEFAULT_SUPPORT_TOL)?;
        println!(
            "  K = {:<20} center = {:<20} Supp(P_K) Supp(sft P_K) = {:.6}",
            k.display(&m).to_string(),
            center.display(&m).to_string(),
            a * b
        );
    }
    let report = check_biprojection_duality(&m, 1e-8)?;
    println!("biprojection checks: {}", if report.passed() { "ok" } else { "FAILED" });
    let gannon = check_gannon_inequality(&m, 1e-7);
    let pairs: Vec<String> = gannon
        .equality_pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", m.ring().names()[x], m.ring().names()[y]))
        .collect();
    println!("Gannon equality pairs: {}", pairs.join(" "));
    Ok(())
}
