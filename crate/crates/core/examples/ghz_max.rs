//! GHZ and Max states at genus g and the generalized Verlinde formula.
//!
//! cargo run --example ghz_max

use quon::graphic::{check_max_equals_s_ghz, fusion_genus_dim, ghz, max_state, verlinde_dim};
use quon::mtc::{fibonacci, semion, MtcData};
use quon::quon::Quon;

fn show(m: &MtcData, name: &str, q: &Quon) {
    println!("  {name}:");
    for x in m.tuples(q.order()) {
        let v = q.get(&x);
        if v.norm() > 1e-12 {
            let labels: Vec<&str> = x.iter().map(|&i| m.ring().names()[i].as_str()).collect();
            println!("    |{}>  {:.6}", labels.join(""), v.re);
        }
    }
}

fn main() -> quon::Result<()> {
    // The semion is a qubit: GHZ and Max reproduce the familiar three-qubit states.
    let s = semion();
    println!("semion, n = 3, g = 0");
    show(&s, "GHZ", &ghz(&s, 3, 0));
    show(&s, "Max", &max_state(&s, 3, 0)?);

    let f = fibonacci();
    println!("\nfibonacci: dim(X, g) from fusion rules vs the S-matrix sum");
    for g in 0..=3 {
        for x in f.tuples(2) {
            println!(
                "  g={g} X=({},{})  dim = {}  S-sum = {:.9}",
                f.ring().names()[x[0]],
                f.ring().names()[x[1]],
                fusion_genus_dim(&f, &x, g),
                verlinde_dim(&f, &x, g).re
            );
        }
    }
    for n in 0..=3 {
        for g in 0..=2 {
            let r = check_max_equals_s_ghz(&f, n, g, 1e-9)?;
            println!("  Max_{{{n},{g}}} = S GHZ_{{{n},{g}}}: residual {:.2e}", r.max_error());
        }
    }
    Ok(())
}
