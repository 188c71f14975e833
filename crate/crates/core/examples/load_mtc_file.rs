//! Reading and writing category files.
//!
//! cargo run --example load_mtc_file [-- <path>]

use quon::io::{fingerprint, parse_mtc, serialize_mtc, MtcFile};
use quon::mtc::{ising, verify_modular_data};
use quon::recoupling::build_recoupling;

const SEMION: &str = "\
mtc my_semion
labels 1 s
unit 1
N 1 1 1 1
N 1 s s 1
N s 1 s 1
N s s 1 1
S 0 0.7071067811865476 0 0.7071067811865476 0
S 1 0.7071067811865476 0 -0.7071067811865476 0
F s s s s 1 1 -1 0
";

fn main() -> quon::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SEMION.to_string(),
    };
    let file = parse_mtc(&text)?;
    let m = file.to_mtc()?;
    let rd = file.recoupling(&m)?;
    println!("{} fingerprint {}", m.name(), fingerprint(&file));
    println!("  modular data: {}", if verify_modular_data(&m, 1e-9)?.passed() { "ok" } else { "FAILED" });
    println!("  recoupling:   {}", if rd.validate(1e-9, 0).passed() { "ok" } else { "FAILED" });

    match parse_mtc("mtc broken\nlabels a b\nunit a\nN a b c 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error example: {e}"),
    }

    let i = ising();
    let out = serialize_mtc(&MtcFile::from_mtc(&i, Some(&build_recoupling(&i)?)));
    println!("\nising as a file ({} lines):", out.lines().count());
    for line in out.lines().take(12) {
        println!("  {line}");
    }
    Ok(())
}
