//! Built-in unitary modular categories.

use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64;

use super::{FusionRing, MtcData};
use crate::error::{Error, Result};

/// Which family a category came from; drives the choice of recoupling data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    Fibonacci,
    Ising,
    /// `Z/n` with the quadratic form documented on [`pointed_z`].
    Pointed(usize),
    /// `SU(2)` at level `k`, labels are doubled spins `0..=k`.
    Su2(usize),
    Custom,
}

pub const MAX_SU2_LEVEL: usize = 16;
pub const MAX_POINTED_ORDER: usize = 64;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn real_matrix(r: usize, f: impl Fn(usize, usize) -> f64) -> Array2<Complex64> {
    Array2::from_shape_fn((r, r), |(i, j)| Complex64::new(f(i, j), 0.0))
}

/// Fibonacci: `τ⊗τ = 1⊕τ`, `d(τ) = φ`.
pub fn fibonacci() -> MtcData {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let ring = FusionRing::from_fn(names(&["1", "tau"]), vec![0, 1], |x, y, z| match (x, y) {
        (0, _) => (y == z) as u32,
        (_, 0) => (x == z) as u32,
        _ => 1,
    })
    .expect("fibonacci ring");
    let delta = (1.0 + phi * phi).sqrt();
    let s = real_matrix(2, |i, j| {
        let raw = [[1.0, phi], [phi, -1.0]];
        raw[i][j] / delta
    });
    MtcData::with_dimensions("fibonacci", BuiltinKind::Fibonacci, ring, s, vec![1.0, phi])
        .expect("fibonacci data")
}

/// Ising: `σ⊗σ = 1⊕ψ`, `σ⊗ψ = σ`, `ψ⊗ψ = 1`.
pub fn ising() -> MtcData {
    let table = |x: usize, y: usize| -> &'static [usize] {
        match (x, y) {
            (0, y) => [&[0usize][..], &[1], &[2]][y],
            (x, 0) => [&[0usize][..], &[1], &[2]][x],
            (1, 1) => &[0, 2],
            (1, 2) | (2, 1) => &[1],
            (2, 2) => &[0],
            _ => unreachable!(),
        }
    };
    let ring = FusionRing::from_fn(names(&["1", "sigma", "psi"]), vec![0, 1, 2], |x, y, z| {
        table(x, y).contains(&z) as u32
    })
    .expect("ising ring");
    let r2 = 2f64.sqrt();
    let s = real_matrix(3, |i, j| {
        let raw = [[1.0, r2, 1.0], [r2, 0.0, -r2], [1.0, -r2, 1.0]];
        raw[i][j] / 2.0
    });
    MtcData::with_dimensions("ising", BuiltinKind::Ising, ring, s, vec![1.0, r2, 1.0])
        .expect("ising data")
}

/// The pointed category on `Z/n`, labels `0..n`.
///
/// The quadratic form is `q(j) = exp(πi j²/n)` for even `n` and
/// `q(j) = exp(2πi ((n+1)/2) j²/n)` for odd `n`. Both give the bicharacter
/// `b(a, b) = exp(2πi ab/n)` and `S_a^b = exp(-2πi ab/n)/√n`.
pub fn pointed_z(n: usize) -> Result<MtcData> {
    if !(2..=MAX_POINTED_ORDER).contains(&n) {
        return Err(Error::Unsupported(format!(
            "pointed_z needs 2 <= n <= {MAX_POINTED_ORDER}, got {n}"
        )));
    }
    let ring = FusionRing::from_fn(
        (0..n).map(|j| j.to_string()).collect(),
        (0..n).map(|a| (n - a) % n).collect(),
        |a, b, c| ((a + b) % n == c) as u32,
    )?;
    let norm = 1.0 / (n as f64).sqrt();
    let s = Array2::from_shape_fn((n, n), |(a, b)| {
        let phase = -2.0 * PI * ((a * b) % n) as f64 / n as f64;
        Complex64::from_polar(norm, phase)
    });
    MtcData::with_dimensions(format!("pointed_z:{n}"), BuiltinKind::Pointed(n), ring, s, vec![1.0; n])
}

/// `Z/n` quadratic form `q(j)` used by [`pointed_z`].
pub fn pointed_quadratic_form(n: usize, j: usize) -> Complex64 {
    let j2 = (j * j) as f64;
    let n_f = n as f64;
    if n.is_multiple_of(2) {
        Complex64::from_polar(1.0, PI * j2 / n_f)
    } else {
        Complex64::from_polar(1.0, 2.0 * PI * n.div_ceil(2) as f64 * j2 / n_f)
    }
}

/// The semion category, `pointed_z(2)` with labels `1, s`.
pub fn semion() -> MtcData {
    let base = pointed_z(2).expect("z2");
    let ring = FusionRing::new(
        names(&["1", "s"]),
        base.ring().raw_multiplicities().to_vec(),
        base.ring().dual_map().to_vec(),
    )
    .expect("semion ring");
    MtcData::with_dimensions("semion", BuiltinKind::Pointed(2), ring, base.s().clone(), vec![1.0, 1.0])
        .expect("semion data")
}

/// `[n]` at `q = exp(πi/(k+2))`.
pub fn quantum_integer(n: i64, k: usize) -> f64 {
    let h = (k + 2) as f64;
    (n as f64 * PI / h).sin() / (PI / h).sin()
}

/// `SU(2)_k`, labels `0..=k` are twice the spin.
pub fn su2_level(k: usize) -> Result<MtcData> {
    if !(1..=MAX_SU2_LEVEL).contains(&k) {
        return Err(Error::Unsupported(format!(
            "su2_level needs 1 <= k <= {MAX_SU2_LEVEL}, got {k}"
        )));
    }
    let r = k + 1;
    let ring = FusionRing::from_fn(
        (0..r).map(|a| a.to_string()).collect(),
        (0..r).collect(),
        |a, b, c| su2_admissible(a, b, c, k) as u32,
    )?;
    let h = (k + 2) as f64;
    let norm = (2.0 / h).sqrt();
    let s = real_matrix(r, |a, b| norm * (PI * ((a + 1) * (b + 1)) as f64 / h).sin());
    let d = (0..r).map(|a| quantum_integer(a as i64 + 1, k)).collect();
    MtcData::with_dimensions(format!("su2:{k}"), BuiltinKind::Su2(k), ring, s, d)
}

/// Parity, triangle and level conditions for `c ∈ a⊗b`.
pub fn su2_admissible(a: usize, b: usize, c: usize, k: usize) -> bool {
    (a + b + c).is_multiple_of(2) && a.abs_diff(b) <= c && c <= a + b && a + b + c <= 2 * k
}

/// Resolves a built-in by name: `fibonacci`, `ising`, `semion`,
/// `pointed_z:N` (alias `z:N`) and `su2:K` (alias `su2_level:K`).
pub fn builtin(name: &str) -> Result<MtcData> {
    let lower = name.trim().to_ascii_lowercase();
    let (head, arg) = match lower.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (lower.as_str(), None),
    };
    let param = |a: Option<&str>| -> Result<usize> {
        let a = a.ok_or_else(|| Error::Unsupported(format!("{name}: missing parameter")))?;
        a.parse()
            .map_err(|_| Error::Unsupported(format!("{name}: bad parameter {a:?}")))
    };
    match (head, arg) {
        ("fibonacci" | "fib", None) => Ok(fibonacci()),
        ("ising", None) => Ok(ising()),
        ("semion", None) => Ok(semion()),
        ("pointed_z" | "z", a) => pointed_z(param(a)?),
        ("su2" | "su2_level", a) => su2_level(param(a)?),
        _ => Err(Error::Unsupported(format!("unknown built-in category {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::verify_modular_data;

    #[test]
    fn fibonacci_constants() {
        let m = fibonacci();
        assert_eq!(m.rank(), 2);
        assert!((m.dim(1) - 1.618_033_988_7).abs() < 1e-10);
        assert!((m.mu() - 3.618_033_988_7).abs() < 1e-10);
        assert!((m.delta() - 1.902_113_032_6).abs() < 1e-10);
    }

    #[test]
    fn ising_constants() {
        let m = ising();
        assert_eq!(m.rank(), 3);
        assert!((m.delta() - 2.0).abs() < 1e-15);
        assert!((m.dim(1) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn su2_level_one_is_hadamard() {
        let m = su2_level(1).unwrap();
        assert_eq!(m.rank(), 2);
        let h = 1.0 / 2f64.sqrt();
        for (x, y, want) in [(0, 0, h), (0, 1, h), (1, 0, h), (1, 1, -h)] {
            assert!((m.s_entry(x, y).re - want).abs() < 1e-15);
        }
    }

    #[test]
    fn every_builtin_verifies() {
        let mut cats = vec![fibonacci(), ising(), semion()];
        cats.extend((2..=8).map(|n| pointed_z(n).unwrap()));
        cats.extend((1..=MAX_SU2_LEVEL).map(|k| su2_level(k).unwrap()));
        for m in cats {
            let rep = verify_modular_data(&m, 1e-9).unwrap();
            assert!(rep.passed(), "{}: {:?}", m.name(), rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn closed_form_dims_match_perron_frobenius() {
        for m in [fibonacci(), ising(), su2_level(5).unwrap()] {
            let pf = m.ring().perron_frobenius_dimensions();
            for (a, b) in pf.iter().zip(m.dims()) {
                assert!((a - b).abs() < 1e-9, "{}", m.name());
            }
        }
    }

    #[test]
    fn quadratic_form_gives_the_bicharacter() {
        for n in 2..=7 {
            for a in 0..n {
                for b in 0..n {
                    let bi = pointed_quadratic_form(n, (a + b) % n)
                        / (pointed_quadratic_form(n, a) * pointed_quadratic_form(n, b));
                    let want = Complex64::from_polar(1.0, 2.0 * PI * (a * b) as f64 / n as f64);
                    assert!((bi - want).norm() < 1e-12, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(pointed_z(1).is_err());
        assert!(su2_level(0).is_err());
        assert!(su2_level(17).is_err());
        assert!(builtin("su2:x").is_err());
        assert!(builtin("nope").is_err());
        assert_eq!(builtin("z:3").unwrap().rank(), 3);
        assert_eq!(builtin("SU2_LEVEL:4").unwrap().rank(), 5);
    }
}
