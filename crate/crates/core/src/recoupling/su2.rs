//! `SU(2)_k` recoupling from q-deformed 6j symbols.
//!
//! Labels are doubled spins `0..=k` and `[n] = sin(nπ/(k+2)) / sin(π/(k+2))`.
//! The F-moves use the unitary Racah form
//!
//! ```text
//! F^{j1 j2 j3}_j[j12][j23] = (−1)^{j1+j2+j3+j} √([2j12+1][2j23+1]) {j1 j2 j12; j3 j j23}
//! ```
//!
//! and the Kauffman–Lins theta and tetrahedron evaluations are provided as an
//! independent route to the same gauge-invariant `|Z|²`.

use num_complex::Complex64;

use super::{tree_admissible, RecouplingData};
use crate::error::Result;
use crate::mtc::{quantum_integer, su2_admissible, MtcData};

/// Cached q-factorials `[0]!, [1]!, …` at level `k`.
#[derive(Debug, Clone)]
pub struct QFactorials {
    k: usize,
    table: Vec<f64>,
}

impl QFactorials {
    pub fn new(k: usize) -> Self {
        // Arguments never exceed k + 1 on admissible labels; keep headroom for the oracle sums.
        let len = 3 * k + 4;
        let mut table = Vec::with_capacity(len);
        table.push(1.0);
        for n in 1..len {
            let prev = table[n - 1];
            table.push(prev * quantum_integer(n as i64, k));
        }
        Self { k, table }
    }

    pub fn level(&self) -> usize {
        self.k
    }

    /// `[n]!`, panics for negative `n`.
    #[inline]
    pub fn fact(&self, n: i64) -> f64 {
        assert!(n >= 0, "negative q-factorial argument {n}");
        self.table[n as usize]
    }

    #[inline]
    pub fn int(&self, n: i64) -> f64 {
        quantum_integer(n, self.k)
    }
}

fn delta(q: &QFactorials, a: i64, b: i64, c: i64) -> f64 {
    // Doubled labels: spins are a/2, so the triangle arguments are halves of sums.
    let x = (a + b - c) / 2;
    let y = (a - b + c) / 2;
    let z = (-a + b + c) / 2;
    let w = (a + b + c) / 2 + 1;
    (q.fact(x) * q.fact(y) * q.fact(z) / q.fact(w)).sqrt()
}

/// The q-Racah 6j symbol `{a b e; c d f}` in doubled labels.
pub fn racah_6j(q: &QFactorials, a: usize, b: usize, e: usize, c: usize, d: usize, f: usize) -> f64 {
    let [a, b, e, c, d, f] = [a, b, e, c, d, f].map(|x| x as i64);
    let alphas = [
        (a + b + e) / 2,
        (a + d + f) / 2,
        (c + b + f) / 2,
        (c + d + e) / 2,
    ];
    let betas = [(a + b + c + d) / 2, (b + e + d + f) / 2, (e + a + f + c) / 2];
    let lo = *alphas.iter().max().unwrap();
    let hi = *betas.iter().min().unwrap();
    let mut sum = 0.0;
    for z in lo..=hi {
        let mut den = 1.0;
        for al in alphas {
            den *= q.fact(z - al);
        }
        for be in betas {
            den *= q.fact(be - z);
        }
        let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * q.fact(z + 1) / den;
    }
    delta(q, a, b, e) * delta(q, a, d, f) * delta(q, c, b, f) * delta(q, c, d, e) * sum
}

/// `F^{abc}_d[e][f]` for `SU(2)_k`.
pub fn su2_f_entry(q: &QFactorials, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> f64 {
    let k = q.level();
    if !(su2_admissible(a, b, e, k)
        && su2_admissible(e, c, d, k)
        && su2_admissible(b, c, f, k)
        && su2_admissible(a, f, d, k))
    {
        return 0.0;
    }
    let phase = (a + b + c + d) / 2;
    let sign = if phase.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * (q.int(e as i64 + 1) * q.int(f as i64 + 1)).sqrt() * racah_6j(q, a, b, e, c, d, f)
}

pub(super) fn su2_f(m: &MtcData, k: usize) -> Result<RecouplingData> {
    let q = QFactorials::new(k);
    let r = m.rank();
    let mut entries = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    for e in 0..r {
                        for f in 0..r {
                            if tree_admissible(m, a, b, c, d, e, f) {
                                let v = su2_f_entry(&q, a, b, c, d, e, f);
                                entries.push(([a, b, c, d, e, f], Complex64::new(v, 0.0)));
                            }
                        }
                    }
                }
            }
        }
    }
    RecouplingData::from_table(m, entries, false)
}

/// Kauffman–Lins theta net `θ(a, b, c)`, up to sign.
pub fn kl_theta(q: &QFactorials, a: usize, b: usize, c: usize) -> f64 {
    let [a, b, c] = [a, b, c].map(|x| x as i64);
    let m = (a + b - c) / 2;
    let n = (b + c - a) / 2;
    let p = (a + c - b) / 2;
    q.fact(m + n + p + 1) * q.fact(m) * q.fact(n) * q.fact(p)
        / (q.fact(m + n) * q.fact(n + p) * q.fact(m + p))
}

/// Kauffman–Lins tetrahedral net `Tet[A B E; C D F]`, up to sign.
///
/// Faces are `(A, D, E)`, `(B, C, E)`, `(A, B, F)` and `(C, D, F)`.
pub fn kl_tet(q: &QFactorials, a: usize, b: usize, e: usize, c: usize, d: usize, f: usize) -> f64 {
    let [a, b, e, c, d, f] = [a, b, e, c, d, f].map(|x| x as i64);
    let faces = [(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2];
    let opp = [(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2];
    let lo = *faces.iter().max().unwrap();
    let hi = *opp.iter().min().unwrap();
    let mut num_outer = 1.0;
    for bj in opp {
        for ai in faces {
            num_outer *= q.fact(bj - ai);
        }
    }
    let mut den_outer = 1.0;
    for x in [a, b, c, d, e, f] {
        den_outer *= q.fact(x);
    }
    let mut sum = 0.0;
    for s in lo..=hi {
        let mut den = 1.0;
        for ai in faces {
            den *= q.fact(s - ai);
        }
        for bj in opp {
            den *= q.fact(bj - s);
        }
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * q.fact(s + 1) / den;
    }
    num_outer / den_outer * sum
}

/// `|Z|²` of the F-labelled tetrahedron through Kauffman–Lins nets:
/// `Tet² / (θ(a,b,e) θ(e,c,d) θ(b,c,f) θ(a,f,d))`.
pub fn kl_normalized_tet_squared(q: &QFactorials, labels: [usize; 6]) -> f64 {
    let [a, b, c, d, e, f] = labels;
    let k = q.level();
    let triples = [(a, b, e), (e, c, d), (b, c, f), (a, f, d)];
    if !triples.iter().all(|&(x, y, z)| su2_admissible(x, y, z, k)) {
        return 0.0;
    }
    let tet = kl_tet(q, a, d, e, c, b, f);
    let thetas: f64 = triples
        .iter()
        .map(|&(x, y, z)| kl_theta(q, x, y, z).abs())
        .product();
    tet * tet / thetas
}
