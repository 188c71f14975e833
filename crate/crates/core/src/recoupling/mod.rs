//! Multiplicity-free recoupling data: F-moves, theta values and normalized
//! tetrahedra.
//!
//! F convention: `((a b)_e c)_d = Σ_f F^{abc}_d[e][f] (a (b c)_f)_d`.
//! With this convention the pentagon reads
//!
//! ```text
//! F^{fcd}_e[g][l] F^{abl}_e[f][k] = Σ_h F^{abc}_g[f][h] F^{ahd}_e[g][k] F^{bcd}_k[h][l]
//! ```
//!
//! Vertices are unit-normalized, so the theta network of an admissible
//! triple evaluates to `√(d_a d_b d_c)` and the modulus-square of a
//! tetrahedron is `|F^{abc}_d[e][f]|² / (d_e d_f)`.

pub mod su2;

use std::collections::HashMap;

use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mtc::{BuiltinKind, Label, MtcData};
use crate::report::{CheckResult, VerificationReport};

/// Categories up to this rank get an exhaustive pentagon sweep.
pub const EXHAUSTIVE_PENTAGON_RANK: usize = 6;
/// Number of seeded `(a, b, c, d)` roots checked above that rank.
pub const SAMPLED_PENTAGON_ROOTS: usize = 4000;
pub const DEFAULT_RECOUPLING_TOL: f64 = 1e-9;

type Key = [u8; 6];

#[derive(Debug, Clone)]
pub struct RecouplingData {
    category: MtcData,
    f: HashMap<Key, Complex64>,
}

fn key(a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Key {
    [a as u8, b as u8, c as u8, d as u8, e as u8, f as u8]
}

impl RecouplingData {
    /// Builds from an explicit table. Missing admissible entries default to 1
    /// only when `fill_ones` is set; otherwise they are an error.
    pub fn from_table(
        m: &MtcData,
        entries: impl IntoIterator<Item = ([usize; 6], Complex64)>,
        fill_ones: bool,
    ) -> Result<Self> {
        require_multiplicity_free(m)?;
        let r = m.rank();
        if r > u8::MAX as usize {
            return Err(Error::Unsupported(format!("rank {r} is too large for recoupling")));
        }
        let mut f = HashMap::new();
        for ([a, b, c, d, e, g], v) in entries {
            for x in [a, b, c, d, e, g] {
                m.ring().check_label(Label(x))?;
            }
            if !tree_admissible(m, a, b, c, d, e, g) {
                return Err(Error::InvalidRecoupling(format!(
                    "F entry ({a},{b},{c},{d},{e},{g}) is not admissible"
                )));
            }
            if f.insert(key(a, b, c, d, e, g), v).is_some() {
                return Err(Error::InvalidRecoupling(format!(
                    "duplicate F entry ({a},{b},{c},{d},{e},{g})"
                )));
            }
        }
        for_each_admissible(m, |a, b, c, d, e, g| {
            let k = key(a, b, c, d, e, g);
            if let std::collections::hash_map::Entry::Vacant(slot) = f.entry(k) {
                if !fill_ones {
                    return Err(Error::InvalidRecoupling(format!(
                        "missing F entry ({a},{b},{c},{d},{e},{g})"
                    )));
                }
                slot.insert(Complex64::new(1.0, 0.0));
            }
            Ok(())
        })?;
        Ok(Self {
            category: m.clone(),
            f,
        })
    }

    pub fn category(&self) -> &MtcData {
        &self.category
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    /// `F^{abc}_d[e][f]`, zero when the trees are not admissible.
    #[inline]
    pub fn f(&self, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Complex64 {
        self.f
            .get(&key(a, b, c, d, e, f))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// All stored entries in a deterministic order.
    pub fn entries(&self) -> Vec<([usize; 6], Complex64)> {
        let mut out: Vec<_> = self
            .f
            .iter()
            .map(|(k, v)| (k.map(|x| x as usize), *v))
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }

    /// The block `F^{abc}_d` with its row (`e`) and column (`f`) labels.
    pub fn block(&self, a: usize, b: usize, c: usize, d: usize) -> (Vec<usize>, Vec<usize>, Array2<Complex64>) {
        let m = &self.category;
        let es: Vec<usize> = m
            .ring()
            .fuse(a, b)
            .filter(|&e| m.n(e, c, d) > 0)
            .collect();
        let fs: Vec<usize> = m
            .ring()
            .fuse(b, c)
            .filter(|&f| m.n(a, f, d) > 0)
            .collect();
        let mat = Array2::from_shape_fn((es.len(), fs.len()), |(i, j)| self.f(a, b, c, d, es[i], fs[j]));
        (es, fs, mat)
    }

    /// Theta value of an admissible triple with unit-normalized vertices.
    pub fn theta(&self, a: usize, b: usize, c: usize) -> f64 {
        let m = &self.category;
        if m.ring().admissible(a, b, c) {
            (m.dim(a) * m.dim(b) * m.dim(c)).sqrt()
        } else {
            0.0
        }
    }

    /// Checks multiplicity-freeness, block unitarity, unit normalization and the pentagon.
    pub fn validate(&self, tol: f64, seed: u64) -> VerificationReport {
        let m = &self.category;
        let r = m.rank();
        let mut report = VerificationReport::new("recoupling", m.name(), tol);
        let params = format!("rank={r}");
        report.push(CheckResult::from_bool(
            "recoupling.multiplicity_free",
            &params,
            m.ring().is_multiplicity_free(),
        ));

        let mut unitarity = 0.0_f64;
        let mut square = true;
        let mut unit_blocks = 0.0_f64;
        let mut unit_root_modulus = 0.0_f64;
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let (es, fs, mat) = self.block(a, b, c, d);
                        if es.is_empty() && fs.is_empty() {
                            continue;
                        }
                        if es.len() != fs.len() {
                            square = false;
                            continue;
                        }
                        let prod = mat.dot(&mat.t().mapv(|z| z.conj()));
                        for ((i, j), z) in prod.indexed_iter() {
                            let want = if i == j { 1.0 } else { 0.0 };
                            unitarity = unitarity.max((z - Complex64::new(want, 0.0)).norm());
                        }
                        if a == 0 || b == 0 || c == 0 {
                            // Rows and columns are both indexed by the surviving label.
                            for (i, &e) in es.iter().enumerate() {
                                for (j, &f) in fs.iter().enumerate() {
                                    let same = (a == 0 && e == b && f == d)
                                        || (b == 0 && e == a && f == c)
                                        || (c == 0 && e == d && f == b);
                                    let want = if same { 1.0 } else { 0.0 };
                                    unit_blocks =
                                        unit_blocks.max((mat[[i, j]] - Complex64::new(want, 0.0)).norm());
                                }
                            }
                        } else if d == 0 {
                            unit_root_modulus =
                                unit_root_modulus.max((mat[[0, 0]].norm() - 1.0).abs());
                            if self.gauge_fixes_unit_root() {
                                unit_blocks =
                                    unit_blocks.max((mat[[0, 0]] - Complex64::new(1.0, 0.0)).norm());
                            }
                        }
                    }
                }
            }
        }
        report.push(CheckResult::from_bool("recoupling.square_blocks", &params, square));
        report.push(CheckResult::from_error("recoupling.unitary", &params, unitarity, tol));
        report.push(CheckResult::from_error("recoupling.unit_blocks", &params, unit_blocks, tol));
        report.push(CheckResult::from_error(
            "recoupling.unit_root_modulus",
            &params,
            unit_root_modulus,
            tol,
        ));

        let (pentagon, sampled) = pentagon_residual(self, seed);
        report.push(
            CheckResult::from_error("recoupling.pentagon", &params, pentagon, tol).sampled(sampled),
        );
        report
    }

    /// Pointed categories with a nontrivial cocycle keep a phase on `F^{abc}_1`.
    fn gauge_fixes_unit_root(&self) -> bool {
        !matches!(self.category.kind(), BuiltinKind::Pointed(_) | BuiltinKind::Custom)
    }
}

fn require_multiplicity_free(m: &MtcData) -> Result<()> {
    let r = m.rank();
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let mult = m.n(a, b, c);
                if mult > 1 {
                    return Err(Error::NotMultiplicityFree { a, b, c, mult });
                }
            }
        }
    }
    Ok(())
}

/// Both trees `((ab)_e c)_d` and `(a (bc)_f)_d` exist.
pub fn tree_admissible(m: &MtcData, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> bool {
    m.n(a, b, e) > 0 && m.n(e, c, d) > 0 && m.n(b, c, f) > 0 && m.n(a, f, d) > 0
}

fn for_each_admissible(
    m: &MtcData,
    mut visit: impl FnMut(usize, usize, usize, usize, usize, usize) -> Result<()>,
) -> Result<()> {
    let r = m.rank();
    let ring = m.ring();
    for a in 0..r {
        for b in 0..r {
            for e in ring.fuse(a, b) {
                for c in 0..r {
                    for d in ring.fuse(e, c) {
                        for f in ring.fuse(b, c) {
                            if ring.n(a, f, d) > 0 {
                                visit(a, b, c, d, e, f)?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Largest pentagon residual over admissible trees rooted at `(a, b, c, d)`.
fn pentagon_at(rd: &RecouplingData, a: usize, b: usize, c: usize, d: usize) -> f64 {
    let ring = rd.category.ring();
    let mut worst = 0.0_f64;
    for f in ring.fuse(a, b) {
        for g in ring.fuse(f, c) {
            for e in ring.fuse(g, d) {
                for l in ring.fuse(c, d) {
                    if ring.n(f, l, e) == 0 {
                        continue;
                    }
                    for k in ring.fuse(b, l) {
                        if ring.n(a, k, e) == 0 {
                            continue;
                        }
                        let lhs = rd.f(f, c, d, e, g, l) * rd.f(a, b, l, e, f, k);
                        let rhs: Complex64 = ring
                            .fuse(b, c)
                            .map(|h| rd.f(a, b, c, g, f, h) * rd.f(a, h, d, e, g, k) * rd.f(b, c, d, k, h, l))
                            .sum();
                        worst = worst.max((lhs - rhs).norm());
                    }
                }
            }
        }
    }
    worst
}

/// Exhaustive for small rank, seeded sample of roots otherwise. Returns `(residual, sampled)`.
pub fn pentagon_residual(rd: &RecouplingData, seed: u64) -> (f64, bool) {
    let r = rd.category.rank();
    if r <= EXHAUSTIVE_PENTAGON_RANK {
        let mut worst = 0.0_f64;
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        worst = worst.max(pentagon_at(rd, a, b, c, d));
                    }
                }
            }
        }
        (worst, false)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst = 0.0_f64;
        for _ in 0..SAMPLED_PENTAGON_ROOTS {
            let [a, b, c, d] = [0; 4].map(|_| rng.gen_range(0..r));
            worst = worst.max(pentagon_at(rd, a, b, c, d));
        }
        (worst, true)
    }
}

/// Standard unitary-gauge data for the built-ins, validated before returning.
pub fn build_recoupling(m: &MtcData) -> Result<RecouplingData> {
    let rd = match m.kind() {
        BuiltinKind::Fibonacci => fibonacci_f(m)?,
        BuiltinKind::Ising => ising_f(m)?,
        BuiltinKind::Pointed(n) => pointed_f(m, n)?,
        BuiltinKind::Su2(k) => su2::su2_f(m, k)?,
        BuiltinKind::Custom => {
            return Err(Error::Unsupported(format!(
                "category {:?} needs user-supplied F-symbols",
                m.name()
            )))
        }
    };
    checked(rd)
}

/// Validates user-supplied data at the default tolerance.
pub fn checked(rd: RecouplingData) -> Result<RecouplingData> {
    let report = rd.validate(DEFAULT_RECOUPLING_TOL, 0);
    if let Some(bad) = report.failures().next() {
        return Err(Error::InvalidRecoupling(format!(
            "{}: {} = {:.3e} exceeds {:.1e}",
            rd.category.name(),
            bad.id,
            bad.max_error,
            bad.tolerance
        )));
    }
    Ok(rd)
}

fn fibonacci_f(m: &MtcData) -> Result<RecouplingData> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let a = 1.0 / phi;
    let b = 1.0 / phi.sqrt();
    let t = 1;
    let entries = [
        ([t, t, t, t, 0, 0], a),
        ([t, t, t, t, 0, t], b),
        ([t, t, t, t, t, 0], b),
        ([t, t, t, t, t, t], -a),
    ];
    RecouplingData::from_table(m, entries.map(|(k, v)| (k, Complex64::new(v, 0.0))), true)
}

fn ising_f(m: &MtcData) -> Result<RecouplingData> {
    let h = 1.0 / 2f64.sqrt();
    let (s, p) = (1, 2);
    let entries = [
        ([s, s, s, s, 0, 0], h),
        ([s, s, s, s, 0, p], h),
        ([s, s, s, s, p, 0], h),
        ([s, s, s, s, p, p], -h),
        ([s, p, s, p, s, s], -1.0),
        ([p, s, p, s, s, s], -1.0),
    ];
    RecouplingData::from_table(m, entries.map(|(k, v)| (k, Complex64::new(v, 0.0))), true)
}

/// `ω(a,b,c) = exp(πi a (b + c − [b+c]_n)/n)` for even `n`, trivial for odd `n`.
fn pointed_f(m: &MtcData, n: usize) -> Result<RecouplingData> {
    let mut entries = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let carry = if b + c >= n { n } else { 0 };
                let phase = if n.is_multiple_of(2) {
                    std::f64::consts::PI * (a * carry) as f64 / n as f64
                } else {
                    0.0
                };
                entries.push((
                    [a, b, c, (a + b + c) % n, (a + b) % n, (b + c) % n],
                    Complex64::from_polar(1.0, phase),
                ));
            }
        }
    }
    RecouplingData::from_table(m, entries, false)
}

/// `|Z|²` of the tetrahedron with F-labels `(a, b, c, d, e, f)` and
/// unit-normalized vertices: `|F^{abc}_d[e][f]|² / (d_e d_f)`, zero if any
/// vertex is inadmissible.
pub fn normalized_tet_squared(rd: &RecouplingData, labels: [Label; 6]) -> f64 {
    let [a, b, c, d, e, f] = labels.map(Label::index);
    let m = &rd.category;
    if labels.iter().any(|x| x.0 >= m.rank()) || !tree_admissible(m, a, b, c, d, e, f) {
        return 0.0;
    }
    rd.f(a, b, c, d, e, f).norm_sqr() / (m.dim(e) * m.dim(f))
}

/// An oriented edge `tail → head` of a tetrahedron on vertices `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TetEdge {
    pub tail: usize,
    pub head: usize,
    pub label: usize,
}

/// `|Z|²` of a tetrahedral network given as six oriented, labeled edges.
///
/// An edge `u → v` labeled `x` leaves `u` as `x` and enters `v` as `x̄`.
/// The network is matched to the F-template with `a: 0→3, b: 0→2, c: 1→2,
/// d: 3→1, e: 1→0, f: 2→3`, dualizing labels of edges given the other way.
pub fn oriented_tet_squared(rd: &RecouplingData, edges: &[TetEdge; 6]) -> Result<f64> {
    let m = &rd.category;
    let template = [(0, 3), (0, 2), (1, 2), (3, 1), (1, 0), (2, 3)];
    let mut labels = [Label(0); 6];
    let mut seen = [false; 6];
    for (slot, &(u, v)) in template.iter().enumerate() {
        let mut found = None;
        for (i, edge) in edges.iter().enumerate() {
            if edge.label >= m.rank() {
                return Err(Error::InvalidLabel {
                    index: edge.label,
                    rank: m.rank(),
                });
            }
            if (edge.tail, edge.head) == (u, v) {
                found = Some((i, edge.label));
            } else if (edge.tail, edge.head) == (v, u) {
                found = Some((i, m.dual(edge.label)));
            }
        }
        let (i, x) = found.ok_or_else(|| {
            Error::InvalidMap(format!("tetrahedron has no edge between vertices {u} and {v}"))
        })?;
        if seen[i] {
            return Err(Error::InvalidMap("tetrahedron edge listed twice".into()));
        }
        seen[i] = true;
        labels[slot] = Label(x);
    }
    Ok(normalized_tet_squared(rd, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::{fibonacci, ising, pointed_z, semion, su2_level};

    #[test]
    fn builtins_validate() {
        let mut cats = vec![fibonacci(), ising(), semion()];
        cats.extend((2..=6).map(|n| pointed_z(n).unwrap()));
        cats.extend((1..=6).map(|k| su2_level(k).unwrap()));
        for m in cats {
            let rd = build_recoupling(&m).unwrap();
            let rep = rd.validate(1e-10, 0);
            assert!(rep.passed(), "{}: {:?}", m.name(), rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn fibonacci_block_moduli() {
        let m = fibonacci();
        let rd = build_recoupling(&m).unwrap();
        let (_, _, block) = rd.block(1, 1, 1, 1);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let want = [[phi.powi(-2), 1.0 / phi], [1.0 / phi, phi.powi(-2)]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((block[[i, j]].norm_sqr() - want[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn unit_strand_blocks_are_identity() {
        let m = su2_level(4).unwrap();
        let rd = build_recoupling(&m).unwrap();
        for b in 0..m.rank() {
            for c in 0..m.rank() {
                for d in 0..m.rank() {
                    let (es, fs, block) = rd.block(0, b, c, d);
                    if m.n(b, c, d) == 0 {
                        assert!(es.is_empty() || fs.is_empty());
                        continue;
                    }
                    assert_eq!((es, fs), (vec![b], vec![d]));
                    assert!((block[[0, 0]] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn corrupted_fibonacci_fails_pentagon() {
        let m = fibonacci();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let a = 1.0 / phi;
        let b = (1.0 - a * a).sqrt();
        // Unitary but with the wrong sign on the corner.
        let entries = [
            ([1, 1, 1, 1, 0, 0], a),
            ([1, 1, 1, 1, 0, 1], b),
            ([1, 1, 1, 1, 1, 0], -b),
            ([1, 1, 1, 1, 1, 1], a),
        ];
        let rd = RecouplingData::from_table(&m, entries.map(|(k, v)| (k, Complex64::new(v, 0.0))), true)
            .unwrap();
        let rep = rd.validate(1e-9, 0);
        assert!(rep.check("recoupling.unitary").unwrap().passed);
        assert!(!rep.check("recoupling.pentagon").unwrap().passed);
        assert!(checked(rd).is_err());
    }

    #[test]
    fn multiplicity_is_rejected() {
        let base = fibonacci();
        let ring = crate::mtc::FusionRing::from_fn(base.ring().names().to_vec(), vec![0, 1], |x, y, z| {
            if (x, y, z) == (1, 1, 1) { 2 } else { base.n(x, y, z) }
        })
        .unwrap();
        let m = MtcData::new("doubled", ring, base.s().clone()).unwrap();
        assert!(matches!(
            RecouplingData::from_table(&m, [], true),
            Err(Error::NotMultiplicityFree { mult: 2, .. })
        ));
    }

    #[test]
    fn tet_examples() {
        let m = fibonacci();
        let rd = build_recoupling(&m).unwrap();
        assert_eq!(normalized_tet_squared(&rd, [Label(0); 6]), 1.0);
        // (1, 1, tau) is not admissible at the first vertex.
        let bad = [0, 0, 0, 0, 1, 0].map(Label);
        assert_eq!(normalized_tet_squared(&rd, bad), 0.0);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let all_tau = normalized_tet_squared(&rd, [Label(1); 6]);
        assert!((all_tau - phi.powi(-4)).abs() < 1e-12);
    }

    #[test]
    fn theta_values() {
        let m = ising();
        let rd = build_recoupling(&m).unwrap();
        assert!((rd.theta(1, 1, 2) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(rd.theta(1, 1, 1), 0.0);
    }
}
