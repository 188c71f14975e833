//! Modular data: fusion rings, quantum dimensions and the S matrix.
//!
//! An [`MtcData`] bundles the fusion tensor `N[x][y][z] = dim hom(z, x⊗y)`,
//! the dual map, the quantum dimensions `d`, the global dimension `μ = Σ d²`,
//! the circle value `δ = √μ` and the modular `S` matrix, stored with the
//! row/column convention `s[[x, y]] = S_x^y`. The unit object is always
//! label 0.

mod builtin;

pub use builtin::{
    builtin, fibonacci, ising, pointed_quadratic_form, pointed_z, quantum_integer, semion,
    su2_admissible, su2_level, BuiltinKind, MAX_POINTED_ORDER, MAX_SU2_LEVEL,
};

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::report::{CheckResult, VerificationReport};

/// A simple object, identified by its dense index. Index 0 is the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub usize);

impl Label {
    pub const UNIT: Label = Label(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for Label {
    fn from(i: usize) -> Self {
        Label(i)
    }
}

/// Integer fusion data over `rank` simple objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    names: Vec<String>,
    mult: Vec<u32>,
    dual: Vec<usize>,
}

impl FusionRing {
    /// `mult` is the flattened tensor with `mult[(x * r + y) * r + z] = N_{x,y}^z`.
    pub fn new(names: Vec<String>, mult: Vec<u32>, dual: Vec<usize>) -> Result<Self> {
        let r = names.len();
        if r == 0 {
            return Err(Error::Unsupported("a fusion ring needs at least one label".into()));
        }
        if mult.len() != r * r * r {
            return Err(Error::ShapeMismatch {
                what: "fusion tensor",
                expected: r * r * r,
                found: mult.len(),
            });
        }
        if dual.len() != r {
            return Err(Error::ShapeMismatch {
                what: "dual map",
                expected: r,
                found: dual.len(),
            });
        }
        if let Some(&bad) = dual.iter().find(|&&x| x >= r) {
            return Err(Error::InvalidLabel { index: bad, rank: r });
        }
        Ok(Self { names, mult, dual })
    }

    /// Builds a ring from a rule `(x, y, z) -> N_{x,y}^z`.
    pub fn from_fn(
        names: Vec<String>,
        dual: Vec<usize>,
        rule: impl Fn(usize, usize, usize) -> u32,
    ) -> Result<Self> {
        let r = names.len();
        let mut mult = vec![0; r * r * r];
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    mult[(x * r + y) * r + z] = rule(x, y, z);
                }
            }
        }
        Self::new(names, mult, dual)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        (0..self.rank()).map(Label)
    }

    pub fn name(&self, x: Label) -> &str {
        &self.names[x.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, name: &str) -> Option<Label> {
        self.names.iter().position(|n| n == name).map(Label)
    }

    pub fn check_label(&self, x: Label) -> Result<Label> {
        if x.0 < self.rank() {
            Ok(x)
        } else {
            Err(Error::InvalidLabel {
                index: x.0,
                rank: self.rank(),
            })
        }
    }

    /// `N_{x,y}^z`.
    #[inline]
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        let r = self.rank();
        self.mult[(x * r + y) * r + z]
    }

    #[inline]
    pub fn dual(&self, x: usize) -> usize {
        self.dual[x]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn raw_multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// Channels `z` with `N_{x,y}^z > 0`, in index order.
    pub fn fuse(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&z| self.n(x, y, z) > 0)
    }

    /// `true` when `hom(1, x⊗y⊗z)` is nonzero.
    pub fn admissible(&self, x: usize, y: usize, z: usize) -> bool {
        self.n(x, y, self.dual(z)) > 0
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    /// The fusion matrix of `x` acting on the basis: `(N_x)[z][w] = N_{x,w}^z`.
    pub fn fusion_matrix(&self, x: usize) -> Array2<f64> {
        let r = self.rank();
        Array2::from_shape_fn((r, r), |(z, w)| self.n(x, w, z) as f64)
    }

    /// `dim hom(1, x₁⊗…⊗x_k)` by iterated integer fusion.
    pub fn dim_hom_unit(&self, word: &[Label]) -> Result<u64> {
        let r = self.rank();
        for &x in word {
            self.check_label(x)?;
        }
        let mut v = vec![0u64; r];
        v[0] = 1;
        let mut next = vec![0u64; r];
        for &x in word {
            next.iter_mut().for_each(|e| *e = 0);
            for (w, &vw) in v.iter().enumerate() {
                if vw == 0 {
                    continue;
                }
                for (z, slot) in next.iter_mut().enumerate() {
                    let m = self.n(w, x.0, z) as u64;
                    if m != 0 {
                        *slot += vw * m;
                    }
                }
            }
            std::mem::swap(&mut v, &mut next);
        }
        Ok(v[0])
    }

    /// Largest violation of the unit axiom `N_{1,x}^z = N_{x,1}^z = δ_{x,z}`.
    pub fn unit_violation(&self) -> u32 {
        let r = self.rank();
        let mut worst = 0;
        for x in 0..r {
            for z in 0..r {
                let want = (x == z) as u32;
                worst = worst
                    .max(self.n(0, x, z).abs_diff(want))
                    .max(self.n(x, 0, z).abs_diff(want));
            }
        }
        worst
    }

    /// Largest violation of `N_{x,y}^1 = δ_{y, x̄}` and of `x̄̄ = x`.
    pub fn dual_violation(&self) -> u32 {
        let r = self.rank();
        let mut worst = 0;
        for x in 0..r {
            if self.dual(self.dual(x)) != x {
                worst = worst.max(1);
            }
            for y in 0..r {
                let want = (y == self.dual(x)) as u32;
                worst = worst.max(self.n(x, y, 0).abs_diff(want));
            }
        }
        worst
    }

    /// Largest violation of associativity `Σ_w N_{x,y}^w N_{w,z}^v = Σ_w N_{y,z}^w N_{x,w}^v`.
    pub fn associativity_violation(&self) -> u64 {
        let r = self.rank();
        let mut worst = 0;
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    for v in 0..r {
                        let left: u64 = (0..r)
                            .map(|w| self.n(x, y, w) as u64 * self.n(w, z, v) as u64)
                            .sum();
                        let right: u64 = (0..r)
                            .map(|w| self.n(y, z, w) as u64 * self.n(x, w, v) as u64)
                            .sum();
                        worst = worst.max(left.abs_diff(right));
                    }
                }
            }
        }
        worst
    }

    /// Perron–Frobenius dimensions: the positive eigenvector of `Σ_x N_x`, scaled so `d(1) = 1`.
    pub fn perron_frobenius_dimensions(&self) -> Vec<f64> {
        let r = self.rank();
        // (A v)[z] = Σ_x Σ_w N_{x,w}^z v[w]; adding v keeps the iteration aperiodic.
        let mut a = vec![0.0; r * r];
        for x in 0..r {
            for w in 0..r {
                for z in 0..r {
                    a[z * r + w] += self.n(x, w, z) as f64;
                }
            }
        }
        let mut v = vec![1.0; r];
        for _ in 0..10_000 {
            let mut next: Vec<f64> = (0..r)
                .map(|z| v[z] + (0..r).map(|w| a[z * r + w] * v[w]).sum::<f64>())
                .collect();
            let norm = next.iter().cloned().fold(0.0, f64::max);
            next.iter_mut().for_each(|e| *e /= norm);
            let diff = next
                .iter()
                .zip(&v)
                .map(|(p, q)| (p - q).abs())
                .fold(0.0, f64::max);
            v = next;
            if diff < 1e-16 {
                break;
            }
        }
        let unit = v[0];
        v.iter().map(|e| e / unit).collect()
    }
}

/// Modular data of a unitary modular tensor category.
#[derive(Debug, Clone)]
pub struct MtcData {
    name: String,
    kind: BuiltinKind,
    ring: FusionRing,
    s: Array2<Complex64>,
    d: Vec<f64>,
    mu: f64,
    delta: f64,
}

impl MtcData {
    /// Dimensions are taken from the Perron–Frobenius vector of the fusion ring.
    pub fn new(name: impl Into<String>, ring: FusionRing, s: Array2<Complex64>) -> Result<Self> {
        let d = ring.perron_frobenius_dimensions();
        Self::with_dimensions(name, BuiltinKind::Custom, ring, s, d)
    }

    pub fn with_dimensions(
        name: impl Into<String>,
        kind: BuiltinKind,
        ring: FusionRing,
        s: Array2<Complex64>,
        d: Vec<f64>,
    ) -> Result<Self> {
        let r = ring.rank();
        if s.nrows() != r || s.ncols() != r {
            return Err(Error::ShapeMismatch {
                what: "S matrix",
                expected: r,
                found: if s.nrows() != r { s.nrows() } else { s.ncols() },
            });
        }
        if d.len() != r {
            return Err(Error::ShapeMismatch {
                what: "dimension vector",
                expected: r,
                found: d.len(),
            });
        }
        let mu: f64 = d.iter().map(|x| x * x).sum();
        Ok(Self {
            name: name.into(),
            kind,
            ring,
            s,
            d,
            mu,
            delta: mu.sqrt(),
        })
    }

    /// Same category with a replaced S matrix (used to build deliberately corrupted data).
    pub fn with_s_matrix(&self, s: Array2<Complex64>) -> Result<Self> {
        let mut out = Self::with_dimensions(
            self.name.clone(),
            self.kind,
            self.ring.clone(),
            s,
            self.d.clone(),
        )?;
        out.kind = BuiltinKind::Custom;
        Ok(out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> BuiltinKind {
        self.kind
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        self.ring.labels()
    }

    pub fn label(&self, name: &str) -> Result<Label> {
        self.ring
            .label(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn label_name(&self, x: Label) -> &str {
        self.ring.name(x)
    }

    pub fn s(&self) -> &Array2<Complex64> {
        &self.s
    }

    /// `S_x^y`.
    #[inline]
    pub fn s_entry(&self, x: usize, y: usize) -> Complex64 {
        self.s[[x, y]]
    }

    #[inline]
    pub fn dim(&self, x: usize) -> f64 {
        self.d[x]
    }

    pub fn dims(&self) -> &[f64] {
        &self.d
    }

    /// Global dimension `μ = Σ d(x)²`.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Circle value `δ = √μ`.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    #[inline]
    pub fn dual(&self, x: usize) -> usize {
        self.ring.dual(x)
    }

    #[inline]
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        self.ring.n(x, y, z)
    }

    /// `Σ_w S_x^w S_y^w conj(S_z^w) / S_1^w`.
    pub fn verlinde_value(&self, x: usize, y: usize, z: usize) -> Complex64 {
        (0..self.rank())
            .map(|w| {
                self.s[[x, w]] * self.s[[y, w]] * self.s[[z, w]].conj() / self.s[[0, w]]
            })
            .sum()
    }

    /// All flat indices of `Irr^n` in lexicographic order, decoded.
    pub fn tuples(&self, n: usize) -> TupleIter {
        TupleIter::new(self.rank(), n)
    }
}

/// `dim hom(1, x₁⊗…⊗x_k)` computed by iterated integer fusion.
pub fn fusion_dim_hom_unit(m: &MtcData, word: &[Label]) -> Result<u64> {
    m.ring().dim_hom_unit(word)
}

/// Odometer over `{0..rank}^order` in lexicographic (row-major) order.
#[derive(Debug, Clone)]
pub struct TupleIter {
    rank: usize,
    current: Vec<usize>,
    done: bool,
}

impl TupleIter {
    pub fn new(rank: usize, order: usize) -> Self {
        Self {
            rank,
            current: vec![0; order],
            done: rank == 0 && order > 0,
        }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.rank {
                break;
            }
            self.current[i] = 0;
        }
        Some(out)
    }
}

/// Decodes a row-major flat index into a tuple.
pub fn unflatten(mut flat: usize, rank: usize, order: usize) -> Vec<usize> {
    let mut out = vec![0; order];
    for slot in out.iter_mut().rev() {
        *slot = flat % rank;
        flat /= rank;
    }
    out
}

pub fn flatten(tuple: &[usize], rank: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * rank + x)
}

fn max_abs(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, |acc, e| if e.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(e) })
}

/// Checks every axiom of the fusion ring and the modular data.
///
/// Integer axioms are exact; `max_error` records the largest integer violation.
/// The floating checks cover S unitarity and symmetry, `S² = C`, `S⁴ = 1`,
/// Verlinde recovery of `N`, `d(x) = δ S_x^1`, positivity of dimensions and the
/// eigenvector property `N_x d = d(x) d`.
pub fn verify_modular_data(m: &MtcData, tol: f64) -> Result<VerificationReport> {
    let r = m.rank();
    let ring = m.ring();
    if m.s.dim() != (r, r) {
        return Err(Error::ShapeMismatch {
            what: "S matrix",
            expected: r,
            found: m.s.nrows(),
        });
    }
    if ring.raw_multiplicities().len() != r * r * r {
        return Err(Error::ShapeMismatch {
            what: "fusion tensor",
            expected: r * r * r,
            found: ring.raw_multiplicities().len(),
        });
    }
    let mut report = VerificationReport::new("modular data", m.name(), tol);
    let params = format!("rank={r}");

    report.push(CheckResult::from_error(
        "fusion.unit",
        &params,
        ring.unit_violation() as f64,
        0.0,
    ));
    report.push(CheckResult::from_error(
        "fusion.dual",
        &params,
        ring.dual_violation() as f64,
        0.0,
    ));
    report.push(CheckResult::from_error(
        "fusion.associativity",
        &params,
        ring.associativity_violation() as f64,
        0.0,
    ));

    let s = &m.s;
    let sh = s.t().mapv(|c| c.conj());
    let ssh = s.dot(&sh);
    let unitary = max_abs(
        ssh.indexed_iter()
            .map(|((i, j), c)| (c - Complex64::new((i == j) as u8 as f64, 0.0)).norm()),
    );
    report.push(CheckResult::from_error("s.unitary", &params, unitary, tol));

    let symmetric = max_abs(
        s.indexed_iter()
            .map(|((i, j), c)| (c - s[[j, i]]).norm()),
    );
    report.push(CheckResult::from_error("s.symmetric", &params, symmetric, tol));

    let s2 = s.dot(s);
    let conj_err = max_abs(s2.indexed_iter().map(|((i, j), c)| {
        let want = if j == m.dual(i) { 1.0 } else { 0.0 };
        (c - Complex64::new(want, 0.0)).norm()
    }));
    report.push(CheckResult::from_error(
        "s.square_is_charge_conjugation",
        &params,
        conj_err,
        tol,
    ));

    let s4 = s2.dot(&s2);
    let s4_err = max_abs(
        s4.indexed_iter()
            .map(|((i, j), c)| (c - Complex64::new((i == j) as u8 as f64, 0.0)).norm()),
    );
    report.push(CheckResult::from_error("s.fourth_power_identity", &params, s4_err, tol));

    let mut recovery = 0.0_f64;
    let mut integrality = 0.0_f64;
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                let v = m.verlinde_value(x, y, z);
                let dist_to_stored = (v - Complex64::new(m.n(x, y, z) as f64, 0.0)).norm();
                let nearest = v.re.round().max(0.0);
                let dist_to_int = (v - Complex64::new(nearest, 0.0)).norm();
                recovery = if dist_to_stored.is_nan() { f64::NAN } else { recovery.max(dist_to_stored) };
                integrality = if dist_to_int.is_nan() { f64::NAN } else { integrality.max(dist_to_int) };
            }
        }
    }
    report.push(CheckResult::from_error("verlinde.recovery", &params, recovery, tol));
    report.push(CheckResult::from_error("verlinde.integrality", &params, integrality, tol));

    let global = (m.mu - m.d.iter().map(|x| x * x).sum::<f64>())
        .abs()
        .max((m.delta * m.delta - m.mu).abs());
    report.push(CheckResult::from_error("dims.global_dimension", &params, global, tol));

    let d_from_s = max_abs((0..r).map(|x| (Complex64::new(m.d[x], 0.0) - s[[x, 0]] * m.delta).norm()));
    report.push(CheckResult::from_error("dims.delta_times_s", &params, d_from_s, tol));

    let positivity = max_abs(
        (0..r)
            .map(|x| (1.0 - m.d[x]).max(0.0))
            .chain(std::iter::once((m.d[0] - 1.0).abs())),
    );
    report.push(CheckResult::from_error("dims.unitary_bounds", &params, positivity, tol));

    let mut pf = 0.0_f64;
    for x in 0..r {
        let nx = ring.fusion_matrix(x);
        for z in 0..r {
            let lhs: f64 = (0..r).map(|w| nx[[z, w]] * m.d[w]).sum();
            pf = pf.max((lhs - m.d[x] * m.d[z]).abs());
        }
    }
    report.push(CheckResult::from_error("dims.perron_frobenius", &params, pf, tol));

    Ok(report)
}
