//! Fourier duality on 1-quons: biprojections, Müger centers, supports and
//! the Verlinde and Gannon checks.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mtc::{Label, MtcData};
use crate::quon::{convolve, multiply, sft, Quon};
use crate::report::{CheckResult, VerificationReport};

/// Coefficients below this modulus do not count towards a support.
pub const DEFAULT_SUPPORT_TOL: f64 = 1e-7;

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// Largest category for exhaustive subset enumeration.
pub const MAX_SUBSET_RANK: usize = 20;

/// A subset `K ⊆ Irr`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelSubset {
    members: BTreeSet<usize>,
}

impl LabelSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        Self {
            members: members.into_iter().collect(),
        }
    }

    pub fn all(m: &MtcData) -> Self {
        Self::new(0..m.rank())
    }

    pub fn unit() -> Self {
        Self::new([0])
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.iter().map(Label).collect()
    }

    /// `dim C_K = Σ_{x∈K} d(x)²`.
    pub fn dimension(&self, m: &MtcData) -> f64 {
        self.iter().map(|x| m.dim(x) * m.dim(x)).sum()
    }

    pub fn is_fusion_closed(&self, m: &MtcData) -> bool {
        self.iter().all(|x| {
            self.iter()
                .all(|y| m.ring().fuse(x, y).all(|z| self.contains(z)))
        })
    }

    pub fn is_dual_closed(&self, m: &MtcData) -> bool {
        self.iter().all(|x| self.contains(m.dual(x)))
    }

    pub fn display<'a>(&'a self, m: &'a MtcData) -> impl fmt::Display + 'a {
        DisplaySubset { set: self, m }
    }
}

struct DisplaySubset<'a> {
    set: &'a LabelSubset,
    m: &'a MtcData,
}

impl fmt::Display for DisplaySubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.set.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.m.label_name(Label(x)))?;
        }
        write!(f, "}}")
    }
}

/// `P_K = Σ_{x∈K} 1_{x_D} = Σ_{x∈K} d(x) |x⟩`.
pub fn projection(m: &MtcData, k: &LabelSubset) -> Quon {
    Quon::from_fn(m, 1, |ix| {
        if k.contains(ix[0]) {
            Complex64::new(m.dim(ix[0]), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `Σ d(x)²` over labels whose coefficient exceeds `tol` in modulus.
pub fn supp(m: &MtcData, x: &Quon, tol: f64) -> Result<f64> {
    x.check_category(m)?;
    if x.order() != 1 {
        return Err(Error::OrderMismatch {
            expected: 1,
            found: x.order(),
        });
    }
    Ok((0..m.rank())
        .filter(|&a| x.get(&[a]).norm() > tol)
        .map(|a| m.dim(a) * m.dim(a))
        .sum())
}

/// `‖sft(xy) − sft(x) * sft(y)‖_∞` for one pair.
pub fn fourier_duality_residual(m: &MtcData, x: &Quon, y: &Quon) -> Result<f64> {
    let lhs = sft(m, &multiply(m, x, y)?)?;
    let rhs = convolve(m, &sft(m, x)?, &sft(m, y)?)?;
    lhs.max_abs_diff(&rhs)
}

/// Exhaustive basis sweep plus `trials` seeded random pairs.
pub fn check_fourier_duality(
    m: &MtcData,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("fourier duality", m.name(), tol).with_seed(seed);
    let r = m.rank();
    let mut basis_err = 0.0_f64;
    for a in 0..r {
        for b in 0..r {
            let x = Quon::basis(m, &[Label(a)])?;
            let y = Quon::basis(m, &[Label(b)])?;
            basis_err = basis_err.max(fourier_duality_residual(m, &x, &y)?);
        }
    }
    report.push(CheckResult::from_error(
        "fourier_duality.basis",
        format!("pairs={}", r * r),
        basis_err,
        tol,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_err = 0.0_f64;
    for _ in 0..trials {
        let x = Quon::random(m, 1, &mut rng);
        let y = Quon::random(m, 1, &mut rng);
        random_err = random_err.max(fourier_duality_residual(m, &x, &y)?);
    }
    report.push(CheckResult::from_error(
        "fourier_duality.random",
        format!("trials={trials}"),
        random_err,
        tol,
    ));
    Ok(report)
}

/// Checks that `δ⁻¹ S N_x S⁻¹` is diagonal with entries `S_x^y / d(y)`.
pub fn check_verlinde_diagonalization(m: &MtcData, tol: f64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("verlinde diagonalization", m.name(), tol);
    let s = m.s();
    let s_inv = s.t().mapv(|c| c.conj());
    for x in 0..m.rank() {
        let nx = m.ring().fusion_matrix(x).mapv(|v| Complex64::new(v, 0.0));
        let conj = s.dot(&nx).dot(&s_inv).mapv(|c| c / m.delta());
        let mut off = 0.0_f64;
        let mut diag = 0.0_f64;
        for ((i, j), c) in conj.indexed_iter() {
            if i == j {
                diag = diag.max((c - m.s_entry(x, i) / m.dim(i)).norm());
            } else {
                off = off.max(c.norm());
            }
        }
        let params = format!("x={}", m.label_name(Label(x)));
        report.push(CheckResult::from_error("verlinde.off_diagonal", &params, off, tol));
        report.push(CheckResult::from_error("verlinde.eigenvalues", &params, diag, tol));
    }
    Ok(report)
}

/// All unit-containing, fusion-closed subsets of `Irr`.
pub fn enumerate_fusion_subsets(m: &MtcData) -> Result<Vec<LabelSubset>> {
    let r = m.rank();
    if r > MAX_SUBSET_RANK {
        return Err(Error::GuardExceeded {
            what: "subset enumeration rank",
            size: r as u128,
            limit: MAX_SUBSET_RANK as u128,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << (r - 1)) {
        let k = LabelSubset::new(
            std::iter::once(0).chain((1..r).filter(|&x| mask & (1 << (x - 1)) != 0)),
        );
        if k.is_fusion_closed(m) {
            debug_assert!(k.is_dual_closed(m));
            out.push(k);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `K̂ = {x : |S_x^y/S_x^1 − S_1^y/S_1^1| ≤ tol for all y ∈ K}`.
pub fn mueger_center(m: &MtcData, k: &LabelSubset, tol: f64) -> LabelSubset {
    LabelSubset::new((0..m.rank()).filter(|&x| k.iter().all(|y| centralizes(m, x, y, tol))))
}

fn centralizes(m: &MtcData, x: usize, y: usize, tol: f64) -> bool {
    let lhs = m.s_entry(x, y) / m.s_entry(x, 0);
    let rhs = m.s_entry(0, y) / m.s_entry(0, 0);
    (lhs - rhs).norm() <= tol
}

/// For every fusion-closed `K`: `sft(P_K) ∝ P_{K̂}` with a nonnegative factor,
/// `Supp(P_K)·Supp(P_{K̂}) = δ²`, `K̂̂ = K` and `sft²(P_K) = P_K`.
pub fn check_biprojection_duality(m: &MtcData, tol: f64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("biprojection duality", m.name(), tol);
    let mu = m.mu();
    for k in enumerate_fusion_subsets(m)? {
        let params = format!("K={}", k.display(m));
        let pk = projection(m, &k);
        let khat = mueger_center(m, &k, tol);
        let pkhat = projection(m, &khat);
        let fpk = sft(m, &pk)?;

        // Best nonnegative multiple of P_{K̂}.
        let lambda = pkhat.inner(&fpk)? / pkhat.inner(&pkhat)?;
        let scaled = pkhat.scale(Complex64::new(lambda.re.max(0.0), 0.0));
        let residual = fpk
            .max_abs_diff(&scaled)?
            .max(lambda.im.abs())
            .max((-lambda.re).max(0.0));
        report.push(
            CheckResult::from_error("biprojection.proportional", &params, residual, tol)
                .with_note(format!("K^={} factor={:.12}", khat.display(m), lambda.re)),
        );

        let product = supp(m, &pk, DEFAULT_SUPPORT_TOL)? * supp(m, &fpk, DEFAULT_SUPPORT_TOL)?;
        report.push(CheckResult::from_error(
            "biprojection.support_product",
            &params,
            (product - mu).abs(),
            tol.max(1e-12 * mu),
        ));
        let dims = k.dimension(m) * khat.dimension(m);
        report.push(CheckResult::from_error(
            "biprojection.dimension_product",
            &params,
            (dims - mu).abs(),
            tol.max(1e-12 * mu),
        ));

        let back = mueger_center(m, &khat, tol);
        report.push(CheckResult::from_bool("biprojection.double_center", &params, back == k));

        let twice = sft(m, &fpk)?;
        report.push(CheckResult::from_error(
            "biprojection.sft_squared",
            &params,
            twice.max_abs_diff(&pk)?,
            tol,
        ));

        let negative = fpk
            .coeffs()
            .iter()
            .map(|c| (-c.re).max(0.0).max(c.im.abs()))
            .fold(0.0, f64::max);
        report.push(CheckResult::from_error("biprojection.positive", &params, negative, tol));
    }
    Ok(report)
}

/// Outcome of the Gannon sweep.
#[derive(Debug, Clone)]
pub struct GannonOutcome {
    pub report: VerificationReport,
    /// Pairs `(x, y)` where `|S_x^y|/S_x^1 = S_1^y/S_1^1` within tolerance.
    pub equality_pairs: Vec<(usize, usize)>,
}

/// `|S_x^y| / S_x^1 ≤ S_1^y / S_1^1` for all `(x, y)`.
///
/// The equality set is cross-checked against the centralizer relation used by
/// [`mueger_center`]: a pair centralizes exactly when it is an equality pair
/// and the ratio `S_x^y / S_x^1` is real and positive.
pub fn check_gannon_inequality(m: &MtcData, tol: f64) -> GannonOutcome {
    let mut report = VerificationReport::new("gannon inequality", m.name(), tol);
    let r = m.rank();
    let mut violation = 0.0_f64;
    let mut equality_pairs = Vec::new();
    let mut mismatches = 0usize;
    for x in 0..r {
        for y in 0..r {
            let ratio = m.s_entry(x, y) / m.s_entry(x, 0);
            let bound = (m.s_entry(0, y) / m.s_entry(0, 0)).re;
            let gap = bound - ratio.norm();
            violation = violation.max(-gap);
            let equal = gap.abs() <= tol;
            if equal {
                equality_pairs.push((x, y));
            }
            let phase_trivial = (ratio - Complex64::new(ratio.norm(), 0.0)).norm() <= tol;
            if centralizes(m, x, y, tol) != (equal && phase_trivial) {
                mismatches += 1;
            }
        }
    }
    let params = format!("pairs={}", r * r);
    report.push(CheckResult::from_error(
        "gannon.inequality",
        &params,
        violation.max(0.0),
        tol,
    ));
    report.push(
        CheckResult::from_bool("gannon.equality_matches_center", &params, mismatches == 0)
            .with_note(format!("equality pairs={}", equality_pairs.len())),
    );
    let unit_column = (0..r).all(|x| equality_pairs.contains(&(x, 0)));
    report.push(CheckResult::from_bool("gannon.unit_column_equality", &params, unit_column));
    GannonOutcome {
        report,
        equality_pairs,
    }
}

/// `Supp(β_x)·Supp(sft(β_x))` for each simple `x`, for diagnostics only.
pub fn donoho_stark_products(m: &MtcData, tol: f64) -> Result<Vec<(Label, f64)>> {
    m.labels()
        .map(|x| {
            let b = Quon::basis(m, &[x])?;
            Ok((x, supp(m, &b, tol)? * supp(m, &sft(m, &b)?, tol)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::{fibonacci, ising, pointed_z, semion, su2_level};

    fn names(m: &MtcData, sets: &[LabelSubset]) -> Vec<String> {
        sets.iter().map(|k| k.display(m).to_string()).collect()
    }

    #[test]
    fn supp_examples() {
        let m = ising();
        assert_eq!(supp(&m, &Quon::zeros(&m, 1), 1e-7).unwrap(), 0.0);
        let p = projection(&m, &LabelSubset::new([0, 2]));
        assert!((supp(&m, &p, 1e-7).unwrap() - 2.0).abs() < 1e-12);
        let m = fibonacci();
        let p = projection(&m, &LabelSubset::all(&m));
        assert!((supp(&m, &p, 1e-7).unwrap() - 3.618_033_988_7).abs() < 1e-10);
    }

    #[test]
    fn subset_enumeration() {
        let m = fibonacci();
        assert_eq!(names(&m, &enumerate_fusion_subsets(&m).unwrap()), ["{1}", "{1,tau}"]);
        let m = ising();
        assert_eq!(
            names(&m, &enumerate_fusion_subsets(&m).unwrap()),
            ["{1}", "{1,psi}", "{1,sigma,psi}"]
        );
        let m = pointed_z(4).unwrap();
        assert_eq!(
            names(&m, &enumerate_fusion_subsets(&m).unwrap()),
            ["{0}", "{0,2}", "{0,1,2,3}"]
        );
        let m = pointed_z(6).unwrap();
        assert_eq!(enumerate_fusion_subsets(&m).unwrap().len(), 4);
    }

    #[test]
    fn center_examples() {
        let m = ising();
        assert_eq!(mueger_center(&m, &LabelSubset::unit(), 1e-9), LabelSubset::all(&m));
        assert_eq!(
            mueger_center(&m, &LabelSubset::new([0, 2]), 1e-9),
            LabelSubset::new([0, 2])
        );
        let m = fibonacci();
        assert_eq!(mueger_center(&m, &LabelSubset::all(&m), 1e-9), LabelSubset::unit());
    }

    #[test]
    fn unit_subset_transform() {
        for m in [fibonacci(), ising(), su2_level(3).unwrap()] {
            let f = sft(&m, &projection(&m, &LabelSubset::unit())).unwrap();
            for x in 0..m.rank() {
                assert!((f.get(&[x]).re - m.dim(x) / m.delta()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn biprojection_reports_pass() {
        for m in [fibonacci(), ising(), semion(), pointed_z(6).unwrap(), su2_level(4).unwrap()] {
            let rep = check_biprojection_duality(&m, 1e-8).unwrap();
            assert!(rep.passed(), "{}: {:?}", m.name(), rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn gannon_examples() {
        let m = ising();
        let out = check_gannon_inequality(&m, 1e-7);
        assert!(out.report.passed());
        assert!(out.equality_pairs.contains(&(2, 2)));
        // (psi, sigma) attains the bound with a sign, so it does not centralize.
        assert!(out.equality_pairs.contains(&(2, 1)));
        assert!(!mueger_center(&m, &LabelSubset::new([0, 1]), 1e-7).contains(2));
    }

    #[test]
    fn verlinde_diagonalization_fibonacci() {
        let rep = check_verlinde_diagonalization(&fibonacci(), 1e-12).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn duality_unit_case_is_exact() {
        let m = fibonacci();
        let one = Quon::basis(&m, &[Label(0)]).unwrap();
        assert!(fourier_duality_residual(&m, &one, &one).unwrap() < 1e-15);
        let rep = check_fourier_duality(&m, 100, DEFAULT_SEED, 1e-10).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn donoho_stark_products_are_at_least_mu_on_basis() {
        for m in [fibonacci(), ising()] {
            for (_, p) in donoho_stark_products(&m, 1e-7).unwrap() {
                assert!(p >= m.mu() - 1e-9);
            }
        }
    }

    #[test]
    fn subset_rank_guard() {
        let m = pointed_z(21).unwrap();
        assert!(matches!(
            enumerate_fusion_subsets(&m),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
