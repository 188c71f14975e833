//! Graphic quons: GHZ and Max states at genus `g`, their generating
//! functions, state-sum coefficients of planar graphs and the Fourier duality
//! between a graph and its dual.

pub mod network;
pub mod rational;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use network::{graph_coefficient, graph_coefficient_with, network_squared, vertex_prefactor, SplitStrategy};
pub use rational::RationalFn;

use crate::error::{Error, Result};
use crate::graph::{dual_graph, map_isomorphisms, PlanarGraph};
use crate::mtc::{fusion_dim_hom_unit, unflatten, Label, MtcData, TupleIter};
use crate::quon::{sft, Quon};
use crate::recoupling::RecouplingData;
use crate::report::{CheckResult, VerificationReport};

/// Largest `|Irr|^g` that [`brute_force_dim`] will enumerate.
pub const MAX_HANDLE_TUPLES: u128 = 10_000_000;
/// Largest `|Irr|^{2n}` swept exhaustively by the graph duality checks.
pub const MAX_DUALITY_TERMS: u128 = 100_000_000;
/// Largest coefficient table `|Irr|^n` that is ever materialized.
pub const MAX_TABLE_SIZE: u128 = 10_000_000;
/// Dual-side tuples drawn when a duality sweep is sampled.
pub const DEFAULT_DUALITY_SAMPLES: usize = 2000;

fn guard(what: &'static str, rank: usize, exponent: usize, limit: u128) -> Result<u128> {
    let size = (rank as u128).checked_pow(exponent as u32).unwrap_or(u128::MAX);
    if size > limit {
        return Err(Error::GuardExceeded { what, size, limit });
    }
    Ok(size)
}

/// `GHZ_{n,g} = Σ_X d(X)^{2−n−2g} |X…X⟩`.
pub fn ghz(m: &MtcData, n: usize, g: usize) -> Quon {
    let e = 2 - n as i32 - 2 * g as i32;
    if n == 0 {
        let total: f64 = m.dims().iter().map(|d| d.powi(e)).sum();
        return Quon::scalar(m, Complex64::new(total, 0.0));
    }
    Quon::from_fn(m, n, |ix| {
        if ix.iter().all(|&x| x == ix[0]) {
            Complex64::new(m.dim(ix[0]).powi(e), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `dim(X⃗, g) = Σ_{Y⃗ ∈ Irr^g} dim hom(1, X⃗ ⊗ Y⃗ ⊗ Ȳ_g ⊗ … ⊗ Ȳ_1)`, enumerated literally.
pub fn brute_force_dim(m: &MtcData, labels: &[Label], g: usize) -> Result<u64> {
    guard("handle labelings |Irr|^g", m.rank(), g, MAX_HANDLE_TUPLES)?;
    for &x in labels {
        m.ring().check_label(x)?;
    }
    let mut total = 0u64;
    let mut word: Vec<Label> = Vec::with_capacity(labels.len() + 2 * g);
    for ys in TupleIter::new(m.rank(), g) {
        word.clear();
        word.extend_from_slice(labels);
        word.extend(ys.iter().map(|&y| Label(y)));
        word.extend(ys.iter().rev().map(|&y| Label(m.dual(y))));
        total += fusion_dim_hom_unit(m, &word)?;
    }
    Ok(total)
}

/// `dim(X⃗, g)` through fusion matrices: `(N_{X_1} ⋯ N_{X_n} H^g)_{1,1}` with
/// the handle operator `H = Σ_Y N_Y N_Ȳ`.
pub fn fusion_genus_dim(m: &MtcData, labels: &[usize], g: usize) -> u128 {
    let r = m.rank();
    let mut v = vec![0u128; r];
    v[0] = 1;
    let apply = |v: &[u128], x: usize| -> Vec<u128> {
        let mut out = vec![0u128; r];
        for (a, &va) in v.iter().enumerate().filter(|t| *t.1 != 0) {
            for z in m.ring().fuse(a, x) {
                out[z] += va * m.n(a, x, z) as u128;
            }
        }
        out
    };
    for &x in labels {
        v = apply(&v, x);
    }
    for _ in 0..g {
        let mut next = vec![0u128; r];
        for y in 0..r {
            let w = apply(&apply(&v, y), m.dual(y));
            for (acc, x) in next.iter_mut().zip(w) {
                *acc += x;
            }
        }
        v = next;
    }
    v[0]
}

/// `Σ_X (Π_i S_{X_i}^X) (S_X^1)^{2−n−2g}`.
pub fn verlinde_dim(m: &MtcData, labels: &[usize], g: usize) -> Complex64 {
    let e = 2 - labels.len() as i32 - 2 * g as i32;
    (0..m.rank())
        .map(|x| {
            let prod: Complex64 = labels.iter().map(|&xi| m.s_entry(xi, x)).product();
            prod * m.s_entry(x, 0).powi(e)
        })
        .sum()
}

/// `dim(X⃗, g)` for every `X⃗ ∈ Irr^n` and `g ∈ 0..=g_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusDimTable {
    pub n: usize,
    pub g_max: usize,
    pub rank: usize,
    /// `values[g][flat(X⃗)]`, tuples flattened row-major.
    pub values: Vec<Vec<u64>>,
}

impl GenusDimTable {
    pub fn get(&self, labels: &[usize], g: usize) -> u64 {
        self.values[g][crate::mtc::flatten(labels, self.rank)]
    }
}

/// Fills a [`GenusDimTable`] with [`brute_force_dim`].
pub fn genus_dim_table(m: &MtcData, n: usize, g_max: usize) -> Result<GenusDimTable> {
    guard("genus table |Irr|^n", m.rank(), n, MAX_TABLE_SIZE)?;
    let values = (0..=g_max)
        .map(|g| {
            m.tuples(n)
                .map(|x| brute_force_dim(m, &x.iter().map(|&i| Label(i)).collect::<Vec<_>>(), g))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenusDimTable { n, g_max, rank: m.rank(), values })
}

/// `Max_{n,g} = δ^{2−n−2g} Σ_{X⃗} dim(X⃗, g) |X⃗⟩`.
pub fn max_state(m: &MtcData, n: usize, g: usize) -> Result<Quon> {
    guard("handle labelings |Irr|^g", m.rank(), g, MAX_HANDLE_TUPLES)?;
    guard("state size |Irr|^n", m.rank(), n, MAX_TABLE_SIZE)?;
    let scale = m.delta().powi(2 - n as i32 - 2 * g as i32);
    Ok(Quon::from_fn(m, n, |ix| {
        Complex64::new(scale * fusion_genus_dim(m, ix, g) as f64, 0.0)
    }))
}

/// Checks `Max_{n,g} = S⃗ GHZ_{n,g}` together with the integer form
/// `dim(X⃗, g) = Σ_X (Π S_{X_i}^X)(S_X^1)^{2−n−2g}`.
pub fn check_max_equals_s_ghz(m: &MtcData, n: usize, g: usize, tol: f64) -> Result<VerificationReport> {
    let params = format!("n={n} g={g}");
    let mut report = VerificationReport::new("generalized Verlinde formula", m.name(), tol);
    let max = max_state(m, n, g)?;
    let rhs = sft(m, &ghz(m, n, g))?;
    report.push(CheckResult::from_error("max_ghz.fourier", &params, max.max_abs_diff(&rhs)?, tol));

    let brute_ok = guard("handle labelings |Irr|^g", m.rank(), g, MAX_HANDLE_TUPLES).is_ok()
        && (m.rank() as u128).pow(n as u32).saturating_mul((m.rank() as u128).pow(g as u32)) <= MAX_HANDLE_TUPLES;
    let mut integrality = 0.0f64;
    let mut agreement = 0.0f64;
    let mut brute_mismatch = 0usize;
    for x in m.tuples(n) {
        let v = verlinde_dim(m, &x, g);
        let exact = fusion_genus_dim(m, &x, g);
        integrality = integrality.max((v - v.re.round()).norm());
        agreement = agreement.max((v - exact as f64).norm());
        if brute_ok {
            let labels: Vec<Label> = x.iter().map(|&i| Label(i)).collect();
            if brute_force_dim(m, &labels, g)? as u128 != exact {
                brute_mismatch += 1;
            }
        }
    }
    report.push(CheckResult::from_error("max_ghz.verlinde_integrality", &params, integrality, tol));
    report.push(CheckResult::from_error("max_ghz.verlinde_vs_fusion", &params, agreement, tol));
    let brute = CheckResult::from_bool("max_ghz.brute_force", &params, brute_mismatch == 0);
    report.push(if brute_ok {
        brute.with_note(format!("{brute_mismatch} mismatches"))
    } else {
        brute.with_note("skipped: |Irr|^(n+g) above the enumeration guard")
    });
    Ok(report)
}

/// Per-coefficient generating functions of an order-`n` state, tuples row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GenFunTable {
    pub n: usize,
    pub rank: usize,
    pub entries: Vec<RationalFn>,
}

impl GenFunTable {
    pub fn get(&self, labels: &[usize]) -> &RationalFn {
        &self.entries[crate::mtc::flatten(labels, self.rank)]
    }

    /// Nonzero entries with their label tuples.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &RationalFn)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| (unflatten(i, self.rank, self.n), r))
    }
}

/// `GHZ_n(z) = Σ_g GHZ_{n,g} z^g`: entry `X…X` is `d(X)^{4−n} / (d(X)² − z)`.
pub fn ghz_genfun(m: &MtcData, n: usize) -> Result<GenFunTable> {
    guard("state size |Irr|^n", m.rank(), n, MAX_TABLE_SIZE)?;
    let e = 4 - n as i32;
    let entries = m
        .tuples(n)
        .map(|x| {
            if n == 0 {
                RationalFn::new(m.dims().iter().map(|&d| (d * d, Complex64::new(d.powi(e), 0.0))))
            } else if x.iter().all(|&y| y == x[0]) {
                let d = m.dim(x[0]);
                RationalFn::new([(d * d, Complex64::new(d.powi(e), 0.0))])
            } else {
                RationalFn::zero()
            }
        })
        .collect();
    Ok(GenFunTable { n, rank: m.rank(), entries })
}

/// `Max_n(z) = Σ_g Max_{n,g} z^g`: entry `X⃗` is `Σ_X (Π S_{X_i}^X) d(X)^{4−n} / (d(X)² − z)`.
pub fn max_genfun(m: &MtcData, n: usize) -> Result<GenFunTable> {
    guard("state size |Irr|^n", m.rank(), n, MAX_TABLE_SIZE)?;
    let e = 4 - n as i32;
    let entries = m
        .tuples(n)
        .map(|x| {
            RationalFn::new((0..m.rank()).map(|y| {
                let prod: Complex64 = x.iter().map(|&xi| m.s_entry(xi, y)).product();
                let d = m.dim(y);
                (d * d, prod * d.powi(e))
            }))
        })
        .collect();
    Ok(GenFunTable { n, rank: m.rank(), entries })
}

/// Compares the `z^g` coefficients of both generating functions against the
/// closed-form GHZ state and the brute-force genus table, `g ≤ terms`.
pub fn check_genfun(m: &MtcData, n: usize, terms: usize, tol: f64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("generating functions", m.name(), tol);
    let table = genus_dim_table(m, n, terms)?;
    let ghz_f = ghz_genfun(m, n)?;
    let max_f = max_genfun(m, n)?;
    for g in 0..=terms {
        let params = format!("n={n} g={g}");
        let scale = m.delta().powi(2 - n as i32 - 2 * g as i32);
        let ghz_g = ghz(m, n, g);
        let mut ghz_err = 0.0f64;
        let mut max_err = 0.0f64;
        for (i, x) in m.tuples(n).enumerate() {
            ghz_err = ghz_err.max((ghz_f.entries[i].series_coeff(g) - ghz_g.get(&x)).norm());
            let expected = scale * table.values[g][i] as f64;
            max_err = max_err.max((max_f.entries[i].series_coeff(g) - expected).norm());
        }
        report.push(CheckResult::from_error("genfun.ghz_series", &params, ghz_err, tol));
        report.push(CheckResult::from_error("genfun.max_series", &params, max_err, tol));
    }
    Ok(report)
}

/// All coefficients `⟨X⃗|T_G⟩`, evaluated in parallel.
pub fn coefficient_table(m: &MtcData, rd: &RecouplingData, g: &PlanarGraph) -> Result<Quon> {
    let n = g.num_edges();
    let size = guard("coefficient table |Irr|^n", m.rank(), n, MAX_TABLE_SIZE)? as usize;
    let values = (0..size)
        .into_par_iter()
        .map(|i| graph_coefficient(m, rd, g, &unflatten(i, m.rank(), n)).map(|v| Complex64::new(v, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    Quon::from_vec(m, n, values)
}

/// How a duality sweep covered the dual side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Coverage {
    Exhaustive,
    Sampled { samples: usize },
}

/// Options for [`check_graph_duality_with`].
#[derive(Debug, Clone, Copy)]
pub struct DualityOptions {
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for DualityOptions {
    fn default() -> Self {
        Self { tol: 1e-8, seed: crate::fourier::DEFAULT_SEED, samples: DEFAULT_DUALITY_SAMPLES }
    }
}

/// Checks `T_{Ĝ} = S⃗ T_G` with `Ĝ = dual_graph(G)`.
pub fn check_graph_duality(m: &MtcData, rd: &RecouplingData, g: &PlanarGraph, tol: f64) -> Result<VerificationReport> {
    check_graph_duality_with(m, rd, g, DualityOptions { tol, ..Default::default() })
}

pub fn check_graph_duality_with(
    m: &MtcData,
    rd: &RecouplingData,
    g: &PlanarGraph,
    opts: DualityOptions,
) -> Result<VerificationReport> {
    let dual = dual_graph(g)?;
    let tables = duality_tables(m, rd, g, &dual, opts)?;
    let mut report = VerificationReport::new(format!("graph duality {}", g.name()), m.name(), opts.tol)
        .with_seed(opts.seed);
    push_duality_checks(&mut report, m, g.name(), &tables, opts.tol)?;
    Ok(report)
}

struct DualityTables {
    primal: Quon,
    transformed: Quon,
    /// `(X⃗, ⟨X⃗|T_{Ĝ}⟩)` for every swept dual tuple.
    dual_values: Vec<(Vec<usize>, f64)>,
    coverage: Coverage,
}

fn duality_tables(
    m: &MtcData,
    rd: &RecouplingData,
    g: &PlanarGraph,
    dual: &PlanarGraph,
    opts: DualityOptions,
) -> Result<DualityTables> {
    let n = g.num_edges();
    let primal = coefficient_table(m, rd, g)?;
    let transformed = sft(m, &primal)?;
    let exhaustive = guard("duality sweep |Irr|^2n", m.rank(), 2 * n, MAX_DUALITY_TERMS).is_ok();
    let tuples: Vec<Vec<usize>> = if exhaustive {
        m.tuples(n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.samples)
            .map(|_| (0..n).map(|_| rng.gen_range(0..m.rank())).collect())
            .collect()
    };
    let dual_values = tuples
        .into_par_iter()
        .map(|x| graph_coefficient(m, rd, dual, &x).map(|v| (x, v)))
        .collect::<Result<Vec<_>>>()?;
    let coverage = if exhaustive {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled { samples: opts.samples }
    };
    Ok(DualityTables { primal, transformed, dual_values, coverage })
}

fn push_duality_checks(
    report: &mut VerificationReport,
    m: &MtcData,
    name: &str,
    t: &DualityTables,
    tol: f64,
) -> Result<()> {
    let sampled = t.coverage != Coverage::Exhaustive;
    let params = format!("graph={name}");
    let residual = t
        .dual_values
        .iter()
        .map(|(x, v)| (t.transformed.get(x) - v).norm())
        .fold(0.0, f64::max);
    let coverage = match t.coverage {
        Coverage::Exhaustive => format!("exhaustive over {} tuples", t.dual_values.len()),
        Coverage::Sampled { samples } => format!("{samples} sampled tuples"),
    };
    report.push(
        CheckResult::from_error("graph_duality.identity", &params, residual, tol)
            .sampled(sampled)
            .with_note(coverage),
    );
    let min = t
        .primal
        .to_vec()
        .iter()
        .map(|c| c.re)
        .chain(t.dual_values.iter().map(|p| p.1))
        .fold(f64::INFINITY, f64::min);
    report.push(
        CheckResult::from_error("graph_duality.positivity", &params, (-min).max(0.0), 1e-9)
            .with_note(format!("min coefficient {min:.3e}")),
    );
    // S² = C, and T_G is invariant under dualizing every slot.
    let twice = sft(m, &t.transformed)?;
    report.push(CheckResult::from_error(
        "graph_duality.double_fourier",
        &params,
        twice.max_abs_diff(&t.primal)?,
        tol,
    ));
    Ok(())
}

/// Self-duality of a graph: `S⃗ T_G = T_G ∘ π` where `π` is the edge relabeling
/// carried by a map isomorphism `Ĝ → G` (mirrors allowed, reversed edges dualize
/// their slot).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfDualRelabeling {
    /// `(image edge in G, reversed)` for each edge of `Ĝ`.
    pub edges: Vec<(usize, bool)>,
    pub mirrored: bool,
}

impl SelfDualRelabeling {
    /// The `G`-labels corresponding to the `Ĝ`-labels `x`.
    pub fn apply(&self, m: &MtcData, x: &[usize]) -> Vec<usize> {
        let mut out = vec![0; x.len()];
        for (k, &(h, rev)) in self.edges.iter().enumerate() {
            out[h] = if rev { m.dual(x[k]) } else { x[k] };
        }
        out
    }
}

/// All relabelings identifying `dual_graph(G)` with `G`, in a fixed order.
pub fn self_dual_relabelings(g: &PlanarGraph) -> Result<Vec<SelfDualRelabeling>> {
    let dual = dual_graph(g)?;
    let mut out: Vec<SelfDualRelabeling> = map_isomorphisms(&dual, g, true)
        .into_iter()
        .map(|iso| SelfDualRelabeling { edges: iso.edge_images(&dual, g), mirrored: iso.mirrored })
        .collect();
    out.sort_by(|a, b| (a.mirrored, &a.edges).cmp(&(b.mirrored, &b.edges)));
    out.dedup();
    Ok(out)
}

/// Duality check for a self-dual graph, with both sides drawn from the single
/// table of `G`: `⟨X⃗|S⃗ T_G⟩ = ⟨π(X⃗)|T_G⟩`.
pub fn check_self_duality(
    m: &MtcData,
    rd: &RecouplingData,
    g: &PlanarGraph,
    opts: DualityOptions,
) -> Result<VerificationReport> {
    let relabelings = self_dual_relabelings(g)?;
    let Some(pi) = relabelings.first() else {
        return Err(Error::InvalidMap(format!("{} is not self-dual as a map", g.name())));
    };
    let mut report = VerificationReport::new(format!("self-duality {}", g.name()), m.name(), opts.tol)
        .with_seed(opts.seed);
    let dual = dual_graph(g)?;
    let tables = duality_tables(m, rd, g, &dual, opts)?;
    push_duality_checks(&mut report, m, g.name(), &tables, opts.tol)?;
    let residual = m
        .tuples(g.num_edges())
        .map(|x| (tables.transformed.get(&x) - tables.primal.get(&pi.apply(m, &x))).norm())
        .fold(0.0, f64::max);
    let pattern: Vec<String> = pi
        .edges
        .iter()
        .map(|&(h, rev)| format!("{}{}", h + 1, if rev { "'" } else { "" }))
        .collect();
    report.push(
        CheckResult::from_error("self_duality.relabeled", format!("graph={}", g.name()), residual, opts.tol)
            .with_note(format!(
                "dual edge k -> edge [{}]{}",
                pattern.join(" "),
                if pi.mirrored { " (mirrored)" } else { "" }
            )),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, dipole_graph, tetrahedron_graph, wheel_graph};
    use crate::mtc::{builtin, fibonacci, ising, semion};
    use crate::recoupling::build_recoupling;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn ghz_examples() {
        let s = semion();
        let q = ghz(&s, 3, 0);
        assert_eq!(q.get(&[0, 0, 0]), c(1.0));
        assert_eq!(q.get(&[1, 1, 1]), c(1.0));
        assert_eq!(q.get(&[0, 1, 1]), c(0.0));
        let f = fibonacci();
        let q = ghz(&f, 1, 1);
        assert!((q.get(&[1]) - c(1.0 / f.dim(1))).norm() < 1e-15);
        assert_eq!(q.get(&[0]), c(1.0));
    }

    #[test]
    fn brute_force_examples() {
        let f = fibonacci();
        let tau = Label(1);
        assert_eq!(brute_force_dim(&f, &[tau, tau, tau], 0).unwrap(), 1);
        assert_eq!(brute_force_dim(&f, &[], 1).unwrap(), 2);
        assert_eq!(brute_force_dim(&f, &[], 0).unwrap(), 1);
        let big = builtin("su2:16").unwrap();
        assert!(matches!(
            brute_force_dim(&big, &[], 6),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn max_examples() {
        let s = semion();
        let q = max_state(&s, 3, 0).unwrap();
        let h = 0.5f64.sqrt();
        for x in s.tuples(3) {
            let even = x.iter().sum::<usize>() % 2 == 0;
            assert!((q.get(&x) - c(if even { h } else { 0.0 })).norm() < 1e-15, "{x:?}");
        }
        let f = fibonacci();
        assert!((max_state(&f, 0, 0).unwrap().get(&[]) - c(f.mu())).norm() < 1e-12);
        let i = ising();
        let q = max_state(&i, 2, 0).unwrap();
        for x in i.tuples(2) {
            assert_eq!(q.get(&x), c(if x[1] == i.dual(x[0]) { 1.0 } else { 0.0 }));
        }
    }

    #[test]
    fn verlinde_matches_fusion_and_brute_force() {
        for m in [fibonacci(), ising()] {
            for n in 0..=3 {
                for g in 0..=2 {
                    let r = check_max_equals_s_ghz(&m, n, g, 1e-8).unwrap();
                    assert!(r.passed(), "{} n={n} g={g}: {:?}", m.name(), r.failures().collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn genfun_examples() {
        let s = semion();
        let t = ghz_genfun(&s, 3).unwrap();
        let one = RationalFn::new([(1.0, c(1.0))]);
        assert_eq!(t.get(&[0, 0, 0]), &one);
        assert_eq!(t.get(&[1, 1, 1]), &one);
        assert_eq!(t.nonzero().count(), 2);
        let f = fibonacci();
        let t = ghz_genfun(&f, 4).unwrap();
        let d = f.dim(1);
        for g in 0..4 {
            let v = t.get(&[1, 1, 1, 1]).series_coeff(g);
            assert!((v - c(d.powi(-2 * (g as i32 + 1)))).norm() < 1e-14);
        }
    }

    #[test]
    fn genfun_series_match_tables() {
        for m in [fibonacci(), ising()] {
            for n in 0..=3 {
                let r = check_genfun(&m, n, 4, 1e-7).unwrap();
                assert!(r.passed(), "{} n={n}", m.name());
            }
        }
    }

    #[test]
    fn cycle_and_dipole_oracles() {
        for m in [fibonacci(), ising()] {
            let rd = build_recoupling(&m).unwrap();
            for n in 1..=5 {
                let cyc = coefficient_table(&m, &rd, &cycle_graph(n).unwrap()).unwrap();
                assert!(cyc.max_abs_diff(&ghz(&m, n, 0)).unwrap() < 1e-9, "{} cycle {n}", m.name());
                let dip = coefficient_table(&m, &rd, &dipole_graph(n).unwrap()).unwrap();
                assert!(dip.max_abs_diff(&max_state(&m, n, 0).unwrap()).unwrap() < 1e-9, "{} dipole {n}", m.name());
            }
        }
    }

    #[test]
    fn tetrahedron_and_wheel_duality() {
        for m in [fibonacci(), ising()] {
            let rd = build_recoupling(&m).unwrap();
            for g in [tetrahedron_graph(), wheel_graph(2).unwrap(), wheel_graph(3).unwrap()] {
                let r = check_self_duality(&m, &rd, &g, DualityOptions::default()).unwrap();
                assert!(r.passed(), "{} {}: {:?}", m.name(), g.name(), r.failures().collect::<Vec<_>>());
            }
        }
    }
}
