//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails. Oracles are computed here from first principles
//! wherever the library offers a shortcut.

use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use quon::fourier::{
    check_biprojection_duality, check_fourier_duality, check_gannon_inequality,
    check_verlinde_diagonalization, DEFAULT_SEED,
};
use quon::graph::{
    cycle_graph, dipole_graph, dual_graph, map_isomorphisms, ordered_oriented_isomorphic, platonic,
    tetrahedron_graph, wheel_graph, PlanarGraph,
};
use quon::graphic::{
    brute_force_dim, check_self_duality, genus_dim_table, ghz, graph_coefficient, max_genfun,
    max_state, DualityOptions,
};
use quon::mtc::{
    fibonacci, fusion_dim_hom_unit, ising, pointed_z, semion, su2_level, verify_modular_data, Label,
    MtcData, TupleIter,
};
use quon::recoupling::{build_recoupling, oriented_tet_squared, RecouplingData, TetEdge};

type Outcome = Result<String, String>;

fn suite() -> Vec<MtcData> {
    let mut v = vec![fibonacci(), ising()];
    v.extend((2..=5).map(|n| pointed_z(n).unwrap()));
    v.extend((1..=6).map(|k| su2_level(k).unwrap()));
    v
}

fn builtins() -> Vec<MtcData> {
    let mut v = suite();
    v.push(semion());
    v
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_failure(r: &quon::report::VerificationReport) -> String {
    r.failures()
        .next()
        .map(|c| format!("{} {} [{}] err={:.3e}", r.category, c.id, c.params, c.max_error))
        .unwrap_or_default()
}

/// `Σ_{Y⃗} Π_k S_{Y_k}^{X_k} t(Y⃗)` by direct summation.
fn s_sum(m: &MtcData, table: &[f64], n: usize, x: &[usize]) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for (i, y) in TupleIter::new(m.rank(), n).enumerate() {
        if table[i] == 0.0 {
            continue;
        }
        let w: Complex64 = y.iter().zip(x).map(|(&yk, &xk)| m.s_entry(yk, xk)).product();
        total += w * table[i];
    }
    total
}

fn flat(x: &[usize], r: usize) -> usize {
    x.iter().fold(0, |acc, &v| acc * r + v)
}

fn reducer_table(m: &MtcData, rd: &RecouplingData, g: &PlanarGraph) -> Vec<f64> {
    TupleIter::new(m.rank(), g.num_edges())
        .map(|x| graph_coefficient(m, rd, g, &x).unwrap())
        .collect()
}

/// Tetrahedron coefficients straight from the F-table: `δ^{-2} |Tet|²`, with
/// edges 1..6 of the standard tetrahedron as `A0→A1, A1→A2, A2→A0, O→A0, O→A1, O→A2`.
fn tet_table(m: &MtcData, rd: &RecouplingData) -> Vec<f64> {
    TupleIter::new(m.rank(), 6)
        .map(|x| {
            let e = |tail, head, label| TetEdge { tail, head, label };
            let edges = [
                e(0, 1, x[0]),
                e(1, 2, x[1]),
                e(2, 0, x[2]),
                e(3, 0, x[3]),
                e(3, 1, x[4]),
                e(3, 2, x[5]),
            ];
            oriented_tet_squared(rd, &edges).unwrap() / m.mu()
        })
        .collect()
}

fn c1_modular_data() -> Outcome {
    let cats = suite();
    for m in &cats {
        let r = verify_modular_data(m, 1e-9).map_err(|e| e.to_string())?;
        ensure(r.passed(), || first_failure(&r))?;
    }
    Ok(format!("{} categories", cats.len()))
}

fn c2_fourier_duality() -> Outcome {
    let mut worst = 0.0f64;
    for m in builtins() {
        let r = check_fourier_duality(&m, 100, DEFAULT_SEED, 1e-9).map_err(|e| e.to_string())?;
        ensure(r.passed(), || first_failure(&r))?;
        worst = worst.max(r.max_error());
    }
    Ok(format!("max residual {worst:.2e}"))
}

fn c3_verlinde_diagonalization() -> Outcome {
    let mut worst = 0.0f64;
    for m in builtins() {
        let r = check_verlinde_diagonalization(&m, 1e-9).map_err(|e| e.to_string())?;
        ensure(r.passed(), || first_failure(&r))?;
        worst = worst.max(r.max_error());
        // Diagonal of S N_X S^{-1} against S_X^Y / S_1^Y, computed here by hand.
        let r_ = m.rank();
        for x in 0..r_ {
            for y in 0..r_ {
                let mut diag = Complex64::new(0.0, 0.0);
                for a in 0..r_ {
                    for b in 0..r_ {
                        // (S N_X S^{-1})_{yy} with (N_X)_{b,a} = N_{x,a}^b and S^{-1} = S^†.
                        let n = m.n(x, a, b) as f64;
                        if n != 0.0 {
                            diag += m.s_entry(y, b) * n * m.s_entry(y, a).conj();
                        }
                    }
                }
                let expected = m.s_entry(x, y) / m.s_entry(0, y);
                ensure((diag - expected).norm() < 1e-9, || {
                    format!("{} x={x} y={y}: {diag} vs {expected}", m.name())
                })?;
            }
        }
    }
    Ok(format!("max residual {worst:.2e}"))
}

fn c4_biprojections() -> Outcome {
    let mut subsets = 0;
    for m in builtins() {
        let r = check_biprojection_duality(&m, 1e-8).map_err(|e| e.to_string())?;
        ensure(r.passed(), || first_failure(&r))?;
        subsets += r.checks.iter().filter(|c| c.id == "biprojection.double_center").count();
        let g = check_gannon_inequality(&m, 1e-7);
        ensure(g.report.passed(), || first_failure(&g.report))?;
    }
    Ok(format!("{subsets} fusion subcategories"))
}

fn c5_generalized_verlinde() -> Outcome {
    let mut cases = 0;
    for m in builtins().into_iter().filter(|m| m.rank() <= 5) {
        for n in 0..=3 {
            for g in 0..=2 {
                for x in m.tuples(n) {
                    let labels: Vec<Label> = x.iter().map(|&i| Label(i)).collect();
                    let exact = brute_force_dim(&m, &labels, g).map_err(|e| e.to_string())? as f64;
                    let e = 2 - n as i32 - 2 * g as i32;
                    let sum: Complex64 = (0..m.rank())
                        .map(|y| {
                            let p: Complex64 = x.iter().map(|&xi| m.s_entry(xi, y)).product();
                            p * m.s_entry(y, 0).powi(e)
                        })
                        .sum();
                    ensure((sum - exact).norm() < 1e-6, || {
                        format!("{} n={n} g={g} {x:?}: {sum} vs {exact}", m.name())
                    })?;
                    cases += 1;
                }
            }
        }
    }
    // Semion qubit patterns: GHZ on |000>,|111>, Max on even parity.
    let s = semion();
    let gh = ghz(&s, 3, 0);
    let mx = max_state(&s, 3, 0).map_err(|e| e.to_string())?;
    for x in s.tuples(3) {
        let ghz_support = x.iter().all(|&v| v == x[0]);
        let max_support = x.iter().sum::<usize>() % 2 == 0;
        ensure((gh.get(&x).norm() > 1e-12) == ghz_support, || format!("semion GHZ {x:?}"))?;
        ensure((mx.get(&x).norm() > 1e-12) == max_support, || format!("semion Max {x:?}"))?;
    }
    Ok(format!("{cases} (category, n, g, X) cases; semion patterns match"))
}

fn c6_generating_functions() -> Outcome {
    let mut worst = 0.0f64;
    for m in [fibonacci(), ising()] {
        for n in 0..=3 {
            let table = genus_dim_table(&m, n, 4).map_err(|e| e.to_string())?;
            let f = max_genfun(&m, n).map_err(|e| e.to_string())?;
            for g in 0..=4 {
                let scale = m.delta().powi(2 - n as i32 - 2 * g as i32);
                for x in m.tuples(n) {
                    let err = (f.get(&x).series_coeff(g) - scale * table.get(&x, g) as f64).norm();
                    worst = worst.max(err);
                    ensure(err < 1e-7, || format!("{} n={n} g={g} {x:?}: err {err:.3e}", m.name()))?;
                }
            }
        }
    }
    Ok(format!("through z^4, max residual {worst:.2e}"))
}

fn c7_normalization_oracle() -> Outcome {
    let mut worst = 0.0f64;
    for m in [fibonacci(), ising()] {
        let rd = build_recoupling(&m).map_err(|e| e.to_string())?;
        for n in 1..=5 {
            let cyc = cycle_graph(n).unwrap();
            let dip = dipole_graph(n).unwrap();
            for x in m.tuples(n) {
                let ghz_v = if x.iter().all(|&v| v == x[0]) { m.dim(x[0]).powi(2 - n as i32) } else { 0.0 };
                let labels: Vec<Label> = x.iter().map(|&i| Label(i)).collect();
                let max_v = m.delta().powi(2 - n as i32) * fusion_dim_hom_unit(&m, &labels).unwrap() as f64;
                let a = graph_coefficient(&m, &rd, &cyc, &x).map_err(|e| e.to_string())?;
                let b = graph_coefficient(&m, &rd, &dip, &x).map_err(|e| e.to_string())?;
                worst = worst.max((a - ghz_v).abs()).max((b - max_v).abs());
                ensure((a - ghz_v).abs() < 1e-9, || format!("{} cycle {x:?}: {a} vs {ghz_v}", m.name()))?;
                ensure((b - max_v).abs() < 1e-9, || format!("{} dipole {x:?}: {b} vs {max_v}", m.name()))?;
            }
        }
    }
    Ok(format!("n<=5, max residual {worst:.2e}"))
}

fn c8_six_j_self_duality() -> Outcome {
    let mut parts = Vec::new();
    for m in [fibonacci(), ising(), su2_level(2).unwrap(), su2_level(3).unwrap()] {
        let rd = build_recoupling(&m).map_err(|e| e.to_string())?;
        let r = m.rank();
        let t = tet_table(&m, &rd);
        let mut worst = 0.0f64;
        let mut count = 0;
        for x in TupleIter::new(r, 6) {
            let lhs = s_sum(&m, &t, 6, &x);
            // The printed pattern (X6 X5 X4; X̄3 X̄2 X̄1).
            let d = |i: usize| m.dual(x[i]);
            let relabeled = [x[5], x[4], x[3], d(2), d(1), d(0)];
            let rhs = t[flat(&relabeled, r)];
            worst = worst.max((lhs - rhs).norm());
            count += 1;
        }
        ensure(worst < 1e-8, || format!("{}: residual {worst:.3e}", m.name()))?;
        parts.push(format!("{} {count}", m.name()));
    }
    Ok(format!("cases: {}", parts.join(", ")))
}

fn c9_wheels() -> Outcome {
    let mut worst = 0.0f64;
    for m in [fibonacci(), ising()] {
        let rd = build_recoupling(&m).map_err(|e| e.to_string())?;
        for n in 2..=3 {
            let w = wheel_graph(n).unwrap();
            let primal = reducer_table(&m, &rd, &w);
            let dual = reducer_table(&m, &rd, &dual_graph(&w).unwrap());
            for (i, x) in TupleIter::new(m.rank(), 2 * n).enumerate() {
                let err = (s_sum(&m, &primal, 2 * n, &x) - dual[i]).norm();
                worst = worst.max(err);
                ensure(err < 1e-8, || format!("{} wheel {n} {x:?}: err {err:.3e}", m.name()))?;
            }
            let report = check_self_duality(&m, &rd, &w, DualityOptions::default()).map_err(|e| e.to_string())?;
            ensure(report.passed(), || first_failure(&report))?;
        }
        let w3 = reducer_table(&m, &rd, &wheel_graph(3).unwrap());
        let tet = tet_table(&m, &rd);
        let diff = w3.iter().zip(&tet).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        ensure(diff < 1e-9, || format!("{}: wheel 3 vs tetrahedron differ by {diff:.3e}", m.name()))?;
    }
    Ok(format!("max residual {worst:.2e}; wheel 3 equals the tetrahedron"))
}

fn c10_graph_engine() -> Outcome {
    let mut graphs: Vec<PlanarGraph> = Vec::new();
    graphs.extend((1..=5).map(|n| cycle_graph(n).unwrap()));
    graphs.extend((1..=5).map(|n| dipole_graph(n).unwrap()));
    graphs.extend((2..=6).map(|n| wheel_graph(n).unwrap()));
    graphs.push(tetrahedron_graph());
    graphs.push(platonic("cube").unwrap());
    graphs.push(platonic("octahedron").unwrap());
    for g in &graphs {
        ensure(g.genus() == 0, || format!("{} has genus {}", g.name(), g.genus()))?;
        let dd = dual_graph(&dual_graph(g).unwrap()).unwrap();
        ensure(ordered_oriented_isomorphic(&dd, g), || format!("{}: dual of dual differs", g.name()))?;
    }
    // Dual edge k goes to edge 7-k, reversed for the spokes 4..6.
    let t = tetrahedron_graph();
    let d = dual_graph(&t).unwrap();
    let pattern: Vec<(usize, bool)> = (0..6).map(|k| (5 - k, k >= 3)).collect();
    let found = map_isomorphisms(&d, &t, true)
        .iter()
        .any(|iso| iso.edge_images(&d, &t) == pattern);
    ensure(found, || "dual tetrahedron does not carry the 6j relabeling".into())?;
    Ok(format!("{} maps, dual tetrahedron relabeling k -> 7-k", graphs.len()))
}

fn c11_positivity_symmetry() -> Outcome {
    let mut min = f64::INFINITY;
    let mut worst = 0.0f64;
    for m in [fibonacci(), pointed_z(3).unwrap()] {
        let rd = build_recoupling(&m).map_err(|e| e.to_string())?;
        let t = tetrahedron_graph();
        let rev = t.reverse_all_edges();
        for x in m.tuples(6) {
            let v = graph_coefficient(&m, &rd, &t, &x).map_err(|e| e.to_string())?;
            min = min.min(v);
            let vr = graph_coefficient(&m, &rd, &rev, &x).map_err(|e| e.to_string())?;
            worst = worst.max((v - vr).abs());
            for j in 0..6 {
                let mut y = x.clone();
                y[j] = m.dual(y[j]);
                let a = graph_coefficient(&m, &rd, &t.reverse_edge(j), &x).map_err(|e| e.to_string())?;
                let b = graph_coefficient(&m, &rd, &t, &y).map_err(|e| e.to_string())?;
                worst = worst.max((a - b).abs());
            }
        }
        for n in 2..=4 {
            for g in [wheel_graph(n).unwrap(), dual_graph(&wheel_graph(n).unwrap()).unwrap()] {
                for x in m.tuples(2 * n) {
                    min = min.min(graph_coefficient(&m, &rd, &g, &x).map_err(|e| e.to_string())?);
                }
            }
        }
    }
    ensure(min >= -1e-9, || format!("negative coefficient {min:.3e}"))?;
    ensure(worst < 1e-9, || format!("symmetry residual {worst:.3e}"))?;
    Ok(format!("min coefficient {min:.2e}, symmetry residual {worst:.2e}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("modular data suite", c1_modular_data),
        ("Fourier duality on 1-quons", c2_fourier_duality),
        ("Verlinde diagonalization", c3_verlinde_diagonalization),
        ("biprojection / Mueger duality and Gannon", c4_biprojections),
        ("generalized Verlinde formula", c5_generalized_verlinde),
        ("generating functions", c6_generating_functions),
        ("state-sum normalization oracle", c7_normalization_oracle),
        ("6j self-duality", c8_six_j_self_duality),
        ("wheel self-duality", c9_wheels),
        ("graph engine", c10_graph_engine),
        ("positivity and symmetry", c11_positivity_symmetry),
    ];
    let mut failed = 0;
    let start = Instant::now();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
