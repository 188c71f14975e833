//! Command-line front end. `cli_main` returns the process exit code:
//! 0 when every check passes, 1 when a check fails, 2 on usage or input errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fourier::{
    check_biprojection_duality, check_fourier_duality, check_gannon_inequality,
    check_verlinde_diagonalization, donoho_stark_products, enumerate_fusion_subsets,
    mueger_center, projection, supp, DEFAULT_SEED, DEFAULT_SUPPORT_TOL,
};
use crate::graph::{
    cycle_graph, dipole_graph, dual_graph, map_isomorphisms, ordered_oriented_isomorphic, platonic,
    tetrahedron_graph, wheel_graph, PlanarGraph,
};
use crate::graphic::{
    check_genfun, check_graph_duality_with, check_max_equals_s_ghz, check_self_duality,
    fusion_genus_dim, ghz, ghz_genfun, graph_coefficient, max_genfun, max_state,
    self_dual_relabelings, verlinde_dim, DualityOptions, DEFAULT_DUALITY_SAMPLES,
};
use crate::io::{load_category, parse_labels, parse_map, serialize_map, LoadedCategory};
use crate::mtc::{verify_modular_data, Label, MtcData};
use crate::quon::{sft, Quon};
use crate::recoupling::checked;
use crate::report::{CheckResult, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "quon", version, about = "Quon Fourier algebra over modular tensor categories")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Tolerance for every residual check (each command has its own default).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Axiom suite for a category file or built-in name.
    Verify { category: String },
    /// Fusion-closed subsets, biprojections, Müger centers and support products.
    Subcategories { category: String },
    /// Generalized Verlinde sweep: dim(X⃗, g) against the S-matrix sum.
    Verlinde {
        category: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        g: usize,
    },
    /// GHZ and Max states at genus g and the residual of Max = S⃗ GHZ.
    GhzMax {
        category: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: usize,
    },
    /// Generating functions of GHZ_n and Max_n in z.
    Genfun {
        category: String,
        #[arg(long)]
        n: usize,
        /// Highest power of z compared against the genus table.
        #[arg(long, default_value_t = 4)]
        terms: usize,
    },
    /// Fourier duality of a graph and its dual, with the self-dual relabeling when there is one.
    Selfdual {
        category: String,
        /// tetrahedron, wheel:<n>, cycle:<n>, dipole:<n> or a map file.
        #[arg(long)]
        graph: String,
        /// Dual-side tuples drawn when the exhaustive sweep exceeds its guard.
        #[arg(long, default_value_t = DEFAULT_DUALITY_SAMPLES)]
        samples: usize,
    },
    /// One graph coefficient ⟨X⃗|T_G⟩.
    Coefficient {
        category: String,
        #[arg(long)]
        graph: String,
        /// Edge labels by name or index, in edge order.
        #[arg(long, num_args = 1.., required = true)]
        labels: Vec<String>,
    },
    /// Dual of a planar map file.
    DualGraph { mapfile: String },
}

struct Out<'a> {
    w: &'a mut (dyn Write + Send),
    format: Format,
}

impl Out<'_> {
    fn text(&mut self, line: impl AsRef<str>) -> std::io::Result<()> {
        if self.format == Format::Text {
            writeln!(self.w, "{}", line.as_ref())?;
        }
        Ok(())
    }

    fn record(&mut self, value: serde_json::Value) -> std::io::Result<()> {
        if self.format == Format::JsonLines {
            writeln!(self.w, "{value}")?;
        }
        Ok(())
    }

    fn header(&mut self, command: &str, cat: Option<&LoadedCategory>, seed: u64, tol: f64) -> std::io::Result<()> {
        let version = env!("CARGO_PKG_VERSION");
        let (name, fp) = cat.map_or((String::new(), String::new()), |c| (c.mtc.name().to_string(), c.fingerprint()));
        self.text(format!(
            "# quon {version} {command} category={name} fingerprint={fp} seed={seed} tol={tol:e}"
        ))?;
        self.record(json!({
            "record": "header",
            "version": version,
            "command": command,
            "category": name,
            "fingerprint": fp,
            "seed": seed,
            "tol": tol,
        }))
    }

    fn data(&mut self, kind: &str, text: String, value: serde_json::Value) -> std::io::Result<()> {
        self.text(text)?;
        self.record(json!({ "record": "data", "kind": kind, "value": value }))
    }

    fn report(&mut self, mut report: VerificationReport) -> std::io::Result<bool> {
        report.sort();
        for c in &report.checks {
            self.text(format_check(c))?;
            self.record(json!({
                "record": "check",
                "check": c.id,
                "category": report.category,
                "params": c.params,
                "max_error": c.max_error,
                "tolerance": c.tolerance,
                "passed": c.passed,
                "sampled": c.sampled,
                "note": c.note,
            }))?;
        }
        let failed = report.failures().count();
        self.text(format!(
            "{}: {} checks, {} failed, max error {:.3e}",
            report.title,
            report.checks.len(),
            failed,
            report.max_error()
        ))?;
        Ok(report.passed())
    }
}

fn format_check(c: &CheckResult) -> String {
    let mut s = format!(
        "{} {} [{}] max_error={:.3e} tol={:.1e}",
        if c.passed { "PASS" } else { "FAIL" },
        c.id,
        c.params,
        c.max_error,
        c.tolerance
    );
    if c.sampled {
        s.push_str(" SAMPLED");
    }
    if let Some(note) = &c.note {
        s.push_str(&format!(" ({note})"));
    }
    s
}

fn complex_str(z: Complex64) -> String {
    if z.im.abs() < 1e-12 {
        format!("{:.12}", z.re)
    } else {
        format!("{:.12}{:+.12}i", z.re, z.im)
    }
}

fn tuple_names(m: &MtcData, x: &[usize]) -> String {
    if x.is_empty() {
        return "()".into();
    }
    x.iter().map(|&i| m.label_name(Label(i))).collect::<Vec<_>>().join(" ")
}

fn write_state(out: &mut Out<'_>, m: &MtcData, kind: &str, q: &Quon) -> std::io::Result<()> {
    out.text(format!("{kind}:"))?;
    for x in m.tuples(q.order()) {
        let v = q.get(&x);
        if v.norm() > 1e-14 {
            out.data(
                kind,
                format!("  |{}> {}", tuple_names(m, &x), complex_str(v)),
                json!({ "labels": tuple_names(m, &x), "re": v.re, "im": v.im }),
            )?;
        }
    }
    Ok(())
}

/// Parses `tetrahedron`, `wheel:<n>`, `cycle:<n>`, `dipole:<n>`, a platonic
/// solid name, or a map file path.
pub fn graph_from_spec(spec: &str) -> Result<PlanarGraph> {
    if std::path::Path::new(spec).is_file() {
        return parse_map(&std::fs::read_to_string(spec)?);
    }
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    let param = || -> Result<usize> {
        arg.and_then(|a| a.parse().ok())
            .ok_or_else(|| Error::Unsupported(format!("graph {spec:?} needs a numeric parameter")))
    };
    match head {
        "tetrahedron" => Ok(tetrahedron_graph()),
        "wheel" => wheel_graph(param()?),
        "cycle" => cycle_graph(param()?),
        "dipole" => dipole_graph(param()?),
        "cube" | "octahedron" | "dodecahedron" | "icosahedron" => platonic(head),
        _ => Err(Error::Unsupported(format!("unknown graph {spec:?}"))),
    }
}

fn run(cli: Cli, w: &mut (dyn Write + Send)) -> Result<bool> {
    let g = &cli.global;
    let mut out = Out { w, format: g.format };
    let seed = g.seed;
    match cli.command {
        Command::Verify { category } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-9);
            out.header("verify", Some(&cat), seed, tol)?;
            let mut report = verify_modular_data(m, tol)?.with_seed(seed);
            report.title = format!("verify {}", m.name());
            report.extend(check_fourier_duality(m, 100, seed, tol)?);
            report.extend(check_verlinde_diagonalization(m, tol)?);
            match cat.recoupling() {
                Ok(rd) => report.extend(rd.validate(tol, seed)),
                Err(e) => out.text(format!("# recoupling skipped: {e}"))?,
            }
            Ok(out.report(report)?)
        }
        Command::Subcategories { category } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-8);
            out.header("subcategories", Some(&cat), seed, tol)?;
            let d2 = m.mu();
            for k in enumerate_fusion_subsets(m)? {
                let center = mueger_center(m, &k, DEFAULT_SUPPORT_TOL);
                let p = projection(m, &k);
                let sp = supp(m, &p, DEFAULT_SUPPORT_TOL)?;
                let sq = supp(m, &sft(m, &p)?, DEFAULT_SUPPORT_TOL)?;
                out.data(
                    "subcategory",
                    format!(
                        "K={} dim={:.6} center={} Supp(P_K)={:.6} Supp(sft P_K)={:.6} product/mu={:.6}",
                        k.display(m),
                        k.dimension(m),
                        center.display(m),
                        sp,
                        sq,
                        sp * sq / d2
                    ),
                    json!({
                        "subset": k.display(m).to_string(),
                        "center": center.display(m).to_string(),
                        "dimension": k.dimension(m),
                        "supp": sp,
                        "supp_fourier": sq,
                    }),
                )?;
            }
            for (x, p) in donoho_stark_products(m, DEFAULT_SUPPORT_TOL)? {
                out.data(
                    "donoho_stark",
                    format!("Supp(b_{0})·Supp(sft b_{0}) = {p:.6} (mu = {d2:.6})", m.label_name(x)),
                    json!({ "label": m.label_name(x), "product": p }),
                )?;
            }
            let mut report = check_biprojection_duality(m, tol)?.with_seed(seed);
            report.title = format!("subcategories {}", m.name());
            report.extend(check_gannon_inequality(m, tol.max(1e-7)).report);
            Ok(out.report(report)?)
        }
        Command::Verlinde { category, n, g: genus } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-6);
            out.header("verlinde", Some(&cat), seed, tol)?;
            for x in m.tuples(n) {
                let exact = fusion_genus_dim(m, &x, genus);
                let v = verlinde_dim(m, &x, genus);
                out.data(
                    "dim",
                    format!("dim({}; g={genus}) = {exact}  S-sum {}", tuple_names(m, &x), complex_str(v)),
                    json!({ "labels": tuple_names(m, &x), "g": genus, "dim": exact as u64, "s_sum_re": v.re, "s_sum_im": v.im }),
                )?;
            }
            let mut report = check_max_equals_s_ghz(m, n, genus, tol)?.with_seed(seed);
            report.title = format!("verlinde {} n={n} g={genus}", m.name());
            Ok(out.report(report)?)
        }
        Command::GhzMax { category, n, g: genus } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-9);
            out.header("ghz-max", Some(&cat), seed, tol)?;
            write_state(&mut out, m, "GHZ", &ghz(m, n, genus))?;
            write_state(&mut out, m, "Max", &max_state(m, n, genus)?)?;
            let mut report = check_max_equals_s_ghz(m, n, genus, tol)?.with_seed(seed);
            report.title = format!("ghz-max {} n={n} g={genus}", m.name());
            Ok(out.report(report)?)
        }
        Command::Genfun { category, n, terms } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-7);
            out.header("genfun", Some(&cat), seed, tol)?;
            for (kind, table) in [("GHZ", ghz_genfun(m, n)?), ("Max", max_genfun(m, n)?)] {
                out.text(format!("{kind}_{n}(z):"))?;
                for (x, f) in table.nonzero() {
                    out.data(
                        kind,
                        format!("  |{}> {f}", tuple_names(m, &x)),
                        json!({ "labels": tuple_names(m, &x), "function": f.to_string() }),
                    )?;
                }
            }
            let mut report = check_genfun(m, n, terms, tol)?.with_seed(seed);
            report.title = format!("genfun {} n={n}", m.name());
            Ok(out.report(report)?)
        }
        Command::Selfdual { category, graph, samples } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-8);
            out.header("selfdual", Some(&cat), seed, tol)?;
            let gr = graph_from_spec(&graph)?;
            let rd = checked(cat.recoupling()?)?;
            let opts = DualityOptions { tol, seed, samples };
            let report = if self_dual_relabelings(&gr)?.is_empty() {
                out.text(format!("# {} is not self-dual; checking T_dual = S T_G", gr.name()))?;
                check_graph_duality_with(m, &rd, &gr, opts)?
            } else {
                check_self_duality(m, &rd, &gr, opts)?
            };
            Ok(out.report(report)?)
        }
        Command::Coefficient { category, graph, labels } => {
            let cat = load_category(&category)?;
            let m = &cat.mtc;
            let tol = g.tol.unwrap_or(1e-9);
            out.header("coefficient", Some(&cat), seed, tol)?;
            let gr = graph_from_spec(&graph)?;
            let rd = checked(cat.recoupling()?)?;
            let x: Vec<usize> = parse_labels(m, &labels)?.into_iter().map(Label::index).collect();
            let v = graph_coefficient(m, &rd, &gr, &x)?;
            out.data(
                "coefficient",
                format!("<{}|T_{}> = {v:.15}", tuple_names(m, &x), gr.name()),
                json!({ "graph": gr.name(), "labels": tuple_names(m, &x), "value": v }),
            )?;
            let mut report = VerificationReport::new(format!("coefficient {}", gr.name()), m.name(), tol);
            report.push(CheckResult::from_error("coefficient.nonnegative", tuple_names(m, &x), (-v).max(0.0), tol));
            Ok(out.report(report)?)
        }
        Command::DualGraph { mapfile } => {
            let tol = g.tol.unwrap_or(0.0);
            out.header("dual-graph", None, seed, tol)?;
            let gr = parse_map(&std::fs::read_to_string(&mapfile)?)?;
            let dual = dual_graph(&gr)?;
            out.text(format!(
                "# {}: V={} E={} F={} genus={}",
                gr.name(),
                gr.num_vertices(),
                gr.num_edges(),
                gr.num_faces(),
                gr.genus()
            ))?;
            let text = serialize_map(&dual.clone().with_name(format!("{}_dual", gr.name())));
            for line in text.lines() {
                out.text(line)?;
            }
            out.record(json!({ "record": "data", "kind": "dual_map", "value": text }))?;
            let mut report = VerificationReport::new(format!("dual-graph {}", gr.name()), gr.name(), tol);
            let params = format!("map={}", gr.name());
            report.push(CheckResult::from_bool(
                "dual_graph.involution",
                &params,
                ordered_oriented_isomorphic(&dual_graph(&dual)?, &gr),
            ));
            report.push(CheckResult::from_bool(
                "dual_graph.genus_preserved",
                &params,
                dual.genus() == gr.genus(),
            ));
            let self_dual = !map_isomorphisms(&dual, &gr, true).is_empty();
            let mut c = CheckResult::from_bool("dual_graph.self_dual", &params, true);
            if let Some(pi) = self_dual_relabelings(&gr)?.first() {
                let pattern: Vec<String> = pi
                    .edges
                    .iter()
                    .map(|&(h, rev)| format!("{}{}", h + 1, if rev { "'" } else { "" }))
                    .collect();
                c = c.with_note(format!("self-dual, dual edge k -> [{}]", pattern.join(" ")));
            } else {
                c = c.with_note(if self_dual { "self-dual" } else { "not self-dual" });
            }
            report.push(c);
            Ok(out.report(report)?)
        }
    }
}

/// Runs the CLI on `argv` (including the program name), writing to `w`.
pub fn cli_run<I, T>(argv: I, w: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let threads = cli.global.threads;
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match pool.install(|| run(cli, w)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Entry point used by the `quon` binary.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut stdout = std::io::stdout();
    cli_run(argv, &mut stdout)
}
