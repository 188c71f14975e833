//! State-sum evaluation of labeled planar networks.
//!
//! Every vertex is an orthonormal vector of its hom space, so the network
//! value is only defined up to phase and the reducer works directly with
//! `Σ_α |Z(α)|²`, the sum running over orthonormal bases at vertices of
//! valence ≥ 4. Local moves and their factors on `|Z|²`:
//!
//! * unit-labeled edge: deleted, factor 1;
//! * isolated vertex: factor 1; univalent vertex: 0 (its leg is not the unit);
//! * bivalent vertex between two edges `x`, `x̄`: edges merged, factor `1/d(x)`;
//!   bivalent vertex on a loop `x`: factor `d(x)`;
//! * trivalent vertex on an inadmissible triple or carrying a loop: 0;
//! * bubble between two trivalent vertices: replaced by a bivalent vertex,
//!   factor `1/d(t)` for the leg label `t`;
//! * triangle of trivalent vertices: replaced by one trivalent vertex,
//!   factor `|Tet|²` of the tetrahedron closing it;
//! * vertex of valence ≥ 4: split off two consecutive legs `p, p'` through a
//!   new edge `t`, summing `d(t) · (…)` over `t ∈ p ⊗ p'`.

use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::mtc::MtcData;
use crate::recoupling::{oriented_tet_squared, RecouplingData, TetEdge};

/// Which corner to split when no bubble or triangle is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitStrategy {
    /// First corner of the first smallest face.
    #[default]
    First,
    /// Last corner of the last smallest face.
    Last,
}

#[derive(Debug, Clone)]
struct Net {
    pair: Vec<usize>,
    label: Vec<usize>,
    vertex_of: Vec<usize>,
    verts: Vec<Option<Vec<usize>>>,
}

impl Net {
    fn from_graph(g: &PlanarGraph, m: &MtcData, labels: &[usize]) -> Self {
        let n = g.num_darts();
        let mut label = vec![0; n];
        for (k, &x) in labels.iter().enumerate() {
            label[g.tail(k)] = x;
            label[g.head(k)] = m.dual(x);
        }
        Self {
            pair: (0..n).map(|d| g.pair(d)).collect(),
            label,
            vertex_of: (0..n).map(|d| g.vertex_of(d)).collect(),
            verts: g.vertices().iter().cloned().map(Some).collect(),
        }
    }

    fn rotation(&self, v: usize) -> &[usize] {
        self.verts[v].as_deref().expect("live vertex")
    }

    fn next(&self, d: usize) -> usize {
        let r = self.rotation(self.vertex_of[d]);
        let i = r.iter().position(|&x| x == d).expect("dart at its vertex");
        r[(i + 1) % r.len()]
    }

    fn live_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.verts
            .iter()
            .enumerate()
            .filter_map(|(v, r)| r.as_ref().map(|_| v))
    }

    fn live_darts(&self) -> impl Iterator<Item = usize> + '_ {
        self.verts.iter().flatten().flatten().copied()
    }

    fn remove_dart(&mut self, d: usize) {
        let v = self.vertex_of[d];
        if let Some(r) = self.verts[v].as_mut() {
            r.retain(|&x| x != d);
        }
    }

    fn new_dart(&mut self, label: usize, vertex: usize) -> usize {
        self.pair.push(usize::MAX);
        self.label.push(label);
        self.vertex_of.push(vertex);
        self.pair.len() - 1
    }

    fn new_vertex(&mut self, darts: Vec<usize>) -> usize {
        let v = self.verts.len();
        for &d in &darts {
            self.vertex_of[d] = v;
        }
        self.verts.push(Some(darts));
        v
    }

    fn faces(&self) -> Vec<Vec<usize>> {
        let darts: Vec<usize> = {
            let mut ds: Vec<usize> = self.live_darts().collect();
            ds.sort_unstable();
            ds
        };
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &start in &darts {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while seen.insert(d) {
                face.push(d);
                d = self.next(self.pair[d]);
            }
            out.push(face);
        }
        out
    }
}

struct Reducer<'a> {
    m: &'a MtcData,
    rd: &'a RecouplingData,
    strategy: SplitStrategy,
}

enum Step {
    Continue,
    Zero,
}

impl Reducer<'_> {
    fn dim(&self, x: usize) -> f64 {
        self.m.dim(x)
    }

    fn reduce(&self, mut net: Net) -> Result<f64> {
        let mut factor = 1.0;
        loop {
            let unit_dart = net.live_darts().find(|&d| net.label[d] == 0);
            if let Some(d) = unit_dart {
                let p = net.pair[d];
                net.remove_dart(d);
                net.remove_dart(p);
                continue;
            }
            match self.small_vertices(&mut net, &mut factor) {
                Some(Step::Zero) => return Ok(0.0),
                Some(Step::Continue) => continue,
                None => {}
            }
            if net.live_vertices().next().is_none() {
                return Ok(factor);
            }
            for v in net.live_vertices() {
                let r = net.rotation(v);
                if r.len() == 3 {
                    if r.iter().any(|&d| net.vertex_of[net.pair[d]] == v) {
                        return Ok(0.0);
                    }
                    let [x, y, z] = [r[0], r[1], r[2]].map(|d| net.label[d]);
                    if !self.m.ring().admissible(x, y, z) {
                        return Ok(0.0);
                    }
                }
            }
            let faces = net.faces();
            if let Some(f) = self.bubble(&mut net, &faces) {
                factor *= f;
                continue;
            }
            if let Some(f) = self.triangle(&mut net, &faces)? {
                if f == 0.0 {
                    return Ok(0.0);
                }
                factor *= f;
                continue;
            }
            return Ok(factor * self.split(&net, &faces)?);
        }
    }

    /// Removes one vertex of valence ≤ 2 if there is any.
    fn small_vertices(&self, net: &mut Net, factor: &mut f64) -> Option<Step> {
        let v = net
            .live_vertices()
            .find(|&v| net.rotation(v).len() <= 2)?;
        let r = net.rotation(v).to_vec();
        match r.len() {
            0 => {
                net.verts[v] = None;
                Some(Step::Continue)
            }
            1 => Some(Step::Zero),
            _ => {
                let (d1, d2) = (r[0], r[1]);
                if net.label[d2] != self.m.dual(net.label[d1]) {
                    return Some(Step::Zero);
                }
                let x = net.label[d1];
                if net.pair[d1] == d2 {
                    *factor *= self.dim(x);
                } else {
                    let (o1, o2) = (net.pair[d1], net.pair[d2]);
                    net.pair[o1] = o2;
                    net.pair[o2] = o1;
                    *factor /= self.dim(x);
                }
                net.verts[v] = None;
                Some(Step::Continue)
            }
        }
    }

    fn third_dart(net: &Net, v: usize, a: usize, b: usize) -> usize {
        *net.rotation(v)
            .iter()
            .find(|&&d| d != a && d != b)
            .expect("trivalent vertex")
    }

    fn bubble(&self, net: &mut Net, faces: &[Vec<usize>]) -> Option<f64> {
        for f in faces.iter().filter(|f| f.len() == 2) {
            let (d1, d2) = (f[0], f[1]);
            let (u, w) = (net.vertex_of[d1], net.vertex_of[d2]);
            if u == w || net.rotation(u).len() != 3 || net.rotation(w).len() != 3 {
                continue;
            }
            if net.pair[d1] == d2 {
                continue;
            }
            let lu = Self::third_dart(net, u, d1, net.pair[d2]);
            let lw = Self::third_dart(net, w, d2, net.pair[d1]);
            let t = net.label[lu];
            net.verts[u] = None;
            net.verts[w] = None;
            net.new_vertex(vec![lu, lw]);
            return Some(1.0 / self.dim(t));
        }
        None
    }

    fn triangle(&self, net: &mut Net, faces: &[Vec<usize>]) -> Result<Option<f64>> {
        for f in faces.iter().filter(|f| f.len() == 3) {
            let (d1, d2, d3) = (f[0], f[1], f[2]);
            let (p, q, r) = (net.vertex_of[d1], net.vertex_of[d2], net.vertex_of[d3]);
            if p == q || q == r || p == r {
                continue;
            }
            if [p, q, r].iter().any(|&v| net.rotation(v).len() != 3) {
                continue;
            }
            let lp = Self::third_dart(net, p, d1, net.pair[d3]);
            let lq = Self::third_dart(net, q, d2, net.pair[d1]);
            let lr = Self::third_dart(net, r, d3, net.pair[d2]);
            let l = |d: usize| net.label[d];
            let edges = [
                TetEdge { tail: 0, head: 1, label: l(d1) },
                TetEdge { tail: 1, head: 2, label: l(d2) },
                TetEdge { tail: 2, head: 0, label: l(d3) },
                TetEdge { tail: 0, head: 3, label: l(lp) },
                TetEdge { tail: 1, head: 3, label: l(lq) },
                TetEdge { tail: 2, head: 3, label: l(lr) },
            ];
            let value = oriented_tet_squared(self.rd, &edges)?;
            net.verts[p] = None;
            net.verts[q] = None;
            net.verts[r] = None;
            net.new_vertex(vec![lp, lr, lq]);
            return Ok(Some(value));
        }
        Ok(None)
    }

    fn split(&self, net: &Net, faces: &[Vec<usize>]) -> Result<f64> {
        let min = faces.iter().map(Vec::len).min().unwrap_or(0);
        let mut corners = faces.iter().filter(|f| f.len() == min).flat_map(|f| {
            f.iter().filter_map(|&d| {
                let p = net.pair[d];
                let w = net.vertex_of[p];
                (net.rotation(w).len() >= 4).then(|| (w, p, net.next(p)))
            })
        });
        let corner = match self.strategy {
            SplitStrategy::First => corners.next(),
            SplitStrategy::Last => corners.last(),
        };
        let Some((w, p, p2)) = corner.or_else(|| {
            // Smallest faces may touch only trivalent vertices; fall back to any face.
            faces.iter().flat_map(|f| f.iter()).find_map(|&d| {
                let p = net.pair[d];
                let w = net.vertex_of[p];
                (net.rotation(w).len() >= 4).then(|| (w, p, net.next(p)))
            })
        }) else {
            return Err(Error::UnsupportedGraph(
                "no bubble, triangle or splittable vertex left; the network needs a general F-move"
                    .into(),
            ));
        };
        let (x, y) = (net.label[p], net.label[p2]);
        let mut total = 0.0;
        for t in self.m.ring().fuse(x, y) {
            let mut branch = net.clone();
            let c = branch.verts.len();
            let tc = branch.new_dart(self.m.dual(t), c);
            let tw = branch.new_dart(t, w);
            branch.pair[tc] = tw;
            branch.pair[tw] = tc;
            let rot = branch.verts[w].as_mut().expect("live vertex");
            let i = rot.iter().position(|&d| d == p).expect("corner dart");
            rot[i] = tw;
            rot.retain(|&d| d != p2);
            branch.new_vertex(vec![p, p2, tc]);
            total += self.dim(t) * self.reduce(branch)?;
        }
        Ok(total)
    }
}

fn check_inputs(m: &MtcData, rd: &RecouplingData, g: &PlanarGraph, labels: &[usize]) -> Result<()> {
    if rd.category().name() != m.name() || rd.category().rank() != m.rank() {
        return Err(Error::CategoryMismatch {
            left: m.name().to_string(),
            right: rd.category().name().to_string(),
        });
    }
    if labels.len() != g.num_edges() {
        return Err(Error::ShapeMismatch {
            what: "edge labels",
            expected: g.num_edges(),
            found: labels.len(),
        });
    }
    if let Some(&x) = labels.iter().find(|&&x| x >= m.rank()) {
        return Err(Error::InvalidLabel { index: x, rank: m.rank() });
    }
    if g.genus() != 0 {
        return Err(Error::UnsupportedGraph(format!(
            "{} has genus {}; only spherical networks are evaluated",
            g.name(),
            g.genus()
        )));
    }
    Ok(())
}

/// `Σ_α |Z(G; labels, α)|²` with orthonormal vertices.
pub fn network_squared(
    m: &MtcData,
    rd: &RecouplingData,
    g: &PlanarGraph,
    labels: &[usize],
    strategy: SplitStrategy,
) -> Result<f64> {
    check_inputs(m, rd, g, labels)?;
    let reducer = Reducer { m, rd, strategy };
    reducer.reduce(Net::from_graph(g, m, labels))
}

/// `Π_v δ^{1 − k_v/2}`.
pub fn vertex_prefactor(m: &MtcData, g: &PlanarGraph) -> f64 {
    (0..g.num_vertices())
        .map(|v| m.delta().powf(1.0 - g.degree(v) as f64 / 2.0))
        .product()
}

/// `⟨X⃗|T_G⟩ = Π_v δ^{1 − k_v/2} · Σ_α |Z(G; X⃗, α)|²`.
pub fn graph_coefficient(m: &MtcData, rd: &RecouplingData, g: &PlanarGraph, labels: &[usize]) -> Result<f64> {
    graph_coefficient_with(m, rd, g, labels, SplitStrategy::First)
}

pub fn graph_coefficient_with(
    m: &MtcData,
    rd: &RecouplingData,
    g: &PlanarGraph,
    labels: &[usize],
    strategy: SplitStrategy,
) -> Result<f64> {
    Ok(vertex_prefactor(m, g) * network_squared(m, rd, g, labels, strategy)?)
}
