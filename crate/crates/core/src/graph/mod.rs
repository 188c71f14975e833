//! Combinatorial maps with ordered, oriented edges.
//!
//! A map is a set of darts (half-edges) with two permutations: `pair`, the
//! fixed-point-free involution swapping the two ends of an edge, and `rot`,
//! the next dart counterclockwise around the same vertex. Faces are the
//! orbits of `φ = rot ∘ pair`; the orbit of a dart `d` is the face on the
//! right of `d` read from its own vertex outwards.
//!
//! Edge `k` (0-based, displayed as `k + 1`) carries its two darts as
//! `(tail, head)`, which fixes the orientation.

mod families;

pub use families::{
    cycle_graph, dipole_graph, genus_skeleton, platonic, tetrahedron_graph, wheel_graph,
};

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarGraph {
    name: String,
    vertices: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    pair: Vec<usize>,
    rot: Vec<usize>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
}

impl PlanarGraph {
    /// `vertices[v]` lists the darts at `v` counterclockwise; `edges[k]` is
    /// `(tail dart, head dart)` of edge `k`. Darts must be exactly `0..2E`.
    pub fn from_rotation(
        name: impl Into<String>,
        vertices: Vec<Vec<usize>>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let name = name.into();
        let n_darts = 2 * edges.len();
        if edges.is_empty() {
            return Err(Error::InvalidMap(format!("{name}: a map needs at least one edge")));
        }
        let mut pair = vec![usize::MAX; n_darts];
        let mut edge_of = vec![usize::MAX; n_darts];
        for (k, &(t, h)) in edges.iter().enumerate() {
            for d in [t, h] {
                if d >= n_darts {
                    return Err(Error::InvalidMap(format!(
                        "{name}: dart {d} out of range 0..{n_darts}"
                    )));
                }
                if edge_of[d] != usize::MAX {
                    return Err(Error::InvalidMap(format!("{name}: dart {d} used by two edges")));
                }
                edge_of[d] = k;
            }
            if t == h {
                return Err(Error::InvalidMap(format!("{name}: edge {} has one dart", k + 1)));
            }
            pair[t] = h;
            pair[h] = t;
        }
        let mut rot = vec![usize::MAX; n_darts];
        let mut vertex_of = vec![usize::MAX; n_darts];
        for (v, darts) in vertices.iter().enumerate() {
            if darts.is_empty() {
                return Err(Error::InvalidMap(format!("{name}: vertex {v} has no darts")));
            }
            for (i, &d) in darts.iter().enumerate() {
                if d >= n_darts {
                    return Err(Error::InvalidMap(format!(
                        "{name}: dart {d} out of range 0..{n_darts}"
                    )));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(Error::InvalidMap(format!(
                        "{name}: dart {d} appears at two vertices"
                    )));
                }
                vertex_of[d] = v;
                rot[d] = darts[(i + 1) % darts.len()];
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidMap(format!("{name}: dart {d} has no vertex")));
        }
        let g = Self {
            name,
            vertices,
            edges,
            pair,
            rot,
            vertex_of,
            edge_of,
        };
        if !g.is_connected() {
            return Err(Error::InvalidMap(format!("{}: map is not connected", g.name)));
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_darts(&self) -> usize {
        self.pair.len()
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn pair(&self, d: usize) -> usize {
        self.pair[d]
    }

    #[inline]
    pub fn rot(&self, d: usize) -> usize {
        self.rot[d]
    }

    #[inline]
    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    #[inline]
    pub fn edge_of(&self, d: usize) -> usize {
        self.edge_of[d]
    }

    #[inline]
    pub fn tail(&self, k: usize) -> usize {
        self.edges[k].0
    }

    #[inline]
    pub fn head(&self, k: usize) -> usize {
        self.edges[k].1
    }

    #[inline]
    pub fn is_tail(&self, d: usize) -> bool {
        self.edges[self.edge_of[d]].0 == d
    }

    /// Tail and head vertices of edge `k`.
    pub fn endpoints(&self, k: usize) -> (usize, usize) {
        (self.vertex_of[self.edges[k].0], self.vertex_of[self.edges[k].1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    /// Sorted vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.vertices.iter().map(Vec::len).collect();
        out.sort_unstable();
        out
    }

    /// `rot ∘ pair`.
    #[inline]
    pub fn face_step(&self, d: usize) -> usize {
        self.rot[self.pair[d]]
    }

    /// Faces as dart cycles under [`face_step`](Self::face_step), each starting at its smallest dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.num_darts()];
        let mut out = Vec::new();
        for start in 0..self.num_darts() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.face_step(d);
            }
            out.push(face);
        }
        out
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Genus from `V − E + F = 2 − 2g`.
    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && (2 - chi) % 2 == 0);
        ((2 - chi) / 2) as usize
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.num_vertices()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &d in &self.vertices[v] {
                let w = self.vertex_of[self.pair[d]];
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Every cellular map of positive genus has an edge or face that cannot be
    /// shrunk into a disk, so only genus-0 maps are local.
    pub fn check_local(&self) -> Result<()> {
        match self.genus() {
            0 => Ok(()),
            g => Err(Error::NonLocalEmbedding(format!(
                "{} is cellularly embedded in genus {g}",
                self.name
            ))),
        }
    }

    /// Flips the orientation of every edge.
    pub fn reverse_all_edges(&self) -> Self {
        let mut g = self.clone();
        for e in g.edges.iter_mut() {
            *e = (e.1, e.0);
        }
        g
    }

    /// Flips the orientation of edge `k` (0-based).
    pub fn reverse_edge(&self, k: usize) -> Self {
        let mut g = self.clone();
        g.edges[k] = (g.edges[k].1, g.edges[k].0);
        g
    }

    /// The mirror image: every rotation is read clockwise.
    pub fn mirror(&self) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|ds| {
                let mut r = ds.clone();
                r[1..].reverse();
                r
            })
            .collect();
        Self::from_rotation(self.name.clone(), vertices, self.edges.clone()).expect("mirror of a valid map")
    }

    /// Reorders edges: new edge `i` is old edge `order[i]`.
    pub fn permute_edges(&self, order: &[usize]) -> Result<Self> {
        let mut check = order.to_vec();
        check.sort_unstable();
        if check != (0..self.num_edges()).collect::<Vec<_>>() {
            return Err(Error::InvalidMap("edge order is not a permutation".into()));
        }
        let edges = order.iter().map(|&k| self.edges[k]).collect();
        Self::from_rotation(self.name.clone(), self.vertices.clone(), edges)
    }
}

/// The dual map on the sphere.
///
/// Darts are shared with the primal map; the dual rotation is the primal face
/// permutation `rot ∘ pair`, so faces become vertices and `dual ∘ dual` is the
/// identity. Each dual edge keeps its order and runs from the face on the right
/// of the primal edge to the face on its left, i.e. the primal direction turned
/// 90° counterclockwise. Cyclic orders at dual vertices follow the face
/// traversal, which reads them from the opposite side of the surface; the
/// resulting map is the mirror image of the geometric dual.
pub fn dual_graph(g: &PlanarGraph) -> Result<PlanarGraph> {
    g.check_local()?;
    let vertices = g.faces();
    PlanarGraph::from_rotation(format!("dual({})", g.name), vertices, g.edges.clone())
}

/// Same rotation system, same edge order and orientation, up to renaming darts and vertices.
pub fn ordered_oriented_isomorphic(g: &PlanarGraph, h: &PlanarGraph) -> bool {
    if g.num_edges() != h.num_edges() || g.num_vertices() != h.num_vertices() {
        return false;
    }
    let mut sigma = vec![0; g.num_darts()];
    for k in 0..g.num_edges() {
        sigma[g.tail(k)] = h.tail(k);
        sigma[g.head(k)] = h.head(k);
    }
    (0..g.num_darts()).all(|d| sigma[g.rot(d)] == h.rot(sigma[d]))
}

/// A dart bijection `g → h` respecting `pair` and (optionally mirrored) `rot`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapIsomorphism {
    pub darts: Vec<usize>,
    pub mirrored: bool,
}

impl MapIsomorphism {
    /// `(h edge, reversed)` for every edge of `g`.
    pub fn edge_images(&self, g: &PlanarGraph, h: &PlanarGraph) -> Vec<(usize, bool)> {
        (0..g.num_edges())
            .map(|k| {
                let t = self.darts[g.tail(k)];
                (h.edge_of(t), !h.is_tail(t))
            })
            .collect()
    }
}

fn propagate(g: &PlanarGraph, h: &PlanarGraph, root_g: usize, root_h: usize, mirrored: bool) -> Option<Vec<usize>> {
    let n = g.num_darts();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // rot⁻¹ on h for the mirrored case.
    let mut rot_inv = vec![0; n];
    for d in 0..n {
        rot_inv[h.rot(d)] = d;
    }
    let h_rot = |d: usize| if mirrored { rot_inv[d] } else { h.rot(d) };
    sigma[root_g] = root_h;
    used[root_h] = true;
    let mut queue = VecDeque::from([root_g]);
    while let Some(d) = queue.pop_front() {
        let image = sigma[d];
        for (next_g, next_h) in [(g.pair(d), h.pair(image)), (g.rot(d), h_rot(image))] {
            if sigma[next_g] == usize::MAX {
                if used[next_h] {
                    return None;
                }
                sigma[next_g] = next_h;
                used[next_h] = true;
                queue.push_back(next_g);
            } else if sigma[next_g] != next_h {
                return None;
            }
        }
    }
    Some(sigma)
}

/// All isomorphisms of the underlying maps, ignoring edge order and orientation.
pub fn map_isomorphisms(g: &PlanarGraph, h: &PlanarGraph, allow_mirror: bool) -> Vec<MapIsomorphism> {
    if g.num_darts() != h.num_darts() || g.num_vertices() != h.num_vertices() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mirrored in [false, true] {
        if mirrored && !allow_mirror {
            break;
        }
        for root in 0..h.num_darts() {
            if let Some(darts) = propagate(g, h, 0, root, mirrored) {
                out.push(MapIsomorphism { darts, mirrored });
            }
        }
    }
    out
}
