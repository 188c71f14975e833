//! Built-in graph families.

use super::PlanarGraph;
use crate::error::{Error, Result};

fn tail(k: usize) -> usize {
    2 * k
}

fn head(k: usize) -> usize {
    2 * k + 1
}

fn standard_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|k| (tail(k), head(k))).collect()
}

/// `n` vertices on a circle, edge `k` running counterclockwise from `v_{k-1}` to `v_k`.
pub fn cycle_graph(n: usize) -> Result<PlanarGraph> {
    if n == 0 {
        return Err(Error::Unsupported("cycle_graph needs n >= 1".into()));
    }
    // Vertex i sits between edge i-1 (arriving) and edge i (leaving).
    let vertices = (0..n).map(|i| vec![tail(i), head((i + n - 1) % n)]).collect();
    PlanarGraph::from_rotation(format!("cycle:{n}"), vertices, standard_edges(n))
}

/// Two vertices joined by `n` parallel edges, all oriented from the first to the second.
///
/// Edges leave the first vertex in counterclockwise order `1..n`.
pub fn dipole_graph(n: usize) -> Result<PlanarGraph> {
    if n == 0 {
        return Err(Error::Unsupported("dipole_graph needs n >= 1".into()));
    }
    let a = (0..n).map(tail).collect();
    let b = (0..n).rev().map(head).collect();
    PlanarGraph::from_rotation(format!("dipole:{n}"), vec![a, b], standard_edges(n))
}

/// Hub and `n` rim vertices.
///
/// Rim edges `1..n` run counterclockwise from `A_{k-1}` to `A_k`; spokes
/// `n+1..2n` point outwards from the hub to `A_{k-1}`. Both groups are ordered
/// by angle starting at 0°.
pub fn wheel_graph(n: usize) -> Result<PlanarGraph> {
    if n < 2 {
        return Err(Error::Unsupported("wheel_graph needs n >= 2".into()));
    }
    let spoke = |i: usize| n + i;
    let mut vertices: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![tail(i), head(spoke(i)), head((i + n - 1) % n)])
        .collect();
    vertices.push((0..n).map(|i| tail(spoke(i))).collect());
    PlanarGraph::from_rotation(format!("wheel:{n}"), vertices, standard_edges(2 * n))
}

/// The ordered oriented tetrahedron: outer triangle `1, 2, 3` counterclockwise,
/// spokes `4, 5, 6` pointing outwards, each group ordered by angle.
pub fn tetrahedron_graph() -> PlanarGraph {
    // Darts: edge k has tail 2k and head 2k+1 (k = 0..6 for edges 1..6).
    let a0 = vec![0, 7, 5];
    let a1 = vec![2, 9, 1];
    let a2 = vec![4, 11, 3];
    let hub = vec![6, 8, 10];
    PlanarGraph::from_rotation("tetrahedron", vec![a0, a1, a2, hub], standard_edges(6))
        .expect("tetrahedron")
}

/// One vertex carrying `n` contractible loops followed by `g` handle pairs.
///
/// This is the skeleton of the genus-`g` surface with `n` boundary circles.
pub fn genus_skeleton(n: usize, g: usize) -> Result<PlanarGraph> {
    if n + 2 * g == 0 {
        return Err(Error::Unsupported("genus_skeleton needs at least one edge".into()));
    }
    let mut rotation = Vec::new();
    for j in 0..n {
        rotation.extend([tail(j), head(j)]);
    }
    for i in 0..g {
        let a = n + 2 * i;
        let b = a + 1;
        rotation.extend([tail(a), tail(b), head(a), head(b)]);
    }
    PlanarGraph::from_rotation(format!("skeleton:{n}:{g}"), vec![rotation], standard_edges(n + 2 * g))
}

type Vec3 = [f64; 3];

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Builds the map of a convex polyhedron centred at the origin. Edges join
/// nearest neighbours, are ordered lexicographically by vertex index and point
/// from the lower to the higher index.
fn polyhedron(name: &str, points: &[Vec3]) -> Result<PlanarGraph> {
    let n = points.len();
    let dist = |i: usize, j: usize| dot(sub(points[i], points[j]), sub(points[i], points[j])).sqrt();
    let mut min = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            min = min.min(dist(i, j));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (dist(i, j) - min).abs() < 1e-9 * min.max(1.0) {
                edges.push((i, j));
            }
        }
    }
    let mut incident: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
    for (k, &(i, j)) in edges.iter().enumerate() {
        for (v, w, dart) in [(i, j, tail(k)), (j, i, head(k))] {
            let normal = points[v];
            let helper = if normal[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
            let e1 = cross(helper, normal);
            let e2 = cross(normal, e1);
            let out = sub(points[w], points[v]);
            incident[v].push((dot(out, e2).atan2(dot(out, e1)), dart));
        }
    }
    let vertices = incident
        .into_iter()
        .map(|mut ds| {
            ds.sort_by(|a, b| a.0.total_cmp(&b.0));
            ds.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    PlanarGraph::from_rotation(name, vertices, standard_edges(edges.len()))
}

/// `tetrahedron`, `cube`, `octahedron`, `dodecahedron` or `icosahedron`.
pub fn platonic(name: &str) -> Result<PlanarGraph> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let signs = [1.0, -1.0];
    let mut points = Vec::new();
    match name {
        "tetrahedron" => return Ok(tetrahedron_graph()),
        "cube" => {
            for x in signs {
                for y in signs {
                    for z in signs {
                        points.push([x, y, z]);
                    }
                }
            }
        }
        "octahedron" => {
            for axis in 0..3 {
                for s in signs {
                    let mut p = [0.0; 3];
                    p[axis] = s;
                    points.push(p);
                }
            }
        }
        "dodecahedron" => {
            for x in signs {
                for y in signs {
                    for z in signs {
                        points.push([x, y, z]);
                    }
                }
            }
            for s in signs {
                for t in signs {
                    points.push([0.0, s / phi, t * phi]);
                    points.push([s / phi, t * phi, 0.0]);
                    points.push([s * phi, 0.0, t / phi]);
                }
            }
        }
        "icosahedron" => {
            for s in signs {
                for t in signs {
                    points.push([0.0, s, t * phi]);
                    points.push([s, t * phi, 0.0]);
                    points.push([s * phi, 0.0, t]);
                }
            }
        }
        _ => return Err(Error::Unsupported(format!("unknown platonic solid {name:?}"))),
    }
    polyhedron(name, &points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dual_graph, map_isomorphisms, ordered_oriented_isomorphic};

    #[test]
    fn wheel_three_is_the_tetrahedron() {
        assert!(ordered_oriented_isomorphic(&wheel_graph(3).unwrap(), &tetrahedron_graph()));
        assert_eq!(wheel_graph(3).unwrap().vertices(), tetrahedron_graph().vertices());
    }

    #[test]
    fn platonic_counts() {
        for (name, v, e, f) in [
            ("tetrahedron", 4, 6, 4),
            ("cube", 8, 12, 6),
            ("octahedron", 6, 12, 8),
            ("dodecahedron", 20, 30, 12),
            ("icosahedron", 12, 30, 20),
        ] {
            let g = platonic(name).unwrap();
            assert_eq!((g.num_vertices(), g.num_edges(), g.num_faces(), g.genus()), (v, e, f, 0), "{name}");
        }
        assert!(platonic("sphere").is_err());
    }

    #[test]
    fn platonic_duals() {
        let cube = platonic("cube").unwrap();
        let oct = platonic("octahedron").unwrap();
        let d = dual_graph(&cube).unwrap();
        assert_eq!(d.degree_sequence(), oct.degree_sequence());
        assert!(!map_isomorphisms(&d, &oct, true).is_empty());
        let d = dual_graph(&platonic("dodecahedron").unwrap()).unwrap();
        assert!(!map_isomorphisms(&d, &platonic("icosahedron").unwrap(), true).is_empty());
    }

    #[test]
    fn wheels_are_self_dual_as_maps() {
        for n in 2..=7 {
            let w = wheel_graph(n).unwrap();
            assert_eq!(w.genus(), 0);
            let d = dual_graph(&w).unwrap();
            assert!(!map_isomorphisms(&d, &w, true).is_empty(), "n={n}");
        }
    }

    #[test]
    fn parameter_ranges() {
        assert!(cycle_graph(0).is_err());
        assert!(dipole_graph(0).is_err());
        assert!(wheel_graph(1).is_err());
        assert!(genus_skeleton(0, 0).is_err());
    }
}
