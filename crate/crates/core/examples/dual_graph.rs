//! Planar maps: faces, genus, duals and self-dual relabelings.
//!
//! cargo run --example dual_graph

use quon::graph::{dual_graph, map_isomorphisms, ordered_oriented_isomorphic, platonic, tetrahedron_graph, wheel_graph};
use quon::graphic::self_dual_relabelings;
use quon::io::serialize_map;

fn main() -> quon::Result<()> {
    let t = tetrahedron_graph();
    let d = dual_graph(&t)?;
    print!("{}", serialize_map(&d.clone().with_name("dual_tetrahedron")));
    println!("dual of dual is the tetrahedron: {}", ordered_oriented_isomorphic(&dual_graph(&d)?, &t));
    for pi in self_dual_relabelings(&t)? {
        let edges: Vec<String> = pi.edges.iter().map(|&(h, r)| format!("{}{}", h + 1, if r { "'" } else { "" })).collect();
        println!("  relabeling {}{}", edges.join(" "), if pi.mirrored { " (mirrored)" } else { "" });
    }
    for name in ["cube", "octahedron", "dodecahedron", "icosahedron"] {
        let g = platonic(name)?;
        println!(
            "{name:<13} V={:<3} E={:<3} F={:<3} genus={}",
            g.num_vertices(),
            g.num_edges(),
            g.num_faces(),
            g.genus()
        );
    }
    let cube_dual = dual_graph(&platonic("cube")?)?;
    println!("dual(cube) ≅ octahedron: {}", !map_isomorphisms(&cube_dual, &platonic("octahedron")?, true).is_empty());
    let w = wheel_graph(6)?;
    println!("wheel 6 self-dual: {}", !self_dual_relabelings(&w)?.is_empty());
    Ok(())
}
