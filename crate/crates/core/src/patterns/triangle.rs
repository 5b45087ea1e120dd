use super::{PartStructure, Witness};
use crate::graph::SimpleDigraph;

/// A cyclic triangle `(x, y), (y, z), (z, x)` starting at its smallest
/// vertex, or `None`. Scans `x` ascending, so the first triangle found uses
/// the smallest vertex lying on any cyclic triangle.
pub fn find_cyclic_triangle(d: &SimpleDigraph) -> Option<Witness> {
    for x in 0..d.n() {
        for y in d.out_neighbors(x) {
            if let Some(z) = d.out_neighbors(y).intersection(d.in_neighbors(x)).first() {
                return Some(Witness {
                    vertices: vec![x, y, z],
                    parts: Some(PartStructure::NearClique {
                        triangle: Some([x, y, z]),
                        matching: Vec::new(),
                    }),
                });
            }
        }
    }
    None
}
