//! Inputs shared by the benchmarks.

use toriclogk::{builtins, LatticePolytope, RatVec};

/// Vertex lists of the built-in polygons plus the three-dimensional prism,
/// for timing hull construction from scratch.
pub fn vertex_sets() -> Vec<(&'static str, Vec<RatVec>)> {
    let mut out: Vec<(&'static str, Vec<RatVec>)> = builtins::NAMES
        .iter()
        .map(|&name| (name, builtins::by_name(name).unwrap().vertices().to_vec()))
        .collect();
    out.push(("bl1p2_x_p1", builtins::bl1p2_x_p1().vertices().to_vec()));
    out
}

/// The first facet normal of `p`.
pub fn facet_direction(p: &LatticePolytope) -> RatVec {
    p.facets()[0].normal_vec()
}
