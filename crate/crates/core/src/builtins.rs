//! The named example polytopes shipped with the toolkit.

use crate::polytope::LatticePolytope;

pub const NAMES: [&str; 4] = ["p2", "bl1p2", "bl2p2", "p1xp1"];

pub const P2: [[i64; 2]; 3] = [[-1, -1], [2, -1], [-1, 2]];
pub const BL1P2: [[i64; 2]; 4] = [[-1, 0], [-1, 2], [2, -1], [0, -1]];
pub const BL2P2: [[i64; 2]; 5] = [[-1, -1], [-1, 1], [0, 1], [1, 0], [1, -1]];
pub const P1XP1: [[i64; 2]; 4] = [[-1, -1], [1, -1], [1, 1], [-1, 1]];

fn polygon(vertices: &[[i64; 2]]) -> LatticePolytope {
    let v: Vec<&[i64]> = vertices.iter().map(|p| p.as_slice()).collect();
    LatticePolytope::from_int_vertices(&v).expect("builtin polytope is valid")
}

/// The projective plane.
pub fn p2() -> LatticePolytope {
    polygon(&P2)
}

/// The plane blown up at one point.
pub fn bl1p2() -> LatticePolytope {
    polygon(&BL1P2)
}

/// The plane blown up at two points.
pub fn bl2p2() -> LatticePolytope {
    polygon(&BL2P2)
}

pub fn p1xp1() -> LatticePolytope {
    polygon(&P1XP1)
}

/// Product of `bl1p2` with the segment `[-1, 1]`; a three-dimensional test case.
pub fn bl1p2_x_p1() -> LatticePolytope {
    let mut v = Vec::new();
    for p in BL1P2 {
        for z in [-1, 1] {
            v.push(vec![p[0], p[1], z]);
        }
    }
    let refs: Vec<&[i64]> = v.iter().map(Vec::as_slice).collect();
    LatticePolytope::from_int_vertices(&refs).expect("builtin polytope is valid")
}

pub fn by_name(name: &str) -> Option<LatticePolytope> {
    match name {
        "p2" => Some(p2()),
        "bl1p2" => Some(bl1p2()),
        "bl2p2" => Some(bl2p2()),
        "p1xp1" => Some(p1xp1()),
        _ => None,
    }
}
