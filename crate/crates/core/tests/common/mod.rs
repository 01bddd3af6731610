#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toriclogk::{LatticePolytope, RatVec};

pub fn box_points(bound: i64) -> Vec<[i64; 2]> {
    let mut pts = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            pts.push([x, y]);
        }
    }
    pts
}

/// Distinct reflexive polygons built from random subsets of `[-bound, bound]^2`.
pub fn random_reflexive_polygons(seed: u64, count: usize, bound: i64) -> Vec<LatticePolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = box_points(bound);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(3..=6);
        let pick: Vec<RatVec> = all
            .choose_multiple(&mut rng, k)
            .map(|p| RatVec::from_ints(p))
            .collect();
        let Ok(p) = LatticePolytope::build(&pick) else {
            continue;
        };
        if !p.is_reflexive() {
            continue;
        }
        let mut key = p.vertices().to_vec();
        key.sort();
        if seen.insert(key) {
            out.push(p);
        }
    }
    out
}
