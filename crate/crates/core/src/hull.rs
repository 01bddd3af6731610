//! Exact beneath-beyond convex hull for integer point sets.
//!
//! Facets are stored as merged hyperplanes (not triangulated), each with the set
//! of input indices lying on it. Coplanar points are absorbed into the facet they
//! lie on, so non-simplicial facets come out as a single half-space.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{affine_dim, kernel_line, rank};
use crate::rational::{Rat, RatVec};

#[derive(Clone, Debug)]
pub(crate) struct RawFacet {
    pub normal: Vec<BigInt>,
    pub offset: Rat,
    pub verts: BTreeSet<usize>,
}

impl RawFacet {
    fn eval(&self, p: &RatVec) -> Rat {
        p.dot_int(&self.normal)
    }
}

/// Number of affinely independent points in the set (affine dimension + 1).
fn span(points: &[RatVec], idx: impl IntoIterator<Item = usize>) -> usize {
    let pts: Vec<&[Rat]> = idx.into_iter().map(|i| points[i].coords()).collect();
    affine_dim(&pts).map_or(0, |d| d + 1)
}

struct Hull<'a> {
    points: &'a [RatVec],
    n: usize,
    /// Sum of the initial simplex vertices; `interior / (n+1)` is strictly inside every later hull.
    interior: RatVec,
}

impl Hull<'_> {
    /// Outward primitive hyperplane through the given points, which must span a hyperplane.
    fn hyperplane(&self, idx: &[usize]) -> Option<(Vec<BigInt>, Rat)> {
        let base = &self.points[idx[0]];
        let diffs: Vec<Vec<Rat>> = idx[1..]
            .iter()
            .map(|&i| (&self.points[i] - base).into_coords())
            .collect();
        let dir = kernel_line(&diffs, self.n)?;
        let mut normal = RatVec::new(dir).primitive_integer()?;
        let mut offset = base.dot_int(&normal);
        let scale = Rat::from_integer(BigInt::from(self.n as u64 + 1));
        let side = self.interior.dot_int(&normal) - &offset * &scale;
        if side.is_zero() {
            return None;
        }
        if side > Rat::zero() {
            normal.iter_mut().for_each(|x| *x = -x.clone());
            offset = -offset;
        }
        Some((normal, offset))
    }

    fn on_plane(&self, normal: &[BigInt], offset: &Rat, candidates: &BTreeSet<usize>) -> BTreeSet<usize> {
        candidates
            .iter()
            .copied()
            .filter(|&i| &self.points[i].dot_int(normal) == offset)
            .collect()
    }
}

/// Picks `n+1` affinely independent points greedily.
fn initial_simplex(points: &[RatVec], n: usize) -> Result<Vec<usize>> {
    let mut chosen = vec![0];
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let mut trial = rows.clone();
        trial.push((p - &points[0]).into_coords());
        if rank(&trial) > rows.len() {
            rows = trial;
            chosen.push(i);
            if chosen.len() == n + 1 {
                return Ok(chosen);
            }
        }
    }
    Err(Error::NotFullDimensional {
        dim: n,
        affine_dim: rows.len(),
    })
}

/// Returns the indices of the extreme points (ascending) and the facets with
/// their extreme-point incidences. `points` must be distinct and of dimension `n`.
pub(crate) fn convex_hull(points: &[RatVec], n: usize) -> Result<(Vec<usize>, Vec<RawFacet>)> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let simplex = initial_simplex(points, n)?;
    let interior = simplex
        .iter()
        .fold(RatVec::zeros(n), |acc, &i| &acc + &points[i]);
    let hull = Hull {
        points,
        n,
        interior,
    };

    let mut facets = Vec::with_capacity(n + 1);
    for skip in 0..=n {
        let idx: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &i)| i)
            .collect();
        let (normal, offset) = hull
            .hyperplane(&idx)
            .expect("simplex facet spans a hyperplane");
        facets.push(RawFacet {
            normal,
            offset,
            verts: idx.into_iter().collect(),
        });
    }
    let mut hull_verts: BTreeSet<usize> = simplex.iter().copied().collect();

    for (j, p) in points.iter().enumerate() {
        if hull_verts.contains(&j) {
            continue;
        }
        let visible: Vec<bool> = facets.iter().map(|f| f.eval(p) > f.offset).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }

        let mut next: Vec<RawFacet> = Vec::new();
        for (f, _) in facets.iter().zip(&visible).filter(|(_, &v)| !v) {
            let mut f = f.clone();
            if f.eval(p) == f.offset {
                f.verts.insert(j);
            }
            next.push(f);
        }

        let mut with_p = hull_verts.clone();
        with_p.insert(j);
        for (v, _) in facets.iter().zip(&visible).filter(|(_, &v)| v) {
            for (nv, _) in facets.iter().zip(&visible).filter(|(_, &v)| !v) {
                let ridge: Vec<usize> = v.verts.intersection(&nv.verts).copied().collect();
                if ridge.len() + 1 < n || span(points, ridge.iter().copied()) != n - 1 {
                    continue;
                }
                let mut idx = vec![j];
                idx.extend(&ridge);
                let Some((normal, offset)) = hull.hyperplane(&idx) else {
                    continue;
                };
                if next.iter().any(|f| f.normal == normal && f.offset == offset) {
                    continue;
                }
                let verts = hull.on_plane(&normal, &offset, &with_p);
                next.push(RawFacet {
                    normal,
                    offset,
                    verts,
                });
            }
        }

        facets = next;
        hull_verts = facets.iter().flat_map(|f| f.verts.iter().copied()).collect();
    }

    // A boundary point is extreme iff the normals of the facets through it span Q^n.
    let extreme: Vec<usize> = hull_verts
        .into_iter()
        .filter(|&i| {
            let normals: Vec<Vec<Rat>> = facets
                .iter()
                .filter(|f| f.verts.contains(&i))
                .map(|f| RatVec::from_bigints(&f.normal).into_coords())
                .collect();
            rank(&normals) == n
        })
        .collect();
    let extreme_set: BTreeSet<usize> = extreme.iter().copied().collect();
    for f in &mut facets {
        f.verts.retain(|i| extreme_set.contains(i));
    }
    Ok((extreme, facets))
}
