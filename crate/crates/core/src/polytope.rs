//! Full-dimensional lattice polytopes with exact V- and H-representations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull::convex_hull;
use crate::linalg::{affine_dim, det};
use crate::rational::{Rat, RatVec};

/// The half-space `<normal, x> <= offset`, with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    normal: Vec<BigInt>,
    offset: Rat,
}

impl HalfSpace {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn normal_vec(&self) -> RatVec {
        RatVec::from_bigints(&self.normal)
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// `<normal, x>`.
    pub fn eval(&self, x: &RatVec) -> Rat {
        x.dot_int(&self.normal)
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        self.eval(x) <= self.offset
    }
}

/// Where a point sits relative to a polytope. Facet lists are indices into
/// [`LatticePolytope::facets`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointLocation {
    Interior,
    Boundary(Vec<usize>),
    Outside(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<RatVec>,
    facets: Vec<HalfSpace>,
    /// For each facet, the indices of the vertices on it.
    incidence: Vec<Vec<usize>>,
    volume: Rat,
    barycenter: RatVec,
}

impl LatticePolytope {
    /// Builds the convex hull of integer points.
    ///
    /// Duplicates and non-extreme points are dropped silently; surviving
    /// vertices keep their first-occurrence order. Facets are sorted by normal.
    pub fn build(points: &[RatVec]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut seen = BTreeSet::new();
        let mut distinct = Vec::new();
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            if let Some(c) = p.coords().iter().find(|c| !c.is_integer()) {
                return Err(Error::NonIntegerVertex(c.to_string()));
            }
            if seen.insert(p.clone()) {
                distinct.push(p.clone());
            }
        }

        let (extreme, raw) = convex_hull(&distinct, dim)?;
        let vertices: Vec<RatVec> = extreme.iter().map(|&i| distinct[i].clone()).collect();
        let mut faces: Vec<(HalfSpace, Vec<usize>)> = raw
            .into_iter()
            .map(|f| {
                let inc = f
                    .verts
                    .iter()
                    .map(|i| extreme.binary_search(i).expect("facet vertex is extreme"))
                    .collect();
                (
                    HalfSpace {
                        normal: f.normal,
                        offset: f.offset,
                    },
                    inc,
                )
            })
            .collect();
        faces.sort_by(|a, b| a.0.normal.cmp(&b.0.normal));
        let (facets, incidence): (Vec<_>, Vec<_>) = faces.into_iter().unzip();

        let mut poly = LatticePolytope {
            dim,
            vertices,
            facets,
            incidence,
            volume: Rat::zero(),
            barycenter: RatVec::zeros(dim),
        };
        poly.cross_validate(&distinct);
        let (volume, barycenter) = poly.integrate();
        poly.volume = volume;
        poly.barycenter = barycenter;
        Ok(poly)
    }

    pub fn from_int_vertices(vertices: &[&[i64]]) -> Result<Self> {
        let pts: Vec<RatVec> = vertices.iter().map(|v| RatVec::from_ints(v)).collect();
        Self::build(&pts)
    }

    /// Every input point satisfies every facet and each facet carries `n`
    /// affinely independent vertices.
    fn cross_validate(&self, input: &[RatVec]) {
        for (f, inc) in self.facets.iter().zip(&self.incidence) {
            assert!(
                input.iter().all(|p| f.contains(p)),
                "hull facet {:?} cuts off an input point",
                f.normal
            );
            let pts: Vec<&[Rat]> = inc.iter().map(|&i| self.vertices[i].coords()).collect();
            assert_eq!(
                affine_dim(&pts).map_or(0, |d| d + 1),
                self.dim,
                "hull facet {:?} is degenerate",
                f.normal
            );
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Vertex indices lying on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> &[usize] {
        &self.incidence[i]
    }

    /// Origin strictly inside and every facet of the form `<nu, x> <= 1`.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_one())
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_positive())
    }

    pub fn volume(&self) -> &Rat {
        &self.volume
    }

    pub fn barycenter(&self) -> &RatVec {
        &self.barycenter
    }

    fn check_direction(&self, lambda: &RatVec) -> Result<()> {
        if lambda.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: lambda.dim(),
            });
        }
        if lambda.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(())
    }

    /// `max <v, lambda>` over the vertices, the support function `W(lambda)`.
    pub fn support(&self, lambda: &RatVec) -> Result<Rat> {
        self.check_direction(lambda)?;
        Ok(self
            .vertices
            .iter()
            .map(|v| v.dot(lambda))
            .max()
            .expect("polytope has vertices"))
    }

    /// Vertices attaining the support value, lexicographically sorted.
    pub fn support_face(&self, lambda: &RatVec) -> Result<Vec<RatVec>> {
        let w = self.support(lambda)?;
        let mut face: Vec<RatVec> = self
            .vertices
            .iter()
            .filter(|v| v.dot(lambda) == w)
            .cloned()
            .collect();
        face.sort();
        Ok(face)
    }

    pub fn classify_point(&self, x: &RatVec) -> PointLocation {
        let mut tight = Vec::new();
        let mut violated = Vec::new();
        for (i, f) in self.facets.iter().enumerate() {
            let v = f.eval(x);
            if v > f.offset {
                violated.push(i);
            } else if v == f.offset {
                tight.push(i);
            }
        }
        if !violated.is_empty() {
            PointLocation::Outside(violated)
        } else if !tight.is_empty() {
            PointLocation::Boundary(tight)
        } else {
            PointLocation::Interior
        }
    }

    /// Largest `t >= 0` with `t * d` in the polytope.
    pub fn ray_exit_scale(&self, d: &RatVec) -> Result<Rat> {
        self.check_direction(d)?;
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        Ok(self
            .facets
            .iter()
            .filter_map(|f| {
                let rate = f.eval(d);
                rate.is_positive().then(|| &f.offset / rate)
            })
            .min()
            .expect("bounded polytope has a facet facing every direction"))
    }

    /// Integer points of `k * P`, in lexicographic order.
    pub fn lattice_points(&self, k: u64) -> Vec<RatVec> {
        self.lattice_points_int(k)
            .iter()
            .map(|p| RatVec::from_bigints(p))
            .collect()
    }

    pub(crate) fn lattice_points_int(&self, k: u64) -> Vec<Vec<BigInt>> {
        let k = BigInt::from(k);
        let verts: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|v| v.to_integers().expect("lattice vertex"))
            .collect();
        let lo: Vec<BigInt> = (0..self.dim)
            .map(|i| verts.iter().map(|v| &v[i] * &k).min().unwrap())
            .collect();
        let hi: Vec<BigInt> = (0..self.dim)
            .map(|i| verts.iter().map(|v| &v[i] * &k).max().unwrap())
            .collect();
        // Offsets of a lattice polytope with integer normals are integers.
        let bounds: Vec<(&[BigInt], BigInt)> = self
            .facets
            .iter()
            .map(|f| (f.normal.as_slice(), f.offset.to_integer() * &k))
            .collect();

        let mut out = Vec::new();
        let mut p = lo.clone();
        loop {
            let inside = bounds.iter().all(|(nu, c)| {
                let s: BigInt = nu.iter().zip(&p).map(|(a, b)| a * b).sum();
                &s <= c
            });
            if inside {
                out.push(p.clone());
            }
            // odometer, last coordinate fastest
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if p[i] < hi[i] {
                    p[i] += 1;
                    break;
                }
                p[i] = lo[i].clone();
            }
        }
    }

    /// Pulling triangulation: cone from the first vertex of each face over the
    /// triangulated subfaces missing it.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        self.pull(&all, self.dim)
    }

    fn pull(&self, face: &[usize], d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![face[0]]];
        }
        let apex = face[0];
        let mut subfaces = BTreeSet::new();
        for inc in &self.incidence {
            let sub: Vec<usize> = face.iter().copied().filter(|i| inc.contains(i)).collect();
            if sub.contains(&apex) || sub.len() < d {
                continue;
            }
            let pts: Vec<&[Rat]> = sub.iter().map(|&i| self.vertices[i].coords()).collect();
            if affine_dim(&pts) == Some(d - 1) {
                subfaces.insert(sub);
            }
        }
        let mut out = Vec::new();
        for sub in subfaces {
            for mut simplex in self.pull(&sub, d - 1) {
                simplex.push(apex);
                out.push(simplex);
            }
        }
        out
    }

    fn integrate(&self) -> (Rat, RatVec) {
        let n = self.dim;
        let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
        let fact = Rat::from_integer(fact);
        let mut volume = Rat::zero();
        let mut moment = RatVec::zeros(n);
        for simplex in self.triangulation() {
            let base = &self.vertices[simplex[0]];
            let rows: Vec<Vec<Rat>> = simplex[1..]
                .iter()
                .map(|&i| (&self.vertices[i] - base).into_coords())
                .collect();
            let vol = det(&rows).abs() / &fact;
            let sum = simplex
                .iter()
                .fold(RatVec::zeros(n), |acc, &i| &acc + &self.vertices[i]);
            let centroid = sum.scale(&Rat::new(BigInt::one(), BigInt::from(n as u64 + 1)));
            moment = &moment + &centroid.scale(&vol);
            volume += vol;
        }
        let barycenter = moment.scale(&volume.recip());
        (volume, barycenter)
    }
}
