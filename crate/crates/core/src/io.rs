//! Polytope JSON: `{"name": ..., "dim": n, "vertices": [[int | "p/q", ...], ...]}`.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;
use crate::rational::{ser_int_vec, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct PolytopeFile {
    pub name: String,
    pub dim: usize,
    pub vertices: Vec<RatVec>,
}

impl PolytopeFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_polytope(name: &str, p: &LatticePolytope) -> Self {
        PolytopeFile {
            name: name.to_string(),
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope> {
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some(v) = self.vertices.iter().find(|v| v.dim() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        LatticePolytope::build(&self.vertices)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("polytope serializes")
    }
}

impl Serialize for PolytopeFile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            name: &'a str,
            dim: usize,
            vertices: Vec<IntRow>,
        }
        struct IntRow(Vec<num_bigint::BigInt>);
        impl Serialize for IntRow {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                ser_int_vec(&self.0, s)
            }
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.to_integers().map(IntRow))
            .collect::<Option<Vec<_>>>();
        match vertices {
            Some(vertices) => Out {
                name: &self.name,
                dim: self.dim,
                vertices,
            }
            .serialize(s),
            None => {
                #[derive(Serialize)]
                struct Raw<'a> {
                    name: &'a str,
                    dim: usize,
                    vertices: &'a [RatVec],
                }
                Raw {
                    name: &self.name,
                    dim: self.dim,
                    vertices: &self.vertices,
                }
                .serialize(s)
            }
        }
    }
}
