//! Log-K-stability of `(X, beta Y)` along torus one-parameter subgroups.
//!
//! The verdict is read off from where `Q_beta` sits: inside the polytope every
//! direction has negative log-Futaki invariant, on the boundary the normals of
//! the facets through it give zero, and outside any violated facet normal gives
//! a positive value.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{critical_beta, log_futaki_toric, q_beta, r_invariant, require_reflexive};
use crate::polytope::{LatticePolytope, PointLocation};
use crate::rational::{fmt_rat, ser_int_vec, ser_opt_int_vec, ser_opt_rat, ser_rat, Rat, RatVec};

pub const NOTE_SIGN: &str =
    "sign convention: stable along lambda iff F <= 0 for the t -> 0 limit; the t -> infinity limit uses F >= 0";
pub const NOTE_PRODUCT: &str =
    "F = 0 along the witness; the degeneration moves Y, so this is not treated as a product configuration";
pub const NOTE_TORUS_ONLY: &str = "only one-parameter subgroups of the torus are tested";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Stable,
    Semistable,
    Unstable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::Semistable => "semistable",
            Verdict::Unstable => "unstable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    #[serde(serialize_with = "ser_rat")]
    pub beta: Rat,
    #[serde(rename = "R", serialize_with = "ser_rat")]
    pub r: Rat,
    pub verdict: Verdict,
    /// Vanishing direction when semistable, destabilizing direction when unstable.
    #[serde(serialize_with = "ser_opt_int_vec")]
    pub witness: Option<Vec<BigInt>>,
    pub q_beta: Option<RatVec>,
    pub notes: Vec<String>,
}

fn check_beta(beta: &Rat) -> Result<()> {
    if beta.is_positive() && beta < &Rat::one() {
        Ok(())
    } else {
        Err(Error::BetaOutOfRange {
            beta: fmt_rat(beta),
            range: "(0, 1)",
        })
    }
}

pub fn classify(p: &LatticePolytope, beta: &Rat) -> Result<StabilityVerdict> {
    require_reflexive(p)?;
    check_beta(beta)?;
    let r = r_invariant(p)?;
    let mut notes = vec![NOTE_SIGN.to_string(), NOTE_TORUS_ONLY.to_string()];

    if p.barycenter().is_zero() {
        return Ok(StabilityVerdict {
            beta: beta.clone(),
            r,
            verdict: Verdict::Stable,
            witness: None,
            q_beta: None,
            notes,
        });
    }

    let qb = q_beta(p, beta)?;
    let (verdict, witness) = match p.classify_point(&qb) {
        PointLocation::Interior => (Verdict::Stable, None),
        PointLocation::Boundary(fs) => (Verdict::Semistable, Some(fs)),
        PointLocation::Outside(fs) => (Verdict::Unstable, Some(fs)),
    };
    // facets are sorted by normal, so the first index is the smallest normal
    let witness = witness.map(|fs| p.facets()[fs[0]].normal().to_vec());

    if let Some(w) = &witness {
        let f = log_futaki_toric(p, &RatVec::from_bigints(w), beta)?.value;
        match verdict {
            Verdict::Semistable => {
                assert!(f.is_zero(), "semistable witness has F = {f}");
                notes.push(NOTE_PRODUCT.to_string());
            }
            Verdict::Unstable => assert!(f.is_positive(), "unstable witness has F = {f}"),
            Verdict::Stable => unreachable!(),
        }
    }

    Ok(StabilityVerdict {
        beta: beta.clone(),
        r,
        verdict,
        witness,
        q_beta: Some(qb),
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetCritical {
    #[serde(serialize_with = "ser_int_vec")]
    pub normal: Vec<BigInt>,
    #[serde(serialize_with = "ser_opt_rat")]
    pub critical_beta: Option<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    #[serde(rename = "R", serialize_with = "ser_rat")]
    pub r: Rat,
    pub per_facet: Vec<FacetCritical>,
}

impl SweepReport {
    /// Smallest defined per-facet critical value.
    pub fn min_critical(&self) -> Option<&Rat> {
        self.per_facet
            .iter()
            .filter_map(|f| f.critical_beta.as_ref())
            .min()
    }
}

/// Critical `beta` along every facet normal, sorted by normal.
pub fn sweep(p: &LatticePolytope) -> Result<SweepReport> {
    require_reflexive(p)?;
    let r = r_invariant(p)?;
    let per_facet = p
        .facets()
        .iter()
        .map(|f| {
            Ok(FacetCritical {
                normal: f.normal().to_vec(),
                critical_beta: critical_beta(p, &f.normal_vec())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = SweepReport { r, per_facet };
    let expected = report.min_critical().cloned().unwrap_or_else(Rat::one);
    assert_eq!(report.r, expected, "R disagrees with the facet minimum");
    Ok(report)
}

/// An integer direction with positive log-Futaki invariant, when `beta > R`.
pub fn witness_destabilizer(p: &LatticePolytope, beta: &Rat) -> Result<Option<Vec<BigInt>>> {
    let v = classify(p, beta)?;
    if v.verdict != Verdict::Unstable {
        return Ok(None);
    }
    let w = v.witness.expect("unstable verdict carries a witness");
    let f = log_futaki_toric(p, &RatVec::from_bigints(&w), beta)?.value;
    assert!(f.is_positive());
    Ok(Some(w))
}
