//! The projective line with weighted marked points `Y = sum alpha_i p_i`.
//!
//! Only the weights matter; positions of the marked points never enter.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, int, ser_rat, sign, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeData {
    alphas: Vec<Rat>,
}

impl ConeData {
    /// Every `alpha_i` must lie in `(0, 1)`. The empty list (no marked points) is accepted.
    pub fn new(alphas: Vec<Rat>) -> Result<Self> {
        if let Some(a) = alphas.iter().find(|a| !(a.is_positive() && *a < &int(1))) {
            return Err(Error::AlphaOutOfRange(fmt_rat(a)));
        }
        Ok(ConeData { alphas })
    }

    pub fn alphas(&self) -> &[Rat] {
        &self.alphas
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    fn total(&self) -> Rat {
        self.alphas.iter().sum()
    }
}

/// Log-Futaki invariant of the degeneration pushing the other points away
/// from `p_i` (1-based): `sum_{j != i} alpha_j - alpha_i`.
pub fn log_futaki_p1(c: &ConeData, i: usize) -> Result<Rat> {
    if i == 0 || i > c.len() {
        return Err(Error::IndexOutOfRange { index: i, len: c.len() });
    }
    let a = &c.alphas[i - 1];
    Ok(c.total() - a - a)
}

/// Degree of `-(K + Y)`, namely `2 - sum alpha_i`.
pub fn mean_scalar(c: &ConeData) -> Rat {
    int(2) - c.total()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    pub exists: bool,
    pub curvature_sign: i8,
    pub failed_conditions: Vec<String>,
}

/// Constant-curvature conic metric criterion. The curvature sign is the sign of
/// `2 - sum alpha`; the positive case additionally needs
/// `sum_{j != i} alpha_j - alpha_i > 0` for every `i`.
pub fn existence_check(c: &ConeData) -> ExistenceReport {
    let curvature_sign = sign(&mean_scalar(c));
    let mut failed = Vec::new();
    let total = c.total();
    let cond_a = match curvature_sign {
        1 => total < int(2),
        0 => total == int(2),
        _ => total > int(2),
    };
    if !cond_a {
        failed.push("(a)".to_string());
    }
    for i in 1..=c.len() {
        let f = log_futaki_p1(c, i).expect("index in range");
        if f.is_positive() {
            continue;
        }
        // zero and negative curvature: (a) forces (b)
        assert_eq!(curvature_sign, 1, "(b,{i}) fails although sum alpha >= 2");
        failed.push(format!("(b,{i})"));
    }
    ExistenceReport {
        exists: failed.is_empty(),
        curvature_sign,
        failed_conditions: failed,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P1StabilityReport {
    pub stable_all: bool,
    #[serde(serialize_with = "ser_rat_list")]
    pub futaki_values: Vec<Rat>,
}

fn ser_rat_list<S: serde::Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&fmt_rat(r))?;
    }
    seq.end()
}

/// Log-K-stability along every marked-point degeneration, in the `t -> infinity`
/// orientation where stability means every invariant is strictly positive.
pub fn stability_check(c: &ConeData) -> P1StabilityReport {
    let futaki_values: Vec<Rat> = (1..=c.len())
        .map(|i| log_futaki_p1(c, i).expect("index in range"))
        .collect();
    P1StabilityReport {
        stable_all: futaki_values.iter().all(Signed::is_positive),
        futaki_values,
    }
}

/// Everything the `p1conic` report prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P1ConicReport {
    pub exists: bool,
    pub curvature_sign: i8,
    pub failed_conditions: Vec<String>,
    #[serde(serialize_with = "ser_rat")]
    pub mean_scalar: Rat,
    #[serde(serialize_with = "ser_rat_list")]
    pub futaki_values: Vec<Rat>,
    pub stable_all: bool,
}

pub fn report(c: &ConeData) -> P1ConicReport {
    let e = existence_check(c);
    let s = stability_check(c);
    P1ConicReport {
        exists: e.exists,
        curvature_sign: e.curvature_sign,
        failed_conditions: e.failed_conditions,
        mean_scalar: mean_scalar(c),
        futaki_values: s.futaki_values,
        stable_all: s.stable_all,
    }
}

/// `sum_i F_i`, which equals `(r - 2) sum alpha`.
pub fn futaki_sum(c: &ConeData) -> Rat {
    stability_check(c)
        .futaki_values
        .iter()
        .fold(Rat::zero(), |acc, f| acc + f)
}
