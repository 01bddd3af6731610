//! Closed-form invariants of a reflexive polytope.
//!
//! Sign convention: a pair is log-K-stable along a degeneration (`t -> 0`) when
//! its log-Futaki invariant is `<= 0`. Reports built on these values flag the
//! opposite (`t -> infinity`) convention only as a note.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ehrhart::CoeffTuple;
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;
use crate::rational::{fmt_rat, ser_rat, Rat, RatVec};

/// The toric log-Futaki invariant of `(X, beta Y)` along `lambda`, with the
/// ingredients it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogFutakiResult {
    #[serde(serialize_with = "ser_rat")]
    pub value: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub beta: Rat,
    pub lambda: RatVec,
    #[serde(rename = "W", serialize_with = "ser_rat")]
    pub support: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub pairing: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub vol: Rat,
}

impl LogFutakiResult {
    /// `-(beta <P_c, lambda> + (1 - beta) W) Vol` from the stored fields.
    pub fn recompute(&self) -> Rat {
        -(&self.beta * &self.pairing + (Rat::one() - &self.beta) * &self.support) * &self.vol
    }
}

pub(crate) fn require_reflexive(p: &LatticePolytope) -> Result<()> {
    if p.is_reflexive() {
        Ok(())
    } else {
        Err(Error::NotReflexive)
    }
}

fn beta_error(beta: &Rat, range: &'static str) -> Error {
    Error::BetaOutOfRange {
        beta: fmt_rat(beta),
        range,
    }
}

/// The point `Q` where the ray from the origin in direction `-P_c` leaves the
/// polytope, or `None` when `P_c` is the origin.
pub fn exit_point(p: &LatticePolytope) -> Result<Option<RatVec>> {
    require_reflexive(p)?;
    let pc = p.barycenter();
    if pc.is_zero() {
        return Ok(None);
    }
    let d = -pc;
    let t = p.ray_exit_scale(&d)?;
    Ok(Some(d.scale(&t)))
}

/// `R = |OQ| / |P_c Q| = t / (1 + t)` with `Q = -t P_c`, and `1` when `P_c = O`.
pub fn r_invariant(p: &LatticePolytope) -> Result<Rat> {
    require_reflexive(p)?;
    let pc = p.barycenter();
    if pc.is_zero() {
        return Ok(Rat::one());
    }
    let t = p.ray_exit_scale(&-pc)?;
    Ok(&t / (Rat::one() + &t))
}

/// `-Vol <P_c, lambda>`.
pub fn classical_futaki(p: &LatticePolytope, lambda: &RatVec) -> Result<Rat> {
    p.support(lambda)?;
    Ok(-(p.volume() * p.barycenter().dot(lambda)))
}

/// `Q_beta = beta (1 - R) / ((1 - beta) R) * Q`.
pub fn q_beta(p: &LatticePolytope, beta: &Rat) -> Result<RatVec> {
    require_reflexive(p)?;
    if !(beta.is_positive() && beta < &Rat::one()) {
        return Err(beta_error(beta, "(0, 1)"));
    }
    let q = exit_point(p)?.ok_or(Error::BarycenterAtOrigin)?;
    let r = r_invariant(p)?;
    let factor = beta * (Rat::one() - &r) / ((Rat::one() - beta) * &r);
    Ok(q.scale(&factor))
}

/// `-(beta <P_c, lambda> + (1 - beta) W(lambda)) Vol` for `0 <= beta < 1`.
pub fn log_futaki_toric(p: &LatticePolytope, lambda: &RatVec, beta: &Rat) -> Result<LogFutakiResult> {
    let support = p.support(lambda)?;
    if beta.is_negative() || beta >= &Rat::one() {
        return Err(beta_error(beta, "[0, 1)"));
    }
    let mut out = LogFutakiResult {
        value: Rat::zero(),
        beta: beta.clone(),
        lambda: lambda.clone(),
        support,
        pairing: p.barycenter().dot(lambda),
        vol: p.volume().clone(),
    };
    out.value = out.recompute();
    Ok(out)
}

/// The algebraic log-Futaki invariant of a coefficient tuple with divisor
/// `(1 - beta) Y`: `2 (a1 b0 - a0 b1) / b0 + (1 - beta) (-a0~ + (b0~ / b0) a0)`.
pub fn log_futaki_algebraic(c: &CoeffTuple, beta: &Rat) -> Result<Rat> {
    if beta.is_negative() || beta > &Rat::one() {
        return Err(beta_error(beta, "[0, 1]"));
    }
    Ok(c.donaldson_futaki()? + (Rat::one() - beta) * c.divisor_term()?)
}

/// The `beta` in `(0, 1)` where the toric log-Futaki invariant along `lambda`
/// vanishes: `W / (W - <P_c, lambda>)`.
pub fn critical_beta(p: &LatticePolytope, lambda: &RatVec) -> Result<Option<Rat>> {
    let w = p.support(lambda)?;
    let denom = &w - p.barycenter().dot(lambda);
    if denom.is_zero() {
        return Ok(None);
    }
    let beta = w / denom;
    Ok((beta.is_positive() && beta < Rat::one()).then_some(beta))
}

/// `<Q_beta - P_lambda, lambda>`: the log-Futaki invariant divided by the
/// positive factor `(1 - beta) Vol`.
pub fn sign_form(p: &LatticePolytope, lambda: &RatVec, beta: &Rat) -> Result<Rat> {
    let w = p.support(lambda)?;
    Ok(q_beta(p, beta)?.dot(lambda) - w)
}
