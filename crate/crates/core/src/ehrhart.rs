//! Brute-force weight oracle.
//!
//! For a torus direction `lambda`, the section space of `L^k` has a monomial
//! basis indexed by the lattice points of `kP`, and the monomial `z^p` carries
//! weight `-<p, lambda>`. Summing over the enumerated points gives the
//! dimensions `d_k` and total weights `w_k`; the restriction to a general
//! hyperplane section degenerates to the limit section of weight `-W(lambda)`,
//! so its weights are `w~_k = w_k - (w_{k-1} - W d_{k-1})` and its dimensions
//! `d~_k = d_k - d_{k-1}`.
//!
//! All four sequences are polynomial in `k`; they are interpolated exactly and
//! every surplus sample is checked against the interpolant.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::polytope::LatticePolytope;
use crate::rational::{ser_rat, Rat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSample {
    pub k: u64,
    pub d: BigInt,
    pub w: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSeries {
    lambda: RatVec,
    samples: Vec<WeightSample>,
}

/// One row of the hyperplane-section table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSample {
    pub k: u64,
    pub d_tilde: BigInt,
    pub w_tilde: Rat,
}

impl WeightSeries {
    pub fn lambda(&self) -> &RatVec {
        &self.lambda
    }

    pub fn samples(&self) -> &[WeightSample] {
        &self.samples
    }

    fn check_consecutive(&self) -> Result<()> {
        let consecutive = self
            .samples
            .iter()
            .enumerate()
            .all(|(i, s)| s.k == i as u64 + 1);
        if consecutive {
            Ok(())
        } else {
            Err(Error::InsufficientSamples(
                "weight samples must be k = 1, 2, ..., k_max".into(),
            ))
        }
    }

    /// `w~_k` and `d~_k` for every sample, seeded with `d_0 = 1, w_0 = 0`
    /// (the origin is the only point of `0 * P`).
    pub fn section_samples(&self, support: &Rat) -> Result<Vec<SectionSample>> {
        self.check_consecutive()?;
        let mut prev_d = BigInt::one();
        let mut prev_w = Rat::zero();
        let mut out = Vec::with_capacity(self.samples.len());
        for s in &self.samples {
            let limit = &prev_w - support * Rat::from_integer(prev_d.clone());
            out.push(SectionSample {
                k: s.k,
                d_tilde: &s.d - &prev_d,
                w_tilde: &s.w - limit,
            });
            prev_d = s.d.clone();
            prev_w = s.w.clone();
        }
        Ok(out)
    }
}

/// Leading coefficients of the four expansions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffTuple {
    pub n: usize,
    #[serde(serialize_with = "ser_rat")]
    pub a0: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub a1: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub b0: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub b1: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub a0_tilde: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub b0_tilde: Rat,
}

impl CoeffTuple {
    /// `2 (a1 b0 - a0 b1) / b0`, the Donaldson-Futaki invariant without divisor.
    pub fn donaldson_futaki(&self) -> Result<Rat> {
        if self.b0.is_zero() {
            return Err(Error::ZeroB0);
        }
        Ok(Rat::from_integer(BigInt::from(2)) * (&self.a1 * &self.b0 - &self.a0 * &self.b1) / &self.b0)
    }

    /// `-a0~ + (b0~ / b0) a0`, the divisor correction.
    pub fn divisor_term(&self) -> Result<Rat> {
        if self.b0.is_zero() {
            return Err(Error::ZeroB0);
        }
        Ok(-&self.a0_tilde + &self.b0_tilde / &self.b0 * &self.a0)
    }
}

/// Enumerates `kP` for `k = 1..=k_max` and records `d_k` and `w_k = -sum <p, lambda>`.
pub fn sample_series(p: &LatticePolytope, lambda: &RatVec, k_max: u64) -> Result<WeightSeries> {
    p.support(lambda)?;
    let n = p.dim() as u64;
    if k_max < n + 3 {
        return Err(Error::InsufficientSamples(format!(
            "k_max = {k_max} but dimension {n} needs at least {}",
            n + 3
        )));
    }
    let samples = (1..=k_max)
        .map(|k| {
            let pts = p.lattice_points_int(k);
            let mut total = vec![BigInt::zero(); p.dim()];
            for q in &pts {
                for (t, x) in total.iter_mut().zip(q) {
                    *t += x;
                }
            }
            WeightSample {
                k,
                d: BigInt::from(pts.len()),
                w: -lambda.dot_int(&total),
            }
        })
        .collect();
    Ok(WeightSeries {
        lambda: lambda.clone(),
        samples,
    })
}

/// Coefficients `c_0..=c_degree` (ascending) of the polynomial through the first
/// `degree + 1` samples; every remaining sample must lie on it.
pub fn interpolate(samples: &[(u64, Rat)], degree: usize, sequence: &'static str) -> Result<Vec<Rat>> {
    if samples.len() < degree + 2 {
        return Err(Error::InsufficientSamples(format!(
            "`{sequence}` needs {} samples for degree {degree} plus a holdout, got {}",
            degree + 2,
            samples.len()
        )));
    }
    let (fit, holdout) = samples.split_at(degree + 1);
    let powers = |k: u64| -> Vec<Rat> {
        let k = Rat::from_integer(BigInt::from(k));
        let mut row = Vec::with_capacity(degree + 1);
        let mut acc = Rat::one();
        for _ in 0..=degree {
            row.push(acc.clone());
            acc *= &k;
        }
        row
    };
    let vandermonde: Vec<Vec<Rat>> = fit.iter().map(|(k, _)| powers(*k)).collect();
    let rhs: Vec<Rat> = fit.iter().map(|(_, y)| y.clone()).collect();
    let coeffs = solve(&vandermonde, &rhs).ok_or_else(|| {
        Error::InsufficientSamples(format!("`{sequence}` sample abscissae are not distinct"))
    })?;
    for (k, y) in holdout {
        let value: Rat = powers(*k).iter().zip(&coeffs).map(|(a, b)| a * b).sum();
        if &value != y {
            return Err(Error::NotPolynomial {
                sequence,
                degree,
                k: *k,
            });
        }
    }
    Ok(coeffs)
}

/// Fits the expansions of `w_k`, `d_k`, `w~_k`, `d~_k` and extracts their
/// leading coefficients.
pub fn fit_expansions(series: &WeightSeries, p: &LatticePolytope) -> Result<CoeffTuple> {
    let n = p.dim();
    let support = p.support(series.lambda())?;
    let section = series.section_samples(&support)?;

    let w: Vec<(u64, Rat)> = series.samples.iter().map(|s| (s.k, s.w.clone())).collect();
    let d: Vec<(u64, Rat)> = series
        .samples
        .iter()
        .map(|s| (s.k, Rat::from_integer(s.d.clone())))
        .collect();
    let wt: Vec<(u64, Rat)> = section.iter().map(|s| (s.k, s.w_tilde.clone())).collect();
    let dt: Vec<(u64, Rat)> = section
        .iter()
        .map(|s| (s.k, Rat::from_integer(s.d_tilde.clone())))
        .collect();

    let w = interpolate(&w, n + 1, "w")?;
    let d = interpolate(&d, n, "d")?;
    let wt = interpolate(&wt, n, "w_tilde")?;
    let dt = interpolate(&dt, n - 1, "d_tilde")?;

    Ok(CoeffTuple {
        n,
        a0: w[n + 1].clone(),
        a1: w[n].clone(),
        b0: d[n].clone(),
        b1: d[n - 1].clone(),
        a0_tilde: wt[n].clone(),
        b0_tilde: dt[n - 1].clone(),
    })
}

/// Second weight coefficient of the orbifold section ring, `(2 a1 - a0~) / 2`.
pub fn orbifold_a1(c: &CoeffTuple) -> Rat {
    (Rat::from_integer(BigInt::from(2)) * &c.a1 - &c.a0_tilde) / Rat::from_integer(BigInt::from(2))
}
