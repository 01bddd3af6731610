//! Exact log-Futaki invariants and log-K-stability verdicts for toric Fano
//! varieties described by reflexive lattice polytopes.
//!
//! Everything is computed over arbitrary-precision rationals. The closed-form
//! invariants in [`invariants`] are checked against [`ehrhart`], which gets the
//! same coefficients by enumerating lattice points of dilates and
//! interpolating.
//!
//! ```
//! use toriclogk::{builtins, invariants, rational::rat};
//!
//! let p = builtins::bl2p2();
//! assert_eq!(invariants::r_invariant(&p).unwrap(), rat(21, 25));
//! ```

pub mod builtins;
pub mod ehrhart;
pub mod error;
mod hull;
pub mod invariants;
pub mod io;
mod linalg;
pub mod p1conic;
pub mod polytope;
pub mod rational;
pub mod stability;

pub use ehrhart::{fit_expansions, orbifold_a1, sample_series, CoeffTuple, WeightSeries};
pub use error::{Error, Result};
pub use invariants::{
    classical_futaki, critical_beta, log_futaki_algebraic, log_futaki_toric, q_beta, r_invariant,
    LogFutakiResult,
};
pub use io::PolytopeFile;
pub use p1conic::ConeData;
pub use polytope::{HalfSpace, LatticePolytope, PointLocation};
pub use rational::{Rat, RatVec};
pub use stability::{classify, sweep, witness_destabilizer, StabilityVerdict, SweepReport, Verdict};
