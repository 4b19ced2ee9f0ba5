//! Exact-arithmetic engine for green mutation sequences of 2-acyclic quivers.
//!
//! Given a quiver and a discrete rational central charge, the engine tilts
//! repeatedly at the green vertex of maximal phase of the framed quiver. The
//! recorded c-vectors are the stable classes in decreasing phase order, and
//! the ordered product of quantum dilogarithms over them is the refined
//! Donaldson-Thomas invariant, computed in a truncated quantum affine space.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod charge;
pub mod dt;
pub mod engine;
mod error;
pub mod oracle;
pub mod poly;
pub mod quiver;
pub mod ratfunc;
pub mod series;

pub use charge::{phase_cmp, phase_float, CentralCharge, Rational, RationalComplex};
pub use dt::{
    check_independence, dt_invariant, keller_invariant, ChargeOutcome, ChargeStatus, Comparison,
    IndependenceReport, SignedStep,
};
pub use engine::{
    enumerate_mgs, run_mutation_method, self_duality_check, GreenRun, GreenStep, MgsEnumeration,
    RunStatus, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use poly::HalfPowerPoly;
pub use quiver::{ClassVector, FramedQuiver, Permutation, Quiver};
pub use ratfunc::RatFunc;
pub use series::{qdilog, QSeries};
