//! Refined DT invariants as ordered products of quantum dilogarithms.

use alloc::vec::Vec;

use crate::charge::CentralCharge;
use crate::engine::{run_mutation_method, GreenRun, RunStatus};
use crate::error::{Error, Result};
use crate::quiver::{ClassVector, Quiver};
use crate::series::{qdilog, QAlgebra, QSeries};

/// A tilt with its sign: `+1` for an object of the heart, `-1` for one of its shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedStep {
    pub class: ClassVector,
    pub sign: i8,
}

impl SignedStep {
    pub fn new(class: ClassVector, sign: i8) -> Self {
        SignedStep { class, sign }
    }
}

/// Product of `E(y^beta)` over the recorded classes of a maximal run, left to right.
pub fn dt_from_run(run: &GreenRun, degree: u32) -> Result<QSeries> {
    if run.status != RunStatus::MaximalReached {
        return Err(Error::InfiniteSpectrum { steps: run.len() });
    }
    let algebra = QAlgebra::for_quiver(&run.quiver, degree);
    let mut acc = algebra.one();
    for class in run.stable_classes() {
        acc = acc.mul(&qdilog(&algebra, &class)?)?;
    }
    Ok(acc)
}

/// The refined DT invariant for a discrete central charge.
///
/// Fails with [`Error::InfiniteSpectrum`] rather than returning a partial product.
pub fn dt_invariant(q: &Quiver, z: &CentralCharge, degree: u32, budget: usize) -> Result<QSeries> {
    let run = run_mutation_method(q, z, budget)?;
    dt_from_run(&run, degree)
}

/// `E(beta_1)^{e_1} ... E(beta_N)^{e_N}` with inverses for negative signs.
pub fn keller_invariant(q: &Quiver, steps: &[SignedStep], degree: u32) -> Result<QSeries> {
    let algebra = QAlgebra::for_quiver(q, degree);
    let mut acc = algebra.one();
    for step in steps {
        let e = qdilog(&algebra, &step.class)?;
        let factor = match step.sign {
            1 => e,
            -1 => e.inv()?,
            _ => return Err(Error::NegativeClass),
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeStatus {
    Ok,
    Nondiscrete,
    Infinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChargeOutcome {
    pub charge_index: usize,
    pub status: ChargeStatus,
    pub invariant: Option<QSeries>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub i: usize,
    pub j: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceReport {
    pub results: Vec<ChargeOutcome>,
    pub comparisons: Vec<Comparison>,
}

impl IndependenceReport {
    pub fn all_equal(&self) -> bool {
        self.comparisons.iter().all(|c| c.equal)
    }
}

/// Computes the invariant for every charge and compares every pair of successes.
///
/// Charges that are not discrete or whose run exceeds the budget are reported
/// and left out of the comparisons. Mismatched dimensions are an input error.
pub fn check_independence(
    q: &Quiver,
    charges: &[CentralCharge],
    degree: u32,
    budget: usize,
) -> Result<IndependenceReport> {
    for z in charges {
        if z.n() != q.n() {
            return Err(Error::DimensionMismatch {
                expected: q.n(),
                found: z.n(),
            });
        }
    }
    let mut results = Vec::with_capacity(charges.len());
    for (charge_index, z) in charges.iter().enumerate() {
        let (status, invariant) = match dt_invariant(q, z, degree, budget) {
            Ok(s) => (ChargeStatus::Ok, Some(s)),
            Err(Error::NondiscreteCharge { .. }) => (ChargeStatus::Nondiscrete, None),
            Err(Error::InfiniteSpectrum { .. }) => (ChargeStatus::Infinite, None),
            Err(e) => return Err(e),
        };
        results.push(ChargeOutcome {
            charge_index,
            status,
            invariant,
        });
    }
    let mut comparisons = Vec::new();
    for (a, ra) in results.iter().enumerate() {
        let Some(sa) = &ra.invariant else { continue };
        for rb in &results[a + 1..] {
            let Some(sb) = &rb.invariant else { continue };
            comparisons.push(Comparison {
                i: ra.charge_index,
                j: rb.charge_index,
                equal: sa.qs_eq(sb)?,
            });
        }
    }
    Ok(IndependenceReport {
        results,
        comparisons,
    })
}
