//! Independent ground truth for checking the engine.
//!
//! For linearly oriented `A_n` the indecomposables are the interval modules,
//! and an interval is stable exactly when each proper prefix interval has
//! strictly smaller phase. For the two-arrow Kronecker quiver on its divergent
//! side the recorded classes form the progression `(k, k+1)`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::charge::{phase_cmp, CentralCharge, RationalComplex};
use crate::error::{Error, Result};
use crate::quiver::ClassVector;

/// The interval `[lo, hi]` of vertices of `A_n` (1-based, inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn class(&self, n: usize) -> ClassVector {
        ClassVector::new(
            (1..=n)
                .map(|i| (self.lo..=self.hi).contains(&i) as i64)
                .collect(),
        )
    }
}

/// All `n(n+1)/2` interval classes of `A_n`.
pub fn interval_classes(n: usize) -> Vec<ClassVector> {
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            out.push(Interval { lo, hi }.class(n));
        }
    }
    out
}

/// Stable interval classes of linear `A_n` in strictly decreasing phase order.
#[allow(non_snake_case)]
pub fn interval_stables_An(n: usize, z: &CentralCharge) -> Result<Vec<ClassVector>> {
    if z.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: z.n(),
        });
    }
    let zv = z.values();
    let mut stables: Vec<(ClassVector, RationalComplex)> = Vec::new();
    for lo in 1..=n {
        let mut prefixes: Vec<RationalComplex> = Vec::new();
        let mut acc = zv[lo - 1].clone();
        for hi in lo..=n {
            if hi > lo {
                acc = &acc + &zv[hi - 1];
            }
            let mut stable = true;
            for p in &prefixes {
                if phase_cmp(p, &acc)? != Ordering::Less {
                    stable = false;
                    break;
                }
            }
            if stable {
                stables.push((Interval { lo, hi }.class(n), acc.clone()));
            }
            prefixes.push(acc.clone());
        }
    }
    let mut cmp_err = None;
    stables.sort_by(|a, b| match phase_cmp(&b.1, &a.1) {
        Ok(o) => o,
        Err(e) => {
            cmp_err = Some(e);
            Ordering::Equal
        }
    });
    if let Some(e) = cmp_err {
        return Err(e);
    }
    for w in stables.windows(2) {
        if phase_cmp(&w[0].1, &w[1].1)? != Ordering::Greater {
            return Err(Error::PhaseTie);
        }
    }
    Ok(stables.into_iter().map(|(c, _)| c).collect())
}

/// The first `k` classes `(0,1), (1,2), (2,3), ...` of the divergent Kronecker run.
pub fn kronecker_pattern(k: usize) -> Vec<ClassVector> {
    (0..k as i64)
        .map(|i| ClassVector::new(alloc::vec![i, i + 1]))
        .collect()
}
