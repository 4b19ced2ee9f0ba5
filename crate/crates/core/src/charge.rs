//! Exact rational central charges and phase comparison on the upper half-plane.
//!
//! The half-plane here is `{ im > 0 } ∪ { im = 0, re < 0 }`, so every point has
//! a phase in `(0, 1]` and the negative real axis has phase exactly 1.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{check_len, Error, Result};
use crate::quiver::ClassVector;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalComplex {
    pub re: Rational,
    pub im: Rational,
}

impl RationalComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        RationalComplex { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        RationalComplex {
            re: Rational::from_integer(BigInt::from(re)),
            im: Rational::from_integer(BigInt::from(im)),
        }
    }

    pub fn zero() -> Self {
        RationalComplex::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Membership in the half-plane; excludes zero.
    pub fn in_half_plane(&self) -> bool {
        self.im.is_positive() || (self.im.is_zero() && self.re.is_negative())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RationalComplex {
            re: &self.re * s,
            im: &self.im * s,
        }
    }
}

impl core::ops::Add for &RationalComplex {
    type Output = RationalComplex;
    fn add(self, rhs: Self) -> RationalComplex {
        RationalComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl fmt::Display for RationalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

/// Exact comparison of phases. The negative real axis has the largest phase.
pub fn phase_cmp(w1: &RationalComplex, w2: &RationalComplex) -> Result<Ordering> {
    if !w1.in_half_plane() || !w2.in_half_plane() {
        return Err(Error::OutOfHalfPlane { index: None });
    }
    Ok(match (w1.im.is_zero(), w2.im.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => {
            // sign of re2*im1 - re1*im2; positive means w1 is further counter-clockwise
            let cross = &w2.re * &w1.im - &w1.re * &w2.im;
            cross.cmp(&Rational::zero())
        }
    })
}

/// `arg(w) / pi` in floating point. Display only.
pub fn phase_float(w: &RationalComplex) -> f64 {
    let re = w.re.to_f64().unwrap_or(f64::NAN);
    let im = w.im.to_f64().unwrap_or(f64::NAN);
    if w.im.is_zero() {
        return 1.0;
    }
    libm::atan2(im, re) / core::f64::consts::PI
}

/// A central charge given by its values `z_i = Z(S_i)` on the simple classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CentralCharge {
    z: Vec<RationalComplex>,
}

impl CentralCharge {
    pub fn new(z: Vec<RationalComplex>) -> Result<Self> {
        for (i, zi) in z.iter().enumerate() {
            if !zi.in_half_plane() {
                return Err(Error::OutOfHalfPlane { index: Some(i + 1) });
            }
        }
        Ok(CentralCharge { z })
    }

    /// Convenience constructor from integer pairs `(re, im)`.
    pub fn from_ints(z: &[(i64, i64)]) -> Result<Self> {
        CentralCharge::new(
            z.iter()
                .map(|&(re, im)| RationalComplex::from_ints(re, im))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn values(&self) -> &[RationalComplex] {
        &self.z
    }

    /// `Z(alpha) = sum_i alpha_i z_i` for a nonzero nonnegative class.
    pub fn evaluate(&self, alpha: &ClassVector) -> Result<RationalComplex> {
        check_len(alpha.entries(), self.n())?;
        if alpha.is_zero() {
            return Err(Error::ZeroClass);
        }
        if !alpha.is_nonnegative() {
            return Err(Error::NegativeClass);
        }
        let mut acc = RationalComplex::zero();
        for (a, zi) in alpha.entries().iter().zip(&self.z) {
            if *a != 0 {
                let s = Rational::from_integer(BigInt::from(*a));
                acc = &acc + &zi.scale(&s);
            }
        }
        Ok(acc)
    }

    /// Relabels so that the value at vertex `pi(i)` of the result is `z_i`.
    pub fn relabel(&self, pi: &crate::quiver::Permutation) -> Result<Self> {
        check_len(pi.images(), self.n())?;
        let mut z = self.z.clone();
        for (i, zi) in self.z.iter().enumerate() {
            z[pi.apply(i + 1) - 1] = zi.clone();
        }
        Ok(CentralCharge { z })
    }
}
