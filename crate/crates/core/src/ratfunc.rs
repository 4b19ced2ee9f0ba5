//! The fraction field `Q(v)` with reduced numerator/denominator pairs.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::HalfPowerPoly;

/// A rational function `num / den` in `v`.
///
/// Normal form: `den` has lowest exponent 0 and positive leading coefficient,
/// and `gcd(num, den)` is a unit monomial. Zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: HalfPowerPoly,
    den: HalfPowerPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: HalfPowerPoly::zero(),
            den: HalfPowerPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(HalfPowerPoly::one())
    }

    pub fn from_poly(p: HalfPowerPoly) -> Self {
        RatFunc {
            num: p,
            den: HalfPowerPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(HalfPowerPoly::constant(BigInt::from(c)))
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        RatFunc::from_poly(HalfPowerPoly::v_pow(k))
    }

    pub fn new(num: HalfPowerPoly, den: HalfPowerPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: HalfPowerPoly, den: HalfPowerPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::fix_units(num, den)
    }

    /// Moves the monomial part and sign of `den` into `num`.
    fn fix_units(mut num: HalfPowerPoly, mut den: HalfPowerPoly) -> Self {
        let low = den.low().expect("nonzero denominator");
        if low != 0 {
            num = num.shift(-low);
            den = den.shift(-low);
        }
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &HalfPowerPoly {
        &self.num
    }

    pub fn denom(&self) -> &HalfPowerPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (a_co, b_co) = if g.is_one() {
            (rhs.den.clone(), self.den.clone())
        } else {
            (
                rhs.den.div_exact(&g).expect("gcd divides"),
                self.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &a_co) + &(&rhs.num * &b_co);
        let den = &self.den * &a_co;
        Self::reduce(num, den)
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel so the product stays reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |p: &HalfPowerPoly, g: &HalfPowerPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        Self::fix_units(num, den)
    }

    /// Multiplication by `v^k`.
    pub fn mul_v_pow(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_units(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Equality by cross-multiplication; independent of normal form.
    pub fn eq_cross(&self, rhs: &Self) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl core::ops::Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::mul(&self, &rhs)
    }
}

/// `num/den`, both in the text polynomial format.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
