//! Laurent polynomials in `v = q^{1/2}` with big-integer coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A Laurent polynomial `sum_k c_k v^k`.
///
/// Stored densely from the lowest nonzero exponent to the highest; both ends
/// are nonzero, and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfPowerPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl HalfPowerPoly {
    pub fn zero() -> Self {
        HalfPowerPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// `coeffs[k]` is the coefficient of `v^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = HalfPowerPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// A single term `c * v^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        HalfPowerPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        HalfPowerPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Greatest common divisor in `Z[v, v^-1]`, up to units.
    ///
    /// The result is normalized to lowest exponent 0 and positive leading
    /// coefficient, and carries the gcd of the contents. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (true, false) => return other.normalized_associate(),
            (false, true) => return self.normalized_associate(),
            _ => {}
        }
        if self.is_monomial() || other.is_monomial() {
            let c = self.content().gcd(&other.content());
            return Self::constant(c);
        }
        let ca = self.content();
        let cb = other.content();
        let mut a: Vec<BigInt> = self.coeffs.iter().map(|x| x / &ca).collect();
        let mut b: Vec<BigInt> = other.coeffs.iter().map(|x| x / &cb).collect();
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = primitive(r);
        }
        let g = if b.is_empty() {
            a
        } else {
            // nonzero constant remainder: coprime
            vec![BigInt::one()]
        };
        let mut g = HalfPowerPoly::from_coeffs(0, g);
        if g.leading_coeff().is_some_and(Signed::is_negative) {
            g = -g;
        }
        g.scale(&ca.gcd(&cb))
    }

    /// The associate with lowest exponent 0 and positive leading coefficient.
    pub fn normalized_associate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = HalfPowerPoly {
            low: 0,
            coeffs: self.coeffs.clone(),
        };
        if p.leading_coeff().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[v, v^-1]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.coeffs.len() > self.coeffs.len() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let db = d.coeffs.len();
        let lb = d.coeffs.last().unwrap();
        let mut q = vec![BigInt::zero(); r.len() - db + 1];
        for s in (0..q.len()).rev() {
            let lr = &r[s + db - 1];
            if lr.is_zero() {
                continue;
            }
            let (qc, rem) = lr.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[s + i] -= &qc * c;
            }
            q[s] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - d.low, q))
    }
}

/// `lc(b)^k * a mod b` over the integers, with per-step cofactor reduction.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let g = lr.gcd(lb);
        let mr = &lr / &g;
        let mb = lb / &g;
        let shift = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= &mb;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &mr * c;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = p
        .iter()
        .fold(BigInt::zero(), |g, x| if g.is_one() { g } else { g.gcd(x) });
    if !c.is_zero() && !c.is_one() {
        for x in p.iter_mut() {
            *x /= &c;
        }
    }
    p
}

impl Add for &HalfPowerPoly {
    type Output = HalfPowerPoly;
    fn add(self, rhs: Self) -> HalfPowerPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().unwrap().max(rhs.high().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for p in [self, rhs] {
            let off = (p.low - low) as usize;
            for (k, c) in p.coeffs.iter().enumerate() {
                coeffs[off + k] += c;
            }
        }
        HalfPowerPoly::from_coeffs(low, coeffs)
    }
}

impl Neg for HalfPowerPoly {
    type Output = HalfPowerPoly;
    fn neg(mut self) -> HalfPowerPoly {
        for c in self.coeffs.iter_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &HalfPowerPoly {
    type Output = HalfPowerPoly;
    fn neg(self) -> HalfPowerPoly {
        -self.clone()
    }
}

impl Sub for &HalfPowerPoly {
    type Output = HalfPowerPoly;
    fn sub(self, rhs: Self) -> HalfPowerPoly {
        self + &(-rhs)
    }
}

impl Mul for &HalfPowerPoly {
    type Output = HalfPowerPoly;
    fn mul(self, rhs: Self) -> HalfPowerPoly {
        if self.is_zero() || rhs.is_zero() {
            return HalfPowerPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HalfPowerPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

/// Descending exponents, e.g. `v^3 - 2*v + 1` or `v^-2`; zero prints as `0`.
impl fmt::Display for HalfPowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, false) => write!(f, "{mag}*")?,
                _ => {}
            }
            match e {
                0 => {}
                1 => f.write_str("v")?,
                _ => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for HalfPowerPoly {
    type Err = Error;

    /// Parses sums of terms `[c][*]v[^e]` or `c`, e.g. `"-3*v^-2 + v - 7"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_digits = |pos: &mut usize| -> Option<String> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (*pos > start).then(|| String::from(&s[start..*pos]))
        };
        let mut terms = Vec::new();
        let mut first = true;
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(Error::Parse { position: 0 });
        }
        while pos < bytes.len() {
            let mut negative = false;
            if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                negative = bytes[pos] == b'-';
                pos += 1;
                skip_ws(&mut pos);
            } else if !first {
                return Err(Error::Parse { position: pos });
            }
            first = false;
            let coeff_digits = read_digits(&mut pos);
            skip_ws(&mut pos);
            let mut has_v = false;
            if pos < bytes.len() && bytes[pos] == b'*' {
                if coeff_digits.is_none() {
                    return Err(Error::Parse { position: pos });
                }
                pos += 1;
                skip_ws(&mut pos);
                if pos >= bytes.len() || bytes[pos] != b'v' {
                    return Err(Error::Parse { position: pos });
                }
            }
            if pos < bytes.len() && bytes[pos] == b'v' {
                has_v = true;
                pos += 1;
            }
            if coeff_digits.is_none() && !has_v {
                return Err(Error::Parse { position: pos });
            }
            let mut exp: i64 = if has_v { 1 } else { 0 };
            if has_v && pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let neg_exp = pos < bytes.len() && bytes[pos] == b'-';
                if neg_exp {
                    pos += 1;
                }
                let d = read_digits(&mut pos).ok_or(Error::Parse { position: pos })?;
                let e: i64 = d.parse().map_err(|_| Error::Parse { position: pos })?;
                exp = if neg_exp { -e } else { e };
            }
            let mut c = match coeff_digits {
                Some(d) => d
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse { position: pos })?,
                None => BigInt::one(),
            };
            if negative {
                c = -c;
            }
            terms.push((exp, c));
            skip_ws(&mut pos);
        }
        Ok(HalfPowerPoly::from_terms(terms))
    }
}
