//! Truncated elements of the completed quantum affine space.
//!
//! Generators `y^alpha` for `alpha` in `N^n` multiply by
//! `y^alpha y^beta = v^{lambda(alpha, beta)} y^{alpha + beta}` with `v^2 = q`.
//! Series are truncated at a total degree bound `D`: every product term with
//! `|alpha + beta| > D` is discarded, which is compatible with the ideal-adic
//! completion, so truncated products are exact up to degree `D`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::HalfPowerPoly;
use crate::quiver::{ClassVector, Quiver};
use crate::ratfunc::RatFunc;

/// Exponent vector of a monomial `y^alpha`.
pub type Exponent = Vec<u32>;

/// The ambient algebra: rank, truncation degree, and the form `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QAlgebra {
    degree: u32,
    lambda: Vec<Vec<i64>>,
}

impl QAlgebra {
    /// `lambda` must be square and skew-symmetric.
    pub fn new(lambda: Vec<Vec<i64>>, degree: u32) -> Result<Self> {
        let n = lambda.len();
        for (i, row) in lambda.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for j in 0..n {
                if lambda[j].len() == n && row[j] != -lambda[j][i] {
                    return Err(Error::IncompatibleAlgebras);
                }
            }
        }
        Ok(QAlgebra { degree, lambda })
    }

    /// The algebra of `q` with its skew-symmetrized arrow-count form.
    pub fn for_quiver(q: &Quiver, degree: u32) -> Self {
        QAlgebra {
            degree,
            lambda: q.lambda_matrix(),
        }
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn lambda_matrix(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    pub fn lambda(&self, a: &[u32], b: &[u32]) -> i64 {
        let mut acc = 0i64;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc += self.lambda[i][j] * ai as i64 * bj as i64;
                }
            }
        }
        acc
    }

    pub fn one(&self) -> QSeries {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; self.rank()], RatFunc::one());
        QSeries {
            algebra: self.clone(),
            terms,
        }
    }

    pub fn zero(&self) -> QSeries {
        QSeries {
            algebra: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `y^alpha` with coefficient 1.
    pub fn monomial(&self, alpha: &ClassVector) -> Result<QSeries> {
        let exp = self.exponent(alpha)?;
        let d = total(&exp);
        if d > self.degree as u64 {
            return Err(Error::DegreeOverflow {
                degree: d.min(u32::MAX as u64) as u32,
                bound: self.degree,
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(exp, RatFunc::one());
        Ok(QSeries {
            algebra: self.clone(),
            terms,
        })
    }

    fn exponent(&self, alpha: &ClassVector) -> Result<Exponent> {
        if alpha.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: alpha.len(),
            });
        }
        alpha
            .entries()
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::NegativeClass))
            .collect()
    }

    /// Builds a series from explicit terms; zero coefficients are dropped.
    pub fn series<I>(&self, terms: I) -> Result<QSeries>
    where
        I: IntoIterator<Item = (Exponent, RatFunc)>,
    {
        let mut out = self.zero();
        for (exp, c) in terms {
            if exp.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    found: exp.len(),
                });
            }
            let d = total(&exp);
            if d > self.degree as u64 {
                return Err(Error::DegreeOverflow {
                    degree: d.min(u32::MAX as u64) as u32,
                    bound: self.degree,
                });
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

fn total(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

/// Graded order: total degree ascending, then exponents lexicographically descending.
fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    total(a).cmp(&total(b)).then_with(|| b.cmp(a))
}

/// A truncated series `sum_alpha c_alpha y^alpha` with rational-function coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    algebra: QAlgebra,
    terms: BTreeMap<Exponent, RatFunc>,
}

impl QSeries {
    pub fn algebra(&self) -> &QAlgebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn degree(&self) -> u32 {
        self.algebra.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> RatFunc {
        self.terms.get(exp).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Nonzero terms in graded order.
    pub fn terms(&self) -> Vec<(&Exponent, &RatFunc)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| graded_cmp(a.0, b.0));
        t
    }

    fn add_term(&mut self, exp: Exponent, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &QSeries) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::IncompatibleAlgebras)
        }
    }

    /// The truncated product in the quantum affine space.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_compatible(other)?;
        let bound = self.algebra.degree as u64;
        let mut buckets: BTreeMap<Exponent, Vec<RatFunc>> = BTreeMap::new();
        let right: Vec<(&Exponent, &RatFunc, u64)> =
            other.terms.iter().map(|(e, c)| (e, c, total(e))).collect();
        for (a, ca) in &self.terms {
            let da = total(a);
            for &(b, cb, db) in &right {
                if da + db > bound {
                    continue;
                }
                let exp: Exponent = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                let twist = self.algebra.lambda(a, b);
                buckets
                    .entry(exp)
                    .or_default()
                    .push(ca.mul(cb).mul_v_pow(twist));
            }
        }
        let mut out = self.algebra.zero();
        for (exp, parts) in buckets {
            let sum = sum_ratfuncs(parts);
            if !sum.is_zero() {
                out.terms.insert(exp, sum);
            }
        }
        Ok(out)
    }

    /// Two-sided inverse up to the truncation degree, by recursion on total degree.
    pub fn inv(&self) -> Result<QSeries> {
        let n = self.rank();
        let zero_exp = vec![0u32; n];
        let a0 = self
            .terms
            .get(&zero_exp)
            .ok_or(Error::NonUnitConstantTerm)?;
        let a0_inv = a0.inv()?;
        let mut out = self.algebra.zero();
        out.terms.insert(zero_exp.clone(), a0_inv.clone());
        let higher: Vec<(&Exponent, &RatFunc)> =
            self.terms.iter().filter(|(e, _)| **e != zero_exp).collect();
        for d in 1..=self.algebra.degree {
            for gamma in compositions(d, n) {
                let mut parts = Vec::new();
                for &(alpha, ca) in &higher {
                    if alpha.iter().zip(&gamma).any(|(a, g)| a > g) {
                        continue;
                    }
                    let rest: Exponent = gamma.iter().zip(alpha).map(|(g, a)| g - a).collect();
                    if let Some(cb) = out.terms.get(&rest) {
                        let twist = self.algebra.lambda(alpha, &rest);
                        parts.push(ca.mul(cb).mul_v_pow(twist));
                    }
                }
                let s = sum_ratfuncs(parts);
                if !s.is_zero() {
                    out.terms.insert(gamma, a0_inv.mul(&s).neg());
                }
            }
        }
        Ok(out)
    }

    /// Termwise equality of coefficients by cross-multiplication.
    pub fn qs_eq(&self, other: &QSeries) -> Result<bool> {
        self.check_compatible(other)?;
        if self.terms.len() != other.terms.len() {
            return Ok(false);
        }
        Ok(self
            .terms
            .iter()
            .zip(&other.terms)
            .all(|((ea, ca), (eb, cb))| ea == eb && ca.eq_cross(cb)))
    }

    /// Maps the exponent at index `i` to index `pi(i)` (1-based permutation).
    pub fn relabel(&self, pi: &crate::quiver::Permutation, algebra: &QAlgebra) -> Result<QSeries> {
        let mut out = algebra.zero();
        for (e, c) in &self.terms {
            let mut f = vec![0u32; e.len()];
            for (i, x) in e.iter().enumerate() {
                f[pi.apply(i + 1) - 1] = *x;
            }
            out.terms.insert(f, c.clone());
        }
        if out.rank() != self.rank() || out.degree() != self.degree() {
            return Err(Error::IncompatibleAlgebras);
        }
        Ok(out)
    }
}

/// Balanced pairwise summation keeps intermediate denominators small.
fn sum_ratfuncs(mut parts: Vec<RatFunc>) -> RatFunc {
    if parts.is_empty() {
        return RatFunc::zero();
    }
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut it = parts.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.add(&b)),
                None => next.push(a),
            }
        }
        parts = next;
    }
    parts.pop().unwrap()
}

/// All exponent vectors of length `n` and total degree `d`.
fn compositions(d: u32, n: usize) -> Vec<Exponent> {
    fn rec(d: u32, n: usize, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=d {
            prefix.push(first);
            rec(d - first, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(d, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Canonical text: one `y[a,b,...]: num/den` line per term in graded order.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            f.write_str("y[")?;
            for (i, x) in e.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]: {c}")?;
        }
        Ok(())
    }
}

/// The `k`-th quantum dilogarithm coefficient `v^{k^2} / prod_{j<k} (v^{2k} - v^{2j})`.
pub fn qdilog_coefficient(k: u32) -> RatFunc {
    let k = k as i64;
    let mut den = HalfPowerPoly::one();
    for j in 0..k {
        let factor = HalfPowerPoly::from_terms([(2 * k, BigInt::one()), (2 * j, -BigInt::one())]);
        den = &den * &factor;
    }
    RatFunc::new(HalfPowerPoly::v_pow(k * k), den).expect("nonzero product")
}

/// `E(y^beta) = sum_k c_k y^{k beta}`, truncated at the algebra's degree.
pub fn qdilog(algebra: &QAlgebra, beta: &ClassVector) -> Result<QSeries> {
    let exp = algebra.exponent(beta)?;
    let step = total(&exp);
    if step == 0 {
        return Err(Error::ZeroClass);
    }
    let mut out = algebra.one();
    let mut k = 1u32;
    while step * k as u64 <= algebra.degree as u64 {
        let e: Exponent = exp.iter().map(|x| x * k).collect();
        out.terms.insert(e, qdilog_coefficient(k));
        k += 1;
    }
    Ok(out)
}
