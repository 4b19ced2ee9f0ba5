//! Quivers as arrow-multiplicity matrices, mutation, and the principal extension.
//!
//! All public indices are 1-based. A framed quiver on `n` mutable vertices has
//! frozen vertices `n+1..=2n`, with `i + n` the frozen partner of `i`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::error::{check_len, Error, Result};

/// An element of the Grothendieck group `Z^n` in the basis of simple classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassVector(Vec<i64>);

impl ClassVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ClassVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ClassVector(vec![0; n])
    }

    /// The class `e_i` of the `i`-th simple (1-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        ClassVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    /// Nonzero and either componentwise `>= 0` or componentwise `<= 0`.
    pub fn is_sign_coherent(&self) -> bool {
        !self.is_zero() && (self.is_nonnegative() || self.is_nonpositive())
    }

    /// Nonzero and componentwise `>= 0`; the shape of every stable class.
    pub fn is_positive_class(&self) -> bool {
        !self.is_zero() && self.is_nonnegative()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn checked_neg(&self) -> Option<Self> {
        self.0
            .iter()
            .map(|x| x.checked_neg())
            .collect::<Option<Vec<_>>>()
            .map(ClassVector)
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(ClassVector)
    }
}

impl From<Vec<i64>> for ClassVector {
    fn from(v: Vec<i64>) -> Self {
        ClassVector(v)
    }
}

impl Index<usize> for ClassVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A bijection of `{1, ..., n}`, stored as the list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Builds a permutation from 1-based images; `None` unless it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation(images))
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Square multiplicity matrix, 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ArrowMatrix {
    size: usize,
    data: Vec<u64>,
}

impl ArrowMatrix {
    fn zero(size: usize) -> Self {
        ArrowMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.size + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, m: u64) {
        self.data[i * self.size + j] = m;
    }

    /// Mutation at `k` (0-based). Arrows between two vertices `>= frozen_from`
    /// are dropped after the three rules.
    fn mutate(&self, k: usize, frozen_from: usize) -> Result<Self> {
        let s = self.size;
        let mut out = self.clone();
        // compose through k
        for i in 0..s {
            let ik = self.get(i, k);
            if i == k || ik == 0 {
                continue;
            }
            for j in 0..s {
                let kj = self.get(k, j);
                if j == k || kj == 0 {
                    continue;
                }
                let add = ik.checked_mul(kj).ok_or(Error::Overflow)?;
                let m = out.get(i, j).checked_add(add).ok_or(Error::Overflow)?;
                out.set(i, j, m);
            }
        }
        // reverse arrows at k
        for i in 0..s {
            if i != k {
                out.set(i, k, self.get(k, i));
                out.set(k, i, self.get(i, k));
            }
        }
        // cancel 2-cycles
        for i in 0..s {
            for j in (i + 1)..s {
                let a = out.get(i, j);
                let b = out.get(j, i);
                let c = a.min(b);
                if c > 0 {
                    out.set(i, j, a - c);
                    out.set(j, i, b - c);
                }
            }
        }
        for i in frozen_from..s {
            for j in frozen_from..s {
                out.set(i, j, 0);
            }
        }
        Ok(out)
    }

    fn arrows(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                let m = self.get(i, j);
                if m > 0 {
                    out.push((i + 1, j + 1, m));
                }
            }
        }
        out
    }
}

/// A 2-acyclic quiver on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    mult: ArrowMatrix,
}

impl Quiver {
    /// Validates an arrow list `(source, target, multiplicity)`; repeated pairs accumulate.
    pub fn new(n: usize, arrows: &[(usize, usize, u64)]) -> Result<Self> {
        let mut mult = ArrowMatrix::zero(n);
        for &(s, t, m) in arrows {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(Error::BadIndex { index: v, n });
                }
            }
            if s == t {
                return Err(Error::LoopArrow { vertex: s });
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity {
                    source: s,
                    target: t,
                });
            }
            if mult.get(t - 1, s - 1) > 0 {
                return Err(Error::TwoCycle {
                    source: s,
                    target: t,
                });
            }
            let total = mult
                .get(s - 1, t - 1)
                .checked_add(m)
                .ok_or(Error::Overflow)?;
            mult.set(s - 1, t - 1, total);
        }
        Ok(Quiver { mult })
    }

    pub fn arrowless(n: usize) -> Self {
        Quiver {
            mult: ArrowMatrix::zero(n),
        }
    }

    /// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i, i + 1, 1)).collect();
        Quiver::new(n, &arrows).expect("linear A_n is 2-acyclic")
    }

    /// The generalized Kronecker quiver with `m` arrows `1 -> 2`.
    pub fn kronecker(m: u64) -> Self {
        Quiver::new(2, &[(1, 2, m)]).expect("Kronecker quiver is 2-acyclic")
    }

    pub fn n(&self) -> usize {
        self.mult.size
    }

    /// Number of arrows `i -> j` (1-based).
    pub fn mult(&self, i: usize, j: usize) -> u64 {
        self.mult.get(i - 1, j - 1)
    }

    /// Arrows as `(source, target, multiplicity)` sorted by `(source, target)`.
    pub fn arrows(&self) -> Vec<(usize, usize, u64)> {
        self.mult.arrows()
    }

    fn check_vertex(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n() {
            Err(Error::BadIndex {
                index: k,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        self.check_vertex(k)?;
        Ok(Quiver {
            mult: self.mult.mutate(k - 1, self.n())?,
        })
    }

    /// The principal extension: one frozen vertex `i + n` and one arrow `i -> i + n` per vertex.
    pub fn frame(&self) -> FramedQuiver {
        let n = self.n();
        let mut mult = ArrowMatrix::zero(2 * n);
        for i in 0..n {
            for j in 0..n {
                mult.set(i, j, self.mult.get(i, j));
            }
            mult.set(i, i + n, 1);
        }
        FramedQuiver { n, mult }
    }

    /// `lambda(e_i, e_j)` as a 0-based matrix.
    pub fn lambda_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.mult.get(i, j) as i64 - self.mult.get(j, i) as i64)
                    .collect()
            })
            .collect()
    }

    /// The skew-symmetric form with `lambda(e_i, e_j) = #(i -> j) - #(j -> i)`.
    pub fn lambda_form(&self, alpha: &ClassVector, beta: &ClassVector) -> Result<i64> {
        let n = self.n();
        check_len(alpha.entries(), n)?;
        check_len(beta.entries(), n)?;
        let mut acc: i64 = 0;
        for i in 0..n {
            for j in 0..n {
                let l = self.mult.get(i, j) as i64 - self.mult.get(j, i) as i64;
                if l == 0 {
                    continue;
                }
                let t = alpha[i]
                    .checked_mul(beta[j])
                    .and_then(|x| x.checked_mul(l))
                    .ok_or(Error::Overflow)?;
                acc = acc.checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(acc)
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n)
            .map(|j| (0..n).filter(|&i| self.mult.get(i, j) > 0).count())
            .collect();
        let mut stack: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for (j, d) in indeg.iter_mut().enumerate() {
                if self.mult.get(i, j) > 0 {
                    *d -= 1;
                    if *d == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == n
    }

    /// `<alpha, beta> = sum_i alpha_i beta_i - sum_{i -> j} alpha_i beta_j`, for acyclic quivers.
    pub fn euler_form(&self, alpha: &ClassVector, beta: &ClassVector) -> Result<i64> {
        let n = self.n();
        check_len(alpha.entries(), n)?;
        check_len(beta.entries(), n)?;
        if !self.is_acyclic() {
            return Err(Error::CyclicQuiver);
        }
        let mut acc: i64 = 0;
        for i in 0..n {
            let d = alpha[i].checked_mul(beta[i]).ok_or(Error::Overflow)?;
            acc = acc.checked_add(d).ok_or(Error::Overflow)?;
            for j in 0..n {
                let m = self.mult.get(i, j) as i64;
                if m > 0 {
                    let t = alpha[i]
                        .checked_mul(beta[j])
                        .and_then(|x| x.checked_mul(m))
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_sub(t).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(acc)
    }

    /// Relabels vertex `i` as `pi(i)`.
    pub fn relabel(&self, pi: &Permutation) -> Result<Self> {
        let n = self.n();
        check_len(pi.images(), n)?;
        let mut mult = ArrowMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                mult.set(pi.images()[i] - 1, pi.images()[j] - 1, self.mult.get(i, j));
            }
        }
        Ok(Quiver { mult })
    }

    /// A permutation `pi` with `self.mult(i, j) == other.mult(pi(i), pi(j))`
    /// for all `i, j`, if one exists. The lexicographically first one is returned.
    pub fn iso_up_to_permutation(&self, other: &Quiver) -> Option<Permutation> {
        let n = self.n();
        if other.n() != n {
            return None;
        }
        let mut sa: Vec<u64> = self.mult.data.clone();
        let mut sb: Vec<u64> = other.mult.data.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        let mut images = Vec::with_capacity(n);
        let mut used = vec![false; n];
        if self.extend_iso(other, &mut images, &mut used) {
            Some(Permutation(images.iter().map(|x| x + 1).collect()))
        } else {
            None
        }
    }

    fn extend_iso(&self, other: &Quiver, images: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = images.len();
        if i == self.n() {
            return true;
        }
        for cand in 0..self.n() {
            if used[cand] {
                continue;
            }
            let consistent = self.mult.get(i, i) == other.mult.get(cand, cand)
                && images.iter().enumerate().all(|(p, &img)| {
                    self.mult.get(p, i) == other.mult.get(img, cand)
                        && self.mult.get(i, p) == other.mult.get(cand, img)
                });
            if !consistent {
                continue;
            }
            images.push(cand);
            used[cand] = true;
            if self.extend_iso(other, images, used) {
                return true;
            }
            images.pop();
            used[cand] = false;
        }
        false
    }
}

/// A quiver in the mutation class of a principal extension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedQuiver {
    n: usize,
    mult: ArrowMatrix,
}

impl FramedQuiver {
    /// Number of mutable vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arrows `i -> j` over all `2n` vertices (1-based).
    pub fn mult(&self, i: usize, j: usize) -> u64 {
        self.mult.get(i - 1, j - 1)
    }

    pub fn arrows(&self) -> Vec<(usize, usize, u64)> {
        self.mult.arrows()
    }

    /// Mutation at a mutable vertex.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k == 0 || k > 2 * self.n {
            return Err(Error::BadIndex {
                index: k,
                n: self.n,
            });
        }
        if k > self.n {
            return Err(Error::FrozenVertex { vertex: k });
        }
        Ok(FramedQuiver {
            n: self.n,
            mult: self.mult.mutate(k - 1, self.n)?,
        })
    }

    /// Entry `i` is `#(j -> i') - #(i' -> j)`.
    pub fn c_vector(&self, j: usize) -> ClassVector {
        assert!(j >= 1 && j <= self.n, "c_vector: vertex {j} is not mutable");
        let n = self.n;
        ClassVector(
            (0..n)
                .map(|i| self.mult.get(j - 1, i + n) as i64 - self.mult.get(i + n, j - 1) as i64)
                .collect(),
        )
    }

    /// The c-vectors of vertices `1..=n`, in order.
    pub fn c_matrix(&self) -> Vec<ClassVector> {
        (1..=self.n).map(|j| self.c_vector(j)).collect()
    }

    /// `j` is green when no arrow runs from a frozen vertex into it.
    pub fn is_green(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.mult.get(i + self.n, j - 1) == 0)
    }

    pub fn green_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.is_green(j)).collect()
    }

    pub fn all_red(&self) -> bool {
        (1..=self.n).all(|j| !self.is_green(j))
    }

    /// Restriction to the mutable vertices.
    pub fn principal_part(&self) -> Quiver {
        let n = self.n;
        let mut mult = ArrowMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                mult.set(i, j, self.mult.get(i, j));
            }
        }
        Quiver { mult }
    }
}
