//! Weights of the hypersurfaces
//! `x1^a1 x2 + x2^a2 x3 + x3^a3 x4 + x4^a4 x1 = 0` in `P(w1, w2, w3, w4)`
//! and the two cyclic singularities left after contracting the curves
//! `(x1 = x3 = 0)` and `(x2 = x4 = 0)`.
//!
//! The weights solve `a1 w1 + w2 = a2 w2 + w3 = a3 w3 + w4 = a4 w4 + w1 = d`.
//! When their gcd `w*` is 1 the contracted surface has singularities
//! `1/s1(w2, w4)` and `1/s2(w1, w3)` with `s1 = a4 w4 - w3` and
//! `s2 = a3 w3 - w2`, whose chains are `[2*(a4-1), a3, a1, 2*(a2-1)]` and
//! `[2*(a3-1), a2, a4, 2*(a1-1)]`.
//!
//! The second congruence in the published derivation is printed modulo `s1`;
//! it only holds modulo `s2`, which is what is checked here.

use crate::error::{Error, Result};
use crate::hjcf::{make_pattern, normalize_type, pattern_determinant, CyclicSingularity, HJFraction};
use crate::scalar::Scalar;

/// The exponents `a1..a4`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KollarParams<T> {
    a: [T; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KollarWeights<T> {
    /// `w1..w4`, already divided by `w*`.
    pub w: [T; 4],
    pub d: T,
    pub wstar: T,
    pub s1: T,
    pub s2: T,
    /// `t1` with `t1 w2 = w4 (mod s1)`; `None` when no such unit exists.
    pub t1: Option<T>,
    /// `t2` with `t2 w1 = w3 (mod s2)`.
    pub t2: Option<T>,
}

/// A singularity with its chain, as produced by [`singularity_types`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedSingularity<T> {
    pub singularity: CyclicSingularity<T>,
    pub chain: HJFraction<T>,
}

impl<T: Scalar> KollarParams<T> {
    pub fn new(a1: T, a2: T, a3: T, a4: T) -> Result<Self> {
        let a = [a1, a2, a3, a4];
        let two = T::from_int(2);
        if let Some(i) = a.iter().position(|x| *x < two) {
            return Err(Error::InvalidKollarParam { index: i + 1, value: a[i].to_string() });
        }
        Ok(Self { a })
    }

    pub fn from_ints(a: [i64; 4]) -> Result<Self> {
        Self::new(T::from_int(a[0]), T::from_int(a[1]), T::from_int(a[2]), T::from_int(a[3]))
    }

    pub fn a(&self) -> &[T; 4] {
        &self.a
    }
}

/// Solves the weight system and reduces by `w*`.
pub fn weights<T: Scalar>(p: &KollarParams<T>) -> KollarWeights<T> {
    let [a1, a2, a3, a4] = p.a.clone();
    let one = T::one();
    let raw = [
        a2.clone() * a3.clone() * a4.clone() - a3.clone() * a4.clone() + a4.clone() - one.clone(),
        a1.clone() * a3.clone() * a4.clone() - a1.clone() * a4.clone() + a1.clone() - one.clone(),
        a1.clone() * a2.clone() * a4.clone() - a1.clone() * a2.clone() + a2.clone() - one.clone(),
        a1.clone() * a2.clone() * a3.clone() - a2.clone() * a3.clone() + a3.clone() - one.clone(),
    ];
    let wstar = raw.iter().fold(T::zero(), |g, x| g.gcd(x));
    let d = (a1.clone() * a2.clone() * a3.clone() * a4.clone() - one) / wstar.clone();
    let w = raw.map(|x| x / wstar.clone());
    let s1 = a4 * w[3].clone() - w[2].clone();
    let s2 = a3 * w[2].clone() - w[1].clone();
    let t1 = normalize_type(s1.clone(), w[1].clone(), w[3].clone()).ok().map(|s| s.q1().clone());
    let t2 = normalize_type(s2.clone(), w[0].clone(), w[2].clone()).ok().map(|s| s.q1().clone());
    KollarWeights { w, d, wstar, s1, s2, t1, t2 }
}

impl<T: Scalar> KollarWeights<T> {
    /// Checks the defining relations and both expressions for `s1`, `s2`.
    pub fn check(&self, p: &KollarParams<T>) -> Result<()> {
        let [a1, a2, a3, a4] = p.a.clone();
        let [w1, w2, w3, w4] = self.w.clone();
        let sums = [
            a1.clone() * w1.clone() + w2.clone(),
            a2.clone() * w2.clone() + w3.clone(),
            a3 * w3.clone() + w4.clone(),
            a4 * w4.clone() + w1.clone(),
        ];
        if sums.iter().any(|s| *s != self.d) {
            return Err(Error::KollarInconsistent(format!("weight relations fail: d={}", self.d)));
        }
        let g = self.w.iter().fold(T::zero(), |g, x| g.gcd(x));
        if !g.is_one() {
            return Err(Error::KollarInconsistent(format!("reduced weights have gcd {g}")));
        }
        if self.s1 != a2 * w2 - w1.clone() {
            return Err(Error::KollarInconsistent("a4 w4 - w3 != a2 w2 - w1".into()));
        }
        if self.s2 != a1 * w1 - w4 {
            return Err(Error::KollarInconsistent("a3 w3 - w2 != a1 w1 - w4".into()));
        }
        Ok(())
    }
}

/// The two singularities `1/s1(1, t1)` and `1/s2(1, t2)` together with their
/// chains. Requires `w* = 1`.
///
/// Both singularities are cross-checked against the pattern determinants and
/// against the chain values `s1/t1`, `s2/t2` (either orientation).
pub fn singularity_types<T: Scalar>(p: &KollarParams<T>) -> Result<(TypedSingularity<T>, TypedSingularity<T>)> {
    let kw = weights(p);
    if !kw.wstar.is_one() {
        return Err(Error::WeightGcdNotOne { wstar: kw.wstar.to_string() });
    }
    kw.check(p)?;
    let [a1, a2, a3, a4] = p.a.clone();
    let [w1, w2, w3, w4] = kw.w.clone();

    let first = typed("s1", normalize_type(kw.s1.clone(), w2, w4)?, [a4.clone(), a3.clone(), a1.clone(), a2.clone()])?;
    let second = typed("s2", normalize_type(kw.s2.clone(), w1, w3)?, [a3, a2, a4, a1])?;
    Ok((first, second))
}

fn typed<T: Scalar>(label: &str, sing: CyclicSingularity<T>, pattern: [T; 4]) -> Result<TypedSingularity<T>> {
    let [a, b, c, d] = pattern;
    let closed = pattern_determinant(a.clone(), b.clone(), c.clone(), d.clone())?;
    if closed != *sing.q() {
        return Err(Error::KollarInconsistent(format!(
            "{label} = {} but the pattern determinant is {closed}",
            sing.q()
        )));
    }
    let chain = make_pattern(a, b, c, d)?;
    let from_chain = chain.singularity()?;
    if !from_chain.same_up_to_orientation(&sing) {
        return Err(Error::KollarInconsistent(format!("chain {chain} evaluates to {from_chain}, expected {sing}")));
    }
    Ok(TypedSingularity { singularity: sing, chain })
}
