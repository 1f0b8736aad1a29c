//! Hirzebruch-Jung continued fractions and cyclic quotient singularities.
//!
//! A chain `[n_1, ..., n_l]` with every `n_j >= 2` stands for the nested
//! fraction `n_1 - 1/(n_2 - 1/(... - 1/n_l))`, and for the string of smooth
//! rational curves with self-intersections `-n_1, ..., -n_l` that resolves
//! the cyclic singularity `1/q(1, q1)` where `q/q1` is that fraction.
//!
//! Everything here is exact. Values are generic over [`Scalar`].

use std::fmt;

use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{join, Scalar};

/// A Hirzebruch-Jung continued fraction. Every entry is at least 2; the
/// empty chain is allowed and stands for a smooth point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HJFraction<T> {
    entries: Vec<T>,
}

/// The partial determinants `u_0..u_{l+1}` and `v_0..v_{l+1}` of a chain.
///
/// `u_j` is the determinant of the first `j - 1` entries and `v_j` of the
/// entries after position `j`, with `u_0 = 0, u_1 = 1, v_l = 1, v_{l+1} = 0`.
/// Both ends meet at the full determinant: `u_{l+1} = v_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrders<T> {
    pub u: Vec<T>,
    pub v: Vec<T>,
}

/// A cyclic quotient singularity `1/q(1, q1)` with `q >= 2`,
/// `1 <= q1 < q` and `gcd(q, q1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSingularity<T> {
    q: T,
    q1: T,
}

impl<T: Scalar> HJFraction<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        let two = T::from_int(2);
        if let Some((index, entry)) = entries.iter().enumerate().find(|(_, n)| **n < two) {
            return Err(Error::EntryTooSmall { index: index + 1, entry: entry.to_string() });
        }
        Ok(Self { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&n| T::from_int(n)).collect())
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every entry is 2, i.e. the chain of an `A_l` (du Val)
    /// singularity.
    pub fn is_du_val(&self) -> bool {
        let two = T::from_int(2);
        self.entries.iter().all(|n| *n == two)
    }

    /// Converts the entries into another scalar type.
    pub fn cast<U: Scalar>(&self) -> HJFraction<U> {
        HJFraction {
            entries: self
                .entries
                .iter()
                .map(|n| U::from_i128(n.to_i128().expect("entry fits in i128")).expect("entry fits"))
                .collect(),
        }
    }

    /// `|w|`, the absolute determinant of the tridiagonal intersection
    /// matrix, via `u_{j+1} = n_j u_j - u_{j-1}`.
    pub fn determinant(&self) -> T {
        let (mut prev, mut cur) = (T::zero(), T::one());
        for n in &self.entries {
            let next = n.clone() * cur.clone() - prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// The value `q/q1` of the nested fraction, in lowest terms.
    pub fn evaluate(&self) -> Result<Ratio<T>> {
        if self.is_empty() {
            return Err(Error::EmptyChain);
        }
        let q = self.determinant();
        let q1 = tail_determinant(&self.entries[1..]);
        Ok(Ratio::new_raw(q, q1))
    }

    pub fn partial_orders(&self) -> PartialOrders<T> {
        let l = self.len();
        let mut u = Vec::with_capacity(l + 2);
        u.push(T::zero());
        u.push(T::one());
        for j in 0..l {
            let next = self.entries[j].clone() * u[j + 1].clone() - u[j].clone();
            u.push(next);
        }
        // v is the same recurrence run from the far end.
        let mut v_rev = Vec::with_capacity(l + 2);
        v_rev.push(T::zero());
        v_rev.push(T::one());
        for j in 0..l {
            let n = self.entries[l - 1 - j].clone();
            let next = n * v_rev[j + 1].clone() - v_rev[j].clone();
            v_rev.push(next);
        }
        v_rev.reverse();
        PartialOrders { u, v: v_rev }
    }

    /// Determinant of the chain with entry `j` (1-based) raised by one,
    /// computed from the identity `v_j u_j + |w|` rather than by
    /// re-evaluating the modified chain.
    pub fn bump_determinant(&self, j: usize) -> Result<T> {
        if j == 0 || j > self.len() {
            return Err(Error::IndexOutOfRange { index: j, len: self.len() });
        }
        let po = self.partial_orders();
        Ok(po.v[j].clone() * po.u[j].clone() + self.determinant())
    }

    /// The chain with entry `j` (1-based) raised by one.
    pub fn bumped(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.len() {
            return Err(Error::IndexOutOfRange { index: j, len: self.len() });
        }
        let mut entries = self.entries.clone();
        entries[j - 1] = entries[j - 1].clone() + T::one();
        Ok(Self { entries })
    }

    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }

    /// Coefficients `1 - (u_j + v_j)/|w|` of the chain's curves in
    /// `f^*K - K` for the minimal resolution `f`. All lie in `[0, 1)`.
    pub fn discrepancy_coefficients(&self) -> Result<Vec<Ratio<T>>> {
        if self.is_empty() {
            return Err(Error::EmptyChain);
        }
        let q = self.determinant();
        let po = self.partial_orders();
        Ok((1..=self.len()).map(|j| Ratio::one() - Ratio::new(po.u[j].clone() + po.v[j].clone(), q.clone())).collect())
    }

    /// The singularity this chain resolves, read off with the canonical
    /// orientation `q/q1 = evaluate(self)`.
    pub fn singularity(&self) -> Result<CyclicSingularity<T>> {
        let r = self.evaluate()?;
        CyclicSingularity::new(r.numer().clone(), r.denom().clone())
    }
}

fn tail_determinant<T: Scalar>(entries: &[T]) -> T {
    let (mut prev, mut cur) = (T::zero(), T::one());
    for n in entries {
        let next = n.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl<T: Scalar> fmt::Display for HJFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.entries, ","))
    }
}

/// Inverse of [`HJFraction::evaluate`]: expands `q/q1` by repeated
/// ceiling division.
pub fn expand<T: Scalar>(q: T, q1: T) -> Result<HJFraction<T>> {
    let sing = CyclicSingularity::new(q, q1)?;
    Ok(sing.chain())
}

/// `[2*(a-1), b, c, 2*(d-1)]`: a run of `a - 1` twos, then `b`, `c`, then
/// `d - 1` twos.
pub fn make_pattern<T: Scalar>(a: T, b: T, c: T, d: T) -> Result<HJFraction<T>> {
    check_pattern(&a, &b, &c, &d)?;
    let two = T::from_int(2);
    let run = |k: &T| -> Vec<T> {
        let n = (k.clone() - T::one()).to_usize().expect("run length fits in usize");
        vec![two.clone(); n]
    };
    let mut entries = run(&a);
    entries.push(b);
    entries.push(c);
    entries.extend(run(&d));
    Ok(HJFraction { entries })
}

/// Closed form `abcd - abd - acd + ab + cd - a - d + 1` for the determinant
/// of [`make_pattern`]`(a, b, c, d)`.
pub fn pattern_determinant<T: Scalar>(a: T, b: T, c: T, d: T) -> Result<T> {
    check_pattern(&a, &b, &c, &d)?;
    let abcd = a.clone() * b.clone() * c.clone() * d.clone();
    let abd = a.clone() * b.clone() * d.clone();
    let acd = a.clone() * c.clone() * d.clone();
    let ab = a.clone() * b;
    let cd = c * d.clone();
    Ok(abcd - abd - acd + ab + cd - a - d + T::one())
}

fn check_pattern<T: Scalar>(a: &T, b: &T, c: &T, d: &T) -> Result<()> {
    let one = T::one();
    let two = T::from_int(2);
    for (name, v, lo) in [("a", a, &one), ("b", b, &two), ("c", c, &two), ("d", d, &one)] {
        if v < lo {
            return Err(Error::InvalidPattern {
                name,
                value: v.to_string(),
                reason: if *lo == one { "must be at least 1" } else { "must be at least 2" },
            });
        }
    }
    Ok(())
}

/// Solves `t * wa = wb (mod q)` and returns `1/q(1, t)`.
///
/// This rewrites a type `1/q(wa, wb)` in the normal form `1/q(1, t)`.
pub fn normalize_type<T: Scalar>(q: T, wa: T, wb: T) -> Result<CyclicSingularity<T>> {
    if q < T::from_int(2) {
        return Err(Error::InvalidSingularity { q: q.to_string(), q1: "?".into(), reason: "order must be at least 2" });
    }
    let inv = mod_inverse(&wa, &q)?;
    let t = (wb.clone() * inv).mod_floor(&q);
    if t.is_zero() || !t.gcd(&q).is_one() {
        return Err(Error::NotInvertible { value: wb.to_string(), modulus: q.to_string() });
    }
    CyclicSingularity::new(q, t)
}

/// The inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse<T: Scalar>(a: &T, m: &T) -> Result<T> {
    let g = a.mod_floor(m).extended_gcd(m);
    if !g.gcd.is_one() {
        return Err(Error::NotInvertible { value: a.to_string(), modulus: m.to_string() });
    }
    Ok(g.x.mod_floor(m))
}

impl<T: Scalar> CyclicSingularity<T> {
    pub fn new(q: T, q1: T) -> Result<Self> {
        let bad = |reason| Error::InvalidSingularity { q: q.to_string(), q1: q1.to_string(), reason };
        if q < T::from_int(2) {
            return Err(bad("order must be at least 2"));
        }
        if q1 < T::one() || q1 >= q {
            return Err(bad("need 1 <= q1 < q"));
        }
        if !q.gcd(&q1).is_one() {
            return Err(bad("q and q1 must be coprime"));
        }
        Ok(Self { q, q1 })
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn q1(&self) -> &T {
        &self.q1
    }

    /// The same singularity presented with the coordinates swapped:
    /// `1/q(1, q1')` with `q1 q1' = 1 (mod q)`. Its chain is the reverse.
    pub fn swapped(&self) -> Self {
        let inv = mod_inverse(&self.q1, &self.q).expect("q1 is a unit mod q");
        Self { q: self.q.clone(), q1: inv }
    }

    /// Equality up to the choice of which end of the chain comes first.
    pub fn same_up_to_orientation(&self, other: &Self) -> bool {
        self == other || *self == other.swapped()
    }

    /// The chain of `q/q1`, by ceiling division.
    pub fn chain(&self) -> HJFraction<T> {
        let mut entries = Vec::new();
        let (mut num, mut den) = (self.q.clone(), self.q1.clone());
        while !den.is_zero() {
            let n = num.div_ceil(&den);
            let rest = n.clone() * den.clone() - num;
            entries.push(n);
            num = den;
            den = rest;
        }
        HJFraction { entries }
    }
}

impl<T: Scalar> fmt::Display for CyclicSingularity<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.q, self.q1)
    }
}

impl<T: Scalar> fmt::Display for PartialOrders<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u=({}), v=({})", join(&self.u, ","), join(&self.v, ","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn w(entries: &[i64]) -> HJFraction<i64> {
        HJFraction::from_ints(entries).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(w(&[]).determinant(), 1);
        assert_eq!(w(&[2, 2, 2]).determinant(), 4);
        assert_eq!(w(&[2, 3, 2]).determinant(), 8);
        assert_eq!(w(&[3, 2, 2]).determinant(), 7);
    }

    #[test]
    fn entries_below_two_rejected() {
        assert!(matches!(HJFraction::<i64>::from_ints(&[3, 1]), Err(Error::EntryTooSmall { index: 2, .. })));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(w(&[2]).evaluate().unwrap(), Ratio::new(2, 1));
        assert_eq!(w(&[3, 2, 2]).evaluate().unwrap(), Ratio::new(7, 3));
        assert_eq!(w(&[2, 3, 4, 2]).evaluate().unwrap(), Ratio::new(31, 19));
        assert_eq!(w(&[]).evaluate(), Err(Error::EmptyChain));
    }

    #[test]
    fn partial_orders_examples() {
        let po = w(&[3, 2, 2]).partial_orders();
        assert_eq!(po.u, vec![0, 1, 3, 5, 7]);
        assert_eq!(po.v, vec![7, 3, 2, 1, 0]);
        let po = w(&[2]).partial_orders();
        assert_eq!(po.u, vec![0, 1, 2]);
        assert_eq!(po.v, vec![2, 1, 0]);
        let po = w(&[]).partial_orders();
        assert_eq!(po.u, vec![0, 1]);
        assert_eq!(po.v, vec![1, 0]);
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(2i64, 1).unwrap(), w(&[2]));
        assert_eq!(expand(7i64, 3).unwrap(), w(&[3, 2, 2]));
        assert_eq!(expand(31i64, 19).unwrap(), w(&[2, 3, 4, 2]));
        assert!(expand(6i64, 4).is_err());
        assert!(expand(5i64, 5).is_err());
        assert!(expand(1i64, 1).is_err());
        assert!(expand(5i64, 0).is_err());
    }

    #[test]
    fn bump_examples() {
        assert_eq!(w(&[2, 2, 2]).bump_determinant(2).unwrap(), 8);
        assert_eq!(w(&[2]).bump_determinant(1).unwrap(), 3);
        assert_eq!(w(&[3, 2, 2]).bump_determinant(1).unwrap(), 10);
        assert_eq!(w(&[4, 2, 2]).determinant(), 10);
        assert!(w(&[2, 2]).bump_determinant(0).is_err());
        assert!(w(&[2, 2]).bump_determinant(3).is_err());
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(make_pattern(1i64, 3, 4, 1).unwrap(), w(&[3, 4]));
        assert_eq!(make_pattern(2i64, 3, 4, 2).unwrap(), w(&[2, 3, 4, 2]));
        assert_eq!(make_pattern(5i64, 4, 4, 4).unwrap(), w(&[2, 2, 2, 2, 4, 4, 2, 2, 2]));
        assert!(make_pattern(1i64, 1, 4, 1).is_err());
        assert!(make_pattern(0i64, 2, 4, 1).is_err());
        assert_eq!(pattern_determinant(2i64, 2, 2, 2).unwrap(), 5);
        assert_eq!(pattern_determinant(2i64, 3, 4, 2).unwrap(), 31);
        for a in 1..6i64 {
            for d in 1..6i64 {
                assert_eq!(pattern_determinant(a, 2, 2, d).unwrap(), a + d + 1);
            }
        }
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w(&[3, 2, 2]).reverse(), w(&[2, 2, 3]));
        assert_eq!(w(&[2, 2, 3]).determinant(), 7);
        assert_eq!(w(&[]).reverse(), w(&[]));
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(w(&[2]).discrepancy_coefficients().unwrap(), vec![Ratio::from_integer(0)]);
        assert!(w(&[2, 2, 2]).discrepancy_coefficients().unwrap().iter().all(|d| d.is_zero()));
        assert_eq!(
            w(&[3, 2, 2]).discrepancy_coefficients().unwrap(),
            vec![Ratio::new(3, 7), Ratio::new(2, 7), Ratio::new(1, 7)]
        );
        assert_eq!(w(&[]).discrepancy_coefficients(), Err(Error::EmptyChain));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_type(7i64, 1, 3).unwrap(), CyclicSingularity::new(7, 3).unwrap());
        assert_eq!(normalize_type(188i64, 63, 51).unwrap(), CyclicSingularity::new(188, 153).unwrap());
        assert_eq!(normalize_type(5i64, 2, 2).unwrap(), CyclicSingularity::new(5, 1).unwrap());
        assert!(matches!(normalize_type(6i64, 2, 1), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn swapped_reverses_chain() {
        let s = CyclicSingularity::new(7i64, 3).unwrap();
        assert_eq!(s.swapped(), CyclicSingularity::new(7, 5).unwrap());
        assert_eq!(s.swapped().chain(), s.chain().reverse());
        assert!(s.same_up_to_orientation(&CyclicSingularity::new(7, 5).unwrap()));
        assert!(!s.same_up_to_orientation(&CyclicSingularity::new(7, 2).unwrap()));
    }

    #[test]
    fn bigint_agrees_with_i64() {
        let small = w(&[2, 3, 4, 2, 5, 7]);
        let big: HJFraction<BigInt> = small.cast();
        assert_eq!(big.determinant(), BigInt::from(small.determinant()));
        // 40 entries of 3 overflows nothing in BigInt
        let long = HJFraction::<BigInt>::from_ints(&[3; 60]).unwrap();
        assert!(long.determinant() > BigInt::from(i64::MAX));
        let r = long.evaluate().unwrap();
        assert_eq!(expand(r.numer().clone(), r.denom().clone()).unwrap(), long);
    }

    #[test]
    fn display() {
        assert_eq!(w(&[3, 2, 2]).to_string(), "[3,2,2]");
        assert_eq!(CyclicSingularity::new(188i64, 153).unwrap().to_string(), "1/188(1,153)");
    }
}
