//! Invariant suites run by `qhpp verify`.
//!
//! Each check enumerates its parameter range and stops at the first
//! counterexample.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::contraction::KClass;
use crate::error::Error;
use crate::families::{build, build_s1, build_s3, build_t, FamilyBuild, FamilyId};
use crate::hjcf::{expand, make_pattern, pattern_determinant, CyclicSingularity, HJFraction};
use crate::kollar::{singularity_types, weights, KollarParams};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hjcf,
    Kollar,
    Families,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "hjcf" => Ok(Suite::Hjcf),
            "kollar" => Ok(Suite::Kollar),
            "families" => Ok(Suite::Families),
            "all" => Ok(Suite::All),
            other => Err(Error::Output(format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS  {} ({} cases)", self.name, self.cases)?,
            Some(why) => write!(f, "FAIL  {} ({} cases): {}", self.name, self.cases, why)?,
        }
        if let Some(note) = &self.note {
            write!(f, "; {note}")?;
        }
        Ok(())
    }
}

/// Runs `f` over `cases` in order and reports the first failure.
fn check<C, F>(name: &str, cases: &[C], f: F) -> CheckResult
where
    C: fmt::Debug + Sync,
    F: Fn(&C) -> Result<(), String> + Sync,
{
    let failure = cases
        .par_iter()
        .map(|c| f(c).map_err(|e| format!("{c:?}: {e}")))
        .collect::<Vec<_>>()
        .into_iter()
        .find_map(|r| r.err());
    CheckResult { name: name.to_string(), cases: cases.len(), failure, note: None }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn run(suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::Hjcf => hjcf_suite(),
        Suite::Kollar => kollar_suite(),
        Suite::Families => families_suite(),
        Suite::All => {
            let mut v = hjcf_suite();
            v.extend(kollar_suite());
            v.extend(families_suite());
            v
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn hjcf_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();

    let pairs: Vec<(i64, i64)> =
        (2..=500i64).flat_map(|q| (1..q).filter(move |q1| q.gcd(q1) == 1).map(move |q1| (q, q1))).collect();
    out.push(check("expand/evaluate round trip, q <= 500", &pairs, |&(q, q1)| {
        let w = expand(big(q), big(q1)).map_err(err)?;
        let r = w.evaluate().map_err(err)?;
        ensure(r == Ratio::new(big(q), big(q1)), || format!("got {r}"))
    }));

    let chains = oracle::all_chains(6, 2, 5);
    out.push(check("determinant = cofactor expansion", &chains, |c| {
        let w = HJFraction::<i64>::from_ints(c).map_err(err)?;
        let want = oracle::chain_determinant(c);
        ensure(big(w.determinant()) == want, || format!("{} != {want}", w.determinant()))?;
        if let Some(v) = oracle::nested_fraction(c) {
            let r = w.evaluate().map_err(err)?;
            ensure(BigRational::new(big(*r.numer()), big(*r.denom())) == v, || format!("value {r} != {v}"))?;
        }
        Ok(())
    }));

    out.push(check("bumped determinant = v_j u_j + |w|", &chains, |c| {
        let w = HJFraction::<i64>::from_ints(c).map_err(err)?;
        for j in 1..=c.len() {
            let mut bumped = c.clone();
            bumped[j - 1] += 1;
            let got = w.bump_determinant(j).map_err(err)?;
            let want = oracle::chain_determinant(&bumped);
            ensure(big(got) == want, || format!("j={j}: {got} != {want}"))?;
            ensure(got > w.determinant(), || format!("j={j}: not increasing"))?;
        }
        Ok(())
    }));

    let quads: Vec<[i64; 4]> = (1..=8)
        .flat_map(|a| (2..=8).flat_map(move |b| (2..=8).flat_map(move |c| (1..=8).map(move |d| [a, b, c, d]))))
        .collect();
    out.push(check("pattern determinant closed form", &quads, |&[a, b, c, d]| {
        let closed = pattern_determinant(a, b, c, d).map_err(err)?;
        let w = make_pattern(a, b, c, d).map_err(err)?;
        let want = oracle::chain_determinant(w.entries());
        ensure(big(closed) == want, || format!("{closed} != {want}"))
    }));

    out.push(check("reversal keeps q and inverts q1", &chains, |c| {
        let w = HJFraction::<i64>::from_ints(c).map_err(err)?;
        let r = w.reverse();
        ensure(r.determinant() == w.determinant(), || "determinant changed".into())?;
        if c.is_empty() {
            return Ok(());
        }
        let (a, b) = (w.evaluate().map_err(err)?, r.evaluate().map_err(err)?);
        let q = *a.numer();
        ensure(*b.numer() == q, || "numerator changed".into())?;
        ensure((a.denom() * b.denom() - 1).rem_euclid(q) == 0 || q == 1, || {
            format!("{} * {} != 1 mod {q}", a.denom(), b.denom())
        })
    }));

    out.push(check("discrepancies in [0,1), zero iff du Val", &chains, |c| {
        if c.is_empty() {
            return Ok(());
        }
        let w = HJFraction::<i64>::from_ints(c).map_err(err)?;
        let d = w.discrepancy_coefficients().map_err(err)?;
        ensure(d.iter().all(|x| !x.is_negative() && *x < Ratio::one()), || format!("{d:?}"))?;
        ensure(d.iter().all(Zero::is_zero) == c.iter().all(|&n| n == 2), || format!("{d:?}"))
    }));

    out
}

fn kollar_tuples() -> Vec<[i64; 4]> {
    (2..=6)
        .flat_map(|a| (2..=6).flat_map(move |b| (2..=6).flat_map(move |c| (2..=6).map(move |d| [a, b, c, d]))))
        .collect()
}

pub fn kollar_suite() -> Vec<CheckResult> {
    let tuples: Vec<[i64; 4]> = kollar_tuples()
        .into_iter()
        .filter(|a| weights(&KollarParams::<i64>::from_ints(*a).unwrap()).wstar == 1)
        .collect();
    let note = Some(format!("{} of 625 tuples in [2,6]^4 have w* = 1", tuples.len()));

    let mut a = check("s1, s2 agree in both forms", &tuples, |a| {
        let p = KollarParams::<i64>::from_ints(*a).map_err(err)?;
        let kw = weights(&p);
        kw.check(&p).map_err(err)?;
        let [a1, a2, a3, a4] = *a;
        let [w1, w2, w3, w4] = kw.w;
        ensure(a4 * w4 - w3 == a2 * w2 - w1, || "s1 forms differ".into())?;
        ensure(a1 * w1 - w4 == a3 * w3 - w2, || "s2 forms differ".into())
    });
    a.note = note;
    let b = check("congruences for t1, t2", &tuples, |a| {
        let p = KollarParams::<i64>::from_ints(*a).map_err(err)?;
        let kw = weights(&p);
        let [w1, w2, w3, w4] = kw.w;
        let t1 = kw.t1.ok_or("t1 undefined")?;
        let t2 = kw.t2.ok_or("t2 undefined")?;
        ensure((t1 * w2 - w4).rem_euclid(kw.s1) == 0, || format!("t1={t1}"))?;
        ensure((t2 * w1 - w3).rem_euclid(kw.s2) == 0, || format!("t2={t2}"))?;
        let [a1, a2, a3, a4] = *a;
        let p1 = make_pattern(a4 - 1, a3, a1, a2).map_err(err)?.determinant();
        let p2 = make_pattern(a3 - 1, a2, a4, a1).map_err(err)?.determinant();
        ensure((p1 * w2 - w4).rem_euclid(kw.s1) == 0, || format!("|[2*(a4-2),a3,a1,2*(a2-1)]| = {p1}"))?;
        ensure((p2 * w1 - w3).rem_euclid(kw.s2) == 0, || format!("|[2*(a3-2),a2,a4,2*(a1-1)]| = {p2}"))?;
        ensure(p1 % kw.s1 == t1 && p2 % kw.s2 == t2, || "t differs from the pattern value".into())
    });
    let c = check("chains have determinants s1, s2", &tuples, |a| {
        let p = KollarParams::<i64>::from_ints(*a).map_err(err)?;
        let kw = weights(&p);
        let (x, y) = singularity_types(&p).map_err(err)?;
        ensure(x.chain.determinant() == kw.s1 && y.chain.determinant() == kw.s2, || "det".into())?;
        ensure(
            x.chain.singularity().map_err(err)? == x.singularity
                && y.chain.singularity().map_err(err)? == y.singularity,
            || "chain value differs from s/t".into(),
        )
    });
    vec![a, b, c]
}

/// `E.f^*K` for `T(a)` in closed form.
pub fn t_closed_form(a: [i64; 4]) -> Ratio<i64> {
    let [a1, a2, a3, a4] = a;
    let num = (a2 * a3 * a4 - a3 * a4 + a4 - 1) * ((a1 - 1) * (a2 - 1) * (a3 - 1) * (a4 - 1) - a1 * a3 - a2 * a4 + 2);
    let s1 = pattern_determinant(a4, a3, a1, a2).expect("in range");
    let s2 = pattern_determinant(a3, a2, a4, a1).expect("in range");
    Ratio::new(num, s1 * s2)
}

fn family_common(b: &FamilyBuild) -> Result<(), String> {
    b.validate().map_err(err)?;
    let r = b.report::<i64>().map_err(err)?;
    let alt = crate::contraction::pullback_k_dot::<i64>(&b.model, &b.plan, &b.alt_test_curve).map_err(err)?;
    ensure(KClass::from_sign(&alt) == r.k_class, || {
        format!("sign differs: {} on {} vs {} on {}", r.k_value, b.test_curve, alt, b.alt_test_curve)
    })?;
    ensure(r.rho == b.model.picard_rank() as i64 - b.plan.contracted_count() as i64, || "rank".into())
}

pub fn families_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let tuples = kollar_tuples();
    out.push(check("T: strings, rank 1, closed form, Kollar types", &tuples, |a| {
        let b = build_t(*a).map_err(err)?;
        family_common(&b)?;
        ensure(b.model.blowup_count() as i64 == a.iter().sum::<i64>(), || "blow-up count".into())?;
        let r = b.report::<i64>().map_err(err)?;
        ensure(r.k_value == t_closed_form(*a), || format!("{} != {}", r.k_value, t_closed_form(*a)))?;
        let min = *a.iter().min().unwrap();
        let max = *a.iter().max().unwrap();
        if min >= 3 {
            let want = if max == 3 { KClass::NumericallyTrivial } else { KClass::Ample };
            ensure(r.k_class == want, || format!("{} but expected {want}", r.k_class))?;
        }
        let p = KollarParams::<i64>::from_ints(*a).map_err(err)?;
        if weights(&p).wstar == 1 {
            let (x, y) = singularity_types(&p).map_err(err)?;
            for (got, want) in r.points.iter().zip([x, y]) {
                ensure(got.singularity.same_up_to_orientation(&want.singularity), || {
                    format!("{} vs {}", got.singularity, want.singularity)
                })?;
            }
        }
        Ok(())
    }));

    let pairs: Vec<(i64, i64)> = (2..=12).flat_map(|x| (2..=12).map(move |y| (x, y))).collect();
    out.push(check("T with two entries 2: ampleness thresholds", &pairs, |&(k, l)| {
        let ample = (k >= 6 && l >= 6)
            || (k == 5 && l >= 7)
            || (l == 5 && k >= 7)
            || (k == 4 && l >= 10)
            || (l == 4 && k >= 10);
        for a in [[2, 2, k, l], [2, k, l, 2], [k, 2, 2, l], [k, l, 2, 2]] {
            let r = build_t(a).map_err(err)?.report::<i64>().map_err(err)?;
            ensure((r.k_class == KClass::Ample) == ample, || format!("{a:?}: {}", r.k_class))?;
        }
        for a in [[2, k, 2, l], [k, 2, l, 2]] {
            let r = build_t(a).map_err(err)?.report::<i64>().map_err(err)?;
            ensure(r.k_class == KClass::AntiAmple, || format!("{a:?}: {}", r.k_class))?;
        }
        Ok(())
    }));

    let bs: Vec<i64> = (2..=12).collect();
    out.push(check("S1: order, type, E.f*K", &bs, |&b| {
        let fb = build_s1(b).map_err(err)?;
        family_common(&fb)?;
        let r = fb.report::<i64>().map_err(err)?;
        let q = 27 * b * b - 36 * b + 4;
        let want = CyclicSingularity::new(q, 9 * b * b - 9 * b + 1).map_err(err)?;
        ensure(r.points.len() == 1 && r.points[0].singularity.same_up_to_orientation(&want), || {
            format!("{} vs {want}", r.points[0].singularity)
        })?;
        ensure(r.k_value == Ratio::new(18 * (b - 2), q), || format!("k = {}", r.k_value))?;
        ensure(fb.model.blowup_count() as i64 == b + 8, || "blow-up count".into())
    }));
    out.push(check("S3: orders, types, E.f*K", &bs, |&b| {
        let fb = build_s3(b).map_err(err)?;
        family_common(&fb)?;
        let r = fb.report::<i64>().map_err(err)?;
        let q = 3 * b * b - 2 * b - 2;
        let want = [
            CyclicSingularity::new(2, 1).map_err(err)?,
            CyclicSingularity::new(7, 3).map_err(err)?,
            CyclicSingularity::new(q, 2 * b * b - b - 1).map_err(err)?,
        ];
        for (p, w) in r.points.iter().zip(&want) {
            ensure(p.singularity.same_up_to_orientation(w), || format!("{} vs {w}", p.singularity))?;
        }
        ensure(r.k_value == Ratio::new(2 * (b - 5), q), || format!("k = {}", r.k_value))?;
        ensure(fb.model.blowup_count() as i64 == b + 7, || "blow-up count".into())
    }));

    let variants: Vec<(FamilyId, i64, i64)> = [FamilyId::S1Pp, FamilyId::S1Ppp, FamilyId::V, FamilyId::Y]
        .into_iter()
        .flat_map(|id| {
            let lo = id.lower_bounds()[1];
            (2..=8).flat_map(move |b| (lo..=8).map(move |c| (id, b, c)))
        })
        .collect();
    out.push(check("variants: strings and rank 1", &variants, |&(id, b, c)| {
        family_common(&build(id, &[b, c]).map_err(err)?)
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(t_closed_form([3, 3, 3, 3]), Ratio::from_integer(0));
        assert_eq!(t_closed_form([2, 2, 5, 6]), Ratio::from_integer(0));
        assert!(t_closed_form([4, 3, 3, 3]) > Ratio::from_integer(0));
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("x".parse::<Suite>().is_err());
    }
}
