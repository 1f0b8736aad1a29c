//! Contracting Hirzebruch-Jung strings and classifying the canonical class
//! of the resulting surface.
//!
//! For a surface `X'` with disjoint strings `A_{1,p}, ..., A_{l_p,p}`
//! contracted by `f: X' -> X`, adjunction gives
//! `K_{X'} = f^*K_X - sum_p sum_j (1 - (u_{j,p} + v_{j,p})/|w_p|) A_{j,p}`,
//! so for any curve `E` off the strings
//! `E.f^*K_X = E.K_{X'} + sum_p sum_j d_{j,p} E.A_{j,p}`.
//! For a `(-1)`-curve `E.K_{X'} = -1`, but the formula does not need that.
//!
//! When `X` has Picard number 1, the sign of this single number decides
//! whether `K_X` is ample, numerically trivial, or anti-ample.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hjcf::{CyclicSingularity, HJFraction};
use crate::lattice::{CurveClass, SurfaceModel};
use crate::scalar::Scalar;

/// The strings to contract, each listed in chain order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContractionPlan {
    pub chains: Vec<Vec<String>>,
}

impl ContractionPlan {
    pub fn new(chains: Vec<Vec<String>>) -> Self {
        Self { chains }
    }

    pub fn contracted_count(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.chains.iter().flatten().any(|n| n == name)
    }
}

/// A singular point of the contracted surface with the string over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedPoint<T> {
    pub curves: Vec<String>,
    pub chain: HJFraction<T>,
    pub singularity: CyclicSingularity<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction<T> {
    pub points: Vec<ContractedPoint<T>>,
    pub rho: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KClass {
    Ample,
    NumericallyTrivial,
    AntiAmple,
}

impl KClass {
    pub fn from_sign<T: Scalar>(value: &Ratio<T>) -> Self {
        if value.is_zero() {
            KClass::NumericallyTrivial
        } else if value.is_positive() {
            KClass::Ample
        } else {
            KClass::AntiAmple
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            KClass::Ample => "Ample",
            KClass::NumericallyTrivial => "NumericallyTrivial",
            KClass::AntiAmple => "AntiAmple",
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for KClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Ample" => Ok(KClass::Ample),
            "NumericallyTrivial" => Ok(KClass::NumericallyTrivial),
            "AntiAmple" => Ok(KClass::AntiAmple),
            other => Err(Error::Output(format!("unknown k_class `{other}`"))),
        }
    }
}

/// Outcome of contracting a plan and testing `K` against one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QhppReport<T: Scalar> {
    pub points: Vec<ContractedPoint<T>>,
    pub rho: i64,
    pub k_class: KClass,
    /// `E.f^*K` for the test curve.
    pub k_value: Ratio<T>,
    pub test_curve: String,
}

impl<T: Scalar> QhppReport<T> {
    pub fn singularities(&self) -> impl Iterator<Item = &CyclicSingularity<T>> {
        self.points.iter().map(|p| &p.singularity)
    }

    /// `b_2 = 1`, so the contracted surface is a Q-homology projective plane.
    pub fn is_qhpp(&self) -> bool {
        self.rho == 1
    }
}

fn check_plan(s: &SurfaceModel, plan: &ContractionPlan) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for name in plan.chains.iter().flatten() {
        s.curve(name)?;
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidPlan(format!("`{name}` appears in more than one place")));
        }
    }
    for (i, a) in plan.chains.iter().enumerate() {
        for b in &plan.chains[i + 1..] {
            for x in a {
                for y in b {
                    if s.intersect(x, y)? != 0 {
                        return Err(Error::InvalidPlan(format!("`{x}` and `{y}` lie in different strings but meet")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Leading principal minors of the negated intersection matrix must all be
/// positive for the string to be contractible.
fn check_negative_definite(s: &SurfaceModel, names: &[String]) -> Result<()> {
    let n = names.len();
    let mut m = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = -(s.intersect(&names[i], &names[j])? as i128);
        }
    }
    // Bareiss elimination; the k-th pivot is the k-th leading minor.
    let mut prev = 1i128;
    for k in 0..n {
        let pivot = m[k][k];
        if pivot <= 0 {
            return Err(Error::InvalidPlan(format!(
                "string starting at `{}` is not negative definite (minor {} = {pivot})",
                names[0],
                k + 1
            )));
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = pivot;
    }
    Ok(())
}

pub fn contract<T: Scalar>(s: &SurfaceModel, plan: &ContractionPlan) -> Result<Contraction<T>> {
    check_plan(s, plan)?;
    let mut points = Vec::with_capacity(plan.chains.len());
    for names in &plan.chains {
        if names.is_empty() {
            return Err(Error::InvalidPlan("empty string".into()));
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let chain = s.extract_chain::<T>(&refs)?;
        check_negative_definite(s, names)?;
        let singularity = chain.singularity()?;
        points.push(ContractedPoint { curves: names.clone(), chain, singularity });
    }
    let rho = s.picard_rank() as i64 - plan.contracted_count() as i64;
    Ok(Contraction { points, rho })
}

/// `E.f^*K` for a curve `E` outside the contracted strings.
pub fn pullback_k_dot<T: Scalar>(s: &SurfaceModel, plan: &ContractionPlan, e: &str) -> Result<Ratio<T>> {
    let class = s.class(e)?;
    if plan.contains(e) {
        return Err(Error::CurveContracted(e.to_string()));
    }
    pullback_k_dot_class(s, plan, class)
}

/// `D.f^*K` for any class `D`: `D.K` plus the discrepancy-weighted
/// intersections with the strings. Linear in `D`.
pub fn pullback_k_dot_class<T: Scalar>(s: &SurfaceModel, plan: &ContractionPlan, d: &CurveClass) -> Result<Ratio<T>> {
    let mut total = Ratio::from_integer(T::from_int(d.k_dot()));
    for names in &plan.chains {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let chain = s.extract_chain::<T>(&refs)?;
        let coeffs = chain.discrepancy_coefficients()?;
        for (name, a) in names.iter().zip(coeffs) {
            let x = d.dot(s.class(name)?);
            if x != 0 {
                total = total + a * Ratio::from_integer(T::from_int(x));
            }
        }
    }
    Ok(total)
}

/// Contracts the plan and decides the sign of `K` on the result, which is
/// only meaningful at Picard rank 1.
pub fn classify<T: Scalar>(s: &SurfaceModel, plan: &ContractionPlan, e: &str) -> Result<QhppReport<T>> {
    let c = contract::<T>(s, plan)?;
    if c.rho != 1 {
        return Err(Error::NotRankOne { rho: c.rho });
    }
    let k_value = pullback_k_dot::<T>(s, plan, e)?;
    Ok(QhppReport {
        points: c.points,
        rho: c.rho,
        k_class: KClass::from_sign(&k_value),
        k_value,
        test_curve: e.to_string(),
    })
}
