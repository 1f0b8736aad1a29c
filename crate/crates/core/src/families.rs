//! Blow-up scripts for the surface families.
//!
//! Each builder starts from a configuration of plane curves, blows up a
//! fixed list of (possibly infinitely near) points, and records which
//! strings of curves get contracted and which curve tests the sign of `K`.
//!
//! * `T(a1, a2, a3, a4)`: four general lines and the four intersection
//!   points `L1L4, L1L2, L2L3, L3L4`, each blown up twice with the second
//!   centre on `L1, L2, L3, L4` respectively, then `a_i - 2` more times at
//!   `E_i ∩ L_i`. Two strings, two singularities.
//! * `S1(b)`: a nodal cubic `C`, a line `L1` through the node and `p1`, and
//!   lines `L2, L3, L4` tangent to `C` at `p1, p2, p3` and meeting it again
//!   at `p2, p3, p1`. The node is blown up once and each `p_i` three times;
//!   at `p1, p2` the third centre is on `C`, at `p3` it is `F3 ∩ G3`. Then
//!   `b - 2` times at `P = H3 ∩ G3`. One string.
//!   The variants blow up `c - 2` times at `P' = H1 ∩ G1` or `P'' = H2 ∩ G2`.
//! * `S3(b)`: lines `L1, L2, L3` through `O` and a conic `C` tangent to `L1`
//!   at `Q`, tangent to `L3` at `R3`, and meeting `L2` transversally at
//!   `R2`. `Q` is blown up three times (third centre on `L1`), `O, R2, R3`
//!   twice (second centres on `L2`, `C`, and `C ∩ L3`), then `b - 2` times
//!   at `P = G_R2 ∩ C`. Three strings.
//!   `V(b, c)` adds `c` blow-ups at `P'' = H_Q ∩ G_Q`; `Y(b, c)` also blows
//!   up `P' = G_R3 ∩ C` once, merging two strings.
//!
//! The naming of the infinitely near centres in `T` follows the twelve-curve
//! dual graph; nothing else in the construction fixes it.

use std::fmt;
use std::str::FromStr;

use crate::contraction::{classify, ContractionPlan, QhppReport};
use crate::error::{Error, Result};
use crate::hjcf::{make_pattern, HJFraction};
use crate::lattice::{BlowupStep, SurfaceModel};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    T,
    S1,
    S1Pp,
    S1Ppp,
    S3,
    V,
    Y,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] =
        [FamilyId::T, FamilyId::S1, FamilyId::S1Pp, FamilyId::S1Ppp, FamilyId::S3, FamilyId::V, FamilyId::Y];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::T => "T",
            FamilyId::S1 => "S1",
            FamilyId::S1Pp => "S1-Pp",
            FamilyId::S1Ppp => "S1-Ppp",
            FamilyId::S3 => "S3",
            FamilyId::V => "V",
            FamilyId::Y => "Y",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::T => &["a1", "a2", "a3", "a4"],
            FamilyId::S1 | FamilyId::S3 => &["b"],
            FamilyId::S1Pp | FamilyId::S1Ppp | FamilyId::V | FamilyId::Y => &["b", "c"],
        }
    }

    /// Smallest allowed value of each parameter.
    pub fn lower_bounds(self) -> &'static [i64] {
        match self {
            FamilyId::T => &[2, 2, 2, 2],
            FamilyId::S1 | FamilyId::S3 => &[2],
            FamilyId::S1Pp | FamilyId::S1Ppp => &[2, 2],
            FamilyId::V | FamilyId::Y => &[2, 0],
        }
    }

    pub fn arity(self) -> usize {
        self.param_names().len()
    }

    pub fn check_params(self, params: &[i64]) -> Result<()> {
        let bad = |reason: String| Error::InvalidFamilyParams { family: self.to_string(), reason };
        if params.len() != self.arity() {
            return Err(bad(format!("expected {} parameters, got {}", self.arity(), params.len())));
        }
        for ((name, lo), v) in self.param_names().iter().zip(self.lower_bounds()).zip(params) {
            if v < lo {
                return Err(bad(format!("{name} = {v} is below {lo}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A built surface together with what to contract and how to test `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyBuild {
    pub id: FamilyId,
    pub params: Vec<i64>,
    pub model: SurfaceModel,
    pub plan: ContractionPlan,
    /// The exceptional curve of the last blow-up at the deep point.
    pub test_curve: String,
    /// Another curve off the strings, used to cross-check the sign of `K`.
    pub alt_test_curve: String,
    /// The strings as stated for the family, in plan order.
    pub expected_chains: Vec<HJFraction<i64>>,
}

impl FamilyBuild {
    /// Extracted strings equal the stated ones (either orientation), every
    /// declared-rational curve is smooth, and the contraction has rank 1.
    pub fn validate(&self) -> Result<()> {
        if self.expected_chains.len() != self.plan.chains.len() {
            return Err(Error::InvalidPlan("plan and expected strings differ in number".into()));
        }
        for (names, expected) in self.plan.chains.iter().zip(&self.expected_chains) {
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let found = self.model.extract_chain::<i64>(&refs)?;
            if found != *expected && found.reverse() != *expected {
                return Err(Error::ChainMismatch { expected: expected.to_string(), found: found.to_string() });
            }
        }
        if let Some((name, v)) = self.model.genus_defects().into_iter().next() {
            return Err(Error::InvalidBlowup(format!("`{name}` is singular: C^2 + C.K = {v}")));
        }
        let rho = self.rho();
        if rho != 1 {
            return Err(Error::NotRankOne { rho });
        }
        Ok(())
    }

    pub fn rho(&self) -> i64 {
        self.model.picard_rank() as i64 - self.plan.contracted_count() as i64
    }

    pub fn report<T: Scalar>(&self) -> Result<QhppReport<T>> {
        classify(&self.model, &self.plan, &self.test_curve)
    }
}

pub fn build(id: FamilyId, params: &[i64]) -> Result<FamilyBuild> {
    id.check_params(params)?;
    match id {
        FamilyId::T => build_t([params[0], params[1], params[2], params[3]]),
        FamilyId::S1 => build_s1(params[0]),
        FamilyId::S1Pp => build_s1_variant(params[0], params[1], S1Variant::PPrime),
        FamilyId::S1Ppp => build_s1_variant(params[0], params[1], S1Variant::PDoublePrime),
        FamilyId::S3 => build_s3(params[0]),
        FamilyId::V => build_s3_variant(params[0], params[1], S3Variant::V),
        FamilyId::Y => build_s3_variant(params[0], params[1], S3Variant::Y),
    }
}

/// Incremental script runner.
struct Script {
    s: SurfaceModel,
}

impl Script {
    fn new() -> Self {
        Self { s: SurfaceModel::plane() }
    }

    fn curve(mut self, name: &str, degree: i64) -> Result<Self> {
        self.s = self.s.with_curve(name, degree, true)?;
        Ok(self)
    }

    fn blow(mut self, name: &str, through: &[(&str, i64)]) -> Result<Self> {
        let step = through.iter().fold(BlowupStep::new(name), |st, (c, m)| st.through(*c, *m));
        self.s = self.s.blow_up(&step)?;
        Ok(self)
    }

    /// Blows up `count` times, each time at the point where the newest
    /// exceptional curve meets `fixed`. Returns the new curve names.
    fn tower(mut self, prefix: &str, first: &str, fixed: &str, count: i64) -> Result<(Self, Vec<String>)> {
        let mut names = Vec::new();
        let mut last = first.to_string();
        for k in 1..=count {
            let name = format!("{prefix}{k}");
            self = self.blow(&name, &[(&last, 1), (fixed, 1)])?;
            last = name.clone();
            names.push(name);
        }
        Ok((self, names))
    }
}

fn strings(chains: Vec<Vec<String>>) -> ContractionPlan {
    ContractionPlan::new(chains)
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn twos(n: i64) -> Vec<i64> {
    vec![2; n.max(0) as usize]
}

fn hj(entries: Vec<i64>) -> Result<HJFraction<i64>> {
    HJFraction::new(entries)
}

/// `T(a1, a2, a3, a4)`.
pub fn build_t(a: [i64; 4]) -> Result<FamilyBuild> {
    FamilyId::T.check_params(&a)?;
    let mut sc = Script::new();
    for i in 1..=4 {
        sc = sc.curve(&format!("L{i}"), 1)?;
    }
    // point i is L_i ∩ L_{i-1}; its second centre lies on L_i
    for i in 1..=4usize {
        let li = format!("L{i}");
        let other = format!("L{}", if i == 1 { 4 } else { i - 1 });
        let (f, e) = (format!("F{i}"), format!("E{i}"));
        sc = sc.blow(&f, &[(&li, 1), (&other, 1)])?;
        sc = sc.blow(&e, &[(&f, 1), (&li, 1)])?;
    }
    // runs[i]: the contracted curves hanging off L_{i-1}'s neighbour
    let mut runs: Vec<Vec<String>> = Vec::new();
    let mut last: Vec<String> = Vec::new();
    for i in 1..=4usize {
        let r = a[i - 1] - 2;
        let (next, tower) = sc.tower(&format!("E{i}_"), &format!("E{i}"), &format!("L{i}"), r)?;
        sc = next;
        let mut all = vec![format!("F{i}"), format!("E{i}")];
        all.extend(tower);
        last.push(all.pop().expect("nonempty"));
        runs.push(all);
    }
    let rev = |v: &Vec<String>| v.iter().rev().cloned().collect::<Vec<_>>();
    let mut top = rev(&runs[3]);
    top.extend(names(&["L3", "L1"]));
    top.extend(runs[1].iter().cloned());
    let mut bottom = rev(&runs[2]);
    bottom.extend(names(&["L2", "L4"]));
    bottom.extend(runs[0].iter().cloned());

    let [a1, a2, a3, a4] = a;
    Ok(FamilyBuild {
        id: FamilyId::T,
        params: a.to_vec(),
        model: sc.s,
        plan: strings(vec![top, bottom]),
        test_curve: last[0].clone(),
        alt_test_curve: last[1].clone(),
        expected_chains: vec![make_pattern(a4, a3, a1, a2)?, make_pattern(a3, a2, a4, a1)?],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S1Variant {
    PPrime,
    PDoublePrime,
}

/// Common part of `S1(b)` and its variants; `extra` is an optional
/// `(variant, c)`.
fn s1_script(b: i64, extra: Option<(S1Variant, i64)>) -> Result<FamilyBuild> {
    let mut sc = Script::new();
    for name in ["L1", "L2", "L3", "L4"] {
        sc = sc.curve(name, 1)?;
    }
    sc = sc.curve("C", 3)?;
    sc = sc.blow("N", &[("C", 2), ("L1", 1)])?;
    // p1: L2 tangent, L1 and L4 transversal
    sc = sc.blow("F1", &[("C", 1), ("L1", 1), ("L2", 1), ("L4", 1)])?;
    sc = sc.blow("G1", &[("F1", 1), ("C", 1), ("L2", 1)])?;
    sc = sc.blow("H1", &[("G1", 1), ("C", 1)])?;
    // p2: L3 tangent, L2 transversal
    sc = sc.blow("F2", &[("C", 1), ("L2", 1), ("L3", 1)])?;
    sc = sc.blow("G2", &[("F2", 1), ("C", 1), ("L3", 1)])?;
    sc = sc.blow("H2", &[("G2", 1), ("C", 1)])?;
    // p3: L4 tangent, L3 transversal; third centre off C
    sc = sc.blow("F3", &[("C", 1), ("L3", 1), ("L4", 1)])?;
    sc = sc.blow("G3", &[("F3", 1), ("C", 1), ("L4", 1)])?;
    sc = sc.blow("H3", &[("F3", 1), ("G3", 1)])?;

    let (next, p_tower) = sc.tower("P", "H3", "G3", b - 2)?;
    sc = next;
    let mut tail = vec!["H3".to_string()];
    tail.extend(p_tower);
    let test_curve = tail.pop().expect("nonempty");

    let mut chain = Vec::new();
    let mut expected = Vec::new();
    if let Some((which, c)) = extra {
        let (h, g, prefix) = match which {
            S1Variant::PPrime => ("H1", "G1", "Pp"),
            S1Variant::PDoublePrime => ("H2", "G2", "Ppp"),
        };
        let (next, tower) = sc.tower(prefix, h, g, c - 2)?;
        sc = next;
        let mut run = vec![h.to_string()];
        run.extend(tower);
        run.pop();
        chain.extend(run.into_iter().rev());
        expected.extend(twos(c - 2));
    }
    chain.extend(names(&["C", "G3", "L4", "F1", "G1", "L2", "F2", "G2", "L3", "F3"]));
    chain.extend(tail);

    expected.extend([3, b]);
    match extra {
        None => expected.extend(twos(7)),
        Some((S1Variant::PPrime, c)) => expected.extend([2, 2, c, 2, 2, 2, 2]),
        Some((S1Variant::PDoublePrime, c)) => expected.extend([2, 2, 2, 2, 2, c, 2]),
    }
    expected.push(3);
    expected.extend(twos(b - 2));

    let (id, params) = match extra {
        None => (FamilyId::S1, vec![b]),
        Some((S1Variant::PPrime, c)) => (FamilyId::S1Pp, vec![b, c]),
        Some((S1Variant::PDoublePrime, c)) => (FamilyId::S1Ppp, vec![b, c]),
    };
    Ok(FamilyBuild {
        id,
        params,
        model: sc.s,
        plan: strings(vec![chain]),
        test_curve,
        alt_test_curve: "N".into(),
        expected_chains: vec![hj(expected)?],
    })
}

/// `S1(b)`: one singularity of order `27b^2 - 36b + 4`.
pub fn build_s1(b: i64) -> Result<FamilyBuild> {
    FamilyId::S1.check_params(&[b])?;
    s1_script(b, None)
}

pub fn build_s1_variant(b: i64, c: i64, which: S1Variant) -> Result<FamilyBuild> {
    let id = match which {
        S1Variant::PPrime => FamilyId::S1Pp,
        S1Variant::PDoublePrime => FamilyId::S1Ppp,
    };
    id.check_params(&[b, c])?;
    s1_script(b, Some((which, c)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S3Variant {
    V,
    Y,
}

fn s3_script(b: i64, c: i64, variant: Option<S3Variant>) -> Result<FamilyBuild> {
    let mut sc = Script::new();
    for name in ["L1", "L2", "L3"] {
        sc = sc.curve(name, 1)?;
    }
    sc = sc.curve("C", 2)?;
    // O = L1 ∩ L2 ∩ L3, second centre on L2
    sc = sc.blow("FO", &[("L1", 1), ("L2", 1), ("L3", 1)])?;
    sc = sc.blow("GO", &[("FO", 1), ("L2", 1)])?;
    // Q: C tangent to L1, third centre on L1 only
    sc = sc.blow("FQ", &[("C", 1), ("L1", 1)])?;
    sc = sc.blow("GQ", &[("FQ", 1), ("C", 1), ("L1", 1)])?;
    sc = sc.blow("HQ", &[("GQ", 1), ("L1", 1)])?;
    // R2: C transversal to L2
    sc = sc.blow("FR2", &[("C", 1), ("L2", 1)])?;
    sc = sc.blow("GR2", &[("FR2", 1), ("C", 1)])?;
    // R3: C tangent to L3
    sc = sc.blow("FR3", &[("C", 1), ("L3", 1)])?;
    sc = sc.blow("GR3", &[("FR3", 1), ("C", 1), ("L3", 1)])?;

    let (next, p_tower) = sc.tower("P", "GR2", "C", b - 2)?;
    sc = next;
    let mut tail = vec!["GR2".to_string()];
    tail.extend(p_tower);
    let test_curve = tail.pop().expect("nonempty");

    let mut prefix = Vec::new();
    if variant.is_some() {
        let (next, tower) = sc.tower("Ppp", "HQ", "GQ", c)?;
        sc = next;
        if c > 0 {
            let mut run = vec!["HQ".to_string()];
            run.extend(tower);
            run.pop();
            prefix = run.into_iter().rev().collect();
        }
    }
    let merged = variant == Some(S3Variant::Y);
    if merged {
        sc = sc.blow("Pp", &[("GR3", 1), ("C", 1)])?;
    }

    let mut middle = prefix;
    middle.extend(names(&["L1", "FO", "L3"]));
    if merged {
        middle.extend(names(&["GR3", "FR3"]));
    }
    let mut long = names(&["FQ", "GQ", "C", "L2", "FR2"]);
    long.extend(tail);

    let mut middle_expected = twos(c);
    middle_expected.extend([3, 2, 2]);
    if merged {
        middle_expected.extend([2, 2]);
    }
    let mut long_expected = vec![2, 2 + c, if merged { b + 1 } else { b }];
    long_expected.extend(twos(b));

    let (chains, expected) = if merged {
        (vec![middle, long], vec![hj(middle_expected)?, hj(long_expected)?])
    } else {
        (vec![names(&["FR3"]), middle, long], vec![hj(vec![2])?, hj(middle_expected)?, hj(long_expected)?])
    };
    let (id, params) = match variant {
        None => (FamilyId::S3, vec![b]),
        Some(S3Variant::V) => (FamilyId::V, vec![b, c]),
        Some(S3Variant::Y) => (FamilyId::Y, vec![b, c]),
    };
    Ok(FamilyBuild {
        id,
        params,
        model: sc.s,
        plan: strings(chains),
        test_curve,
        alt_test_curve: "GO".into(),
        expected_chains: expected,
    })
}

/// `S3(b)`: singularities `A_1`, `1/7(1,3)` and one of order `3b^2 - 2b - 2`.
pub fn build_s3(b: i64) -> Result<FamilyBuild> {
    FamilyId::S3.check_params(&[b])?;
    s3_script(b, 0, None)
}

pub fn build_s3_variant(b: i64, c: i64, which: S3Variant) -> Result<FamilyBuild> {
    let id = match which {
        S3Variant::V => FamilyId::V,
        S3Variant::Y => FamilyId::Y,
    };
    id.check_params(&[b, c])?;
    s3_script(b, c, Some(which))
}
