//! Divisor classes on iterated blow-ups of the projective plane.
//!
//! A surface obtained from `P^2` by `n` point blow-ups has Picard lattice
//! `Z H + Z E_1 + ... + Z E_n` with `H^2 = 1`, `E_i^2 = -1` and all other
//! products zero. Curves are tracked by name as classes `d H - sum m_i E_i`.
//! Blowing up a point replaces each curve through it by its proper
//! transform `C - m E_{n+1}` and adds the new exceptional curve `E_{n+1}`.
//!
//! Only class-level data is modelled. Whether an incidence script is
//! realisable by actual curves is the script author's concern; the model
//! rejects scripts that produce negative intersections between distinct
//! curves or push `C^2 + C.K` below `-2`.

use std::fmt;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::hjcf::HJFraction;
use crate::scalar::Scalar;

/// `degree * H - sum mults[i] * E_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveClass {
    pub degree: i64,
    pub mults: Vec<i64>,
}

impl CurveClass {
    pub fn plane_curve(degree: i64, n: usize) -> Self {
        Self { degree, mults: vec![0; n] }
    }

    /// The class `E_k` (1-based) on a surface with `n` blow-ups.
    pub fn exceptional(k: usize, n: usize) -> Self {
        let mut mults = vec![0; n];
        mults[k - 1] = -1;
        Self { degree: 0, mults }
    }

    /// The canonical class `-3H + sum E_i`.
    pub fn canonical(n: usize) -> Self {
        Self { degree: -3, mults: vec![-1; n] }
    }

    pub fn dot(&self, other: &Self) -> i64 {
        let tail: i64 = self.mults.iter().zip(&other.mults).map(|(a, b)| a * b).sum();
        self.degree * other.degree - tail
    }

    pub fn self_int(&self) -> i64 {
        self.dot(self)
    }

    /// `C.K = -3d + sum m_i`.
    pub fn k_dot(&self) -> i64 {
        -3 * self.degree + self.mults.iter().sum::<i64>()
    }

    /// `C^2 + C.K`, which is `2 p_a - 2` for an irreducible curve.
    pub fn adjunction(&self) -> i64 {
        self.self_int() + self.k_dot()
    }

    fn pad(&mut self, n: usize) {
        self.mults.resize(n, 0);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedCurve {
    pub class: CurveClass,
    /// Declared rational: once `C^2 + C.K = -2` the curve is smooth.
    pub rational: bool,
}

/// A blow-up of `P^2` with a set of named curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    blowup_count: usize,
    curves: IndexMap<String, TrackedCurve>,
}

/// One blow-up: the curves through the centre and their multiplicities
/// there. The new exceptional curve gets `name`, or `E<n>` if unset.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlowupStep {
    pub name: Option<String>,
    pub incidences: Vec<(String, i64)>,
}

impl BlowupStep {
    pub fn new<S: Into<String>>(name: S) -> Self {
        Self { name: Some(name.into()), incidences: Vec::new() }
    }

    pub fn unnamed() -> Self {
        Self::default()
    }

    /// Adds a curve passing through the centre with the given multiplicity.
    pub fn through<S: Into<String>>(mut self, curve: S, mult: i64) -> Self {
        self.incidences.push((curve.into(), mult));
        self
    }
}

impl Default for SurfaceModel {
    fn default() -> Self {
        Self::plane()
    }
}

impl SurfaceModel {
    /// `P^2` with no curves.
    pub fn plane() -> Self {
        Self { blowup_count: 0, curves: IndexMap::new() }
    }

    pub fn blowup_count(&self) -> usize {
        self.blowup_count
    }

    /// Rank of the Picard lattice, `1 + n`.
    pub fn picard_rank(&self) -> usize {
        1 + self.blowup_count
    }

    pub fn canonical(&self) -> CurveClass {
        CurveClass::canonical(self.blowup_count)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.keys().map(String::as_str)
    }

    pub fn curve(&self, name: &str) -> Result<&TrackedCurve> {
        self.curves.get(name).ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn class(&self, name: &str) -> Result<&CurveClass> {
        Ok(&self.curve(name)?.class)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.curves.contains_key(name)
    }

    /// Adds a plane curve of the given degree that avoids every centre
    /// blown up so far.
    pub fn with_curve(&self, name: &str, degree: i64, rational: bool) -> Result<Self> {
        if self.curves.contains_key(name) {
            return Err(Error::DuplicateCurve(name.to_string()));
        }
        if degree < 1 {
            return Err(Error::InvalidBlowup(format!("plane curve `{name}` needs positive degree")));
        }
        let mut next = self.clone();
        next.curves.insert(
            name.to_string(),
            TrackedCurve { class: CurveClass::plane_curve(degree, self.blowup_count), rational },
        );
        Ok(next)
    }

    pub fn blow_up(&self, step: &BlowupStep) -> Result<Self> {
        let n = self.blowup_count + 1;
        let name = step.name.clone().unwrap_or_else(|| format!("E{n}"));
        if self.curves.contains_key(&name) {
            return Err(Error::DuplicateCurve(name));
        }
        for (i, (curve, mult)) in step.incidences.iter().enumerate() {
            if !self.curves.contains_key(curve) {
                return Err(Error::UnknownCurve(curve.clone()));
            }
            if *mult < 1 {
                return Err(Error::InvalidBlowup(format!("multiplicity {mult} of `{curve}` is below 1")));
            }
            if step.incidences[..i].iter().any(|(c, _)| c == curve) {
                return Err(Error::InvalidBlowup(format!("`{curve}` listed twice")));
            }
        }

        let mut next = self.clone();
        next.blowup_count = n;
        for tc in next.curves.values_mut() {
            tc.class.pad(n);
        }
        for (curve, mult) in &step.incidences {
            next.curves[curve.as_str()].class.mults[n - 1] = *mult;
        }
        next.curves.insert(name.clone(), TrackedCurve { class: CurveClass::exceptional(n, n), rational: true });
        next.validate_after(&name)?;
        Ok(next)
    }

    /// Applies a sequence of steps.
    pub fn blow_up_all<'a, I>(&self, steps: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BlowupStep>,
    {
        let mut s = self.clone();
        for step in steps {
            s = s.blow_up(step)?;
        }
        Ok(s)
    }

    fn validate_after(&self, step_name: &str) -> Result<()> {
        let entries: Vec<(&String, &TrackedCurve)> = self.curves.iter().collect();
        for (i, (a, ca)) in entries.iter().enumerate() {
            if ca.class.adjunction() < -2 {
                return Err(Error::InvalidBlowup(format!(
                    "blowing up `{step_name}` gives `{a}` C^2 + C.K = {} < -2",
                    ca.class.adjunction()
                )));
            }
            for (b, cb) in &entries[i + 1..] {
                let x = ca.class.dot(&cb.class);
                if x < 0 {
                    return Err(Error::InvalidBlowup(format!("blowing up `{step_name}` gives `{a}`.`{b}` = {x}")));
                }
            }
        }
        Ok(())
    }

    pub fn intersect(&self, a: &str, b: &str) -> Result<i64> {
        Ok(self.class(a)?.dot(self.class(b)?))
    }

    pub fn self_int(&self, name: &str) -> Result<i64> {
        Ok(self.class(name)?.self_int())
    }

    pub fn k_dot(&self, name: &str) -> Result<i64> {
        Ok(self.class(name)?.k_dot())
    }

    /// Declared-rational curves whose `C^2 + C.K` is not `-2`, i.e. that are
    /// still singular in this model.
    pub fn genus_defects(&self) -> Vec<(String, i64)> {
        self.curves
            .iter()
            .filter(|(_, c)| c.rational && c.class.adjunction() != -2)
            .map(|(n, c)| (n.clone(), c.class.adjunction()))
            .collect()
    }

    pub fn dual_graph(&self, names: &[&str]) -> Result<DualGraph> {
        let mut vertices = Vec::with_capacity(names.len());
        for name in names {
            vertices.push((name.to_string(), self.self_int(name)?));
        }
        let mut edges = Vec::new();
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                let x = self.intersect(a, b)?;
                if x > 0 {
                    edges.push((a.to_string(), b.to_string(), x));
                }
            }
        }
        Ok(DualGraph { vertices, edges })
    }

    /// Dual graph of every tracked curve.
    pub fn full_dual_graph(&self) -> DualGraph {
        let names: Vec<&str> = self.names().collect();
        self.dual_graph(&names).expect("all names are tracked")
    }

    /// Reads the Hirzebruch-Jung chain `[-C_1^2, ..., -C_l^2]` of a string of
    /// curves given in order.
    pub fn extract_chain<T: Scalar>(&self, names: &[&str]) -> Result<HJFraction<T>> {
        let mut entries = Vec::with_capacity(names.len());
        for (i, a) in names.iter().enumerate() {
            let c = self.curve(a)?;
            if !c.rational || c.class.adjunction() != -2 {
                return Err(Error::NotAChain(format!("`{a}` is not a smooth rational curve")));
            }
            let sq = c.class.self_int();
            if sq > -2 {
                return Err(Error::NotAChain(format!("`{a}` has self-intersection {sq} > -2")));
            }
            for (k, b) in names.iter().enumerate().skip(i + 1) {
                if a == b {
                    return Err(Error::NotAChain(format!("`{a}` appears twice")));
                }
                let x = self.intersect(a, b)?;
                let want = if k == i + 1 { 1 } else { 0 };
                if x != want {
                    return Err(Error::NotAChain(format!("`{a}`.`{b}` = {x}, expected {want}")));
                }
            }
            entries.push(T::from_int(-sq));
        }
        HJFraction::new(entries)
    }
}

/// Curves as vertices labelled by self-intersection, with an edge for every
/// positive intersection number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: Vec<(String, i64)>,
    pub edges: Vec<(String, String, i64)>,
}

impl DualGraph {
    /// Plain text: one `name self_int` line per vertex, then one
    /// `nameA nameB weight` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, s) in &self.vertices {
            out.push_str(&format!("{v} {s}\n"));
        }
        for (a, b, w) in &self.edges {
            out.push_str(&format!("{a} {b} {w}\n"));
        }
        out
    }

    /// Parses [`DualGraph::to_text`] output.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut g = DualGraph { vertices: Vec::new(), edges: Vec::new() };
        for (lineno, line) in text.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<i64>().map_err(|_| Error::Output(format!("line {}: bad integer `{s}`", lineno + 1)))
            };
            match fields.as_slice() {
                [] => {}
                [v, s] => g.vertices.push((v.to_string(), num(s)?)),
                [a, b, w] => g.edges.push((a.to_string(), b.to_string(), num(w)?)),
                _ => return Err(Error::Output(format!("line {}: expected 2 or 3 fields", lineno + 1))),
            }
        }
        Ok(g)
    }

    /// Graphviz rendering; `(-1)`-curves are drawn filled, multiple
    /// intersections carry a label.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", title.replace('"', "'"));
        out.push_str("  node [shape=circle, fontsize=10];\n");
        for (v, s) in &self.vertices {
            let style = if *s == -1 { ", style=filled, fillcolor=black, fontcolor=white" } else { "" };
            out.push_str(&format!("  \"{v}\" [label=\"{v}\\n{s}\"{style}];\n"));
        }
        for (a, b, w) in &self.edges {
            if *w == 1 {
                out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
            } else {
                out.push_str(&format!("  \"{a}\" -- \"{b}\" [label=\"{w}\"];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.degree != 0 {
            terms.push(format!("{}H", self.degree));
        }
        for (i, m) in self.mults.iter().enumerate() {
            match m {
                0 => {}
                1 => terms.push(format!("-E{}", i + 1)),
                -1 => terms.push(format!("+E{}", i + 1)),
                m if *m > 0 => terms.push(format!("-{m}E{}", i + 1)),
                m => terms.push(format!("+{}E{}", -m, i + 1)),
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let s = terms.concat();
        write!(f, "{}", s.strip_prefix('+').unwrap_or(&s))
    }
}
