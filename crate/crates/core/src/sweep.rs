//! Parameter sweeps over a family.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{build, FamilyId};
use crate::output::{Format, ReportRecord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub family: FamilyId,
    pub ranges: Vec<RangeInclusive<i64>>,
    pub format: Format,
    pub output: Option<PathBuf>,
}

/// Parses `lo..hi` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::InvalidFamilyParams { family: "sweep".into(), reason: format!("bad range `{s}`") };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo = i64::from_str(lo.trim()).map_err(|_| bad())?;
    let hi = i64::from_str(hi.trim()).map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

impl SweepSpec {
    pub fn new(family: FamilyId, ranges: Vec<RangeInclusive<i64>>, format: Format) -> Result<Self> {
        let spec = Self { family, ranges, format, output: None };
        spec.check()?;
        Ok(spec)
    }

    /// Ranges are nonempty, one per parameter, and within the builder's
    /// lower bounds.
    pub fn check(&self) -> Result<()> {
        let bad = |reason: String| Error::InvalidFamilyParams { family: self.family.to_string(), reason };
        if self.ranges.len() != self.family.arity() {
            return Err(bad(format!("expected {} ranges, got {}", self.family.arity(), self.ranges.len())));
        }
        for ((r, lo), name) in self.ranges.iter().zip(self.family.lower_bounds()).zip(self.family.param_names()) {
            if r.is_empty() {
                return Err(bad(format!("range for {name} is empty")));
            }
            if r.start() < lo {
                return Err(bad(format!("range for {name} starts below {lo}")));
            }
        }
        Ok(())
    }

    /// Every parameter tuple, in lexicographic order.
    pub fn tuples(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for r in &self.ranges {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    r.clone().map(move |v| {
                        let mut t = prefix.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Builds and classifies every tuple in parallel; rows come back in
    /// tuple order.
    pub fn run(&self) -> Result<Vec<ReportRecord>> {
        self.check()?;
        self.tuples()
            .par_iter()
            .map(|params| {
                let b = build(self.family, params)?;
                let report = b.report::<BigInt>()?;
                Ok(ReportRecord::new(self.family, params, &report))
            })
            .collect()
    }
}
