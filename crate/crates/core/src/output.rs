//! Serialized forms of a report: JSON records, CSV and markdown rows.
//!
//! A JSON record looks like
//!
//! ```text
//! {"family":"S3","params":[6],
//!  "singularities":[{"q":2,"q1":1,"chain":[2]}, ...],
//!  "rho":1,"k_class":"Ample","k_value":{"num":1,"den":47}}
//! ```
//!
//! Integers are written as plain JSON numbers of any size.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::contraction::{KClass, QhppReport};
use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::scalar::{approx, join, Scalar};

/// An arbitrary-size integer that serializes as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JsonInt(pub BigInt);

impl JsonInt {
    pub fn from_scalar<T: Scalar>(v: &T) -> Self {
        JsonInt(BigInt::from_str(&v.to_string()).expect("scalars print as integers"))
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(S::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map(JsonInt).map_err(|_| D::Error::custom(format!("`{n}` is not an integer")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityRecord {
    pub q: JsonInt,
    pub q1: JsonInt,
    pub chain: Vec<JsonInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioRecord {
    pub num: JsonInt,
    pub den: JsonInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub family: String,
    pub params: Vec<i64>,
    pub singularities: Vec<SingularityRecord>,
    pub rho: i64,
    pub k_class: String,
    pub k_value: RatioRecord,
}

impl ReportRecord {
    pub fn new<T: Scalar>(family: FamilyId, params: &[i64], report: &QhppReport<T>) -> Self {
        let singularities = report
            .points
            .iter()
            .map(|p| SingularityRecord {
                q: JsonInt::from_scalar(p.singularity.q()),
                q1: JsonInt::from_scalar(p.singularity.q1()),
                chain: p.chain.entries().iter().map(JsonInt::from_scalar).collect(),
            })
            .collect();
        ReportRecord {
            family: family.to_string(),
            params: params.to_vec(),
            singularities,
            rho: report.rho,
            k_class: report.k_class.to_string(),
            k_value: RatioRecord {
                num: JsonInt::from_scalar(report.k_value.numer()),
                den: JsonInt::from_scalar(report.k_value.denom()),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: ReportRecord = serde_json::from_str(s).map_err(|e| Error::Output(e.to_string()))?;
        KClass::from_str(&rec.k_class)?;
        Ok(rec)
    }

    pub fn k_value(&self) -> Ratio<BigInt> {
        Ratio::new(self.k_value.num.0.clone(), self.k_value.den.0.clone())
    }

    pub fn orders(&self) -> String {
        join(self.singularities.iter().map(|s| &s.q), ";")
    }
}

/// Tabular output format of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::Output(format!("unknown format `{other}`"))),
        }
    }
}

fn header(family: FamilyId, decimal: bool) -> Vec<String> {
    let mut h: Vec<String> = family.param_names().iter().map(|s| s.to_string()).collect();
    h.extend(["orders", "rho", "k_class", "k_value"].map(String::from));
    if decimal {
        h.push("k_approx".into());
    }
    h
}

fn row(rec: &ReportRecord, decimal: bool) -> Vec<String> {
    let mut r: Vec<String> = rec.params.iter().map(|p| p.to_string()).collect();
    let k = rec.k_value();
    r.extend([rec.orders(), rec.rho.to_string(), rec.k_class.clone(), k.to_string()]);
    if decimal {
        r.push(format!("{:.6}", approx(&k)));
    }
    r
}

/// Renders a table of records for one family. JSON output is one record
/// per line. `decimal` adds an approximate column next to the exact value.
pub fn render(family: FamilyId, records: &[ReportRecord], format: Format, decimal: bool) -> Result<String> {
    match format {
        Format::Json => Ok(records.iter().map(|r| r.to_json() + "\n").collect()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Output(e.to_string());
            w.write_record(header(family, decimal)).map_err(io)?;
            for rec in records {
                w.write_record(row(rec, decimal)).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
        }
        Format::Markdown => {
            let h = header(family, decimal);
            let mut out = format!("| {} |\n", h.join(" | "));
            out.push_str(&format!("|{}\n", "---|".repeat(h.len())));
            for rec in records {
                out.push_str(&format!("| {} |\n", row(rec, decimal).join(" | ")));
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_s3;

    #[test]
    fn json_round_trip() {
        let b = build_s3(6).unwrap();
        let r = b.report::<BigInt>().unwrap();
        let rec = ReportRecord::new(b.id, &b.params, &r);
        let s = rec.to_json();
        assert!(s.contains("\"k_value\":{\"num\":1,\"den\":47}"), "{s}");
        assert!(s.contains("{\"q\":2,\"q1\":1,\"chain\":[2]}"), "{s}");
        assert_eq!(ReportRecord::from_json(&s).unwrap(), rec);
    }

    #[test]
    fn huge_integers_stay_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let j = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(j, "123456789012345678901234567890");
        let back: JsonInt = serde_json::from_str(&j).unwrap();
        assert_eq!(back.0, big);
        assert!(serde_json::from_str::<JsonInt>("1.5").is_err());
    }

    #[test]
    fn bad_k_class_rejected() {
        let s =
            r#"{"family":"S3","params":[6],"singularities":[],"rho":1,"k_class":"Big","k_value":{"num":1,"den":2}}"#;
        assert!(ReportRecord::from_json(s).is_err());
    }

    #[test]
    fn csv_and_markdown() {
        let b = build_s3(5).unwrap();
        let rec = ReportRecord::new(b.id, &b.params, &b.report::<BigInt>().unwrap());
        let csv = render(FamilyId::S3, std::slice::from_ref(&rec), Format::Csv, false).unwrap();
        assert_eq!(csv, "b,orders,rho,k_class,k_value\n5,2;7;63,1,NumericallyTrivial,0\n");
        let md = render(FamilyId::S3, &[rec], Format::Markdown, true).unwrap();
        assert!(md.starts_with("| b | orders | rho | k_class | k_value | k_approx |\n|---|"));
        assert!(md.contains("| 5 | 2;7;63 | 1 | NumericallyTrivial | 0 | 0.000000 |"));
    }
}
