//! Exact arithmetic for rational surfaces with only cyclic quotient
//! singularities and Picard number one.
//!
//! The pipeline runs from a blow-up script of the plane ([`lattice`]),
//! through contraction of negative chains ([`contraction`]), to a class of
//! the canonical divisor on the contracted surface. Cyclic quotient
//! singularities and their Hirzebruch-Jung strings live in [`hjcf`]; the
//! weighted-hypersurface side is in [`kollar`]; ready-made constructions in
//! [`families`].
//!
//! Everything is generic over an exact integer [`Scalar`]. The aliases at
//! the crate root fix it to [`BigInt`].
//!
//! ```
//! use qhpp::{build, FamilyId, KClass, Report};
//!
//! let b = build(FamilyId::S3, &[6]).unwrap();
//! let r: Report = b.report().unwrap();
//! assert_eq!(r.k_class, KClass::Ample);
//! assert_eq!(r.k_value.to_string(), "1/47");
//! ```

pub mod contraction;
pub mod error;
pub mod families;
pub mod hjcf;
pub mod kollar;
pub mod lattice;
pub mod oracle;
pub mod output;
pub mod scalar;
pub mod sweep;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use contraction::{classify, contract, pullback_k_dot, pullback_k_dot_class, ContractionPlan, KClass, QhppReport};
pub use error::{Error, Result};
pub use families::{build, FamilyBuild, FamilyId};
pub use hjcf::{expand, make_pattern, pattern_determinant, CyclicSingularity, HJFraction, PartialOrders};
pub use kollar::{singularity_types, weights, KollarParams, KollarWeights};
pub use lattice::{BlowupStep, CurveClass, DualGraph, SurfaceModel};
pub use output::{render, Format, ReportRecord};
pub use scalar::Scalar;
pub use sweep::SweepSpec;

pub type Chain = HJFraction<BigInt>;
pub type Singularity = CyclicSingularity<BigInt>;
pub type Report = QhppReport<BigInt>;
pub type Rational = BigRational;
