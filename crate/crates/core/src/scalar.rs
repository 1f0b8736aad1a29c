//! The integer types the exact arithmetic is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed integer type usable as the scalar of every computation
/// in this crate.
///
/// Implemented for `i64`, `i128` and [`num_bigint::BigInt`]. The fixed-width
/// types are convenient for small sweeps; `BigInt` never overflows.
pub trait Scalar:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Display + Debug + Hash + Send + Sync + 'static
{
    /// Lifts a machine integer into the scalar type.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type holds an i64")
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for num_bigint::BigInt {}

/// Renders a ratio as `num/den`, or just `num` when the denominator is 1.
pub fn fmt_ratio<T: Scalar>(r: &Ratio<T>) -> String {
    r.to_string()
}

/// Decimal approximation of an exact ratio, for display only.
pub fn approx<T: Scalar>(r: &Ratio<T>) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

pub(crate) fn join<I, D>(items: I, sep: &str) -> String
where
    I: IntoIterator<Item = D>,
    D: Display,
{
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
