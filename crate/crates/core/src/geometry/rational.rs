//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::GeometryError;

pub type Rational = BigRational;

/// A point of `R^d` with exact coordinates.
pub type Point = Vec<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`, with optional surrounding whitespace and sign on `p`.
pub fn parse_rational(text: &str) -> Result<Rational, GeometryError> {
    let t = text.trim();
    let bad = || GeometryError::Parse(format!("malformed rational {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(GeometryError::Parse(format!(
            "zero denominator in {text:?}"
        )));
    }
    Ok(Rational::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn format_point(p: &[Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

pub fn parse_point(texts: &[String]) -> Result<Point, GeometryError> {
    texts.iter().map(|t| parse_rational(t)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Smallest positive integer `L` making every entry of `v` integral when multiplied by it.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub(crate) fn ser_point<S: serde::Serializer>(p: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(format_rational))
}

pub(crate) fn ser_opt_point<S: serde::Serializer>(
    p: &Option<Point>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => ser_point(p, s),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_points<S: serde::Serializer>(ps: &[Point], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| format_point(p)))
}
