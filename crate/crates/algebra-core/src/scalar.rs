//! Exact rational scalars and their text form `"p/q"`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Scalar = BigRational;

pub fn int(x: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(x))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"`, `"p/q"` or a plain decimal like `"-0.25"`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let t = text.trim();
    if let Ok(x) = BigRational::from_str(t) {
        return Some(x);
    }
    let (whole, frac) = t.split_once('.')?;
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let negative = whole.starts_with('-');
    let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
    let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let x = BigRational::new(numer, denom);
    Some(if negative { -x } else { x })
}

pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}
