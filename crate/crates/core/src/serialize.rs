//! JSON forms of exact values.
//!
//! Rationals are always strings (`"-7"`, `"254/245"`), never floats. The
//! `approx` companions are 15-significant-digit decimal renderings meant
//! for people, not for round-tripping.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{BivarPoly, RatPoly};

pub const APPROX_DIGITS: usize = 15;

pub fn rat_to_string(r: &BigRational) -> String {
    r.to_string()
}

/// Parses `"num/den"` or a plain integer.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub fn rat_string<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

pub fn poly_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(rat_to_string).collect()
}

pub fn poly_approx(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| approx_decimal(c, APPROX_DIGITS)).collect()
}

pub fn poly_coeffs<S: Serializer>(p: &RatPoly, s: S) -> Result<S::Ok, S::Error> {
    poly_strings(p).serialize(s)
}

pub fn poly_parts<S: Serializer>(parts: &[(RatPoly, u32)], s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Part {
        coeffs: Vec<String>,
        exponent: u32,
    }
    let mut seq = s.serialize_seq(Some(parts.len()))?;
    for (p, e) in parts {
        seq.serialize_element(&Part { coeffs: poly_strings(p), exponent: *e })?;
    }
    seq.end()
}

/// Polynomial dump as written by `gen`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolyJson {
    pub kind: String,
    pub n: usize,
    pub variable: &'static str,
    pub degree: Option<usize>,
    pub coeffs: Vec<String>,
    pub approx: Vec<String>,
}

impl PolyJson {
    pub fn new(kind: &str, n: usize, p: &RatPoly) -> Self {
        PolyJson {
            kind: kind.to_string(),
            n,
            variable: "x",
            degree: p.degree(),
            coeffs: poly_strings(p),
            approx: poly_approx(p),
        }
    }
}

/// Bivariate dump: `coeffs[k]` is the coefficient of `z^k`, itself ascending in `x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BivarJson {
    pub kind: String,
    pub n: usize,
    pub variable: &'static str,
    pub degree: Option<usize>,
    pub coeffs: Vec<Vec<String>>,
}

impl BivarJson {
    pub fn new(kind: &str, n: usize, p: &BivarPoly) -> Self {
        BivarJson {
            kind: kind.to_string(),
            n,
            variable: "z",
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(poly_strings).collect(),
        }
    }
}

fn decimal_digits(v: &BigInt) -> i64 {
    v.to_string().trim_start_matches('-').len() as i64
}

/// Decimal rendering of `r` rounded to `sig` significant digits.
pub fn approx_decimal(r: &BigRational, sig: usize) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let sig = sig.max(1);
    let num = r.numer().abs();
    let den = r.denom().clone();
    let ten = BigInt::from(10);
    // |r| = m * 10^(e - sig + 1) with 10^(sig-1) <= m < 10^sig
    let mut exp = decimal_digits(&num) - decimal_digits(&den);
    let scaled = |e: i64| -> (BigInt, BigInt) {
        let shift = sig as i64 - 1 - e;
        if shift >= 0 {
            (&num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), &den * ten.pow((-shift) as u32))
        }
    };
    let lower = ten.pow(sig as u32 - 1);
    let (a, b) = scaled(exp);
    if a.div_floor(&b) < lower {
        exp -= 1;
    }
    let (a, b) = scaled(exp);
    let (q, rem) = a.div_rem(&b);
    let mut mant = if rem * 2 >= b { q + 1 } else { q };
    if mant == ten.pow(sig as u32) {
        mant /= 10;
        exp += 1;
    }
    let digits = mant.to_string();
    let sign = if r.is_negative() { "-" } else { "" };
    let body = if (-6..=15).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if int_len >= digits.len() {
                format!("{digits}{}", "0".repeat(int_len - digits.len()))
            } else {
                trim_fraction(format!("{}.{}", &digits[..int_len], &digits[int_len..]))
            }
        } else {
            let zeros = "0".repeat((-exp - 1) as usize);
            trim_fraction(format!("0.{zeros}{digits}"))
        }
    } else {
        let frac = trim_fraction(format!("{}.{}", &digits[..1], &digits[1..]));
        format!("{frac}e{exp}")
    };
    format!("{sign}{body}")
}

fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, Ring};

    #[test]
    fn rationals_as_strings() {
        assert_eq!(rat_to_string(&ratio(254, 245)), "254/245");
        assert_eq!(rat_to_string(&rat(-7)), "-7");
        assert_eq!(parse_rat("254/245"), Some(ratio(254, 245)));
        assert_eq!(parse_rat(" -3 "), Some(rat(-3)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn approx_rendering() {
        assert_eq!(approx_decimal(&ratio(1, 3), 15), "0.333333333333333");
        assert_eq!(approx_decimal(&ratio(2, 3), 5), "0.66667");
        assert_eq!(approx_decimal(&rat(-1144), 15), "-1144");
        assert_eq!(approx_decimal(&ratio(1, 8), 15), "0.125");
        assert_eq!(approx_decimal(&ratio(999_999, 1_000_000), 3), "1");
        assert_eq!(approx_decimal(&ratio(1, 10_000_000_000), 15), "1e-10");
        assert_eq!(approx_decimal(&rat(30616119778816), 5), "30616000000000");
        let big = rat(10).pow_u32(40);
        assert_eq!(approx_decimal(&big, 15), "1e40");
        assert_eq!(approx_decimal(&rat(0), 15), "0");
    }

    #[test]
    fn poly_json_shape() {
        let j = PolyJson::new("U", 2, &RatPoly::from_ints(&[-1, 0, 4]));
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains(r#""coeffs":["-1","0","4"]"#), "{s}");
    }
}
