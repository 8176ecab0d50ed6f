//! The transform `(S U_{2n-1})(z)` and the polynomial pair it produces.
//!
//! For `p = U_{2n-1}` the transform
//! `(Sp)(z) = 1/2 * int_{-z}^{z} p'(t) (x - t^2) dt`
//! is a polynomial in `z` with coefficients in `Q[x]`. Its discriminant in
//! `z` splits, up to a rational constant, as `x^3 M(x)^2 J(x)^2`, where
//! `M` ("Mutt") has small coefficients and `J` ("Jeff") has very large
//! ones. Every decomposition here is checked by exact division; nothing is
//! assumed about the constants.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bivar::{disc_z, lift, resultant_z};
use crate::chebyshev::{t, u};
use crate::discriminant::DiscError;
use crate::poly::{Parity, PolyError};
use crate::scalar::{rat, ratio, ExactDiv, Ring};
use crate::{BivarPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MuttJeffError {
    #[error("n must be at least {min}, got {n}")]
    OutOfRange { n: usize, min: usize },
    #[error("transform routes disagree at n = {n}")]
    RouteMismatch { n: usize },
    #[error("{what} mismatch at n = {n}: residual factor {residual}")]
    Structure { what: &'static str, n: usize, residual: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Disc(#[from] DiscError),
}

fn require(n: usize, min: usize) -> Result<(), MuttJeffError> {
    if n < min {
        Err(MuttJeffError::OutOfRange { n, min })
    } else {
        Ok(())
    }
}

/// `2 / ((2n+1)(2n-1))`, the offset between roots of `J` and the squared
/// positive roots of `U'_{2n-1}`.
pub fn jeff_shift(n: usize) -> BigRational {
    let n = n as i64;
    ratio(2, (2 * n + 1) * (2 * n - 1))
}

/// `(2n+1)(2n-1)`, which clears the denominators of the transform.
fn transform_denominator(n: usize) -> BigRational {
    let n = n as i64;
    rat((2 * n + 1) * (2 * n - 1))
}

/// Closed form `(x - z^2) U_{2n-1}(z) + T_{2n+1}(z)/(2n+1) + T_{2n-1}(z)/(2n-1)`.
pub fn transform_su_closed(n: usize) -> BivarPoly {
    let n_i = n as i64;
    let x_minus_z2 = BivarPoly::new(vec![RatPoly::x(), RatPoly::zero(), -RatPoly::one()]);
    let ts = &t(2 * n + 1).scale(&ratio(1, 2 * n_i + 1)) + &t(2 * n - 1).scale(&ratio(1, 2 * n_i - 1));
    &(&x_minus_z2 * &lift(&u(2 * n - 1))) + &lift(&ts)
}

/// Direct formal integration of `1/2 * int_{-z}^{z} U'_{2n-1}(t) (x - t^2) dt`.
pub fn transform_su_integral(n: usize) -> BivarPoly {
    let x_minus_t2 = BivarPoly::new(vec![RatPoly::x(), RatPoly::zero(), -RatPoly::one()]);
    let integrand = &lift(&u(2 * n - 1).derivative()) * &x_minus_t2;
    let antiderivative = integrand.integrate();
    // F(z) - F(-z) keeps twice the odd part of F.
    BivarPoly::new(
        antiderivative
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.clone() } else { RatPoly::zero() })
            .collect(),
    )
}

/// `(S U_{2n-1})(z)`, built by both routes and required to agree.
pub fn transform_su(n: usize) -> Result<BivarPoly, MuttJeffError> {
    require(n, 1)?;
    let closed = transform_su_closed(n);
    if closed != transform_su_integral(n) {
        return Err(MuttJeffError::RouteMismatch { n });
    }
    Ok(closed)
}

/// `R(x) = (2n-1) T_{2n+1}(x) + (2n+1) T_{2n-1}(x)`.
pub fn poly_r(n: usize) -> Result<RatPoly, MuttJeffError> {
    require(n, 1)?;
    let n_i = n as i64;
    Ok(&t(2 * n + 1).scale(&rat(2 * n_i - 1)) + &t(2 * n - 1).scale(&rat(2 * n_i + 1)))
}

/// The Mutt polynomial `R(sqrt x) / x^(3/2)`, unnormalized and primitive.
pub fn mutt(n: usize) -> Result<(RatPoly, RatPoly), MuttJeffError> {
    let raw = poly_r(n)?.even_part_extract(Parity::Odd, 3)?;
    let prim = raw.primitive();
    Ok((raw, prim))
}

/// `U'_{2n-1}(sqrt x)`, a polynomial of degree `n - 1`.
pub fn uprime_sqrt(n: usize) -> Result<RatPoly, MuttJeffError> {
    require(n, 1)?;
    Ok(u(2 * n - 1).derivative().even_part_extract(Parity::Even, 0)?)
}

/// The Jeff polynomial: the primitive integer polynomial whose roots are
/// `zeta^2 - 2/((2n+1)(2n-1))` for the positive roots `zeta` of `U'_{2n-1}`.
pub fn jeff(n: usize) -> Result<RatPoly, MuttJeffError> {
    require(n, 1)?;
    if n == 1 {
        return Ok(RatPoly::one());
    }
    Ok(uprime_sqrt(n)?.shift(&jeff_shift(n)).primitive())
}

/// Every polynomial attached to one value of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MuttJeffSet {
    pub n: usize,
    pub su: BivarPoly,
    pub r: RatPoly,
    pub mutt_raw: RatPoly,
    pub mutt_prim: RatPoly,
    pub uprime_sqrt: RatPoly,
    pub jeff: RatPoly,
}

impl MuttJeffSet {
    pub fn build(n: usize) -> Result<Self, MuttJeffError> {
        let su = transform_su(n)?;
        let r = poly_r(n)?;
        let (mutt_raw, mutt_prim) = mutt(n)?;
        Ok(MuttJeffSet { n, su, r, mutt_raw, mutt_prim, uprime_sqrt: uprime_sqrt(n)?, jeff: jeff(n)? })
    }
}

/// `constant * prod part^exponent`, verified by exact division.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionResult {
    pub n: usize,
    #[serde(serialize_with = "crate::serialize::rat_string")]
    pub constant: BigRational,
    #[serde(serialize_with = "crate::serialize::poly_parts")]
    pub parts: Vec<(RatPoly, u32)>,
}

impl DecompositionResult {
    /// Rebuilds the decomposed polynomial.
    pub fn expand(&self) -> RatPoly {
        self.parts.iter().fold(RatPoly::constant(self.constant.clone()), |acc, (p, e)| {
            &acc * &p.pow_u32(*e)
        })
    }
}

/// Divides `target` by each `part^exponent` and requires a constant quotient.
pub fn decompose(
    what: &'static str,
    n: usize,
    target: &RatPoly,
    parts: Vec<(RatPoly, u32)>,
) -> Result<DecompositionResult, MuttJeffError> {
    let mut rest = target.clone();
    for (p, e) in &parts {
        for _ in 0..*e {
            rest = rest.exact_div(p).ok_or_else(|| MuttJeffError::Structure {
                what,
                n,
                residual: format!("{rest} is not divisible by {p}"),
            })?;
        }
    }
    match rest.degree() {
        Some(0) => Ok(DecompositionResult { n, constant: rest.leading(), parts }),
        _ => Err(MuttJeffError::Structure { what, n, residual: rest.to_string() }),
    }
}

fn cleared_su(n: usize) -> Result<BivarPoly, MuttJeffError> {
    Ok(transform_su(n)?.scale(&RatPoly::constant(transform_denominator(n))))
}

/// `Res_z(SU(z), U'_{2n-1}(z))`, which must be a constant times `J(x)^2`.
pub fn jeff_oracle(n: usize) -> Result<DecompositionResult, MuttJeffError> {
    require(n, 2)?;
    let res = resultant_z(&cleared_su(n)?, &lift(&u(2 * n - 1).derivative()))?;
    decompose("Jeff oracle", n, &res, vec![(jeff(n)?, 2)])
}

/// `Disc_z SU(z) = constant * x^3 * M(x)^2 * J(x)^2`.
pub fn disc_z_structure(n: usize) -> Result<DecompositionResult, MuttJeffError> {
    require(n, 2)?;
    let d = disc_z(&cleared_su(n)?)?;
    let (raw, _) = mutt(n)?;
    decompose("Disc_z structure", n, &d, vec![(RatPoly::x(), 3), (raw, 2), (jeff(n)?, 2)])
}

/// `Disc_t (U'_{2n-1}(t) (x - t^2)) = constant * x * U'_{2n-1}(sqrt x)^4`.
pub fn pointmass_disc_check(n: usize) -> Result<DecompositionResult, MuttJeffError> {
    require(n, 1)?;
    let x_minus_t2 = BivarPoly::new(vec![RatPoly::x(), RatPoly::zero(), -RatPoly::one()]);
    let f = &lift(&u(2 * n - 1).derivative()) * &x_minus_t2;
    let d = disc_z(&f)?;
    decompose("point-mass discriminant", n, &d, vec![(RatPoly::x(), 1), (uprime_sqrt(n)?, 4)])
}
