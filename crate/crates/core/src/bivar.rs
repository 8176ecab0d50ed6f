//! Helpers for polynomials in `z` whose coefficients are polynomials in `x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::discriminant::{resultant, DiscError};
use crate::poly::Poly;
use crate::scalar::{ExactDiv, Ring};
use crate::{BivarPoly, IntPoly, RatPoly};

/// Embeds a polynomial in `z` with constant (x-free) coefficients.
pub fn lift(p: &RatPoly) -> BivarPoly {
    p.map(|c| RatPoly::constant(c.clone()))
}

/// `d/dx`, coefficientwise.
pub fn partial_x<T: Ring>(p: &Poly<Poly<T>>) -> Poly<Poly<T>> {
    p.map(|c| c.derivative())
}

/// Specializes `x` to a value, leaving a polynomial in `z`.
pub fn evaluate_x(p: &BivarPoly, x0: &BigRational) -> RatPoly {
    p.map(|c| c.evaluate(x0))
}

/// Largest `x`-degree among the coefficients.
pub fn degree_x<T: Ring>(p: &Poly<Poly<T>>) -> Option<usize> {
    p.coeffs().iter().filter_map(|c| c.degree()).max()
}

/// `Res_z(p, q)` by specializing `x` at integer points and interpolating.
///
/// Agrees with the generic subresultant `resultant(p, q)` but avoids
/// arithmetic in `Q[x]`. Points where either leading coefficient in `z`
/// vanishes are skipped so the degrees in `z` stay fixed.
pub fn resultant_z(p: &BivarPoly, q: &BivarPoly) -> Result<RatPoly, DiscError> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(DiscError::ZeroPolynomial);
    };
    let bound = dp * degree_x(q).unwrap_or(0) + dq * degree_x(p).unwrap_or(0);
    let (lp, lq) = (p.leading(), q.leading());
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() <= bound {
        // 0, 1, -1, 2, -2, ...
        let x0 = BigRational::from_integer(BigInt::from(if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 }));
        k += 1;
        if lp.evaluate(&x0).is_zero() || lq.evaluate(&x0).is_zero() {
            continue;
        }
        ys.push(rational_resultant(&evaluate_x(p, &x0), &evaluate_x(q, &x0))?);
        xs.push(x0);
    }
    Ok(interpolate(&xs, &ys))
}

/// `Disc_z p`, through [`resultant_z`].
pub fn disc_z(p: &BivarPoly) -> Result<RatPoly, DiscError> {
    let d = p.degree().ok_or(DiscError::ZeroPolynomial)?;
    if d == 0 {
        return Err(DiscError::ConstantPolynomial);
    }
    let res = resultant_z(p, &p.derivative())?;
    let v = res.exact_div(&p.leading()).ok_or(DiscError::InexactDivision("discriminant in z"))?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -v } else { v })
}

/// Univariate resultant over `Q`, done on primitive integer parts.
fn rational_resultant(a: &RatPoly, b: &RatPoly) -> Result<BigRational, DiscError> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Err(DiscError::ZeroPolynomial);
    };
    let (ca, pa) = a.content_primitive().map_err(|_| DiscError::ZeroPolynomial)?;
    let (cb, pb) = b.content_primitive().map_err(|_| DiscError::ZeroPolynomial)?;
    let ia = IntPoly::new(pa.to_integer_coeffs().expect("primitive part is integral"));
    let ib = IntPoly::new(pb.to_integer_coeffs().expect("primitive part is integral"));
    let r = resultant(&ia, &ib)?;
    Ok(ca.pow_u32(db as u32) * cb.pow_u32(da as u32) * BigRational::from_integer(r))
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in monomial form.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> RatPoly {
    let mut coef = ys.to_vec();
    for j in 1..xs.len() {
        for i in (j..xs.len()).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..xs.len()).rev() {
        let factor = RatPoly::new(vec![-xs[i].clone(), BigRational::one()]);
        acc = &(&acc * &factor) + &RatPoly::constant(coef[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn lift_and_specialize() {
        let p = RatPoly::from_ints(&[1, 2, 3]);
        assert_eq!(evaluate_x(&lift(&p), &rat(7)), p);
        assert_eq!(degree_x(&lift(&p)), Some(0));
    }

    #[test]
    fn mixed_partials_commute() {
        // x^2 z + 3x z^3
        let f = BivarPoly::new(vec![
            RatPoly::from_ints(&[]),
            RatPoly::from_ints(&[0, 0, 1]),
            RatPoly::from_ints(&[]),
            RatPoly::from_ints(&[0, 3]),
        ]);
        assert_eq!(partial_x(&f.derivative()), partial_x(&f).derivative());
        assert_eq!(evaluate_x(&f, &rat(2)), RatPoly::from_ints(&[0, 4, 0, 6]));
        assert_eq!(degree_x(&f), Some(2));
    }

    #[test]
    fn interpolated_resultant_matches_subresultant() {
        // (x + 1) z^2 - x, vanishing leading coefficient at x = -1
        let f = BivarPoly::new(vec![
            RatPoly::from_ints(&[0, -1]),
            RatPoly::from_ints(&[]),
            RatPoly::from_ints(&[1, 1]),
        ]);
        let g = BivarPoly::new(vec![RatPoly::from_ints(&[2, 0, 3]), RatPoly::from_ints(&[0, 1])]);
        assert_eq!(resultant_z(&f, &g).unwrap(), resultant(&f, &g).unwrap());
        assert_eq!(disc_z(&f).unwrap(), crate::discriminant::disc(&f).unwrap());
    }
}
