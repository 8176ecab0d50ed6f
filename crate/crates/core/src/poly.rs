//! Dense univariate polynomials over a generic coefficient ring.
//!
//! Coefficients are stored in ascending degree order and the vector never
//! ends in a zero, so the zero polynomial is the empty vector. A polynomial
//! whose coefficients are themselves polynomials is a bivariate polynomial;
//! see [`crate::BivarPoly`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{ExactDiv, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero has no primitive part")]
    ZeroPolynomial,
    #[error("parity violation: monomial of degree {degree} breaks {expected:?} parity")]
    Parity { degree: usize, expected: Parity },
    #[error("monomial of degree {degree} is not divisible by z^{drop}")]
    NotDivisible { degree: usize, drop: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `self * x^k`
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| T::from_i64(k as i64) * c.clone())
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn evaluate(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Substitutes another polynomial for the indeterminate.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `p(x + c)`, by Horner's scheme with `x + c` as the inner polynomial.
    pub fn shift(&self, c: &T) -> Self {
        self.compose(&Self::new(vec![c.clone(), T::one()]))
    }

    /// Substitutes `x^k` for `x`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Writes `self(z) = z^drop * q(z^2)` and returns `q`.
    ///
    /// `parity` is the expected parity of `self`; any monomial that breaks it,
    /// or that lies below `z^drop`, is reported as an error.
    pub fn even_part_extract(&self, parity: Parity, drop: usize) -> Result<Self, PolyError> {
        for (degree, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let is_even = degree % 2 == 0;
            if is_even != (parity == Parity::Even) {
                return Err(PolyError::Parity { degree, expected: parity });
            }
            if degree < drop {
                return Err(PolyError::NotDivisible { degree, drop });
            }
        }
        if drop.is_multiple_of(2) != (parity == Parity::Even) {
            // z^drop * q(z^2) has the parity of `drop`; only zero survives a mismatch.
            return match self.coeffs.iter().position(|c| !c.is_zero()) {
                Some(degree) => Err(PolyError::Parity { degree, expected: parity }),
                None => Ok(Self::zero()),
            };
        }
        Ok(Self::new(self.coeffs.iter().skip(drop).step_by(2).cloned().collect()))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    ///
    /// Panics if `d` is zero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading();
        let mut r = self.clone();
        let mut steps = ds - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = Self::monomial(r.leading(), dr - dd);
            r = &r.scale(&lc) - &(&t * d);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lc.pow_u32(steps as u32));
        }
        r
    }
}

impl<T: ExactDiv> Poly<T> {
    /// Long division; `None` when some leading-coefficient quotient is not exact.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); r.len().saturating_sub(dd)];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].exact_div(&lc)?;
            for (j, dj) in d.coeffs.iter().enumerate().take(dd) {
                let slot = std::mem::replace(&mut r[k - dd + j], T::zero());
                r[k - dd + j] = slot - c.clone() * dj.clone();
            }
            r[k] = T::zero();
            q[k - dd] = c;
        }
        Some((Self::new(q), Self::new(r)))
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            let q = c
                .exact_div(&T::from_i64(k as i64 + 1))
                .expect("integration requires division by positive integers");
            coeffs.push(q);
        }
        Self::new(coeffs)
    }

    /// `gcd(self, other)` by the Euclidean algorithm; meaningful over a field.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("gcd requires a coefficient field");
            a = b;
            b = r;
        }
        a
    }
}

impl Poly<BigRational> {
    /// Splits `self` as `content * primitive`, where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(BigRational, Self), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let num_gcd = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c.numer()));
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading().is_negative() {
            content = -content;
        }
        let primitive = self.map(|c| c / &content);
        Ok((content, primitive))
    }

    /// Primitive part; the zero polynomial maps to itself.
    pub fn primitive(&self) -> Self {
        self.content_primitive().map(|(_, p)| p).unwrap_or_default()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Numerators of an integer-coefficient polynomial.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// True when `gcd(self, self')` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<T: Ring> Default for Poly<T> {
    fn default() -> Self {
        Poly { coeffs: Vec::new() }
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn from_i64(v: i64) -> Self {
        Self::constant(T::from_i64(v))
    }
}

impl<T: ExactDiv> ExactDiv for Poly<T> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                let slot = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = slot + prod;
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;

            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use crate::RatPoly;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        let t2 = p(&[-1, 0, 2]);
        assert_eq!(&t2 * &RatPoly::one(), t2);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), RatPoly::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, -3, 0, 4]).derivative(), p(&[-3, 0, 12]));
        assert_eq!(p(&[0, 6, 0, -32, 0, 32]).derivative(), p(&[6, 0, -96, 0, 160]));
        assert!(p(&[5]).derivative().is_zero());
    }

    #[test]
    fn integrate_examples() {
        let q = p(&[0, 0, 2]).integrate();
        assert_eq!(q, RatPoly::new(vec![rat(0), rat(0), rat(0), ratio(2, 3)]));
        assert!(RatPoly::zero().integrate().is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let t5 = p(&[0, 5, 0, -20, 0, 16]);
        assert_eq!(t5.evaluate(&rat(1)), rat(1));
        assert_eq!(RatPoly::zero().evaluate(&ratio(3, 7)), rat(0));
    }

    #[test]
    fn content_and_primitive_part() {
        let (c, q) = p(&[254, -19040, 39200]).content_primitive().unwrap();
        assert_eq!(c, rat(2));
        assert_eq!(q, p(&[127, -9520, 19600]));

        let (c, q) = p(&[-1144, 16016, -73216, 146432, -133120, 45056])
            .content_primitive()
            .unwrap();
        assert_eq!(c, rat(8));
        assert_eq!(q, p(&[-143, 2002, -9152, 18304, -16640, 5632]));

        let (c, q) = p(&[7]).content_primitive().unwrap();
        assert_eq!((c, q), (rat(7), p(&[1])));

        assert_eq!(RatPoly::zero().content_primitive(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn primitive_part_has_positive_leading_coefficient() {
        let (c, q) = p(&[3, -6]).content_primitive().unwrap();
        assert_eq!(c, rat(-3));
        assert_eq!(q, p(&[-1, 2]));
        let (c, q) = RatPoly::new(vec![ratio(1, 2), ratio(1, 3)]).content_primitive().unwrap();
        assert_eq!(c, ratio(1, 6));
        assert_eq!(q, p(&[3, 2]));
    }

    #[test]
    fn even_part_extraction() {
        assert_eq!(p(&[0, 0, 0, 1]).even_part_extract(Parity::Odd, 3).unwrap(), p(&[1]));
        assert_eq!(
            p(&[0, 0, 0, -40, 0, 48]).even_part_extract(Parity::Odd, 3).unwrap(),
            p(&[-40, 48])
        );
        assert_eq!(
            p(&[1, 1]).even_part_extract(Parity::Even, 0),
            Err(PolyError::Parity { degree: 1, expected: Parity::Even })
        );
        assert_eq!(
            p(&[0, 1, 0, 1]).even_part_extract(Parity::Odd, 3),
            Err(PolyError::NotDivisible { degree: 1, drop: 3 })
        );
        assert_eq!(
            p(&[0, 0, 1]).even_part_extract(Parity::Even, 1),
            Err(PolyError::Parity { degree: 2, expected: Parity::Even })
        );
    }

    #[test]
    fn shift_examples() {
        let q = p(&[6, -96, 160]);
        assert_eq!(q.shift(&rat(0)), q);
        assert_eq!(
            q.shift(&ratio(2, 35)),
            RatPoly::new(vec![ratio(254, 245), ratio(-544, 7), rat(160)])
        );
        assert_eq!(p(&[0, 0, 1]).shift(&rat(1)), p(&[1, 2, 1]));
    }

    #[test]
    fn pseudo_remainder_clears_denominators() {
        // lc(2x+1)^2 * (x^2 + 1) = (2x+1)(2x-1) + 5
        assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[1, 2])), p(&[5]));
        assert_eq!(p(&[3]).pseudo_rem(&p(&[1, 2])), p(&[3]));
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), RatPoly::zero()));
        assert!(p(&[1]).div_rem(&RatPoly::zero()).is_none());
    }

    #[test]
    fn squarefree_detection() {
        assert!(p(&[-2, 0, 1]).is_squarefree());
        assert!(!p(&[1, 2, 1]).is_squarefree());
    }

    #[test]
    fn float_instantiation() {
        let q = crate::F64Poly::new(vec![-2.0, 0.0, 1.0]);
        assert_eq!(q.evaluate(&3.0), 7.0);
        assert_eq!(q.derivative().coeffs(), &[0.0, 2.0]);
        assert_eq!(q.integrate().coeffs(), &[0.0, -2.0, 0.0, 1.0 / 3.0]);
    }
}
