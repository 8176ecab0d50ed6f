//! Resultants, discriminants, Schur's product formula and the closed-form
//! discriminant values for the Chebyshev-derived families.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::factor::{small_prime_support, FactoredInt};
use crate::poly::Poly;
use crate::scalar::{pow_signed, rat, ExactDiv, Ring};
use crate::RatPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscError {
    #[error("resultant of the zero polynomial")]
    ZeroPolynomial,
    #[error("discriminant of a constant polynomial")]
    ConstantPolynomial,
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
    #[error("recurrence hypothesis violated: {0}")]
    Hypothesis(String),
}

fn div<T: ExactDiv>(a: &T, b: &T, site: &'static str) -> Result<T, DiscError> {
    a.exact_div(b).ok_or(DiscError::InexactDivision(site))
}

/// Resultant by the subresultant remainder sequence.
///
/// Works over any integral domain with exact division, so the same routine
/// computes univariate resultants over `Q` and resultants in `z` of
/// bivariate polynomials with coefficients in `Q[x]`.
pub fn resultant<T: ExactDiv>(p: &Poly<T>, q: &Poly<T>) -> Result<T, DiscError> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(DiscError::ZeroPolynomial);
    };
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        negate = dp % 2 == 1 && dq % 2 == 1;
    }
    let signed = |v: T, negate: bool| if negate { -v } else { v };

    let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
    if db == 0 {
        return Ok(signed(b.leading().pow_u32(da as u32), negate));
    }

    let mut g = T::one();
    let mut h = T::one();
    loop {
        let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        let scale = g.clone() * h.pow_u32(delta);
        a = b;
        b = Poly::new(
            r.coeffs()
                .iter()
                .map(|c| div(c, &scale, "subresultant step"))
                .collect::<Result<_, _>>()?,
        );
        g = a.leading();
        h = if delta == 0 {
            h
        } else {
            div(&g.pow_u32(delta), &h.pow_u32(delta - 1), "subresultant scale")?
        };
        match b.degree() {
            None => return Ok(T::zero()),
            Some(0) => {
                let da = a.degree().unwrap_or(0) as u32;
                let v = div(&b.leading().pow_u32(da), &h.pow_u32(da - 1), "subresultant tail")?;
                return Ok(signed(v, negate));
            }
            Some(_) => {}
        }
    }
}

/// Sylvester matrix of `p` and `q` (rows of `p` first, descending powers).
pub fn sylvester_matrix<T: Ring>(p: &Poly<T>, q: &Poly<T>) -> Vec<Vec<T>> {
    let m = p.degree().unwrap_or(0);
    let l = q.degree().unwrap_or(0);
    let size = m + l;
    let mut rows = vec![vec![T::zero(); size]; size];
    for i in 0..l {
        for k in 0..=m {
            rows[i][i + m - k] = p.coeff(k);
        }
    }
    for i in 0..m {
        for k in 0..=l {
            rows[l + i][i + l - k] = q.coeff(k);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_determinant<T: ExactDiv>(mut m: Vec<Vec<T>>) -> Result<T, DiscError> {
    let n = m.len();
    if n == 0 {
        return Ok(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(T::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = div(&num, &prev, "Bareiss elimination")?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Resultant as the determinant of the Sylvester matrix. Independent of
/// [`resultant`]; kept as a cross-check for small degrees.
pub fn sylvester_resultant<T: ExactDiv>(p: &Poly<T>, q: &Poly<T>) -> Result<T, DiscError> {
    if p.is_zero() || q.is_zero() {
        return Err(DiscError::ZeroPolynomial);
    }
    bareiss_determinant(sylvester_matrix(p, q))
}

/// `(-1)^(d(d-1)/2) Res(p, p') / lc(p)`; degree-one polynomials have discriminant 1.
pub fn disc<T: ExactDiv>(p: &Poly<T>) -> Result<T, DiscError> {
    let d = p.degree().ok_or(DiscError::ZeroPolynomial)?;
    if d == 0 {
        return Err(DiscError::ConstantPolynomial);
    }
    let res = resultant(p, &p.derivative())?;
    let v = div(&res, &p.leading(), "discriminant")?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -v } else { v })
}

/// Coefficients of `p_k = (a_k x + b_k) p_{k-1} - c_k p_{k-2}`, 1-indexed
/// (`a[0]` is `a_1`), with `p_0 = 1` and `p_1 = a_1 x + b_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence {
    pub a: Vec<BigRational>,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
}

impl Recurrence {
    /// The recurrence generating `U_k`: `a_k = 2`, `b_k = 0`, `c_k = 1`.
    pub fn chebyshev_u(len: usize) -> Self {
        Recurrence { a: vec![rat(2); len], b: vec![rat(0); len], c: vec![rat(1); len] }
    }

    pub fn len(&self) -> usize {
        self.a.len().min(self.b.len()).min(self.c.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check(&self, n: usize) -> Result<(), DiscError> {
        if n == 0 || n > self.len() {
            return Err(DiscError::Hypothesis(format!(
                "need 1 <= n <= {} coefficient triples, got n = {n}",
                self.len()
            )));
        }
        if self.a[0].is_zero() {
            return Err(DiscError::Hypothesis("a_1 = 0".into()));
        }
        for j in 2..=n {
            if self.a[j - 1].is_zero() || self.c[j - 1].is_zero() {
                return Err(DiscError::Hypothesis(format!("a_{j} c_{j} = 0")));
            }
        }
        Ok(())
    }

    /// `[p_0, ..., p_n]`.
    pub fn polys(&self, n: usize) -> Vec<RatPoly> {
        let mut out = vec![RatPoly::one()];
        for k in 1..=n {
            let lin = RatPoly::new(vec![self.b[k - 1].clone(), self.a[k - 1].clone()]);
            let mut next = &lin * &out[k - 1];
            if k >= 2 {
                next = &next - &out[k - 2].scale(&self.c[k - 1]);
            }
            out.push(next);
        }
        out
    }
}

/// Closed form of `prod_{p_n(x_i)=0} p_{n-1}(x_i)`:
/// `(-1)^(n(n-1)/2) prod_j a_j^(n-2j+1) c_j^(j-1)`.
pub fn schur_product(r: &Recurrence, n: usize) -> Result<BigRational, DiscError> {
    r.check(n)?;
    let mut acc = BigRational::one();
    for j in 1..=n {
        acc *= pow_signed(&r.a[j - 1], n as i64 - 2 * j as i64 + 1);
        if j > 1 {
            acc *= r.c[j - 1].pow_u32(j as u32 - 1);
        }
    }
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -acc } else { acc })
}

/// The same product computed as `Res(p_n, p_{n-1}) / lc(p_n)^(n-1)`.
pub fn schur_product_by_resultant(r: &Recurrence, n: usize) -> Result<BigRational, DiscError> {
    r.check(n)?;
    let ps = r.polys(n);
    let (pn, pm) = (&ps[n], &ps[n - 1]);
    let res = resultant(pn, pm)?;
    Ok(res / pn.leading().pow_u32(n as u32 - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClosedFormKind {
    /// `Disc T_n = 2^((n-1)^2) n^n`
    DiscT,
    /// `Disc U_n = 2^(n^2) (n+1)^(n-2)`
    DiscU,
    /// Discriminant of `U'_{2n-1}(sqrt x)`.
    DiscUprimeSqrt,
    /// Magnitude of the discriminant of the unnormalized Mutt polynomial.
    DiscMuttRaw,
}

/// Exact value of the named closed-form discriminant formula.
pub fn closed_form(kind: ClosedFormKind, n: usize) -> BigRational {
    let n_i = n as i64;
    let r = |v: i64| rat(v);
    let p = |base: i64, e: i64| pow_signed(&rat(base), e);
    match kind {
        ClosedFormKind::DiscT => p(2, (n_i - 1) * (n_i - 1)) * p(n_i, n_i),
        ClosedFormKind::DiscU => p(2, n_i * n_i) * p(n_i + 1, n_i - 2),
        ClosedFormKind::DiscUprimeSqrt => {
            r(3) * p(2 * n_i + 1, n_i - 2)
                * p(2 * n_i - 1, n_i - 3)
                * p(n_i, n_i - 3)
                * p(2, 2 * n_i * n_i - 3 * n_i - 1)
        }
        ClosedFormKind::DiscMuttRaw => {
            p(2 * n_i - 1, n_i - 3)
                * p(2 * n_i + 1, n_i - 2)
                * p(2, 2 * n_i * n_i - n_i - 5)
                * r(3)
                * p(n_i, n_i - 3)
        }
    }
}

/// `{2, 3}` together with the prime factors of `n`, `2n - 1` and `2n + 1`.
pub fn allowed_primes(n: usize) -> BTreeSet<BigInt> {
    let n = n as u64;
    let mut s: BTreeSet<u64> = [2, 3].into();
    for v in [n, 2 * n - 1, 2 * n + 1] {
        s.extend(small_prime_support(v));
    }
    s.into_iter().map(BigInt::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportVerdict {
    pub subset_ok: bool,
    pub found: Vec<String>,
    pub allowed: Vec<String>,
    pub symmetric_difference: Vec<String>,
}

fn strings(s: &BTreeSet<BigInt>) -> Vec<String> {
    s.iter().map(|p| p.to_string()).collect()
}

/// Compares the primes of `f` with [`allowed_primes`]`(n)`.
pub fn support_check(f: &FactoredInt, n: usize) -> SupportVerdict {
    compare_supports(&f.primes(), &allowed_primes(n))
}

/// Subset test of `found` against `allowed`, with the symmetric difference.
pub fn compare_supports(found: &BTreeSet<BigInt>, allowed: &BTreeSet<BigInt>) -> SupportVerdict {
    SupportVerdict {
        subset_ok: found.is_subset(allowed),
        found: strings(found),
        allowed: strings(allowed),
        symmetric_difference: strings(&found.symmetric_difference(allowed).cloned().collect()),
    }
}
