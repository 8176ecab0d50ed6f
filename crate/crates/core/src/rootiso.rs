//! Certified real-root isolation by Sturm sequences, and the pairing of
//! Jeff roots with Mutt roots.
//!
//! Intervals are half-open `(lo, hi]`, matching the Sturm count
//! `V(lo) - V(hi)`. All comparisons are exact.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::muttjeff::{self, MuttJeffError};
use crate::poly::Poly;
use crate::scalar::{rat, ratio};
use crate::serialize::{approx_decimal, rat_to_string};
use crate::RatPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("cannot isolate roots of the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree; gcd with derivative is {0}")]
    NotSquarefree(String),
    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },
    #[error("expected {expected} real roots of {what}, found {found}")]
    RootCount { what: &'static str, expected: usize, found: usize },
    #[error("window membership undecidable at n = {n} after refinement to width {width}")]
    Undecidable { n: usize, width: String },
    #[error(transparent)]
    Construction(#[from] MuttJeffError),
}

/// Standard Sturm sequence over `Q`: `p, p'`, then negated remainders.
pub fn sturm_chain(p: &RatPoly) -> Result<Vec<RatPoly>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let mut b = p.derivative();
    while !b.is_zero() {
        let (_, r) = chain.last().unwrap().div_rem(&b).expect("division over Q");
        chain.push(b);
        b = -r;
    }
    let last = chain.last().unwrap();
    if last.degree() != Some(0) {
        return Err(RootError::NotSquarefree(last.to_string()));
    }
    Ok(chain)
}

fn positive_primitive(p: &Poly<BigInt>) -> Poly<BigInt> {
    let g = p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p.clone();
    }
    p.map(|c| c / &g)
}

fn integer_image(p: &RatPoly) -> Poly<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    positive_primitive(&p.map(|c| (c * &den).to_integer()))
}

/// Sign of `p(x)` for an integer polynomial, by homogeneous evaluation.
fn sign_at(p: &Poly<BigInt>, x: &BigRational) -> Ordering {
    if p.is_zero() {
        return Ordering::Equal;
    }
    let (num, den) = (x.numer(), x.denom());
    // sum c_k num^k den^(d-k); den > 0 so the sign matches p(x).
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for (i, c) in p.coeffs().iter().rev().enumerate() {
        if i > 0 {
            den_pow *= den;
        }
        acc = acc * num + c * &den_pow;
    }
    acc.cmp(&BigInt::zero())
}

/// A Sturm sequence kept as sign-equivalent primitive integer polynomials.
pub struct SturmChain {
    poly: RatPoly,
    chain: Vec<Poly<BigInt>>,
}

impl SturmChain {
    /// Builds the chain by a primitive pseudo-remainder sequence whose
    /// elements are positive multiples of the standard Sturm sequence.
    pub fn new(p: &RatPoly) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let p0 = integer_image(p);
        let mut chain = vec![p0.clone()];
        let mut b = positive_primitive(&p0.derivative());
        while !b.is_zero() {
            let a = chain.last().unwrap();
            let delta = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
            let mut r = a.pseudo_rem(&b);
            // prem = lc(b)^delta * rem; undo a negative scale, then negate.
            if !(b.leading().is_negative() && delta % 2 == 1) {
                r = -r;
            }
            chain.push(b);
            b = positive_primitive(&r);
        }
        if chain.last().unwrap().degree() != Some(0) {
            let g = chain.last().unwrap().map(|c| BigRational::from_integer(c.clone()));
            return Err(RootError::NotSquarefree(g.to_string()));
        }
        Ok(SturmChain { poly: p.clone(), chain })
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Chain elements as rational polynomials.
    pub fn polys(&self) -> Vec<RatPoly> {
        self.chain
            .iter()
            .map(|p| p.map(|c| BigRational::from_integer(c.clone())))
            .collect()
    }

    /// Sign changes in the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// `1 + max |a_k / a_d|`; every real root lies strictly inside `(-B, B)`.
    pub fn cauchy_bound(&self) -> BigRational {
        let lc = self.poly.leading().abs();
        let m = self
            .poly
            .coeffs()
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + rat(1)
    }
}

impl fmt::Debug for SturmChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SturmChain").field("poly", &self.poly).field("len", &self.chain.len()).finish()
    }
}

/// An interval `(lo, hi]` holding exactly one root of `chain.poly()`.
#[derive(Clone)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    chain: Arc<SturmChain>,
}

impl RootInterval {
    pub fn poly(&self) -> &RatPoly {
        self.chain.poly()
    }

    pub fn chain(&self) -> &Arc<SturmChain> {
        &self.chain
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn root_count(&self) -> usize {
        self.chain.count(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x <= &self.hi
    }

    /// One bisection step keeping the half that holds the root.
    pub fn bisect(&mut self) {
        let mid = self.midpoint();
        if self.chain.count(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Rounds the midpoint to `digits` significant digits.
    pub fn approx(&self, digits: usize) -> String {
        approx_decimal(&self.midpoint(), digits)
    }
}

impl PartialEq for RootInterval {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo && self.hi == other.hi && self.chain.poly == other.chain.poly
    }
}

impl fmt::Debug for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [rat_to_string(&self.lo), rat_to_string(&self.hi)].serialize(s)
    }
}

/// Isolates the roots in `(lo, hi]` of an already-built chain, ascending.
pub fn isolate_with(
    chain: &Arc<SturmChain>,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<RootInterval>, RootError> {
    if lo >= hi {
        return Err(RootError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    let mut out = Vec::new();
    // depth-first, left half first, so output is sorted
    let mut stack = vec![(lo.clone(), hi.clone(), chain.count(lo, hi))];
    while let Some((a, b, k)) = stack.pop() {
        match k {
            0 => {}
            1 => out.push(RootInterval { lo: a, hi: b, chain: Arc::clone(chain) }),
            _ => {
                let mid = (&a + &b) / rat(2);
                let left = chain.count(&a, &mid);
                stack.push((mid.clone(), b, k - left));
                stack.push((a, mid, left));
            }
        }
    }
    Ok(out)
}

/// One interval per real root of squarefree `p` in `(lo, hi]`, ascending.
pub fn isolate_roots(
    p: &RatPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<RootInterval>, RootError> {
    isolate_with(&Arc::new(SturmChain::new(p)?), lo, hi)
}

/// Every real root of squarefree `p`.
pub fn isolate_all_roots(p: &RatPoly) -> Result<Vec<RootInterval>, RootError> {
    let chain = Arc::new(SturmChain::new(p)?);
    let b = chain.cauchy_bound();
    isolate_with(&chain, &-b.clone(), &b)
}

/// Nested refinement of `iv` to width at most `width`.
pub fn refine_root(iv: &RootInterval, width: &BigRational) -> RootInterval {
    let mut out = iv.clone();
    while &out.width() > width {
        out.bisect();
    }
    out
}

/// Window `[x0 - 3/(10 n^2), x0 + 1/(2 n^2))` around a Jeff root `x0`.
pub fn window_offsets(n: usize) -> (BigRational, BigRational) {
    let n2 = (n * n) as i64;
    (ratio(3, 10 * n2), ratio(1, 2 * n2))
}

/// Bound on `|x_M - x_J|` for paired roots.
pub fn gap_bound(n: usize) -> BigRational {
    ratio(1, 2 * (n * n) as i64)
}

/// Width below which a membership question is declared undecidable.
pub fn undecidable_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(50))
}

/// Enclosure `(lo, hi)` of `m - j` for roots in the two intervals; open at both ends.
fn difference_bounds(m: &RootInterval, j: &RootInterval) -> (BigRational, BigRational) {
    (&m.lo - &j.hi, &m.hi - &j.lo)
}

fn refine_pair(n: usize, j: &mut RootInterval, m: &mut RootInterval) -> Result<(), RootError> {
    let limit = undecidable_width();
    if j.width() < limit && m.width() < limit {
        return Err(RootError::Undecidable { n, width: limit.to_string() });
    }
    j.bisect();
    m.bisect();
    Ok(())
}

/// Decides `x_M in [x_J - below, x_J + above)` exactly, refining as needed.
pub fn in_window(
    n: usize,
    j: &mut RootInterval,
    m: &mut RootInterval,
    below: &BigRational,
    above: &BigRational,
) -> Result<bool, RootError> {
    let neg_below = -below.clone();
    loop {
        let (dl, dh) = difference_bounds(m, j);
        if dl >= neg_below && &dh <= above {
            return Ok(true);
        }
        if dh <= neg_below || &dl >= above {
            return Ok(false);
        }
        refine_pair(n, j, m)?;
    }
}

/// Refines until `|x_M - x_J| <= bound` is proven or refuted; returns the
/// verdict and the final upper bound on the gap.
pub fn gap_within(
    n: usize,
    j: &mut RootInterval,
    m: &mut RootInterval,
    bound: &BigRational,
) -> Result<(bool, BigRational), RootError> {
    loop {
        let (dl, dh) = difference_bounds(m, j);
        let upper = dl.abs().max(dh.abs());
        if &upper <= bound {
            return Ok((true, upper));
        }
        if &dl >= bound || dh <= -bound.clone() {
            return Ok((false, upper));
        }
        refine_pair(n, j, m)?;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootPair {
    pub j: RootInterval,
    pub m: RootInterval,
    /// The paired Mutt root lies in the window around the Jeff root.
    pub in_window: bool,
    /// Some Mutt root, paired or not, lies in the window.
    pub exists_in_window: bool,
    pub gap_upper_bound: BigRational,
    pub gap_ok: bool,
}

impl Serialize for RootPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootPair", 8)?;
        st.serialize_field("j", &self.j)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("in_window", &self.in_window)?;
        st.serialize_field("exists_in_window", &self.exists_in_window)?;
        st.serialize_field("gap_le", &rat_to_string(&self.gap_upper_bound))?;
        st.serialize_field("gap_ok", &self.gap_ok)?;
        st.serialize_field("j_approx", &self.j.approx(15))?;
        st.serialize_field("m_approx", &self.m.approx(15))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairingReport {
    pub n: usize,
    pub pairs: Vec<RootPair>,
    pub unpaired_j: RootInterval,
    pub unpaired_m: RootInterval,
}

impl PairingReport {
    pub fn all_in_window(&self) -> bool {
        self.pairs.iter().all(|p| p.in_window && p.exists_in_window)
    }

    pub fn all_gaps_ok(&self) -> bool {
        self.pairs.iter().all(|p| p.gap_ok)
    }
}

/// Default refinement width `1/(100 n^2)`.
pub fn default_width(n: usize) -> BigRational {
    ratio(1, 100 * (n * n) as i64)
}

fn isolated_and_refined(
    what: &'static str,
    p: &RatPoly,
    expected: usize,
    width: &BigRational,
) -> Result<Vec<RootInterval>, RootError> {
    let roots = isolate_all_roots(p)?;
    if roots.len() != expected {
        return Err(RootError::RootCount { what, expected, found: roots.len() });
    }
    Ok(roots.iter().map(|iv| refine_root(iv, width)).collect())
}

pub fn pair_roots(n: usize) -> Result<PairingReport, RootError> {
    pair_roots_with(n, &default_width(n))
}

/// Matches the roots of `J` (minus its smallest) with those of `M` (minus
/// its largest) in sorted order and checks the window around each `J` root.
pub fn pair_roots_with(n: usize, width: &BigRational) -> Result<PairingReport, RootError> {
    if n < 2 {
        return Err(MuttJeffError::OutOfRange { n, min: 2 }.into());
    }
    let mut j_roots = isolated_and_refined("J", &muttjeff::jeff(n)?, n - 1, width)?;
    let (raw, _) = muttjeff::mutt(n)?;
    let mut m_roots = isolated_and_refined("M", &raw, n - 1, width)?;
    let (below, above) = window_offsets(n);
    let bound = gap_bound(n);

    let mut pairs = Vec::with_capacity(n - 2);
    for k in 0..n - 2 {
        let (mut j, mut m) = (j_roots[k + 1].clone(), m_roots[k].clone());
        let in_win = in_window(n, &mut j, &mut m, &below, &above)?;
        let (gap_ok, gap) = gap_within(n, &mut j, &mut m, &bound)?;
        j_roots[k + 1] = j;
        m_roots[k] = m;

        let mut exists = in_win;
        if !exists {
            for m in m_roots.iter_mut() {
                let mut j = j_roots[k + 1].clone();
                if in_window(n, &mut j, m, &below, &above)? {
                    exists = true;
                    break;
                }
            }
        }
        pairs.push(RootPair {
            j: j_roots[k + 1].clone(),
            m: m_roots[k].clone(),
            in_window: in_win,
            exists_in_window: exists,
            gap_upper_bound: gap,
            gap_ok,
        });
    }
    Ok(PairingReport {
        n,
        pairs,
        unpaired_j: j_roots[0].clone(),
        unpaired_m: m_roots[n - 2].clone(),
    })
}
