//! Integer factorization for discriminant values.
//!
//! Discriminants here are products of small primes, so the pipeline is:
//! caller-supplied hint primes, trial division, then Brent's variant of
//! Pollard rho for whatever is left.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("composite residual {residual} left unfactored")]
    Unfactored { residual: BigInt, partial: FactoredInt },
}

/// Effort limits for [`factor_int_with`].
#[derive(Debug, Clone, Copy)]
pub struct FactorConfig {
    pub trial_bound: u64,
    pub rho_iterations: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { trial_bound: 10_000, rho_iterations: 1 << 20 }
    }
}

/// A signed integer as `sign * prod p^e`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredInt {
    sign: i8,
    factors: BTreeMap<BigInt, u32>,
}

impl FactoredInt {
    pub fn zero() -> Self {
        FactoredInt { sign: 0, factors: BTreeMap::new() }
    }

    pub fn one() -> Self {
        FactoredInt { sign: 1, factors: BTreeMap::new() }
    }

    /// Builds from `(prime, exponent)` pairs; zero exponents are dropped.
    pub fn from_parts(sign: i8, parts: impl IntoIterator<Item = (BigInt, u32)>) -> Self {
        let mut f = FactoredInt { sign: sign.signum(), factors: BTreeMap::new() };
        for (p, e) in parts {
            f.push(p, e);
        }
        f
    }

    fn push(&mut self, p: BigInt, e: u32) {
        if e > 0 {
            *self.factors.entry(p).or_insert(0) += e;
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &BTreeMap<BigInt, u32> {
        &self.factors
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&BigInt::from(p)).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> BTreeSet<BigInt> {
        self.factors.keys().cloned().collect()
    }

    pub fn abs(&self) -> Self {
        FactoredInt { sign: self.sign.abs(), factors: self.factors.clone() }
    }

    pub fn value(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigInt::one(), |acc, (p, &e)| acc * p.pow(e));
        match self.sign {
            0 => BigInt::zero(),
            s if s < 0 => -mag,
            _ => mag,
        }
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return f.write_str("0");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, &e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

struct FactorMap<'a>(&'a BTreeMap<BigInt, u32>);

impl Serialize for FactorMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (p, e) in self.0 {
            map.serialize_entry(&p.to_string(), e)?;
        }
        map.end()
    }
}

impl Serialize for FactoredInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FactoredInt", 2)?;
        s.serialize_field("sign", &self.sign)?;
        s.serialize_field("factors", &FactorMap(&self.factors))?;
        s.end()
    }
}

const SMALL_PRIMES: [u32; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Miller-Rabin with the first twenty prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of a machine integer, by trial division.
pub fn small_prime_support(mut v: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while p * p <= v {
        if v.is_multiple_of(p) {
            out.insert(p);
            while v.is_multiple_of(p) {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.insert(v);
    }
    out
}

pub fn factor_int(v: &BigInt, hint_primes: &BTreeSet<BigInt>) -> Result<FactoredInt, FactorError> {
    factor_int_with(v, hint_primes, FactorConfig::default())
}

/// Complete factorization of `v`, trying `hint_primes` first.
pub fn factor_int_with(
    v: &BigInt,
    hint_primes: &BTreeSet<BigInt>,
    config: FactorConfig,
) -> Result<FactoredInt, FactorError> {
    let sign = match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => return Ok(FactoredInt::zero()),
        Sign::Plus => 1,
    };
    let mut out = FactoredInt::one();
    out.sign = sign;
    let mut rest = v.abs();

    for p in hint_primes.iter().filter(|p| is_probable_prime(p)) {
        let e = strip(&mut rest, p);
        out.push(p.clone(), e);
    }

    let mut d = 2u64;
    while d <= config.trial_bound && !rest.is_one() {
        let p = BigInt::from(d);
        if &p * &p > rest {
            break;
        }
        let e = strip(&mut rest, &p);
        out.push(p, e);
        d += if d == 2 { 1 } else { 2 };
    }

    let mut pending = vec![rest];
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            out.push(m, 1);
            continue;
        }
        match pollard_brent(&m, config.rho_iterations) {
            Some(f) => {
                let g = &m / &f;
                pending.push(f);
                pending.push(g);
            }
            None => {
                pending.push(m.clone());
                let residual = pending.into_iter().fold(BigInt::one(), |a, b| a * b);
                return Err(FactorError::Unfactored { residual, partial: out });
            }
        }
    }
    Ok(out)
}

fn strip(n: &mut BigInt, p: &BigInt) -> u32 {
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        *n = q;
        e += 1;
    }
}

/// A nontrivial factor of composite `n`, or `None` within the iteration budget.
fn pollard_brent(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let mut spent = 0u64;
    for c in 1u32..=20 {
        let c = BigInt::from(c);
        let step = |x: &BigInt| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigInt::from(2), 1u64, BigInt::one());
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = (r - k).min(128);
                for _ in 0..m {
                    y = step(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
                spent += m;
            }
            r *= 2;
            if spent > budget {
                return None;
            }
        }
        if &g == n {
            loop {
                ys = step(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: u64) -> FactoredInt {
        factor_int(&BigInt::from(v), &BTreeSet::new()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(f(16), FactoredInt::from_parts(1, [(BigInt::from(2), 4)]));
        assert_eq!(f(21504).to_string(), "2^10 3 7");
        assert_eq!(f(80673600).to_string(), "2^6 3 5^2 7^5");
        assert_eq!(f(1), FactoredInt::one());
        assert_eq!(factor_int(&BigInt::zero(), &BTreeSet::new()).unwrap().to_string(), "0");
    }

    #[test]
    fn negative_values_keep_sign() {
        let g = factor_int(&BigInt::from(-12), &BTreeSet::new()).unwrap();
        assert_eq!(g.sign(), -1);
        assert_eq!(g.value(), BigInt::from(-12));
        assert_eq!(g.to_string(), "-2^2 3");
    }

    #[test]
    fn hints_are_used_and_composite_hints_ignored() {
        let hints: BTreeSet<BigInt> = [BigInt::from(11), BigInt::from(15)].into();
        let v = BigInt::from(11u32).pow(35) * BigInt::from(15);
        let g = factor_int(&v, &hints).unwrap();
        assert_eq!(g.to_string(), "3 5 11^35");
    }

    #[test]
    fn rho_splits_semiprimes_beyond_trial_bound() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(998_244_353u64);
        let g = factor_int(&(&p * &q), &BTreeSet::new()).unwrap();
        assert_eq!(g.primes(), [p, q].into());
    }

    #[test]
    fn budget_exhaustion_reports_residual() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(998_244_353u64);
        let config = FactorConfig { trial_bound: 10, rho_iterations: 1 };
        match factor_int_with(&(&p * &q), &BTreeSet::new(), config) {
            Err(FactorError::Unfactored { residual, .. }) => assert_eq!(residual, p * q),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigInt::from(998_244_353u64)));
        assert!(!is_probable_prime(&BigInt::from(561u32)));
        assert!(!is_probable_prime(&BigInt::from(1u32)));
        assert!(is_probable_prime(&BigInt::from(2u32)));
    }

    #[test]
    fn json_form_orders_primes_numerically() {
        let g = f(2u64.pow(3) * 11 * 13);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"sign":1,"factors":{"2":3,"11":1,"13":1}}"#);
    }

    #[test]
    fn support_of_machine_integers() {
        assert_eq!(small_prime_support(143), [11, 13].into());
        assert_eq!(small_prime_support(1), BTreeSet::new());
        assert_eq!(small_prime_support(64), [2].into());
    }
}
