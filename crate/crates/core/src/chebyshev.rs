//! Chebyshev polynomials of the first and second kind.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::poly::Poly;
use crate::scalar::Ring;
use crate::RatPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebKind {
    FirstKind,
    SecondKind,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChebKind::FirstKind => "T",
            ChebKind::SecondKind => "U",
        })
    }
}

impl FromStr for ChebKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "t" => Ok(ChebKind::FirstKind),
            "U" | "u" => Ok(ChebKind::SecondKind),
            other => Err(format!("unknown Chebyshev kind {other:?}")),
        }
    }
}

/// Degree-`n` Chebyshev polynomial over any ring, by the three-term
/// recurrence `p_k = 2x p_{k-1} - p_{k-2}`.
pub fn chebyshev<T: Ring>(kind: ChebKind, n: usize) -> Poly<T> {
    let two_x = Poly::monomial(T::from_i64(2), 1);
    let mut prev = Poly::one();
    let mut cur = match kind {
        ChebKind::FirstKind => Poly::x(),
        ChebKind::SecondKind => two_x.clone(),
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Exact `T_n` or `U_n`.
pub fn cheb(kind: ChebKind, n: usize) -> RatPoly {
    chebyshev(kind, n)
}

pub fn t(n: usize) -> RatPoly {
    cheb(ChebKind::FirstKind, n)
}

pub fn u(n: usize) -> RatPoly {
    cheb(ChebKind::SecondKind, n)
}
