//! Polynomial identities among Chebyshev polynomials and the transform,
//! each checked by exact equality at a single `n`.

use num_traits::{One, Zero};

use crate::bivar::lift;
use crate::chebyshev::{t, u};
use crate::muttjeff::{self, jeff_shift};
use crate::scalar::{rat, ratio};
use crate::{BivarPoly, RatPoly};

fn x() -> RatPoly {
    RatPoly::x()
}

fn x2_minus_1() -> RatPoly {
    RatPoly::from_ints(&[-1, 0, 1])
}

/// `T_n' = n U_{n-1}`, `n >= 1`.
pub fn t_derivative(n: usize) -> bool {
    t(n).derivative() == u(n - 1).scale(&rat(n as i64))
}

/// `(x^2 - 1) U_n' = (n+1) T_{n+1} - x U_n`.
pub fn u_derivative(n: usize) -> bool {
    &x2_minus_1() * &u(n).derivative() == &t(n + 1).scale(&rat(n as i64 + 1)) - &(&x() * &u(n))
}

/// `T_n = (U_n - U_{n-2}) / 2`, `n >= 2`.
pub fn t_from_u_difference(n: usize) -> bool {
    t(n) == (&u(n) - &u(n - 2)).scale(&ratio(1, 2))
}

/// `T_n = U_n - x U_{n-1}`, `n >= 1`.
pub fn t_from_u_product(n: usize) -> bool {
    t(n) == &u(n) - &(&x() * &u(n - 1))
}

/// `T_n = x T_{n-1} - (1 - x^2) U_{n-2}`, `n >= 2`.
pub fn t_from_mixed_terms(n: usize) -> bool {
    t(n) == &(&x() * &t(n - 1)) + &(&x2_minus_1() * &u(n - 2))
}

/// `(z^2 - 1) U''_{2n-1} = -3z U'_{2n-1} + (4n^2 - 1) U_{2n-1}`, `n >= 1`.
pub fn u_second_order(n: usize) -> bool {
    let p = u(2 * n - 1);
    let d1 = p.derivative();
    let lhs = &x2_minus_1() * &d1.derivative();
    let rhs = &(&x().scale(&rat(-3)) * &d1) + &p.scale(&rat(4 * (n * n) as i64 - 1));
    lhs == rhs
}

/// `R(x) = 2(2n-1)(2n+1) int_0^x t U_{2n-1}(t) dt`.
pub fn r_integral(n: usize) -> bool {
    let n_i = n as i64;
    let rhs = (&x() * &u(2 * n - 1)).integrate().scale(&rat(2 * (2 * n_i - 1) * (2 * n_i + 1)));
    muttjeff::poly_r(n).is_ok_and(|r| r == rhs)
}

/// `R(z) = 4n z U_{2n}(z) - (2 z^2 (2n+1) - 2) U_{2n-1}(z)`.
pub fn r_u_combination(n: usize) -> bool {
    let n_i = n as i64;
    let first = &x().scale(&rat(4 * n_i)) * &u(2 * n);
    let factor = RatPoly::new(vec![rat(-2), rat(0), rat(2 * (2 * n_i + 1))]);
    let rhs = &first - &(&factor * &u(2 * n - 1));
    muttjeff::poly_r(n).is_ok_and(|r| r == rhs)
}

/// The closed form and direct integration of the transform coincide.
pub fn transform_routes(n: usize) -> bool {
    muttjeff::transform_su_closed(n) == muttjeff::transform_su_integral(n)
}

/// `d/dz (S U_{2n-1})(z) = U'_{2n-1}(z) (x - z^2)`.
pub fn transform_derivative(n: usize) -> bool {
    let x_minus_z2 = BivarPoly::new(vec![RatPoly::x(), RatPoly::zero(), -RatPoly::one()]);
    muttjeff::transform_su_closed(n).derivative() == &lift(&u(2 * n - 1).derivative()) * &x_minus_z2
}

/// Shifting `J` back by `2/((2n+1)(2n-1))` gives a multiple of `U'_{2n-1}(sqrt x)`.
pub fn jeff_shift_proportional(n: usize) -> bool {
    let (Ok(j), Ok(up)) = (muttjeff::jeff(n), muttjeff::uprime_sqrt(n)) else {
        return false;
    };
    let back = j.shift(&-jeff_shift(n));
    if back.degree() != up.degree() {
        return false;
    }
    let c = up.leading() / back.leading();
    back.scale(&c) == up
}

/// `|M(0)| = 4 (2n-1)(2n+1) n / 3` for the unnormalized Mutt polynomial.
pub fn mutt_constant_term(n: usize) -> bool {
    let n_i = n as i64;
    let expected = ratio(4 * (2 * n_i - 1) * (2 * n_i + 1) * n_i, 3);
    muttjeff::mutt(n).is_ok_and(|(raw, _)| {
        let c = raw.coeff(0);
        c == expected || c == -expected.clone()
    })
}

/// `J` and the unnormalized `M` are squarefree, `n >= 2`.
pub fn squarefree(n: usize) -> bool {
    match (muttjeff::jeff(n), muttjeff::mutt(n)) {
        (Ok(j), Ok((m, _))) => j.is_squarefree() && m.is_squarefree(),
        _ => false,
    }
}

/// Every Chebyshev identity that applies at `n`, with its name.
pub fn chebyshev_suite(n: usize) -> Vec<(&'static str, bool)> {
    let mut out = Vec::new();
    if n >= 1 {
        out.push(("t_derivative", t_derivative(n)));
        out.push(("t_from_u_product", t_from_u_product(n)));
        out.push(("u_second_order", u_second_order(n)));
    }
    out.push(("u_derivative", u_derivative(n)));
    if n >= 2 {
        out.push(("t_from_u_difference", t_from_u_difference(n)));
        out.push(("t_from_mixed_terms", t_from_mixed_terms(n)));
    }
    out
}

/// Identities of the transform and the Mutt/Jeff constructions at `n >= 1`.
pub fn transform_suite(n: usize) -> Vec<(&'static str, bool)> {
    let mut out = vec![
        ("transform_routes", transform_routes(n)),
        ("transform_derivative", transform_derivative(n)),
        ("r_integral", r_integral(n)),
        ("r_u_combination", r_u_combination(n)),
        ("mutt_constant_term", mutt_constant_term(n)),
    ];
    if n >= 2 {
        out.push(("jeff_shift", jeff_shift_proportional(n)));
        out.push(("squarefree", squarefree(n)));
    }
    out
}
