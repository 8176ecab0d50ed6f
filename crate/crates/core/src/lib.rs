//! Exact computer algebra for the discriminants of an integral transform of
//! Chebyshev polynomials.
//!
//! The transform `(S U_{2n-1})(z) = 1/2 * int_{-z}^{z} U'_{2n-1}(t) (x - t^2) dt`
//! has a discriminant in `z` that factors as `x^3 M(x)^2 J(x)^2` up to a
//! rational constant. This crate builds `M` (the "Mutt" polynomial) and `J`
//! (the "Jeff" polynomial), computes discriminants and resultants exactly,
//! factors them, and certifies root locations with Sturm sequences.
//!
//! Polynomial arithmetic is generic over the coefficient ring ([`Ring`],
//! [`ExactDiv`]); the concrete aliases below fix the types used by the
//! constructions.
//!
//! ```
//! use muttjeff::{muttjeff::mutt, discriminant::disc, RatPoly};
//!
//! let (_, m) = mutt(6).unwrap();
//! assert_eq!(m, RatPoly::from_ints(&[-143, 2002, -9152, 18304, -16640, 5632]));
//! assert!(disc(&m).unwrap() > num_rational::BigRational::from_integer(0.into()));
//! ```

pub mod bivar;
pub mod chebyshev;
pub mod discriminant;
pub mod factor;
pub mod identities;
pub mod muttjeff;
pub mod poly;
pub mod rootiso;
pub mod scalar;
pub mod serialize;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use crate::chebyshev::ChebKind;
pub use crate::discriminant::{ClosedFormKind, Recurrence};
pub use crate::factor::FactoredInt;
pub use crate::muttjeff::{DecompositionResult, MuttJeffSet};
pub use crate::poly::{Parity, Poly};
pub use crate::rootiso::{PairingReport, RootInterval};
pub use crate::scalar::{ExactDiv, Ring};

/// Exact rational scalar.
pub type BigRat = BigRational;
/// Dense polynomial with exact rational coefficients.
pub type RatPoly = Poly<BigRational>;
/// Polynomial in `z` whose coefficients are polynomials in `x`.
pub type BivarPoly = Poly<RatPoly>;
/// Dense polynomial with integer coefficients.
pub type IntPoly = Poly<BigInt>;
/// Floating-point polynomial, for quick approximate evaluation.
pub type F64Poly = Poly<f64>;
