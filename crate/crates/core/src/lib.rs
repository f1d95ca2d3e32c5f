//! Exact intersection theory for strata of abelian differentials.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_ring`] holds exact rationals and a sparse, truncated graded
//!   polynomial algebra in the Hodge classes `λ_i` and the cotangent classes
//!   `ω_j`.
//! * [`porteous`] builds Chern polynomials of the relevant bundles and
//!   evaluates the Porteous determinant, giving classes of pointed
//!   Brill–Noether loci and of strata `PH(μ)`.
//! * [`divisors`] works in the rational Picard group of the projectivized
//!   Hodge bundle, where the locus of differentials with a double zero lives.
//! * [`teich`] pairs divisors on `M̄_{g,n}` with Teichmüller curves and
//!   assembles extremality certificates for pointed Brill–Noether divisors.
//!
//! Everything is exact; there is no floating point anywhere in the library.

pub mod divisors;
pub mod error;
pub mod exact_ring;
pub mod porteous;
pub mod teich;

pub use divisors::{HodgeDivisorClass, TestCurveNumbers};
pub use error::{Error, Result};
pub use exact_ring::{Generator, GeneratorSet, GradedPoly, Monomial, Rational};
pub use porteous::{BnQuery, Partition};
pub use teich::{
    BnDivisorSpec, CurveRatios, ExtremalityReport, LyapunovKind, LyapunovRow, LyapunovTable,
    MgnDivisor, TeichCurve, Verdict,
};
