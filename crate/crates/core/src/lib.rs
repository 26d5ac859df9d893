//! Exact computer-algebra toolkit for the Hilbert scheme of degree-4, genus-1
//! space curves (`Hilb^{4n}(P^3)`).
//!
//! Everything is computed over the rationals with no rounding: Gröbner bases,
//! Hilbert functions and polynomials, Castelnuovo–Mumford regularity through
//! generic initial ideals, Borel-fixed ideal enumeration, the regularity
//! strata of the Hilbert scheme, flat limits of one-parameter families and
//! Hilbert-scheme tangent spaces.
//!
//! The default ring is `k[x,y,z,t]` with `x > y > z > t`.

pub mod borel;
pub mod change;
pub mod degeneration;
pub mod error;
pub mod gin;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod scalar;
pub mod strata;
pub mod syzygy;
pub mod tangent;

pub use change::LinearChange;
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use scalar::Scalar;

/// Number of variables of the ambient ring `k[x,y,z,t]`.
pub const NVARS: usize = 4;
