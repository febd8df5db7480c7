//! Exact arithmetic for ultrametric approximation theory over the p-adics.
//!
//! The crate is organised bottom-up:
//!
//! - [`padic`]: primes, precision-tracked elements of `Q_p`, absolute values
//!   `p^{-q}` with rational exponents and the scalar scalings that move a
//!   vector into the unit ball or the annulus `p^{-1} < |x| <= 1`.
//! - [`poly`]: exact polynomials over `Q` read p-adically, Newton polygons and
//!   the Eisenstein criterion.
//! - [`cyclo`]: cyclotomic minimal polynomials of `p^n`-th roots of unity,
//!   their metric data in `C_p` and Krasner-style separation bounds.
//! - [`lethargy`]: sequence regularisation against a jump function, the
//!   jump-compatibility check and the dichotomy recurrence and rate bound.
//! - [`schemes`]: concrete approximation schemes (coordinate subspaces of the
//!   null-sequence space, algebraic elements of bounded degree in `C_p`).
//! - [`cli`]: the `ulab` command line front end.
//!
//! Everything is exact: rationals are arbitrary precision and no floating
//! point value is ever used to decide a comparison.

pub mod cli;
pub mod cyclo;
mod error;
pub mod exact;
pub mod lethargy;
pub mod padic;
pub mod poly;
pub mod schemes;

pub use error::{Error, Result};
pub use padic::{AbsValue, PadicNumber, Prime, Radius, Valuation};
pub use poly::{NewtonPolygon, PadicPoly};
