//! Exact arithmetic for quantum-group link invariants and their reformulation.
//!
//! The crate computes HOMFLY-type invariants of braid closures by skein
//! recursion, repackages colored invariant tables through the class basis and
//! the plethystic logarithm into the reformulated invariants `f`, extracts the
//! integer invariants `N_{(R..),g,Q}` predicted by their conjectured
//! structure, and verifies the structure theorems satisfied by the HOMFLY
//! polynomial of links as well as the genus expansion of the connected
//! invariants.
//!
//! All arithmetic is exact: coefficients are big rationals, polynomial values
//! live in the Laurent ring in `q^(1/2)` and `l^(1/2)` (`l` is the second
//! formal variable, kept independent of `q` throughout), and invariants are
//! reduced fractions of such polynomials.

pub mod io;
pub mod ring;
pub mod symmgroup;

pub use ring::{LaurentQL, Rat, RatFn, RingError, YSeries};
