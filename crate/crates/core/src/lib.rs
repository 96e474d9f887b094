//! Point-set topology of Balmer spectra, made computable.
//!
//! Finite spectral spaces are finite posets ([`order`]). Infinite examples
//! such as `Spec(Z)` and its Hochster dual are built symbolically
//! ([`space`], [`subset`]). [`topology`] decides openness, Thomason subsets,
//! constructibility, weak visibility and the Noetherian-type conditions, and
//! [`tt`] reads radical ideals off Thomason supports to decide finite
//! generation. [`verify`] re-checks the main equivalences against
//! brute-force oracles.

pub mod catalog;
pub mod dot;
pub mod error;
pub mod format;
pub mod order;
pub mod space;
pub mod subset;
pub mod topology;
pub mod tt;
pub mod verify;

pub use error::{Error, Result};
pub use order::{FinitePoset, FiniteSubset};
pub use space::{ClassKind, Leaf, Point, PointClass, PointKind, SpaceExpr};
pub use subset::{AntichainSubset, ClosedMode, SymbolicSubset};
pub use topology::SpaceProps;
pub use tt::{CohenReport, PrimeIdeal, RadicalIdeal, RadicalIdealCount};
