//! Pattern avoidance in permutation powers.
//!
//! The crate is organised around a handful of layers:
//!
//! - [`perm`]: permutations in one-line notation, group operations, plot
//!   symmetries, (skew) sums, cycle structure and classical pattern containment.
//! - [`tableaux`]: standard Young tableaux, the RSK correspondence, evacuation,
//!   hook-length / Barnes G counting and the self-evacuating rectangle formula.
//! - [`enumerate`]: pruned enumeration of plain, strong and powerful avoiders,
//!   optionally restricted by group order. This is the oracle layer every closed
//!   form in the crate is checked against.
//! - [`constructions`]: explicit witness permutations, each with a verifier.
//! - [`series`]: exact rational generating functions and the closed-form
//!   counting formulas, plus verification campaigns binding them to oracles.
//! - [`suite`]: property suites (RSK, evacuation, symmetry, bounds) used by the CLI.

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod perm;
pub mod series;
pub mod suite;
pub mod tableaux;

pub use enumerate::{AvoidanceQuery, EnumerationConfig, EnumerationResult, Mode};
pub use error::{Error, Result};
pub use perm::{CycleDecomposition, Permutation};
pub use series::{IntPolynomial, RationalGF};
pub use tableaux::{Partition, StandardTableau};
