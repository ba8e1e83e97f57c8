//! Exact chain combinatorics for the scattered representations of `SL(n, C)`.
//!
//! A Zhelobenko parameter `(λ, −sλ)` with half-integral regular `λ` is encoded
//! as a union of disjoint *chains*, arithmetic progressions with step −2 whose
//! entries are the coordinates of `2λ`. From that encoding this crate computes
//! the lowest and spin-lowest K-types, the Weyl group involution `s`, checks
//! u-smallness, enumerates every scattered parameter of a given rank and
//! cross-checks K-type multiplicities with a Littlewood–Richardson counter.
//!
//! All weights are stored in *doubled coordinates* (twice the standard
//! coordinates) so that every computation stays in exact integer arithmetic.

pub mod chain;
pub mod error;
pub mod lr;
pub mod scattered;
pub mod spin;
pub mod verify;
pub mod weight;
pub mod workers;

pub use chain::{Chain, ChainSet, Involution};
pub use error::{Error, Result};
pub use lr::Partition;
pub use scattered::ScatteredRecord;
pub use spin::{Rule, RuleApplication, SpinResult, TauLayout};
pub use weight::{FundamentalCoords, WeightVec};
