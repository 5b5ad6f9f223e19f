//! Exact q-analog arithmetic for the q-super Catalan family.
//!
//! The crate provides exact Laurent polynomial arithmetic ([`poly`],
//! [`rational`]), constructors for q-binomials, q-Pochhammer symbols and the
//! q-super Catalan numbers ([`qkernel`]), an identity registry with sweep
//! drivers ([`identities`]), truncated generating functions ([`series`]),
//! type B noncrossing partitions and 2-paths ([`noncrossing`]) and
//! positivity checks ([`positivity`]).

pub mod classical;
pub mod error;
pub mod identities;
pub mod noncrossing;
pub mod poly;
pub mod positivity;
pub mod qkernel;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
pub use identities::{sweep, verify, IdentityId, Side, Status, SweepResult, VerificationReport};
pub use noncrossing::{SignedBlockPartition, TwoPath};
pub use poly::{HalfInteger, LaurentPoly};
pub use rational::{rat_equal, Fraction, RationalForm};
pub use series::TruncatedSeries;
