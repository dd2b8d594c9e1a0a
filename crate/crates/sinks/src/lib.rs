//! Acyclic orientations of multigraphs and the invariants that count them.
//!
//! The library is organized around a plain edge-listed [`graph::Multigraph`].
//! On top of it live the chromatic polynomial ([`chromatic`]), enumeration of
//! acyclic orientations and their sinks ([`orientations`]), the broken-circuit
//! complex ([`nbc`]), a stage-by-stage bijection from unique-sink orientations
//! to no-broken-circuit spanning trees ([`bijection`]), and a noncommutative
//! chromatic symmetric function in the m- and e-bases over set partitions
//! ([`partitions`], [`ncsf`]). [`corpus`] generates small test graphs and
//! [`verify`] cross-checks every identity the crate promises on them.

pub mod bijection;
pub mod chromatic;
pub mod cli;
pub mod corpus;
pub mod graph;
pub mod nbc;
pub mod ncsf;
pub mod orientations;
pub mod partitions;
pub mod verify;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
