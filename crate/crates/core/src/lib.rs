//! Kobayashi distances on model complex domains, constructions of uniformly
//! discrete sequences, and numerical diagnostics for weighted boundary series.
//!
//! The crate is organized in four layers:
//!
//! * [`geometry`]: points, model domains (unit disc, right half-plane, unit
//!   ball, polydisc, Moebius-transported one-dimensional domains), their
//!   Kobayashi distances and Euclidean boundary distances.
//! * [`sequences`]: the horocycle sequences in the half-plane and the disc,
//!   a root-finding oracle on horocycles, and a deterministic greedy packer
//!   inside `D_c = {z : dist(z, boundary) >= c}`.
//! * [`analysis`]: separation constants, decomposition into uniformly discrete
//!   classes, and the weighted boundary series with convergence heuristics.
//! * [`io`]: the JSON sequence format, the CSV report format and the CLI.

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod io;
pub mod sequences;

pub use error::{Error, Result};
pub use geometry::{cayley, horocycle_of, BaseDomain, Domain, Horocycle, MoebiusMap, Point};
pub use sequences::{Method, PackerConfig, PointSequence, SequenceMeta, Walk};
