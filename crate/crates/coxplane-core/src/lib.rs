//! Exact combinatorics and planar geometry of finite reflection groups.
//!
//! This crate builds finite irreducible Coxeter groups from their defining
//! graphs, realizes them as orthogonal matrix groups acting on an explicit
//! root system, and projects group orbits to the plane spanned by the
//! eigenvectors of a bipartite Coxeter element. On top of that projection it
//! implements two families of geometric tests:
//!
//! * noncrossing criteria for the partition diagrams of parabolic subgroups,
//!   checked against the exact interval `[1, c]` in absolute order, and
//! * compatibility criteria for almost positive roots drawn as labeled
//!   segment diagrams, checked against the exact rotation-recursion oracle.
//!
//! Everything here is `no_std + alloc`; all transcendental math goes through
//! [`math::fm`]. The companion `coxplane` crate adds file formats and a CLI.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clusters;
pub mod coxeter;
pub mod criteria;
pub mod diagrams;
pub mod geom;
pub mod math;
pub mod noncrossing;
pub mod plane;

mod error;

pub use error::CoxError;

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, CoxError>;
