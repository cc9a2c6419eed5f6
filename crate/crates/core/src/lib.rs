//! Exact computations in generalized character theory for small finite groups.
//!
//! The crate is organised by subsystem:
//!
//! * [`group`]: permutation groups, conjugacy classes, centralizers, and the
//!   group expression language.
//! * [`commuting`]: commuting tuples of `p`-power-order elements, their
//!   conjugacy classes, the `GL_n` action, and rank numerology.
//! * [`fgl`]: truncated power series and formal group laws.
//! * [`levelrings`]: the height-one coefficient-ring tower realized as
//!   quotients of `Q[x]` and `Z[x]`.
//! * [`charmap`]: character tables and the height-one character map with its
//!   power operations.
//! * [`inertia`]: finite `G`-sets and their `n`-fold inertia (`Fix_n`).

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod charmap;
pub mod commuting;
pub mod cyclotomic;
mod error;
pub mod fgl;
pub mod group;
pub mod inertia;
pub mod levelrings;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod selftest;

pub use error::{HkrError, Result};
pub use group::{named_group, ConjugacyClass, FiniteGroup, Permutation};
