//! Dirac cohomology of unitary representations of complex reductive
//! groups, computed from Zhelobenko parameters and K-type data.
//!
//! The crate is layered: [`roots`] handles root systems and Weyl words,
//! [`repr`] computes characters of finite-dimensional modules, [`dirac`]
//! evaluates Dirac cohomology and its necessary conditions, and
//! [`catalog`] holds the unipotent families with closed-form answers.

pub mod catalog;
pub mod dirac;
mod engine;
mod error;
pub mod lattice;
mod linalg;
pub mod repr;
pub mod roots;
pub mod verify;
pub mod weight;

pub use engine::{Engine, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use roots::{build_root_system, LeviDatum, RootSystem, Series, WeylWord};
pub use weight::{Weight, Q};
