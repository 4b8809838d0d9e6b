//! Root systems, Weyl group words, Levi data and integral subsystems.

mod levi;
mod subsystem;
mod system;

pub use levi::{parabolic_from_character, LeviDatum};
pub use subsystem::{integral_subsystem, CartanType, IntegralSubsystem, Letter};
pub use system::{build_root_system, coroot_pairing, parse_system, RootSystem, Series, WeylWord};
