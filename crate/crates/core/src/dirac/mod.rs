//! Dirac cohomology: the regular-integral necessary condition, the spin
//! multiplicity, evaluation from multiplicity-free K-type families, the
//! induced-module shortcuts and Kostant's subset scan.

mod family;
mod hd;
mod induced;
mod kostant;
mod parameter;

pub use family::KTypeFamily;
pub use hd::{
    dirac_norms, literal_spin_count, necessary_condition, spin_factor, HDResult, HdStatus, NecessaryCondition,
};
pub use induced::{half_rho_characters, hd_unitarily_induced_witness, HalfRhoInduced, InducedWitness};
pub use kostant::KostantReport;
pub use parameter::{hermitian_involution_check, GKParameter, InvolutionForm};
