//! The representations whose Dirac cohomology is known in closed form,
//! and the `F4` table at infinitesimal character `rho/2`.

mod closed;
mod f4;
mod spec;

pub use closed::{closed_form_hd, ClosedFormHD, CrosscheckReport};
pub use f4::{f4_lambda_l, f4_rows, F4Row, F4RowReport, Inducing};
pub use spec::{
    gl_maxpar_family, make_spec, standard_catalog, Exceptional, Flavor, Parity, UnipotentSpec, Unitarity, MAXPAR_GRID,
};
