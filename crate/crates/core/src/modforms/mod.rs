//! Level-1 modular forms over the integers: q-expansions, the echelon
//! basis of cusp forms, Hecke matrices, Newton polygons, and the finite
//! ordinarity checks.

pub mod basis;
pub mod cache;
pub mod hecke;
pub mod newton;
pub mod qexp;
pub mod sweep;

pub use basis::{dim_cusp_forms, victor_miller_basis};
pub use cache::QExpansionCache;
pub use hecke::{hecke_matrix, HeckeMatrix};
pub use newton::{newton_slopes, NewtonPolygon, SlopeValue};
pub use qexp::{delta, eisenstein_e4, eisenstein_e6, int_val_p, QExpansion};
pub use sweep::{ordinarity_sweep, slope_spectrum, OrdinaritySweep, SweepRow};
