//! Labels for both sides of the mod-p correspondence for GL_2(Q_p), the
//! dictionary between them, and reduction predictions for 2-dimensional
//! crystalline representations, both in closed form and recomputed from
//! finite module computations.

pub mod dictionary;
pub mod labels;
pub mod predict;

pub use dictionary::{eliminate, ll_inverse, ll_map, GaloisKind, GaloisRepLabel};
pub use labels::{
    bracket, jh_compatible, jh_factors, normalize_smooth, CharLabel, FactorLabel, SmoothRepLabel,
};
pub use predict::{
    derive_reduction, derive_reduction_detailed, predict_reduction,
    predicted_candidates_fractional_slope, Branch, CrystallineParams, DeriveOutcome, Outcome,
    PredictionResult, Slope,
};
