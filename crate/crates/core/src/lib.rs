//! Exact-arithmetic tools for the mod-p representation theory of
//! GL_2(Q_p) and its Galois side.
//!
//! The crate has four layers:
//!
//! * [`fp_linear`] — linear algebra for homogeneous forms over F_{p^f}
//!   and Z/p^m with the GL_2 action: spinning submodules, quotients, and
//!   identification of irreducible constituents.
//! * [`induction`] — finitely supported elements of the compact induction
//!   of the degree-r forms from GL_2(Z_p) times the centre, the Hecke
//!   operator T = T^+ + T^-, and the integral divisibility checks behind
//!   its image description.
//! * [`langlands`] — symbolic labels for smooth GL_2(Q_p) representations
//!   and 2-dimensional mod-p Galois data, the dictionary between them, a
//!   closed-form predictor for reductions of crystalline representations
//!   with slope in (0, 1), and a pipeline that recomputes the prediction
//!   from finite module computations.
//! * [`modforms`] — level-1 modular forms over the integers: Victor
//!   Miller bases, Hecke matrices, Newton polygons, and ordinarity
//!   sweeps.
//!
//! Everything is exact: finite fields, Z/p^m, arbitrary-precision
//! integers and rationals. There is no floating point anywhere.

pub mod error;
pub mod fp_linear;
pub mod induction;
pub mod langlands;
pub mod modforms;
pub mod verify;

pub use error::{Error, Result};
