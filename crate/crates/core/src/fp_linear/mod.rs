//! Exact linear algebra for spaces of homogeneous two-variable forms over
//! finite coefficient rings, with the GL_2 substitution action: spinning
//! submodules, stable quotients, and identification of irreducibles.

pub mod ring;
pub mod submodule;
pub mod symm;

pub use ring::{
    is_prime, mat_det, mat_from_ints, mat_identity, mat_mul, odd_primes_upto, smallest_generator,
    CoeffField, CoeffRing, FieldContext, FqElem, Mat2, ZModPrimePower,
};
pub use submodule::{
    identify_irreducible, is_stable, quotient, spin, standard_generators, submodule_w,
    submodule_y, Echelon, IrredLabel, KSubmodule, MatrixRep,
};
pub use symm::{
    act_gl2, reduce_mod_p, substitute, theta_bar, theta_bar_multiply,
    theta_quotient_times_power, SymmElement,
};
