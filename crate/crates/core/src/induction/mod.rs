//! Compact induction of the degree-r forms from GL_2(Z_p) times the
//! centre to GL_2(Q_p): canonical coset representatives, finitely
//! supported elements, the Hecke operator T, and the integral
//! divisibility facts behind the description of its image.

pub mod coset;
pub mod element;
pub mod theta;

pub use coset::{canonicalize, frac_p, kz_split, p_power, qrat_int, val_p, CosetRep, MatQ, QRat};
pub use element::{
    basis_element, g_act, hecke_image_lands_in, hecke_t, hecke_t_minus, hecke_t_plus,
    image_in_w_check, reduce_induced_mod_p, InducedElement,
};
pub use theta::{theta_substitution_check, IntForm};
