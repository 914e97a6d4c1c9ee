//! Dimensions of level-1 cusp form spaces and the integral echelon basis.

use num_traits::{One, Zero};

use super::cache::QExpansionCache;
use super::qexp::{delta, eisenstein_e4, eisenstein_e6, QExpansion};
use crate::error::{Error, Result};

/// dim S_k for the full modular group; zero for odd or small weights.
pub fn dim_cusp_forms(k: u64) -> usize {
    if k % 2 == 1 || k < 12 {
        return 0;
    }
    let m = (k / 12) as usize + usize::from(k % 12 != 2);
    m - 1
}

/// The basis f_1, ..., f_d of S_k with a_i(f_j) = delta_{ij} for
/// 1 <= i, j <= d, as integer q-expansions to the requested precision.
///
/// Built from the monomials Delta^j E4^a E6^b, which are triangular with
/// leading coefficient 1 at q^j, and reduced by integer row operations;
/// integrality is preserved throughout.
pub fn victor_miller_basis(
    k: u64,
    precision: usize,
    cache: Option<&QExpansionCache>,
) -> Result<Vec<QExpansion>> {
    let d = dim_cusp_forms(k);
    if d == 0 {
        return Ok(Vec::new());
    }
    if precision < d {
        return Err(Error::InsufficientPrecision {
            needed: d,
            have: precision,
        });
    }
    let e4 = eisenstein_e4(precision, cache)?;
    let e6 = eisenstein_e6(precision, cache)?;
    let dl = delta(precision, cache)?;
    let mut rows: Vec<QExpansion> = Vec::with_capacity(d);
    let mut delta_pow = dl.clone();
    for j in 1..=d as u64 {
        let rem = k - 12 * j;
        let b = if rem.is_multiple_of(4) { 0u64 } else { 1 };
        let a = (rem - 6 * b) / 4;
        let mut f = delta_pow.clone();
        if a > 0 {
            f = f.mul(&e4.pow(a));
        }
        if b > 0 {
            f = f.mul(&e6.pow(b));
        }
        debug_assert_eq!(f.weight(), k);
        rows.push(f);
        if (j as usize) < d {
            delta_pow = delta_pow.mul(&dl);
        }
    }
    // integer echelonization: row j has pivot 1 at q^j
    for j in 0..d {
        if !rows[j].coeff(j + 1).is_one() {
            return Err(Error::DomainError(format!(
                "expected unit pivot at q^{} in weight {k}",
                j + 1
            )));
        }
        for i in 0..d {
            if i == j {
                continue;
            }
            let c = rows[i].coeff(j + 1).clone();
            if !c.is_zero() {
                rows[i] = rows[i].sub(&rows[j].scale(&c));
            }
        }
    }
    Ok(rows)
}
