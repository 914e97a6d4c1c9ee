//! Slope spectra and the finite ordinarity check: for every odd prime
//! p <= 53 and every even weight 12 <= k <= p+1 with cusp forms, the
//! eigenvalues of T_p are p-adic units. Together with the weight bound
//! this pins the level-1 slopes outside (0, 1) for those primes.

use super::basis::dim_cusp_forms;
use super::cache::QExpansionCache;
use super::hecke::hecke_matrix;
use super::newton::{newton_slopes, NewtonPolygon};
use crate::error::{Error, Result};
use crate::fp_linear::ring::odd_primes_upto;

/// Newton polygon of T_p on S_k, at the minimum safe precision.
pub fn slope_spectrum(
    p: u64,
    k: u64,
    cache: Option<&QExpansionCache>,
) -> Result<NewtonPolygon> {
    let d = dim_cusp_forms(k);
    if d == 0 {
        return Err(Error::DomainError(format!(
            "S_{k} has no cusp forms; no slopes to report"
        )));
    }
    let precision = p as usize * d;
    let m = hecke_matrix(p, k, precision, cache)?;
    newton_slopes(&m.charpoly(), p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub p: u64,
    pub k: u64,
    pub dim: usize,
    pub polygon: NewtonPolygon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaritySweep {
    pub p_max: u64,
    pub rows: Vec<SweepRow>,
    pub all_ordinary: bool,
}

/// Run the finite check for every odd prime p <= p_max and every even
/// weight 12 <= k <= p+1 with dim S_k > 0, in deterministic (p, k) order.
pub fn ordinarity_sweep(
    p_max: u64,
    cache: Option<&QExpansionCache>,
) -> Result<OrdinaritySweep> {
    let mut rows = Vec::new();
    let mut all_ordinary = true;
    for p in odd_primes_upto(p_max) {
        let mut k = 12;
        while k <= p + 1 {
            let dim = dim_cusp_forms(k);
            if dim > 0 {
                let polygon = slope_spectrum(p, k, cache)?;
                all_ordinary &= polygon.all_slopes_zero();
                rows.push(SweepRow { p, k, dim, polygon });
            }
            k += 2;
        }
    }
    Ok(OrdinaritySweep {
        p_max,
        rows,
        all_ordinary,
    })
}
