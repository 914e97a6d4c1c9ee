//! Hecke operators on level-1 cusp forms in the echelon basis, with exact
//! integer matrices and characteristic polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::basis::{dim_cusp_forms, victor_miller_basis};
use super::cache::QExpansionCache;
use crate::error::{Error, Result};

/// The matrix of T_p on S_k in the echelon basis; the (i, j) entry is the
/// q^{i+1} coefficient of T_p applied to the j-th basis form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeMatrix {
    p: u64,
    k: u64,
    dim: usize,
    entries: Vec<Vec<BigInt>>,
}

impl HeckeMatrix {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn mul(&self, other: &HeckeMatrix) -> Vec<Vec<BigInt>> {
        let d = self.dim;
        assert_eq!(d, other.dim);
        let mut out = vec![vec![BigInt::zero(); d]; d];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut s = BigInt::zero();
                for (l, lv) in other.entries.iter().enumerate() {
                    s += &self.entries[i][l] * &lv[j];
                }
                *slot = s;
            }
        }
        out
    }

    /// Characteristic polynomial det(X I - M), coefficients ascending.
    /// Exact integer arithmetic; the intermediate trace divisions are
    /// exact by construction.
    pub fn charpoly(&self) -> Vec<BigInt> {
        let d = self.dim;
        if d == 0 {
            return vec![BigInt::one()];
        }
        // Faddeev-LeVerrier
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = self.entries.clone();
        for step in 1..=d {
            let tr: BigInt = (0..d).map(|i| m[i][i].clone()).sum();
            debug_assert!((&tr % BigInt::from(step as u64)).is_zero());
            let c = -tr / BigInt::from(step as u64);
            coeffs[d - step] = c.clone();
            if step == d {
                break;
            }
            // m = self * (m + c I)
            let mut shifted = m;
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += &c;
            }
            let mut next = vec![vec![BigInt::zero(); d]; d];
            for (i, row) in next.iter_mut().enumerate() {
                for (j, slot) in row.iter_mut().enumerate() {
                    let mut s = BigInt::zero();
                    for (l, lv) in shifted.iter().enumerate() {
                        s += &self.entries[i][l] * &lv[j];
                    }
                    *slot = s;
                }
            }
            m = next;
        }
        coeffs
    }
}

/// Compute T_p on S_k from coefficients: a_n(T_p f) = a_{np}(f) +
/// p^{k-1} a_{n/p}(f). Needs precision at least p * dim S_k and refuses
/// anything less.
pub fn hecke_matrix(
    p: u64,
    k: u64,
    precision: usize,
    cache: Option<&QExpansionCache>,
) -> Result<HeckeMatrix> {
    let d = dim_cusp_forms(k);
    let needed = p as usize * d;
    if precision < needed {
        return Err(Error::InsufficientPrecision {
            needed,
            have: precision,
        });
    }
    let basis = victor_miller_basis(k, precision, cache)?;
    let pk = BigInt::from(p).pow(k as u32 - 1);
    let mut entries = vec![vec![BigInt::zero(); d]; d];
    for (j, f) in basis.iter().enumerate() {
        for i in 1..=d {
            let mut v = f.coeff(i * p as usize).clone();
            if i % p as usize == 0 {
                v += &pk * f.coeff(i / p as usize);
            }
            entries[i - 1][j] = v;
        }
    }
    Ok(HeckeMatrix { p, k, dim: d, entries })
}
