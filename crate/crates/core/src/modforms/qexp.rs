//! Integer q-expansions to a fixed precision.
//!
//! A `QExpansion` holds exact integer coefficients a_0..a_N. All series
//! arithmetic truncates at the stated precision; nothing ever rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cache::QExpansionCache;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    weight: u64,
    precision: usize,
    coeffs: Vec<BigInt>,
}

impl QExpansion {
    pub fn new(weight: u64, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        QExpansion {
            weight,
            precision: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_cusp_form_shape(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn mul(&self, other: &QExpansion) -> QExpansion {
        let n = self.precision.min(other.precision);
        QExpansion {
            weight: self.weight + other.weight,
            precision: n,
            coeffs: series_mul(&self.coeffs, &other.coeffs, n),
        }
    }

    pub fn sub(&self, other: &QExpansion) -> QExpansion {
        assert_eq!(self.weight, other.weight, "weights differ");
        let n = self.precision.min(other.precision);
        QExpansion {
            weight: self.weight,
            precision: n,
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> QExpansion {
        QExpansion {
            weight: self.weight,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> QExpansion {
        let mut out = QExpansion {
            weight: 0,
            precision: self.precision,
            coeffs: one_series(self.precision),
        };
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }
}

fn one_series(n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n + 1];
    v[0] = BigInt::one();
    v
}

pub(crate) fn series_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// sum over n >= 1 of sigma_e(n) q^n to the given precision.
fn sigma_series(e: u32, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for d in 1..=n {
        let de = BigInt::from(d).pow(e);
        let mut m = d;
        while m <= n {
            out[m] += &de;
            m += d;
        }
    }
    out
}

fn compute_e4(n: usize) -> Vec<BigInt> {
    let mut c = sigma_series(3, n);
    for x in c.iter_mut() {
        *x *= 240;
    }
    c[0] = BigInt::one();
    c
}

fn compute_e6(n: usize) -> Vec<BigInt> {
    let mut c = sigma_series(5, n);
    for x in c.iter_mut() {
        *x *= -504;
    }
    c[0] = BigInt::one();
    c
}

/// The discriminant form: q times the 24th power of the eta product,
/// computed as the 8th power of the cube identity
/// prod (1 - q^n)^3 = sum (-1)^j (2j+1) q^{j(j+1)/2}.
fn compute_delta(n: usize) -> Vec<BigInt> {
    let mut cube = vec![BigInt::zero(); n + 1];
    let mut j = 0usize;
    loop {
        let idx = j * (j + 1) / 2;
        if idx > n {
            break;
        }
        let term = BigInt::from(2 * j as i64 + 1);
        cube[idx] = if j.is_multiple_of(2) { term } else { -term };
        j += 1;
    }
    let sq = series_mul(&cube, &cube, n);
    let quad = series_mul(&sq, &sq, n);
    let oct = series_mul(&quad, &quad, n);
    // multiply by q, truncating
    let mut out = vec![BigInt::zero(); n + 1];
    out[1..=n].clone_from_slice(&oct[..n]);
    out
}

fn cached(
    cache: Option<&QExpansionCache>,
    name: &str,
    weight: u64,
    precision: usize,
    compute: impl FnOnce() -> Vec<BigInt>,
) -> Result<Vec<BigInt>> {
    match cache {
        Some(c) => c.get_or_compute(name, weight, precision, compute),
        None => Ok(compute()),
    }
}

pub fn eisenstein_e4(precision: usize, cache: Option<&QExpansionCache>) -> Result<QExpansion> {
    Ok(QExpansion::new(
        4,
        cached(cache, "e4", 4, precision, || compute_e4(precision))?,
    ))
}

pub fn eisenstein_e6(precision: usize, cache: Option<&QExpansionCache>) -> Result<QExpansion> {
    Ok(QExpansion::new(
        6,
        cached(cache, "e6", 6, precision, || compute_e6(precision))?,
    ))
}

pub fn delta(precision: usize, cache: Option<&QExpansionCache>) -> Result<QExpansion> {
    Ok(QExpansion::new(
        12,
        cached(cache, "delta", 12, precision, || compute_delta(precision))?,
    ))
}

/// p-adic valuation of an integer; `None` for zero.
pub fn int_val_p(x: &BigInt, p: u64) -> Option<u64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut n = x.abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    Some(v)
}
