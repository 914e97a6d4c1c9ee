//! Integral divisibility checks for theta = x^p y - x y^p.
//!
//! Expanding theta(x, py - lambda x) and theta(px, y) over the integers,
//! every coefficient is divisible by p. This is the integral input to the
//! kernel bound for slopes below 1, so it is verified by honest symbolic
//! expansion rather than assumed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Homogeneous integer form; coefficient of x^{d-i} y^i at index i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntForm {
    coeffs: Vec<BigInt>,
}

impl IntForm {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// x^p y - x y^p.
    pub fn theta(p: u64) -> Self {
        let d = p as usize + 1;
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[1] = BigInt::one();
        coeffs[p as usize] = -BigInt::one();
        IntForm { coeffs }
    }

    /// The monomial x^{d-i} y^i.
    pub fn monomial(d: usize, i: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[i] = BigInt::one();
        IntForm { coeffs }
    }

    pub fn mul(&self, other: &IntForm) -> IntForm {
        let d = self.degree() + other.degree();
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntForm { coeffs }
    }

    /// F(x, py - lambda x), expanded exactly over the integers.
    pub fn subst_second_py_minus_lambda_x(&self, p: u64, lambda: u64) -> IntForm {
        let d = self.degree();
        let binom = pascal(d);
        let p = BigInt::from(p);
        let lam = BigInt::from(lambda);
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // x^{d-i} (py - lambda x)^i: term j gives binom(i,j) p^j (-lambda)^{i-j} x^{d-j} y^j
            for j in 0..=i {
                let mut t = c * &binom[i][j];
                t *= p.pow(j as u32);
                let mut neg = lam.pow((i - j) as u32);
                if (i - j) % 2 == 1 {
                    neg = -neg;
                }
                out[j] += t * neg;
            }
        }
        IntForm { coeffs: out }
    }

    /// F(px, y), expanded exactly over the integers.
    pub fn subst_first_px(&self, p: u64) -> IntForm {
        let d = self.degree();
        let p = BigInt::from(p);
        IntForm {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * p.pow((d - i) as u32))
                .collect(),
        }
    }

    pub fn divisible_by(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.coeffs.iter().all(|c| (c % &p).is_zero())
    }
}

fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Verify that theta(x, py - lambda x) and theta(px, y) lie in p Z[x, y]
/// for every lambda in {0, ..., p-1}, and likewise for theta times every
/// monomial multiplier up to ambient degree max_r. Returns false the
/// moment any coefficient fails.
pub fn theta_substitution_check(p: u64, max_r: usize) -> bool {
    let theta = IntForm::theta(p);
    let base_degree = p as usize + 1;
    let top = max_r.saturating_sub(base_degree);
    for extra in 0..=top {
        for i in 0..=extra {
            let g = if extra == 0 {
                theta.clone()
            } else {
                theta.mul(&IntForm::monomial(extra, i))
            };
            if !g.subst_first_px(p).divisible_by(p) {
                return false;
            }
            for lambda in 0..p {
                if !g.subst_second_py_minus_lambda_x(p, lambda).divisible_by(p) {
                    return false;
                }
            }
            if extra == 0 {
                break;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_shape() {
        let t = IntForm::theta(3);
        assert_eq!(t.degree(), 4);
        assert_eq!(t.coeffs()[1], BigInt::from(1)); // x^3 y
        assert_eq!(t.coeffs()[3], BigInt::from(-1)); // -x y^3
    }

    #[test]
    fn substitution_at_px_gains_p_everywhere() {
        // both monomials of theta pick up at least one factor p
        let t = IntForm::theta(5);
        assert!(t.subst_first_px(5).divisible_by(5));
    }

    #[test]
    fn divisibility_for_small_primes() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert!(theta_substitution_check(p, p as usize + 1), "p={p}");
        }
    }

    #[test]
    fn divisibility_with_monomial_multipliers() {
        assert!(theta_substitution_check(3, 12));
        assert!(theta_substitution_check(13, 20));
    }

    #[test]
    fn substitution_expansion_is_exact() {
        // (x^2)(x, 3y - x) = x^2 and (xy)(x, 3y - x) = 3xy - x^2
        let xy = IntForm::monomial(2, 1);
        let s = xy.subst_second_py_minus_lambda_x(3, 1);
        assert_eq!(s.coeffs()[0], BigInt::from(-1));
        assert_eq!(s.coeffs()[1], BigInt::from(3));
        assert_eq!(s.coeffs()[2], BigInt::from(0));
    }
}
