//! Canonical representatives for the cosets of GL_2(Z_p) times the centre
//! inside GL_2(Q_p), computed by exact column reduction over Z_p.
//!
//! The normal form is upper triangular with p-power diagonal entries of
//! minimum valuation 0 and the off-diagonal entry reduced to a canonical
//! residue modulo the left diagonal entry. Right multiplication by
//! GL_2(Z_p) and central p-powers leaves the form unchanged, which is
//! exactly the invariance the basis elements [g, v] of a compact
//! induction require.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type QRat = Ratio<BigInt>;

pub fn qrat_int(n: i64) -> QRat {
    Ratio::from_integer(BigInt::from(n))
}

/// p^e for a (possibly negative) exponent.
pub fn p_power(p: u64, e: i64) -> QRat {
    let pw = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Ratio::from_integer(pw)
    } else {
        Ratio::new(BigInt::one(), pw)
    }
}

/// p-adic valuation of an exact rational; `None` for zero.
pub fn val_p(x: &QRat, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = x.numer().abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = x.denom().abs();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    Some(v)
}

/// Canonical representative of x modulo Z_p: zero when x is p-integral,
/// otherwise t / p^j with 0 <= t < p^j and p not dividing t.
pub fn frac_p(x: &QRat, p: u64) -> QRat {
    let v = match val_p(x, p) {
        Some(v) if v < 0 => -v,
        _ => return QRat::zero(),
    };
    let pj = BigInt::from(p).pow(v as u32);
    // x = num / (unit * p^j) in lowest terms; reduce num * unit^{-1} mod p^j
    let num = x.numer().clone();
    let unit = x.denom() / &pj;
    let t = mod_inverse(&unit, &pj)
        .map(|ui| ((num * ui) % &pj + &pj) % &pj)
        .expect("denominator unit is invertible mod p^j");
    Ratio::new(t, pj)
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let a = ((a % modulus) + modulus) % modulus;
    let e = a.extended_gcd(modulus);
    if e.gcd.is_one() {
        Some(((e.x % modulus) + modulus) % modulus)
    } else {
        None
    }
}

/// 2x2 matrix [[a, b], [c, d]] over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatQ {
    pub a: QRat,
    pub b: QRat,
    pub c: QRat,
    pub d: QRat,
}

impl MatQ {
    pub fn new(a: QRat, b: QRat, c: QRat, d: QRat) -> Self {
        MatQ { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        MatQ::new(qrat_int(a), qrat_int(b), qrat_int(c), qrat_int(d))
    }

    pub fn identity() -> Self {
        MatQ::from_ints(1, 0, 0, 1)
    }

    /// diag(p, lambda; 0, 1), the standard neighbour representatives.
    pub fn g0(p: u64, lambda: i64) -> Self {
        MatQ::new(
            qrat_int(p as i64),
            qrat_int(lambda),
            QRat::zero(),
            QRat::one(),
        )
    }

    /// diag(1, p).
    pub fn alpha(p: u64) -> Self {
        MatQ::new(QRat::one(), QRat::zero(), QRat::zero(), qrat_int(p as i64))
    }

    pub fn det(&self) -> QRat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, other: &MatQ) -> MatQ {
        MatQ::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn scale(&self, s: &QRat) -> MatQ {
        MatQ::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    pub fn inverse(&self) -> Result<MatQ> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv = det.recip();
        Ok(MatQ::new(
            &self.d * &inv,
            -(&self.b * &inv),
            -(&self.c * &inv),
            &self.a * &inv,
        ))
    }

    fn swap_cols(&mut self) {
        std::mem::swap(&mut self.a, &mut self.b);
        std::mem::swap(&mut self.c, &mut self.d);
    }
}

/// Canonical coset representative [[p^a, b], [0, p^d]] with min(a, d) = 0
/// and b a canonical residue modulo p^a (a rational with a p-power
/// denominator).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetRep {
    left_exp: u32,
    right_exp: u32,
    off: QRat,
}

impl CosetRep {
    pub fn identity() -> Self {
        CosetRep {
            left_exp: 0,
            right_exp: 0,
            off: QRat::zero(),
        }
    }

    pub fn left_exp(&self) -> u32 {
        self.left_exp
    }

    pub fn right_exp(&self) -> u32 {
        self.right_exp
    }

    pub fn off_diagonal(&self) -> &QRat {
        &self.off
    }

    pub fn to_matrix(&self, p: u64) -> MatQ {
        MatQ::new(
            p_power(p, self.left_exp as i64),
            self.off.clone(),
            QRat::zero(),
            p_power(p, self.right_exp as i64),
        )
    }
}

/// Normal form of the coset g . (GL_2(Z_p) times p-power centre), by
/// column reduction over Z_p followed by central scaling; rejects
/// singular input.
pub fn canonicalize(p: u64, g: &MatQ) -> Result<CosetRep> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut m = g.clone();
    // bring the smaller-valuation bottom entry to the right column, then
    // clear the bottom-left entry with a Z_p column operation
    let v10 = val_p(&m.c, p);
    let v11 = val_p(&m.d, p);
    let swap = match (v10, v11) {
        (None, _) => false,
        (Some(_), None) => true,
        (Some(x), Some(y)) => x < y,
    };
    if swap {
        m.swap_cols();
    }
    if !m.c.is_zero() {
        let z = &m.c / &m.d;
        debug_assert!(val_p(&z, p).unwrap_or(0) >= 0);
        m.a = &m.a - &(&z * &m.b);
        m.c = QRat::zero();
    }
    // unit column scalings make the diagonal entries exact p-powers
    let a_val = val_p(&m.a, p).expect("nonsingular after reduction");
    let d_val = val_p(&m.d, p).expect("nonsingular after reduction");
    let u2 = p_power(p, d_val) / &m.d;
    let b = &m.b * &u2;
    // central p-power scaling pins min(a, d) = 0
    let c = a_val.min(d_val);
    let a = (a_val - c) as u32;
    let d = (d_val - c) as u32;
    let b = b / p_power(p, c);
    // reduce the off-diagonal entry modulo p^a Z_p
    let pa = p_power(p, a as i64);
    let off = &pa * frac_p(&(&b / &pa), p);
    Ok(CosetRep {
        left_exp: a,
        right_exp: d,
        off,
    })
}

/// Split u in GL_2(Z_p) times p-power centre as p^c . k with k integral of
/// unit determinant; errors when u is not in that subgroup.
pub fn kz_split(p: u64, u: &MatQ) -> Result<(i64, MatQ)> {
    let entries = [&u.a, &u.b, &u.c, &u.d];
    let c = entries
        .iter()
        .filter_map(|e| val_p(e, p))
        .min()
        .ok_or(Error::SingularMatrix)?;
    let k = u.scale(&p_power(p, -c));
    let det_ok = val_p(&k.det(), p) == Some(0);
    let integral = [&k.a, &k.b, &k.c, &k.d]
        .iter()
        .all(|e| val_p(e, p).is_none_or(|v| v >= 0));
    if det_ok && integral {
        Ok((c, k))
    } else {
        Err(Error::DomainError(
            "matrix is not in GL_2(Z_p) times the centre".into(),
        ))
    }
}
