//! Coefficient rings: the finite fields F_{p^f} (f <= 4) and the finite
//! rings Z/p^m. Ring contexts carry the modulus data; elements are plain
//! reduced representatives so they can be compared, ordered and hashed
//! without a context in hand.

use arrayvec::ArrayVec;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// A commutative coefficient ring with enough structure for exact linear
/// algebra: canonical residues, unit tests and unit inversion.
// the ring context is the constructor for its elements
#[allow(clippy::wrong_self_convention)]
pub trait CoeffRing: Clone + std::fmt::Debug + PartialEq {
    type Elem: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Residue characteristic p.
    fn residue_char(&self) -> u64;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Image of the exact rational num/den; `None` when den is not a unit.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem> {
        let d = self.from_bigint(den);
        let dinv = self.inv(&d)?;
        Some(self.mul(&self.from_bigint(num), &dinv))
    }
}

/// Marker for rings in which every nonzero element is a unit.
pub trait CoeffField: CoeffRing {}

const MAX_EXT_DEGREE: usize = 4;

/// Element of F_{p^f}: coefficients of 1, u, ..., u^{f-1} where u is a root
/// of the context's modulus. Always length f with entries reduced mod p.
pub type FqElem = ArrayVec<u64, MAX_EXT_DEGREE>;

/// The field F_{p^f}, fixed by the prime p, the degree f and the
/// lexicographically least irreducible monic modulus of degree f over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    p: u64,
    f: usize,
    /// Monic modulus, ascending coefficients, length f+1, last entry 1.
    modulus: ArrayVec<u64, { MAX_EXT_DEGREE + 1 }>,
}

impl FieldContext {
    pub fn new(p: u64, f: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 || f > MAX_EXT_DEGREE {
            return Err(Error::ExtensionDegree(f));
        }
        let modulus = least_irreducible(p, f);
        Ok(FieldContext { p, f, modulus })
    }

    /// The prime field F_p.
    pub fn prime_field(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.f as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Element with the given coefficients of 1, u, ..., u^{f-1}.
    pub fn element(&self, coeffs: &[u64]) -> FqElem {
        let mut e = FqElem::new();
        for i in 0..self.f {
            e.push(coeffs.get(i).copied().unwrap_or(0) % self.p);
        }
        e
    }

    /// Embedding of an integer residue (an element of the prime subfield).
    pub fn embed(&self, n: u64) -> FqElem {
        let mut e = self.zero();
        e[0] = n % self.p;
        e
    }

    /// Inverse embedding for prime-subfield elements; `None` if the element
    /// does not lie in F_p.
    pub fn to_prime_subfield(&self, a: &FqElem) -> Option<u64> {
        if a.iter().skip(1).all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    /// All field elements in a fixed order (constant term fastest).
    pub fn all_elements(&self) -> Vec<FqElem> {
        let q = self.order();
        (0..q)
            .map(|mut m| {
                let mut e = FqElem::new();
                for _ in 0..self.f {
                    e.push(m % self.p);
                    m /= self.p;
                }
                e
            })
            .collect()
    }

    /// The smallest positive integer generating F_p^* (1 when p = 2).
    pub fn multiplicative_generator(&self) -> u64 {
        smallest_generator(self.p)
    }

    /// Discrete logarithm of `a` to the base of the fixed generator of
    /// F_p^*; defined only for elements of the prime subfield.
    pub fn dlog(&self, a: &FqElem) -> Option<u64> {
        let target = self.to_prime_subfield(a)?;
        if target == 0 {
            return None;
        }
        let g = self.multiplicative_generator();
        let mut acc = 1u64;
        for e in 0..self.p.saturating_sub(1).max(1) {
            if acc == target {
                return Some(e);
            }
            acc = acc * g % self.p;
        }
        None
    }

    fn reduce_poly(&self, mut c: Vec<u64>) -> FqElem {
        // divide by the monic modulus, keep the remainder
        let f = self.f;
        for i in (f..c.len()).rev() {
            let lead = c[i];
            if lead != 0 {
                c[i] = 0;
                for j in 0..f {
                    let sub = lead * self.modulus[j] % self.p;
                    c[i - f + j] = (c[i - f + j] + self.p - sub) % self.p;
                }
            }
        }
        let mut e = FqElem::new();
        for item in c.iter().take(f) {
            e.push(*item);
        }
        e
    }
}

impl CoeffRing for FieldContext {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        let mut e = FqElem::new();
        for _ in 0..self.f {
            e.push(0);
        }
        e
    }

    fn one(&self) -> FqElem {
        let mut e = self.zero();
        e[0] = 1 % self.p;
        e
    }

    fn is_zero(&self, a: &FqElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let mut e = FqElem::new();
        for i in 0..self.f {
            e.push((a[i] + b[i]) % self.p);
        }
        e
    }

    fn neg(&self, a: &FqElem) -> FqElem {
        let mut e = FqElem::new();
        for i in 0..self.f {
            e.push((self.p - a[i]) % self.p);
        }
        e
    }

    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        if self.f == 1 {
            let mut e = FqElem::new();
            e.push(a[0] * b[0] % self.p);
            return e;
        }
        let mut conv = vec![0u64; 2 * self.f - 1];
        for i in 0..self.f {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.f {
                conv[i + j] = (conv[i + j] + a[i] * b[j]) % self.p;
            }
        }
        self.reduce_poly(conv)
    }

    fn from_int(&self, n: i64) -> FqElem {
        let p = self.p as i64;
        self.embed(n.rem_euclid(p) as u64)
    }

    fn from_bigint(&self, n: &BigInt) -> FqElem {
        let p = BigInt::from(self.p);
        let r = ((n % &p) + &p) % &p;
        self.embed(r.to_u64().expect("reduced residue fits in u64"))
    }

    fn residue_char(&self) -> u64 {
        self.p
    }

    fn is_unit(&self, a: &FqElem) -> bool {
        !self.is_zero(a)
    }

    fn inv(&self, a: &FqElem) -> Option<FqElem> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }
}

impl CoeffField for FieldContext {}

/// The ring Z/p^m with canonical residues in [0, p^m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZModPrimePower {
    p: u64,
    m: u32,
    q: u64,
}

impl ZModPrimePower {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DomainError("exponent m must be positive".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q < (1 << 31))
            .ok_or_else(|| Error::DomainError(format!("p^m = {p}^{m} too large")))?;
        Ok(ZModPrimePower { p, m, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// Reduction Z/p^m -> F_p of a single element.
    pub fn reduce_to_prime_field(&self, field: &FieldContext, a: u64) -> FqElem {
        debug_assert_eq!(field.p(), self.p);
        field.embed(a % self.p)
    }
}

impl CoeffRing for ZModPrimePower {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.q
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.q
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.q - a) % self.q
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.q as u128) as u64
    }

    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.q as i64) as u64
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let q = BigInt::from(self.q);
        let r = ((n % &q) + &q) % &q;
        r.to_u64().expect("reduced residue fits in u64")
    }

    fn residue_char(&self) -> u64 {
        self.p
    }

    fn is_unit(&self, a: &u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if !self.is_unit(a) {
            return None;
        }
        // extended euclid on (a, q)
        let (mut r0, mut r1) = (self.q as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.q as i128) as u64)
    }
}

/// 2x2 matrix [[a, b], [c, d]] with entries in a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }
}

pub fn mat_identity<R: CoeffRing>(ring: &R) -> Mat2<R::Elem> {
    Mat2::new(ring.one(), ring.zero(), ring.zero(), ring.one())
}

pub fn mat_det<R: CoeffRing>(ring: &R, m: &Mat2<R::Elem>) -> R::Elem {
    ring.sub(&ring.mul(&m.a, &m.d), &ring.mul(&m.b, &m.c))
}

pub fn mat_mul<R: CoeffRing>(ring: &R, x: &Mat2<R::Elem>, y: &Mat2<R::Elem>) -> Mat2<R::Elem> {
    Mat2::new(
        ring.add(&ring.mul(&x.a, &y.a), &ring.mul(&x.b, &y.c)),
        ring.add(&ring.mul(&x.a, &y.b), &ring.mul(&x.b, &y.d)),
        ring.add(&ring.mul(&x.c, &y.a), &ring.mul(&x.d, &y.c)),
        ring.add(&ring.mul(&x.c, &y.b), &ring.mul(&x.d, &y.d)),
    )
}

/// Matrix from integer entries [[a, b], [c, d]].
pub fn mat_from_ints<R: CoeffRing>(ring: &R, a: i64, b: i64, c: i64, d: i64) -> Mat2<R::Elem> {
    Mat2::new(
        ring.from_int(a),
        ring.from_int(b),
        ring.from_int(c),
        ring.from_int(d),
    )
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Odd primes up to and including `bound`, ascending.
pub fn odd_primes_upto(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&n| is_prime(n)).collect()
}

pub fn smallest_generator(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    'outer: for g in 2..p {
        let mut acc = 1u64;
        for _ in 0..p - 2 {
            acc = acc * g % p;
            if acc == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("F_p^* is cyclic")
}

/// Lexicographically least monic irreducible polynomial of degree f over
/// F_p, ascending coefficients. Least means smallest (c_0, ..., c_{f-1})
/// read as a base-p integer with c_0 the least significant digit.
fn least_irreducible(p: u64, f: usize) -> ArrayVec<u64, { MAX_EXT_DEGREE + 1 }> {
    let total = p.pow(f as u32);
    for m in 0..total {
        let mut coeffs = ArrayVec::<u64, { MAX_EXT_DEGREE + 1 }>::new();
        let mut v = m;
        for _ in 0..f {
            coeffs.push(v % p);
            v /= p;
        }
        coeffs.push(1);
        if poly_is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Irreducibility by trial division against every monic polynomial of
/// degree at most f/2.
fn poly_is_irreducible(p: u64, poly: &[u64]) -> bool {
    let f = poly.len() - 1;
    if f == 1 {
        return true;
    }
    for deg in 1..=f / 2 {
        let total = p.pow(deg as u32);
        for m in 0..total {
            let mut div = Vec::with_capacity(deg + 1);
            let mut v = m;
            for _ in 0..deg {
                div.push(v % p);
                v /= p;
            }
            div.push(1);
            if poly_divides(p, &div, poly) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(p: u64, div: &[u64], poly: &[u64]) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for i in 0..=d {
                let sub = lead * div[i] % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldContext::prime_field(5).unwrap();
        let two = f5.embed(2);
        let three = f5.embed(3);
        assert_eq!(f5.add(&two, &three), f5.zero());
        assert_eq!(f5.mul(&two, &three), f5.one());
        assert_eq!(f5.inv(&two), Some(three));
        assert_eq!(f5.inv(&f5.zero()), None);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(matches!(FieldContext::prime_field(6), Err(Error::NotPrime(6))));
        assert!(matches!(ZModPrimePower::new(9, 2), Err(Error::NotPrime(9))));
    }

    #[test]
    fn least_irreducible_moduli() {
        // x^2 + 1 over F_3 (since -1 is a non-square mod 3)
        let f9 = FieldContext::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // x^2 + 2 over F_5 (x^2 + 1 splits since 2^2 = -1)
        let f25 = FieldContext::new(5, 2).unwrap();
        assert_eq!(f25.modulus(), &[2, 0, 1]);
    }

    #[test]
    fn extension_field_is_a_field() {
        for (p, f) in [(3u64, 2usize), (5, 3), (7, 2), (2, 4)] {
            let fq = FieldContext::new(p, f).unwrap();
            for a in fq.all_elements() {
                if fq.is_zero(&a) {
                    continue;
                }
                let inv = fq.inv(&a).unwrap();
                assert_eq!(fq.mul(&a, &inv), fq.one(), "p={p} f={f} a={a:?}");
            }
            // Frobenius fixes exactly the prime subfield
            let fixed = fq
                .all_elements()
                .into_iter()
                .filter(|a| fq.pow(a, p) == *a)
                .count() as u64;
            assert_eq!(fixed, p);
        }
    }

    #[test]
    fn zmod_prime_power_units() {
        let z25 = ZModPrimePower::new(5, 2).unwrap();
        assert_eq!(z25.modulus(), 25);
        for a in 0..25u64 {
            match z25.inv(&a) {
                Some(inv) => assert_eq!(z25.mul(&a, &inv), 1),
                None => assert_eq!(a % 5, 0),
            }
        }
    }

    #[test]
    fn smallest_generators() {
        assert_eq!(smallest_generator(3), 2);
        assert_eq!(smallest_generator(5), 2);
        assert_eq!(smallest_generator(7), 3);
        assert_eq!(smallest_generator(13), 2);
    }

    #[test]
    fn dlog_round_trip() {
        let f7 = FieldContext::prime_field(7).unwrap();
        let g = f7.embed(f7.multiplicative_generator());
        for e in 0..6 {
            assert_eq!(f7.dlog(&f7.pow(&g, e)), Some(e));
        }
        assert_eq!(f7.dlog(&f7.zero()), None);
    }
}
