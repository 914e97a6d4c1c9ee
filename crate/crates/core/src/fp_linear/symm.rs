//! Homogeneous forms of a fixed degree in two variables x, y with the
//! GL_2 substitution action.
//!
//! Coefficient vectors are indexed so that position i holds the
//! coefficient of x^{r-i} y^i.

use super::ring::{mat_det, CoeffRing, FieldContext, Mat2};
use crate::error::{Error, Result};

/// A homogeneous form of degree r; coefficient of x^{r-i} y^i at index i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmElement<R: CoeffRing> {
    degree: usize,
    coeffs: Vec<R::Elem>,
}

impl<R: CoeffRing> SymmElement<R> {
    pub fn zero(ring: &R, degree: usize) -> Self {
        SymmElement {
            degree,
            coeffs: vec![ring.zero(); degree + 1],
        }
    }

    /// The monomial x^{r-i} y^i.
    pub fn monomial(ring: &R, degree: usize, i: usize) -> Self {
        assert!(i <= degree, "monomial index out of range");
        let mut v = Self::zero(ring, degree);
        v.coeffs[i] = ring.one();
        v
    }

    pub fn from_coeffs(ring: &R, coeffs: Vec<R::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a form has at least one coefficient");
        let _ = ring;
        SymmElement {
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn is_zero(&self, ring: &R) -> bool {
        self.coeffs.iter().all(|c| ring.is_zero(c))
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        SymmElement {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, ring: &R) -> Self {
        SymmElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| ring.neg(a)).collect(),
        }
    }

    pub fn scale(&self, ring: &R, c: &R::Elem) -> Self {
        SymmElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| ring.mul(a, c)).collect(),
        }
    }
}

/// F(ax + cy, bx + dy) for the matrix [[a, b], [c, d]]; no invertibility
/// requirement. Fast paths cover triangular and antidiagonal shapes.
pub fn substitute<R: CoeffRing>(
    ring: &R,
    m: &Mat2<R::Elem>,
    v: &SymmElement<R>,
) -> SymmElement<R> {
    let r = v.degree;
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    let b_zero = ring.is_zero(b);
    let c_zero = ring.is_zero(c);
    let a_zero = ring.is_zero(a);
    let d_zero = ring.is_zero(d);

    if b_zero && c_zero {
        // diagonal: x^{r-i} y^i -> a^{r-i} d^i x^{r-i} y^i
        let mut out = SymmElement::zero(ring, r);
        for (i, ci) in v.coeffs.iter().enumerate() {
            if ring.is_zero(ci) {
                continue;
            }
            let s = ring.mul(&ring.pow(a, (r - i) as u64), &ring.pow(d, i as u64));
            out.coeffs[i] = ring.mul(ci, &s);
        }
        return out;
    }
    if a_zero && d_zero {
        // antidiagonal: x^{r-i} y^i -> c^{r-i} b^i x^i y^{r-i}
        let mut out = SymmElement::zero(ring, r);
        for (i, ci) in v.coeffs.iter().enumerate() {
            if ring.is_zero(ci) {
                continue;
            }
            let s = ring.mul(&ring.pow(c, (r - i) as u64), &ring.pow(b, i as u64));
            out.coeffs[r - i] = ring.mul(ci, &s);
        }
        return out;
    }
    if c_zero {
        // x -> ax, y -> bx + dy: expand (ax)^{r-i} (bx + dy)^i
        let mut out = SymmElement::zero(ring, r);
        let mut bd_pow: Vec<Vec<R::Elem>> = Vec::with_capacity(r + 1);
        bd_pow.push(vec![ring.one()]);
        for i in 1..=r {
            bd_pow.push(mul_linear(ring, &bd_pow[i - 1], b, d));
        }
        for (i, ci) in v.coeffs.iter().enumerate() {
            if ring.is_zero(ci) {
                continue;
            }
            let s = ring.mul(ci, &ring.pow(a, (r - i) as u64));
            for (j, t) in bd_pow[i].iter().enumerate() {
                // x^{r-i} * x^{i-j} y^j = x^{r-j} y^j
                out.coeffs[j] = ring.add(&out.coeffs[j], &ring.mul(&s, t));
            }
        }
        return out;
    }

    // generic: convolve (ax + cy)^{r-i} with (bx + dy)^i
    let mut ac_pow: Vec<Vec<R::Elem>> = Vec::with_capacity(r + 1);
    let mut bd_pow: Vec<Vec<R::Elem>> = Vec::with_capacity(r + 1);
    ac_pow.push(vec![ring.one()]);
    bd_pow.push(vec![ring.one()]);
    for i in 1..=r {
        ac_pow.push(mul_linear(ring, &ac_pow[i - 1], a, c));
        bd_pow.push(mul_linear(ring, &bd_pow[i - 1], b, d));
    }
    let mut out = SymmElement::zero(ring, r);
    for (i, ci) in v.coeffs.iter().enumerate() {
        if ring.is_zero(ci) {
            continue;
        }
        let p1 = &ac_pow[r - i];
        let p2 = &bd_pow[i];
        for (j1, t1) in p1.iter().enumerate() {
            if ring.is_zero(t1) {
                continue;
            }
            let s = ring.mul(ci, t1);
            for (j2, t2) in p2.iter().enumerate() {
                out.coeffs[j1 + j2] = ring.add(&out.coeffs[j1 + j2], &ring.mul(&s, t2));
            }
        }
    }
    out
}

/// Coefficients of (prev) * (cx * x + cy * y); index = y-degree.
fn mul_linear<R: CoeffRing>(ring: &R, prev: &[R::Elem], cx: &R::Elem, cy: &R::Elem) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); prev.len() + 1];
    for (i, c) in prev.iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        out[i] = ring.add(&out[i], &ring.mul(c, cx));
        out[i + 1] = ring.add(&out[i + 1], &ring.mul(c, cy));
    }
    out
}

/// The action g . F = F(ax + cy, bx + dy); rejects non-invertible g.
pub fn act_gl2<R: CoeffRing>(
    ring: &R,
    g: &Mat2<R::Elem>,
    v: &SymmElement<R>,
) -> Result<SymmElement<R>> {
    if !ring.is_unit(&mat_det(ring, g)) {
        return Err(Error::NotInvertible);
    }
    Ok(substitute(ring, g, v))
}

/// Multiplication by x y^p - y x^p, raising the degree by p + 1.
pub fn theta_bar_multiply<R: CoeffRing>(ring: &R, v: &SymmElement<R>) -> SymmElement<R> {
    let p = ring.residue_char() as usize;
    let d = v.degree;
    let mut out = SymmElement::zero(ring, d + p + 1);
    for (i, c) in v.coeffs.iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        // x y^p * x^{d-i} y^i contributes at y-degree i + p
        out.coeffs[i + p] = ring.add(&out.coeffs[i + p], c);
        // -y x^p * x^{d-i} y^i contributes at y-degree i + 1
        out.coeffs[i + 1] = ring.sub(&out.coeffs[i + 1], c);
    }
    out
}

/// The form x y^p - y x^p itself (theta-bar), of degree p + 1.
pub fn theta_bar<R: CoeffRing>(ring: &R) -> SymmElement<R> {
    theta_bar_multiply(ring, &SymmElement::monomial(ring, 0, 0))
}

/// y^{r-p} * (theta-bar / x) = y^r - x^{p-1} y^{r-p+1}, defined for r >= p.
/// This is the degree-r form whose Hecke image generates I(W_r).
pub fn theta_quotient_times_power<R: CoeffRing>(ring: &R, r: usize) -> SymmElement<R> {
    let p = ring.residue_char() as usize;
    assert!(r >= p, "requires degree at least p");
    let mut v = SymmElement::zero(ring, r);
    v.coeffs[r] = ring.one();
    v.coeffs[r - p + 1] = ring.neg(&ring.one());
    v
}

/// Coefficient-wise reduction of a form over Z/p^m to one over F_p.
pub fn reduce_mod_p(
    zring: &super::ring::ZModPrimePower,
    field: &FieldContext,
    v: &SymmElement<super::ring::ZModPrimePower>,
) -> SymmElement<FieldContext> {
    assert_eq!(field.p(), zring.p());
    SymmElement {
        degree: v.degree,
        coeffs: v
            .coeffs
            .iter()
            .map(|c| zring.reduce_to_prime_field(field, *c))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp_linear::ring::{mat_from_ints, mat_identity, mat_mul, ZModPrimePower};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_invertible(
        ring: &FieldContext,
        rng: &mut ChaCha8Rng,
    ) -> Mat2<<FieldContext as CoeffRing>::Elem> {
        let p = ring.p() as i64;
        loop {
            let m = mat_from_ints(
                ring,
                rng.gen_range(0..p),
                rng.gen_range(0..p),
                rng.gen_range(0..p),
                rng.gen_range(0..p),
            );
            if ring.is_unit(&mat_det(ring, &m)) {
                return m;
            }
        }
    }

    fn random_form(
        ring: &FieldContext,
        r: usize,
        rng: &mut ChaCha8Rng,
    ) -> SymmElement<FieldContext> {
        let p = ring.p() as i64;
        SymmElement::from_coeffs(
            ring,
            (0..=r).map(|_| ring.from_int(rng.gen_range(0..p))).collect(),
        )
    }

    #[test]
    fn identity_acts_trivially() {
        let f7 = FieldContext::prime_field(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for r in [0usize, 1, 3, 8] {
            let v = random_form(&f7, r, &mut rng);
            assert_eq!(act_gl2(&f7, &mat_identity(&f7), &v).unwrap(), v);
        }
    }

    #[test]
    fn torus_eigenvectors_are_monomials() {
        let f5 = FieldContext::prime_field(5).unwrap();
        let r = 6;
        for (a, d) in [(2i64, 1i64), (3, 4), (1, 2)] {
            let g = mat_from_ints(&f5, a, 0, 0, d);
            for i in 0..=r {
                let v = SymmElement::monomial(&f5, r, i);
                let got = act_gl2(&f5, &g, &v).unwrap();
                let scale = f5.mul(
                    &f5.pow(&f5.from_int(a), (r - i) as u64),
                    &f5.pow(&f5.from_int(d), i as u64),
                );
                assert_eq!(got, v.scale(&f5, &scale));
            }
        }
    }

    #[test]
    fn weyl_swaps_monomials() {
        let f3 = FieldContext::prime_field(3).unwrap();
        let w = mat_from_ints(&f3, 0, 1, 1, 0);
        for r in [1usize, 3, 5] {
            let yr = SymmElement::monomial(&f3, r, r);
            let xr = SymmElement::monomial(&f3, r, 0);
            assert_eq!(act_gl2(&f3, &w, &yr).unwrap(), xr);
        }
    }

    #[test]
    fn rejects_singular_matrices() {
        let f5 = FieldContext::prime_field(5).unwrap();
        let g = mat_from_ints(&f5, 1, 2, 2, 4);
        let v = SymmElement::monomial(&f5, 2, 0);
        assert!(matches!(act_gl2(&f5, &g, &v), Err(Error::NotInvertible)));
    }

    #[test]
    fn action_is_compatible_with_composition() {
        // (gh) . v = g . (h . v), 200 trials per prime
        for p in [2u64, 3, 5, 7, 11, 13] {
            let fp = FieldContext::prime_field(p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            for _ in 0..200 {
                let r = rng.gen_range(0..=10usize);
                let v = random_form(&fp, r, &mut rng);
                let g = random_invertible(&fp, &mut rng);
                let h = random_invertible(&fp, &mut rng);
                let gh = mat_mul(&fp, &g, &h);
                let lhs = act_gl2(&fp, &gh, &v).unwrap();
                let rhs = act_gl2(&fp, &g, &act_gl2(&fp, &h, &v).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "p={p} r={r}");
            }
        }
    }

    #[test]
    fn generic_path_matches_fast_paths() {
        // force the generic convolution path by perturbing with the
        // all-ones matrix product identity: compare substitute on
        // triangular matrices against the same computed via composition
        let f7 = FieldContext::prime_field(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let upper = mat_from_ints(&f7, 1, 1, 0, 1);
        let lowerish = mat_from_ints(&f7, 0, 1, 1, 1); // a = 0 but d != 0: generic path
        let full = mat_mul(&f7, &upper, &lowerish); // [[1, 2], [1, 1]]: generic shape
        assert!(![&full.b, &full.c].iter().any(|e| f7.is_zero(e)));
        for _ in 0..50 {
            let r = rng.gen_range(0..=9usize);
            let v = random_form(&f7, r, &mut rng);
            let via_product = act_gl2(&f7, &full, &v).unwrap();
            let via_steps = act_gl2(&f7, &upper, &act_gl2(&f7, &lowerish, &v).unwrap()).unwrap();
            assert_eq!(via_product, via_steps);
        }
    }

    #[test]
    fn theta_bar_shape() {
        let f3 = FieldContext::prime_field(3).unwrap();
        // degree 0 element 1 maps to x y^3 - y x^3
        let t = theta_bar(&f3);
        assert_eq!(t.degree(), 4);
        let mut expected = SymmElement::zero(&f3, 4);
        expected.coeffs[3] = f3.one(); // x y^3
        expected.coeffs[1] = f3.neg(&f3.one()); // - x^3 y
        assert_eq!(t, expected);
        // zero maps to zero
        let z = SymmElement::zero(&f3, 2);
        assert!(theta_bar_multiply(&f3, &z).is_zero(&f3));
    }

    #[test]
    fn theta_bar_twisted_equivariance() {
        // g . (theta v) = det(g) theta (g . v), 50 random g at p = 5
        let f5 = FieldContext::prime_field(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let v = SymmElement::monomial(&f5, 1, 0); // the form x
        for _ in 0..50 {
            let g = random_invertible(&f5, &mut rng);
            let det = mat_det(&f5, &g);
            let lhs = act_gl2(&f5, &g, &theta_bar_multiply(&f5, &v)).unwrap();
            let rhs = theta_bar_multiply(&f5, &act_gl2(&f5, &g, &v).unwrap()).scale(&f5, &det);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn theta_bar_is_a_semi_invariant() {
        // g . theta = det(g) theta on a generating set
        for p in [3u64, 5, 7, 11, 13] {
            let fp = FieldContext::prime_field(p).unwrap();
            let t = theta_bar(&fp);
            for g in crate::fp_linear::submodule::standard_generators(&fp) {
                let lhs = act_gl2(&fp, &g, &t).unwrap();
                assert_eq!(lhs, t.scale(&fp, &mat_det(&fp, &g)), "p={p}");
            }
        }
    }

    #[test]
    fn reduction_mod_p_commutes_with_substitution() {
        let z9 = ZModPrimePower::new(3, 2).unwrap();
        let f3 = FieldContext::prime_field(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let r = rng.gen_range(0..=6usize);
            let v = SymmElement::from_coeffs(
                &z9,
                (0..=r).map(|_| rng.gen_range(0..9u64)).collect(),
            );
            let m = Mat2::new(
                rng.gen_range(0..9u64),
                rng.gen_range(0..9u64),
                rng.gen_range(0..9u64),
                rng.gen_range(0..9u64),
            );
            let m_bar = Mat2::new(
                f3.embed(m.a % 3),
                f3.embed(m.b % 3),
                f3.embed(m.c % 3),
                f3.embed(m.d % 3),
            );
            let lhs = reduce_mod_p(&z9, &f3, &substitute(&z9, &m, &v));
            let rhs = substitute(&f3, &m_bar, &reduce_mod_p(&z9, &f3, &v));
            assert_eq!(lhs, rhs);
        }
    }
}
