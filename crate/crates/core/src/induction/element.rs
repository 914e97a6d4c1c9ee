//! Finitely supported elements of the compact induction of the degree-r
//! forms, the translation action of GL_2(Q_p), and the Hecke operator
//! T = T^+ + T^-.
//!
//! An element is stored as a map from canonical coset representatives to
//! form values; [g, v] denotes the element supported on the coset of g
//! with value v, so [gk, v] = [g, k.v] for integral k and central
//! p-powers act trivially. All bookkeeping goes through `canonicalize`,
//! so two equal elements always have byte-identical support maps.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::coset::{canonicalize, kz_split, CosetRep, MatQ};
use crate::error::{Error, Result};
use crate::fp_linear::ring::{mat_det, CoeffRing, FieldContext, Mat2, ZModPrimePower};
use crate::fp_linear::submodule::{submodule_w, KSubmodule};
use crate::fp_linear::symm::{reduce_mod_p, substitute, SymmElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedElement<R: CoeffRing> {
    degree: usize,
    support: BTreeMap<CosetRep, SymmElement<R>>,
}

impl<R: CoeffRing> InducedElement<R> {
    pub fn zero(degree: usize) -> Self {
        InducedElement {
            degree,
            support: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    pub fn support(&self) -> impl Iterator<Item = (&CosetRep, &SymmElement<R>)> {
        self.support.iter()
    }

    pub fn value_at(&self, rep: &CosetRep) -> Option<&SymmElement<R>> {
        self.support.get(rep)
    }

    /// Add [g, v] into this element, canonicalizing g and transporting v
    /// through the integral part of the coset adjustment.
    pub fn add_term(&mut self, ring: &R, g: &MatQ, v: &SymmElement<R>) -> Result<()> {
        assert_eq!(v.degree(), self.degree, "value degree mismatch");
        let p = ring.residue_char();
        let rep = canonicalize(p, g)?;
        // g = rep . u with u integral up to centre; [g, v] = [rep, u.v]
        let u = rep.to_matrix(p).inverse()?.mul(g);
        let (_, k) = kz_split(p, &u)?;
        let kbar = reduce_integral_matrix(ring, &k)?;
        debug_assert!(ring.is_unit(&mat_det(ring, &kbar)));
        let value = substitute(ring, &kbar, v);
        self.merge(ring, rep, value);
        Ok(())
    }

    fn merge(&mut self, ring: &R, rep: CosetRep, value: SymmElement<R>) {
        if value.is_zero(ring) {
            return;
        }
        match self.support.remove(&rep) {
            None => {
                self.support.insert(rep, value);
            }
            Some(old) => {
                let sum = old.add(ring, &value);
                if !sum.is_zero(ring) {
                    self.support.insert(rep, sum);
                }
            }
        }
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (rep, v) in &other.support {
            out.merge(ring, rep.clone(), v.clone());
        }
        out
    }

    pub fn neg(&self, ring: &R) -> Self {
        InducedElement {
            degree: self.degree,
            support: self
                .support
                .iter()
                .map(|(k, v)| (k.clone(), v.neg(ring)))
                .collect(),
        }
    }

    pub fn scale(&self, ring: &R, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.degree);
        for (rep, v) in &self.support {
            out.merge(ring, rep.clone(), v.scale(ring, c));
        }
        out
    }
}

/// Reduce a p-integral rational matrix into the coefficient ring.
fn reduce_integral_matrix<R: CoeffRing>(ring: &R, m: &MatQ) -> Result<Mat2<R::Elem>> {
    let conv = |x: &super::coset::QRat| {
        ring.from_ratio(x.numer(), x.denom())
            .ok_or(Error::NotInvertible)
    };
    Ok(Mat2::new(conv(&m.a)?, conv(&m.b)?, conv(&m.c)?, conv(&m.d)?))
}

/// The basis element [g, v].
pub fn basis_element<R: CoeffRing>(
    ring: &R,
    g: &MatQ,
    v: &SymmElement<R>,
) -> Result<InducedElement<R>> {
    let mut out = InducedElement::zero(v.degree());
    out.add_term(ring, g, v)?;
    Ok(out)
}

/// The translation action: g . [h, v] = [gh, v], extended additively.
pub fn g_act<R: CoeffRing>(
    ring: &R,
    g: &MatQ,
    f: &InducedElement<R>,
) -> Result<InducedElement<R>> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let p = ring.residue_char();
    let mut out = InducedElement::zero(f.degree());
    for (rep, v) in f.support() {
        out.add_term(ring, &g.mul(&rep.to_matrix(p)), v)?;
    }
    Ok(out)
}

/// T^+ applied to the basis element [Id, v]: the sum over lambda in
/// {0, ..., p-1} of [g0_{1,lambda}, v(x, py - lambda x)].
pub fn hecke_t_plus<R: CoeffRing>(ring: &R, v: &SymmElement<R>) -> InducedElement<R> {
    let p = ring.residue_char();
    let mut out = InducedElement::zero(v.degree());
    for lambda in 0..p as i64 {
        let m = Mat2::new(
            ring.one(),
            ring.from_int(-lambda),
            ring.zero(),
            ring.from_int(p as i64),
        );
        let value = substitute(ring, &m, v);
        out.add_term(ring, &MatQ::g0(p, lambda), &value)
            .expect("standard representatives are nonsingular");
    }
    out
}

/// T^- applied to the basis element [Id, v]: [alpha, v(px, y)].
pub fn hecke_t_minus<R: CoeffRing>(ring: &R, v: &SymmElement<R>) -> InducedElement<R> {
    let p = ring.residue_char();
    let m = Mat2::new(
        ring.from_int(p as i64),
        ring.zero(),
        ring.zero(),
        ring.one(),
    );
    let value = substitute(ring, &m, v);
    let mut out = InducedElement::zero(v.degree());
    out.add_term(ring, &MatQ::alpha(p), &value)
        .expect("alpha is nonsingular");
    out
}

/// The Hecke operator T = T^+ + T^-, extended from the identity vertex by
/// translation equivariance: T[g, v] = g . T[Id, v].
pub fn hecke_t<R: CoeffRing>(ring: &R, f: &InducedElement<R>) -> InducedElement<R> {
    let p = ring.residue_char();
    let mut out = InducedElement::zero(f.degree());
    for (rep, v) in f.support() {
        let g = rep.to_matrix(p);
        for lambda in 0..p as i64 {
            let m = Mat2::new(
                ring.one(),
                ring.from_int(-lambda),
                ring.zero(),
                ring.from_int(p as i64),
            );
            let value = substitute(ring, &m, v);
            out.add_term(ring, &g.mul(&MatQ::g0(p, lambda)), &value)
                .expect("translates of representatives are nonsingular");
        }
        let m = Mat2::new(
            ring.from_int(p as i64),
            ring.zero(),
            ring.zero(),
            ring.one(),
        );
        let value = substitute(ring, &m, v);
        out.add_term(ring, &g.mul(&MatQ::alpha(p)), &value)
            .expect("translates of representatives are nonsingular");
    }
    out
}

/// Whether every value of T f lies in the given stable submodule.
pub fn hecke_image_lands_in(
    ring: &FieldContext,
    f: &InducedElement<FieldContext>,
    sub: &KSubmodule<FieldContext>,
) -> bool {
    let tf = hecke_t(ring, f);
    let ok = tf.support().all(|(_, v)| sub.contains(ring, v));
    ok
}

/// Whether every value of T f lies in the submodule generated by y^r.
/// Defined for r >= p, where that submodule is exactly the image of T.
pub fn image_in_w_check(
    ring: &FieldContext,
    r: usize,
    f: &InducedElement<FieldContext>,
) -> Result<bool> {
    let p = ring.p() as usize;
    if r < p {
        return Err(Error::DomainError(format!(
            "image description requires r >= p, got r = {r}, p = {p}"
        )));
    }
    if f.degree() != r {
        return Err(Error::DegreeMismatch(format!(
            "element has degree {}, expected {r}",
            f.degree()
        )));
    }
    Ok(hecke_image_lands_in(ring, f, &submodule_w(ring, r)))
}

/// Coefficient-wise reduction of an element over Z/p^m to one over F_p.
pub fn reduce_induced_mod_p(
    zring: &ZModPrimePower,
    field: &FieldContext,
    f: &InducedElement<ZModPrimePower>,
) -> InducedElement<FieldContext> {
    let mut out = InducedElement::zero(f.degree());
    for (rep, v) in f.support() {
        out.merge(field, rep.clone(), reduce_mod_p(zring, field, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp_linear::symm::theta_quotient_times_power;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp(p: u64) -> FieldContext {
        FieldContext::prime_field(p).unwrap()
    }

    fn random_integral_unit_det(rng: &mut ChaCha8Rng) -> MatQ {
        let mut m = MatQ::identity();
        for _ in 0..3 {
            let t = rng.gen_range(-6i64..=6);
            let shear = if rng.gen_bool(0.5) {
                MatQ::from_ints(1, t, 0, 1)
            } else {
                MatQ::from_ints(1, 0, t, 1)
            };
            m = m.mul(&shear);
        }
        m
    }

    fn random_element(
        ring: &FieldContext,
        r: usize,
        rng: &mut ChaCha8Rng,
    ) -> InducedElement<FieldContext> {
        let p = ring.p();
        let mut f = InducedElement::zero(r);
        for _ in 0..rng.gen_range(1..=3usize) {
            let mut g = MatQ::identity();
            for _ in 0..rng.gen_range(0..=2usize) {
                g = g.mul(&MatQ::g0(p, rng.gen_range(0..p as i64)));
            }
            if rng.gen_bool(0.4) {
                g = g.mul(&MatQ::alpha(p));
            }
            let v = SymmElement::from_coeffs(
                ring,
                (0..=r)
                    .map(|_| ring.from_int(rng.gen_range(0..p as i64)))
                    .collect(),
            );
            f.add_term(ring, &g, &v).unwrap();
        }
        f
    }

    #[test]
    fn basis_element_respects_integral_translation() {
        // [g k, v] = [g, k.v] for random integral unit-determinant k
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [3u64, 5, 7] {
            let ring = fp(p);
            for _ in 0..40 {
                let r = rng.gen_range(1..=6usize);
                let v = SymmElement::from_coeffs(
                    &ring,
                    (0..=r)
                        .map(|_| ring.from_int(rng.gen_range(0..p as i64)))
                        .collect(),
                );
                let g = MatQ::g0(p, rng.gen_range(0..p as i64));
                let k = random_integral_unit_det(&mut rng);
                let kbar = reduce_integral_matrix(&ring, &k).unwrap();
                let lhs = basis_element(&ring, &g.mul(&k), &v).unwrap();
                let rhs = basis_element(&ring, &g, &substitute(&ring, &kbar, &v)).unwrap();
                assert_eq!(lhs, rhs, "p={p}");
            }
        }
    }

    #[test]
    fn translation_action_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for p in [3u64, 5] {
            let ring = fp(p);
            for _ in 0..25 {
                let r = rng.gen_range(1..=5usize);
                let f = random_element(&ring, r, &mut rng);
                let g1 = MatQ::g0(p, rng.gen_range(0..p as i64));
                let g2 = MatQ::alpha(p).mul(&random_integral_unit_det(&mut rng));
                let lhs = g_act(&ring, &g1.mul(&g2), &f).unwrap();
                let rhs = g_act(&ring, &g1, &g_act(&ring, &g2, &f).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "p={p}");
            }
        }
    }

    #[test]
    fn identity_translation_is_trivial() {
        let ring = fp(5);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = random_element(&ring, 4, &mut rng);
        assert_eq!(g_act(&ring, &MatQ::identity(), &f).unwrap(), f);
    }

    #[test]
    fn translation_of_basis_elements() {
        // g . [h, v] = [gh, v]
        let ring = fp(5);
        let v = SymmElement::monomial(&ring, 3, 2);
        let h = MatQ::g0(5, 2);
        let g = MatQ::alpha(5);
        let lhs = g_act(&ring, &g, &basis_element(&ring, &h, &v).unwrap()).unwrap();
        let rhs = basis_element(&ring, &g.mul(&h), &v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hecke_on_y_r_matches_the_expanded_formula() {
        // T[Id, y^r] = sum over nonzero lambda of (-lambda)^r [g0_{1,lambda}, x^r]
        //              + [alpha, y^r]
        for p in [3u64, 5, 7] {
            let ring = fp(p);
            for r in [p as usize, p as usize + 2] {
                let yr = SymmElement::monomial(&ring, r, r);
                let f = basis_element(&ring, &MatQ::identity(), &yr).unwrap();
                let got = hecke_t(&ring, &f);
                let mut expected = InducedElement::zero(r);
                for lambda in 1..p as i64 {
                    let c = ring.pow(&ring.from_int(-lambda), r as u64);
                    let xr = SymmElement::monomial(&ring, r, 0).scale(&ring, &c);
                    expected
                        .add_term(&ring, &MatQ::g0(p, lambda), &xr)
                        .unwrap();
                }
                expected.add_term(&ring, &MatQ::alpha(p), &yr).unwrap();
                assert_eq!(got, expected, "p={p} r={r}");
            }
        }
    }

    #[test]
    fn hecke_splits_as_plus_and_minus_at_the_identity() {
        let ring = fp(5);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let r = rng.gen_range(1..=7usize);
            let v = SymmElement::from_coeffs(
                &ring,
                (0..=r).map(|_| ring.from_int(rng.gen_range(0..5))).collect(),
            );
            let f = basis_element(&ring, &MatQ::identity(), &v).unwrap();
            let whole = hecke_t(&ring, &f);
            let split = hecke_t_plus(&ring, &v).add(&ring, &hecke_t_minus(&ring, &v));
            assert_eq!(whole, split);
        }
    }

    #[test]
    fn hecke_kills_t_plus_on_the_theta_section() {
        // f = [Id, y^{r-p} theta/x] has T^+ f = 0 and T f = [alpha, y^r]
        for p in [3u64, 5, 7] {
            let ring = fp(p);
            for r in [p as usize, p as usize + 3, 2 * p as usize] {
                let w = theta_quotient_times_power(&ring, r);
                assert!(hecke_t_plus(&ring, &w).is_zero(), "p={p} r={r}");
                let f = basis_element(&ring, &MatQ::identity(), &w).unwrap();
                let expected = basis_element(
                    &ring,
                    &MatQ::alpha(p),
                    &SymmElement::monomial(&ring, r, r),
                )
                .unwrap();
                assert_eq!(hecke_t(&ring, &f), expected, "p={p} r={r}");
            }
        }
    }

    #[test]
    fn hecke_commutes_with_translation() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for p in [3u64, 5] {
            let ring = fp(p);
            for _ in 0..15 {
                let r = rng.gen_range(p as usize..=p as usize + 4);
                let f = random_element(&ring, r, &mut rng);
                let g = MatQ::g0(p, rng.gen_range(0..p as i64))
                    .mul(&random_integral_unit_det(&mut rng));
                let lhs = hecke_t(&ring, &g_act(&ring, &g, &f).unwrap());
                let rhs = g_act(&ring, &g, &hecke_t(&ring, &f)).unwrap();
                assert_eq!(lhs, rhs, "p={p}");
            }
        }
    }

    #[test]
    fn hecke_is_linear_and_support_bounded() {
        let ring = fp(5);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..15 {
            let r = rng.gen_range(1..=6usize);
            let f1 = random_element(&ring, r, &mut rng);
            let f2 = random_element(&ring, r, &mut rng);
            let c = ring.from_int(rng.gen_range(1..5));
            let lhs = hecke_t(&ring, &f1.scale(&ring, &c).add(&ring, &f2));
            let rhs = hecke_t(&ring, &f1)
                .scale(&ring, &c)
                .add(&ring, &hecke_t(&ring, &f2));
            assert_eq!(lhs, rhs);
            let tf = hecke_t(&ring, &f1);
            assert!(tf.support_size() <= 6 * f1.support_size());
        }
    }

    #[test]
    fn hecke_identities_hold_over_extension_fields() {
        // same generator identities with F_9 coefficients
        let f9 = FieldContext::new(3, 2).unwrap();
        for r in [3usize, 6, 9] {
            let section = theta_quotient_times_power(&f9, r);
            assert!(hecke_t_plus(&f9, &section).is_zero(), "r={r}");
            let f = basis_element(&f9, &MatQ::identity(), &section).unwrap();
            let expected =
                basis_element(&f9, &MatQ::alpha(3), &SymmElement::monomial(&f9, r, r)).unwrap();
            assert_eq!(hecke_t(&f9, &f), expected, "r={r}");
        }
        // and T still commutes with translation
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let r = 5;
        let v = SymmElement::from_coeffs(
            &f9,
            (0..=r)
                .map(|_| f9.element(&[rng.gen_range(0..3), rng.gen_range(0..3)]))
                .collect(),
        );
        let f = basis_element(&f9, &MatQ::g0(3, 2), &v).unwrap();
        let g = MatQ::alpha(3).mul(&random_integral_unit_det(&mut rng));
        let lhs = hecke_t(&f9, &g_act(&f9, &g, &f).unwrap());
        let rhs = g_act(&f9, &g, &hecke_t(&f9, &f)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn integral_hecke_reduces_to_the_mod_p_hecke() {
        // over Z/p^2, (T f) mod p = T (f mod p)
        for p in [3u64, 5] {
            let z = ZModPrimePower::new(p, 2).unwrap();
            let field = fp(p);
            let mut rng = ChaCha8Rng::seed_from_u64(100 + p);
            for _ in 0..15 {
                let r = rng.gen_range(1..=5usize);
                let q = z.modulus();
                let v = SymmElement::from_coeffs(
                    &z,
                    (0..=r).map(|_| rng.gen_range(0..q)).collect(),
                );
                let g = MatQ::g0(p, rng.gen_range(0..p as i64));
                let f = basis_element(&z, &g, &v).unwrap();
                let lhs = reduce_induced_mod_p(&z, &field, &hecke_t(&z, &f));
                let rhs = hecke_t(&field, &reduce_induced_mod_p(&z, &field, &f));
                assert_eq!(lhs, rhs, "p={p}");
            }
        }
    }

    #[test]
    fn zero_element_lands_in_w() {
        let ring = fp(5);
        let zero = InducedElement::zero(7);
        assert!(image_in_w_check(&ring, 7, &zero).unwrap());
        assert!(matches!(
            image_in_w_check(&ring, 3, &InducedElement::zero(3)),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn random_hecke_images_land_in_w() {
        for p in [3u64, 5, 7] {
            let ring = fp(p);
            let mut rng = ChaCha8Rng::seed_from_u64(64 + p);
            for r in p as usize..=p as usize + 8 {
                let w = submodule_w(&ring, r);
                for _ in 0..10 {
                    let f = random_element(&ring, r, &mut rng);
                    assert!(hecke_image_lands_in(&ring, &f, &w), "p={p} r={r}");
                }
            }
        }
    }

    #[test]
    fn theta_section_generator_is_exact() {
        // T f for the theta section is literally the generator [alpha, y^r]
        let ring = fp(5);
        let r = 9;
        let f = basis_element(
            &ring,
            &MatQ::identity(),
            &theta_quotient_times_power(&ring, r),
        )
        .unwrap();
        assert!(image_in_w_check(&ring, r, &f).unwrap());
    }
}
