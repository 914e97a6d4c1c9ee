//! Subrepresentations of the degree-r forms under GL_2(F_p): spinning up
//! the span of a generating set, stable quotients, and identification of
//! irreducible constituents by their Borel characters.

use super::ring::{mat_from_ints, CoeffField, CoeffRing, FieldContext, Mat2};
use super::symm::{act_gl2, theta_bar_multiply, SymmElement};
use crate::error::{Error, Result};

/// Reduced row echelon basis, pivot columns strictly increasing. The pivot
/// order follows the monomial order x^r, x^{r-1} y, ..., y^r, so equal
/// subspaces have identical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<F: CoeffField> {
    cols: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: CoeffField> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F::Elem]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Residual of v after eliminating every pivot coordinate.
    pub fn reduce(&self, ring: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            if !ring.is_zero(&v[*piv]) {
                let c = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = ring.sub(x, &ring.mul(&c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, ring: &F, v: &[F::Elem]) -> bool {
        self.reduce(ring, v).iter().all(|c| ring.is_zero(c))
    }

    /// Insert v if independent; returns the normalized new row on success.
    pub fn insert(&mut self, ring: &F, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let red = self.reduce(ring, v);
        let piv = red.iter().position(|c| !ring.is_zero(c))?;
        let inv = ring.inv(&red[piv]).expect("nonzero field element");
        let norm: Vec<F::Elem> = red.iter().map(|c| ring.mul(c, &inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if !ring.is_zero(&row[piv]) {
                let c = row[piv].clone();
                for (x, y) in row.iter_mut().zip(&norm) {
                    *x = ring.sub(x, &ring.mul(&c, y));
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(at, (piv, norm.clone()));
        Some(norm)
    }
}

/// Label (s, n) of the irreducible det^n tensor Symm^s, with
/// 0 <= s <= p-1 and 0 <= n <= p-2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IrredLabel {
    pub s: usize,
    pub n: usize,
}

/// A GL_2(F_p)-stable subspace of the degree-r forms, held as a reduced
/// echelon basis, with an optional determinant-twist marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSubmodule<F: CoeffField> {
    ambient_degree: usize,
    twist: Option<usize>,
    ech: Echelon<F>,
}

impl<F: CoeffField> KSubmodule<F> {
    pub fn ambient_degree(&self) -> usize {
        self.ambient_degree
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn twist(&self) -> Option<usize> {
        self.twist
    }

    pub fn echelon(&self) -> &Echelon<F> {
        &self.ech
    }

    pub fn contains(&self, ring: &F, v: &SymmElement<F>) -> bool {
        v.degree() == self.ambient_degree && self.ech.contains(ring, v.coeffs())
    }

    pub fn basis(&self, ring: &F) -> Vec<SymmElement<F>> {
        self.ech
            .rows()
            .map(|r| SymmElement::from_coeffs(ring, r.to_vec()))
            .collect()
    }
}

/// The three standard generators of GL_2(F_p): diag(g, 1) for the smallest
/// generator g of F_p^*, the upper unipotent, and the Weyl element.
pub fn standard_generators(ring: &FieldContext) -> [Mat2<<FieldContext as CoeffRing>::Elem>; 3] {
    let g = ring.multiplicative_generator() as i64;
    [
        mat_from_ints(ring, g, 0, 0, 1),
        mat_from_ints(ring, 1, 1, 0, 1),
        mat_from_ints(ring, 0, 1, 1, 0),
    ]
}

/// Smallest GL_2(F_p)-stable subspace containing the generators; closure
/// under the three standard generators suffices. An empty generating set
/// yields the zero submodule of the stated ambient degree.
pub fn spin(
    ring: &FieldContext,
    ambient_degree: usize,
    generators: &[SymmElement<FieldContext>],
    twist: Option<usize>,
) -> KSubmodule<FieldContext> {
    for g in generators {
        assert_eq!(g.degree(), ambient_degree, "generator degree mismatch");
    }
    let gens = standard_generators(ring);
    let mut ech = Echelon::new(ambient_degree + 1);
    let mut queue: Vec<Vec<<FieldContext as CoeffRing>::Elem>> =
        generators.iter().map(|v| v.coeffs().to_vec()).collect();
    while let Some(v) = queue.pop() {
        if let Some(row) = ech.insert(ring, &v) {
            let form = SymmElement::from_coeffs(ring, row);
            for g in &gens {
                let image = act_gl2(ring, g, &form).expect("standard generators are invertible");
                queue.push(image.coeffs().to_vec());
            }
        }
    }
    KSubmodule {
        ambient_degree,
        twist: twist.map(|n| n % (ring.p().max(2) as usize - 1).max(1)),
        ech,
    }
}

/// Whether the subspace is stable under all three standard generators.
pub fn is_stable(ring: &FieldContext, sub: &KSubmodule<FieldContext>) -> bool {
    let gens = standard_generators(ring);
    sub.basis(ring).iter().all(|v| {
        gens.iter().all(|g| {
            let image = act_gl2(ring, g, v).expect("standard generators are invertible");
            sub.contains(ring, &image)
        })
    })
}

/// The submodule of degree-r forms generated by y^r. Full for r <= p-1;
/// contains x^r for every r.
pub fn submodule_w(ring: &FieldContext, r: usize) -> KSubmodule<FieldContext> {
    spin(ring, r, &[SymmElement::monomial(ring, r, r)], None)
}

/// The submodule generated by y^r together with theta-bar times every
/// monomial of degree r - (p+1). Requires r >= p+1.
pub fn submodule_y(ring: &FieldContext, r: usize) -> Result<KSubmodule<FieldContext>> {
    let p = ring.p() as usize;
    if r < p + 1 {
        return Err(Error::DomainError(format!(
            "degree r = {r} must be at least p+1 = {}",
            p + 1
        )));
    }
    let lower = r - (p + 1);
    let mut gens: Vec<SymmElement<FieldContext>> = (0..=lower)
        .map(|i| theta_bar_multiply(ring, &SymmElement::monomial(ring, lower, i)))
        .collect();
    gens.push(SymmElement::monomial(ring, r, r));
    Ok(spin(ring, r, &gens, None))
}

/// A finite-dimensional representation of GL_2(F_p) presented by the
/// matrices of the three standard generators, columns = images of basis
/// vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep<F: CoeffField> {
    p: u64,
    dim: usize,
    // cols[j][i] = i-th coordinate of the image of e_j
    torus: Vec<Vec<F::Elem>>,
    unipotent: Vec<Vec<F::Elem>>,
    weyl: Vec<Vec<F::Elem>>,
}

impl<F: CoeffField> MatrixRep<F> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn apply(&self, ring: &F, cols: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![ring.zero(); self.dim];
        for (j, c) in v.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            for i in 0..self.dim {
                out[i] = ring.add(&out[i], &ring.mul(c, &cols[j][i]));
            }
        }
        out
    }

    pub fn apply_torus(&self, ring: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        self.apply(ring, &self.torus, v)
    }

    pub fn apply_unipotent(&self, ring: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        self.apply(ring, &self.unipotent, v)
    }

    pub fn apply_weyl(&self, ring: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        self.apply(ring, &self.weyl, v)
    }
}

impl MatrixRep<FieldContext> {
    /// The representation det^n tensor Symm^s presented by its own action
    /// matrices.
    pub fn sigma(ring: &FieldContext, s: usize, n: usize) -> Self {
        let gens = standard_generators(ring);
        let dets: Vec<_> = gens
            .iter()
            .map(|g| super::ring::mat_det(ring, g))
            .collect();
        let mut mats: Vec<Vec<Vec<<FieldContext as CoeffRing>::Elem>>> = Vec::new();
        for (g, det) in gens.iter().zip(&dets) {
            let twist = ring.pow(det, n as u64);
            let cols = (0..=s)
                .map(|j| {
                    let image = act_gl2(ring, g, &SymmElement::monomial(ring, s, j))
                        .expect("standard generators are invertible");
                    image.coeffs().iter().map(|c| ring.mul(c, &twist)).collect()
                })
                .collect();
            mats.push(cols);
        }
        let weyl = mats.pop().unwrap();
        let unipotent = mats.pop().unwrap();
        let torus = mats.pop().unwrap();
        MatrixRep {
            p: ring.p(),
            dim: s + 1,
            torus,
            unipotent,
            weyl,
        }
    }
}

/// Quotient of the degree-r forms by a stable submodule, with the induced
/// action presented on the classes of the non-pivot monomials.
pub fn quotient(
    ring: &FieldContext,
    ambient_degree: usize,
    sub: &KSubmodule<FieldContext>,
) -> Result<MatrixRep<FieldContext>> {
    if sub.ambient_degree() != ambient_degree {
        return Err(Error::DegreeMismatch(format!(
            "submodule lives in degree {}, ambient degree is {ambient_degree}",
            sub.ambient_degree()
        )));
    }
    if !is_stable(ring, sub) {
        return Err(Error::UnstableSubmodule);
    }
    let pivots = sub.echelon().pivots();
    let free: Vec<usize> = (0..=ambient_degree)
        .filter(|j| !pivots.contains(j))
        .collect();
    let dim = free.len();
    let gens = standard_generators(ring);
    let mut mats: Vec<Vec<Vec<<FieldContext as CoeffRing>::Elem>>> = Vec::new();
    for g in &gens {
        let cols = free
            .iter()
            .map(|&j| {
                let image = act_gl2(ring, g, &SymmElement::monomial(ring, ambient_degree, j))
                    .expect("standard generators are invertible");
                let residual = sub.echelon().reduce(ring, image.coeffs());
                free.iter().map(|&i| residual[i].clone()).collect()
            })
            .collect();
        mats.push(cols);
    }
    let weyl = mats.pop().unwrap();
    let unipotent = mats.pop().unwrap();
    let torus = mats.pop().unwrap();
    Ok(MatrixRep {
        p: ring.p(),
        dim,
        torus,
        unipotent,
        weyl,
    })
}

/// Identify an irreducible representation as some det^n tensor Symm^s.
///
/// The unipotent-fixed subspace must be a line that generates the whole
/// space; on that line diag(a, 1) acts by a^{s+n} and diag(1, d) by d^n,
/// and the exponents are read off from the fixed generator of F_p^*.
pub fn identify_irreducible(
    ring: &FieldContext,
    rep: &MatrixRep<FieldContext>,
) -> Result<IrredLabel> {
    let p = ring.p() as usize;
    let dim = rep.dim();
    if dim == 0 || dim > p {
        return Err(Error::NotIrreducible);
    }
    // kernel of (unipotent - identity)
    let fixed = unipotent_fixed_space(ring, rep);
    if fixed.len() != 1 {
        return Err(Error::NotIrreducible);
    }
    let v0 = &fixed[0];
    // the fixed line must generate everything
    if spin_matrix_rep(ring, rep, v0) != dim {
        return Err(Error::NotIrreducible);
    }
    let c1 = eigenvalue_on_line(ring, v0, &rep.apply_torus(ring, v0))?;
    // diag(1, g) = weyl . diag(g, 1) . weyl
    let wtw = rep.apply_weyl(ring, &rep.apply_torus(ring, &rep.apply_weyl(ring, v0)));
    let c2 = eigenvalue_on_line(ring, v0, &wtw)?;
    let s = dim - 1;
    let n = ring.dlog(&c2).ok_or(Error::NotIrreducible)? as usize;
    let e1 = ring.dlog(&c1).ok_or(Error::NotIrreducible)? as usize;
    let order = (p - 1).max(1);
    if (s + n) % order != e1 % order {
        return Err(Error::NotIrreducible);
    }
    Ok(IrredLabel { s, n })
}

fn unipotent_fixed_space(
    ring: &FieldContext,
    rep: &MatrixRep<FieldContext>,
) -> Vec<Vec<<FieldContext as CoeffRing>::Elem>> {
    let dim = rep.dim();
    // rows of (U - I) as equations
    let mut ech = Echelon::<FieldContext>::new(dim);
    for i in 0..dim {
        let row: Vec<_> = (0..dim)
            .map(|j| {
                let u = rep.unipotent[j][i].clone();
                if i == j {
                    ring.sub(&u, &ring.one())
                } else {
                    u
                }
            })
            .collect();
        ech.insert(ring, &row);
    }
    // free columns give the kernel basis
    let pivots = ech.pivots();
    let rows: Vec<Vec<_>> = ech.rows().map(|r| r.to_vec()).collect();
    let mut basis = Vec::new();
    for j in 0..dim {
        if pivots.contains(&j) {
            continue;
        }
        let mut v = vec![ring.zero(); dim];
        v[j] = ring.one();
        for (piv, row) in pivots.iter().zip(&rows) {
            v[*piv] = ring.neg(&row[j]);
        }
        basis.push(v);
    }
    basis
}

fn spin_matrix_rep(
    ring: &FieldContext,
    rep: &MatrixRep<FieldContext>,
    v: &[<FieldContext as CoeffRing>::Elem],
) -> usize {
    let mut ech = Echelon::<FieldContext>::new(rep.dim());
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if let Some(row) = ech.insert(ring, &w) {
            queue.push(rep.apply_torus(ring, &row));
            queue.push(rep.apply_unipotent(ring, &row));
            queue.push(rep.apply_weyl(ring, &row));
        }
    }
    ech.rank()
}

fn eigenvalue_on_line(
    ring: &FieldContext,
    v: &[<FieldContext as CoeffRing>::Elem],
    image: &[<FieldContext as CoeffRing>::Elem],
) -> Result<<FieldContext as CoeffRing>::Elem> {
    let i = v
        .iter()
        .position(|c| !ring.is_zero(c))
        .ok_or(Error::NotIrreducible)?;
    let c = ring.mul(&image[i], &ring.inv(&v[i]).expect("nonzero field element"));
    for (a, b) in v.iter().zip(image) {
        if ring.sub(b, &ring.mul(&c, a)) != ring.zero() {
            return Err(Error::NotIrreducible);
        }
    }
    Ok(c)
}
