//! Semisimple 2-dimensional mod-p Galois labels and the explicit
//! dictionary onto smooth-side labels.
//!
//! An irreducible label is ind(omega_2^t) twisted by a character, where
//! omega_2 is a fixed niveau-2 fundamental character and t is prime to
//! p+1 modulo p^2 - 1; a reducible label is an unordered pair of
//! characters. Construction canonicalizes: omega powers of the twist are
//! absorbed into t, t is identified with pt (the conjugate fundamental
//! character), unramified twists with their negatives, and reducible
//! pairs are sorted.

use crate::error::{Error, Result};
use crate::fp_linear::ring::{CoeffRing, FieldContext, FqElem};
use crate::fp_linear::submodule::IrredLabel;

use super::labels::{bracket, normalize_smooth, CharLabel, SmoothRepLabel};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GaloisKind {
    Irreducible { t: usize, twist: CharLabel },
    Reducible { chars: [CharLabel; 2] },
}

/// A semisimple 2-dimensional mod-p Galois label; `inertia_only` marks
/// labels whose unramified data is undetermined rather than trivial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaloisRepLabel {
    kind: GaloisKind,
    inertia_only: bool,
}

impl GaloisRepLabel {
    /// ind(omega_2^t) twisted by `twist`; rejects t divisible by p+1.
    pub fn irreducible(field: &FieldContext, t: i64, twist: CharLabel) -> Result<Self> {
        let p = field.p() as i64;
        let niveau2 = (p * p - 1).max(1);
        // absorb the omega power of the twist into the exponent
        let t = (t + (p + 1) * twist.omega() as i64).rem_euclid(niveau2);
        if t % (p + 1) == 0 {
            return Err(Error::DomainError(format!(
                "exponent {t} is divisible by p+1: the induced label is not irreducible"
            )));
        }
        // conjugate fundamental character: t ~ p t
        let t = t.min((p * t).rem_euclid(niveau2)) as usize;
        // an unramified twist and its negative induce the same label
        let unram = twist.unram().map(|u| {
            let minus = field.neg(u);
            if minus < *u {
                minus
            } else {
                u.clone()
            }
        });
        let inertia_only = unram.is_none();
        Ok(GaloisRepLabel {
            kind: GaloisKind::Irreducible {
                t,
                twist: CharLabel::new(field, unram, 0)?,
            },
            inertia_only,
        })
    }

    /// ind(omega_2^t) with trivial unramified twist.
    pub fn irreducible_plain(field: &FieldContext, t: i64) -> Result<Self> {
        Self::irreducible(field, t, CharLabel::trivial(field))
    }

    /// ind(omega_2^t) determined on inertia only.
    pub fn irreducible_inertia_only(field: &FieldContext, t: i64) -> Result<Self> {
        Self::irreducible(field, t, CharLabel::inertia_only(field, 0))
    }

    /// A sum of two characters, sorted into a canonical order.
    pub fn reducible(c1: CharLabel, c2: CharLabel) -> Self {
        let inertia_only = !c1.is_determined() || !c2.is_determined();
        let chars = if c1 <= c2 { [c1, c2] } else { [c2, c1] };
        GaloisRepLabel {
            kind: GaloisKind::Reducible { chars },
            inertia_only,
        }
    }

    pub fn kind(&self) -> &GaloisKind {
        &self.kind
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.kind, GaloisKind::Irreducible { .. })
    }

    pub fn inertia_only(&self) -> bool {
        self.inertia_only
    }

    /// The pair of niveau-2 inertia exponents {t, pt} of an irreducible
    /// label, sorted; `None` for reducible labels.
    pub fn inertia_niveau2_exponents(&self, field: &FieldContext) -> Option<[usize; 2]> {
        match &self.kind {
            GaloisKind::Irreducible { t, .. } => {
                let p = field.p() as usize;
                let niveau2 = p * p - 1;
                let other = (t * p) % niveau2;
                let mut pair = [*t, other];
                pair.sort_unstable();
                Some(pair)
            }
            GaloisKind::Reducible { .. } => None,
        }
    }

    /// Twist by omega^e: shifts t by (p+1) e on the irreducible side and
    /// both characters on the reducible side.
    pub fn twist_omega(&self, field: &FieldContext, e: i64) -> Result<Self> {
        match &self.kind {
            GaloisKind::Irreducible { t, twist } => {
                let p = field.p() as i64;
                GaloisRepLabel::irreducible(field, *t as i64 + (p + 1) * e, twist.clone())
            }
            GaloisKind::Reducible { chars } => Ok(GaloisRepLabel::reducible(
                chars[0].twist_omega(field, e),
                chars[1].twist_omega(field, e),
            )),
        }
    }

    pub fn describe(&self, field: &FieldContext) -> String {
        match &self.kind {
            GaloisKind::Irreducible { t, twist } => {
                let base = format!("ind(omega_2^{t})");
                match twist.unram() {
                    None => format!(
                        "{base} on inertia (unramified part undetermined); inertia = omega_2^{} + omega_2^{}",
                        self.inertia_niveau2_exponents(field).unwrap()[0],
                        self.inertia_niveau2_exponents(field).unwrap()[1]
                    ),
                    Some(u) if *u == field.one() => base,
                    Some(u) => format!(
                        "{base} (x) mu_{}",
                        super::labels::render_fq(field, u)
                    ),
                }
            }
            GaloisKind::Reducible { chars } => {
                let tail = if self.inertia_only {
                    " (unramified parts undetermined)"
                } else {
                    ""
                };
                format!(
                    "{} (+) {}{tail}",
                    chars[0].describe(field),
                    chars[1].describe(field)
                )
            }
        }
    }
}

/// The dictionary, Galois side to smooth side. Irreducible labels map to
/// a single supersingular factor, reducible ones to a matched pair of
/// semisimplified labels; the output multiset is sorted and normalized.
pub fn ll_map(field: &FieldContext, galois: &GaloisRepLabel) -> Result<Vec<SmoothRepLabel>> {
    if galois.inertia_only() {
        return Err(Error::OutsideDictionary(
            "undetermined unramified parts cannot be mapped".into(),
        ));
    }
    let p = field.p() as usize;
    match galois.kind() {
        GaloisKind::Irreducible { t, twist } => {
            // t = (r+1) + (p+1) e with 1 <= r+1 <= p
            let rem = t % (p + 1);
            debug_assert!(rem >= 1);
            let r = rem - 1;
            let e = ((t - rem) / (p + 1)) as i64;
            let chi = twist.twist_omega(field, e);
            let label = SmoothRepLabel::new(field, r, field.zero(), chi)?;
            Ok(vec![normalize_smooth(field, &label)])
        }
        GaloisKind::Reducible { chars } => {
            let (xi1, xi2) = (&chars[0], &chars[1]);
            let l1 = xi1.unram().expect("determined").clone();
            let l2 = xi2.unram().expect("determined").clone();
            // write the pair as (mu_lambda omega^{r+1} chi, mu_{1/lambda} chi):
            // the unramified part c of chi satisfies c^2 = l1 l2
            let product = field.mul(&l1, &l2);
            let c = sqrt_in_field(field, &product).ok_or_else(|| {
                Error::OutsideDictionary(
                    "unramified parts have no square root in the coefficient field".into(),
                )
            })?;
            let lambda = field.mul(&l1, &field.inv(&c).expect("nonzero"));
            let r = bracket(xi1.omega() as i64 - xi2.omega() as i64 - 1, field.p());
            let chi = CharLabel::new(field, Some(c), xi2.omega() as i64)?;
            let first = SmoothRepLabel::new(field, r, lambda.clone(), chi.clone())?;
            let second = SmoothRepLabel::new(
                field,
                bracket(p as i64 - 3 - r as i64, field.p()),
                field.inv(&lambda).expect("nonzero"),
                chi.twist_omega(field, r as i64 + 1),
            )?;
            let mut out = vec![
                normalize_smooth(field, &first),
                normalize_smooth(field, &second),
            ];
            out.sort();
            Ok(out)
        }
    }
}

fn sqrt_in_field(field: &FieldContext, a: &FqElem) -> Option<FqElem> {
    // desk-scale search; roots come in +- pairs, keep the smaller
    field
        .all_elements()
        .into_iter()
        .find(|x| field.mul(x, x) == *a)
        .map(|x| {
            let minus = field.neg(&x);
            if minus < x {
                minus
            } else {
                x
            }
        })
}

/// The dictionary read right to left: a single supersingular factor or a
/// matched semisimplified pair. Inputs outside the image are rejected.
pub fn ll_inverse(
    field: &FieldContext,
    factors: &[SmoothRepLabel],
) -> Result<GaloisRepLabel> {
    let p = field.p();
    let mut sorted: Vec<SmoothRepLabel> =
        factors.iter().map(|f| normalize_smooth(field, f)).collect();
    sorted.sort();
    match sorted.as_slice() {
        [single] => {
            if !single.is_supersingular(field) {
                return Err(Error::NotInImage(
                    "a lone factor must be supersingular".into(),
                ));
            }
            let chi = single.twist();
            let t = (single.r() as i64 + 1) + (p as i64 + 1) * chi.omega() as i64;
            GaloisRepLabel::irreducible(
                field,
                t,
                CharLabel::new(field, chi.unram().cloned(), 0)?,
            )
        }
        [a, b] => {
            for factor in [a, b] {
                if factor.is_supersingular(field) {
                    return Err(Error::NotInImage(
                        "a supersingular factor cannot be paired".into(),
                    ));
                }
                let chi = factor.twist();
                let xi1 = chi
                    .mul_unram(field, factor.lambda())
                    .twist_omega(field, factor.r() as i64 + 1);
                let xi2 = chi.mul_unram(field, &field.inv(factor.lambda()).expect("nonzero"));
                let candidate = GaloisRepLabel::reducible(xi1, xi2);
                if ll_map(field, &candidate)? == sorted {
                    return Ok(candidate);
                }
            }
            Err(Error::NotInImage("factors are not a matched pair".into()))
        }
        _ => Err(Error::NotInImage(format!(
            "expected one or two factors, got {}",
            sorted.len()
        ))),
    }
}

/// Candidates for a semisimple label admitting a surjection from the
/// induction of the irreducible det^n tensor Symm^s: the induced label
/// ind(omega_2^{s+1+(p+1)n}) always, and additionally a reducible label
/// that is omega^n + omega^n on inertia exactly when s = p-2.
/// Undefined for p = 2.
pub fn eliminate(field: &FieldContext, label: IrredLabel) -> Result<Vec<GaloisRepLabel>> {
    let p = field.p();
    if p == 2 {
        return Err(Error::DomainError(
            "the elimination step is vacuous for p = 2".into(),
        ));
    }
    let IrredLabel { s, n } = label;
    if s >= p as usize || n + 1 >= p as usize {
        return Err(Error::DomainError(format!(
            "label (s, n) = ({s}, {n}) out of range for p = {p}"
        )));
    }
    let t = s as i64 + 1 + (p as i64 + 1) * n as i64;
    let mut out = vec![GaloisRepLabel::irreducible_plain(field, t)?];
    if s == p as usize - 2 {
        out.push(GaloisRepLabel::reducible(
            CharLabel::inertia_only(field, n as i64),
            CharLabel::inertia_only(field, n as i64),
        ));
    }
    out.sort();
    Ok(out)
}
