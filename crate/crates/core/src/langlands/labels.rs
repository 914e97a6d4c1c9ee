//! Symbolic labels for smooth mod-p representations of GL_2(Q_p).
//!
//! pi(r, lambda, chi) denotes the cokernel of T - lambda on the compact
//! induction of the degree-r forms, twisted by chi composed with det.
//! The labels here record (r, lambda, chi) together with the finite list
//! of identifications between them, and expose Jordan-Hoelder multisets.
//! Canonical forms are normalized so that two labels are equal exactly
//! when the semisimplifications they name are isomorphic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fp_linear::ring::{CoeffRing, FieldContext, FqElem};

/// The representative of n modulo p-1 lying in [0, p-2] (0 when p = 2).
///
/// ```
/// use modp_langlands::langlands::bracket;
/// assert_eq!(bracket(12, 5), 0);
/// assert_eq!(bracket(-1, 7), 5);
/// ```
pub fn bracket(n: i64, p: u64) -> usize {
    let order = (p as i64 - 1).max(1);
    n.rem_euclid(order) as usize
}

/// A character of Q_p^*: an unramified part sending p to a nonzero field
/// element (or left undetermined) times a power of the mod-p cyclotomic
/// character omega.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharLabel {
    unram: Option<FqElem>,
    omega: usize,
}

impl CharLabel {
    pub fn new(field: &FieldContext, unram: Option<FqElem>, omega: i64) -> Result<Self> {
        if let Some(u) = &unram {
            if field.is_zero(u) {
                return Err(Error::DomainError(
                    "unramified character value must be nonzero".into(),
                ));
            }
        }
        Ok(CharLabel {
            unram,
            omega: bracket(omega, field.p()),
        })
    }

    /// The trivial character.
    pub fn trivial(field: &FieldContext) -> Self {
        CharLabel {
            unram: Some(field.one()),
            omega: 0,
        }
    }

    /// omega^e with trivial unramified part.
    pub fn omega_power(field: &FieldContext, e: i64) -> Self {
        CharLabel {
            unram: Some(field.one()),
            omega: bracket(e, field.p()),
        }
    }

    /// A character determined only on inertia: omega^e with the
    /// unramified part left undetermined.
    pub fn inertia_only(field: &FieldContext, e: i64) -> Self {
        CharLabel {
            unram: None,
            omega: bracket(e, field.p()),
        }
    }

    /// The unramified character sending p to `value`.
    pub fn unramified(field: &FieldContext, value: FqElem) -> Result<Self> {
        Self::new(field, Some(value), 0)
    }

    pub fn unram(&self) -> Option<&FqElem> {
        self.unram.as_ref()
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn is_determined(&self) -> bool {
        self.unram.is_some()
    }

    /// Product of characters; an undetermined unramified part absorbs the
    /// other factor's.
    pub fn mul(&self, field: &FieldContext, other: &CharLabel) -> CharLabel {
        let unram = match (&self.unram, &other.unram) {
            (Some(a), Some(b)) => Some(field.mul(a, b)),
            _ => None,
        };
        CharLabel {
            unram,
            omega: bracket((self.omega + other.omega) as i64, field.p()),
        }
    }

    /// Multiply the unramified part by a fixed nonzero value.
    pub fn mul_unram(&self, field: &FieldContext, value: &FqElem) -> CharLabel {
        CharLabel {
            unram: self.unram.as_ref().map(|u| field.mul(u, value)),
            omega: self.omega,
        }
    }

    /// Twist by omega^e.
    pub fn twist_omega(&self, field: &FieldContext, e: i64) -> CharLabel {
        CharLabel {
            unram: self.unram.clone(),
            omega: bracket(self.omega as i64 + e, field.p()),
        }
    }

    /// Twist by the unramified character mu_{-1}.
    pub fn mul_minus_one(&self, field: &FieldContext) -> CharLabel {
        self.mul_unram(field, &field.from_int(-1))
    }

    /// Whether self / other is unramified.
    pub fn ratio_is_unramified(&self, other: &CharLabel) -> bool {
        self.omega == other.omega
    }

    pub fn describe(&self, field: &FieldContext) -> String {
        let unram = match &self.unram {
            Some(u) => format!("mu_{}", render_fq(field, u)),
            None => "mu_?".to_string(),
        };
        match self.omega {
            0 => unram,
            1 => format!("{unram} omega"),
            e => format!("{unram} omega^{e}"),
        }
    }
}

pub(crate) fn render_fq(field: &FieldContext, a: &FqElem) -> String {
    match field.to_prime_subfield(a) {
        Some(n) => n.to_string(),
        None => {
            let terms: Vec<String> = a
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| match i {
                    0 => c.to_string(),
                    1 => format!("{c}u"),
                    _ => format!("{c}u^{i}"),
                })
                .collect();
            format!("({})", terms.join("+"))
        }
    }
}

/// The label pi(r, lambda, chi) with 0 <= r <= p-1, lambda a field element
/// (zero in the supersingular case) and chi a determined character.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmoothRepLabel {
    r: usize,
    lambda: FqElem,
    twist: CharLabel,
}

impl SmoothRepLabel {
    pub fn new(field: &FieldContext, r: usize, lambda: FqElem, twist: CharLabel) -> Result<Self> {
        if r >= field.p() as usize {
            return Err(Error::DomainError(format!(
                "r = {r} outside [0, p-1] for p = {}",
                field.p()
            )));
        }
        if !twist.is_determined() {
            return Err(Error::DomainError(
                "smooth labels need a determined twist".into(),
            ));
        }
        Ok(SmoothRepLabel { r, lambda, twist })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn lambda(&self) -> &FqElem {
        &self.lambda
    }

    pub fn twist(&self) -> &CharLabel {
        &self.twist
    }

    pub fn is_supersingular(&self, field: &FieldContext) -> bool {
        field.is_zero(&self.lambda)
    }

    /// Twist the whole label by omega^e composed with det.
    pub fn twist_omega(&self, field: &FieldContext, e: i64) -> SmoothRepLabel {
        SmoothRepLabel {
            r: self.r,
            lambda: self.lambda.clone(),
            twist: self.twist.twist_omega(field, e),
        }
    }

    pub fn describe(&self, field: &FieldContext) -> String {
        format!(
            "pi({}, {}, {})",
            self.r,
            render_fq(field, &self.lambda),
            self.twist.describe(field)
        )
    }
}

/// The full equivalence orbit of a label under the classification's
/// identifications, read at the level of semisimplifications:
/// (r, lambda, chi) ~ (r, -lambda, chi mu_{-1}) for lambda != 0,
/// (0, lambda, chi) ~ (p-1, lambda, chi) for lambda != 0, and
/// (r, 0, chi) ~ (p-1-r, 0, chi omega^r) with the mu_{-1} twist.
fn orbit(field: &FieldContext, label: &SmoothRepLabel) -> BTreeSet<SmoothRepLabel> {
    let p = field.p() as usize;
    let mut set = BTreeSet::new();
    let mut queue = vec![label.clone()];
    while let Some(l) = queue.pop() {
        if !set.insert(l.clone()) {
            continue;
        }
        if field.is_zero(&l.lambda) {
            queue.push(SmoothRepLabel {
                r: l.r,
                lambda: l.lambda.clone(),
                twist: l.twist.mul_minus_one(field),
            });
            queue.push(SmoothRepLabel {
                r: p - 1 - l.r,
                lambda: l.lambda.clone(),
                twist: l.twist.twist_omega(field, l.r as i64),
            });
        } else {
            queue.push(SmoothRepLabel {
                r: l.r,
                lambda: field.neg(&l.lambda),
                twist: l.twist.mul_minus_one(field),
            });
            if l.r == 0 || l.r == p - 1 {
                queue.push(SmoothRepLabel {
                    r: p - 1 - l.r,
                    lambda: l.lambda.clone(),
                    twist: l.twist.clone(),
                });
            }
        }
    }
    set
}

/// Canonical form: the minimum of the identification orbit under the
/// lexicographic order on (r, lambda, twist). Two labels have equal
/// canonical forms exactly when their semisimplifications agree.
pub fn normalize_smooth(field: &FieldContext, label: &SmoothRepLabel) -> SmoothRepLabel {
    orbit(field, label)
        .into_iter()
        .next()
        .expect("orbit contains the label itself")
}

/// An irreducible constituent of some pi(r, lambda, chi).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorLabel {
    /// The character chi mu_lambda composed with det.
    Character(CharLabel),
    /// The Steinberg representation twisted by chi mu_lambda.
    SteinbergTwist(CharLabel),
    /// An irreducible pi(r, lambda, chi) with lambda != 0.
    PrincipalSeries(SmoothRepLabel),
    /// An irreducible pi(r, 0, chi).
    Supersingular(SmoothRepLabel),
}

/// Jordan-Hoelder factors with multiplicity, sorted canonically.
///
/// lambda = 0 gives a single supersingular factor; lambda != 0 with
/// (r, lambda) different from (0, +-1) and (p-1, +-1) a single irreducible
/// factor; and the four special labels split as a character plus a twist
/// of Steinberg. The factors of the r = 0 and r = p-1 labels coincide
/// even at lambda = +-1.
pub fn jh_factors(field: &FieldContext, label: &SmoothRepLabel) -> Vec<FactorLabel> {
    let p = field.p() as usize;
    let norm = normalize_smooth(field, label);
    if field.is_zero(&norm.lambda) {
        return vec![FactorLabel::Supersingular(norm)];
    }
    let one = field.one();
    let minus_one = field.from_int(-1);
    let special =
        (norm.r == 0 || norm.r == p - 1) && (norm.lambda == one || norm.lambda == minus_one);
    if special {
        let central = norm.twist.mul_unram(field, &norm.lambda);
        let mut out = vec![
            FactorLabel::Character(central.clone()),
            FactorLabel::SteinbergTwist(central),
        ];
        out.sort();
        return out;
    }
    vec![FactorLabel::PrincipalSeries(norm)]
}

/// The necessary conditions for pi(r, lambda, chi) and pi(r', lambda', chi')
/// to share a Jordan-Hoelder factor, given lambda != 0: lambda' != 0,
/// r = r' mod p-1, and chi / chi' unramified.
pub fn jh_compatible(
    field: &FieldContext,
    a: &SmoothRepLabel,
    b: &SmoothRepLabel,
) -> Result<bool> {
    if field.is_zero(&a.lambda) {
        return Err(Error::DomainError(
            "the compatibility criterion assumes lambda != 0 on the left".into(),
        ));
    }
    let order = (field.p() as usize - 1).max(1);
    Ok(!field.is_zero(&b.lambda)
        && a.r % order == b.r % order
        && a.twist.ratio_is_unramified(&b.twist))
}
