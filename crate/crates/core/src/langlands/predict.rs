//! Closed-form prediction of the semisimplified mod-p reduction of a
//! 2-dimensional crystalline representation attached to (k, a_p), and an
//! independent derivation of the same answer from finite module
//! computations.
//!
//! The prediction dispatches on the slope v(a_p): slope zero is the
//! ordinary (reducible) case; positive slope with 2 <= k <= p+1 is
//! irreducible with known inertia; slope strictly between 0 and 1 with
//! k >= p+2 is ind(omega_2^{[k-2]+1}) except that weights congruent to 3
//! mod p-1 admit a second, reducible possibility that no known local
//! criterion excludes. The derivation recomputes the candidate set for a
//! given (p, k) by actually constructing the relevant quotient of the
//! degree-(k-2) forms and identifying it.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fp_linear::ring::{CoeffRing, FieldContext, FqElem};
use crate::fp_linear::submodule::{identify_irreducible, quotient, submodule_y, IrredLabel};

use super::dictionary::{eliminate, GaloisRepLabel};
use super::labels::{bracket, CharLabel};

pub type Slope = Ratio<i64>;

/// The local data (k, a_p, psi(p)) of a crystalline representation:
/// weight, slope, and the residues needed by the ordinary branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystallineParams {
    pub k: u64,
    pub ap_valuation: Slope,
    /// Unit residue of a_p; required exactly when the valuation is 0.
    pub ap_residue: Option<FqElem>,
    /// Unit residue of psi(p); defaults to 1.
    pub psi_p_residue: Option<FqElem>,
}

impl CrystallineParams {
    pub fn new(
        field: &FieldContext,
        k: u64,
        ap_valuation: Slope,
        ap_residue: Option<FqElem>,
        psi_p_residue: Option<FqElem>,
    ) -> Result<Self> {
        if k < 2 {
            return Err(Error::DomainError("weight k must be at least 2".into()));
        }
        if ap_valuation < Slope::new(0, 1) {
            return Err(Error::DomainError("v(a_p) must be nonnegative".into()));
        }
        for r in [&ap_residue, &psi_p_residue].into_iter().flatten() {
            if field.is_zero(r) {
                return Err(Error::DomainError("residues must be units".into()));
            }
        }
        Ok(CrystallineParams {
            k,
            ap_valuation,
            ap_residue,
            psi_p_residue,
        })
    }
}

/// Which case of the reduction theorems produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// v(a_p) = 0: reducible, both characters explicit.
    Ordinary,
    /// v(a_p) > 0 and 2 <= k <= p+1: irreducible, known on inertia.
    SmallWeightNonOrdinary,
    /// 0 < v(a_p) < 1, k >= p+2, k not congruent to 3 mod p-1.
    FractionalSlopeGeneric,
    /// 0 < v(a_p) < 1, k = 3 mod p-1: two possibilities remain.
    FractionalSlopeAmbiguous,
    /// 0 < v(a_p) < 1, k = p+2: the reducible option is excluded.
    FractionalSlopeWeightPPlus2,
    /// p = 2: the fractional-slope statement carries no information.
    VacuousModTwo,
}

impl Branch {
    pub fn description(self) -> &'static str {
        match self {
            Branch::Ordinary => "ordinary: v(a_p) = 0, reducible with explicit characters",
            Branch::SmallWeightNonOrdinary => {
                "non-ordinary small weight: 2 <= k <= p+1, irreducible with inertia omega_2^{k-1} + omega_2^{p(k-1)}"
            }
            Branch::FractionalSlopeGeneric => {
                "fractional slope: 0 < v(a_p) < 1, irreducible ind(omega_2^{[k-2]+1})"
            }
            Branch::FractionalSlopeAmbiguous => {
                "fractional slope with k = 3 mod p-1: irreducible ind(omega_2^{[k-2]+1}) or reducible with inertia omega + omega"
            }
            Branch::FractionalSlopeWeightPPlus2 => {
                "fractional slope at k = p+2: the reducible possibility cannot occur"
            }
            Branch::VacuousModTwo => {
                "p = 2: every semisimple label is irreducible or scalar on inertia, statement vacuous"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Determined(GaloisRepLabel),
    Ambiguous {
        irreducible: GaloisRepLabel,
        reducible: GaloisRepLabel,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictionResult {
    pub outcome: Outcome,
    pub branch: Branch,
    pub notes: Vec<String>,
}

impl PredictionResult {
    /// The candidate set, sorted.
    pub fn candidates(&self) -> Vec<GaloisRepLabel> {
        match &self.outcome {
            Outcome::Determined(l) => vec![l.clone()],
            Outcome::Ambiguous {
                irreducible,
                reducible,
            } => {
                let mut v = vec![irreducible.clone(), reducible.clone()];
                v.sort();
                v
            }
        }
    }
}

/// Predict the semisimplified reduction from (k, a_p, psi(p)).
pub fn predict_reduction(
    field: &FieldContext,
    params: &CrystallineParams,
) -> Result<PredictionResult> {
    let p = field.p();
    let k = params.k;
    if k < 2 {
        return Err(Error::DomainError("weight k must be at least 2".into()));
    }
    let zero = Slope::new(0, 1);
    let one = Slope::new(1, 1);
    if params.ap_valuation == zero {
        // unit a_p: mu_{1/a} + omega^{[k-1]} mu_{a/psi}
        let a = params.ap_residue.clone().ok_or(Error::ResidueRequired)?;
        let psi = params
            .psi_p_residue
            .clone()
            .unwrap_or_else(|| field.one());
        let first = CharLabel::unramified(field, field.inv(&a).expect("unit residue"))?;
        let second = CharLabel::new(
            field,
            Some(field.mul(&a, &field.inv(&psi).expect("unit residue"))),
            bracket(k as i64 - 1, p) as i64,
        )?;
        return Ok(PredictionResult {
            outcome: Outcome::Determined(GaloisRepLabel::reducible(first, second)),
            branch: Branch::Ordinary,
            notes: Vec::new(),
        });
    }
    if k <= p + 1 {
        // positive slope, small weight: inertia omega_2^{k-1} + omega_2^{p(k-1)}
        let label = GaloisRepLabel::irreducible_inertia_only(field, k as i64 - 1)?;
        return Ok(PredictionResult {
            outcome: Outcome::Determined(label),
            branch: Branch::SmallWeightNonOrdinary,
            notes: Vec::new(),
        });
    }
    if params.ap_valuation >= one {
        return Err(Error::OutsideProvenRange);
    }
    // 0 < v(a_p) < 1, k >= p+2
    let t = bracket(k as i64 - 2, p) as i64 + 1;
    let irreducible = GaloisRepLabel::irreducible_plain(field, t)?;
    if p == 2 {
        return Ok(PredictionResult {
            outcome: Outcome::Determined(irreducible),
            branch: Branch::VacuousModTwo,
            notes: vec![
                "for p = 2 the fractional-slope statement is true but vacuous".to_string()
            ],
        });
    }
    let ambiguous_weight = (k as i64 - 3).rem_euclid(p as i64 - 1) == 0;
    if !ambiguous_weight {
        return Ok(PredictionResult {
            outcome: Outcome::Determined(irreducible),
            branch: Branch::FractionalSlopeGeneric,
            notes: Vec::new(),
        });
    }
    if k == p + 2 {
        return Ok(PredictionResult {
            outcome: Outcome::Determined(irreducible),
            branch: Branch::FractionalSlopeWeightPPlus2,
            notes: Vec::new(),
        });
    }
    // k = 3 mod p-1: the reducible option is omega + omega on inertia
    let reducible = GaloisRepLabel::reducible(
        CharLabel::inertia_only(field, 1),
        CharLabel::inertia_only(field, 1),
    );
    let mut notes = Vec::new();
    if k == 2 * p + 1 {
        notes.push(
            "k = 2p+1: an external criterion decides between the options; not implemented"
                .to_string(),
        );
    }
    Ok(PredictionResult {
        outcome: Outcome::Ambiguous {
            irreducible,
            reducible,
        },
        branch: Branch::FractionalSlopeAmbiguous,
        notes,
    })
}

/// Result of the module-theoretic derivation: the identified quotient
/// label and the candidate set it forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeriveOutcome {
    pub quotient_label: IrredLabel,
    pub candidates: Vec<GaloisRepLabel>,
}

/// Recompute the fractional-slope candidate set for (p, k) from scratch:
/// build the stable submodule Y of the degree-(k-2) forms, identify the
/// irreducible quotient as det^n tensor Symm^s, and run the elimination
/// step. Requires p > 2 and k >= p+3.
///
/// ```
/// use modp_langlands::fp_linear::ring::FieldContext;
/// use modp_langlands::langlands::predict::{
///     derive_reduction_detailed, predicted_candidates_fractional_slope,
/// };
///
/// let field = FieldContext::prime_field(5)?;
/// let derived = derive_reduction_detailed(5, 14)?;
/// assert_eq!((derived.quotient_label.s, derived.quotient_label.n), (0, 0));
/// assert_eq!(
///     derived.candidates,
///     predicted_candidates_fractional_slope(&field, 14)?,
/// );
/// # Ok::<(), modp_langlands::Error>(())
/// ```
pub fn derive_reduction_detailed(p: u64, k: u64) -> Result<DeriveOutcome> {
    if p == 2 {
        return Err(Error::DomainError(
            "p = 2 unsupported: the elimination step is vacuous".into(),
        ));
    }
    let field = FieldContext::prime_field(p)?;
    if k < p + 3 {
        return Err(Error::DomainError(format!(
            "derivation needs k >= p+3 = {}, got k = {k}",
            p + 3
        )));
    }
    let r = (k - 2) as usize;
    let y = submodule_y(&field, r)?;
    let q = quotient(&field, r, &y)?;
    let label = identify_irreducible(&field, &q)?;
    let candidates = eliminate(&field, label)?;
    Ok(DeriveOutcome {
        quotient_label: label,
        candidates,
    })
}

/// The candidate set alone.
pub fn derive_reduction(p: u64, k: u64) -> Result<Vec<GaloisRepLabel>> {
    Ok(derive_reduction_detailed(p, k)?.candidates)
}

/// The predictor's candidate set in the fractional-slope regime,
/// evaluated at the representative slope 1/2.
pub fn predicted_candidates_fractional_slope(
    field: &FieldContext,
    k: u64,
) -> Result<Vec<GaloisRepLabel>> {
    let params = CrystallineParams::new(field, k, Slope::new(1, 2), None, None)?;
    Ok(predict_reduction(field, &params)?.candidates())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldContext {
        FieldContext::prime_field(p).unwrap()
    }

    fn params(field: &FieldContext, k: u64, num: i64, den: i64) -> CrystallineParams {
        CrystallineParams::new(field, k, Slope::new(num, den), None, None).unwrap()
    }

    #[test]
    fn small_weight_inertia_exponents() {
        let f7 = f(7);
        let res = predict_reduction(&f7, &params(&f7, 4, 1, 1)).unwrap();
        assert_eq!(res.branch, Branch::SmallWeightNonOrdinary);
        let Outcome::Determined(label) = &res.outcome else {
            panic!("expected determined outcome");
        };
        assert!(label.inertia_only());
        assert_eq!(label.inertia_niveau2_exponents(&f7), Some([3, 21]));
    }

    #[test]
    fn fractional_slope_generic_weight() {
        let f5 = f(5);
        let res = predict_reduction(&f5, &params(&f5, 14, 1, 2)).unwrap();
        assert_eq!(res.branch, Branch::FractionalSlopeGeneric);
        assert_eq!(
            res.candidates(),
            vec![GaloisRepLabel::irreducible_plain(&f5, 1).unwrap()]
        );
    }

    #[test]
    fn fractional_slope_ambiguous_weight() {
        let f5 = f(5);
        let res = predict_reduction(&f5, &params(&f5, 11, 1, 2)).unwrap();
        assert_eq!(res.branch, Branch::FractionalSlopeAmbiguous);
        let Outcome::Ambiguous {
            irreducible,
            reducible,
        } = &res.outcome
        else {
            panic!("expected two options");
        };
        assert_eq!(
            *irreducible,
            GaloisRepLabel::irreducible_plain(&f5, 2).unwrap()
        );
        assert!(!reducible.is_irreducible());
        assert!(reducible.inertia_only());
        // 11 = 2*5 + 1: the external-criterion note is attached
        assert!(!res.notes.is_empty());
    }

    #[test]
    fn ordinary_branch_characters() {
        let f5 = f(5);
        let p = CrystallineParams::new(
            &f5,
            12,
            Slope::new(0, 1),
            Some(f5.from_int(2)),
            None,
        )
        .unwrap();
        let res = predict_reduction(&f5, &p).unwrap();
        assert_eq!(res.branch, Branch::Ordinary);
        let expected = GaloisRepLabel::reducible(
            CharLabel::unramified(&f5, f5.from_int(3)).unwrap(),
            CharLabel::new(&f5, Some(f5.from_int(2)), 3).unwrap(),
        );
        assert_eq!(res.candidates(), vec![expected]);
    }

    #[test]
    fn ordinary_branch_needs_a_residue() {
        let f5 = f(5);
        let p = params(&f5, 12, 0, 1);
        assert!(matches!(
            predict_reduction(&f5, &p),
            Err(Error::ResidueRequired)
        ));
    }

    #[test]
    fn integral_slope_large_weight_is_out_of_range() {
        let f5 = f(5);
        assert!(matches!(
            predict_reduction(&f5, &params(&f5, 9, 1, 1)),
            Err(Error::OutsideProvenRange)
        ));
        assert!(matches!(
            predict_reduction(&f5, &params(&f5, 9, 3, 2)),
            Err(Error::OutsideProvenRange)
        ));
    }

    #[test]
    fn weight_p_plus_2_excludes_the_reducible_case() {
        let f5 = f(5);
        let res = predict_reduction(&f5, &params(&f5, 7, 1, 2)).unwrap();
        assert_eq!(res.branch, Branch::FractionalSlopeWeightPPlus2);
        assert_eq!(res.candidates().len(), 1);
    }

    #[test]
    fn p_equals_2_is_vacuous_but_determined() {
        let f2 = f(2);
        let res = predict_reduction(&f2, &params(&f2, 10, 1, 2)).unwrap();
        assert_eq!(res.branch, Branch::VacuousModTwo);
        assert_eq!(res.candidates().len(), 1);
    }

    #[test]
    fn predictor_is_deterministic() {
        let f13 = f(13);
        let a = predict_reduction(&f13, &params(&f13, 40, 1, 3)).unwrap();
        let b = predict_reduction(&f13, &params(&f13, 40, 1, 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn prediction_depends_only_on_the_slope_band() {
        // any slope strictly between 0 and 1 gives the same answer
        for p in [3u64, 5, 7, 11, 13] {
            let field = f(p);
            for k in p + 2..=p + 2 + 2 * (p - 1) {
                let a = predict_reduction(&field, &params(&field, k, 1, 3)).unwrap();
                let b = predict_reduction(&field, &params(&field, k, 1, 2)).unwrap();
                let c = predict_reduction(&field, &params(&field, k, 99, 100)).unwrap();
                assert_eq!(a, b, "p={p} k={k}");
                assert_eq!(a, c, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn overlap_of_small_weight_and_fractional_slope_formulas() {
        // for 2 <= k <= p+1 the inertia exponents {k-1, p(k-1)} agree with
        // {t, pt} for t = [k-2]+1
        for p in [2u64, 3, 5, 7, 11, 13] {
            let field = f(p);
            for k in 2..=p + 1 {
                let small = GaloisRepLabel::irreducible_inertia_only(&field, k as i64 - 1)
                    .unwrap()
                    .inertia_niveau2_exponents(&field);
                let t = bracket(k as i64 - 2, p) as i64 + 1;
                let formula = GaloisRepLabel::irreducible_plain(&field, t)
                    .unwrap()
                    .inertia_niveau2_exponents(&field);
                assert_eq!(small, formula, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn derive_matches_the_quotient_congruences() {
        // p=5, k=14: r=12, s = 0, n = 0: single candidate ind(omega_2^1)
        let got = derive_reduction_detailed(5, 14).unwrap();
        assert_eq!(got.quotient_label, IrredLabel { s: 0, n: 0 });
        let f5 = f(5);
        assert_eq!(
            got.candidates,
            vec![GaloisRepLabel::irreducible_plain(&f5, 1).unwrap()]
        );
        // p=5, k=15 = 3 mod 4: two candidates
        assert_eq!(derive_reduction(5, 15).unwrap().len(), 2);
    }

    #[test]
    fn derive_rejects_small_inputs() {
        assert!(derive_reduction(2, 10).is_err());
        assert!(derive_reduction(5, 7).is_err());
    }

    #[test]
    fn derive_agrees_with_prediction_spot_checks() {
        for (p, k) in [(3u64, 8u64), (3, 9), (5, 14), (5, 15), (7, 12), (7, 17)] {
            let field = f(p);
            let derived = derive_reduction(p, k).unwrap();
            let predicted = predicted_candidates_fractional_slope(&field, k).unwrap();
            assert_eq!(derived, predicted, "p={p} k={k}");
        }
    }
}
