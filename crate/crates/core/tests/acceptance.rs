//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with --nocapture). Every check is exact; there are no
//! tolerances anywhere.

use modp_langlands::fp_linear::ring::FieldContext;
use modp_langlands::fp_linear::submodule::{identify_irreducible, quotient, submodule_y};
use modp_langlands::langlands::dictionary::GaloisRepLabel;
use modp_langlands::langlands::labels::bracket;
use modp_langlands::langlands::predict::{
    derive_reduction_detailed, predicted_candidates_fractional_slope,
};
use modp_langlands::modforms::newton::SlopeValue;
use modp_langlands::modforms::qexp::int_val_p;
use modp_langlands::modforms::{dim_cusp_forms, hecke_matrix, ordinarity_sweep, slope_spectrum};
use modp_langlands::verify::{hecke_identities_with_trials, run_suite, Suite};

const GRID_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[test]
fn criterion_1_ordinarity_sweep_to_53() {
    let sweep = ordinarity_sweep(53, None).expect("sweep runs");
    assert!(!sweep.rows.is_empty());
    for row in &sweep.rows {
        assert!(row.p % 2 == 1 && row.p <= 53);
        assert!(row.k >= 12 && row.k <= row.p + 1 && row.k % 2 == 0);
        assert_eq!(row.dim, dim_cusp_forms(row.k));
        assert!(row.dim > 0);
        assert!(
            row.polygon.all_slopes_zero(),
            "non-ordinary cell p={} k={}: {}",
            row.p,
            row.k,
            row.polygon.describe()
        );
    }
    // every (p, k) cell with cusp forms is present
    let mut expected = Vec::new();
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        let mut k = 12;
        while k <= p + 1 {
            if dim_cusp_forms(k) > 0 {
                expected.push((p, k));
            }
            k += 2;
        }
    }
    let got: Vec<(u64, u64)> = sweep.rows.iter().map(|r| (r.p, r.k)).collect();
    assert_eq!(got, expected);
    assert!(sweep.all_ordinary);
    println!(
        "ACCEPTANCE 1 PASS: ordinarity sweep p <= 53, {} cells, all slopes exactly 0",
        sweep.rows.len()
    );
}

#[test]
fn criterion_2_p59_non_ordinary_weights() {
    // the T_59 eigenvalue on S_16 has positive 59-adic valuation
    let m16 = hecke_matrix(59, 16, 59, None).expect("matrix computes");
    assert_eq!(m16.dim(), 1);
    let v = int_val_p(m16.entry(0, 0), 59).expect("nonzero eigenvalue");
    assert!(v > 0, "weight 16 eigenvalue is a 59-adic unit");
    // the Newton polygon of T_59 on S_74 contains a segment of slope 1/2
    let np = slope_spectrum(59, 74, None).expect("polygon computes");
    assert!(
        np.contains_slope(SlopeValue::new(1, 2)),
        "no slope 1/2 in weight 74: {}",
        np.describe()
    );
    // full polygon, frozen from an independent computation
    assert_eq!(
        np.segments(),
        &[(SlopeValue::new(1, 2), 2), (SlopeValue::new(1, 1), 3)]
    );
    println!(
        "ACCEPTANCE 2 PASS: v_59(a_59(S_16)) = {v} > 0; S_74 polygon = [{}] contains 1/2",
        np.describe()
    );
}

#[test]
fn criterion_3_hecke_generator_identities() {
    let cases = hecke_identities_with_trials(13, 100).expect("suite runs");
    for p in GRID_PRIMES {
        let pu = p as usize;
        let mine = cases
            .iter()
            .filter(|c| c.case.starts_with(&format!("p={p} ")))
            .count();
        assert_eq!(mine, 3 * (4 * (pu - 1) + 1), "row count at p={p}");
    }
    for c in &cases {
        assert!(c.pass, "failed: {} ({})", c.case, c.detail);
    }
    println!(
        "ACCEPTANCE 3 PASS: T+ vanishing, exact generator image, and {} checks over p in {GRID_PRIMES:?}",
        cases.len()
    );
}

#[test]
fn criterion_4_quotient_identification() {
    let mut cells = 0;
    for p in GRID_PRIMES {
        let field = FieldContext::prime_field(p).unwrap();
        let pu = p as usize;
        // r = p is outside the domain of Y (it needs r >= p+1)
        for r in pu + 1..=pu + 4 * (pu - 1) {
            let s = bracket(p as i64 - 1 - r as i64, p);
            let n = bracket(r as i64, p);
            let y = submodule_y(&field, r).expect("Y computes");
            let q = quotient(&field, r, &y).expect("quotient computes");
            assert_eq!(q.dim(), s + 1, "dim mismatch at p={p} r={r}");
            let label = identify_irreducible(&field, &q).expect("quotient is irreducible");
            assert_eq!((label.s, label.n), (s, n), "label mismatch at p={p} r={r}");
            cells += 1;
        }
    }
    println!(
        "ACCEPTANCE 4 PASS: dim(quotient) = s+1 and label = (s, r mod p-1) for {cells} cells"
    );
}

#[test]
fn criterion_5_dictionary_round_trip_and_partition() {
    let report = run_suite(Suite::Dictionary, 7).expect("suite runs");
    for c in &report.cases {
        assert!(c.pass, "failed: {} ({})", c.case, c.detail);
    }
    assert!(report.all_pass);
    println!(
        "ACCEPTANCE 5 PASS: dictionary round trip and canonical-form/factor partition, {} checks for p <= 7",
        report.cases.len()
    );
}

#[test]
fn criterion_6_predictor_deriver_agreement() {
    let mut cells = 0;
    for p in GRID_PRIMES {
        let field = FieldContext::prime_field(p).unwrap();
        for k in p + 3..=p + 3 + 6 * (p - 1) {
            let derived = derive_reduction_detailed(p, k).expect("derivation runs");
            let predicted = predicted_candidates_fractional_slope(&field, k).expect("prediction");
            assert_eq!(
                derived.candidates, predicted,
                "candidate sets differ at p={p} k={k}"
            );
            let ambiguous = (k as i64 - 3).rem_euclid(p as i64 - 1) == 0;
            assert_eq!(
                derived.candidates.len(),
                if ambiguous { 2 } else { 1 },
                "candidate count wrong at p={p} k={k}"
            );
            cells += 1;
        }
    }
    println!(
        "ACCEPTANCE 6 PASS: derivation equals prediction on {cells} (p, k) cells, with two candidates exactly at k = 3 mod p-1"
    );
}

#[test]
fn criterion_7_overlap_consistency() {
    let mut cells = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        let field = FieldContext::prime_field(p).unwrap();
        for k in 2..=p + 1 {
            let small = GaloisRepLabel::irreducible_inertia_only(&field, k as i64 - 1)
                .unwrap()
                .inertia_niveau2_exponents(&field);
            let t = bracket(k as i64 - 2, p) as i64 + 1;
            let fractional = GaloisRepLabel::irreducible_plain(&field, t)
                .unwrap()
                .inertia_niveau2_exponents(&field);
            assert_eq!(small, fractional, "exponent sets differ at p={p} k={k}");
            cells += 1;
        }
    }
    println!(
        "ACCEPTANCE 7 PASS: small-weight and fractional-slope inertia exponents agree on {cells} cells"
    );
}

#[test]
fn criterion_8_theta_divisibility() {
    let report = run_suite(Suite::Divisibility, 13).expect("suite runs");
    for c in &report.cases {
        assert!(c.pass, "failed: {} ({})", c.case, c.detail);
    }
    assert!(report.all_pass);
    println!(
        "ACCEPTANCE 8 PASS: theta substitution divisibility for all primes p <= 13, all lambda"
    );
}
