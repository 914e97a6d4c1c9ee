//! Newton polygons: root valuations of integer polynomials from the
//! lower convex hull of (i, v_p(c_i)).

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use super::qexp::int_val_p;
use crate::error::{Error, Result};

pub type SlopeValue = Ratio<i64>;

/// Slopes (root valuations) with multiplicities, strictly increasing;
/// multiplicities sum to the polynomial degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    p: u64,
    segments: Vec<(SlopeValue, usize)>,
}

impl NewtonPolygon {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn segments(&self) -> &[(SlopeValue, usize)] {
        &self.segments
    }

    pub fn degree(&self) -> usize {
        self.segments.iter().map(|(_, m)| m).sum()
    }

    pub fn contains_slope(&self, s: SlopeValue) -> bool {
        self.segments.iter().any(|(t, _)| *t == s)
    }

    pub fn all_slopes_zero(&self) -> bool {
        self.segments.iter().all(|(s, _)| s.is_zero())
    }

    pub fn has_slope_in_open_unit_interval(&self) -> bool {
        let zero = SlopeValue::new(0, 1);
        let one = SlopeValue::new(1, 1);
        self.segments.iter().any(|(s, _)| *s > zero && *s < one)
    }

    /// Total mass: the sum of slope times multiplicity, which equals the
    /// valuation of the constant coefficient for a unit leading one.
    pub fn total_mass(&self) -> SlopeValue {
        self.segments
            .iter()
            .map(|(s, m)| s * SlopeValue::new(*m as i64, 1))
            .sum()
    }

    pub fn describe(&self) -> String {
        self.segments
            .iter()
            .map(|(s, m)| format!("{}/{} x{m}", s.numer(), s.denom()))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Root valuations of sum c_i X^i from the lower hull of (i, v_p(c_i)).
/// The leading coefficient must be a p-adic unit and the constant term
/// nonzero (no zero roots).
pub fn newton_slopes(coeffs: &[BigInt], p: u64) -> Result<NewtonPolygon> {
    if coeffs.is_empty() || coeffs.iter().all(Zero::is_zero) {
        return Err(Error::DomainError("zero polynomial".into()));
    }
    let deg = coeffs.len() - 1;
    match int_val_p(&coeffs[deg], p) {
        Some(0) => {}
        _ => {
            return Err(Error::DomainError(
                "leading coefficient must be a p-adic unit".into(),
            ))
        }
    }
    if deg == 0 {
        return Ok(NewtonPolygon {
            p,
            segments: Vec::new(),
        });
    }
    if coeffs[0].is_zero() {
        return Err(Error::DomainError(
            "zero constant term: zero roots are not handled".into(),
        ));
    }
    let points: Vec<(i64, i64)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| int_val_p(c, p).map(|v| (i as i64, v as i64)))
        .collect();
    // lower convex hull, left to right
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // drop b if it lies on or above the segment a -> pt
            if (b.1 - a.1) * (pt.0 - a.0) >= (pt.1 - a.1) * (b.0 - a.0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut segments: Vec<(SlopeValue, usize)> = hull
        .windows(2)
        .map(|w| {
            let (x1, y1) = w[0];
            let (x2, y2) = w[1];
            (SlopeValue::new(y1 - y2, x2 - x1), (x2 - x1) as usize)
        })
        .collect();
    segments.sort_by_key(|a| a.0);
    debug_assert!(segments.windows(2).all(|w| w[0].0 < w[1].0));
    Ok(NewtonPolygon { p, segments })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quadratic_with_unit_trace() {
        // X^2 - a X + p^{k-1}, v_p(a) = 0: slopes 0 and k-1
        let np = newton_slopes(&poly(&[3i64.pow(5), -7, 1]), 3).unwrap();
        assert_eq!(
            np.segments(),
            &[(SlopeValue::new(0, 1), 1), (SlopeValue::new(5, 1), 1)]
        );
    }

    #[test]
    fn quadratic_with_large_trace_valuation() {
        // v_p(a) >= (k-1)/2: slope (k-1)/2 twice
        let np = newton_slopes(&poly(&[3i64.pow(5), 27, 1]), 3).unwrap();
        assert_eq!(np.segments(), &[(SlopeValue::new(5, 2), 2)]);
    }

    #[test]
    fn weight_12_slope_at_two() {
        // char poly of T_2 on S_12 is X + 24 up to sign: slope v_2(24) = 3
        let np = newton_slopes(&poly(&[24, 1]), 2).unwrap();
        assert_eq!(np.segments(), &[(SlopeValue::new(3, 1), 1)]);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert!(newton_slopes(&[], 2).is_err());
        assert!(newton_slopes(&poly(&[0, 0]), 2).is_err());
        assert!(newton_slopes(&poly(&[1, 2]), 2).is_err()); // leading not a unit
        assert!(newton_slopes(&poly(&[0, 1]), 2).is_err()); // zero root
    }

    #[test]
    fn mass_conservation_on_random_polynomials() {
        use num_traits::Signed;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = [2u64, 3, 5][rng.gen_range(0..3)];
            let deg = rng.gen_range(1..=6usize);
            let mut coeffs: Vec<BigInt> = (0..deg)
                .map(|_| BigInt::from(rng.gen_range(-10_000i64..10_000)))
                .collect();
            coeffs.push(BigInt::from(
                [1i64, -1, 1 + p as i64][rng.gen_range(0..3)],
            ));
            if coeffs[0].is_zero() {
                coeffs[0] = BigInt::from(1);
            }
            if int_val_p(coeffs.last().unwrap(), p) != Some(0) {
                continue;
            }
            let np = newton_slopes(&coeffs, p).unwrap();
            assert_eq!(np.degree(), deg);
            let mass = np.total_mass();
            let c0 = int_val_p(&coeffs[0].abs(), p).unwrap();
            assert_eq!(mass, SlopeValue::new(c0 as i64, 1), "coeffs={coeffs:?}");
        }
    }
}
