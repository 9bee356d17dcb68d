//! Numeric shadows of the exact central charges: ray angle spacing and the
//! additivity the class recurrence imposes on the charges.

use num_complex::Complex64;
use scatkit_core::cases::{PolarCharge, ScatteringDiagram};

pub fn charge_value(c: &PolarCharge) -> Complex64 {
    let mag = ratio_f64(c.mag2).sqrt();
    Complex64::from_polar(mag, ratio_f64(c.phase_pi) * std::f64::consts::PI)
}

pub fn charge_values(diagram: &ScatteringDiagram) -> Vec<Complex64> {
    diagram.charges.iter().map(charge_value).collect()
}

fn ratio_f64(r: num_rational::Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Numeric BPS ray angle of charge k: the argument where `c_k u^p` turns
/// positive real, wrapped into `[0, 2 pi / p)`.
fn ray_angle(diagram: &ScatteringDiagram, k: usize) -> f64 {
    let p = ratio_f64(diagram.case.power());
    let modulus = 2.0 * std::f64::consts::PI / p;
    let raw = -charge_value(&diagram.charges[k - 1]).arg() / p;
    raw.rem_euclid(modulus)
}

#[derive(Clone, Debug)]
pub struct AngleReport {
    /// Consecutive gaps, last entry wrapping around the full turn.
    pub gaps: Vec<f64>,
    pub expected: f64,
    pub max_err: f64,
    pub ok: bool,
}

/// Consecutive BPS rays are evenly spaced by the case gap, and each ray
/// sits at its constructed angle. Tolerance 1e-9 on angles assembled from
/// transcendental-function evaluations.
pub fn angle_gaps(diagram: &ScatteringDiagram) -> AngleReport {
    let n = diagram.wall_count();
    let expected = diagram.gap().radians();
    let angles: Vec<f64> = (1..=n).map(|k| ray_angle(diagram, k)).collect();
    let mut gaps = Vec::with_capacity(n);
    let mut max_err: f64 = 0.0;
    for k in 0..n {
        let next = if k + 1 < n {
            angles[k + 1]
        } else {
            angles[0] + 2.0 * std::f64::consts::PI
        };
        let gap = next - angles[k];
        max_err = max_err.max((gap - expected).abs());
        gaps.push(gap);
    }
    for (k, theta) in angles.iter().enumerate() {
        let constructed = diagram.wall(k + 1).angle.radians();
        max_err = max_err.max((theta - constructed).abs());
    }
    let ok = max_err < 1e-9;
    AngleReport {
        gaps,
        expected,
        max_err,
        ok,
    }
}

#[derive(Clone, Debug)]
pub struct AdditivityReport {
    pub max_err: f64,
    pub ok: bool,
}

/// The charges satisfy the same three-term recurrence as the boundary
/// classes: `c_{j+1} = -c_{j-1} - D_j^2 c_j`, including the continuation
/// across the cut. Tolerance 1e-12: the charges are exact surds.
pub fn charge_additivity(diagram: &ScatteringDiagram) -> AdditivityReport {
    let n = diagram.wall_count() as i64;
    let c = |j: i64| charge_value(&diagram.extended_charge(j));
    let d2 = |j: i64| diagram.selfints[(j - 1).rem_euclid(n) as usize] as f64;
    let mut max_err: f64 = 0.0;
    for j in 2..=n + 1 {
        let residue = c(j + 1) + c(j - 1) + c(j) * d2(j);
        max_err = max_err.max(residue.norm());
    }
    AdditivityReport {
        max_err,
        ok: max_err < 1e-12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use scatkit_core::cases::{build_case, CaseId, CoeffMode};

    #[test]
    fn gaps_are_uniform_for_all_cases() {
        for case in CaseId::ALL {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            let report = angle_gaps(&d);
            assert!(report.ok, "{}: max_err = {:e}", case.name(), report.max_err);
            assert_eq!(report.gaps.len(), case.wall_count());
        }
    }

    #[test]
    fn expected_gaps_match_the_closed_forms() {
        use std::f64::consts::PI;
        let want = [2.0 * PI / 5.0, PI / 3.0, PI / 4.0];
        for (case, w) in CaseId::ALL.into_iter().zip(want) {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            assert!((angle_gaps(&d).expected - w).abs() < 1e-15);
        }
    }

    #[test]
    fn charges_satisfy_the_class_recurrence() {
        for case in CaseId::ALL {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            let report = charge_additivity(&d);
            assert!(report.ok, "{}: max_err = {:e}", case.name(), report.max_err);
        }
    }

    #[test]
    fn middle_ray_additivity_in_closed_form() {
        // c2 + c4 = c3 in the six-wall case: both sides equal -i.
        let d = build_case(CaseId::B2, CoeffMode::Specialized).unwrap();
        let c = charge_values(&d);
        let lhs = c[1] + c[3];
        assert!((lhs - c[2]).norm() < 1e-15);
        assert!((c[2] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }
}
