//! Transported ray functions: exchange relations in every strip, path
//! independence around the cut, and the closing of the exchange recurrence.

use scatkit_core::cases::{build_case, CaseId, CoeffMode};
use scatkit_core::lattice::LatticeVec;
use scatkit_core::laurent::{LaurentPoly, RatFn};
use scatkit_core::theta::{
    detected_period, exchange_check, periodicity_check, theta_ray, well_defined_check,
};

#[test]
fn exchange_relations_hold_in_every_strip() {
    for case in CaseId::ALL {
        let report = exchange_check(case, CoeffMode::Specialized).unwrap();
        assert_eq!(report.relations.len(), case.wall_count());
        assert!(report.all_hold(), "{} specialized", case.name());
    }
    for case in [CaseId::A2, CaseId::B2] {
        let report = exchange_check(case, CoeffMode::Ghk).unwrap();
        assert!(report.all_hold(), "{} with coefficients", case.name());
        let wrapping = report.relations.iter().filter(|r| r.wraps_cut).count();
        assert_eq!(wrapping, 2);
    }
    assert!(exchange_check(CaseId::G2, CoeffMode::Ghk).is_err());
}

#[test]
fn exchange_exponents_follow_the_wall_multiplicities() {
    let expected: [&[u32]; 3] = [
        &[1, 1, 1, 1, 1][..],
        &[1, 2, 1, 2, 1, 2][..],
        &[1, 3, 1, 3, 1, 3, 1, 3][..],
    ];
    for (case, want) in CaseId::ALL.into_iter().zip(expected) {
        let report = exchange_check(case, CoeffMode::Specialized).unwrap();
        let got: Vec<u32> = report.relations.iter().map(|r| r.exponent).collect();
        assert_eq!(got, want, "{}", case.name());
    }
}

#[test]
fn ray_functions_reduce_to_monomials_in_their_own_chamber() {
    for case in CaseId::ALL {
        let d = build_case(case, CoeffMode::Specialized).unwrap();
        for k in 1..=d.wall_count() {
            let native = theta_ray(&d, k, k - 1);
            let expect = RatFn::monomial(-d.wall(k).class);
            assert!(native.rf_eq(&expect), "{} ray {k}", case.name());
        }
    }
}

#[test]
fn transported_ray_matches_the_hand_computed_value() {
    // The fifth ray of the five-wall diagram, carried back across walls
    // 4, 3, 2 into the first strip.
    let d = build_case(CaseId::A2, CoeffMode::Specialized).unwrap();
    let got = theta_ray(&d, 5, 1);
    let expect = RatFn::from_poly(
        LaurentPoly::monomial(LatticeVec::e2())
            .mul(&LaurentPoly::one().add(&LaurentPoly::monomial(LatticeVec::e1()))),
    );
    assert!(got.rf_eq(&expect));
}

#[test]
fn transport_is_path_independent_around_the_cut() {
    for case in CaseId::ALL {
        let d = build_case(case, CoeffMode::Specialized).unwrap();
        assert!(well_defined_check(&d), "{} specialized", case.name());
    }
    for case in [CaseId::A2, CaseId::B2] {
        let d = build_case(case, CoeffMode::Ghk).unwrap();
        assert!(well_defined_check(&d), "{} with coefficients", case.name());
    }
}

#[test]
fn exchange_recurrence_closes_with_period_equal_to_wall_count() {
    for case in CaseId::ALL {
        assert_eq!(
            detected_period(case),
            Some(case.wall_count()),
            "{}",
            case.name()
        );
        assert!(periodicity_check(case));
    }
}
