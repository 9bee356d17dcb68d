//! End-to-end consistency of the finite scattering diagrams: the basic
//! two-wall identities under change of basis, full counterclockwise loops,
//! and the intermediate products of the five-wall computation.

use scatkit_core::angle::PiAngle;
use scatkit_core::cases::{build_case, CaseId, CoeffMode};
use scatkit_core::lattice::LatticeVec;
use scatkit_core::laurent::{LaurentPoly, RatFn};
use scatkit_core::rng::SplitMix64;
use scatkit_core::wallcross::{
    focus_focus_check, loop_consistency, loop_word, loop_word_cw, pentagon_check, TorusAuto, Wall,
};

fn one_plus(vs: &[LatticeVec]) -> RatFn {
    let p = vs
        .iter()
        .fold(LaurentPoly::one(), |p, v| p.add(&LaurentPoly::monomial(*v)));
    RatFn::from_poly(p)
}

#[test]
fn pentagon_identity_is_basis_independent() {
    // Rejection-sample the change of basis to keep entries small: the word
    // expansions grow combinatorially with the pairing magnitudes, and the
    // identity is conjugation-invariant, so small witnesses carry the same
    // content as large ones.
    let mut rng = SplitMix64::new(0x5ca7_7e21);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 100 {
        attempts += 1;
        assert!(attempts < 10_000, "sampler starved");
        let u = rng.unimodular(3);
        let g = u.apply(&LatticeVec::e2());
        let gp = u.apply(&LatticeVec::e1());
        if g.a.abs().max(g.b.abs()).max(gp.a.abs()).max(gp.b.abs()) > 5 {
            continue;
        }
        assert_eq!(pentagon_check(g, gp), Ok(true), "failed at g={g} gp={gp}");
        checked += 1;
    }
}

#[test]
fn pentagon_rejects_badly_paired_classes() {
    // <gp, g> = 2, not 1.
    let g = LatticeVec::new(0, 2);
    let gp = LatticeVec::e1();
    assert!(pentagon_check(g, gp).is_err());
}

#[test]
fn focus_focus_squares_cancel_for_primitive_classes() {
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            let g = LatticeVec::new(a, b);
            if !g.is_primitive() {
                continue;
            }
            assert_eq!(focus_focus_check(g), Ok(true), "failed at g={g}");
        }
    }
    assert!(focus_focus_check(LatticeVec::new(2, 2)).is_err());
    assert!(focus_focus_check(LatticeVec::zero()).is_err());
}

#[test]
fn opposite_wall_pairs_act_by_a_lattice_twist() {
    // Crossing a wall and its opposite in sequence multiplies monomials by
    // nothing: the exponent alone moves, by the inverse shear fixing the
    // wall direction.
    let up = Wall::simple(LatticeVec::e2(), PiAngle::new(1, 2), 1);
    let down = Wall::simple(-LatticeVec::e2(), PiAngle::new(-1, 2), 1);
    let right = Wall::simple(LatticeVec::e1(), PiAngle::zero(), 1);
    let left = Wall::simple(-LatticeVec::e1(), PiAngle::new(1, 1), 1);

    let alpha = TorusAuto::compose(
        &TorusAuto::cross(left, true),
        &TorusAuto::cross(right, true),
    );
    let beta = TorusAuto::compose(&TorusAuto::cross(down, true), &TorusAuto::cross(up, true));

    for a1 in -3i64..=3 {
        for a2 in -3i64..=3 {
            let a = LatticeVec::new(a1, a2);
            let ia = alpha.apply_monomial(a);
            assert!(
                ia.rf_eq(&RatFn::monomial(LatticeVec::new(a1 - a2, a2))),
                "horizontal pair at {a}"
            );
            let ib = beta.apply_monomial(a);
            assert!(
                ib.rf_eq(&RatFn::monomial(LatticeVec::new(a1, a1 + a2))),
                "vertical pair at {a}"
            );
        }
    }
}

#[test]
fn five_wall_intermediate_products_match_closed_forms() {
    let d = build_case(CaseId::A2, CoeffMode::Specialized).unwrap();
    let e1 = LatticeVec::e1();
    let e2 = LatticeVec::e2();
    let e12 = e1 + e2;

    let k2 = TorusAuto::cross(d.wall(2).clone(), true);
    let k3 = TorusAuto::cross(d.wall(3).clone(), true);
    let k4 = TorusAuto::cross(d.wall(4).clone(), true);

    for a1 in -3i64..=3 {
        for a2 in -3i64..=3 {
            let za = RatFn::monomial(LatticeVec::new(a1, a2));

            let p1 = k2.apply(&za);
            let q1 = za.mul(&one_plus(&[e2]).pow(a1).unwrap());
            assert!(p1.rf_eq(&q1), "first product at ({a1},{a2})");

            let p2 = k3.apply(&p1);
            let q2 = za
                .mul(&one_plus(&[e12]).pow(-a2).unwrap())
                .mul(&one_plus(&[e2, e12]).pow(a1).unwrap());
            assert!(p2.rf_eq(&q2), "second product at ({a1},{a2})");

            let p3 = k4.apply(&p2);
            let q3 = za
                .mul(&one_plus(&[e1, e12]).pow(-a2).unwrap())
                .mul(&one_plus(&[e2]).pow(a1).unwrap());
            assert!(p3.rf_eq(&q3), "third product at ({a1},{a2})");
        }
    }
}

#[test]
fn full_loops_are_the_identity_in_both_coefficient_modes() {
    for case in CaseId::ALL {
        let d = build_case(case, CoeffMode::Specialized).unwrap();
        let report = loop_consistency(&d);
        assert!(report.identity, "{} loop, specialized", case.name());
    }
    for case in [CaseId::A2, CaseId::B2] {
        let d = build_case(case, CoeffMode::Ghk).unwrap();
        let report = loop_consistency(&d);
        assert!(
            report.identity,
            "{} loop, general coefficients",
            case.name()
        );
    }
}

#[test]
fn clockwise_loop_inverts_the_counterclockwise_loop() {
    let d = build_case(CaseId::A2, CoeffMode::Specialized).unwrap();
    let round_trip = TorusAuto::compose(&loop_word_cw(&d), &loop_word(&d, 0));
    assert!(round_trip.auto_eq(&TorusAuto::identity()));
}

#[test]
fn removing_any_wall_breaks_the_loop() {
    for case in CaseId::ALL {
        let d = build_case(case, CoeffMode::Specialized).unwrap();
        for k in 1..=d.wall_count() {
            let mut crippled = d.clone();
            crippled.walls.remove(k - 1);
            assert!(
                !loop_consistency(&crippled).identity,
                "{} without wall {k} still closed",
                case.name()
            );
        }
    }
}

#[test]
fn perturbing_any_multiplicity_breaks_the_loop() {
    for case in CaseId::ALL {
        let d = build_case(case, CoeffMode::Specialized).unwrap();
        for k in 1..=d.wall_count() {
            let mut bumped = d.clone();
            bumped.walls[k - 1].factors[0].mult += 1;
            assert!(
                !loop_consistency(&bumped).identity,
                "{} with wall {k} multiplicity bumped still closed",
                case.name()
            );
        }
    }
}
