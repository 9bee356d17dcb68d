//! The multiple-cover weights exponentiate to a pure binomial wall function.

use num_rational::BigRational;
use num_traits::{One, Zero};
use scatkit_core::series::{multiple_cover, wall_function_from_invariants};

#[test]
fn unit_weights_give_exactly_one_plus_x() {
    let f = wall_function_from_invariants(multiple_cover(1), 20);
    assert!(f.coeff(0).is_one());
    assert!(f.coeff(1).is_one());
    for k in 2..=20 {
        assert!(f.coeff(k).is_zero(), "stray coefficient at order {k}");
    }
}

#[test]
fn scaled_weights_give_binomial_powers() {
    let f = wall_function_from_invariants(multiple_cover(3), 12);
    let binomial = [1i64, 3, 3, 1];
    for k in 0..=12 {
        let want = binomial
            .get(k)
            .map_or_else(BigRational::zero, |&b| BigRational::from_integer(b.into()));
        assert_eq!(*f.coeff(k), want, "order {k}");
    }
}
