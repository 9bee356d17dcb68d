//! Wall-crossing automorphisms of the torus algebra and their identities.
//!
//! Crossing a wall with class `g` counterclockwise sends a monomial `z^m` to
//! `z^m * f^{<m,g>}` where `f` is the wall function; walls built with a
//! bending generator also shift the coefficient monomial by `<m,g>` copies of
//! that generator. Automorphisms are stored as words of crossings and lattice
//! twists and evaluated lazily; two words are compared on the basis monomial
//! images, which determines them by multiplicativity.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::angle::PiAngle;
use crate::cases::ScatteringDiagram;
use crate::coeff::CoeffMonomial;
use crate::lattice::{picard_lefschetz, LatticeVec, Mat2};
use crate::laurent::{cancel_common, one_plus_products, LaurentPoly, RatFn};
use crate::Error;

/// One factor `(1 + q * z^class)^mult` of a wall function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WallFactor {
    pub coeff: CoeffMonomial,
    pub mult: u32,
}

/// A wall: a ray at `angle` carrying a class and a wall function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wall {
    pub class: LatticeVec,
    pub angle: PiAngle,
    pub factors: Vec<WallFactor>,
    /// Coefficient generator twisted into crossings (the bending class).
    pub bending: Option<String>,
}

impl Wall {
    /// A coefficient-free wall `(1 + z^class)^mult`.
    pub fn simple(class: LatticeVec, angle: PiAngle, mult: u32) -> Self {
        Wall {
            class,
            angle,
            factors: vec![WallFactor {
                coeff: CoeffMonomial::one(),
                mult,
            }],
            bending: None,
        }
    }

    pub fn with_coeffs(
        class: LatticeVec,
        angle: PiAngle,
        factors: Vec<WallFactor>,
        bending: Option<String>,
    ) -> Self {
        Wall {
            class,
            angle,
            factors,
            bending,
        }
    }

    /// The wall function `prod_j (1 + q_j z^class)^{m_j}`.
    pub fn function(&self) -> LaurentPoly {
        let pairs: Vec<(CoeffMonomial, u32)> = self
            .factors
            .iter()
            .map(|f| (f.coeff.clone(), f.mult))
            .collect();
        one_plus_products(self.class, &pairs)
    }

    pub fn total_mult(&self) -> u32 {
        self.factors.iter().map(|f| f.mult).sum()
    }

    fn bend(&self, k: u32) -> CoeffMonomial {
        match &self.bending {
            Some(name) if k > 0 => CoeffMonomial::generator(name).pow(k),
            _ => CoeffMonomial::one(),
        }
    }
}

/// One step of an automorphism word.
#[derive(Clone, Debug)]
pub enum AutoStep {
    /// Cross `wall`, counterclockwise when `ccw` is true.
    Cross { wall: Wall, ccw: bool },
    /// The lattice twist `z^v -> z^{T^{-1} v}`.
    Twist(Mat2),
}

/// An automorphism as a word of steps, applied left to right.
#[derive(Clone, Debug, Default)]
pub struct TorusAuto {
    pub steps: Vec<AutoStep>,
}

impl TorusAuto {
    pub fn identity() -> Self {
        TorusAuto::default()
    }

    pub fn cross(wall: Wall, ccw: bool) -> Self {
        TorusAuto {
            steps: vec![AutoStep::Cross { wall, ccw }],
        }
    }

    /// Twist by a unimodular map; panics otherwise (all engine twists are
    /// monodromies or Picard-Lefschetz shears).
    pub fn twist(t: Mat2) -> Self {
        assert!(t.inverse().is_some(), "twist matrix must be unimodular");
        TorusAuto {
            steps: vec![AutoStep::Twist(t)],
        }
    }

    pub fn from_steps(steps: Vec<AutoStep>) -> Self {
        TorusAuto { steps }
    }

    /// `(A o B)(v) = A(B(v))`: the composite applies `b`'s word first.
    pub fn compose(a: &TorusAuto, b: &TorusAuto) -> TorusAuto {
        let mut steps = b.steps.clone();
        steps.extend(a.steps.iter().cloned());
        TorusAuto { steps }
    }

    pub fn apply(&self, f: &RatFn) -> RatFn {
        let mut out = f.clone();
        for step in &self.steps {
            out = apply_step(step, &out);
        }
        out
    }

    /// Image of a polynomial: the word extended linearly over its terms.
    pub fn apply_poly(&self, p: &LaurentPoly) -> RatFn {
        self.apply(&RatFn::from_poly(p.clone()))
    }

    pub fn apply_monomial(&self, m: LatticeVec) -> RatFn {
        self.apply(&RatFn::monomial(m))
    }

    /// Equality on the basis images; sufficient by multiplicativity (every
    /// step acts multiplicatively and fixes pure coefficient monomials).
    pub fn auto_eq(&self, other: &TorusAuto) -> bool {
        let e1 = RatFn::monomial(LatticeVec::e1());
        let e2 = RatFn::monomial(LatticeVec::e2());
        self.apply(&e1).rf_eq(&other.apply(&e1)) && self.apply(&e2).rf_eq(&other.apply(&e2))
    }
}

/// The image of `z^m` under a single crossing: `z^m * f^{±<m, class>}`.
pub fn cross_action(wall: &Wall, ccw: bool, m: LatticeVec) -> RatFn {
    TorusAuto::cross(wall.clone(), ccw).apply(&RatFn::monomial(m))
}

fn apply_step(step: &AutoStep, f: &RatFn) -> RatFn {
    match step {
        AutoStep::Twist(t) => {
            let ti = t.inverse().expect("twist matrix must be unimodular");
            f.map_exponents(|v| ti.apply(v))
        }
        AutoStep::Cross { wall, ccw } => {
            let (mut num, hn) = cross_cleared(wall, *ccw, f.num());
            let (mut den, hd) = cross_cleared(wall, *ccw, f.den());
            // num/(gf)^hn over den/(gf)^hd: pad the smaller clearing power.
            if hd > hn {
                num = num.mul(&clearing_power(wall, hd - hn));
            } else if hn > hd {
                den = den.mul(&clearing_power(wall, hn - hd));
            }
            let binomials: Vec<(LatticeVec, CoeffMonomial)> = wall
                .factors
                .iter()
                .map(|fa| (wall.class, fa.coeff.clone()))
                .collect();
            let (num, den) = cancel_common(num, den, &binomials);
            RatFn::new(num, den)
        }
    }
}

/// Crossing image of a polynomial over the common denominator `(g f)^H`,
/// where `g` is the bending monomial and `H` clears the most negative
/// pairing: returns `(sum_t t * (g f)^{H + h_t}, H)`.
fn cross_cleared(wall: &Wall, ccw: bool, p: &LaurentPoly) -> (LaurentPoly, u32) {
    let mut rows = Vec::with_capacity(p.num_terms());
    let mut hmin: i64 = 0;
    let mut hmax: i64 = 0;
    for (v, q, c) in p.terms() {
        let mut h = v.pair(&wall.class);
        if !ccw {
            h = -h;
        }
        hmin = hmin.min(h);
        hmax = hmax.max(h);
        rows.push((*v, q, c, h));
    }
    let clear = (-hmin) as u32;
    let f = wall.function();
    let mut fpow = Vec::with_capacity((hmax + clear as i64) as usize + 1);
    fpow.push(LaurentPoly::one());
    for k in 1..=(hmax + clear as i64) as usize {
        let next = fpow[k - 1].mul(&f);
        fpow.push(next);
    }
    let mut out = LaurentPoly::zero();
    for (v, q, c, h) in rows {
        let k = (h + clear as i64) as u32;
        let t = LaurentPoly::term(v, q.mul(&wall.bend(k)), c.clone());
        out = out.add(&t.mul(&fpow[k as usize]));
    }
    (out, clear)
}

/// `(g f)^k` as a polynomial: bending monomial times wall function, power k.
fn clearing_power(wall: &Wall, k: u32) -> LaurentPoly {
    LaurentPoly::coeff_monomial(LatticeVec::zero(), wall.bend(k)).mul(&wall.function().pow(k))
}

/// Checks `K_g K_g' = K_g' K_{g+g'} K_g` for walls of multiplicity one.
///
/// The identity's hypothesis `<g', g> = 1` is enforced as a precondition.
pub fn pentagon_check(g: LatticeVec, gp: LatticeVec) -> Result<bool, Error> {
    let pairing = gp.pair(&g);
    if pairing != 1 {
        return Err(Error::PairingNotOne { got: pairing });
    }
    let wall = |v: LatticeVec| Wall::simple(v, PiAngle::zero(), 1);
    let lhs = TorusAuto::from_steps(vec![
        AutoStep::Cross {
            wall: wall(gp),
            ccw: true,
        },
        AutoStep::Cross {
            wall: wall(g),
            ccw: true,
        },
    ]);
    let rhs = TorusAuto::from_steps(vec![
        AutoStep::Cross {
            wall: wall(g),
            ccw: true,
        },
        AutoStep::Cross {
            wall: wall(g + gp),
            ccw: true,
        },
        AutoStep::Cross {
            wall: wall(gp),
            ccw: true,
        },
    ]);
    Ok(lhs.auto_eq(&rhs))
}

/// Checks that `K_{-g} K_g` acts as the twist by `picard_lefschetz(g)`,
/// i.e. on exponents by `PL(g)^{-1}`. Requires `g` primitive.
pub fn focus_focus_check(g: LatticeVec) -> Result<bool, Error> {
    if !g.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let word = TorusAuto::from_steps(vec![
        AutoStep::Cross {
            wall: Wall::simple(g, PiAngle::zero(), 1),
            ccw: true,
        },
        AutoStep::Cross {
            wall: Wall::simple(-g, PiAngle::zero(), 1),
            ccw: true,
        },
    ]);
    Ok(word.auto_eq(&TorusAuto::twist(picard_lefschetz(&g))))
}

/// The full counterclockwise loop based just after the branch cut: walls
/// `base+1 ..= n` in order, the cut twist, then walls `1 ..= base`.
pub fn loop_word(diagram: &ScatteringDiagram, base: usize) -> TorusAuto {
    let n = diagram.walls.len();
    debug_assert!(base <= n);
    let mut steps = Vec::new();
    for wall in &diagram.walls[base..] {
        steps.push(AutoStep::Cross {
            wall: wall.clone(),
            ccw: true,
        });
    }
    steps.push(AutoStep::Twist(
        diagram
            .monodromy
            .inverse()
            .expect("monodromy is unimodular"),
    ));
    for wall in &diagram.walls[..base] {
        steps.push(AutoStep::Cross {
            wall: wall.clone(),
            ccw: true,
        });
    }
    TorusAuto::from_steps(steps)
}

/// The clockwise full loop from the same base point (the exact inverse word).
pub fn loop_word_cw(diagram: &ScatteringDiagram) -> TorusAuto {
    let mut steps = vec![AutoStep::Twist(diagram.monodromy)];
    for wall in diagram.walls.iter().rev() {
        steps.push(AutoStep::Cross {
            wall: wall.clone(),
            ccw: false,
        });
    }
    TorusAuto::from_steps(steps)
}

/// Witnesses of the full-loop consistency check.
#[derive(Clone, Debug)]
pub struct LoopReport {
    pub identity: bool,
    pub image_e1: RatFn,
    pub image_e2: RatFn,
}

/// Composes every crossing counterclockwise and the monodromy twist, and
/// reports whether the composite is the identity automorphism.
///
/// Attached coefficient monomials track the chart gluings of the mirror
/// family, whose fibres are permuted by the loop; the cancellation is the
/// statement about the distinguished fibre where every coefficient is 1, so
/// images are specialized before comparison. For coefficient-free diagrams
/// this changes nothing.
pub fn loop_consistency(diagram: &ScatteringDiagram) -> LoopReport {
    let word = loop_word(diagram, 0);
    let image_e1 = word.apply(&RatFn::monomial(LatticeVec::e1())).specialize();
    let image_e2 = word.apply(&RatFn::monomial(LatticeVec::e2())).specialize();
    let identity = image_e1.rf_eq(&RatFn::monomial(LatticeVec::e1()))
        && image_e2.rf_eq(&RatFn::monomial(LatticeVec::e2()));
    LoopReport {
        identity,
        image_e1,
        image_e2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> LatticeVec {
        LatticeVec::new(a, b)
    }

    #[test]
    fn cross_action_basic_images() {
        let w = Wall::simple(LatticeVec::e2(), PiAngle::zero(), 1);
        let expect = RatFn::from_poly(
            LaurentPoly::monomial(LatticeVec::e1())
                .mul(&LaurentPoly::one().add(&LaurentPoly::monomial(LatticeVec::e2()))),
        );
        assert!(cross_action(&w, true, LatticeVec::e1()).rf_eq(&expect));
        // The wall's own class is fixed.
        assert!(cross_action(&w, true, LatticeVec::e2()).rf_eq(&RatFn::monomial(LatticeVec::e2())));
        // Negative pairing lands in the denominator.
        let m = v(-1, 1);
        let img = cross_action(&w, true, m);
        let inv = RatFn::new(
            LaurentPoly::monomial(m),
            LaurentPoly::one().add(&LaurentPoly::monomial(LatticeVec::e2())),
        );
        assert!(img.rf_eq(&inv));
    }

    #[test]
    fn crossing_then_back_is_identity() {
        let w = Wall::simple(v(1, 2), PiAngle::zero(), 3);
        let word = TorusAuto::from_steps(vec![
            AutoStep::Cross {
                wall: w.clone(),
                ccw: true,
            },
            AutoStep::Cross {
                wall: w,
                ccw: false,
            },
        ]);
        assert!(word.auto_eq(&TorusAuto::identity()));
    }

    #[test]
    fn twist_moves_exponents_by_inverse() {
        let m = Mat2::from_cols(v(0, -1), v(1, 1));
        let word = TorusAuto::twist(m);
        let img = word.apply(&RatFn::monomial(LatticeVec::e1()));
        let mi = m.inverse().unwrap();
        assert!(img.rf_eq(&RatFn::monomial(mi.apply(&LatticeVec::e1()))));
    }

    #[test]
    fn pentagon_on_the_standard_pair() {
        assert_eq!(pentagon_check(LatticeVec::e2(), LatticeVec::e1()), Ok(true));
        assert_eq!(
            pentagon_check(LatticeVec::e1(), LatticeVec::e2()),
            Err(Error::PairingNotOne { got: -1 })
        );
        assert_eq!(
            pentagon_check(LatticeVec::e1(), LatticeVec::e1()),
            Err(Error::PairingNotOne { got: 0 })
        );
    }

    #[test]
    fn focus_focus_on_basis_vectors() {
        assert_eq!(focus_focus_check(LatticeVec::e1()), Ok(true));
        assert_eq!(focus_focus_check(LatticeVec::e2()), Ok(true));
        assert_eq!(focus_focus_check(v(1, 1)), Ok(true));
        assert_eq!(focus_focus_check(v(2, 2)), Err(Error::NotPrimitive));
    }

    #[test]
    fn compose_concatenates_words() {
        let a = TorusAuto::cross(Wall::simple(LatticeVec::e2(), PiAngle::zero(), 1), true);
        let b = TorusAuto::cross(Wall::simple(LatticeVec::e1(), PiAngle::zero(), 1), true);
        let ab = TorusAuto::compose(&a, &b);
        let m = RatFn::monomial(v(1, 1));
        assert!(ab.apply(&m).rf_eq(&a.apply(&b.apply(&m))));
        assert!(TorusAuto::compose(&a, &TorusAuto::identity()).auto_eq(&a));
    }
}
