//! The three finite rank-2 case diagrams and their exact charge data.
//!
//! Each case has n = 5 / 6 / 8 walls at equally spaced angles, boundary
//! classes generated by the recurrence `g_{i+1} = -g_{i-1} - D_i^2 g_i` from
//! the self-intersection sequence, a monodromy matrix shifting wall classes,
//! and central charges `Z_k(u) = c_k u^p` stored in exact polar form
//! (squared magnitude and phase as rational multiples of pi).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::angle::PiAngle;
use crate::coeff::CoeffMonomial;
use crate::lattice::{factor_monodromy, LatticeVec, Mat2};
use crate::wallcross::{Wall, WallFactor};
use crate::Error;

/// The case names; II, III, IV are the fibre labels for the same objects.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CaseId {
    A2,
    B2,
    G2,
}

impl CaseId {
    pub const II: CaseId = CaseId::A2;
    pub const III: CaseId = CaseId::B2;
    pub const IV: CaseId = CaseId::G2;

    pub const ALL: [CaseId; 3] = [CaseId::A2, CaseId::B2, CaseId::G2];

    pub fn wall_count(self) -> usize {
        match self {
            CaseId::A2 => 5,
            CaseId::B2 => 6,
            CaseId::G2 => 8,
        }
    }

    /// The central-charge exponent `p` in `Z = c u^p`.
    pub fn power(self) -> Ratio<i64> {
        match self {
            CaseId::A2 => Ratio::new(5, 6),
            CaseId::B2 => Ratio::new(3, 4),
            CaseId::G2 => Ratio::new(2, 3),
        }
    }

    /// How far the monodromy advances wall classes: `M g_i = g_{i+s}`.
    pub fn monodromy_shift(self) -> usize {
        match self {
            CaseId::A2 => 1,
            CaseId::B2 => 2,
            CaseId::G2 => 4,
        }
    }

    /// `d` in the shear factorization `M = PL(e1) * PL(e2)^d`.
    pub fn shear_power(self) -> u32 {
        match self {
            CaseId::A2 => 1,
            CaseId::B2 => 2,
            CaseId::G2 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseId::A2 => "A2",
            CaseId::B2 => "B2",
            CaseId::G2 => "G2",
        }
    }

    pub fn numeral(self) -> &'static str {
        match self {
            CaseId::A2 => "II",
            CaseId::B2 => "III",
            CaseId::G2 => "IV",
        }
    }

    pub fn parse(s: &str) -> Option<CaseId> {
        match s.to_ascii_lowercase().as_str() {
            "a2" | "ii" => Some(CaseId::A2),
            "b2" | "iii" => Some(CaseId::B2),
            "g2" | "iv" => Some(CaseId::G2),
            _ => None,
        }
    }
}

/// Whether wall functions carry formal curve-class coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CoeffMode {
    /// All coefficient generators set to 1.
    #[default]
    Specialized,
    /// Walls carry `z^{[E_i]}` / `z^{[C_i]}` coefficients and `[D_i]` bending.
    Ghk,
}

/// A central charge `c * u^p` with `c` in exact polar form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PolarCharge {
    /// `|c|^2`, exactly rational in all three cases.
    pub mag2: Ratio<i64>,
    /// `Arg(c) / pi`, normalized to `[0, 2)`.
    pub phase_pi: Ratio<i64>,
}

impl PolarCharge {
    pub fn new(mag2: Ratio<i64>, phase_pi: Ratio<i64>) -> Self {
        assert!(
            mag2 > Ratio::new(0, 1),
            "central charge magnitude must be positive"
        );
        PolarCharge {
            mag2,
            phase_pi: wrap_two(phase_pi),
        }
    }
}

fn wrap_two(r: Ratio<i64>) -> Ratio<i64> {
    let two = Ratio::new(2, 1);
    let mut r = r - (r / two).floor() * two;
    if r < Ratio::new(0, 1) {
        r += two;
    }
    r
}

/// A case diagram: cyclically ordered walls plus exact charge data.
#[derive(Clone, Debug)]
pub struct ScatteringDiagram {
    pub case: CaseId,
    pub mode: CoeffMode,
    /// Walls in counterclockwise order, wall k at angle `(k-1) * gap`.
    pub walls: Vec<Wall>,
    /// The branch cut, midway between the last wall and the first.
    pub cut_angle: PiAngle,
    pub monodromy: Mat2,
    /// Self-intersections `D_i^2` driving the class recurrence.
    pub selfints: Vec<i64>,
    pub charges: Vec<PolarCharge>,
}

fn base_classes(case: CaseId) -> Vec<LatticeVec> {
    let v = |a, b| LatticeVec::new(a, b);
    match case {
        CaseId::A2 => vec![v(-1, 0), v(0, 1), v(1, 1), v(1, 0), v(0, -1)],
        CaseId::B2 => vec![v(-1, 0), v(0, 1), v(1, 2), v(1, 1), v(1, 0), v(0, -1)],
        CaseId::G2 => vec![
            v(-1, 0),
            v(0, 1),
            v(1, 3),
            v(1, 2),
            v(2, 3),
            v(1, 1),
            v(1, 0),
            v(0, -1),
        ],
    }
}

fn monodromy_matrix(case: CaseId) -> Mat2 {
    match case {
        CaseId::A2 => Mat2::from_rows([[0, 1], [-1, 1]]),
        CaseId::B2 => Mat2::from_rows([[-1, 1], [-2, 1]]),
        CaseId::G2 => Mat2::from_rows([[-2, 1], [-3, 1]]),
    }
}

fn charge_table(case: CaseId) -> Vec<PolarCharge> {
    let n = case.wall_count();
    let p = case.power();
    let one = Ratio::new(1, 1);
    // Monodromy continuation: c_{k+s} = c_k * e^{2 pi i p}, with the base
    // constants below read off wall by wall.
    let seeds: Vec<PolarCharge> = match case {
        // c_k = e^{2 pi i (k-1) 5/6}: each successive ray is one full
        // monodromy continuation of the previous (shift 1).
        CaseId::A2 => vec![PolarCharge::new(one, Ratio::new(0, 1))],
        // Odd rays e^{pi i 3(k-1)/4}; even rays (1-i)/2 times the same step.
        CaseId::B2 => vec![
            PolarCharge::new(one, Ratio::new(0, 1)),
            PolarCharge::new(Ratio::new(1, 2), Ratio::new(-1, 4)),
        ],
        CaseId::G2 => vec![
            PolarCharge::new(one, Ratio::new(0, 1)),
            PolarCharge::new(Ratio::new(1, 3), Ratio::new(-1, 6)),
            PolarCharge::new(one, Ratio::new(-1, 3)),
            PolarCharge::new(Ratio::new(1, 3), Ratio::new(-1, 2)),
        ],
    };
    let shift = case.monodromy_shift();
    let step = Ratio::new(2, 1) * p;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let base = &seeds[k % shift];
        let turns = (k / shift) as i64;
        out.push(PolarCharge::new(
            base.mag2,
            base.phase_pi + step * Ratio::new(turns, 1),
        ));
    }
    out
}

fn wall_factors(case: CaseId, mode: CoeffMode, k: usize, mult: u32) -> Vec<WallFactor> {
    match mode {
        CoeffMode::Specialized => vec![WallFactor {
            coeff: CoeffMonomial::one(),
            mult,
        }],
        CoeffMode::Ghk => match case {
            CaseId::A2 => {
                let name = format!("E{k}");
                vec![WallFactor {
                    coeff: CoeffMonomial::generator(&name),
                    mult: 1,
                }]
            }
            CaseId::B2 => {
                if mult == 1 {
                    let name = format!("C{k}");
                    vec![WallFactor {
                        coeff: CoeffMonomial::generator(&name),
                        mult: 1,
                    }]
                } else {
                    ["a", "b"]
                        .iter()
                        .map(|suffix| WallFactor {
                            coeff: CoeffMonomial::generator(&format!("C{k}{suffix}")),
                            mult: 1,
                        })
                        .collect()
                }
            }
            CaseId::G2 => unreachable!("rejected before wall construction"),
        },
    }
}

/// Builds a case diagram. The G2 coefficient curve classes are not
/// tabulated, so `(G2, Ghk)` is rejected; use specialized coefficients.
pub fn build_case(case: CaseId, mode: CoeffMode) -> Result<ScatteringDiagram, Error> {
    if case == CaseId::G2 && mode == CoeffMode::Ghk {
        return Err(Error::CoeffsUnavailable(
            "G2 wall coefficients are not tabulated; use specialized mode",
        ));
    }
    let classes = base_classes(case);
    let n = classes.len();
    debug_assert_eq!(n, case.wall_count());
    let selfints: Vec<i64> = (0..n)
        .map(|i| match case {
            CaseId::A2 => -1,
            CaseId::B2 => {
                if i % 2 == 0 {
                    -1
                } else {
                    -2
                }
            }
            CaseId::G2 => {
                if i % 2 == 0 {
                    -1
                } else {
                    -3
                }
            }
        })
        .collect();
    let walls: Vec<Wall> = classes
        .iter()
        .enumerate()
        .map(|(i, &class)| {
            let k = i + 1;
            let mult = (-selfints[i]) as u32;
            let angle = PiAngle::new(2 * i as i64, n as i64);
            let bending = match mode {
                CoeffMode::Specialized => None,
                CoeffMode::Ghk => Some(format!("D{k}")),
            };
            Wall::with_coeffs(class, angle, wall_factors(case, mode, k, mult), bending)
        })
        .collect();
    // Midpoint of the empty sector between the last wall and angle 2 pi.
    let cut_angle =
        PiAngle::from_ratio(Ratio::new(2 * (n as i64 - 1) + 2 * n as i64, 2 * n as i64));
    Ok(ScatteringDiagram {
        case,
        mode,
        walls,
        cut_angle,
        monodromy: monodromy_matrix(case),
        selfints,
        charges: charge_table(case),
    })
}

impl ScatteringDiagram {
    pub fn wall_count(&self) -> usize {
        self.walls.len()
    }

    /// The wall with 1-based index `k`.
    pub fn wall(&self, k: usize) -> &Wall {
        &self.walls[k - 1]
    }

    /// The angular gap between consecutive walls.
    pub fn gap(&self) -> PiAngle {
        PiAngle::new(2, self.walls.len() as i64)
    }

    /// Boundary class with 1-based index `j`, continued past both ends by
    /// the recurrence `g_{i+1} = -g_{i-1} - D_i^2 g_i` (self-intersections
    /// repeat cyclically).
    pub fn extended_class(&self, j: i64) -> LatticeVec {
        let n = self.walls.len() as i64;
        if (1..=n).contains(&j) {
            return self.walls[(j - 1) as usize].class;
        }
        let d2 = |i: i64| self.selfints[(i - 1).rem_euclid(n) as usize];
        if j > n {
            let a = self.extended_class(j - 2);
            let b = self.extended_class(j - 1);
            -a - b.scale(d2(j - 1))
        } else {
            let a = self.extended_class(j + 2);
            let b = self.extended_class(j + 1);
            -a - b.scale(d2(j + 1))
        }
    }

    /// Central charge of the extended ray index `j` (1-based), continued
    /// past both ends by full monodromy turns: one turn multiplies the
    /// charge by `e^{2 pi i p}`.
    pub fn extended_charge(&self, j: i64) -> PolarCharge {
        let shift = self.case.monodromy_shift() as i64;
        let p = self.case.power();
        let idx = (j - 1).rem_euclid(shift);
        let turns = (j - 1 - idx) / shift;
        let base = &self.charges[idx as usize];
        PolarCharge::new(
            base.mag2,
            base.phase_pi + Ratio::new(2, 1) * p * Ratio::new(turns, 1),
        )
    }

    /// Every interior triple satisfies the class recurrence exactly.
    pub fn class_recurrence_check(&self) -> bool {
        let n = self.walls.len();
        (1..n - 1).all(|i| {
            self.walls[i + 1].class
                == -self.walls[i - 1].class - self.walls[i].class.scale(self.selfints[i])
        })
    }

    /// The monodromy advances every wall class by the case shift, landing in
    /// the recurrence-continued sequence past the last wall.
    pub fn monodromy_shift_check(&self) -> bool {
        let n = self.walls.len() as i64;
        let s = self.case.monodromy_shift() as i64;
        (1..=n).all(|i| self.monodromy.apply(&self.extended_class(i)) == self.extended_class(i + s))
    }

    /// Factors the monodromy as `PL(e1) * PL(e2)^d` with the case's `d`.
    pub fn monodromy_factors(&self) -> Result<(Mat2, Mat2), Error> {
        factor_monodromy(&self.monodromy, self.case.shear_power())
    }

    /// Exact BPS ray angle of charge `k` (1-based) in units of pi: the
    /// smallest `t >= 0` with `p*t + phase ≡ 0 (mod 2)`.
    pub fn ray_angle_pi(&self, k: usize) -> Ratio<i64> {
        let p = self.case.power();
        let phase = self.charges[k - 1].phase_pi;
        let modulus = Ratio::new(2, 1) / p;
        let raw = -phase / p;
        let mut t = raw - (raw / modulus).floor() * modulus;
        if t < Ratio::new(0, 1) {
            t += modulus;
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_counts_and_recurrence() {
        for case in CaseId::ALL {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            assert_eq!(d.wall_count(), case.wall_count());
            assert!(d.class_recurrence_check(), "{case:?}");
            assert!(d.monodromy_shift_check(), "{case:?}");
            assert_eq!(d.monodromy.det(), 1);
        }
    }

    #[test]
    fn named_wall_classes() {
        let b2 = build_case(CaseId::B2, CoeffMode::Specialized).unwrap();
        assert_eq!(b2.wall(3).class, LatticeVec::new(1, 2));
        let g2 = build_case(CaseId::G2, CoeffMode::Specialized).unwrap();
        assert_eq!(g2.wall(5).class, LatticeVec::new(2, 3));
        assert_eq!(g2.wall(5).total_mult(), 1);
        assert_eq!(g2.wall(6).total_mult(), 3);
    }

    #[test]
    fn ray_angles_are_uniform() {
        for case in CaseId::ALL {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            let n = d.wall_count();
            for k in 1..=n {
                assert_eq!(
                    d.ray_angle_pi(k),
                    Ratio::new(2 * (k as i64 - 1), n as i64),
                    "{case:?} ray {k}"
                );
                assert_eq!(d.wall(k).angle.ratio(), d.ray_angle_pi(k));
            }
        }
    }

    #[test]
    fn ghk_coefficients() {
        let a2 = build_case(CaseId::A2, CoeffMode::Ghk).unwrap();
        assert_eq!(a2.wall(2).factors.len(), 1);
        assert_eq!(a2.wall(2).factors[0].coeff, CoeffMonomial::generator("E2"));
        assert_eq!(a2.wall(2).bending.as_deref(), Some("D2"));
        let b2 = build_case(CaseId::B2, CoeffMode::Ghk).unwrap();
        assert_eq!(b2.wall(2).factors.len(), 2);
        assert_eq!(b2.wall(3).factors[0].coeff, CoeffMonomial::generator("C3"));
        assert!(matches!(
            build_case(CaseId::G2, CoeffMode::Ghk),
            Err(Error::CoeffsUnavailable(_))
        ));
    }

    #[test]
    fn monodromy_orders_and_factors() {
        use crate::lattice::map_order;
        let orders = [(CaseId::A2, 6), (CaseId::B2, 4), (CaseId::G2, 3)];
        for (case, ord) in orders {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            assert_eq!(map_order(&d.monodromy, 24), Some(ord));
            let (s1, s2) = d.monodromy_factors().unwrap();
            assert_eq!(s1.mul(&s2), d.monodromy);
        }
    }

    #[test]
    fn charge_phases_match_ray_spacing() {
        // The cut sits in the last empty sector.
        let a2 = build_case(CaseId::A2, CoeffMode::Specialized).unwrap();
        assert_eq!(a2.cut_angle.ratio(), Ratio::new(9, 5));
        assert_eq!(a2.charges[2].phase_pi, Ratio::new(4, 3));
        let g2 = build_case(CaseId::G2, CoeffMode::Specialized).unwrap();
        assert_eq!(g2.charges[1].mag2, Ratio::new(1, 3));
        assert_eq!(g2.charges[1].phase_pi, Ratio::new(11, 6));
    }

    #[test]
    fn extended_charges_continue_by_monodromy_turns() {
        for case in CaseId::ALL {
            let d = build_case(case, CoeffMode::Specialized).unwrap();
            for k in 1..=d.wall_count() {
                let c = d.extended_charge(k as i64);
                assert_eq!(c.mag2, d.charges[k - 1].mag2);
                assert_eq!(c.phase_pi, d.charges[k - 1].phase_pi);
            }
        }
        let a2 = build_case(CaseId::A2, CoeffMode::Specialized).unwrap();
        // One more turn past the last wall: phase 0 + 2 * 5/6 * 5 = 25/3,
        // wrapped into [0, 2).
        assert_eq!(a2.extended_charge(6).phase_pi, Ratio::new(1, 3));
    }
}
