//! Integral affine structures with one focus-type singularity and their
//! piecewise-linear shadows.
//!
//! An [`AffineStructure`] is a cyclic atlas of lattice charts around the
//! singular point: ray `i+1` is determined from rays `i-1`, `i` by the
//! self-intersection recurrence, each consecutive chart pair is glued by a
//! unimodular transition, and the product of all transitions is the global
//! monodromy. On top of the atlas live multivalued piecewise-linear sections
//! ([`MultiValuedPL`]) that bend across rays by prescribed coefficient
//! classes, and fans of unimodular matrices ([`PLMap`]) modelling what wall
//! crossings and twists do to monomial weight vectors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;

use crate::cases::{build_case, CaseId, CoeffMode, ScatteringDiagram};
use crate::lattice::{LatticeVec, Mat2};
use crate::wallcross::{loop_word, AutoStep, Wall};
use crate::Error;

/// A cyclic atlas of lattice charts: `n` rays with self-intersections, the
/// chart-to-chart transitions, and their composite monodromy.
#[derive(Clone, Debug)]
pub struct AffineStructure {
    /// Self-intersections `D_i^2` indexed by ray, repeating cyclically.
    pub selfints: Vec<i64>,
    /// Rays `w_1 .. w_{n+2}` in the first chart's coordinates; the last two
    /// re-enter after a full turn and differ from `w_1, w_2` by monodromy.
    pub rays: Vec<LatticeVec>,
    /// `transitions[i-1]` rewrites chart-`i` coordinates in chart `i+1`.
    pub transitions: Vec<Mat2>,
    /// The full counterclockwise composite of all transitions.
    pub monodromy: Mat2,
}

/// Builds the affine structure with the given self-intersection sequence:
/// rays start at `e1, e2` and follow `w_{i+1} = -w_{i-1} - D_i^2 w_i`.
pub fn build_bghk(selfints: &[i64]) -> Result<AffineStructure, Error> {
    let n = selfints.len();
    if n < 3 {
        return Err(Error::TooFewRays { got: n });
    }
    let mut rays = vec![LatticeVec::e1(), LatticeVec::e2()];
    for j in 2..n + 2 {
        let dsq = selfints[(j - 1) % n];
        let next = -(rays[j - 2] + rays[j - 1].scale(dsq));
        rays.push(next);
    }
    let transitions: Vec<Mat2> = selfints
        .iter()
        .map(|&d| Mat2::from_rows([[-d, 1], [-1, 0]]))
        .collect();
    let mut monodromy = transitions[0];
    for t in &transitions[1..] {
        monodromy = monodromy.mul(t);
    }
    Ok(AffineStructure {
        selfints: selfints.to_vec(),
        rays,
        transitions,
        monodromy,
    })
}

impl AffineStructure {
    pub fn chart_count(&self) -> usize {
        self.selfints.len()
    }

    /// Every ray triple satisfies `w_{i-1} + D_i^2 w_i + w_{i+1} = 0`.
    pub fn recurrence_check(&self) -> bool {
        let n = self.chart_count();
        (2..n + 2).all(|j| {
            let dsq = self.selfints[(j - 1) % n];
            (self.rays[j - 2] + self.rays[j - 1].scale(dsq) + self.rays[j]).is_zero()
        })
    }
}

/// The composite of all chart transitions, counterclockwise around the
/// singular point; it carries the two re-entrant rays back onto `w_1, w_2`.
pub fn global_monodromy(a: &AffineStructure) -> Mat2 {
    a.monodromy
}

/// A vector in the free abelian group on named classes. Exponent vectors in
/// `CoeffMonomial` are products of nonnegative powers; sections need signs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoeffVec {
    coords: BTreeMap<String, i64>,
}

impl CoeffVec {
    pub fn zero() -> Self {
        CoeffVec::default()
    }

    pub fn generator(name: &str) -> Self {
        CoeffVec::single(name, 1)
    }

    pub fn single(name: &str, k: i64) -> Self {
        let mut coords = BTreeMap::new();
        if k != 0 {
            coords.insert(String::from(name), k);
        }
        CoeffVec { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &CoeffVec) -> CoeffVec {
        let mut coords = self.coords.clone();
        for (name, k) in &other.coords {
            let entry = coords.entry(name.clone()).or_insert(0);
            *entry += k;
            if *entry == 0 {
                coords.remove(name);
            }
        }
        CoeffVec { coords }
    }

    pub fn scale(&self, k: i64) -> CoeffVec {
        if k == 0 {
            return CoeffVec::zero();
        }
        CoeffVec {
            coords: self
                .coords
                .iter()
                .map(|(n, c)| (n.clone(), c * k))
                .collect(),
        }
    }
}

/// A multivalued piecewise-linear section over an [`AffineStructure`],
/// stored as one linear representative per cone: section `c` is linear on
/// the cone spanned by `w_c, w_{c+1}` and is recorded by its values on the
/// basis, each a [`CoeffVec`].
#[derive(Clone, Debug)]
pub struct MultiValuedPL {
    /// `(value at e1, value at e2)` for sections `1 ..= n+1`.
    pub sections: Vec<[CoeffVec; 2]>,
}

impl MultiValuedPL {
    /// The value of section `c` (1-based) at `v`.
    pub fn value(&self, c: usize, v: LatticeVec) -> CoeffVec {
        let s = &self.sections[c - 1];
        s[0].scale(v.a).add(&s[1].scale(v.b))
    }

    /// The value at ray `w_j`; the two adjacent sections agree there, so the
    /// lower one is used (clamped to the first section for `j = 1`).
    pub fn value_at_ray(&self, a: &AffineStructure, j: usize) -> CoeffVec {
        let c = if j > 1 { j - 1 } else { 1 };
        self.value(c, a.rays[j - 1])
    }
}

/// Builds the section that vanishes on the first cone and bends across each
/// ray `w_c` by `det(w_c, -) * bends[c]`, indices cyclic in the ray class.
pub fn build_pl(a: &AffineStructure, bends: &[CoeffVec]) -> MultiValuedPL {
    let n = a.chart_count();
    assert_eq!(bends.len(), n, "one bend class per ray");
    let mut sections = vec![[CoeffVec::zero(), CoeffVec::zero()]];
    for c in 2..=n + 1 {
        let w = a.rays[c - 1];
        let bend = &bends[(c - 1) % n];
        let prev = sections.last().expect("nonempty");
        // det(w, e1) = -w.b and det(w, e2) = w.a
        sections.push([
            prev[0].add(&bend.scale(-w.b)),
            prev[1].add(&bend.scale(w.a)),
        ]);
    }
    MultiValuedPL { sections }
}

/// Checks the canonical lift identity `phi(w_{i-1}) + D_i^2 phi(w_i) +
/// phi(w_{i+1}) = [D_i]` with one generator class bent across each ray.
pub fn pl_section_check(a: &AffineStructure) -> bool {
    let classes: Vec<CoeffVec> = (1..=a.chart_count())
        .map(|i| CoeffVec::generator(&format!("D{i}")))
        .collect();
    pl_section_check_with(a, &classes, &classes)
}

/// The general form: bends across rays given by `bends`, and the recurrence
/// combination at ray `i` required to equal `targets[i]` (both cyclic).
pub fn pl_section_check_with(
    a: &AffineStructure,
    bends: &[CoeffVec],
    targets: &[CoeffVec],
) -> bool {
    let n = a.chart_count();
    assert_eq!(targets.len(), n, "one target class per ray");
    let pl = build_pl(a, bends);
    (2..=n + 1).all(|i| {
        let dsq = a.selfints[(i - 1) % n];
        let lhs = pl
            .value_at_ray(a, i - 1)
            .add(&pl.value_at_ray(a, i).scale(dsq))
            .add(&pl.value_at_ray(a, i + 1));
        lhs == targets[(i - 1) % n]
    })
}

fn dot(u: LatticeVec, v: LatticeVec) -> i64 {
    u.a * v.a + u.b * v.b
}

fn upper_half(u: LatticeVec) -> bool {
    u.b > 0 || (u.b == 0 && u.a > 0)
}

/// Counterclockwise ray order starting at `(1, 0)`; primitive vectors
/// compare equal exactly when they span the same ray.
fn cmp_ccw(u: &LatticeVec, v: &LatticeVec) -> Ordering {
    let hu = u8::from(!upper_half(*u));
    let hv = u8::from(!upper_half(*v));
    hu.cmp(&hv).then_with(|| 0.cmp(&u.pair(v)))
}

fn normalize_fan(mut rays: Vec<LatticeVec>) -> Vec<LatticeVec> {
    rays.sort_by(cmp_ccw);
    rays.dedup();
    rays
}

/// A piecewise-linear map of the weight plane: a complete fan of primitive
/// rays in counterclockwise order with one matrix per sector. The four axis
/// directions are always part of the fan, so every sector is salient.
#[derive(Clone, Debug)]
pub struct PLMap {
    rays: Vec<LatticeVec>,
    mats: Vec<Mat2>,
}

impl PLMap {
    /// Builds a map from its break rays and a sector classifier; `classify`
    /// receives one interior witness per sector.
    pub fn from_pieces(extra: &[LatticeVec], classify: impl Fn(LatticeVec) -> Mat2) -> PLMap {
        let mut rays = vec![
            LatticeVec::e1(),
            LatticeVec::e2(),
            -LatticeVec::e1(),
            -LatticeVec::e2(),
        ];
        for r in extra {
            if let Some(p) = r.primitive() {
                rays.push(p);
            }
        }
        let rays = normalize_fan(rays);
        let k = rays.len();
        let mats = (0..k)
            .map(|j| classify(rays[j] + rays[(j + 1) % k]))
            .collect();
        PLMap { rays, mats }
    }

    pub fn identity() -> PLMap {
        PLMap::linear(Mat2::identity())
    }

    pub fn linear(m: Mat2) -> PLMap {
        PLMap::from_pieces(&[], |_| m)
    }

    pub fn rays(&self) -> &[LatticeVec] {
        &self.rays
    }

    /// The sector containing `v != 0`; points on a shared ray go to the
    /// sector on their counterclockwise side (the maps agree there anyway).
    pub fn sector_of(&self, v: LatticeVec) -> usize {
        debug_assert!(!v.is_zero());
        let k = self.rays.len();
        for j in 0..k {
            let lo = self.rays[j];
            let c = lo.pair(&v);
            if c == 0 {
                if dot(lo, v) > 0 {
                    return j;
                }
                continue;
            }
            if c > 0 && v.pair(&self.rays[(j + 1) % k]) > 0 {
                return j;
            }
        }
        unreachable!("the fan covers the plane")
    }

    pub fn mat_at(&self, v: LatticeVec) -> Mat2 {
        if v.is_zero() {
            return self.mats[0];
        }
        self.mats[self.sector_of(v)]
    }

    pub fn eval(&self, v: LatticeVec) -> LatticeVec {
        if v.is_zero() {
            return v;
        }
        self.mat_at(v).apply(&v)
    }

    /// The composite `self . inner` (apply `inner` first), on the common
    /// refinement: `inner`'s rays plus the `inner`-preimages of `self`'s.
    pub fn compose(&self, inner: &PLMap) -> PLMap {
        let mut rays = inner.rays.clone();
        for (j, m) in inner.mats.iter().enumerate() {
            let inv = m.inverse().expect("sector matrices are unimodular");
            for r in &self.rays {
                let pre = inv
                    .apply(r)
                    .primitive()
                    .expect("preimage of a ray is a ray");
                if inner.sector_of(pre) == j {
                    rays.push(pre);
                }
            }
        }
        PLMap::from_pieces(&rays, |w| {
            let g = inner.mat_at(w);
            self.mat_at(g.apply(&w)).mul(&g)
        })
    }

    /// Equality as maps, checked on the union refinement of both fans.
    pub fn pl_eq(&self, other: &PLMap) -> bool {
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().copied());
        let rays = normalize_fan(rays);
        let k = rays.len();
        (0..k).all(|j| {
            let w = rays[j] + rays[(j + 1) % k];
            self.mat_at(w) == other.mat_at(w)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.pl_eq(&PLMap::identity())
    }

    /// Adjacent sector matrices agree on the shared ray.
    pub fn continuity_ok(&self) -> bool {
        let k = self.rays.len();
        (0..k).all(|j| {
            let r = self.rays[(j + 1) % k];
            self.mats[j].apply(&r) == self.mats[(j + 1) % k].apply(&r)
        })
    }
}

/// The weight-plane shadow of one wall crossing: the identity where the wall
/// class has nonnegative weight, and the unimodular shear
/// `w -> w + d (w . class) (class.b, -class.a)` on the other half plane
/// (sign flipped for clockwise crossings). `d` is the total multiplicity.
pub fn trop_wall_crossing(wall: &Wall, ccw: bool) -> PLMap {
    let g = wall.class;
    let d = {
        let m = wall.total_mult() as i64;
        if ccw {
            m
        } else {
            -m
        }
    };
    let n = LatticeVec::new(g.b, -g.a);
    let shear = Mat2::from_rows([
        [1 + d * g.a * n.a, d * g.b * n.a],
        [d * g.a * n.b, 1 + d * g.b * n.b],
    ]);
    PLMap::from_pieces(&[n, -n], move |w| {
        if dot(w, g) >= 0 {
            Mat2::identity()
        } else {
            shear
        }
    })
}

/// The shadow of the twist `z^v -> z^{T^{-1} v}` on weights: `(T^{-1})^t`.
pub fn trop_twist(t: &Mat2) -> PLMap {
    PLMap::linear(
        t.inverse()
            .expect("twist matrix must be unimodular")
            .transpose(),
    )
}

/// The shadow of one automorphism step. Shadows compose contravariantly:
/// the shadow of `s2 . s1` is `shadow(s1) . shadow(s2)`.
pub fn trop_shadow(step: &AutoStep) -> PLMap {
    match step {
        AutoStep::Cross { wall, ccw } => trop_wall_crossing(wall, *ccw),
        AutoStep::Twist(t) => trop_twist(t),
    }
}

/// Shadows the full counterclockwise loop word of a case diagram and checks
/// that the composite piecewise-linear map is the identity.
pub fn trop_loop_check(diagram: &ScatteringDiagram) -> bool {
    let word = loop_word(diagram, 0);
    let mut acc = PLMap::identity();
    for step in &word.steps {
        acc = acc.compose(&trop_shadow(step));
    }
    acc.is_identity()
}

/// The covector `l . s` (pull a linear functional back through a matrix).
pub fn functional_pullback(l: LatticeVec, s: &Mat2) -> LatticeVec {
    LatticeVec::new(
        l.a * s.m[0][0] + l.b * s.m[1][0],
        l.a * s.m[0][1] + l.b * s.m[1][1],
    )
}

/// One chamber of the containment sweep around a case diagram.
#[derive(Clone, Debug)]
pub struct ConeStep {
    /// Chamber index `i`: the region between rays `i+1` and `i+3` is pushed
    /// through the crossing at ray `i+1`.
    pub index: usize,
    /// Generators of the source region (closure of `U_{i+2}` minus the
    /// near half of `U_i`): the null direction at ray `i+1`, then ray `i+3`.
    pub region: [LatticeVec; 2],
    /// Images of the region generators under the crossing shear.
    pub images: [LatticeVec; 2],
    /// Generators of the target half chamber at ray `i+1`.
    pub target: [LatticeVec; 2],
    /// The region collapsed to a single ray or was empty outright.
    pub degenerate: bool,
    pub contained: bool,
    /// The far region edge landed exactly on the far target edge.
    pub edge_matched: bool,
}

/// The containment sweep result; `all_ok` requires every chamber contained
/// and, where the region is two-dimensional, the edges to match exactly.
#[derive(Clone, Debug)]
pub struct ConeReport {
    pub steps: Vec<ConeStep>,
    pub all_ok: bool,
}

/// Checks, chamber by chamber, that crossing a wall maps the region beyond
/// it into the half chamber on the wall's far side, with region, images and
/// targets all exact lattice data in the first chamber's frame.
pub fn cone_containment_check(case: CaseId) -> ConeReport {
    containment_report(case, true)
}

/// The same sweep with the crossing shear replaced by the identity; the far
/// edges then miss their targets, which is what `all_ok` detects.
pub fn cone_containment_unsheared(case: CaseId) -> ConeReport {
    containment_report(case, false)
}

fn containment_report(case: CaseId, apply_shear: bool) -> ConeReport {
    let d = build_case(case, CoeffMode::Specialized).expect("specialized mode always builds");
    let n = d.wall_count();
    let lam = lambda_chart(&d);
    let dirs: Vec<LatticeVec> = (1..=n + 3).map(|k| ray_direction(&d, &lam, k)).collect();
    let nulls: Vec<LatticeVec> = (2..=n + 2)
        .map(|k| null_plus(&lam, dirs[k - 1], k))
        .collect();
    let mut steps = Vec::with_capacity(n);
    for i in 1..=n {
        let shear = if apply_shear {
            chart_shear(&d, &lam, i + 1)
        } else {
            Mat2::identity()
        };
        let near = nulls[i - 1];
        let far = dirs[i + 2];
        let lo = dirs[i];
        let hi = nulls[i];
        let span = near.pair(&far);
        let images = [shear.apply(&near), shear.apply(&far)];
        let contained =
            span < 0 || (sector_member(lo, hi, images[0]) && sector_member(lo, hi, images[1]));
        let edge_matched = images[1].primitive() == Some(hi);
        steps.push(ConeStep {
            index: i,
            region: [near, far],
            images,
            target: [lo, hi],
            degenerate: span <= 0,
            contained,
            edge_matched,
        });
    }
    let all_ok = steps
        .iter()
        .all(|s| s.contained && (s.degenerate || s.edge_matched));
    ConeReport { steps, all_ok }
}

/// Boundary weight functionals developed into the first chamber's frame,
/// `l_1 .. l_{n+4}`, from the same recurrence as the classes.
fn lambda_chart(d: &ScatteringDiagram) -> Vec<LatticeVec> {
    let n = d.wall_count();
    let mut lam = vec![LatticeVec::e1(), LatticeVec::e2()];
    for k in 2..n + 4 {
        let dsq = d.selfints[(k - 1) % n];
        let next = -(lam[k - 2] + lam[k - 1].scale(dsq));
        lam.push(next);
    }
    lam
}

/// The weight of class `k+1` relative to class `k` along ray `k`: the
/// magnitude ratio of the central charges times the cosine of the phase a
/// single gap advances, all exactly rational for the case angles.
fn omega_ratio(d: &ScatteringDiagram, k: usize) -> Ratio<i64> {
    let n = d.wall_count();
    let here = d.charges[(k - 1) % n].mag2;
    let next = d.charges[k % n].mag2;
    let c2 = cos2_pi(d.case.power() * Ratio::new(2, n as i64));
    sqrt_ratio(next / here * c2)
}

/// `cos^2(x pi)` at the three gap angles that occur.
fn cos2_pi(x: Ratio<i64>) -> Ratio<i64> {
    match (*x.numer(), *x.denom()) {
        (1, 3) => Ratio::new(1, 4),
        (1, 4) => Ratio::new(1, 2),
        (1, 6) => Ratio::new(3, 4),
        _ => panic!("no exact cosine tabulated for {x} pi"),
    }
}

fn sqrt_ratio(r: Ratio<i64>) -> Ratio<i64> {
    let num = isqrt(*r.numer());
    let den = isqrt(*r.denom());
    assert_eq!(
        num * num,
        *r.numer(),
        "weight ratio must be a perfect square"
    );
    assert_eq!(
        den * den,
        *r.denom(),
        "weight ratio must be a perfect square"
    );
    Ratio::new(num, den)
}

fn isqrt(x: i64) -> i64 {
    debug_assert!(x >= 0);
    let mut r = 0;
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Direction of ray `k` in the first chamber's frame: the integer solution
/// of `l_k = den`, `l_{k+1} = num` for the exact weight ratio `num/den`.
fn ray_direction(d: &ScatteringDiagram, lam: &[LatticeVec], k: usize) -> LatticeVec {
    let r = omega_ratio(d, k);
    let frame = Mat2::from_rows([[lam[k - 1].a, lam[k - 1].b], [lam[k].a, lam[k].b]]);
    debug_assert_eq!(frame.det(), 1);
    frame
        .inverse()
        .expect("consecutive functionals form a unimodular frame")
        .apply(&LatticeVec::new(*r.denom(), *r.numer()))
        .primitive()
        .expect("ray directions are nonzero")
}

/// The null direction of functional `k` on the counterclockwise side of
/// ray `k`.
fn null_plus(lam: &[LatticeVec], dir: LatticeVec, k: usize) -> LatticeVec {
    let l = lam[k - 1];
    let u = LatticeVec::new(-l.b, l.a)
        .primitive()
        .expect("functionals are nonzero");
    debug_assert!(dir.pair(&u) != 0, "a ray never lies on its own null line");
    if dir.pair(&u) > 0 {
        u
    } else {
        -u
    }
}

/// The crossing at ray `r` seen in the first chamber's frame: the unique
/// map fixing functional `r` and adding `mult * l_r` to functional `r+1`.
fn chart_shear(d: &ScatteringDiagram, lam: &[LatticeVec], r: usize) -> Mat2 {
    let n = d.wall_count();
    let mult = d.wall((r - 1) % n + 1).total_mult() as i64;
    let la = lam[r - 1];
    let lb = lam[r];
    let frame = Mat2::from_rows([[la.a, la.b], [lb.a, lb.b]]);
    debug_assert_eq!(frame.det(), 1);
    let bent = Mat2::from_rows([[la.a, la.b], [lb.a + mult * la.a, lb.b + mult * la.b]]);
    frame
        .inverse()
        .expect("consecutive functionals form a unimodular frame")
        .mul(&bent)
}

fn sector_member(lo: LatticeVec, hi: LatticeVec, p: LatticeVec) -> bool {
    lo.pair(&p) >= 0 && p.pair(&hi) >= 0
}

/// The multiplication rule two neighbouring chart generators satisfy across
/// chart `i`, with coefficient classes per `mode`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingRelation {
    pub index: usize,
    pub chart_count: usize,
    pub selfint: i64,
    /// Bending class `[D_i]`, present with formal coefficients.
    pub bend: Option<String>,
    /// One coefficient class name per exceptional factor; `None` when the
    /// coefficient is specialized to 1.
    pub factors: Vec<Option<String>>,
}

/// Emits the relation `X_{i-1} X_{i+1} = z^{[D_i]} prod_j (X_i + z^{[c_j]})`
/// for chart `i`: one factor per exceptional class, so none for a toric
/// chart (`D_i^2 = 0`) and `-D_i^2` of them otherwise.
pub fn gluing_ring_relation(a: &AffineStructure, i: usize, mode: CoeffMode) -> GluingRelation {
    let n = a.chart_count();
    assert!(i >= 1 && i <= n, "chart index out of range");
    let dsq = a.selfints[i - 1];
    assert!(dsq <= 0, "chart self-intersections are nonpositive");
    let m = (-dsq) as usize;
    let factors: Vec<Option<String>> = match mode {
        CoeffMode::Specialized => vec![None; m],
        CoeffMode::Ghk => {
            let uniform = a.selfints.iter().all(|&d| d == -1);
            match m {
                0 => Vec::new(),
                1 if uniform => vec![Some(format!("E{i}"))],
                1 => vec![Some(format!("C{i}"))],
                _ => (0..m)
                    .map(|j| Some(format!("C{i}{}", char::from(b'a' + j as u8))))
                    .collect(),
            }
        }
    };
    let bend = match mode {
        CoeffMode::Specialized => None,
        CoeffMode::Ghk => Some(format!("D{i}")),
    };
    GluingRelation {
        index: i,
        chart_count: n,
        selfint: dsq,
        bend,
        factors,
    }
}

impl fmt::Display for GluingRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.chart_count;
        let prev = (self.index + n - 2) % n + 1;
        let next = self.index % n + 1;
        write!(f, "X{prev} X{next} =")?;
        let mut wrote = false;
        if let Some(bend) = &self.bend {
            write!(f, " z^[{bend}]")?;
            wrote = true;
        }
        let mut j = 0;
        while j < self.factors.len() {
            let mut k = j + 1;
            while k < self.factors.len() && self.factors[k] == self.factors[j] {
                k += 1;
            }
            match &self.factors[j] {
                Some(name) => write!(f, " (X{} + z^[{name}])", self.index)?,
                None => write!(f, " (X{} + 1)", self.index)?,
            }
            if k - j > 1 {
                write!(f, "^{}", k - j)?;
            }
            wrote = true;
            j = k;
        }
        if !wrote {
            write!(f, " 1")?;
        }
        Ok(())
    }
}
