//! Builds a case diagram, runs every check against it, and assembles the
//! results into a serializable report.
//!
//! The JSON layout is versioned (`"schema": "scatkit/1"`) and deterministic:
//! rows appear in a fixed order and floats are formatted through `serde_json`
//! defaults, so identical inputs produce byte-identical documents. Wall-clock
//! timing is kept out of the document for the same reason; it is recorded on
//! the report struct for the plain-text summary only.

use num_traits::{One, Zero};
use serde::Serialize;

use scatkit_core::affine::{
    build_bghk, cone_containment_check, global_monodromy, gluing_ring_relation, pl_section_check,
    trop_loop_check,
};
use scatkit_core::cases::{build_case, CaseId, CoeffMode, ScatteringDiagram};
use scatkit_core::lattice::{map_order, LatticeVec};
use scatkit_core::rng::SplitMix64;
use scatkit_core::series::{multiple_cover, wall_function_from_invariants};
use scatkit_core::theta::{detected_period, exchange_check, periodicity_check, well_defined_check};
use scatkit_core::wallcross::{focus_focus_check, loop_consistency, pentagon_check};
use scatkit_core::Error;

use crate::charges::{angle_gaps, charge_additivity};
use crate::periods::period_exponent_estimate;

pub const SCHEMA: &str = "scatkit/1";

/// One wall of the diagram, in display form.
#[derive(Serialize)]
pub struct WallRow {
    pub index: usize,
    pub class: String,
    pub multiplicity: u32,
    pub angle: String,
    pub function: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
}

/// One executed check.
#[derive(Serialize)]
pub struct CheckRow {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub case: String,
    pub coeffs: String,
    pub truncation: usize,
    pub seed: u64,
    pub walls: Vec<WallRow>,
    pub checks: Vec<CheckRow>,
    pub all_pass: bool,
    /// Wall-clock milliseconds; excluded from the JSON document so that
    /// reports stay byte-identical across runs.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text summary, one line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "case {} ({} coefficients): {} walls\n",
            self.case,
            self.coeffs,
            self.walls.len()
        ));
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {tag}  {:<24} {}\n", c.name, c.witness));
        }
        out.push_str(if self.all_pass {
            "all checks passed\n"
        } else {
            "SOME CHECKS FAILED\n"
        });
        out
    }
}

#[derive(Clone, Copy)]
pub struct RunOptions {
    pub truncation: usize,
    pub seed: u64,
    /// Run the (slower) numeric period quadrature.
    pub periods: bool,
    pub period_grid: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            truncation: 20,
            seed: 1,
            periods: false,
            period_grid: 400,
        }
    }
}

fn mode_name(mode: CoeffMode) -> &'static str {
    match mode {
        CoeffMode::Specialized => "specialized",
        CoeffMode::Ghk => "ghk",
    }
}

fn wall_rows(d: &ScatteringDiagram) -> Vec<WallRow> {
    d.walls
        .iter()
        .enumerate()
        .map(|(i, w)| WallRow {
            index: i + 1,
            class: w.class.to_string(),
            multiplicity: w.total_mult(),
            angle: w.angle.to_string(),
            function: w.function().to_string(),
            coefficient: w.bending.as_ref().map(|c| c.to_string()),
        })
        .collect()
}

fn row(name: &str, pass: bool, witness: String) -> CheckRow {
    CheckRow {
        name: name.to_string(),
        pass,
        witness,
    }
}

/// Sweeps the pentagon identity over random changes of basis, keeping the
/// transformed classes small (the identity is conjugation-invariant, and the
/// word expansions grow combinatorially with the pairing magnitudes).
fn pentagon_row(seed: u64, samples: usize) -> CheckRow {
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0usize;
    let mut attempts = 0usize;
    let mut pass = true;
    while checked < samples && attempts < 100 * samples {
        attempts += 1;
        let u = rng.unimodular(3);
        let g = u.apply(&LatticeVec::e2());
        let gp = u.apply(&LatticeVec::e1());
        if g.a.abs().max(g.b.abs()).max(gp.a.abs()).max(gp.b.abs()) > 5 {
            continue;
        }
        if pentagon_check(g, gp) != Ok(true) {
            pass = false;
            break;
        }
        checked += 1;
    }
    pass &= checked == samples;
    row(
        "pentagon",
        pass,
        format!("{checked} random changes of basis of (e2, e1), entries bounded by 5"),
    )
}

fn focus_focus_row() -> CheckRow {
    let mut checked = 0usize;
    let mut pass = true;
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let g = LatticeVec::new(a, b);
            if !g.is_primitive() {
                continue;
            }
            if focus_focus_check(g) != Ok(true) {
                pass = false;
            }
            checked += 1;
        }
    }
    row(
        "focus-focus",
        pass,
        format!("{checked} primitive classes with entries bounded by 3"),
    )
}

/// Runs the full check battery for one case and coefficient mode.
///
/// Fails with `CoeffsUnavailable` when the requested coefficient data does
/// not exist (general coefficients for the eight-wall case); any check
/// failure on a buildable case lands in the report instead.
pub fn run(case: CaseId, mode: CoeffMode, opts: &RunOptions) -> Result<Report, Error> {
    let start = std::time::Instant::now();
    let d = build_case(case, mode)?;
    let n = d.wall_count();
    let mut checks = Vec::new();

    checks.push(pentagon_row(opts.seed, 30));
    checks.push(focus_focus_row());

    let lr = loop_consistency(&d);
    checks.push(row(
        "loop-consistency",
        lr.identity,
        format!("z^(1,0) -> {}; z^(0,1) -> {}", lr.image_e1, lr.image_e2),
    ));

    match exchange_check(case, mode) {
        Ok(ex) => {
            let exps: Vec<u32> = ex.relations.iter().map(|r| r.exponent).collect();
            let wraps = ex.relations.iter().filter(|r| r.wraps_cut).count();
            checks.push(row(
                "exchange-relations",
                ex.all_hold() && ex.relations.len() == n,
                format!("{n} relations, exponents {exps:?}, {wraps} wrap the cut"),
            ));
        }
        Err(e) => checks.push(row("exchange-relations", false, e.to_string())),
    }

    let period = detected_period(case);
    let period_text = period.map_or("never".to_string(), |p| p.to_string());
    checks.push(row(
        "theta-periodicity",
        periodicity_check(case) && period == Some(n),
        format!("exchange recurrence returns to its seed after {period_text} steps"),
    ));

    checks.push(row(
        "transport-well-defined",
        well_defined_check(&d),
        "ray functions agree when transported either way around the cut".to_string(),
    ));

    let expected_order = match case {
        CaseId::A2 => 6,
        CaseId::B2 => 4,
        CaseId::G2 => 3,
    };
    let order = map_order(&d.monodromy, 12);
    match d.monodromy_factors() {
        Ok((m1, m2)) => checks.push(row(
            "monodromy-factorization",
            order == Some(expected_order),
            format!("M = {m1} * {m2}, order {expected_order}"),
        )),
        Err(e) => checks.push(row("monodromy-factorization", false, e.to_string())),
    }

    let ar = angle_gaps(&d);
    checks.push(row(
        "ray-angle-gaps",
        ar.ok,
        format!(
            "uniform gap {:.6} rad, max deviation {:.2e}",
            ar.expected, ar.max_err
        ),
    ));

    let ad = charge_additivity(&d);
    checks.push(row(
        "charge-additivity",
        ad.ok,
        format!(
            "central charges satisfy the class recurrence, max error {:.2e}",
            ad.max_err
        ),
    ));

    match build_bghk(&d.selfints) {
        Ok(a) => {
            let g = global_monodromy(&a);
            let conjugate = g.trace() == d.monodromy.trace()
                && g.det() == d.monodromy.det()
                && map_order(&g, 12) == order;
            checks.push(row(
                "affine-recurrence",
                a.recurrence_check() && conjugate,
                format!(
                    "chart classes close up; global monodromy {g} has trace {}, det {}",
                    g.trace(),
                    g.det()
                ),
            ));
            checks.push(row(
                "affine-sections",
                pl_section_check(&a),
                "piecewise-linear section matches every chart gluing".to_string(),
            ));
        }
        Err(e) => {
            checks.push(row("affine-recurrence", false, e.to_string()));
            checks.push(row("affine-sections", false, e.to_string()));
        }
    }

    let cones = cone_containment_check(case);
    checks.push(row(
        "cone-containment",
        cones.all_ok && cones.steps.len() == n,
        format!("{n} sheared sectors land inside their successors"),
    ));

    checks.push(row(
        "tropical-loop",
        trop_loop_check(&d),
        "piecewise-linear shadows of the loop compose to the identity".to_string(),
    ));

    let series = wall_function_from_invariants(multiple_cover(1), opts.truncation);
    let mut cover_ok = series.coeff(0).is_one() && series.coeff(1).is_one();
    for k in 2..=opts.truncation {
        cover_ok &= series.coeff(k).is_zero();
    }
    checks.push(row(
        "cover-series",
        cover_ok,
        format!(
            "multiple-cover weights exponentiate to 1 + x at truncation {}",
            opts.truncation
        ),
    ));

    if opts.periods {
        let ps = period_exponent_estimate(opts.period_grid);
        checks.push(row(
            "period-exponent",
            ps.ok,
            format!(
                "log-log slope {:.4} over {} samples",
                ps.slope,
                ps.samples.len()
            ),
        ));
    }

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        schema: SCHEMA,
        case: case.name().to_string(),
        coeffs: mode_name(mode).to_string(),
        truncation: opts.truncation,
        seed: opts.seed,
        walls: wall_rows(&d),
        checks,
        all_pass,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// The focused suites behind the `check` subcommand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    Pentagon,
    FocusFocus,
    Consistency,
    Theta,
    Angles,
    Affine,
    Trop,
}

impl CheckKind {
    pub fn parse(s: &str) -> Option<CheckKind> {
        match s {
            "pentagon" => Some(CheckKind::Pentagon),
            "focus-focus" => Some(CheckKind::FocusFocus),
            "consistency" => Some(CheckKind::Consistency),
            "theta" => Some(CheckKind::Theta),
            "angles" => Some(CheckKind::Angles),
            "affine" => Some(CheckKind::Affine),
            "trop" => Some(CheckKind::Trop),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Pentagon => "pentagon",
            CheckKind::FocusFocus => "focus-focus",
            CheckKind::Consistency => "consistency",
            CheckKind::Theta => "theta",
            CheckKind::Angles => "angles",
            CheckKind::Affine => "affine",
            CheckKind::Trop => "trop",
        }
    }
}

#[derive(Serialize)]
pub struct CheckSuite {
    pub schema: &'static str,
    pub check: String,
    pub seed: u64,
    pub checks: Vec<CheckRow>,
    pub all_pass: bool,
}

impl CheckSuite {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("suite serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("check {}\n", self.check));
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {tag}  {:<28} {}\n", c.name, c.witness));
        }
        out.push_str(if self.all_pass {
            "all checks passed\n"
        } else {
            "SOME CHECKS FAILED\n"
        });
        out
    }
}

/// Runs one focused suite across all cases in the given coefficient mode.
///
/// Case-independent suites (pentagon, focus-focus) ignore the mode; the rest
/// skip cases whose coefficient data does not exist rather than failing, so
/// `check theta --coeffs ghk` exercises exactly the diagrams that carry
/// coefficients.
pub fn run_check(kind: CheckKind, mode: CoeffMode, opts: &RunOptions) -> CheckSuite {
    let mut checks = Vec::new();
    let cases = [CaseId::A2, CaseId::B2, CaseId::G2];
    match kind {
        CheckKind::Pentagon => {
            checks.push(pentagon_row(opts.seed, 100));
        }
        CheckKind::FocusFocus => {
            checks.push(focus_focus_row());
        }
        CheckKind::Consistency => {
            for case in cases {
                let Ok(d) = build_case(case, mode) else {
                    continue;
                };
                let lr = loop_consistency(&d);
                checks.push(row(
                    &format!("{}:loop-consistency", case.name()),
                    lr.identity,
                    format!("z^(1,0) -> {}; z^(0,1) -> {}", lr.image_e1, lr.image_e2),
                ));
            }
        }
        CheckKind::Theta => {
            for case in cases {
                let Ok(d) = build_case(case, mode) else {
                    continue;
                };
                let n = d.wall_count();
                let ok = match exchange_check(case, mode) {
                    Ok(ex) => ex.all_hold() && ex.relations.len() == n,
                    Err(_) => false,
                };
                checks.push(row(
                    &format!("{}:exchange-relations", case.name()),
                    ok,
                    format!("{n} relations in every strip"),
                ));
                checks.push(row(
                    &format!("{}:theta-periodicity", case.name()),
                    periodicity_check(case) && detected_period(case) == Some(n),
                    format!("recurrence period {n}"),
                ));
                checks.push(row(
                    &format!("{}:transport-well-defined", case.name()),
                    well_defined_check(&d),
                    "transport around the cut is path-independent".to_string(),
                ));
            }
        }
        CheckKind::Angles => {
            for case in cases {
                let Ok(d) = build_case(case, mode) else {
                    continue;
                };
                let ar = angle_gaps(&d);
                checks.push(row(
                    &format!("{}:ray-angle-gaps", case.name()),
                    ar.ok,
                    format!(
                        "gap {:.6} rad, max deviation {:.2e}",
                        ar.expected, ar.max_err
                    ),
                ));
                let ad = charge_additivity(&d);
                checks.push(row(
                    &format!("{}:charge-additivity", case.name()),
                    ad.ok,
                    format!("max error {:.2e}", ad.max_err),
                ));
            }
        }
        CheckKind::Affine => {
            for case in cases {
                let Ok(d) = build_case(case, mode) else {
                    continue;
                };
                let ok = match build_bghk(&d.selfints) {
                    Ok(a) => {
                        a.recurrence_check()
                            && pl_section_check(&a)
                            && global_monodromy(&a).trace() == d.monodromy.trace()
                    }
                    Err(_) => false,
                };
                checks.push(row(
                    &format!("{}:affine-structure", case.name()),
                    ok,
                    "chart recurrence, sections, and global monodromy".to_string(),
                ));
            }
        }
        CheckKind::Trop => {
            for case in cases {
                let Ok(d) = build_case(case, mode) else {
                    continue;
                };
                let n = d.wall_count();
                let cones = cone_containment_check(case);
                checks.push(row(
                    &format!("{}:cone-containment", case.name()),
                    cones.all_ok && cones.steps.len() == n,
                    format!("{n} sheared sectors contained"),
                ));
                checks.push(row(
                    &format!("{}:tropical-loop", case.name()),
                    trop_loop_check(&d),
                    "loop shadow is the identity".to_string(),
                ));
            }
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    CheckSuite {
        schema: SCHEMA,
        check: kind.name().to_string(),
        seed: opts.seed,
        checks,
        all_pass,
    }
}

/// Report for a user-supplied self-intersection sequence.
#[derive(Serialize)]
pub struct BghkReport {
    pub schema: &'static str,
    pub selfints: Vec<i64>,
    pub rays: Vec<String>,
    pub relations: Vec<String>,
    pub global_monodromy: String,
    pub checks: Vec<CheckRow>,
    pub all_pass: bool,
}

impl BghkReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("bghk report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "affine structure from self-intersections {:?}\n",
            self.selfints
        ));
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {tag}  {:<24} {}\n", c.name, c.witness));
        }
        out.push_str(if self.all_pass {
            "all checks passed\n"
        } else {
            "SOME CHECKS FAILED\n"
        });
        out
    }
}

/// Builds the affine structure for an arbitrary self-intersection sequence
/// and reports its chart data and consistency checks.
pub fn run_bghk(selfints: &[i64]) -> Result<BghkReport, Error> {
    let a = build_bghk(selfints)?;
    let g = global_monodromy(&a);
    let checks = vec![
        row(
            "affine-recurrence",
            a.recurrence_check(),
            "v_{i-1} + D_i^2 v_i + v_{i+1} = 0 in every chart".to_string(),
        ),
        row(
            "affine-sections",
            pl_section_check(&a),
            "piecewise-linear section matches every chart gluing".to_string(),
        ),
    ];
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(BghkReport {
        schema: SCHEMA,
        selfints: selfints.to_vec(),
        rays: a.rays.iter().map(|v| v.to_string()).collect(),
        relations: (1..=selfints.len())
            .map(|i| gluing_ring_relation(&a, i, CoeffMode::Ghk).to_string())
            .collect(),
        global_monodromy: g.to_string(),
        checks,
        all_pass,
    })
}
