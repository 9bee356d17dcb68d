//! Renders a case diagram as a standalone SVG: one ray per wall at its
//! computed angle, labeled with the boundary class and wall function, plus
//! the branch cut drawn as a dashed ray.
//!
//! Floats are printed with fixed four-decimal precision so the output is
//! byte-identical across runs.

use std::fmt::Write;

use scatkit_core::cases::ScatteringDiagram;

const SIZE: f64 = 600.0;
const RAY: f64 = 230.0;
const LABEL: f64 = 258.0;

fn endpoint(theta: f64, r: f64) -> (f64, f64) {
    // SVG y grows downward; flip the sign so angles read counterclockwise.
    let c = SIZE / 2.0;
    (c + r * theta.cos(), c - r * theta.sin())
}

fn anchor(x: f64) -> &'static str {
    let c = SIZE / 2.0;
    if (x - c).abs() < 40.0 {
        "middle"
    } else if x < c {
        "end"
    } else {
        "start"
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Draws the diagram. With `cluster_cuts` the single branch cut is replaced
/// by two cuts along the first and last walls, each labeled with its half of
/// the factored monodromy.
pub fn render_svg(diagram: &ScatteringDiagram, cluster_cuts: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let c = SIZE / 2.0;
    let _ = writeln!(s, r#"<circle cx="{c}" cy="{c}" r="3" fill="black"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.4}" y="{:.4}" font-size="12" font-family="monospace">{}</text>"#,
        c + 8.0,
        c + 16.0,
        diagram.case.name()
    );

    for (i, w) in diagram.walls.iter().enumerate() {
        let theta = w.angle.radians();
        let (x, y) = endpoint(theta, RAY);
        let _ = writeln!(
            s,
            r#"<line x1="{c}" y1="{c}" x2="{x:.4}" y2="{y:.4}" stroke="black" stroke-width="1.5"/>"#
        );
        let (lx, ly) = endpoint(theta, LABEL);
        let label = format!("l{}: z^{}, {}", i + 1, w.class, w.function());
        let _ = writeln!(
            s,
            r#"<text x="{lx:.4}" y="{ly:.4}" font-size="11" font-family="monospace" text-anchor="{}">{}</text>"#,
            anchor(lx),
            escape(&label)
        );
    }

    if cluster_cuts {
        // Two cuts riding the first and last walls, each carrying one factor
        // of the monodromy.
        let (m1, m2) = diagram
            .monodromy_factors()
            .expect("case monodromy factors as a product of shears");
        let n = diagram.wall_count();
        let marks = [(1usize, m1, "M1"), (n, m2, "M2")];
        for (k, m, name) in marks {
            let theta = diagram.wall(k).angle.radians();
            let (x, y) = endpoint(theta, RAY + 44.0);
            let _ = writeln!(
                s,
                r#"<line x1="{c}" y1="{c}" x2="{x:.4}" y2="{y:.4}" stroke="gray" stroke-width="1" stroke-dasharray="6 4"/>"#
            );
            let (lx, ly) = endpoint(theta, RAY + 60.0);
            let _ = writeln!(
                s,
                r#"<text x="{lx:.4}" y="{:.4}" font-size="11" font-family="monospace" text-anchor="{}">cut, {} = {}</text>"#,
                ly + 14.0,
                anchor(lx),
                name,
                escape(&m.to_string())
            );
        }
    } else {
        let theta = diagram.cut_angle.radians();
        let (x, y) = endpoint(theta, RAY + 44.0);
        let _ = writeln!(
            s,
            r#"<line x1="{c}" y1="{c}" x2="{x:.4}" y2="{y:.4}" stroke="gray" stroke-width="1" stroke-dasharray="6 4"/>"#
        );
        let (lx, ly) = endpoint(theta, RAY + 60.0);
        let _ = writeln!(
            s,
            r#"<text x="{lx:.4}" y="{ly:.4}" font-size="11" font-family="monospace" text-anchor="{}">cut at {}, twist {}</text>"#,
            anchor(lx),
            diagram.cut_angle,
            escape(&diagram.monodromy.to_string())
        );
    }

    s.push_str("</svg>\n");
    s
}
