//! Figure export: SVG and TikZ drawings of real-embeddable arrangements, and
//! an exact JSON fallback for arbitrary fields.
//!
//! The drawing chart is chosen exactly: a line at infinity is picked that
//! avoids every arrangement line and every singular point, so each line
//! clips to a visible segment and each marked point is finite. One segment
//! element is emitted per line and one circle per marked singular point, so
//! the element counts of the figure agree with the exact profile.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::geom::ProjMap;
use num_traits::Zero;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Svg,
    Tikz,
    Json,
}

#[derive(Clone, Debug)]
pub enum MarkFilter {
    /// Mark every singular point.
    All,
    /// Mark only points of the listed multiplicities.
    Multiplicities(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct ExportOptions {
    pub format: ExportFormat,
    /// Drawing window [x0, y0, x1, y1] in chart coordinates; computed from
    /// the singular points when absent.
    pub window: Option<[f64; 4]>,
    /// Interval precision for coordinate approximation.
    pub precision_bits: u32,
    pub mark: MarkFilter,
}

impl Default for ExportOptions {
    fn default() -> Self {
        ExportOptions {
            format: ExportFormat::Svg,
            window: None,
            precision_bits: 64,
            mark: MarkFilter::All,
        }
    }
}

/// Render the arrangement in the requested format.
pub fn export_figure(a: &Arrangement, opts: &ExportOptions) -> Result<String> {
    match opts.format {
        ExportFormat::Json => export_json(a),
        ExportFormat::Svg | ExportFormat::Tikz => export_drawing(a, opts),
    }
}

#[derive(Serialize)]
struct FigureJson {
    arrangement: crate::io::ArrangementJson,
    profile: std::collections::BTreeMap<String, usize>,
    singular_points: Vec<SingularJson>,
}

#[derive(Serialize)]
struct SingularJson {
    point: [Vec<crate::io::CoeffJson>; 3],
    multiplicity: usize,
}

fn export_json(a: &Arrangement) -> Result<String> {
    let singular = a
        .singular_points()
        .into_iter()
        .map(|(p, m)| {
            let c = p.coords();
            SingularJson {
                point: [
                    crate::io::element_coeffs_to_json(&c[0]),
                    crate::io::element_coeffs_to_json(&c[1]),
                    crate::io::element_coeffs_to_json(&c[2]),
                ],
                multiplicity: m,
            }
        })
        .collect();
    let fig = FigureJson {
        arrangement: crate::io::arrangement_to_json(a)?,
        profile: crate::io::profile_to_json(&a.profile()),
        singular_points: singular,
    };
    Ok(serde_json::to_string_pretty(&fig)?)
}

fn approx_real(e: &FieldElement, bits: u32) -> Result<f64> {
    let (re, im) = e.approx_interval(bits)?;
    if !(im.lo.is_zero() && im.hi.is_zero()) {
        return Err(Error::Unsupported(
            "field is not real-embeddable; use --format json".into(),
        ));
    }
    Ok(re.midpoint_f64())
}

fn export_drawing(a: &Arrangement, opts: &ExportOptions) -> Result<String> {
    let field = a.field().clone();
    let singular = a.singular_points();

    // Chart: a line (u, v, w) that is neither an arrangement line nor passes
    // through a singular point, found by exact search over small candidates.
    let chart = {
        let mut found = None;
        'outer: for k in 0..200i64 {
            let cand = match k {
                0 => [0, 0, 1],
                1 => [1, 0, 0],
                2 => [0, 1, 0],
                _ => [1, k - 2, (k - 2) * (k - 2) + 1],
            };
            let chart_line = crate::geom::ProjLine::from_ints(&field, cand)?;
            for (p, _) in &singular {
                if crate::geom::incident(p, &chart_line) {
                    continue 'outer;
                }
            }
            if a.lines().contains(&chart_line) {
                continue;
            }
            found = Some(chart_line);
            break;
        }
        found.ok_or_else(|| Error::Expectation("no admissible drawing chart".into()))?
    };

    // Coordinate change making the chart the line at infinity.
    let g = chart_map(&chart)?;
    let moved = a.apply_map(&g)?;
    let bits = opts.precision_bits;

    // Affine positions of the (transformed) singular points, with marks.
    let mut marks: Vec<(f64, f64, usize)> = Vec::new();
    let mut all_pts: Vec<(f64, f64)> = Vec::new();
    for (p, m) in &singular {
        let q = g.apply_point(p)?;
        let c = q.coords();
        // The chart avoids the singular points, so z != 0 after the change.
        let z = approx_real(&c[2], bits)?;
        let x = approx_real(&c[0], bits)? / z;
        let y = approx_real(&c[1], bits)? / z;
        all_pts.push((x, y));
        let marked = match &opts.mark {
            MarkFilter::All => true,
            MarkFilter::Multiplicities(ms) => ms.contains(m),
        };
        if marked {
            marks.push((x, y, *m));
        }
    }

    let window = opts.window.unwrap_or_else(|| auto_window(&all_pts));
    let [x0, y0, x1, y1] = window;

    // Clip each line to the window.
    let mut segments: Vec<(f64, f64, f64, f64)> = Vec::new();
    for l in moved.lines() {
        let c = l.coords();
        let la = approx_real(&c[0], bits)?;
        let lb = approx_real(&c[1], bits)?;
        let lc = approx_real(&c[2], bits)?;
        let seg = clip_line(la, lb, lc, window).ok_or_else(|| {
            Error::Expectation("line missed the drawing window; widen --window".into())
        })?;
        segments.push(seg);
    }

    match opts.format {
        ExportFormat::Svg => Ok(render_svg(&segments, &marks, [x0, y0, x1, y1])),
        ExportFormat::Tikz => Ok(render_tikz(&segments, &marks, [x0, y0, x1, y1])),
        ExportFormat::Json => unreachable!(),
    }
}

/// An invertible map whose third output coordinate is the chart line form.
fn chart_map(chart: &crate::geom::ProjLine) -> Result<ProjMap> {
    let field = chart.field().clone();
    let c = chart.coords();
    let rows_choices = [
        [[1i64, 0, 0], [0, 1, 0]],
        [[1, 0, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1]],
    ];
    for pair in rows_choices {
        let r0 = [
            field.from_int(pair[0][0]),
            field.from_int(pair[0][1]),
            field.from_int(pair[0][2]),
        ];
        let r1 = [
            field.from_int(pair[1][0]),
            field.from_int(pair[1][1]),
            field.from_int(pair[1][2]),
        ];
        let r2 = [c[0].clone(), c[1].clone(), c[2].clone()];
        if let Ok(m) = ProjMap::new([r0, r1, r2]) {
            return Ok(m);
        }
    }
    Err(Error::Expectation("chart completion failed".into()))
}

fn auto_window(pts: &[(f64, f64)]) -> [f64; 4] {
    if pts.is_empty() {
        return [-1.0, -1.0, 1.0, 1.0];
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let dx = (x1 - x0).max(1e-3);
    let dy = (y1 - y0).max(1e-3);
    [
        x0 - 0.25 * dx,
        y0 - 0.25 * dy,
        x1 + 0.25 * dx,
        y1 + 0.25 * dy,
    ]
}

/// Clip the affine line a x + b y + c = 0 to a rectangle, returning a segment.
fn clip_line(a: f64, b: f64, c: f64, window: [f64; 4]) -> Option<(f64, f64, f64, f64)> {
    let [x0, y0, x1, y1] = window;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-9 * (1.0 + a.abs() + b.abs() + c.abs());
    // Intersections with the four window edges.
    if b.abs() > eps {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if (y0..=y1).contains(&y) {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > eps {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if (x0..=x1).contains(&x) {
                pts.push((x, y));
            }
        }
    }
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9);
    if pts.len() < 2 {
        return None;
    }
    // Farthest pair, robust near corners.
    let mut best = (0usize, 1usize, -1.0f64);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = (pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    Some((pts[best.0].0, pts[best.0].1, pts[best.1].0, pts[best.1].1))
}

fn mult_color(m: usize) -> &'static str {
    match m {
        2 => "#222222",
        3 => "#c0392b",
        4 => "#2980b9",
        5 => "#27ae60",
        _ => "#8e44ad",
    }
}

fn render_svg(
    segments: &[(f64, f64, f64, f64)],
    marks: &[(f64, f64, usize)],
    window: [f64; 4],
) -> String {
    let [x0, y0, x1, y1] = window;
    let w = x1 - x0;
    let h = y1 - y0;
    let scale = 640.0 / w.max(h);
    let width = w * scale;
    let height = h * scale;
    let tx = |x: f64| (x - x0) * scale;
    let ty = |y: f64| height - (y - y0) * scale; // flip to math orientation
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.1}\" height=\"{height:.1}\" viewBox=\"0 0 {width:.1} {height:.1}\">"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{width:.1}\" height=\"{height:.1}\" fill=\"white\" stroke=\"none\"/>"
    );
    for &(ax, ay, bx, by) in segments {
        let _ = writeln!(
            out,
            "  <line x1=\"{:.4}\" y1=\"{:.4}\" x2=\"{:.4}\" y2=\"{:.4}\" stroke=\"#333\" stroke-width=\"1.2\"/>",
            tx(ax),
            ty(ay),
            tx(bx),
            ty(by)
        );
    }
    for &(x, y, m) in marks {
        let _ = writeln!(
            out,
            "  <circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"{:.1}\" fill=\"{}\"/>",
            tx(x),
            ty(y),
            2.5 + 0.6 * m as f64,
            mult_color(m)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn render_tikz(
    segments: &[(f64, f64, f64, f64)],
    marks: &[(f64, f64, usize)],
    window: [f64; 4],
) -> String {
    let [x0, y0, x1, y1] = window;
    let scale = 10.0 / (x1 - x0).max(y1 - y0);
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tikzpicture}}[scale={scale:.4}]");
    let _ = writeln!(out, "\\clip({x0:.4},{y0:.4}) rectangle ({x1:.4},{y1:.4});");
    for &(ax, ay, bx, by) in segments {
        let _ = writeln!(
            out,
            "\\draw[line width=0.2mm] ({ax:.4},{ay:.4}) -- ({bx:.4},{by:.4});"
        );
    }
    for &(x, y, m) in marks {
        let _ = writeln!(
            out,
            "\\fill[mult{m}] ({x:.4},{y:.4}) circle ({:.2}mm);",
            0.5 + 0.15 * m as f64
        );
    }
    let _ = writeln!(out, "\\end{{tikzpicture}}");
    out
}
