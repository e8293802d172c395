//! Static SVG region map of the `ρ_{p,q}` sweep.

use std::fmt::Write as _;

use crate::sweep::SweepRecord;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 50.0;

pub fn cell_class(r: &SweepRecord) -> &'static str {
    match (r.positive, r.ppt, r.separable) {
        (false, _, _) => "non-state",
        (true, _, true) => "separable",
        (true, true, false) => "ppt-entangled",
        (true, false, false) => "npt-entangled",
    }
}

fn to_px(p: f64, q: f64) -> (f64, f64) {
    (MARGIN + (p + 1.0) / 2.0 * SIZE, MARGIN + (1.0 - q) / 2.0 * SIZE)
}

fn polyline(out: &mut String, class: &str, pts: impl Iterator<Item = (f64, f64)>) {
    let coords: Vec<String> = pts
        .map(|(p, q)| {
            let (x, y) = to_px(p, q);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"<polyline class="{class}" points="{}"/>"#, coords.join(" "));
}

fn curve(out: &mut String, class: &str, lo: f64, hi: f64, f: impl Fn(f64) -> f64) {
    polyline(
        out,
        class,
        (0..=400).map(|k| lo + (hi - lo) * k as f64 / 400.0).map(|p| (p, f(p))),
    );
}

/// One rectangle per record of an `n × n` sweep, colored by verdict, with the
/// case boundaries overlaid.
pub fn render(records: &[SweepRecord], n: usize) -> String {
    let cell = SIZE / n as f64;
    let total = SIZE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{total}" viewBox="0 0 {total} {total}">"#
    );
    let _ = writeln!(
        out,
        "<style>\n\
         .separable {{ fill: #8cc68c; }}\n\
         .ppt-entangled {{ fill: #f0a868; }}\n\
         .npt-entangled {{ fill: #f4f4f4; }}\n\
         .non-state {{ fill: #9a9a9a; }}\n\
         .boundary {{ fill: none; stroke: #222; stroke-width: 2; }}\n\
         .sufficient {{ fill: none; stroke: #1f4e9c; stroke-width: 2; stroke-dasharray: 6 3; }}\n\
         .family {{ fill: #000; }}\n\
         text {{ font: 14px sans-serif; }}\n\
         </style>"
    );
    let _ = writeln!(out, r#"<g id="cells">"#);
    for r in records {
        let (cx, cy) = to_px(r.p, r.q);
        let _ = writeln!(
            out,
            r#"<rect class="{}" data-p="{}" data-q="{}" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
            cell_class(r),
            r.p,
            r.q,
            cx - cell / 2.0,
            cy - cell / 2.0,
            cell,
            cell
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="curves">"#);
    curve(&mut out, "sufficient", -1.0, 1.0, |p| 4.0 * p * p * p - 3.0 * p);
    curve(&mut out, "boundary", -1.0, 1.0, |p| p);
    curve(&mut out, "boundary", -1.0 / 3.0, 1.0 / 3.0, |p| -3.0 * p);
    curve(&mut out, "boundary", -0.5, 0.5, |p| -2.0 * p);
    polyline(&mut out, "boundary", [(0.0, -1.0), (0.0, 1.0)].into_iter());
    let _ = writeln!(out, "</g>");
    // The line q = -p carries the anti-diagonal direction (1, 1, -1, 1) of Kay's family.
    let _ = writeln!(out, r#"<g id="family">"#);
    for k in 0..=10 {
        let p = -1.0 + 0.2 * k as f64;
        let (x, y) = to_px(p, -p);
        let _ = writeln!(out, r#"<circle class="family" cx="{x:.2}" cy="{y:.2}" r="3"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let (x0, y0) = to_px(-1.0, -1.0);
    let (x1, y1) = to_px(1.0, 1.0);
    let _ = writeln!(
        out,
        r#"<rect class="boundary" x="{x0}" y="{y1}" width="{}" height="{}"/>"#,
        x1 - x0,
        y0 - y1
    );
    let _ = writeln!(out, r#"<text x="{}" y="{}">p</text>"#, total / 2.0, total - 15.0);
    let _ = writeln!(out, r#"<text x="15" y="{}">q</text>"#, total / 2.0);
    let _ = writeln!(out, "</svg>");
    out
}

/// `(p, q, class)` of every cell in an SVG produced by [`render`].
pub fn parse_cells(svg: &str) -> Vec<(f64, f64, String)> {
    let attr = |line: &str, name: &str| -> Option<String> {
        let key = format!(r#"{name}=""#);
        let start = line.find(&key)? + key.len();
        let end = line[start..].find('"')? + start;
        Some(line[start..end].to_string())
    };
    svg.lines()
        .filter(|l| l.starts_with("<rect") && l.contains("data-p"))
        .filter_map(|l| {
            let p = attr(l, "data-p")?.parse().ok()?;
            let q = attr(l, "data-q")?.parse().ok()?;
            Some((p, q, attr(l, "class")?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::sweep;
    use ghzsep::Execution;

    #[test]
    fn cells_match_records() {
        let records = sweep(11, Execution::default());
        let svg = render(&records, 11);
        let cells = parse_cells(&svg);
        assert_eq!(cells.len(), records.len());
        for (r, (p, q, class)) in records.iter().zip(&cells) {
            assert_eq!((r.p, r.q), (*p, *q));
            assert_eq!(cell_class(r), class);
        }
        assert!(cells.iter().any(|c| c.2 == "ppt-entangled"));
        assert!(cells.iter().any(|c| c.2 == "separable"));
    }
}
