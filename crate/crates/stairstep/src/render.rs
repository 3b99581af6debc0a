//! Text renderings of resolutions and staircase diagrams, and the SVG staircase.

use std::fmt::Write;

use stairstep_core::{Differential, Monomial, MonomialIdeal, Resolution};

/// Plot extent: one unit beyond the largest exponent in each direction.
fn extent(ring: &MonomialIdeal) -> (u32, u32) {
    let w = ring.generators().iter().map(|g| g.xdeg).max().unwrap_or(0) + 2;
    let h = ring.generators().iter().map(|g| g.ydeg).max().unwrap_or(0) + 2;
    (w, h)
}

/// ASCII staircase with `y` increasing upward: `*` marks a minimal
/// generator, `#` the rest of `M`, `.` a standard monomial.
pub fn staircase_ascii(ring: &MonomialIdeal) -> String {
    let (w, h) = extent(ring);
    let label_width = h.to_string().len();
    let mut out = String::new();
    let _ = writeln!(out, "{:>label_width$}", "y");
    for v in (0..=h).rev() {
        let _ = write!(out, "{v:>label_width$} |");
        for u in 0..=w {
            let m = Monomial::new(u, v);
            let c = if ring.generators().contains(&m) {
                '*'
            } else if ring.contains(m) {
                '#'
            } else {
                '.'
            };
            out.push(' ');
            out.push(c);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{:>label_width$} +{}", "", "--".repeat(w as usize + 1));
    let _ = write!(out, "{:>label_width$}  ", "");
    for u in 0..=w {
        let _ = write!(out, "{:>2}", u % 10);
    }
    out.push_str("  x\n");
    out
}

/// SVG staircase: the region of `M` shaded, lattice points of `M` filled,
/// generators labelled, the `x` axis pointing right and `y` up.
pub fn staircase_svg(ring: &MonomialIdeal) -> String {
    const CELL: u32 = 40;
    const MARGIN: u32 = 50;
    let (w, h) = extent(ring);
    let width = 2 * MARGIN + w * CELL;
    let height = 2 * MARGIN + h * CELL;
    let px = |u: u32| MARGIN + u * CELL;
    let py = |v: u32| MARGIN + (h - v) * CELL;

    let outline = ring.staircase_outline();
    let first = outline.outline.first().copied().unwrap_or((0, 0));
    let last = outline.outline.last().copied().unwrap_or((0, 0));
    let mut poly: Vec<(u32, u32)> = vec![(first.0, h)];
    poly.extend(outline.outline.iter().copied());
    poly.push((w, last.1));
    poly.push((w, h));
    let points: Vec<String> = poly.iter().map(|&(u, v)| format!("{},{}", px(u), py(v))).collect();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"  <title>Staircase of M = {ring}</title>"#);
    let _ = writeln!(
        s,
        r##"  <polygon points="{}" fill="#c8d7ef" stroke="#2b4f8a" stroke-width="2"/>"##,
        points.join(" ")
    );
    for u in 0..=w {
        let _ = writeln!(
            s,
            r##"  <line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="#dddddd"/>"##,
            x = px(u),
            y0 = py(0),
            y1 = py(h)
        );
    }
    for v in 0..=h {
        let _ = writeln!(
            s,
            r##"  <line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="#dddddd"/>"##,
            x0 = px(0),
            x1 = px(w),
            y = py(v)
        );
    }
    for v in 0..h {
        for u in 0..w {
            let m = Monomial::new(u, v);
            let fill = if ring.contains(m) { "#2b4f8a" } else { "#ffffff" };
            let _ = writeln!(
                s,
                r##"  <circle cx="{}" cy="{}" r="4" fill="{fill}" stroke="#2b4f8a"/>"##,
                px(u),
                py(v)
            );
        }
    }
    for g in ring.generators() {
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-family="serif" font-size="14">{}</text>"#,
            px(g.xdeg) + 6,
            py(g.ydeg) - 6,
            svg_monomial(*g)
        );
    }
    let _ = writeln!(
        s,
        r##"  <line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="black" stroke-width="2"/>"##,
        x0 = px(0),
        x1 = px(w) + 20,
        y = py(0)
    );
    let _ = writeln!(
        s,
        r##"  <line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="black" stroke-width="2"/>"##,
        x = px(0),
        y0 = py(0),
        y1 = py(h) - 20
    );
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}" font-family="serif" font-style="italic" font-size="18">x</text>"#,
        px(w) + 26,
        py(0) + 5
    );
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}" font-family="serif" font-style="italic" font-size="18">y</text>"#,
        px(0) - 5,
        py(h) - 26
    );
    s.push_str("</svg>\n");
    s
}

fn svg_monomial(m: Monomial) -> String {
    let mut out = String::new();
    for (var, e) in [('x', m.xdeg), ('y', m.ydeg)] {
        match e {
            0 => {}
            1 => out.push(var),
            e => {
                let _ = write!(out, r#"{var}<tspan baseline-shift="super" font-size="10">{e}</tspan>"#);
            }
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

fn matrix_text(d: &Differential) -> String {
    let cells: Vec<Vec<String>> = (0..d.rows())
        .map(|i| {
            (0..d.cols())
                .map(|j| d.get(i, j).map_or_else(|| "0".to_string(), |t| t.to_string()))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..d.cols())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        out.push_str("  [");
        for (j, c) in row.iter().enumerate() {
            let _ = write!(out, " {:>w$}", c, w = widths[j]);
        }
        out.push_str(" ]\n");
    }
    out
}

/// Human-readable listing of every module and differential.
pub fn resolution_text(res: &Resolution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "M = {}  [{}]", res.ring(), res.class());
    let _ = writeln!(out, "ranks: {:?}", res.ranks());
    for (i, m) in res.modules().enumerate() {
        let gens: Vec<String> = m
            .generators()
            .iter()
            .map(|g| format!("{} ({},{})", g.label, g.bidegree.x, g.bidegree.y))
            .collect();
        let _ = writeln!(out, "F{i}: rank {}: {}", m.rank(), gens.join(", "));
    }
    for (k, d) in res.differentials().iter().enumerate() {
        if d.rows() == 0 || d.cols() == 0 {
            let _ = writeln!(out, "d{}: zero map", k + 1);
            continue;
        }
        let _ = writeln!(out, "d{}:", k + 1);
        out.push_str(&matrix_text(d));
    }
    for s in res.decomposition() {
        let _ = writeln!(out, "F{} = F1^{} + F2^{} + F3^{}", s.stage, s.u, s.v, s.w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use stairstep_core::build_resolution;

    fn ideal(pairs: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(pairs).unwrap()
    }

    #[test]
    fn ascii_marks_generators() {
        let text = staircase_ascii(&ideal(&[(2, 1), (1, 2)]));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "y");
        // rows are y = 4, 3, 2, 1, 0
        assert_eq!(lines[3], "2 | . * # # #");
        assert_eq!(lines[4], "1 | . . * # #");
        assert_eq!(lines[5], "0 | . . . . .");
        assert!(lines.last().unwrap().ends_with("x"));
    }

    #[test]
    fn svg_is_well_formed() {
        let svg = staircase_svg(&ideal(&[(1, 2), (0, 4)]));
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains(">x</text>") && svg.contains(">y</text>"));
        // polygon runs from the top of the y^4 column to the right edge
        assert!(svg.contains(r#"points="50,50 50,130 90,130 90,210 170,210 170,50""#));
    }

    #[test]
    fn resolution_listing() {
        let text = resolution_text(&build_resolution(&ideal(&[(2, 1), (1, 2)]), 2));
        assert!(text.starts_with("M = (x^2y, xy^2)  [main-case-1]\n"));
        assert!(text.contains("F1: rank 2: ex (1,0), ey (0,1)"));
        assert!(text.contains("  [ x y ]"));
    }
}
