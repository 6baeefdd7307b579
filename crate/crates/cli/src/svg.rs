use std::fmt::Write as _;

use crate::report::Swatch;

const W: usize = 160;
const H: usize = 120;
const GAP: usize = 10;

/// One labeled rectangle per color. Colors outside the display gamut get a
/// dashed outline and a corner flag, since their fill is only the clipped RGB.
pub fn swatches(colors: &[Swatch]) -> String {
    let width = GAP + colors.len() * (W + GAP);
    let height = H + 50 + 2 * GAP;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for (i, c) in colors.iter().enumerate() {
        let x = GAP + i * (W + GAP);
        let y = GAP;
        let _ = writeln!(s, r#"<g id="swatch-{}">"#, i + 1);
        if c.clipped {
            let _ = writeln!(
                s,
                r##"<rect x="{x}" y="{y}" width="{W}" height="{H}" fill="{}" stroke="#000000" stroke-width="2" stroke-dasharray="6 4"/>"##,
                c.hex
            );
            let (x1, y1) = (x + W, y);
            let _ = writeln!(
                s,
                r##"<polygon class="clipped" points="{},{y1} {x1},{y1} {x1},{}" fill="#000000"/>"##,
                x1 - 24,
                y1 + 24
            );
        } else {
            let _ = writeln!(s, r##"<rect x="{x}" y="{y}" width="{W}" height="{H}" fill="{}" stroke="#000000"/>"##, c.hex);
        }
        let ty = y + H + 18;
        let flag = if c.clipped { " (clipped)" } else { "" };
        let _ = writeln!(s, r#"<text x="{x}" y="{ty}">{}{flag}</text>"#, c.hex);
        let _ = writeln!(s, r#"<text x="{x}" y="{}">L {:.1}  a {:.1}  b {:.1}</text>"#, ty + 16, c.l, c.a, c.b);
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}
