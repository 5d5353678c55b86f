//! SVG and ASCII rendering of tilings.

use std::collections::BTreeMap;

use sqrect::tiling::Tiling;

/// Visual style for SVG output. The default palette colors sides 2, 3, 5,
/// and 7 purple, teal, yellow, and red; any other side falls back to gray.
#[derive(Debug, Clone)]
pub struct RenderStyle {
    pub cell_px: u32,
    pub palette: BTreeMap<u32, String>,
    pub fallback_fill: String,
    pub stroke: String,
    pub stroke_width: f32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        let palette = [
            (2, "purple"),
            (3, "teal"),
            (5, "yellow"),
            (7, "red"),
        ]
        .into_iter()
        .map(|(k, v)| (k, v.to_string()))
        .collect();
        RenderStyle {
            cell_px: 20,
            palette,
            fallback_fill: "gray".to_string(),
            stroke: "black".to_string(),
            stroke_width: 1.0,
        }
    }
}

impl RenderStyle {
    fn fill(&self, side: u32) -> &str {
        self.palette.get(&side).unwrap_or(&self.fallback_fill)
    }
}

/// One `<rect>` per placement over a single background rect, on an integer
/// grid scaled by `cell_px`.
pub fn to_svg(t: &Tiling, style: &RenderStyle) -> String {
    let w = t.rect.n * style.cell_px;
    let h = t.rect.m * style.cell_px;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\" \
         stroke=\"{}\" stroke-width=\"{}\"/>\n",
        style.stroke, style.stroke_width
    ));
    for p in t.placements() {
        out.push_str(&format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" \
             stroke=\"{}\" stroke-width=\"{}\"/>\n",
            p.x * style.cell_px,
            p.y * style.cell_px,
            p.side * style.cell_px,
            p.side * style.cell_px,
            style.fill(p.side),
            style.stroke,
            style.stroke_width
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// One character per cell: placements cycle through letters, uncovered cells
/// print `.` so invalid files are visually debuggable. Overlaps keep the
/// letter of the later placement.
pub fn to_ascii(t: &Tiling) -> String {
    let (m, n) = (t.rect.m as usize, t.rect.n as usize);
    let mut grid = vec![b'.'; m * n];
    for (i, p) in t.placements().iter().enumerate() {
        let letter = b'a' + (i % 26) as u8;
        for y in p.y..(p.y + p.side).min(t.rect.m) {
            for x in p.x..(p.x + p.side).min(t.rect.n) {
                grid[y as usize * n + x as usize] = letter;
            }
        }
    }
    let mut out = String::with_capacity(m * (n + 1));
    for row in grid.chunks(n) {
        out.push_str(std::str::from_utf8(row).unwrap());
        out.push('\n');
    }
    out
}
