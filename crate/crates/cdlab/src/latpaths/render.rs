//! Grid figures for labeled path families: one panel per path, unit grid
//! squares, axis letters under their spans, and `d` labels drawn as
//! double-width (or double-height) brackets.

use super::{AxisLabeling, CellPart, LatticePath, PathError};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Tikz,
}

impl RenderFormat {
    pub fn from_name(name: &str) -> Result<RenderFormat, PathError> {
        match name {
            "svg" => Ok(RenderFormat::Svg),
            "tikz" => Ok(RenderFormat::Tikz),
            other => Err(PathError::UnknownFormat(other.to_string())),
        }
    }
}

const UNIT: f64 = 36.0;
const MARGIN_LEFT: f64 = 34.0;
const MARGIN_BOTTOM: f64 = 34.0;
const MARGIN_TOP: f64 = 26.0;
const MARGIN_RIGHT: f64 = 12.0;
const PANEL_GAP: f64 = 18.0;
const TARGET_WIDTH: f64 = 1000.0;

/// Renders the paths as one figure. An empty path list yields a single
/// grid-only panel. Every path must fit inside the labeled box.
pub fn render_paths(
    labels: &AxisLabeling,
    paths: &[LatticePath],
    format: RenderFormat,
) -> Result<String, PathError> {
    for (i, path) in paths.iter().enumerate() {
        let (mut x, mut y) = (0, 0);
        for (index, &step) in path.steps().iter().enumerate() {
            x += step.dx();
            y += step.dy();
            if x > labels.width() || y > labels.height() {
                let _ = i;
                return Err(PathError::StepOutOfRegion {
                    index,
                    step,
                    width: labels.width(),
                    height: labels.height(),
                });
            }
        }
    }
    match format {
        RenderFormat::Svg => Ok(render_svg(labels, paths)),
        RenderFormat::Tikz => Ok(render_tikz(labels, paths)),
    }
}

fn panel_size(labels: &AxisLabeling) -> (f64, f64) {
    (
        MARGIN_LEFT + labels.width().max(1) as f64 * UNIT + MARGIN_RIGHT,
        MARGIN_TOP + labels.height().max(1) as f64 * UNIT + MARGIN_BOTTOM,
    )
}

fn render_svg(labels: &AxisLabeling, paths: &[LatticePath]) -> String {
    let (pw, ph) = panel_size(labels);
    let panels = paths.len().max(1);
    let per_row = ((TARGET_WIDTH / (pw + PANEL_GAP)).floor() as usize)
        .clamp(1, panels);
    let rows = panels.div_ceil(per_row);
    let total_w = per_row as f64 * (pw + PANEL_GAP) + PANEL_GAP;
    let total_h = rows as f64 * (ph + PANEL_GAP) + PANEL_GAP;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {total_w:.0} {total_h:.0}\" \
         font-family=\"Georgia, serif\" font-size=\"15\">"
    );
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for panel in 0..panels {
        let px = PANEL_GAP + (panel % per_row) as f64 * (pw + PANEL_GAP);
        let py = PANEL_GAP + (panel / per_row) as f64 * (ph + PANEL_GAP);
        let _ = writeln!(svg, "<g transform=\"translate({px:.1},{py:.1})\">");
        svg_panel(&mut svg, labels, paths.get(panel));
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

fn svg_panel(svg: &mut String, labels: &AxisLabeling, path: Option<&LatticePath>) {
    let w = labels.width();
    let h = labels.height();
    // Grid coordinates: (0,0) is the box's lower-left corner.
    let gx = |x: usize| MARGIN_LEFT + x as f64 * UNIT;
    let gy = |y: usize| MARGIN_TOP + (h.saturating_sub(y)) as f64 * UNIT;

    for x in 0..=w {
        let _ = writeln!(
            svg,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#bbb\" stroke-width=\"1\"/>",
            gx(x), gy(h), gx(x), gy(0)
        );
    }
    for y in 0..=h {
        let _ = writeln!(
            svg,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#bbb\" stroke-width=\"1\"/>",
            gx(0), gy(y), gx(w), gy(y)
        );
    }

    // Axis letters; a d label gets a bracket across its two units.
    let mut x = 0;
    while x < w {
        let cell = labels.col(x);
        let span = if cell.part == CellPart::Single { 1 } else { 2 };
        let cx = MARGIN_LEFT + (x as f64 + span as f64 / 2.0) * UNIT;
        let ly = gy(0) + 22.0;
        let _ = writeln!(
            svg,
            "<text x=\"{cx:.1}\" y=\"{ly:.1}\" text-anchor=\"middle\" font-style=\"italic\">{}</text>",
            cell.letter.to_char()
        );
        if span == 2 {
            let y0 = gy(0) + 7.0;
            let _ = writeln!(
                svg,
                "<path d=\"M {:.1} {:.1} v 4 h {:.1} v -4\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>",
                gx(x) + 2.0,
                y0,
                span as f64 * UNIT - 4.0
            );
        }
        x += span;
    }
    let mut y = 0;
    while y < h {
        let cell = labels.row(y);
        let span = if cell.part == CellPart::Single { 1 } else { 2 };
        let cy = gy(y) - (span as f64 / 2.0) * UNIT + 5.0;
        let lx = MARGIN_LEFT - 22.0;
        let _ = writeln!(
            svg,
            "<text x=\"{lx:.1}\" y=\"{cy:.1}\" text-anchor=\"middle\" font-style=\"italic\">{}</text>",
            cell.letter.to_char()
        );
        if span == 2 {
            let x0 = MARGIN_LEFT - 11.0;
            let _ = writeln!(
                svg,
                "<path d=\"M {:.1} {:.1} h 4 v {:.1} h -4\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>",
                x0,
                gy(y + span) + 2.0,
                span as f64 * UNIT - 4.0
            );
        }
        y += span;
    }

    if let Some(path) = path {
        let pts = path.points();
        let mut d = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            let _ = write!(
                d,
                "{}{:.1} {:.1}",
                if i == 0 { "M " } else { " L " },
                gx(*x),
                gy(*y)
            );
        }
        let _ = writeln!(
            svg,
            "<path d=\"{d}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\" \
             stroke-linecap=\"round\" stroke-linejoin=\"round\"/>"
        );
        for (x, y) in [pts[0], *pts.last().unwrap()] {
            let _ = writeln!(
                svg,
                "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"3.5\" fill=\"#c0392b\"/>",
                gx(x),
                gy(y)
            );
        }
        let caption: Vec<String> = path.steps().iter().map(|s| s.pretty().to_string()).collect();
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-weight=\"bold\">{}</text>",
            MARGIN_LEFT + w.max(1) as f64 * UNIT / 2.0,
            MARGIN_TOP - 9.0,
            caption.join("")
        );
    }
}

fn render_tikz(labels: &AxisLabeling, paths: &[LatticePath]) -> String {
    let w = labels.width();
    let h = labels.height();
    let panels: Vec<Option<&LatticePath>> = if paths.is_empty() {
        vec![None]
    } else {
        paths.iter().map(Some).collect()
    };
    let per_row = (10 / (w + 2)).max(1);

    let mut out = String::from("\\begin{tikzpicture}[x=0.5cm,y=0.5cm]\n");
    for (i, path) in panels.iter().enumerate() {
        let ox = (i % per_row) * (w + 3);
        let oy_rows = i / per_row;
        let oy = oy_rows * (h + 4);
        let _ = writeln!(out, "\\begin{{scope}}[shift={{({ox},-{oy})}}]");
        let _ = writeln!(out, "\\draw[step=1,gray!60,thin] (0,0) grid ({w},{h});");
        let mut x = 0;
        while x < w {
            let cell = labels.col(x);
            let span = if cell.part == CellPart::Single { 1 } else { 2 };
            let mid = x as f64 + span as f64 / 2.0;
            let _ = writeln!(
                out,
                "\\node[below] at ({mid},-0.15) {{${}$}};",
                cell.letter.to_char()
            );
            if span == 2 {
                let _ = writeln!(
                    out,
                    "\\draw ({}.08,-0.12) -- ({}.08,-0.22) -- ({}.92,-0.22) -- ({}.92,-0.12);",
                    x,
                    x,
                    x + 1,
                    x + 1
                );
            }
            x += span;
        }
        let mut y = 0;
        while y < h {
            let cell = labels.row(y);
            let span = if cell.part == CellPart::Single { 1 } else { 2 };
            let mid = y as f64 + span as f64 / 2.0;
            let _ = writeln!(
                out,
                "\\node[left] at (-0.15,{mid}) {{${}$}};",
                cell.letter.to_char()
            );
            y += span;
        }
        if let Some(path) = path {
            let pts = path.points();
            let coords: Vec<String> = pts.iter().map(|(x, y)| format!("({x},{y})")).collect();
            let _ = writeln!(out, "\\draw[very thick,red] {};", coords.join(" -- "));
            let name: Vec<String> = path
                .steps()
                .iter()
                .map(|s| match s {
                    super::Step::DoubleRight => "\\overline{R}".to_string(),
                    super::Step::DoubleUp => "\\overline{U}".to_string(),
                    other => other.token().to_string(),
                })
                .collect();
            let _ = writeln!(
                out,
                "\\node[above] at ({:.1},{h}.2) {{${}$}};",
                w as f64 / 2.0,
                name.join("")
            );
        }
        out.push_str("\\end{scope}\n");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latpaths::enumerate_gamma;
    use crate::ncalg::{parse_word, Alphabet};

    fn gamma_labels() -> AxisLabeling {
        AxisLabeling::new(
            parse_word("cd", Alphabet::Cd).unwrap(),
            parse_word("dc", Alphabet::Cd).unwrap(),
        )
    }

    #[test]
    fn svg_contains_one_panel_per_path() {
        let labels = gamma_labels();
        let paths = enumerate_gamma(&labels);
        let svg = render_paths(&labels, &paths, RenderFormat::Svg).unwrap();
        assert_eq!(svg.matches("<g transform").count(), 13);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("R\u{0304}"));
    }

    #[test]
    fn empty_path_set_renders_grid_only() {
        let labels = gamma_labels();
        let svg = render_paths(&labels, &[], RenderFormat::Svg).unwrap();
        assert_eq!(svg.matches("<g transform").count(), 1);
        assert!(!svg.contains("circle"));
    }

    #[test]
    fn single_ab_panel_renders() {
        let labels = AxisLabeling::new(
            parse_word("abab", Alphabet::Ab).unwrap(),
            parse_word("bba", Alphabet::Ab).unwrap(),
        );
        let path = LatticePath::parse("U D R R D").unwrap();
        let svg = render_paths(&labels, &[path], RenderFormat::Svg).unwrap();
        assert_eq!(svg.matches("<g transform").count(), 1);
        assert!(svg.contains(">UDRRD</text>"));
    }

    #[test]
    fn tikz_output_is_a_tikzpicture() {
        let labels = gamma_labels();
        let paths = enumerate_gamma(&labels);
        let tikz = render_paths(&labels, &paths, RenderFormat::Tikz).unwrap();
        assert!(tikz.starts_with("\\begin{tikzpicture}"));
        assert_eq!(tikz.matches("\\begin{scope}").count(), 13);
    }

    #[test]
    fn render_rejects_oversized_paths() {
        let labels = gamma_labels();
        let too_big = LatticePath::parse("R R R R R R").unwrap();
        assert!(matches!(
            render_paths(&labels, &[too_big], RenderFormat::Svg),
            Err(PathError::StepOutOfRegion { .. })
        ));
    }

    #[test]
    fn unknown_format_name_errors() {
        assert!(matches!(
            RenderFormat::from_name("png"),
            Err(PathError::UnknownFormat(_))
        ));
        assert_eq!(RenderFormat::from_name("svg").unwrap(), RenderFormat::Svg);
    }

    #[test]
    fn svg_output_is_stable() {
        let labels = gamma_labels();
        let paths = enumerate_gamma(&labels);
        let a = render_paths(&labels, &paths, RenderFormat::Svg).unwrap();
        let b = render_paths(&labels, &paths, RenderFormat::Svg).unwrap();
        assert_eq!(a, b);
    }
}
