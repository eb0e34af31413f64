//! SVG drawings of non-intersecting path systems: the lattice window as a
//! grid, labelled sources and sinks, one polyline per path.

use std::fmt::Write;

use crate::lgv::{LatticePoint, LatticeScheme, PathSystem};

const STEP: f64 = 40.0;
const MARGIN: f64 = 40.0;
const CAPTION: f64 = 24.0;
const COLORS: [&str; 6] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

struct Panel<'a> {
    scheme: &'a LatticeScheme,
    sources: &'a [LatticePoint],
    sinks: &'a [LatticePoint],
}

impl Panel<'_> {
    fn width(&self) -> f64 {
        2.0 * MARGIN + f64::from(self.scheme.col_bound.saturating_sub(1)) * STEP
    }

    fn height(&self) -> f64 {
        2.0 * MARGIN + f64::from(self.scheme.row_bound().saturating_sub(1)) * STEP + CAPTION
    }

    /// Rows grow upwards, as in the usual lattice pictures.
    fn xy(&self, p: LatticePoint) -> (f64, f64) {
        let top = MARGIN + CAPTION;
        let rows = f64::from(self.scheme.row_bound());
        (
            MARGIN + (p.col - 1) as f64 * STEP,
            top + (rows - p.row as f64) * STEP,
        )
    }

    fn draw(&self, out: &mut String, system: Option<&PathSystem>, caption: &str) {
        let cols = i64::from(self.scheme.col_bound);
        let rows = i64::from(self.scheme.row_bound());
        let _ = writeln!(
            out,
            r#"<text x="{MARGIN}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
            CAPTION,
            escape(caption)
        );
        out.push_str(r##"<g stroke="#cccccc" stroke-width="1">"##);
        out.push('\n');
        for r in 1..=rows {
            let (x0, y) = self.xy(LatticePoint::new(1, r));
            let (x1, _) = self.xy(LatticePoint::new(cols, r));
            let _ = writeln!(out, r#"<line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}"/>"#);
        }
        for c in 1..=cols {
            let (x, y0) = self.xy(LatticePoint::new(c, 1));
            let (_, y1) = self.xy(LatticePoint::new(c, rows));
            let _ = writeln!(out, r#"<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}"/>"#);
        }
        out.push_str("</g>\n");

        if let Some(system) = system {
            for (i, path) in system.paths.iter().enumerate() {
                let points = path
                    .vertices
                    .iter()
                    .map(|&p| {
                        let (x, y) = self.xy(p);
                        format!("{x},{y}")
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(
                    out,
                    r#"<polyline points="{points}" fill="none" stroke="{}" stroke-width="4" stroke-linejoin="round"/>"#,
                    COLORS[i % COLORS.len()]
                );
            }
        }

        for (label, points, fill) in [("a", self.sources, "#000000"), ("b", self.sinks, "#ffffff")]
        {
            for (i, &p) in points.iter().enumerate() {
                let (x, y) = self.xy(p);
                let _ = writeln!(
                    out,
                    r##"<circle cx="{x}" cy="{y}" r="5" fill="{fill}" stroke="#000000"/>"##
                );
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" font-family="serif" font-size="13">{label}<tspan baseline-shift="sub" font-size="10">{}</tspan></text>"#,
                    x + 7.0,
                    y + 16.0,
                    i + 1
                );
            }
        }
    }
}

fn caption(system: &PathSystem) -> String {
    let sigma = system
        .sigma
        .iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!("σ = ({sigma}), sign {:+}", system.sign)
}

fn document(width: f64, height: f64, body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n\
         <rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n{body}</svg>\n"
    )
}

/// One system on its window.
pub fn render_system(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
    system: &PathSystem,
) -> String {
    let panel = Panel {
        scheme,
        sources,
        sinks,
    };
    let mut body = String::new();
    panel.draw(&mut body, Some(system), &caption(system));
    document(panel.width(), panel.height(), &body)
}

/// All systems side by side; an empty list draws the bare window.
pub fn render_systems(
    scheme: &LatticeScheme,
    sources: &[LatticePoint],
    sinks: &[LatticePoint],
    systems: &[PathSystem],
) -> String {
    let panel = Panel {
        scheme,
        sources,
        sinks,
    };
    let mut body = String::new();
    if systems.is_empty() {
        panel.draw(&mut body, None, "no non-intersecting systems");
        return document(panel.width(), panel.height(), &body);
    }
    for (k, system) in systems.iter().enumerate() {
        let _ = writeln!(
            body,
            r#"<g transform="translate({},0)">"#,
            k as f64 * panel.width()
        );
        panel.draw(&mut body, Some(system), &caption(system));
        body.push_str("</g>\n");
    }
    document(panel.width() * systems.len() as f64, panel.height(), &body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lgv::{nonintersecting_systems, vandermonde_endpoints, vandermonde_scheme};

    #[test]
    fn vandermonde_figure() {
        let scheme = vandermonde_scheme(3);
        let (a, b) = vandermonde_endpoints(3);
        let systems = nonintersecting_systems(&scheme, &a, &b).unwrap();
        let svg = render_system(&scheme, &a, &b, &systems[0]);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 6);
        let combined = render_systems(&scheme, &a, &b, &systems);
        assert_eq!(combined.matches("<g transform").count(), systems.len());
    }

    #[test]
    fn escaping() {
        assert_eq!(escape(r#"a<b & "c""#), "a&lt;b &amp; &quot;c&quot;");
    }
}
