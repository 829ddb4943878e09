use std::fmt::Write as _;

use crate::exact_geom::{int, Interval, Point, Rational};
use crate::paths::PathOracle;

/// Parameter intervals whose images are drawn emphasised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Highlight {
    pub i: Interval,
    pub j: Interval,
    /// Optional disc, e.g. an extracted intersection.
    pub ball: Option<(Point, Rational)>,
}

const CURVE_SAMPLES: i64 = 384;
const HIGHLIGHT_SAMPLES: i64 = 48;
const SAMPLE_PRECISION: u32 = 24;

fn sampled(f: &dyn PathOracle, over: &Interval, samples: i64) -> Vec<String> {
    (0..=samples)
        .map(|k| {
            let t = over.lo() + over.len() * int(k) / int(samples);
            let (x, y) = f.eval_approx(&t, SAMPLE_PRECISION).to_f64();
            format!("{x:.6},{y:.6}")
        })
        .collect()
}

fn path_data(f: &dyn PathOracle, over: &Interval) -> String {
    format!("M {}", sampled(f, over, CURVE_SAMPLES).join(" L "))
}

fn polyline_points(f: &dyn PathOracle, over: &Interval) -> String {
    sampled(f, over, HIGHLIGHT_SAMPLES).join(" ")
}

/// SVG 1.1 drawing of `f` and `g` over their domains, the unit square, and
/// an optional highlight group. The view box spans `[-1.2; 2.2]` on both axes
/// with the y axis pointing up.
pub fn render_svg(f: &dyn PathOracle, g: &dyn PathOracle, highlight: Option<&Highlight>) -> String {
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"680\" height=\"680\" viewBox=\"-1.2 -1.2 3.4 3.4\">\n",
    );
    s.push_str(
        "<style>.curve{fill:none;stroke-width:0.012}.phi{stroke:#1f5fa8}.psi{stroke:#b8431b}\
         .square{fill:none;stroke:#888;stroke-width:0.006;stroke-dasharray:0.03 0.02}\
         .highlight polyline{fill:none;stroke:#111;stroke-width:0.03;stroke-linecap:round}\
         .highlight circle{fill:#f2c230;fill-opacity:0.6;stroke:#111;stroke-width:0.004}</style>\n",
    );
    // Mirror y about 1/2 so that the square stays in place.
    s.push_str("<g transform=\"matrix(1 0 0 -1 0 1)\">\n");
    s.push_str("<rect class=\"square\" x=\"0\" y=\"0\" width=\"1\" height=\"1\"/>\n");
    let _ = writeln!(
        s,
        "<path class=\"curve phi\" d=\"{}\"/>",
        path_data(f, &f.domain())
    );
    let _ = writeln!(
        s,
        "<path class=\"curve psi\" d=\"{}\"/>",
        path_data(g, &g.domain())
    );
    if let Some(h) = highlight {
        s.push_str("<g class=\"highlight\">\n");
        let _ = writeln!(s, "<polyline points=\"{}\"/>", polyline_points(f, &h.i));
        let _ = writeln!(s, "<polyline points=\"{}\"/>", polyline_points(g, &h.j));
        if let Some((c, r)) = &h.ball {
            let (x, y) = c.to_f64();
            // Keep tiny discs visible.
            let r = crate::exact_geom::to_f64(r).max(0.02);
            let _ = writeln!(s, "<circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"{r:.6}\"/>");
        }
        s.push_str("</g>\n");
    }
    s.push_str("</g>\n</svg>\n");
    s
}
