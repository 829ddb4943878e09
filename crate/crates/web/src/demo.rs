//! Plain-Rust operations behind the browser bindings. Each takes the path
//! specification as JSON text and returns JSON text or an error message.

use serde_json::{json, Value};

use planar_crossing::exact_geom::{eps, format_rational, parse_rational, Interval, Point};
use planar_crossing::formats::{input_hash, render_svg, CertificateFile, Highlight, PathSpecFile};
use planar_crossing::parity::evaluate_parity;
use planar_crossing::paths::{extend, n_approximation_pair, ExtendedPath, SharedPath, Side};
use planar_crossing::refine::{extract_point, refine_sequence, RefineOptions};

/// Iteration cap for the browser; exact arithmetic in wasm is slow.
pub const MAX_ITERATIONS: u32 = 16;
const EFFORT: u32 = 64;

fn load(spec_json: &str) -> Result<(SharedPath, SharedPath), String> {
    PathSpecFile::parse(spec_json)
        .and_then(|s| s.build())
        .map_err(|e| e.to_string())
}

fn extended(spec_json: &str) -> Result<(ExtendedPath, ExtendedPath), String> {
    let (phi, psi) = load(spec_json)?;
    let f = extend(phi, Side::Lower).map_err(|e| e.to_string())?;
    let g = extend(psi, Side::Upper).map_err(|e| e.to_string())?;
    Ok((f, g))
}

fn interval(lo: &str, hi: &str) -> Result<Interval, String> {
    let lo = parse_rational(lo.trim()).map_err(|e| e.to_string())?;
    let hi = parse_rational(hi.trim()).map_err(|e| e.to_string())?;
    Interval::new(lo, hi).map_err(|e| e.to_string())
}

fn floats(points: &[Point]) -> Value {
    points
        .iter()
        .map(|p| {
            let (x, y) = p.to_f64();
            json!([x, y])
        })
        .collect()
}

/// Runs `iterations` refinement steps. Returns the certificate, an SVG
/// drawing with the final intervals highlighted, and the final intervals.
pub fn intersect(spec_json: &str, iterations: u32) -> Result<String, String> {
    if iterations > MAX_ITERATIONS {
        return Err(format!(
            "at most {MAX_ITERATIONS} iterations in the browser"
        ));
    }
    let (phi, psi) = load(spec_json)?;
    let cert = refine_sequence(&phi, &psi, iterations, &RefineOptions::default())
        .map_err(|e| e.to_string())?;
    let file = CertificateFile::new(&cert, input_hash(spec_json.as_bytes()), EFFORT, false);
    let last = cert.last();
    let ball = extract_point(&cert, &phi, &eps(6)).ok();
    let highlight = Highlight {
        i: last.i.clone(),
        j: last.j.clone(),
        ball: ball.as_ref().map(|b| (b.center.clone(), b.radius.clone())),
    };
    let f = extend(phi, Side::Lower).map_err(|e| e.to_string())?;
    let g = extend(psi, Side::Upper).map_err(|e| e.to_string())?;
    let show = |i: Option<Interval>| {
        i.map_or(Value::Null, |i| {
            json!([format_rational(i.lo()), format_rational(i.hi())])
        })
    };
    Ok(json!({
        "certificate": file.to_json(),
        "svg": render_svg(&f, &g, (iterations > 0).then_some(&highlight)),
        "s_phi": show(cert.s_phi()),
        "s_psi": show(cert.s_psi()),
        "point": ball.map(|b| {
            let (x, y) = b.center.to_f64();
            json!({ "x": x, "y": y, "radius": planar_crossing::exact_geom::to_f64(&b.radius) })
        }),
    })
    .to_string())
}

/// Crossing parity of the extended paths on `[i_lo; i_hi]` and `[j_lo; j_hi]`.
pub fn parity(
    spec_json: &str,
    i_lo: &str,
    i_hi: &str,
    j_lo: &str,
    j_hi: &str,
) -> Result<String, String> {
    let (f, g) = extended(spec_json)?;
    let i = interval(i_lo, i_hi)?;
    let j = interval(j_lo, j_hi)?;
    let eval = evaluate_parity(&f, &g, &i, &j, EFFORT).map_err(|e| e.to_string())?;
    Ok(json!({
        "parity": eval.parity.bit(),
        "alpha": [format_rational(&eval.alpha.lo), format_rational(&eval.alpha.hi)],
        "precision": eval.precision,
        "crossings": eval.crossings,
    })
    .to_string())
}

/// Weakly separated `n`-approximations of both extended paths over their
/// whole domain, as float vertex lists for drawing.
pub fn approximation(spec_json: &str, n: u32) -> Result<String, String> {
    if n > 12 {
        return Err("precision above 12 is too dense to draw".into());
    }
    let (f, g) = extended(spec_json)?;
    let d = Interval::extended_domain();
    let (p, q) = n_approximation_pair(&f, &g, &d, &d, n).map_err(|e| e.to_string())?;
    Ok(json!({ "phi": floats(p.vertices()), "psi": floats(q.vertices()) }).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAGONALS: &str = r#"{
        "phi": { "type": "polyline", "vertices": [[0, 0], [1, 1]] },
        "psi": { "type": "polyline", "vertices": [[0, 1], [1, 0]] }
    }"#;

    fn parsed(text: &str) -> Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn intersect_reports_intervals() {
        let out = parsed(&intersect(DIAGONALS, 3).unwrap());
        assert!(out["svg"].as_str().unwrap().contains("highlight"));
        let s = out["s_phi"].as_array().unwrap();
        let lo = parse_rational(s[0].as_str().unwrap()).unwrap();
        let hi = parse_rational(s[1].as_str().unwrap()).unwrap();
        assert!(
            lo < planar_crossing::exact_geom::ratio(1, 2)
                && planar_crossing::exact_geom::ratio(1, 2) < hi
        );
        assert!(CertificateFile::parse(out["certificate"].as_str().unwrap()).is_ok());
        assert!(intersect(DIAGONALS, MAX_ITERATIONS + 1).is_err());
    }

    #[test]
    fn parity_of_crossing_and_disjoint_pieces() {
        let out = parsed(&parity(DIAGONALS, "-1", "2", "-1", "2").unwrap());
        assert_eq!(out["parity"], 1);
        let out = parsed(&parity(DIAGONALS, "-1", "-1/2", "3/2", "2").unwrap());
        assert_eq!(out["parity"], 0);
        assert!(parity(DIAGONALS, "1", "0", "-1", "2").is_err());
    }

    #[test]
    fn approximation_vertices() {
        let out = parsed(&approximation(DIAGONALS, 3).unwrap());
        let phi = out["phi"].as_array().unwrap();
        assert_eq!(phi.first().unwrap(), &json!([-1.0, 0.0]));
        assert_eq!(phi.last().unwrap(), &json!([2.0, 1.0]));
        assert!(!out["psi"].as_array().unwrap().is_empty());
    }

    #[test]
    fn bad_specs_are_reported() {
        assert!(intersect("{}", 1).is_err());
        let off = DIAGONALS.replace("[[0, 0], [1, 1]]", "[[1, 1], [0, 0]]");
        assert!(parity(&off, "-1", "2", "-1", "2")
            .unwrap_err()
            .contains("endpoint"));
    }
}
