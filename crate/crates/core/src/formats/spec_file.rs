use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exact_geom::{format_rational, parse_rational, ParseRationalError, Point, Rational};
use crate::paths::{PathError, PolylinePath, QuadBezierPath, SharedPath, TablePath};

/// A rational written either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    pub fn parse(&self) -> Result<Rational, ParseRationalError> {
        match self {
            RationalText::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalText::Text(s) => parse_rational(s),
        }
    }
}

impl From<&Rational> for RationalText {
    fn from(r: &Rational) -> Self {
        RationalText::Text(format_rational(r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleSpec {
    pub t: RationalText,
    pub point: [RationalText; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum PathSpec {
    /// Vertices at the given parameters, or uniformly on `[0; 1]`.
    Polyline {
        vertices: Vec<[RationalText; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params: Option<Vec<RationalText>>,
    },
    QuadBezier {
        control: [[RationalText; 2]; 3],
    },
    Table {
        samples: Vec<SampleSpec>,
        modulus_shift: u32,
        #[serde(default)]
        validate: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSpecFile {
    pub phi: PathSpec,
    pub psi: PathSpec,
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("malformed path specification: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational `{text}` in {role}: {source}")]
    Rational {
        role: String,
        text: String,
        source: ParseRationalError,
    },
    #[error("{role}: {source}")]
    Path { role: String, source: PathError },
}

impl SpecError {
    /// Did the input itself fail to parse (as opposed to describing an
    /// invalid path)?
    pub fn is_parse_error(&self) -> bool {
        !matches!(
            self,
            SpecError::Path {
                source: PathError::EndpointViolation { .. },
                ..
            }
        )
    }
}

fn scalar(role: &str, r: &RationalText) -> Result<Rational, SpecError> {
    r.parse().map_err(|source| SpecError::Rational {
        role: role.to_string(),
        text: match r {
            RationalText::Int(v) => v.to_string(),
            RationalText::Text(s) => s.clone(),
        },
        source,
    })
}

fn point(role: &str, xy: &[RationalText; 2]) -> Result<Point, SpecError> {
    Ok(Point::new(scalar(role, &xy[0])?, scalar(role, &xy[1])?))
}

impl PathSpec {
    pub fn build(&self, role: &str) -> Result<SharedPath, SpecError> {
        let wrap = |source| SpecError::Path {
            role: role.to_string(),
            source,
        };
        Ok(match self {
            PathSpec::Polyline { vertices, params } => {
                let pts = vertices
                    .iter()
                    .map(|v| point(role, v))
                    .collect::<Result<Vec<_>, _>>()?;
                let path = match params {
                    None => PolylinePath::uniform(pts),
                    Some(ts) => {
                        let ts = ts
                            .iter()
                            .map(|t| scalar(role, t))
                            .collect::<Result<_, _>>()?;
                        PolylinePath::new(ts, pts)
                    }
                };
                Arc::new(path.map_err(wrap)?)
            }
            PathSpec::QuadBezier { control } => Arc::new(QuadBezierPath::new(
                point(role, &control[0])?,
                point(role, &control[1])?,
                point(role, &control[2])?,
            )),
            PathSpec::Table {
                samples,
                modulus_shift,
                validate,
            } => {
                let mut ts = Vec::with_capacity(samples.len());
                let mut pts = Vec::with_capacity(samples.len());
                for s in samples {
                    ts.push(scalar(role, &s.t)?);
                    pts.push(point(role, &s.point)?);
                }
                let table = TablePath::new(ts, pts, *modulus_shift).map_err(wrap)?;
                if *validate {
                    table.validate().map_err(wrap)?;
                }
                Arc::new(table)
            }
        })
    }
}

impl PathSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds `(phi, psi)`. Endpoint conditions are checked when the paths
    /// are extended, not here.
    pub fn build(&self) -> Result<(SharedPath, SharedPath), SpecError> {
        Ok((self.phi.build("phi")?, self.psi.build("psi")?))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("specs serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{int, ratio};

    const DIAGONALS: &str = r#"{
        "phi": {"type": "polyline", "vertices": [[0, 0], ["1", "1/1"]]},
        "psi": {"type": "polyline", "vertices": [[0, 1], [1, 0]], "params": [0, "1"]}
    }"#;

    #[test]
    fn parses_mixed_rational_encodings() {
        let spec = PathSpecFile::parse(DIAGONALS).unwrap();
        let (phi, psi) = spec.build().unwrap();
        assert_eq!(
            phi.eval_approx(&ratio(1, 2), 0),
            Point::new(ratio(1, 2), ratio(1, 2))
        );
        assert_eq!(psi.eval_approx(&int(1), 0), Point::from_ints(1, 0));
        let again = PathSpecFile::parse(&spec.to_json()).unwrap();
        assert_eq!(
            again.build().unwrap().0.eval_approx(&ratio(1, 3), 0),
            phi.eval_approx(&ratio(1, 3), 0)
        );
    }

    #[test]
    fn bezier_and_table() {
        let text = r#"{
            "phi": {"type": "quad_bezier", "control": [[0, 0], [1, 0], [1, 1]]},
            "psi": {"type": "table", "modulus_shift": 2, "validate": true,
                    "samples": [{"t": 0, "point": [0, 1]}, {"t": "1/2", "point": ["1/2", "1/2"]},
                                {"t": 1, "point": [1, 0]}]}
        }"#;
        let (phi, psi) = PathSpecFile::parse(text).unwrap().build().unwrap();
        assert_eq!(
            phi.eval_approx(&ratio(1, 2), 0),
            Point::new(ratio(3, 4), ratio(1, 4))
        );
        assert_eq!(psi.modulus(3), 5);
    }

    #[test]
    fn rejects_bad_input() {
        let zero_den = DIAGONALS.replace("\"1/1\"", "\"1/0\"");
        let err = PathSpecFile::parse(&zero_den).unwrap().build().unwrap_err();
        assert!(matches!(err, SpecError::Rational { .. }) && err.is_parse_error());
        assert!(PathSpecFile::parse("{\"phi\": 3}").is_err());
        let unknown = DIAGONALS.replace(
            "polyline\", \"vertices\": [[0, 0]",
            "spline\", \"vertices\": [[0, 0]",
        );
        assert!(PathSpecFile::parse(&unknown).is_err());
        let short = r#"{"phi": {"type": "polyline", "vertices": [[0, 0]]},
                        "psi": {"type": "polyline", "vertices": [[0, 1], [1, 0]]}}"#;
        assert!(PathSpecFile::parse(short).unwrap().build().is_err());
    }
}
