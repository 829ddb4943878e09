use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exact_geom::{parse_rational, Interval, Rational};
use crate::refine::{Certificate, RefinementRecord};

pub const FORMAT_VERSION: u32 = 1;

/// Hex SHA-256 of the raw specification bytes.
pub fn input_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Writes `p/q` even for integers, so every value reads as a fraction.
fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn pair(i: &Interval) -> [String; 2] {
    [fraction(i.lo()), fraction(i.hi())]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verified {
    pub base_parity: bool,
    pub postconditions: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordEntry {
    pub m: u32,
    #[serde(rename = "I")]
    pub i: [String; 2],
    #[serde(rename = "J")]
    pub j: [String; 2],
    pub radius: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub version: u32,
    pub input_hash: String,
    pub iterations: u32,
    pub effort: u32,
    pub verified: Verified,
    pub records: Vec<RecordEntry>,
    pub s_phi: Option<[String; 2]>,
    pub s_psi: Option<[String; 2]>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported certificate version {0}")]
    Version(u32),
    #[error("certificate record {m}: {reason}")]
    Record { m: u32, reason: String },
}

impl CertificateFile {
    pub fn new(cert: &Certificate, input_hash: String, effort: u32, postconditions: bool) -> Self {
        Self {
            version: FORMAT_VERSION,
            input_hash,
            iterations: cert.iterations(),
            effort,
            verified: Verified {
                base_parity: cert.base_parity_verified,
                postconditions,
            },
            records: cert
                .records
                .iter()
                .map(|r| RecordEntry {
                    m: r.m,
                    i: pair(&r.i),
                    j: pair(&r.j),
                    radius: fraction(&r.radius()),
                })
                .collect(),
            s_phi: cert.s_phi().as_ref().map(pair),
            s_psi: cert.s_psi().as_ref().map(pair),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("certificates serialize");
        text.push('\n');
        text
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: CertificateFile = serde_json::from_str(text)?;
        if file.version != FORMAT_VERSION {
            return Err(FormatError::Version(file.version));
        }
        Ok(file)
    }

    /// Decodes the records. An empty record list decodes to `None`.
    pub fn to_certificate(&self) -> Result<Option<Certificate>, FormatError> {
        if self.records.is_empty() {
            return Ok(None);
        }
        let records = self
            .records
            .iter()
            .map(|e| {
                let bad = |reason: String| FormatError::Record { m: e.m, reason };
                let interval = |ends: &[String; 2]| {
                    let lo = parse_rational(&ends[0]).map_err(|err| bad(err.to_string()))?;
                    let hi = parse_rational(&ends[1]).map_err(|err| bad(err.to_string()))?;
                    Interval::new(lo, hi).map_err(|err| bad(err.to_string()))
                };
                let record = RefinementRecord {
                    m: e.m,
                    i: interval(&e.i)?,
                    j: interval(&e.j)?,
                };
                let radius = parse_rational(&e.radius).map_err(|err| bad(err.to_string()))?;
                if radius != record.radius() {
                    return Err(bad(format!("radius {} is not 2^-{}", e.radius, e.m)));
                }
                Ok(record)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(Certificate {
            records,
            base_parity_verified: self.verified.base_parity,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{int, ratio};

    fn sample() -> Certificate {
        Certificate {
            records: vec![
                RefinementRecord {
                    m: 0,
                    i: Interval::extended_domain(),
                    j: Interval::extended_domain(),
                },
                RefinementRecord {
                    m: 1,
                    i: Interval::new(ratio(105, 256), ratio(151, 256)).unwrap(),
                    j: Interval::new(ratio(-1, 3), int(2)).unwrap(),
                },
            ],
            base_parity_verified: true,
        }
    }

    #[test]
    fn round_trip() {
        let cert = sample();
        let file = CertificateFile::new(&cert, input_hash(b"spec"), 64, false);
        let text = file.to_json();
        assert!(text.contains("\"-1/1\"") && text.contains("\"1/2\""));
        let back = CertificateFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_certificate().unwrap(), Some(cert));
        assert_eq!(
            back.s_phi,
            Some(["105/256".to_string(), "151/256".to_string()])
        );
    }

    #[test]
    fn emission_is_deterministic() {
        let a = CertificateFile::new(&sample(), input_hash(b"x"), 8, true).to_json();
        let b = CertificateFile::new(&sample(), input_hash(b"x"), 8, true).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn hash_is_sha256() {
        assert_eq!(
            input_hash(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn rejects_tampered_radius_and_version() {
        let file = CertificateFile::new(&sample(), input_hash(b""), 1, false);
        let mut bad = file.clone();
        bad.records[1].radius = "1/4".into();
        assert!(matches!(
            bad.to_certificate(),
            Err(FormatError::Record { m: 1, .. })
        ));
        let text = file.to_json().replace("\"version\": 1", "\"version\": 9");
        assert!(matches!(
            CertificateFile::parse(&text),
            Err(FormatError::Version(9))
        ));
        let mut empty = file;
        empty.records.clear();
        assert_eq!(empty.to_certificate().unwrap(), None);
    }
}
