//! File formats: JSON path specifications, JSON certificates, SVG renderings.

mod certificate;
mod spec_file;
mod svg;

pub use certificate::{
    input_hash, CertificateFile, FormatError, RecordEntry, Verified, FORMAT_VERSION,
};
pub use spec_file::{PathSpec, PathSpecFile, RationalText, SampleSpec, SpecError};
pub use svg::{render_svg, Highlight};
