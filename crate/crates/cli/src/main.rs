//! `pcross`: certified intersection intervals for path pairs given as JSON.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use planar_crossing::exact_geom::{eps, format_rational, parse_rational, Interval};
use planar_crossing::formats::{
    input_hash, render_svg, CertificateFile, Highlight, PathSpecFile, SpecError,
};
use planar_crossing::parity::{evaluate_parity, ParityError};
use planar_crossing::paths::{extend, PathError, SharedPath, Side};
use planar_crossing::refine::{
    extract_point, refine_sequence, verify_certificate, RefineError, RefineOptions, VerifyOptions,
};

mod selftest;

#[derive(Parser, Debug)]
#[command(
    name = "pcross",
    version,
    about = "Certified intersection intervals for planar paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Refine nested parameter intervals and write a certificate.
    Intersect(IntersectArgs),
    /// Crossing parity of the extended paths restricted to two intervals.
    Parity(ParityArgs),
    /// Draw both paths and the final certificate intervals as SVG.
    Render(RenderArgs),
    /// Run a short battery of known configurations.
    Selftest,
}

#[derive(Args, Debug)]
struct IntersectArgs {
    /// Path specification (JSON).
    spec: PathBuf,
    #[arg(long, short = 'M', default_value_t = 16)]
    iterations: u32,
    /// Precision steps allowed when certifying alpha > 0.
    #[arg(long, default_value_t = 64)]
    effort: u32,
    #[arg(long)]
    verify_base_parity: bool,
    /// Re-check nesting, parity and neighbourhoods by exact sampling.
    #[arg(long)]
    verify_postconditions: bool,
    #[arg(long, value_name = "PATH")]
    emit_svg: Option<PathBuf>,
    /// Certificate destination; standard output if absent.
    #[arg(long, short = 'o', value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ParityArgs {
    spec: PathBuf,
    /// Interval of the extended phi, written `lo,hi` (rationals).
    #[arg(
        long = "i",
        value_name = "LO,HI",
        allow_hyphen_values = true,
        default_value = "-1,2"
    )]
    i: String,
    /// Interval of the extended psi.
    #[arg(
        long = "j",
        value_name = "LO,HI",
        allow_hyphen_values = true,
        default_value = "-1,2"
    )]
    j: String,
    #[arg(long, default_value_t = 64)]
    effort: u32,
}

#[derive(Args, Debug)]
struct RenderArgs {
    spec: PathBuf,
    certificate: PathBuf,
    #[arg(long, short = 'o', value_name = "PATH")]
    output: PathBuf,
}

/// A failure carrying its process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn other(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        if e.is_parse_error() {
            Failure::parse(e.to_string())
        } else {
            Failure {
                code: 3,
                message: e.to_string(),
            }
        }
    }
}

impl From<PathError> for Failure {
    fn from(e: PathError) -> Self {
        match e {
            PathError::EndpointViolation { .. } => Failure {
                code: 3,
                message: e.to_string(),
            },
            _ => Failure::other(e.to_string()),
        }
    }
}

impl From<ParityError> for Failure {
    fn from(e: ParityError) -> Self {
        match e {
            ParityError::EffortExhausted { .. } => Failure {
                code: 4,
                message: e.to_string(),
            },
            ParityError::Path(p) => p.into(),
            _ => Failure::other(e.to_string()),
        }
    }
}

impl From<RefineError> for Failure {
    fn from(e: RefineError) -> Self {
        match e {
            RefineError::Path(p) => p.into(),
            RefineError::Parity(p) => p.into(),
            _ => Failure::other(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::other(format!("cannot write {}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<(Vec<u8>, SharedPath, SharedPath), Failure> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let (phi, psi) = PathSpecFile::parse(text)?.build()?;
    Ok((bytes, phi, psi))
}

fn parse_interval(text: &str) -> Result<Interval, Failure> {
    let (lo, hi) = text
        .split_once(',')
        .ok_or_else(|| Failure::parse(format!("interval `{text}` is not of the form lo,hi")))?;
    let lo = parse_rational(lo.trim()).map_err(|e| Failure::parse(format!("`{lo}`: {e}")))?;
    let hi = parse_rational(hi.trim()).map_err(|e| Failure::parse(format!("`{hi}`: {e}")))?;
    Interval::new(lo, hi).map_err(|e| Failure::parse(e.to_string()))
}

fn highlight_for(cert: &planar_crossing::refine::Certificate, phi: &SharedPath) -> Highlight {
    let last = cert.last();
    // A disc is shown only when it is small enough to mean something.
    let ball = extract_point(cert, phi, &eps(6))
        .ok()
        .map(|b| (b.center, b.radius));
    Highlight {
        i: last.i.clone(),
        j: last.j.clone(),
        ball,
    }
}

fn cmd_intersect(args: &IntersectArgs) -> Result<(), Failure> {
    let (bytes, phi, psi) = load_spec(&args.spec)?;
    let options = RefineOptions {
        effort: args.effort,
        verify_base_parity: args.verify_base_parity,
    };
    let started = Instant::now();
    let cert = refine_sequence(&phi, &psi, args.iterations, &options)?;
    if args.verify_postconditions {
        let verify = VerifyOptions {
            effort: args.effort,
            ..VerifyOptions::default()
        };
        verify_certificate(&cert, &phi, &psi, &verify)?;
    }
    eprintln!(
        "refined {} steps in {:.2?}; S_phi = {}, S_psi = {}",
        args.iterations,
        started.elapsed(),
        cert.s_phi().map_or("empty".into(), |s| s.to_string()),
        cert.s_psi().map_or("empty".into(), |s| s.to_string()),
    );
    let file = CertificateFile::new(
        &cert,
        input_hash(&bytes),
        args.effort,
        args.verify_postconditions,
    );
    match &args.output {
        Some(path) => write(path, &file.to_json())?,
        None => print!("{}", file.to_json()),
    }
    if let Some(path) = &args.emit_svg {
        let f = extend(phi.clone(), Side::Lower)?;
        let g = extend(psi, Side::Upper)?;
        write(path, &render_svg(&f, &g, Some(&highlight_for(&cert, &phi))))?;
    }
    Ok(())
}

fn cmd_parity(args: &ParityArgs) -> Result<(), Failure> {
    let (_, phi, psi) = load_spec(&args.spec)?;
    let i = parse_interval(&args.i)?;
    let j = parse_interval(&args.j)?;
    let f = extend(phi, Side::Lower)?;
    let g = extend(psi, Side::Upper)?;
    let e = evaluate_parity(&f, &g, &i, &j, args.effort)?;
    println!("parity {}", e.parity);
    println!(
        "alpha in [{}; {}] (precision {})",
        format_rational(&e.alpha.lo),
        format_rational(&e.alpha.hi),
        e.alpha.precision
    );
    match e.crossings {
        Some(n) => println!("crossings {n} at precision {}", e.precision),
        None => println!("approximations disjoint at precision {}", e.precision),
    }
    Ok(())
}

fn cmd_render(args: &RenderArgs) -> Result<(), Failure> {
    let (_, phi, psi) = load_spec(&args.spec)?;
    let text = String::from_utf8(read(&args.certificate)?)
        .map_err(|e| Failure::parse(format!("{}: {e}", args.certificate.display())))?;
    let cert = CertificateFile::parse(&text)
        .and_then(|file| file.to_certificate())
        .map_err(|e| Failure::parse(e.to_string()))?;
    let f = extend(phi.clone(), Side::Lower)?;
    let g = extend(psi, Side::Upper)?;
    let highlight = cert.as_ref().map(|c| highlight_for(c, &phi));
    write(&args.output, &render_svg(&f, &g, highlight.as_ref()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Intersect(args) => cmd_intersect(args),
        Command::Parity(args) => cmd_parity(args),
        Command::Render(args) => cmd_render(args),
        Command::Selftest => selftest::run().map_err(Failure::other),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("pcross: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
