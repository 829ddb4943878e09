use std::sync::Arc;
use std::time::Instant;

use planar_crossing::exact_geom::{eps, int, ratio, to_f64, Interval, Point};
use planar_crossing::parity::{function_parity, parity_at_precision, Parity};
use planar_crossing::paths::{extend, PolylinePath, QuadBezierPath, SharedPath, Side};
use planar_crossing::refine::{
    extract_point, refine_sequence, verify_certificate, RefineOptions, VerifyOptions,
};

fn diagonals() -> (SharedPath, SharedPath) {
    (
        Arc::new(
            PolylinePath::uniform(vec![Point::from_ints(0, 0), Point::from_ints(1, 1)]).unwrap(),
        ),
        Arc::new(
            PolylinePath::uniform(vec![Point::from_ints(0, 1), Point::from_ints(1, 0)]).unwrap(),
        ),
    )
}

fn arcs() -> (SharedPath, SharedPath) {
    (
        Arc::new(QuadBezierPath::new(
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
        )),
        Arc::new(QuadBezierPath::new(
            Point::from_ints(0, 1),
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
        )),
    )
}

fn base_parity((phi, psi): (SharedPath, SharedPath)) -> Result<bool, String> {
    let f = extend(phi, Side::Lower).map_err(|e| e.to_string())?;
    let g = extend(psi, Side::Upper).map_err(|e| e.to_string())?;
    let d = Interval::extended_domain();
    Ok(parity_at_precision(&f, &g, &d, &d, 5).map_err(|e| e.to_string())? == Parity::Odd)
}

fn far_apart() -> Result<bool, String> {
    let (phi, psi) = diagonals();
    let f = extend(phi, Side::Lower).map_err(|e| e.to_string())?;
    let g = extend(psi, Side::Upper).map_err(|e| e.to_string())?;
    let i = Interval::new(int(-1), ratio(-1, 2)).unwrap();
    let j = Interval::new(ratio(3, 2), int(2)).unwrap();
    Ok(function_parity(&f, &g, &i, &j, 16).map_err(|e| e.to_string())? == Parity::Even)
}

fn diagonal_certificate() -> Result<bool, String> {
    let (phi, psi) = diagonals();
    let cert =
        refine_sequence(&phi, &psi, 6, &RefineOptions::default()).map_err(|e| e.to_string())?;
    verify_certificate(&cert, &phi, &psi, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    Ok(cert.s_phi().is_some_and(|s| s.contains(&ratio(1, 2))))
}

fn arc_point() -> Result<bool, String> {
    let (phi, psi) = arcs();
    let cert =
        refine_sequence(&phi, &psi, 4, &RefineOptions::default()).map_err(|e| e.to_string())?;
    let ball = extract_point(&cert, &phi, &eps(10)).map_err(|e| e.to_string())?;
    // The arcs meet at x = 1/2, y = (1 - 1/sqrt 2)^2.
    let (x, y) = ball.center.to_f64();
    let target_y = (1.0 - std::f64::consts::FRAC_1_SQRT_2).powi(2);
    Ok(((x - 0.5).powi(2) + (y - target_y).powi(2)).sqrt() <= to_f64(&eps(8)))
}

type Check = fn() -> Result<bool, String>;

pub fn run() -> Result<(), String> {
    let checks: [(&str, Check); 5] = [
        ("base parity, diagonals", || base_parity(diagonals())),
        ("base parity, quadratic arcs", || base_parity(arcs())),
        ("far-apart pieces have even parity", far_apart),
        (
            "diagonal certificate, 6 steps, verified",
            diagonal_certificate,
        ),
        ("arc intersection point within 2^-8", arc_point),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let started = Instant::now();
        let outcome = check();
        let verdict = match &outcome {
            Ok(true) => "pass".to_string(),
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        if !matches!(outcome, Ok(true)) {
            failed += 1;
        }
        println!("{verdict:<6} {name} [{:.2?}]", started.elapsed());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(format!("{failed} self-test check(s) failed"))
    }
}
