use super::shrink::shrink_pair;
use super::RefineError;
use crate::exact_geom::{eps, int, Interval, Rational};
use crate::parity::{function_parity, parity_at_precision, Parity};
use crate::paths::{extend, n_approximation, PathOracle, SharedPath, Side};

/// One step `(m, I_m, J_m)` of a nested interval certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementRecord {
    pub m: u32,
    pub i: Interval,
    pub j: Interval,
}

impl RefinementRecord {
    /// Neighbourhood radius `2^-m` guaranteed at this step.
    pub fn radius(&self) -> Rational {
        eps(self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub records: Vec<RefinementRecord>,
    pub base_parity_verified: bool,
}

impl Certificate {
    pub fn last(&self) -> &RefinementRecord {
        self.records
            .last()
            .expect("a certificate has a base record")
    }

    pub fn iterations(&self) -> u32 {
        self.last().m
    }

    /// Final parameter interval of `phi`, clipped to `[0; 1]`.
    pub fn s_phi(&self) -> Option<Interval> {
        self.last().i.intersect(&Interval::unit())
    }

    pub fn s_psi(&self) -> Option<Interval> {
        self.last().j.intersect(&Interval::unit())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefineOptions {
    pub effort: u32,
    pub verify_base_parity: bool,
}

impl Default for RefineOptions {
    fn default() -> Self {
        Self {
            effort: 64,
            verify_base_parity: false,
        }
    }
}

/// Precision of the optional base parity check; `2^-5 < 1/16` and the
/// extended corner-to-corner paths have `alpha = 1` on the full domain.
pub const BASE_PARITY_PRECISION: u32 = 5;

/// Extends `phi` and `psi` and runs `iterations` pair-shrinking steps from
/// `I_0 = J_0 = [-1; 2]`.
pub fn refine_sequence(
    phi: &SharedPath,
    psi: &SharedPath,
    iterations: u32,
    options: &RefineOptions,
) -> Result<Certificate, RefineError> {
    let f = extend(phi.clone(), Side::Lower)?;
    let g = extend(psi.clone(), Side::Upper)?;
    let domain = Interval::extended_domain();
    if options.verify_base_parity {
        let parity = parity_at_precision(&f, &g, &domain, &domain, BASE_PARITY_PRECISION)?;
        if parity != Parity::Odd {
            return Err(RefineError::BaseParity(parity));
        }
    }
    let mut records = vec![RefinementRecord {
        m: 0,
        i: domain.clone(),
        j: domain,
    }];
    for m in 1..=iterations {
        let prev = records.last().unwrap();
        let (i, j) = shrink_pair(&f, &g, &prev.i, &prev.j, m, options.effort)?;
        records.push(RefinementRecord { m, i, j });
    }
    Ok(Certificate {
        records,
        base_parity_verified: options.verify_base_parity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Parameters sampled per interval (at least 2: both ends).
    pub samples: usize,
    pub effort: u32,
    /// Recompute the parity of every record.
    pub check_parity: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 65,
            effort: 64,
            check_parity: true,
        }
    }
}

fn samples(interval: &Interval, count: usize) -> Vec<Rational> {
    let count = count.max(2);
    let steps = int(count as i64 - 1);
    (0..count)
        .map(|k| interval.lo() + interval.len() * int(k as i64) / &steps)
        .collect()
}

/// Checks `from(S) ⊆ U(to(T), radius)` at sampled parameters of `S`. Each
/// sample is accepted only if an upper bound on its distance is below the
/// radius.
fn check_neighbourhood(
    from: &dyn PathOracle,
    s: &Interval,
    to: &dyn PathOracle,
    t: &Interval,
    radius: &Rational,
    precision: u32,
    count: usize,
) -> Result<(), String> {
    let q = n_approximation(to, t, precision).map_err(|e| e.to_string())?;
    let index = q.index();
    // Sample error 2^-p and path deviation 5 * 2^-p come off the radius.
    let reach = radius - eps(precision) * int(6);
    if reach <= Rational::from_integer(0.into()) {
        return Err(format!(
            "precision {precision} too coarse for radius {radius}"
        ));
    }
    let bound = &reach * &reach;
    for param in samples(s, count) {
        let x = from.eval_approx(&param, precision);
        if !index.point_within_sq_dist(&x, &bound) {
            return Err(format!(
                "sample at parameter {param} of {s} is not within {radius} of the image over {t}"
            ));
        }
    }
    Ok(())
}

/// Re-checks a certificate for `phi`, `psi`: base record, nesting, odd
/// parity of every record, and the neighbourhood chain
/// `f(I_m) ⊆ U(g(J_{m-1}), 2^-(m-1))`, `g(J_m) ⊆ U(f(I_m), 2^-m)` by sampling.
pub fn verify_certificate(
    cert: &Certificate,
    phi: &SharedPath,
    psi: &SharedPath,
    options: &VerifyOptions,
) -> Result<(), RefineError> {
    let f = extend(phi.clone(), Side::Lower)?;
    let g = extend(psi.clone(), Side::Upper)?;
    let fail = |msg: String| Err(RefineError::Verification(msg));
    let Some(first) = cert.records.first() else {
        return fail("no records".into());
    };
    let domain = Interval::extended_domain();
    if first.m != 0 || first.i != domain || first.j != domain {
        return fail("first record is not the full extended domain".into());
    }
    for w in cert.records.windows(2) {
        let (prev, cur) = (&w[0], &w[1]);
        if cur.m != prev.m + 1 {
            return fail(format!("record {} follows record {}", cur.m, prev.m));
        }
        if !prev.i.contains_interval(&cur.i) || !prev.j.contains_interval(&cur.j) {
            return fail(format!("record {} is not nested in its predecessor", cur.m));
        }
        let precision = cur.m + 8;
        check_neighbourhood(
            &f,
            &cur.i,
            &g,
            &prev.j,
            &prev.radius(),
            precision,
            options.samples,
        )
        .or_else(fail)?;
        check_neighbourhood(
            &g,
            &cur.j,
            &f,
            &cur.i,
            &cur.radius(),
            precision,
            options.samples,
        )
        .or_else(fail)?;
    }
    if options.check_parity {
        for r in &cert.records {
            if function_parity(&f, &g, &r.i, &r.j, options.effort)? != Parity::Odd {
                return fail(format!("record {} has even parity", r.m));
            }
        }
    }
    Ok(())
}
