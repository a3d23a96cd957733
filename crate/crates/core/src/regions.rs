//! Zero-free regions, membership with signed margins, and a harness that
//! checks root sets against claims.
//!
//! Margins are positive inside a region and negative outside. For disks,
//! exteriors, half-planes, sectors and `B` the margin is the Euclidean
//! distance to the boundary; for the cardioid it is `1 − |w − 1|` with
//! `w = √(−z)`.

use crate::error::{Error, Result};
use crate::poly::{certify_real_rooted, find_roots, ExactPoly, RealRootCertificate, RootOptions};
use num::complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Default width of the band around a boundary treated as "on it".
pub const BOUNDARY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// `|z| < r`
    Disk { r: f64 },
    /// `|z| > r`
    Exterior { r: f64 },
    /// `|arg z| < θ`, with `arg ∈ (−π, π]`
    Sector { theta: f64 },
    /// `Re z > 0`
    HalfPlane,
    /// `{−(1−α)² : |α| ≤ 1}`, closed
    Cardioid,
    /// `|z + 1| > 1`
    B,
    /// Same set as `B`.
    T1,
}

impl Region {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Region::Disk { r } | Region::Exterior { r } if !(r > 0.0 && r.is_finite()) => {
                Err(Error::Invalid(format!("radius must be positive, got {r}")))
            }
            Region::Sector { theta } if !(0.0..=PI).contains(&theta) => Err(Error::Invalid(
                format!("sector angle must be in [0, π], got {theta}"),
            )),
            _ => Ok(()),
        }
    }

    fn closed(&self) -> bool {
        matches!(self, Region::Cardioid)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Disk { r } => write!(f, "disk:{r}"),
            Region::Exterior { r } => write!(f, "exterior:{r}"),
            Region::Sector { theta } => write!(f, "sector:{theta}"),
            Region::HalfPlane => f.write_str("half-plane"),
            Region::Cardioid => f.write_str("cardioid"),
            Region::B => f.write_str("B"),
            Region::T1 => f.write_str("T1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Membership {
    pub inside: bool,
    pub margin: f64,
}

/// Membership in the cardioid `{−(1−α)² : |α| ≤ 1}`.
pub fn in_cardioid(z: Complex64) -> Membership {
    let w = (-z).sqrt();
    let margin = 1.0 - (w - 1.0).norm();
    Membership {
        inside: margin >= 0.0,
        margin,
    }
}

/// Membership in `{−(1−γ)^k : |γ| ≤ 1}`: some k-th root `w` of `−z`
/// has `|1 − w| ≤ 1`. The margin is the best `1 − |1 − w|` over roots.
pub fn in_power_region(z: Complex64, k: u32) -> Membership {
    let k = k.max(1);
    let (r, phi) = (-z).to_polar();
    let margin = (0..k)
        .map(|j| {
            let w = Complex64::from_polar(
                r.powf(1.0 / k as f64),
                (phi + 2.0 * PI * j as f64) / k as f64,
            );
            1.0 - (w - 1.0).norm()
        })
        .fold(f64::NEG_INFINITY, f64::max);
    Membership {
        inside: margin >= 0.0,
        margin,
    }
}

fn distance_to_ray(z: Complex64, angle: f64) -> f64 {
    let dir = Complex64::from_polar(1.0, angle);
    let along = z.re * dir.re + z.im * dir.im;
    if along <= 0.0 {
        z.norm()
    } else {
        (z - dir * along).norm()
    }
}

pub fn region_contains(region: &Region, z: Complex64) -> Membership {
    let margin = match *region {
        Region::Disk { r } => r - z.norm(),
        Region::Exterior { r } => z.norm() - r,
        Region::HalfPlane => z.re,
        Region::B | Region::T1 => (z + 1.0).norm() - 1.0,
        Region::Cardioid => return in_cardioid(z),
        Region::Sector { theta } => {
            let d = distance_to_ray(z, theta).min(distance_to_ray(z, -theta));
            if z.arg().abs() < theta {
                d
            } else {
                -d
            }
        }
    };
    Membership {
        inside: if region.closed() {
            margin >= 0.0
        } else {
            margin > 0.0
        },
        margin,
    }
}

/// What a root set is claimed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    /// Every root lies in the region (closed, up to the tolerance band).
    Inside(Region),
    /// No root lies in the region: the polynomial is zero-free there.
    Outside(Region),
    /// Every root is real and negative, certified exactly.
    RealNegative,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Inside(r) => write!(f, "roots inside {r}"),
            Claim::Outside(r) => write!(f, "zero-free on {r}"),
            Claim::RealNegative => f.write_str("real-negative"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Ok,
    Boundary,
    Violation,
}

impl Verdict {
    fn from_margin(m: f64, tol: f64) -> Self {
        if m > tol {
            Verdict::Ok
        } else if m >= -tol {
            Verdict::Boundary
        } else {
            Verdict::Violation
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Boundary => "boundary",
            Verdict::Violation => "violation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootVerdict {
    pub re: f64,
    pub im: f64,
    /// Positive when the root satisfies the claim.
    pub margin: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub pass: bool,
    /// The root finder failed, so nothing was checked.
    pub inconclusive: bool,
    pub tol: f64,
    pub min_margin: Option<f64>,
    pub boundary: usize,
    pub violations: usize,
    pub roots: Vec<RootVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RealRootCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    /// One `re,im,margin,verdict` line per root, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,margin,verdict\n");
        for r in &self.roots {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.re,
                r.im,
                r.margin,
                r.verdict.as_str()
            ));
        }
        out
    }
}

/// Check every root of `p` against `claim`. A root counts as passing when
/// its claim margin is above `−tol`; roots within `tol` of the boundary
/// are reported as such.
pub fn verify_roots(p: &ExactPoly, claim: &Claim, tol: f64) -> Result<VerificationReport> {
    if let Claim::Inside(r) | Claim::Outside(r) = claim {
        r.validate()?;
    }
    let mut report = VerificationReport {
        claim: claim.to_string(),
        pass: false,
        inconclusive: false,
        tol,
        min_margin: None,
        boundary: 0,
        violations: 0,
        roots: Vec::new(),
        certificate: None,
        error: None,
    };
    let roots = match find_roots(p, &RootOptions::default()) {
        Ok(r) => r,
        Err(e @ Error::NoConvergence { .. }) => {
            report.inconclusive = true;
            report.error = Some(e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let certificate = match claim {
        Claim::RealNegative => Some(certify_real_rooted(p)?),
        _ => None,
    };
    for z in &roots.roots {
        let margin = match claim {
            Claim::Inside(r) => region_contains(r, *z).margin,
            Claim::Outside(r) => -region_contains(r, *z).margin,
            Claim::RealNegative => -z.re,
        };
        let verdict = Verdict::from_margin(margin, tol);
        match verdict {
            Verdict::Boundary => report.boundary += 1,
            Verdict::Violation => report.violations += 1,
            Verdict::Ok => {}
        }
        report.min_margin = Some(report.min_margin.map_or(margin, |m: f64| m.min(margin)));
        report.roots.push(RootVerdict {
            re: z.re,
            im: z.im,
            margin,
            verdict,
        });
    }
    report.pass = match &certificate {
        // the exact certificate decides; the margins are informational
        Some(c) => c.real_negative(),
        None => report.violations == 0,
    };
    report.certificate = certificate;
    Ok(report)
}

/// Boundary of the cardioid, `−(1 − e^{iθ})²`, at `samples` equally
/// spaced angles in `[0, 2π)`.
pub fn cardioid_boundary(samples: usize) -> Vec<(f64, Complex64)> {
    (0..samples)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / samples as f64;
            let a = Complex64::from_polar(1.0, theta);
            (theta, -(Complex64::new(1.0, 0.0) - a).powu(2))
        })
        .collect()
}

pub fn cardioid_boundary_csv(samples: usize) -> String {
    let mut out = String::from("theta,re,im\n");
    for (t, z) in cardioid_boundary(samples) {
        out.push_str(&format!("{t},{},{}\n", z.re, z.im));
    }
    out
}

/// A uniform point of the closed disk `|α + 1| ≤ 1`, the complement of `B`.
pub fn sample_outside_b<R: Rng>(rng: &mut R) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    let phi = rng.gen_range(0.0..2.0 * PI);
    Complex64::from_polar(r, phi) - 1.0
}

/// Empirical look at the excluded set of `T_k`: the products
/// `(−1)^{k+1} α_1⋯α_k` with every `α_i` outside `B`. Only `k = 2` has a
/// proven closed form (the cardioid); for other `k` this just counts how
/// many sampled products land in `{−(1−γ)^k : |γ| ≤ 1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalTk {
    pub k: u32,
    pub samples: usize,
    pub in_power_form: usize,
    pub max_modulus: f64,
    pub worst_margin: f64,
    pub label: &'static str,
}

pub fn sample_tk<R: Rng>(k: u32, samples: usize, rng: &mut R) -> EmpiricalTk {
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    let mut out = EmpiricalTk {
        k,
        samples,
        in_power_form: 0,
        max_modulus: 0.0,
        worst_margin: f64::INFINITY,
        label: "empirical",
    };
    for _ in 0..samples {
        let z = (0..k).fold(Complex64::new(sign, 0.0), |acc, _| {
            acc * sample_outside_b(rng)
        });
        let m = in_power_region(z, k);
        if m.margin >= -BOUNDARY_TOL {
            out.in_power_form += 1;
        }
        out.worst_margin = out.worst_margin.min(m.margin);
        out.max_modulus = out.max_modulus.max(z.norm());
    }
    out
}
