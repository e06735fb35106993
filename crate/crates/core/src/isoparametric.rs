//! Closed-form principal-curvature families in round spheres and the root
//! finding that locates their critical parameters.
//!
//! The one-parameter family `M_t` in the (2n+1)-sphere has spectrum
//!
//! ```text
//! k1 = (1 + sin 2t)/cos 2t   (mult 1)
//! k2 = (-1 + sin 2t)/cos 2t  (mult 1)
//! k3 = tan t                 (mult n-1)
//! k4 = -cot t                (mult n-1)
//! ```
//!
//! for t in (0, pi/4), with the algebraic identity k1*k2 = -1.  The product
//! spheres S^m x S^n in S^(m+n+1) have the two-value spectrum below.

use crate::error::{Error, Result};
use crate::extrinsic::{
    pi_residual_spaceform, psi_residual_spaceform, s_residual_einstein, PrincipalSpectrum,
};
use crate::rootfind::{bisect, scan_sign_changes, Bracket};
use std::f64::consts::{FRAC_PI_4, PI};

/// Margin used to keep the root scan away from the cot singularity at 0 and
/// the cos 2t pole at pi/4.
const SCAN_MARGIN: f64 = 1e-6;
/// Uniform samples used to isolate sign changes on (0, pi/4).
const SCAN_SAMPLES: usize = 10_000;

/// Squared-norm densities `|alpha|^2` realized by the classical
/// isoparametric minimal hypersurfaces of the n-sphere, as multiples of
/// (n-1).  Recorded for reference only; nothing here computes them.
pub const ISOPARAMETRIC_MINIMAL_DENSITY_FACTORS: [f64; 5] = [0.0, 1.0, 2.0, 3.0, 5.0];

/// The functional whose criticality residual is scanned for roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functional {
    /// L2-norm of the second fundamental form.
    Pi,
    /// L2-norm of the mean curvature vector.
    Psi,
    /// Their difference.
    S,
    /// Roots of the mean curvature itself.
    Minimal,
}

impl Functional {
    pub fn name(self) -> &'static str {
        match self {
            Functional::Pi => "pi",
            Functional::Psi => "psi",
            Functional::S => "s",
            Functional::Minimal => "minimal",
        }
    }
}

impl std::str::FromStr for Functional {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pi" => Ok(Functional::Pi),
            "psi" => Ok(Functional::Psi),
            "s" => Ok(Functional::S),
            "minimal" | "h" => Ok(Functional::Minimal),
            other => Err(Error::InvalidParameter(format!(
                "unknown functional '{other}' (expected pi, psi, s or minimal)"
            ))),
        }
    }
}

/// The isoparametric hypersurface family `M_t^{2n}` in the (2n+1)-sphere.
#[derive(Debug, Clone, Copy)]
pub struct NomizuFamily {
    pub n: u32,
}

impl NomizuFamily {
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        Ok(Self { n })
    }

    /// Spectrum at parameter `t`; for n = 1 the multiplicity-(n-1) entries
    /// are omitted.
    pub fn spectrum(&self, t: f64) -> Result<PrincipalSpectrum> {
        if !(t > 0.0 && t < FRAC_PI_4) {
            return Err(Error::AngleOutOfRange { t });
        }
        let (s2t, c2t) = (2.0 * t).sin_cos();
        let k1 = (1.0 + s2t) / c2t;
        let k2 = (-1.0 + s2t) / c2t;
        let mut entries = vec![(k1, 1), (k2, 1)];
        if self.n > 1 {
            entries.push((t.tan(), self.n - 1));
            entries.push((-1.0 / t.tan(), self.n - 1));
        }
        PrincipalSpectrum::new(entries)
    }

    /// Residual of the named functional at parameter `t` (unit sphere
    /// ambient, so every normal sectional curvature is 1).
    pub fn residual(&self, functional: Functional, t: f64) -> Result<f64> {
        let spec = self.spectrum(t)?;
        Ok(match functional {
            Functional::Pi => pi_residual_spaceform(&spec, 1.0),
            Functional::Psi => psi_residual_spaceform(&spec, 1.0),
            Functional::S => {
                let secs = vec![1.0; spec.entries().len()];
                s_residual_einstein(&spec, &secs).expect("lengths match")
            }
            Functional::Minimal => spec.mean_curvature(),
        })
    }

    /// Critical value per unit volume reported alongside a root.
    fn density(&self, functional: Functional, t: f64) -> Result<f64> {
        let spec = self.spectrum(t)?;
        let a = spec.alpha_norm_sq();
        let h = spec.mean_curvature();
        Ok(match functional {
            Functional::Pi => a,
            Functional::Psi => h * h,
            Functional::S => a - h * h,
            Functional::Minimal => 0.0,
        })
    }
}

/// A located root of a criticality residual on (0, pi/4).
#[derive(Debug, Clone)]
pub struct CriticalRoot {
    pub n: u32,
    pub functional: Functional,
    /// Root parameter in radians.
    pub t: f64,
    /// Critical value per unit volume at the root.
    pub density: f64,
    /// Residual of the functional at `t` (should be ~0).
    pub residual: f64,
    /// Sign-change bracket from the isolating scan.
    pub bracket: Bracket,
}

/// All roots of the chosen residual in (0, pi/4), isolated by a uniform
/// sign-change scan and refined by bisection to floating-point resolution.
///
/// An empty list is a valid outcome (e.g. the S functional at n = 1).
pub fn find_critical(n: u32, functional: Functional) -> Result<Vec<CriticalRoot>> {
    find_critical_with_samples(n, functional, SCAN_SAMPLES)
}

/// Same as [`find_critical`] with an explicit scan resolution.
pub fn find_critical_with_samples(
    n: u32,
    functional: Functional,
    samples: usize,
) -> Result<Vec<CriticalRoot>> {
    let family = NomizuFamily::new(n)?;
    let f = |t: f64| family.residual(functional, t).unwrap_or(f64::NAN);
    let brackets = scan_sign_changes(f, SCAN_MARGIN, FRAC_PI_4 - SCAN_MARGIN, samples);
    let mut roots = Vec::with_capacity(brackets.len());
    for b in brackets {
        let t = bisect(f, b);
        roots.push(CriticalRoot {
            n,
            functional,
            t,
            density: family.density(functional, t)?,
            residual: f(t),
            bracket: b,
        });
    }
    Ok(roots)
}

/// The minimal product `S^m x S^n` of radii sqrt(m/(m+n)), sqrt(n/(m+n))
/// inside the (m+n+1)-sphere.
#[derive(Debug, Clone, Copy)]
pub struct CliffordProduct {
    pub m: u32,
    pub n: u32,
}

impl CliffordProduct {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidParameter("m, n must be >= 1".into()));
        }
        Ok(Self { m, n })
    }

    /// Spectrum `{ sqrt(m/n) with multiplicity n, -sqrt(n/m) with
    /// multiplicity m }`.
    ///
    /// The multiplicity assignment is the one forced by minimality of the
    /// product: it makes h = 0 identically.
    pub fn spectrum(&self) -> PrincipalSpectrum {
        let (m, n) = (f64::from(self.m), f64::from(self.n));
        PrincipalSpectrum::new(vec![((m / n).sqrt(), self.n), (-(n / m).sqrt(), self.m)])
            .expect("positive multiplicities")
    }

    /// Pi-residual of the product in the unit sphere; closed form
    /// `2(m^2 - n^2)/sqrt(mn)`, zero exactly when m = n.
    pub fn pi_residual(&self) -> f64 {
        pi_residual_spaceform(&self.spectrum(), 1.0)
    }

    /// The closed-form value of [`Self::pi_residual`].
    pub fn pi_residual_closed_form(&self) -> f64 {
        let (m, n) = (f64::from(self.m), f64::from(self.n));
        2.0 * (m * m - n * n) / (m * n).sqrt()
    }
}

/// Convenience free functions mirroring the family methods.
pub fn nomizu_spectrum(n: u32, t: f64) -> Result<PrincipalSpectrum> {
    NomizuFamily::new(n)?.spectrum(t)
}

pub fn clifford_spectrum(m: u32, n: u32) -> Result<PrincipalSpectrum> {
    Ok(CliffordProduct::new(m, n)?.spectrum())
}

pub fn clifford_pi_residual(m: u32, n: u32) -> Result<f64> {
    Ok(CliffordProduct::new(m, n)?.pi_residual())
}

/// pi/8, the parameter of the austere member of the n = 2 family.
pub const AUSTERE_T: f64 = PI / 8.0;
