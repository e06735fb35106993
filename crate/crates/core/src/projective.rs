//! Fubini-Study curvature on the tangent-space model, invariants of
//! algebraic curves in the projective plane, bounds for minimizing
//! sequences, bubble-point inequalities, desingularization-area quadrature,
//! and the diagonal constants in the product of two round 2-spheres.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const ORTHONORMAL_TOL: f64 = 1e-9;

/// Applies the standard complex structure on R^(2n): on each coordinate pair
/// (a, b) -> (-b, a).
pub fn j_apply(v: &[f64]) -> Vec<f64> {
    assert!(v.len() % 2 == 0, "J needs an even-dimensional vector");
    let mut out = vec![0.0; v.len()];
    for i in (0..v.len()).step_by(2) {
        out[i] = -v[i + 1];
        out[i + 1] = v[i];
    }
    out
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An orthonormal tangent pair at a point of complex projective space,
/// modeled on R^(2n) with the standard complex structure.
#[derive(Debug, Clone)]
pub struct TangentPairFS {
    u: Vec<f64>,
    v: Vec<f64>,
}

impl TangentPairFS {
    pub fn new(u: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if u.len() != v.len() || u.len() < 4 || u.len() % 2 != 0 {
            return Err(Error::InvalidParameter(
                "tangent vectors must share an even dimension >= 4".into(),
            ));
        }
        let (nu, nv, uv) = (dot(&u, &u), dot(&v, &v), dot(&u, &v));
        if (nu - 1.0).abs() > ORTHONORMAL_TOL
            || (nv - 1.0).abs() > ORTHONORMAL_TOL
            || uv.abs() > ORTHONORMAL_TOL
        {
            return Err(Error::NonOrthonormal { nu, nv, uv });
        }
        Ok(Self { u, v })
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }
    pub fn v(&self) -> &[f64] {
        &self.v
    }
}

/// Sectional curvature K(u,v) = 1 + 3 <u, Jv>^2 of the Fubini-Study metric;
/// pinched in [1, 4].
pub fn fs_sectional(pair: &TangentPairFS) -> f64 {
    let jv = j_apply(&pair.v);
    1.0 + 3.0 * dot(&pair.u, &jv).powi(2)
}

/// Curvature vector R(v,u)u = cos(t) v0 + 4 sin(t) Ju for the decomposition
/// v = cos(t) v0 + sin(t) Ju with v0 orthogonal to u and Ju.
///
/// The angle must be consistent with the pair; the decomposition is checked
/// and rebuilt from it.
pub fn fs_curvature_vector(pair: &TangentPairFS, t: f64) -> Result<Vec<f64>> {
    let ju = j_apply(&pair.u);
    let (st, ct) = t.sin_cos();
    let s_from_pair = dot(&ju, &pair.v);
    if (s_from_pair - st).abs() > 1e-8 {
        return Err(Error::DecompositionFailure(format!(
            "<Ju, v> = {s_from_pair} but sin(t) = {st}"
        )));
    }
    let residue: Vec<f64> = pair
        .v
        .iter()
        .zip(&ju)
        .map(|(vi, jui)| vi - st * jui)
        .collect();
    let rn = dot(&residue, &residue).sqrt();
    if (rn - ct.abs()).abs() > 1e-8 {
        return Err(Error::DecompositionFailure(format!(
            "|v - sin(t) Ju| = {rn} but |cos(t)| = {}",
            ct.abs()
        )));
    }
    let v0: Vec<f64> = if rn < 1e-12 {
        vec![0.0; pair.u.len()] // v = +-Ju; the v0 term drops out
    } else {
        let v0: Vec<f64> = residue.iter().map(|x| x / ct).collect();
        if dot(&v0, &pair.u).abs() > 1e-8 || dot(&v0, &ju).abs() > 1e-8 {
            return Err(Error::DecompositionFailure(
                "v0 not orthogonal to {u, Ju}".into(),
            ));
        }
        v0
    };
    Ok(v0
        .iter()
        .zip(&ju)
        .map(|(v0i, jui)| ct * v0i + 4.0 * st * jui)
        .collect())
}

/// Closed-form invariants of a smooth degree-d curve in the projective
/// plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveInvariants {
    pub d: u32,
    /// Total squared norm of the second fundamental form, 4 pi d(d-1).
    pub pi_value: f64,
    /// Total extrinsic scalar curvature, 8 pi d.
    pub theta_value: f64,
    /// Genus (d-1)(d-2)/2.
    pub genus: u64,
    /// Fubini-Study area, pi d.
    pub area: f64,
    /// First Chern number (3-d)d.
    pub c1_dot: i64,
}

impl CurveInvariants {
    /// Gauss-Bonnet closure in exact integer arithmetic:
    /// pi_value = theta_value - 4 pi (2 - 2 genus), as multiples of pi.
    pub fn gauss_bonnet_closure_exact(&self) -> bool {
        let d = i64::from(self.d);
        let chi = 2 - 2 * self.genus as i64;
        4 * d * (d - 1) == 8 * d - 4 * chi
    }
}

/// Invariants of the degree-d curve; d >= 1.
pub fn curve_invariants(d: u32) -> Result<CurveInvariants> {
    if d < 1 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    let df = f64::from(d);
    let di = i64::from(d);
    Ok(CurveInvariants {
        d,
        pi_value: 4.0 * PI * df * (df - 1.0),
        theta_value: 8.0 * PI * df,
        genus: ((di - 1) * (di - 2) / 2) as u64,
        area: PI * df,
        c1_dot: (3 - di) * di,
    })
}

/// |alpha|^2 of a complex m-dimensional submanifold from its scalar
/// curvature: 4m(m+1) - s_g.
pub fn intrinsic_alpha_norm(m: u32, s_g: f64) -> f64 {
    let mf = f64::from(m);
    4.0 * mf * (mf + 1.0) - s_g
}

/// |alpha|^2 of the totally real minimal flat torus in the projective
/// plane.  The torus is real, so the complex-submanifold formula does not
/// apply; the constant is recorded directly.
pub const REAL_FLAT_TORUS_ALPHA_NORM_SQ: f64 = 2.0;

/// Smallest-genus test: does genus g satisfy g >= (d-1)(d-2)/2?
pub fn genus_lower_bound(d: u32, g: u64) -> bool {
    let di = i64::from(d);
    g as i64 >= (di - 1) * (di - 2) / 2
}

/// Genus and area bounds available along a minimizing sequence for the
/// degree-d class: genus <= (d-2)(d-1)/2 + 3d/4 and pi d <= area <=
/// 2 pi (d(d-1) + 2).
pub fn minimizing_bounds(d: u32) -> (f64, f64, f64) {
    let df = f64::from(d);
    (
        (df - 2.0) * (df - 1.0) / 2.0 + 0.75 * df,
        PI * df,
        2.0 * PI * (df * (df - 1.0) + 2.0),
    )
}

/// Area and energy concentrations at a candidate bubble point, together
/// with the class bounds they are tested against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BubbleData {
    /// Area concentration A_p.
    pub a_p: f64,
    /// Energy concentration E_p.
    pub e_p: f64,
    /// Area bound of the class.
    pub c1: f64,
    /// Energy bound of the class.
    pub c2: f64,
}

/// The concentration inequality A_p (64 A_p + E_p) >= 8 pi^2 that every
/// bubble point must satisfy.
pub fn bubble_inequality(b: &BubbleData) -> bool {
    b.a_p * (64.0 * b.a_p + b.e_p) >= 8.0 * PI * PI
}

/// Upper bound floor( sqrt(64 C1^2 + C1 C2) / (2 sqrt(2) pi) ) on the number
/// of bubble points carried by a minimizing sequence with area bound C1 and
/// energy bound C2.
pub fn max_bubbles(c1: f64, c2: f64) -> u64 {
    assert!(c1 >= 0.0 && c2 >= 0.0);
    ((64.0 * c1 * c1 + c1 * c2).sqrt() / (2.0 * 2.0f64.sqrt() * PI)).floor() as u64
}

/// Induced Fubini-Study area density on the sheet z1 z2 = eps, as a function
/// of t = |z|^2, derived by pulling the ambient Kaehler form back through
/// z -> (z, eps/z):
///
/// ```text
/// rho_eps(t) = (1 + 4 eps^2/t + eps^2/t^2) / (1 + t + eps^2/t)^2 .
/// ```
///
/// At eps = 0 this reduces to the line density 1/(1+t)^2.
pub fn sheet_density(t: f64, eps: f64) -> f64 {
    if eps == 0.0 {
        return (1.0 + t).powi(-2);
    }
    let e2 = eps * eps;
    (1.0 + 4.0 * e2 / t + e2 / (t * t)) / (1.0 + t + e2 / t).powi(2)
}

/// Adaptive Simpson quadrature on [a, b].
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    fn simpson(f: &impl Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), fm)
    }
    fn rec(
        f: &impl Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let (left, flm) = simpson(f, a, fa, m, fm);
        let (right, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::QuadratureNonConvergence(format!(
                "recursion limit reached on [{a}, {b}]"
            )));
        }
        Ok(rec(f, a, fa, m, fm, left, flm, 0.5 * tol, depth - 1)?
            + rec(f, m, fm, b, fb, right, frm, 0.5 * tol, depth - 1)?)
    }
    let (fa, fb) = (f(a), f(b));
    let (whole, fm) = simpson(f, a, fa, b, fb);
    rec(f, a, fa, b, fb, whole, fm, tol, 40)
}

/// Two-dimensional quadrature of the sheet area in polar coordinates
/// (radius integrated adaptively, angle by composite Simpson).  The
/// integrand is angle-independent, so the angular rule converges
/// immediately; it is retained so the routine genuinely integrates over the
/// parametrizing disk.
fn sheet_area_quadrature(rho_lo: f64, rho_hi: f64, eps: f64, tol: f64) -> Result<f64> {
    let radial = |rho: f64| sheet_density(rho * rho, eps) * rho;
    // Composite Simpson in the angle with 16 panels.
    let panels = 16;
    let h = 2.0 * PI / panels as f64;
    let mut angular_weight = 0.0;
    for i in 0..=panels {
        let w = if i == 0 || i == panels {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        angular_weight += w * h / 3.0;
    }
    let radial_integral = adaptive_simpson(&radial, rho_lo, rho_hi, tol / angular_weight)?;
    Ok(angular_weight * radial_integral)
}

/// Desingularization area comparison.
///
/// `quadrature`: 8 x the numerically integrated Fubini-Study area of the
/// locus z1 z2 = eps inside the ball |z| <= r (two full discs at eps = 0, a
/// single annular sheet for eps > 0).
///
/// `closed_form`: the printed expression for the same quantity, returned
/// unmodified so the discrepancy with the quadrature can be inspected:
/// `8 pi 2r^2/(2+r^2)` at eps = 0, `8 pi + 8 pi r^2/(1+r^2)` for eps > 0.
pub fn desing_area(r: f64, eps: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) || eps < 0.0 {
        return Err(Error::InvalidParameter(
            "desing_area needs r > 0 and eps >= 0".into(),
        ));
    }
    let closed_form = if eps == 0.0 {
        8.0 * PI * 2.0 * r * r / (2.0 + r * r)
    } else {
        8.0 * PI + 8.0 * PI * r * r / (1.0 + r * r)
    };
    let tol = 1e-8;
    let quadrature = if eps == 0.0 {
        // Two copies of the disc |z| <= r on the line z2 = 0.
        2.0 * sheet_area_quadrature(0.0, r, 0.0, tol)?
    } else {
        if 2.0 * eps > r * r {
            return Err(Error::InvalidParameter(format!(
                "sheet z1 z2 = {eps} misses the ball of radius {r}"
            )));
        }
        // |z1|^2 + |z2|^2 <= r^2 on the sheet reads t + eps^2/t <= r^2.
        let disc = (r.powi(4) - 4.0 * eps * eps).sqrt();
        let t_lo = 0.5 * (r * r - disc);
        let t_hi = 0.5 * (r * r + disc);
        sheet_area_quadrature(t_lo.sqrt(), t_hi.sqrt(), eps, tol)?
    };
    Ok((8.0 * quadrature, closed_form))
}

/// Fixed-panel composite-Simpson version of the eps = 0 disc area, used to
/// measure the convergence order of the quadrature.
pub fn disc_area_fixed_panels(r: f64, panels: usize) -> f64 {
    assert!(panels >= 2 && panels % 2 == 0);
    let f = |rho: f64| sheet_density(rho * rho, 0.0) * rho;
    let h = r / panels as f64;
    let mut s = f(0.0) + f(r);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(h * i as f64);
    }
    2.0 * PI * s * h / 3.0
}

/// Exact Fubini-Study area of one affine disc of radius r on a line:
/// pi r^2 / (1 + r^2).
pub fn disc_area_exact(r: f64) -> f64 {
    PI * r * r / (1.0 + r * r)
}

/// Constants attached to the diagonal sphere in the product of two round
/// 2-spheres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalConstants {
    pub volume: f64,
    pub ambient_sectional_on_diagonal: f64,
    pub scalar_curvature: f64,
    pub euler_characteristic: i64,
}

impl DiagonalConstants {
    /// Gauss-Bonnet closure 2 K V - 4 pi chi for the totally geodesic
    /// diagonal; exactly zero.
    pub fn closure(&self) -> f64 {
        2.0 * self.ambient_sectional_on_diagonal * self.volume
            - 4.0 * PI * self.euler_characteristic as f64
    }
}

pub fn diagonal_constants() -> DiagonalConstants {
    DiagonalConstants {
        volume: 8.0 * PI,
        ambient_sectional_on_diagonal: 0.5,
        scalar_curvature: 1.0,
        euler_characteristic: 2,
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Sectional curvature |X1 ^ Y1|^2 + |X2 ^ Y2|^2 of the product of two unit
/// 2-spheres for an orthonormal pair X = (X1, X2), Y = (Y1, Y2) given in the
/// factor tangent planes.
pub fn product_sphere_sectional(x: [[f64; 3]; 2], y: [[f64; 3]; 2]) -> f64 {
    let w1 = cross(x[0], y[0]);
    let w2 = cross(x[1], y[1]);
    w1.iter().map(|c| c * c).sum::<f64>() + w2.iter().map(|c| c * c).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(v: Vec<f64>) -> Vec<f64> {
        let n = dot(&v, &v).sqrt();
        v.into_iter().map(|x| x / n).collect()
    }

    fn random_orthonormal_pair(rng: &mut impl Rng, dim: usize) -> TangentPairFS {
        loop {
            let u: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let u = unit(u);
            let mut v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let uv = dot(&u, &v);
            for (vi, ui) in v.iter_mut().zip(&u) {
                *vi -= uv * ui;
            }
            if dot(&v, &v) > 1e-6 {
                return TangentPairFS::new(u, unit(v)).unwrap();
            }
        }
    }

    #[test]
    fn holomorphic_sections_attain_the_maximum() {
        let u = vec![1.0, 0.0, 0.0, 0.0];
        let ju = j_apply(&u);
        let pair = TangentPairFS::new(u, ju).unwrap();
        assert_abs_diff_eq!(fs_sectional(&pair), 4.0, epsilon = 1e-15);
    }

    #[test]
    fn totally_real_sections_attain_the_minimum() {
        let u = vec![1.0, 0.0, 0.0, 0.0];
        let v = vec![0.0, 0.0, 1.0, 0.0]; // Jv orthogonal to u
        let pair = TangentPairFS::new(u, v).unwrap();
        assert_abs_diff_eq!(fs_sectional(&pair), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_non_orthonormal_pairs() {
        assert!(TangentPairFS::new(vec![1.0, 0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(TangentPairFS::new(vec![2.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn sampled_sectional_values_stay_pinched() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20_000 {
            let dim = 2 * rng.gen_range(2..=4usize);
            let k = fs_sectional(&random_orthonormal_pair(&mut rng, dim));
            assert!((1.0 - 1e-12..=4.0 + 1e-12).contains(&k));
        }
    }

    #[test]
    fn curvature_vector_specializations() {
        let u = vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let ju = j_apply(&u);
        // t = pi/2: v = Ju, R = 4 Ju.
        let pair = TangentPairFS::new(u.clone(), ju.clone()).unwrap();
        let r = fs_curvature_vector(&pair, std::f64::consts::FRAC_PI_2).unwrap();
        for (ri, jui) in r.iter().zip(&ju) {
            assert_abs_diff_eq!(*ri, 4.0 * jui, epsilon = 1e-12);
        }
        // t = 0: v = v0, R = v0.
        let v0 = vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        let pair = TangentPairFS::new(u.clone(), v0.clone()).unwrap();
        let r = fs_curvature_vector(&pair, 0.0).unwrap();
        for (ri, vi) in r.iter().zip(&v0) {
            assert_abs_diff_eq!(*ri, *vi, epsilon = 1e-12);
        }
        // Wrong angle must be rejected.
        assert!(fs_curvature_vector(&pair, 0.3).is_err());
    }

    #[test]
    fn curvature_vector_reproduces_sectional() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..500 {
            let u = unit((0..8).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let ju = j_apply(&u);
            // Build v = cos t v0 + sin t Ju with a random admissible v0.
            let t = rng.gen_range(-1.5..1.5);
            let mut v0: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let a = dot(&v0, &u);
            let b = dot(&v0, &ju);
            for i in 0..8 {
                v0[i] -= a * u[i] + b * ju[i];
            }
            if dot(&v0, &v0) < 1e-6 {
                continue;
            }
            let v0 = unit(v0);
            let v: Vec<f64> = v0
                .iter()
                .zip(&ju)
                .map(|(v0i, jui)| t.cos() * v0i + t.sin() * jui)
                .collect();
            let pair = TangentPairFS::new(u, v.clone()).unwrap();
            let r = fs_curvature_vector(&pair, t).unwrap();
            let k = fs_sectional(&pair);
            assert_abs_diff_eq!(dot(&r, &v), k, epsilon = 1e-10);
            assert_abs_diff_eq!(
                k,
                t.cos().powi(2) + 4.0 * t.sin().powi(2),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn curve_invariants_published_values() {
        let c1 = curve_invariants(1).unwrap();
        assert_abs_diff_eq!(c1.pi_value, 0.0);
        assert_eq!(c1.genus, 0);
        assert_abs_diff_eq!(c1.theta_value, 8.0 * PI);
        assert_abs_diff_eq!(c1.area, PI);

        let c3 = curve_invariants(3).unwrap();
        assert_abs_diff_eq!(c3.pi_value, 24.0 * PI);
        assert_eq!(c3.genus, 1);
        assert_eq!(c3.c1_dot, 0);

        let c5 = curve_invariants(5).unwrap();
        assert_abs_diff_eq!(c5.pi_value, 80.0 * PI);
        assert_eq!(c5.genus, 6);

        assert!(curve_invariants(0).is_err());
    }

    #[test]
    fn gauss_bonnet_closure_holds_exactly() {
        for d in 1..=12 {
            assert!(curve_invariants(d).unwrap().gauss_bonnet_closure_exact());
        }
    }

    #[test]
    fn pi_value_second_difference_is_8pi() {
        for d in 2..=11u32 {
            let p = |d: u32| curve_invariants(d).unwrap().pi_value;
            assert_abs_diff_eq!(p(d + 1) - 2.0 * p(d) + p(d - 1), 8.0 * PI, epsilon = 1e-9);
        }
    }

    #[test]
    fn genus_bound_cases() {
        assert!(genus_lower_bound(3, 1)); // equality for the cubic
        assert!(!genus_lower_bound(4, 2)); // bound is 3
        assert!(genus_lower_bound(1, 0));
    }

    #[test]
    fn minimizing_bounds_cases() {
        let (g, alo, ahi) = minimizing_bounds(1);
        assert_abs_diff_eq!(g, 0.75);
        assert_abs_diff_eq!(alo, PI);
        assert_abs_diff_eq!(ahi, 4.0 * PI);
        let (g, alo, ahi) = minimizing_bounds(3);
        assert_abs_diff_eq!(g, 1.0 + 2.25);
        assert_abs_diff_eq!(alo, 3.0 * PI);
        assert_abs_diff_eq!(ahi, 16.0 * PI);
        assert_abs_diff_eq!(minimizing_bounds(2).1, 2.0 * PI);
    }

    #[test]
    fn bubble_inequality_cases() {
        let mk = |a, e| BubbleData {
            a_p: a,
            e_p: e,
            c1: 0.0,
            c2: 0.0,
        };
        assert!(bubble_inequality(&mk(PI, 0.0)));
        assert!(!bubble_inequality(&mk(0.1, 0.0)));
        assert!(!bubble_inequality(&mk(0.0, 1e9)));
    }

    #[test]
    fn max_bubbles_cases_and_monotonicity() {
        assert_eq!(max_bubbles(0.0, 123.0), 0);
        assert_eq!(max_bubbles(1.0, 0.0), 0); // 8/(2 sqrt2 pi) < 1
        let c1 = 2.0 * PI * (2.0 * 1.0 + 2.0); // area bound for d = 2
        assert!(max_bubbles(c1, 100.0) >= 1);
        let mut prev = 0;
        for i in 0..50 {
            let b = max_bubbles(i as f64, 10.0);
            assert!(b >= prev);
            prev = b;
        }
        let mut prev = 0;
        for i in 0..50 {
            let b = max_bubbles(10.0, 10.0 * i as f64);
            assert!(b >= prev);
            prev = b;
        }
    }

    #[test]
    fn disc_quadrature_matches_analytic_area() {
        for &r in &[0.5, 1.0, 2.0, 10.0] {
            let (quad, _) = desing_area(r, 0.0).unwrap();
            let exact = 16.0 * disc_area_exact(r);
            assert_abs_diff_eq!(quad, exact, epsilon = 1e-6 * exact.max(1.0));
        }
    }

    #[test]
    fn disc_quadrature_limit_is_16pi() {
        let (quad, _) = desing_area(100.0, 0.0).unwrap();
        assert!((quad - 16.0 * PI).abs() / (16.0 * PI) < 1e-3);
    }

    #[test]
    fn printed_closed_form_is_reported_verbatim() {
        let (_, cf) = desing_area(1.0, 0.0).unwrap();
        assert_abs_diff_eq!(cf, 16.0 * PI / 3.0, epsilon = 1e-12);
        let (_, cf) = desing_area(1.0, 0.01).unwrap();
        assert_abs_diff_eq!(cf, 8.0 * PI + 4.0 * PI, epsilon = 1e-12);
    }

    #[test]
    fn eps_sheet_area_approaches_two_disc_area() {
        // Lemma-style limit: the annular sheet area converges to the
        // two-disc area as eps -> 0.
        let r = 50.0;
        let (two_discs, _) = desing_area(r, 0.0).unwrap();
        let mut prev_gap = f64::INFINITY;
        for &eps in &[1e-2, 1e-3, 1e-4] {
            let (sheet, _) = desing_area(r, eps).unwrap();
            let gap = (sheet - two_discs).abs();
            assert!(gap < prev_gap);
            prev_gap = gap;
        }
        assert!(prev_gap < 1e-2);
    }

    #[test]
    fn quadrature_convergence_order_at_least_two() {
        let r = 1.0;
        let exact = disc_area_exact(r);
        let e1 = (disc_area_fixed_panels(r, 8) - exact).abs();
        let e2 = (disc_area_fixed_panels(r, 16) - exact).abs();
        let order = (e1 / e2).log2();
        assert!(order >= 2.0, "observed order {order}");
    }

    #[test]
    fn sheet_misses_ball_is_rejected() {
        assert!(desing_area(0.1, 1.0).is_err());
    }

    #[test]
    fn diagonal_closure_and_frames() {
        let c = diagonal_constants();
        assert_abs_diff_eq!(c.closure(), 0.0);
        assert_abs_diff_eq!(c.volume, 8.0 * PI);
        assert_abs_diff_eq!(c.scalar_curvature, 1.0);

        // Evenly split diagonal frame.
        let s = 0.5f64.sqrt();
        let x = [[s, 0.0, 0.0], [s, 0.0, 0.0]];
        let y = [[0.0, s, 0.0], [0.0, s, 0.0]];
        assert_abs_diff_eq!(product_sphere_sectional(x, y), 0.5, epsilon = 1e-15);

        // Horizontal sphere: K = 1 and Pi = 2 K (4 pi) - 8 pi = 0.
        let x = [[1.0, 0.0, 0.0], [0.0, 0.0, 0.0]];
        let y = [[0.0, 1.0, 0.0], [0.0, 0.0, 0.0]];
        let k = product_sphere_sectional(x, y);
        assert_abs_diff_eq!(k, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(2.0 * k * 4.0 * PI - 8.0 * PI, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn intrinsic_alpha_norm_cases() {
        assert_abs_diff_eq!(intrinsic_alpha_norm(1, 8.0), 0.0);
        // Aggregate Gauss-Bonnet consistency for a degree-d curve:
        // integral of |alpha|^2 = 8 pi d - 4 pi chi.
        for d in 1..=6u32 {
            let inv = curve_invariants(d).unwrap();
            let chi = 2.0 - 2.0 * inv.genus as f64;
            let mean_s = 4.0 * PI * chi / inv.area;
            let total_alpha = intrinsic_alpha_norm(1, mean_s) * inv.area;
            assert_abs_diff_eq!(
                total_alpha,
                8.0 * PI * f64::from(d) - 4.0 * PI * chi,
                epsilon = 1e-9
            );
            assert_abs_diff_eq!(total_alpha, inv.pi_value, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(REAL_FLAT_TORUS_ALPHA_NORM_SQ, 2.0);
    }
}
