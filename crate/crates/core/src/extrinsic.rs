//! Scalar invariants of a principal-curvature spectrum and the specialized
//! Euler-Lagrange residuals of the three curvature functionals.
//!
//! A hypersurface slice with constant principal curvatures is fully described
//! by the multiset of its principal curvatures.  The squared L2-density
//! functionals considered here are
//!
//! * `Pi`  — integral of |alpha|^2 (second fundamental form),
//! * `Psi` — integral of |H|^2 (mean curvature vector),
//! * `S`   — their difference,
//!
//! and the residuals below are the left-hand sides of the corresponding
//! critical point equations with the Laplacian term dropped (every slice in
//! scope has constant mean curvature).

use crate::error::{Error, Result};

/// Multiset of principal curvatures with multiplicities.
///
/// Multiplicities are stored exactly rather than expanding the spectrum into
/// a flat list, which keeps structured families like (1, 1, n-1, n-1)
/// explicit and avoids floating duplication.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalSpectrum {
    entries: Vec<(f64, u32)>,
}

impl PrincipalSpectrum {
    /// Builds a spectrum from `(curvature, multiplicity)` pairs.
    pub fn new(entries: Vec<(f64, u32)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpectrum("no entries".into()));
        }
        for &(k, m) in &entries {
            if m == 0 {
                return Err(Error::InvalidSpectrum(format!(
                    "multiplicity 0 for curvature {k}"
                )));
            }
            if !k.is_finite() {
                return Err(Error::InvalidSpectrum(format!("non-finite curvature {k}")));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(f64, u32)] {
        &self.entries
    }

    /// Hypersurface dimension: the total multiplicity.
    pub fn dimension(&self) -> u32 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Curvatures listed once per principal direction, in entry order.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension() as usize);
        for &(k, m) in &self.entries {
            for _ in 0..m {
                out.push(k);
            }
        }
        out
    }

    /// The spectrum with every curvature negated (orientation reversal).
    pub fn negated(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|&(k, m)| (-k, m)).collect(),
        }
    }

    fn moment(&self, pow: u32) -> f64 {
        self.entries
            .iter()
            .map(|&(k, m)| f64::from(m) * k.powi(pow as i32))
            .sum()
    }

    /// Mean curvature h = k_1 + ... + k_n.
    pub fn mean_curvature(&self) -> f64 {
        self.moment(1)
    }

    /// |alpha|^2 = k_1^2 + ... + k_n^2.
    pub fn alpha_norm_sq(&self) -> f64 {
        self.moment(2)
    }

    /// trace A^3 = k_1^3 + ... + k_n^3.
    pub fn trace_a3(&self) -> f64 {
        self.moment(3)
    }
}

/// Pi-criticality residual `2ch - h|alpha|^2 + 2 trace A^3` for a
/// constant-curvature slice of the space form of curvature `c`.
pub fn pi_residual_spaceform(spec: &PrincipalSpectrum, c: f64) -> f64 {
    let h = spec.mean_curvature();
    2.0 * c * h - h * spec.alpha_norm_sq() + 2.0 * spec.trace_a3()
}

/// Psi-criticality residual `2cnh + 2h|alpha|^2 - h^3`, `n` the slice
/// dimension.
pub fn psi_residual_spaceform(spec: &PrincipalSpectrum, c: f64) -> f64 {
    let h = spec.mean_curvature();
    let n = f64::from(spec.dimension());
    2.0 * c * n * h + 2.0 * h * spec.alpha_norm_sq() - h.powi(3)
}

/// Expands `normal_sectionals` to one value per principal direction.
///
/// The list may be given per spectrum entry (weighted by multiplicity) or
/// already expanded per direction.  When the spectrum has as many entries as
/// directions the two readings coincide.
fn expand_sectionals(spec: &PrincipalSpectrum, normal_sectionals: &[f64]) -> Result<Vec<f64>> {
    let n_entries = spec.entries().len();
    let dim = spec.dimension() as usize;
    if normal_sectionals.len() == dim {
        return Ok(normal_sectionals.to_vec());
    }
    if normal_sectionals.len() == n_entries {
        let mut out = Vec::with_capacity(dim);
        for (&(_, m), &sec) in spec.entries().iter().zip(normal_sectionals) {
            for _ in 0..m {
                out.push(sec);
            }
        }
        return Ok(out);
    }
    Err(Error::SectionalLengthMismatch {
        got: normal_sectionals.len(),
        expected_entries: n_entries,
        expected_dim: dim,
    })
}

/// S-criticality residual for a slice of an Einstein ambient:
///
/// `2 sum k_i K(e_i, nu) - 2h sum K(e_i, nu) + 2 trace A^3 - 3|alpha|^2 h + h^3`.
///
/// `normal_sectionals` holds the ambient sectional curvature of the plane
/// spanned by each principal direction and the unit normal.
pub fn s_residual_einstein(spec: &PrincipalSpectrum, normal_sectionals: &[f64]) -> Result<f64> {
    let secs = expand_sectionals(spec, normal_sectionals)?;
    let ks = spec.expanded();
    let weighted: f64 = ks.iter().zip(&secs).map(|(k, s)| k * s).sum();
    let sec_sum: f64 = secs.iter().sum();
    let h = spec.mean_curvature();
    Ok(2.0 * weighted - 2.0 * h * sec_sum + 2.0 * spec.trace_a3()
        - 3.0 * spec.alpha_norm_sq() * h
        + h.powi(3))
}

/// Intrinsic scalar curvature from the Gauss equation:
/// `s_g = sum_{i,j<=n} K(e_i,e_j) + h^2 - |alpha|^2`.
pub fn gauss_scalar(spec: &PrincipalSpectrum, tangential_sectional_sum: f64) -> f64 {
    tangential_sectional_sum + spec.mean_curvature().powi(2) - spec.alpha_norm_sq()
}

/// Evaluated residuals of the three critical point equations together with
/// the scalar invariants entering them.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalityReport {
    pub h: f64,
    pub alpha_norm_sq: f64,
    pub trace_a3: f64,
    pub pi_residual: f64,
    pub psi_residual: f64,
    pub s_residual: f64,
}

impl CriticalityReport {
    /// Report for a slice of the space form of curvature `c`, where every
    /// normal sectional curvature equals `c`.
    pub fn spaceform(spec: &PrincipalSpectrum, c: f64) -> Self {
        let secs = vec![c; spec.entries().len()];
        Self {
            h: spec.mean_curvature(),
            alpha_norm_sq: spec.alpha_norm_sq(),
            trace_a3: spec.trace_a3(),
            pi_residual: pi_residual_spaceform(spec, c),
            psi_residual: psi_residual_spaceform(spec, c),
            s_residual: s_residual_einstein(spec, &secs).expect("length matches by construction"),
        }
    }
}

/// Second fundamental form of a codimension-q submanifold, stored as the
/// q shape-operator matrices A_1, .., A_q (components h^k_{ij}).
#[derive(Debug, Clone)]
pub struct ShapeOperators {
    n: usize,
    mats: Vec<Vec<f64>>, // row-major n x n each
}

impl ShapeOperators {
    /// Builds the form from row-major `n x n` matrices, one per normal
    /// direction.  Every matrix must be symmetric.
    pub fn new(mats: Vec<Vec<f64>>) -> Result<Self> {
        if mats.is_empty() {
            return Err(Error::InvalidSpectrum("no shape operators given".into()));
        }
        let len = mats[0].len();
        let n = (len as f64).sqrt().round() as usize;
        if n * n != len || n == 0 {
            return Err(Error::InvalidSpectrum(format!(
                "matrix length {len} is not a positive square"
            )));
        }
        for (block, m) in mats.iter().enumerate() {
            if m.len() != len {
                return Err(Error::InvalidSpectrum(
                    "shape operators of unequal size".into(),
                ));
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if (m[i * n + j] - m[j * n + i]).abs() > 1e-12 {
                        return Err(Error::NonSymmetric { block, i, j });
                    }
                }
            }
        }
        Ok(Self { n, mats })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn normal_count(&self) -> usize {
        self.mats.len()
    }

    fn at(&self, k: usize, i: usize, j: usize) -> f64 {
        self.mats[k][i * self.n + j]
    }
}

/// Cubic contraction `<alpha(e_i,e_j), alpha(e_l,e_j)> <alpha(e_l,e_i), nu_m>`
/// by direct triple summation.
pub fn cubic_contraction(alpha: &ShapeOperators, m: usize) -> Result<f64> {
    if m >= alpha.normal_count() {
        return Err(Error::NormalIndexOutOfRange {
            index: m,
            count: alpha.normal_count(),
        });
    }
    let n = alpha.dim();
    let q = alpha.normal_count();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let inner: f64 = (0..q).map(|k| alpha.at(k, i, j) * alpha.at(k, l, j)).sum();
                acc += inner * alpha.at(m, l, i);
            }
        }
    }
    Ok(acc)
}

/// Companion route for [`cubic_contraction`]: `trace(A_m sum_k A_k^2)`.
pub fn cubic_contraction_trace(alpha: &ShapeOperators, m: usize) -> Result<f64> {
    if m >= alpha.normal_count() {
        return Err(Error::NormalIndexOutOfRange {
            index: m,
            count: alpha.normal_count(),
        });
    }
    let n = alpha.dim();
    let q = alpha.normal_count();
    // sum_k A_k^2
    let mut sq = vec![0.0; n * n];
    for k in 0..q {
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for l in 0..n {
                    s += alpha.at(k, i, l) * alpha.at(k, l, j);
                }
                sq[i * n + j] += s;
            }
        }
    }
    let mut tr = 0.0;
    for i in 0..n {
        for l in 0..n {
            tr += alpha.at(m, i, l) * sq[l * n + i];
        }
    }
    Ok(tr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec(entries: &[(f64, u32)]) -> PrincipalSpectrum {
        PrincipalSpectrum::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn mean_curvature_of_opposite_pair_vanishes() {
        assert_eq!(spec(&[(1.0, 1), (-1.0, 1)]).mean_curvature(), 0.0);
    }

    #[test]
    fn totally_geodesic_invariants() {
        let s = spec(&[(0.0, 5)]);
        assert_eq!(s.alpha_norm_sq(), 0.0);
        assert_eq!(s.trace_a3(), 0.0);
        assert_eq!(s.dimension(), 5);
    }

    #[test]
    fn trace_a3_direct_sum() {
        assert_eq!(spec(&[(1.0, 3)]).trace_a3(), 3.0);
        assert_eq!(spec(&[(2.0, 1), (-2.0, 1)]).trace_a3(), 0.0);
    }

    #[test]
    fn psi_residual_small_sphere_in_s3() {
        // h = 2, |alpha|^2 = 2 in the unit 3-sphere.
        let s = spec(&[(1.0, 2)]);
        assert_abs_diff_eq!(psi_residual_spaceform(&s, 1.0), 8.0);
    }

    #[test]
    fn psi_residual_vanishes_for_minimal() {
        let s = spec(&[(1.5, 2), (-1.0, 3)]);
        assert_eq!(s.mean_curvature(), 0.0);
        assert_eq!(psi_residual_spaceform(&s, 1.0), 0.0);
    }

    #[test]
    fn s_residual_totally_geodesic() {
        let s = spec(&[(0.0, 4)]);
        let secs = vec![0.3, -0.1, 0.7, 0.2];
        assert_eq!(s_residual_einstein(&s, &secs).unwrap(), 0.0);
    }

    #[test]
    fn s_residual_rejects_bad_lengths() {
        let s = spec(&[(1.0, 2), (2.0, 3)]);
        assert!(s_residual_einstein(&s, &[1.0, 2.0, 3.0]).is_err());
        assert!(s_residual_einstein(&s, &[1.0, 2.0]).is_ok());
        assert!(s_residual_einstein(&s, &[1.0; 5]).is_ok());
    }

    #[test]
    fn gauss_scalar_clifford_torus_is_flat() {
        // Clifford torus in the 3-sphere: h = 0, |alpha|^2 = 2, ambient sum 2.
        let s = spec(&[(1.0, 1), (-1.0, 1)]);
        assert_abs_diff_eq!(gauss_scalar(&s, 2.0), 0.0);
    }

    #[test]
    fn gauss_scalar_totally_geodesic_fiber() {
        let mu = 0.37;
        let s = spec(&[(0.0, 3)]);
        assert_abs_diff_eq!(gauss_scalar(&s, 6.0 / mu), 6.0 / mu);
        assert_eq!(gauss_scalar(&spec(&[(0.0, 7)]), 0.0), 0.0);
    }

    #[test]
    fn report_difference_identity_spaceform() {
        let s = spec(&[(0.7, 2), (-1.3, 1), (2.5, 3)]);
        for &c in &[-1.0, 0.0, 1.0, 2.5] {
            let r = CriticalityReport::spaceform(&s, c);
            assert_abs_diff_eq!(
                r.s_residual,
                r.pi_residual - r.psi_residual,
                epsilon = 1e-12
            );
            assert!(r.alpha_norm_sq >= r.h * r.h / f64::from(s.dimension()) - 1e-12);
        }
    }

    #[test]
    fn cubic_contraction_diagonal_matches_trace_a3() {
        // Single normal, diagonal shape operator: the contraction is sum k^3.
        let a = ShapeOperators::new(vec![vec![1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0]])
            .unwrap();
        let got = cubic_contraction(&a, 0).unwrap();
        assert_abs_diff_eq!(got, 1.0 - 1.0 + 8.0, epsilon = 1e-14);
        assert_abs_diff_eq!(got, cubic_contraction_trace(&a, 0).unwrap(), epsilon = 1e-14);

        let d2 = ShapeOperators::new(vec![vec![1.0, 0.0, 0.0, -1.0]]).unwrap();
        assert_abs_diff_eq!(cubic_contraction(&d2, 0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn cubic_contraction_rejects_asymmetry() {
        let r = ShapeOperators::new(vec![vec![0.0, 1.0, 0.5, 0.0]]);
        assert!(matches!(r, Err(Error::NonSymmetric { .. })));
    }

    #[test]
    fn cubic_contraction_brute_vs_trace_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let n = rng.gen_range(2..=6usize);
            let q = rng.gen_range(1..=4usize);
            let mats: Vec<Vec<f64>> = (0..q)
                .map(|_| {
                    let mut m = vec![0.0; n * n];
                    for i in 0..n {
                        for j in i..n {
                            let v = rng.gen_range(-1.0..1.0);
                            m[i * n + j] = v;
                            m[j * n + i] = v;
                        }
                    }
                    m
                })
                .collect();
            let a = ShapeOperators::new(mats).unwrap();
            for m in 0..q {
                let brute = cubic_contraction(&a, m).unwrap();
                let trace = cubic_contraction_trace(&a, m).unwrap();
                assert_abs_diff_eq!(brute, trace, epsilon = 1e-10);
            }
        }
    }

    proptest! {
        #[test]
        fn invariants_do_not_depend_on_entry_order(
            mut entries in proptest::collection::vec((-5.0..5.0f64, 1u32..4), 1..6),
            swap_a in 0usize..6, swap_b in 0usize..6,
        ) {
            let s1 = PrincipalSpectrum::new(entries.clone()).unwrap();
            let la = swap_a % entries.len();
            let lb = swap_b % entries.len();
            entries.swap(la, lb);
            let s2 = PrincipalSpectrum::new(entries).unwrap();
            prop_assert!((s1.mean_curvature() - s2.mean_curvature()).abs() < 1e-12);
            prop_assert!((s1.alpha_norm_sq() - s2.alpha_norm_sq()).abs() < 1e-12);
            prop_assert!((s1.trace_a3() - s2.trace_a3()).abs() < 1e-12);
        }

        #[test]
        fn sign_flip_laws(
            entries in proptest::collection::vec((-3.0..3.0f64, 1u32..4), 1..6),
            c in -2.0..2.0f64,
        ) {
            let s = PrincipalSpectrum::new(entries).unwrap();
            let n = s.negated();
            prop_assert!((n.mean_curvature() + s.mean_curvature()).abs() < 1e-12);
            prop_assert!((n.trace_a3() + s.trace_a3()).abs() < 1e-12);
            prop_assert!((n.alpha_norm_sq() - s.alpha_norm_sq()).abs() < 1e-12);
            prop_assert!(
                (pi_residual_spaceform(&n, c) + pi_residual_spaceform(&s, c)).abs() < 1e-10
            );
            prop_assert!(
                (psi_residual_spaceform(&n, c) + psi_residual_spaceform(&s, c)).abs() < 1e-10
            );
        }

        #[test]
        fn austere_spectra_are_pi_critical(
            pairs in proptest::collection::vec((0.01..4.0f64, 1u32..4), 1..4),
            c in -2.0..2.0f64,
        ) {
            let mut entries = Vec::new();
            for &(k, m) in &pairs {
                entries.push((k, m));
                entries.push((-k, m));
            }
            let s = PrincipalSpectrum::new(entries).unwrap();
            prop_assert!(s.mean_curvature().abs() < 1e-11);
            prop_assert!(s.trace_a3().abs() < 1e-10);
            prop_assert!(pi_residual_spaceform(&s, c).abs() < 1e-9);
        }

        #[test]
        fn difference_identity_random(
            entries in proptest::collection::vec((-3.0..3.0f64, 1u32..4), 1..6),
            c in -2.0..2.0f64,
        ) {
            let s = PrincipalSpectrum::new(entries).unwrap();
            let secs = vec![c; s.entries().len()];
            let lhs = s_residual_einstein(&s, &secs).unwrap();
            let rhs = pi_residual_spaceform(&s, c) - psi_residual_spaceform(&s, c);
            prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()));
        }
    }
}
