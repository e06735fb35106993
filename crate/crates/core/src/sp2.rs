//! Quaternionic linear algebra on the Lie algebra of Sp(2), the
//! two-parameter family of left-invariant metrics
//!
//! ```text
//! g(Z0, Z1) = Re(lambda p1' p2 + u1' u2 + mu r1' r2),      ' = conjugate,
//! ```
//!
//! and two independent curvature routes: the closed-form expression for the
//! unnormalized curvature of a planar section, and a generic Koszul-formula
//! engine over a g-orthonormal basis of the 10-dimensional algebra.  The two
//! routes are mutual oracles.
//!
//! Tangent vectors are written in block coordinates (p, u, r) for the matrix
//! [[p, -conj(u)], [u, r]] with p, r purely imaginary.  The r-block spans the
//! vertical space of the submersion onto the 7-sphere; its fibers are round
//! 3-spheres of curvature 1/mu.

use crate::error::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion w + xi + yj + zk.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn imaginary(x: f64, y: f64, z: f64) -> Self {
        Self { w: 0.0, x, y, z }
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn re(self) -> f64 {
        self.w
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Re(conj(a) b), the Euclidean inner product of the coefficient vectors.
    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(s * self.w, s * self.x, s * self.y, s * self.z)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product.
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// Hamilton product as a free function.
pub fn qmul(a: Quaternion, b: Quaternion) -> Quaternion {
    a * b
}

/// Element of the Lie algebra of Sp(2) in (p, u, r) block coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Sp2Vector {
    p: Quaternion,
    u: Quaternion,
    r: Quaternion,
}

impl Sp2Vector {
    pub const ZERO: Sp2Vector = Sp2Vector {
        p: Quaternion::ZERO,
        u: Quaternion::ZERO,
        r: Quaternion::ZERO,
    };

    /// Builds a vector from imaginary diagonal blocks and a free off-diagonal
    /// block.
    pub const fn from_parts(p: [f64; 3], u: Quaternion, r: [f64; 3]) -> Self {
        Self {
            p: Quaternion::imaginary(p[0], p[1], p[2]),
            u,
            r: Quaternion::imaginary(r[0], r[1], r[2]),
        }
    }

    /// Builds a vector from quaternions, requiring p and r purely imaginary.
    pub fn new(p: Quaternion, u: Quaternion, r: Quaternion) -> Result<Self> {
        if p.w != 0.0 || r.w != 0.0 {
            return Err(Error::InvalidParameter(
                "diagonal blocks of an sp(2) vector must be purely imaginary".into(),
            ));
        }
        Ok(Self { p, u, r })
    }

    pub fn p(&self) -> Quaternion {
        self.p
    }
    pub fn u(&self) -> Quaternion {
        self.u
    }
    pub fn r(&self) -> Quaternion {
        self.r
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            p: self.p.scale(s),
            u: self.u.scale(s),
            r: self.r.scale(s),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            p: self.p + o.p,
            u: self.u + o.u,
            r: self.r + o.r,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            p: self.p - o.p,
            u: self.u - o.u,
            r: self.r - o.r,
        }
    }

    /// Vector with all ten chart components drawn uniformly from [-1, 1].
    pub fn random(rng: &mut impl Rng) -> Self {
        let mut c = || rng.gen_range(-1.0..1.0);
        Self::from_parts(
            [c(), c(), c()],
            Quaternion::new(c(), c(), c(), c()),
            [c(), c(), c()],
        )
    }
}

/// Matrix commutator [Z0, Z1] expressed back in (p, u, r) blocks.
pub fn bracket(z0: &Sp2Vector, z1: &Sp2Vector) -> Sp2Vector {
    let (p, u, r) = (z0.p, z0.u, z0.r);
    let (q, w, z) = (z1.p, z1.u, z1.r);
    let bp = p * q - q * p - u.conj() * w + w.conj() * u;
    let bu = u * q - w * p + r * w - z * u;
    let br = w * u.conj() - u * w.conj() + r * z - z * r;
    // The diagonal real parts cancel exactly by symmetry of the products.
    Sp2Vector { p: bp, u: bu, r: br }
}

/// The pair (lambda, mu) selecting the left-invariant metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricParams {
    pub lambda: f64,
    pub mu: f64,
}

impl MetricParams {
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        if !(lambda > 0.0 && mu > 0.0) {
            return Err(Error::InvalidParameter(
                "metric parameters must be strictly positive".into(),
            ));
        }
        Ok(Self { lambda, mu })
    }

    /// The bi-invariant point lambda = mu = 1/2.
    pub const BI_INVARIANT: MetricParams = MetricParams {
        lambda: 0.5,
        mu: 0.5,
    };
}

/// The metric value g(Z0, Z1) = lambda Re(p1' p2) + Re(u1' u2) + mu Re(r1' r2).
pub fn metric_eval(g: &MetricParams, z0: &Sp2Vector, z1: &Sp2Vector) -> f64 {
    g.lambda * z0.p.dot(z1.p) + z0.u.dot(z1.u) + g.mu * z0.r.dot(z1.r)
}

pub fn norm_sq(g: &MetricParams, z: &Sp2Vector) -> f64 {
    metric_eval(g, z, z)
}

const DIM: usize = 10;

/// Koszul-formula connection and curvature over a fixed g-orthonormal basis.
///
/// The basis consists of the block-elementary vectors p in {i,j,k}/sqrt(lambda),
/// u in {1,i,j,k}, r in {i,j,k}/sqrt(mu); it diagonalizes the metric exactly.
/// Coordinates 0..3 span the p-block, 3..7 the u-block, 7..10 the vertical
/// r-block.
pub struct CurvatureEngine {
    params: MetricParams,
    basis: [Sp2Vector; DIM],
    /// gamma[a][b][c] = <nabla_{e_a} e_b, e_c>
    gamma: Vec<f64>,
    /// brk[a][b][c] = c-th coordinate of [e_a, e_b]
    brk: Vec<f64>,
}

impl CurvatureEngine {
    pub fn new(params: MetricParams) -> Self {
        let sl = params.lambda.sqrt().recip();
        let sm = params.mu.sqrt().recip();
        let basis = [
            Sp2Vector::from_parts([sl, 0.0, 0.0], Quaternion::ZERO, [0.0; 3]),
            Sp2Vector::from_parts([0.0, sl, 0.0], Quaternion::ZERO, [0.0; 3]),
            Sp2Vector::from_parts([0.0, 0.0, sl], Quaternion::ZERO, [0.0; 3]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::ONE, [0.0; 3]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::I, [0.0; 3]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::J, [0.0; 3]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::K, [0.0; 3]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::ZERO, [sm, 0.0, 0.0]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::ZERO, [0.0, sm, 0.0]),
            Sp2Vector::from_parts([0.0; 3], Quaternion::ZERO, [0.0, 0.0, sm]),
        ];
        let mut brk = vec![0.0; DIM * DIM * DIM];
        for a in 0..DIM {
            for b in 0..DIM {
                let v = bracket(&basis[a], &basis[b]);
                for c in 0..DIM {
                    brk[(a * DIM + b) * DIM + c] = metric_eval(&params, &v, &basis[c]);
                }
            }
        }
        let at = |a: usize, b: usize, c: usize| brk[(a * DIM + b) * DIM + c];
        let mut gamma = vec![0.0; DIM * DIM * DIM];
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    gamma[(a * DIM + b) * DIM + c] =
                        0.5 * (at(a, b, c) - at(b, c, a) + at(c, a, b));
                }
            }
        }
        Self {
            params,
            basis,
            gamma,
            brk,
        }
    }

    pub fn params(&self) -> MetricParams {
        self.params
    }

    /// Coordinates of `z` in the orthonormal basis.
    pub fn coords(&self, z: &Sp2Vector) -> [f64; DIM] {
        let mut out = [0.0; DIM];
        for (c, e) in out.iter_mut().zip(&self.basis) {
            *c = metric_eval(&self.params, z, e);
        }
        out
    }

    pub fn vector(&self, coords: &[f64; DIM]) -> Sp2Vector {
        let mut v = Sp2Vector::ZERO;
        for (c, e) in coords.iter().zip(&self.basis) {
            v = v.add(&e.scale(*c));
        }
        v
    }

    /// nabla_X Y for left-invariant fields, in coordinates.
    pub fn nabla(&self, x: &[f64; DIM], y: &[f64; DIM]) -> [f64; DIM] {
        let mut out = [0.0; DIM];
        for a in 0..DIM {
            if x[a] == 0.0 {
                continue;
            }
            for b in 0..DIM {
                if y[b] == 0.0 {
                    continue;
                }
                let s = x[a] * y[b];
                let base = (a * DIM + b) * DIM;
                for c in 0..DIM {
                    out[c] += s * self.gamma[base + c];
                }
            }
        }
        out
    }

    fn bracket_coords(&self, x: &[f64; DIM], y: &[f64; DIM]) -> [f64; DIM] {
        let mut out = [0.0; DIM];
        for a in 0..DIM {
            if x[a] == 0.0 {
                continue;
            }
            for b in 0..DIM {
                if y[b] == 0.0 {
                    continue;
                }
                let s = x[a] * y[b];
                let base = (a * DIM + b) * DIM;
                for c in 0..DIM {
                    out[c] += s * self.brk[base + c];
                }
            }
        }
        out
    }

    /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
    pub fn curvature(&self, x: &[f64; DIM], y: &[f64; DIM], z: &[f64; DIM]) -> [f64; DIM] {
        let nyz = self.nabla(y, z);
        let nxz = self.nabla(x, z);
        let a = self.nabla(x, &nyz);
        let b = self.nabla(y, &nxz);
        let br = self.bracket_coords(x, y);
        let c = self.nabla(&br, z);
        let mut out = [0.0; DIM];
        for i in 0..DIM {
            out[i] = a[i] - b[i] - c[i];
        }
        out
    }

    /// <R(X,Y)Z, W> in the orthonormal coordinates.
    pub fn riemann(&self, x: &[f64; DIM], y: &[f64; DIM], z: &[f64; DIM], w: &[f64; DIM]) -> f64 {
        let r = self.curvature(x, y, z);
        r.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    /// Unnormalized sectional numerator <R(Z0,Z1)Z1, Z0>.
    pub fn sectional(&self, z0: &Sp2Vector, z1: &Sp2Vector) -> f64 {
        let x = self.coords(z0);
        let y = self.coords(z1);
        self.riemann(&x, &y, &y, &x)
    }

    /// Scalar curvature as twice the sum of basis sectional curvatures.
    pub fn scalar_from_basis(&self) -> f64 {
        let mut s = 0.0;
        let coords: Vec<[f64; DIM]> = (0..DIM)
            .map(|a| {
                let mut c = [0.0; DIM];
                c[a] = 1.0;
                c
            })
            .collect();
        for a in 0..DIM {
            for b in (a + 1)..DIM {
                s += self.riemann(&coords[a], &coords[b], &coords[b], &coords[a]);
            }
        }
        2.0 * s
    }
}

/// Levi-Civita connection nabla_X Y of g, via the Koszul formula over the
/// orthonormal basis.
pub fn koszul_connection(g: &MetricParams, x: &Sp2Vector, y: &Sp2Vector) -> Sp2Vector {
    let engine = CurvatureEngine::new(*g);
    let n = engine.nabla(&engine.coords(x), &engine.coords(y));
    engine.vector(&n)
}

/// Unnormalized curvature of the planar section spanned by Z0 = (p,u,r) and
/// Z1 = (q,w,z), evaluated from the closed-form expression.
pub fn sectional_closed_form(g: &MetricParams, z0: &Sp2Vector, z1: &Sp2Vector) -> f64 {
    let (l, m) = (g.lambda, g.mu);
    let (p, u, r) = (z0.p, z0.u, z0.r);
    let (q, w, z) = (z1.p, z1.u, z1.r);

    let uw = u.dot(w); // Re(conj(u) w)
    let pq = p.dot(q);
    let rz = r.dot(z);

    let lam_term = 2.0 * ((w * q).conj() * u * p).re() - ((u * q).conj() * w * p).re();
    let mu_term = 2.0 * ((z * w).conj() * r * u).re() - ((z * u).conj() * r * w).re();
    let mixed = ((u * q * u.conj() - u * p * w.conj()) * z + (w * p * w.conj() - w * q * u.conj()) * r).re();

    (4.0 - 3.0 * (l + m)) * (u.norm_sq() * w.norm_sq() - uw * uw)
        + l * l * (q.norm_sq() * u.norm_sq() + p.norm_sq() * w.norm_sq())
        + l * (p.norm_sq() * q.norm_sq() - pq * pq)
        - 2.0 * uw * (l * pq + m * rz)
        + 2.0 * l * (1.0 - l) * lam_term
        + m * m * (u.norm_sq() * z.norm_sq() + w.norm_sq() * r.norm_sq())
        + m * (r.norm_sq() * z.norm_sq() - rz * rz)
        + 2.0 * l * m * mixed
        + 2.0 * m * (1.0 - m) * mu_term
}

/// Same quantity assembled from the Koszul-formula curvature tensor; the
/// independent oracle for [`sectional_closed_form`].
pub fn sectional_from_koszul(g: &MetricParams, z0: &Sp2Vector, z1: &Sp2Vector) -> f64 {
    CurvatureEngine::new(*g).sectional(z0, z1)
}

/// Scalar curvature 2(3/lambda + 24 - 6(lambda + mu) + 3/mu).
pub fn scalar_curvature(g: &MetricParams) -> f64 {
    2.0 * (3.0 / g.lambda + 24.0 - 6.0 * (g.lambda + g.mu) + 3.0 / g.mu)
}

/// Scalar curvature as the orthonormal-basis double sum of sectional values.
pub fn scalar_curvature_basis_sum(g: &MetricParams) -> f64 {
    CurvatureEngine::new(*g).scalar_from_basis()
}

/// Draws a g-orthonormal pair: chart components uniform in [-1,1], then
/// Gram-Schmidt in the metric.
pub fn random_orthonormal_pair(
    g: &MetricParams,
    rng: &mut impl Rng,
) -> (Sp2Vector, Sp2Vector) {
    loop {
        let a = Sp2Vector::random(rng);
        let na = norm_sq(g, &a);
        if na < 1e-6 {
            continue;
        }
        let a = a.scale(na.sqrt().recip());
        let b = Sp2Vector::random(rng);
        let b = b.sub(&a.scale(metric_eval(g, &b, &a)));
        let nb = norm_sq(g, &b);
        if nb < 1e-6 {
            continue;
        }
        return (a, b.scale(nb.sqrt().recip()));
    }
}

/// Minimum closed-form sectional value over `samples` random orthonormalized
/// pairs.
pub fn nonnegativity_scan(g: &MetricParams, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min = f64::INFINITY;
    for _ in 0..samples {
        let (z0, z1) = random_orthonormal_pair(g, &mut rng);
        let k = sectional_closed_form(g, &z0, &z1);
        if k < min {
            min = k;
        }
    }
    min
}

/// Volume 2 pi^2 mu^(3/2) of the round 3-sphere fibers.
pub fn fiber_volume(mu: f64) -> f64 {
    2.0 * PI * PI * mu.powf(1.5)
}

/// Largest horizontal component of nabla_X Y over an orthonormal basis of
/// the vertical subalgebra; zero exactly when the fibers are totally
/// geodesic.
pub fn fiber_second_fundamental(g: &MetricParams) -> f64 {
    let engine = CurvatureEngine::new(*g);
    let mut max = 0.0f64;
    for a in 7..DIM {
        for b in 7..DIM {
            let mut x = [0.0; DIM];
            let mut y = [0.0; DIM];
            x[a] = 1.0;
            y[b] = 1.0;
            let n = engine.nabla(&x, &y);
            let horiz: f64 = n[..7].iter().map(|c| c * c).sum();
            max = max.max(horiz.sqrt());
        }
    }
    max
}
