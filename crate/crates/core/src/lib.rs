//! Numerical toolkit for curvature functionals of isometrically immersed
//! submanifolds: scalar invariants of principal-curvature spectra,
//! criticality residuals of the squared L2-norm functionals, closed-form
//! curvature models (isoparametric families in spheres, a two-parameter
//! left-invariant metric family on Sp(2), the Fubini-Study metric), and
//! numerically integrated Ricci-flat warped backgrounds with their critical
//! slices.
//!
//! Every closed-form expression with desk-scale consequences is paired with
//! an independent numerical route (brute-force contraction, Koszul-formula
//! curvature engine, quadrature, bisection), and the `verify` module bundles
//! those cross-checks into a single reproducible suite.

pub mod error;
pub mod extrinsic;
pub mod isoparametric;
pub mod projective;
pub mod rootfind;
pub mod sp2;
pub mod verify;
pub mod warped;

pub use error::{Error, Result};
