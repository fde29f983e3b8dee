//! Continuous-time quantum walks on the underlying graphs of association
//! schemes.
//!
//! Amplitudes are computed by three independent routes that are expected to
//! agree: the eigenvalue/dual-eigenvalue matrices of the Bose–Mesner algebra
//! ([`walk::amplitudes_eigen`]), group character tables
//! ([`walk::amplitudes_group`]) and the spectral distribution obtained from an
//! intersection array by Gauss quadrature ([`walk::amplitudes_spectral`]).
//! The [`oracle`] module builds explicit vertex-level graphs and evolves
//! `exp(-iAt)` directly, which is the ground truth the other engines are
//! tested against.

pub mod cli;
pub mod error;
pub mod group;
pub mod linalg;
pub mod oracle;
pub mod scheme;
pub mod spectral;
pub mod walk;

pub use error::{Error, Result};
pub use scheme::{IntersectionArray, SchemeEigenstructure, SchemeSpec, ValencyVector};
