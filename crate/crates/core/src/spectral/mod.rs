//! Spectral distributions of distance-regular graphs.
//!
//! An intersection array determines a Szegő–Jacobi sequence `(ω_k, α_k)`;
//! the spectral distribution `μ` of the adjacency matrix in the walk's
//! starting state is the Gauss-quadrature measure of the associated
//! tridiagonal (Jacobi) matrix.

mod catalog;
mod distribution;
mod jacobi;
mod srg;
mod tridiag;

pub use catalog::{
    catalog, catalog_names, catalog_parameters, compare_with_reference, CatalogEntry, ReferenceComparison,
};
pub use distribution::{
    continuous_line_distribution, golub_welsch, meixner_distribution, stieltjes_transform, ContinuousDistribution,
    DiscreteDistribution, GeometricAtoms, SpectralDistribution, DEFAULT_TAIL_TOLERANCE,
};
pub use jacobi::{evaluate_polynomials, jacobi_from_intersection, normalized_polynomials, JacobiCoefficients};
pub use srg::{srg_distribution, srg_intersection_array};
pub use tridiag::{tridiagonal_eigen, TridiagonalEigen};
