//! Continuous-time quantum walks `e^{-iAt}` started at a root vertex,
//! projected onto the normalized stratum states `|φ_k⟩`.

mod average;
mod closed;
mod dispatch;
mod engines;
mod series;

pub use average::{
    average_eigen, average_group, average_spectral, numerical_time_average, vertex_averages, ATOM_MERGE_TOL,
};
pub use closed::{
    complete_origin_amplitude, hamming_eigenstructure, hamming_walk, johnson_limit_amplitudes, krawtchouk,
    line_amplitudes,
};
pub use dispatch::{dispatch, Engine, WalkRequest};
pub use engines::{
    amplitudes_eigen, amplitudes_group, amplitudes_orthonormal, amplitudes_spectral, cayley_distribution, coarsen,
};
pub use series::{AmplitudeSeries, Normalization};
