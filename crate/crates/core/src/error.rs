use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid intersection array: {0}")]
    InvalidIntersectionArray(String),
    #[error("valency a_{k} = {numerator}/{denominator} is not an integer")]
    NonIntegerValency {
        k: usize,
        numerator: u128,
        denominator: u128,
    },
    #[error("atoms {0} and {1} coincide within 1e-9")]
    DuplicateAtoms(f64, f64),
    #[error("invalid group order {0}")]
    InvalidOrder(u32),
    #[error("symmetric group S_{0} is not supported (n must be at most 8)")]
    UnsupportedOrder(u32),
    #[error("invalid cycle type {0:?}")]
    InvalidCycleType(Vec<u32>),
    #[error("character table has complex classes; symmetrization is required")]
    ComplexClassesWithoutSymmetrization,
    #[error("intersection number {0} is not within 1e-6 of an integer")]
    NonIntegerResult(f64),
    #[error("class partition does not define a commutative scheme: {0}")]
    InvalidFusion(String),
    #[error("eigensolver did not converge after {0} iterations")]
    EigensolverNoConvergence(usize),
    #[error("spectral atoms {0} and {1} are not separated by more than 1e-9")]
    DegenerateAtoms(f64, f64),
    #[error("evaluation point is within 1e-12 of the atom {0}")]
    PoleProximity(f64),
    #[error("infeasible strongly regular parameters: {0}")]
    InfeasibleParameters(String),
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
    #[error("generating class set is not closed under inversion or has non-real eigenvalues")]
    NonRealGeneratingClass,
    #[error("spectrum has coincident atoms {0} and {1}; merge them first")]
    DegenerateSpectrumUnmerged(f64, f64),
    #[error("engine `{engine}` cannot evaluate {spec}")]
    EngineSpecMismatch { engine: String, spec: String },
    #[error("graph with {0} vertices exceeds the 2000-vertex limit")]
    TooLarge(usize),
    #[error("generating set is not closed under inversion")]
    NonSymmetricGeneratingSet,
    #[error("graph is not distance-regular: {0}")]
    NotDistanceRegular(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no vertex-level construction for {0}")]
    NotConstructible(String),
    #[error("schema error at {pointer}: {message}")]
    SchemaError { pointer: String, message: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable snake-case identifier used on the command line.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidIntersectionArray(_) => "invalid_intersection_array",
            Error::NonIntegerValency { .. } => "non_integer_valency",
            Error::DuplicateAtoms(..) => "duplicate_atoms",
            Error::InvalidOrder(_) => "invalid_order",
            Error::UnsupportedOrder(_) => "unsupported_order",
            Error::InvalidCycleType(_) => "invalid_cycle_type",
            Error::ComplexClassesWithoutSymmetrization => "complex_classes_without_symmetrization",
            Error::NonIntegerResult(_) => "non_integer_result",
            Error::InvalidFusion(_) => "invalid_fusion",
            Error::EigensolverNoConvergence(_) => "eigensolver_no_convergence",
            Error::DegenerateAtoms(..) => "degenerate_atoms",
            Error::PoleProximity(_) => "pole_proximity",
            Error::InfeasibleParameters(_) => "infeasible_parameters",
            Error::UnknownCatalogName(_) => "unknown_catalog_name",
            Error::BadParams(_) => "bad_params",
            Error::BadParameter(_) => "bad_parameter",
            Error::InconsistentInputs(_) => "inconsistent_inputs",
            Error::NonRealGeneratingClass => "non_real_generating_class",
            Error::DegenerateSpectrumUnmerged(..) => "degenerate_spectrum_unmerged",
            Error::EngineSpecMismatch { .. } => "engine_spec_mismatch",
            Error::TooLarge(_) => "too_large",
            Error::NonSymmetricGeneratingSet => "non_symmetric_generating_set",
            Error::NotDistanceRegular(_) => "not_distance_regular",
            Error::Disconnected => "disconnected",
            Error::NotConstructible(_) => "not_constructible",
            Error::SchemaError { .. } => "schema_error",
            Error::Io(_) => "io_error",
        }
    }
}
