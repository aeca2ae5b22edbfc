use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A map does not preserve a subspace it was asked to act on.
    #[error("map does not preserve the given subspace: {0}")]
    Stability(String),

    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The h-eigenspaces of an sl2-module do not fill the module.
    #[error("non-integral or non-semisimple weights: eigenspaces cover {covered} of {dim} dimensions")]
    NonIntegralWeight { covered: usize, dim: usize },

    #[error("d∘d ≠ 0 in degree {degree}")]
    Complex { degree: usize },

    /// A higher differential d_r: E^{p,q} → E^{p+r,q-r+1} may be nonzero.
    #[error("spectral sequence collapse not certified: d_{r} from E^{{{p},{q}}} may be nonzero")]
    CollapseNotCertified { r: usize, p: usize, q: usize },

    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid input: {0}")]
    Input(String),
}
