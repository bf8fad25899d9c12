use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::exactla::Field, crate::exactla::Field),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("malformed structure: {0}")]
    MalformedStructure(String),
    #[error("Hopf axioms fail: {0}")]
    AxiomFailure(String),
    #[error("not a Hopf morphism: {0}")]
    NotAHopfMorphism(String),
    #[error("not a coalgebra map: {0}")]
    NotACoalgebraMap(String),
    #[error("map is not convolution invertible")]
    NotInvertible,
    #[error("morphism does not factor through the quotient")]
    DoesNotFactor,
    #[error("subalgebra is not normal")]
    NotNormal,
    #[error("subspace is not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),
    #[error("invalid measuring: {0}")]
    InvalidMeasuring(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("not a twisted module: {0}")]
    NotTwistedModule(String),
    #[error("map is not a section of the projection")]
    NotASection,
    #[error("section is not a coalgebra map")]
    SectionNotCoalgebra,
    #[error("crossed-product data leaves the Hopf kernel")]
    ValuesEscapeKernel,
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("morphism has no coalgebra section (not in class E)")]
    NotInE,
    #[error("group order {order} exceeds bound {max}")]
    OrderBound { order: usize, max: usize },
    #[error("set map is not a section of the group surjection")]
    NotASetSection,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("sequence maps are not composable: {0}")]
    NotComposable(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
