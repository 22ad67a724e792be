use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("field size not prime: {0}")]
    FieldNotPrime(u64),
    #[error("variable eliminated by degree-1 relation `{0}`")]
    DegreeOneRelation(String),
    #[error("infinite dimensional without truncate: variable `{0}` has no pure-power relation")]
    InfiniteDimensional(String),
    #[error("dimension exceeds configured limit ({limit})")]
    DimensionLimit { limit: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not a unit multiple of a power of the generator")]
    NotExpressible,
    #[error("ideal is not proper")]
    NotProper,
    #[error("ideal is not semisimple: the maximal ideal does not annihilate it")]
    NotSemisimple,
    #[error("no exponent n with x^n + l in the ideal")]
    NoSuchExponent,
    #[error("witness decomposition invalid: {0}")]
    WitnessInvalid(String),
    #[error("decomposition not verified")]
    DecompositionNotVerified,
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("search space exceeded: {0}")]
    SearchSpaceExceeded(String),
    #[error("infeasible size: {0}")]
    InfeasibleSize(String),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("factor {0} undecided")]
    FactorUndecided(usize),
    #[error("no witness decomposition")]
    NoWitness,
    #[error("ring not DSC")]
    NotDsc,
    #[error("corpus: {0}")]
    Corpus(String),
}
