use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("p = {p} must be a prime greater than the Coxeter number {h}")]
    PrimeTooSmall { p: u64, h: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not in the fundamental alcove")]
    NotInAlcove(String),
    #[error("not a non-negative Weyl-string decomposition (residual at weight {weight} went negative)")]
    NotWeylDecomposable { weight: i64 },
    #[error("character not realizable as tilting image (unmatched Weyl factor {index} in Ver_{p})")]
    NotRealizable { index: u64, p: u64 },
    #[error("degree {degree} out of validity range 1..={max}")]
    DegreeOutOfRange { degree: u64, max: u64 },
    #[error("the zero object has no power profile")]
    ZeroObject,
    #[error("index {index} out of range (must be at most {max})")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("empty summation range for S({n},{i},{j},{k})")]
    EmptySummation { n: u64, i: u64, j: u64, k: u64 },
    #[error("mask {0} matches none of the subalgebra families")]
    Unclassifiable(String),
    #[error("identity `{identity}` failed at {point}")]
    IdentityFailed { identity: String, point: String },
    #[error("character has weights of both parities; cyclotomic solve is ambiguous")]
    MixedParity,
    #[error("cyclotomic value is not a combination of simple Ver_p characters")]
    CyclotomicMismatch,
    #[error("pair cancellation and cyclotomic solve disagree")]
    OracleDisagreement,
    #[error("negative fusion multiplicity {value} at {weight}")]
    NegativeMultiplicity { weight: String, value: i64 },
    #[error("straightening did not terminate within {0} reflections")]
    NonTermination(usize),
    #[error("reflection index {index} out of range for rank {rank}")]
    MalformedWord { index: usize, rank: usize },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}
