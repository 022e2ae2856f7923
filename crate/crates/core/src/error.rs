use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("moduli are not pairwise coprime")]
    NonCoprimeModuli,
    #[error("empty input")]
    EmptyInput,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("operands carry different moduli")]
    ModulusMismatch,
    #[error("parameter exceeds the configured bound")]
    BoundExceeded,
    #[error("closure exceeded {0} elements")]
    ClosureBoundExceeded(usize),
    #[error("{0} does not divide {1}")]
    NotADivisor(u64, u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("l must divide N")]
    DivisibilityViolated,
    #[error("matrix is not in S(Nl, N)")]
    NotInSubgroup,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map is not a homomorphism")]
    NotAHomomorphism,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("derivative vanishes identically")]
    ZeroDerivative,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("leading coefficient of theta vanishes")]
    ZeroLeadingCoefficient,
    #[error("separable radical has degree {observed}, expected {expected}")]
    RadicalDegreeMismatch { expected: usize, observed: usize },
    #[error("theta does not match the Frobenius twist of the radical")]
    TwistMismatch,
    #[error("discriminant vanishes")]
    ZeroDiscriminant,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("j-invariant is 0, 1728 or not supersingular")]
    BadJInvariant,
    #[error("4A^3 + 27B^2 is not a square")]
    DiscriminantNotSquare,
    #[error("beta must be nonzero")]
    BetaZero,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible rings")]
    RingMismatch,
}
