use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the algebra and synthesis pipelines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The operation is only defined for exact rational coefficients.
    UnsupportedMode(&'static str),
    DivisionByZero,
    /// A documented precondition of the called operation does not hold.
    Precondition(&'static str),
    /// A line polynomial has a nonvanishing scalar part.
    NotVectorial,
    /// `L_p conj(L_d) + L_d conj(L_p)` does not vanish.
    PluckerViolation,
    /// Zero primal part, zero direction, or a similar degenerate object.
    Degenerate(&'static str),
    /// The norm polynomial of the ruled surface is not a square.
    NotKinematic,
    /// An odd-multiplicity factor of the primal content has real and
    /// non-real roots and does not split over the rationals. `approx_real`
    /// holds the ascending coefficients of a floating point approximation of
    /// its real-rooted part.
    UnsupportedSplitting { factor: String, approx_real: Vec<f64> },
    /// `q3 = 0`, `m3 = 0` or `gcd(q0, q3) != 1`; the caller must rotate.
    Genericity(&'static str),
    /// An exact division or constancy assertion failed inside a pipeline.
    Internal(&'static str),
    InvalidInput(&'static str),
    /// No rotation of the schedule made the construction generic.
    RotationsExhausted,
    /// Free translation polynomial exceeds the degree bound of the family.
    FamilyBound { allowed: usize, got: usize },
    /// The motion does not produce a multiple of the line.
    VerificationFailure { residual: f64 },
    /// Motion factorization hit a non-invertible leading coefficient.
    NonGenericFactorization { step: usize },
    InvalidFactor(&'static str),
    /// `C conj(C)` vanishes at the requested parameter.
    SingularParameter,
    /// A linear solve in three-line interpolation was rank deficient or
    /// left a residual above tolerance.
    InterpolationFailure { stage: &'static str, rank: usize, residual: f64 },
    DegenerateInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedMode(op) => write!(f, "{op} requires exact rational arithmetic"),
            Error::DivisionByZero => f.write_str("division by the zero polynomial"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::NotVectorial => f.write_str("line polynomial has a nonzero scalar part"),
            Error::PluckerViolation => f.write_str("Plücker condition does not hold"),
            Error::Degenerate(what) => write!(f, "degenerate input: {what}"),
            Error::NotKinematic => f.write_str(
                "no rational motion exists: the norm of the primal part is not a square \
                 (the spherical image is not rational for this parametrization)",
            ),
            Error::UnsupportedSplitting { factor, .. } => write!(
                f,
                "odd-multiplicity factor {factor} mixes real and non-real roots and does not split over Q"
            ),
            Error::Genericity(what) => write!(f, "non-generic coordinates: {what}"),
            Error::Internal(what) => write!(f, "internal consistency check failed: {what}"),
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
            Error::RotationsExhausted => f.write_str("all coordinate rotations exhausted"),
            Error::FamilyBound { allowed, got } => write!(
                f,
                "translation polynomial of degree {got} exceeds the family bound {allowed}"
            ),
            Error::VerificationFailure { residual } => {
                write!(f, "motion does not generate the line polynomial (residual {residual:e})")
            }
            Error::NonGenericFactorization { step } => {
                write!(f, "non-generic factorization at step {step}")
            }
            Error::InvalidFactor(what) => write!(f, "invalid factor: {what}"),
            Error::SingularParameter => f.write_str("norm of the motion vanishes at this parameter"),
            Error::InterpolationFailure { stage, rank, residual } => write!(
                f,
                "interpolation failed in {stage}: rank {rank}, residual {residual:e}"
            ),
            Error::DegenerateInput(what) => write!(f, "degenerate interpolation data: {what}"),
        }
    }
}

impl core::error::Error for Error {}
