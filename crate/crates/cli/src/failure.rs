use std::fmt;

use ruled_motion::Error;

/// Process exit codes.
pub mod code {
    pub const OK: u8 = 0;
    pub const PARSE: u8 = 1;
    pub const GEOMETRY: u8 = 2;
    pub const NO_SOLUTION: u8 = 3;
    pub const VERIFY: u8 = 4;
    pub const NON_GENERIC: u8 = 5;
    pub const INTERPOLATION: u8 = 6;
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Failure::new(code::PARSE, message)
    }

    pub fn io(path: &str, err: std::io::Error) -> Self {
        Failure::parse(format!("{path}: {err}"))
    }

    /// Input that does not describe a valid geometric object.
    pub fn geometry(err: Error) -> Self {
        Failure::new(code::GEOMETRY, err.to_string())
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NotKinematic | Error::UnsupportedSplitting { .. } | Error::RotationsExhausted => code::NO_SOLUTION,
            Error::VerificationFailure { .. } => code::VERIFY,
            Error::NonGenericFactorization { .. } | Error::Genericity(_) | Error::InvalidFactor(_) => code::NON_GENERIC,
            Error::InterpolationFailure { .. } | Error::DegenerateInput(_) => code::INTERPOLATION,
            Error::UnsupportedMode(_) => code::PARSE,
            _ => code::GEOMETRY,
        };
        Failure::new(code, err.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}
