use std::fmt;

use hnnlin::exact::ExactError;
use hnnlin::linearize::LinearizeError;
use hnnlin::spectra::SpectraError;
use hnnlin::unittorus::UnitTorusError;
use hnnlin::words::WordsError;

/// Input problems exit with 2, failures during a computation with 1.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Computation(_) => 1,
        }
    }

    pub fn validation(field: &str, reason: impl fmt::Display) -> Self {
        CliError::Validation(format!("{field}: {reason}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
            CliError::Computation(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<WordsError> for CliError {
    fn from(e: WordsError) -> Self {
        match e {
            WordsError::NoWitness | WordsError::Exact(_) => CliError::Computation(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<LinearizeError> for CliError {
    fn from(e: LinearizeError) -> Self {
        match e {
            LinearizeError::Words(w) => w.into(),
            LinearizeError::Exact(x) => x.into(),
            LinearizeError::InvalidSpec { .. } => CliError::Validation(e.to_string()),
            _ => CliError::Validation(format!("spec: {e}")),
        }
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Singular => CliError::Computation(e.to_string()),
            _ => CliError::validation("matrix", e),
        }
    }
}

impl From<UnitTorusError> for CliError {
    fn from(e: UnitTorusError) -> Self {
        match e {
            UnitTorusError::PerfectSquare(_) | UnitTorusError::NotSquarefree(_) => CliError::validation("m", e),
            _ => CliError::Computation(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(SpectraError::Singular).exit_code(), 1);
        assert_eq!(CliError::from(SpectraError::NotSquare { rows: 1, cols: 2 }).exit_code(), 2);
        assert_eq!(CliError::from(UnitTorusError::PerfectSquare(4)).exit_code(), 2);
        assert_eq!(CliError::from(LinearizeError::AmalgamMismatch).exit_code(), 2);
        assert_eq!(CliError::from(LinearizeError::Exact(ExactError::Singular)).exit_code(), 1);
        assert_eq!(CliError::from(WordsError::NoWitness).exit_code(), 1);
    }
}
