use thiserror::Error;

/// Errors raised by tallying, decision rules, procedures and the simulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ballot for option {index} but only {options} options exist")]
    InvalidBallot { index: usize, options: usize },

    #[error("{ballots} ballots cast by an electorate of {eligible}")]
    OverVote { ballots: u64, eligible: u64 },

    #[error("tallies are incompatible: {0}")]
    IncompatibleTallies(String),

    #[error("district rules must be decided with decide_districts")]
    WrongDecisionPath,

    #[error("rule needs {expected} options, tally has {found}")]
    RuleArityError { expected: usize, found: usize },

    #[error("no party reaches the entry threshold")]
    NoViableParty,

    #[error("no ballots were cast")]
    EmptyElection,

    #[error("{districts} district tallies for {weights} district weights")]
    DistrictMismatch { districts: usize, weights: usize },

    #[error("invalid rule: {0}")]
    InvalidRule(String),

    #[error("second round scheduled {days_after} days after publication, at least 7 are required")]
    ScheduleTooShort { days_after: u64 },

    #[error("{field}: {message}")]
    BadSpec { field: String, message: String },
}

impl Error {
    pub(crate) fn bad_spec(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::BadSpec {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
