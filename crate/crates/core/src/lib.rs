//! Repeat voting: an election held in two identical rounds, with round 1
//! counted and published before round 2 and the final result decided by the
//! ordinary rule applied to the votes of both rounds added together.
//!
//! - [`rules`]: tallies and the wrapped decision rules (plurality,
//!   supermajority, parliamentary threshold with apportionment, districts).
//! - [`procedure`]: the two-round procedure and its variants.
//! - [`voters`]: the agent-based electorate.
//! - [`harness`]: seeded Monte Carlo comparison of variants.
//!
//! Shares and thresholds are generic over [`Scalar`]; the aliases below
//! fix the common choices.

pub mod error;
pub mod harness;
pub mod procedure;
pub mod rng;
pub mod rules;
pub mod scalar;
pub mod voters;

pub use error::{Error, Result};
pub use harness::{
    aggregate, compare_procedures, run_replication, run_replications, run_scenario,
    AggregateReport, Comparison, ReplicationResult, ScenarioConfig, SweepValue,
};
pub use procedure::{FinalResult, ProcedureVariant, PublishedRound};
pub use rng::Stream;
pub use rules::{Apportionment, ElectionRule, OptionId, Outcome, Tally};
pub use scalar::{Rational, Scalar};
pub use voters::{ElectorateSpec, Voter};

pub type Rule64 = ElectionRule<f64>;
pub type Rule32 = ElectionRule<f32>;
pub type ExactRule = ElectionRule<Rational>;

pub type PublishedRound64 = PublishedRound<f64>;
pub type ExactPublishedRound = PublishedRound<Rational>;

pub type FinalResult64 = FinalResult<f64>;
pub type ExactFinalResult = FinalResult<Rational>;

pub type Variant64 = ProcedureVariant<f64>;
pub type ExactVariant = ProcedureVariant<Rational>;
