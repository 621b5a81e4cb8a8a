//! The repeat-voting procedure and its variants.
//!
//! Two identical rounds are held, round 1 is counted and published, and the
//! final result applies the ordinary election rule to the summed votes. The
//! variants are: a second round held only when round 1 is close, a
//! best-of-three for two-option votes, and averaging the rounds' vote shares
//! instead of their counts.

use std::time::{Duration, SystemTime};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rules::{
    self, add_tallies, decide, decide_districts, merge_districts, plurality, ElectionRule,
    OptionId, Outcome, Tally,
};
use crate::scalar::Scalar;

/// Weighted rounds under a parliamentary rule apportion seats from combined
/// shares multiplied by this factor and rounded.
pub const PSEUDO_COUNT_SCALE: u64 = 1_000_000;

const MIN_PUBLICATION_GAP: Duration = Duration::from_secs(7 * 24 * 3600);

/// Publication time of a round and the date of the round that follows it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundSchedule {
    published_at: SystemTime,
    next_round_at: SystemTime,
}

impl RoundSchedule {
    /// The next round must be at least one week after publication.
    pub fn new(published_at: SystemTime, next_round_at: SystemTime) -> Result<Self> {
        let gap = next_round_at
            .duration_since(published_at)
            .unwrap_or(Duration::ZERO);
        if gap < MIN_PUBLICATION_GAP {
            return Err(Error::ScheduleTooShort {
                days_after: gap.as_secs() / 86_400,
            });
        }
        Ok(RoundSchedule {
            published_at,
            next_round_at,
        })
    }

    pub fn published_at(&self) -> SystemTime {
        self.published_at
    }

    pub fn next_round_at(&self) -> SystemTime {
        self.next_round_at
    }
}

/// The officially counted result of one round.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedRound<S = f64> {
    /// Nationwide tally.
    pub tally: Tally,
    /// Per-district tallies; empty unless the rule is a district rule.
    pub districts: Vec<Tally>,
    pub shares: Vec<S>,
    pub turnout: S,
    /// Zero for a round in which nobody voted.
    pub margin: S,
    /// What the rule would decide if this round stood alone.
    pub provisional_outcome: Result<Outcome>,
    pub schedule: Option<RoundSchedule>,
}

impl<S: Scalar> PublishedRound<S> {
    pub fn with_schedule(mut self, schedule: RoundSchedule) -> Self {
        self.schedule = Some(schedule);
        self
    }
}

fn empty_tolerant_margin<S: Scalar>(t: &Tally) -> S {
    rules::margin(t).unwrap_or_else(|_| S::zero())
}

pub fn publish_round<S: Scalar>(t: &Tally, rule: &ElectionRule<S>) -> Result<PublishedRound<S>> {
    if rule.is_districts() {
        return Err(Error::WrongDecisionPath);
    }
    rule.check_arity(t.options())?;
    Ok(PublishedRound {
        tally: t.clone(),
        districts: Vec::new(),
        shares: t.shares(),
        turnout: t.turnout(),
        margin: empty_tolerant_margin(t),
        provisional_outcome: decide(rule, t),
        schedule: None,
    })
}

pub fn publish_districts<S: Scalar>(
    per_district: &[Tally],
    rule: &ElectionRule<S>,
) -> Result<PublishedRound<S>> {
    let provisional = decide_districts(rule, per_district)?;
    let t = merge_districts(per_district)?;
    Ok(PublishedRound {
        shares: t.shares(),
        turnout: t.turnout(),
        margin: empty_tolerant_margin(&t),
        tally: t,
        districts: per_district.to_vec(),
        provisional_outcome: Ok(provisional),
        schedule: None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProcedureVariant<S = f64> {
    /// Ordinary one-round election; the comparison baseline.
    SingleRound,
    /// Two rounds, votes added.
    TwoRoundSum,
    /// Round 2 only when the round-1 margin is below the threshold.
    ConditionalSecondRound { margin_threshold: S },
    /// Three rounds of a two-option vote; the winner must take two.
    BestOfThree,
    /// Two rounds, vote shares averaged.
    WeightedRounds,
}

impl<S: Scalar> ProcedureVariant<S> {
    pub fn name(&self) -> String {
        match self {
            ProcedureVariant::SingleRound => "single_round".into(),
            ProcedureVariant::TwoRoundSum => "two_round_sum".into(),
            ProcedureVariant::ConditionalSecondRound { margin_threshold } => {
                format!("conditional_second_round({})", margin_threshold.to_f64())
            }
            ProcedureVariant::BestOfThree => "best_of_three".into(),
            ProcedureVariant::WeightedRounds => "weighted_rounds".into(),
        }
    }

    /// Checks the variant can run under `rule` with `options` options.
    pub fn validate(&self, rule: &ElectionRule<S>, options: usize) -> Result<()> {
        match self {
            ProcedureVariant::SingleRound | ProcedureVariant::TwoRoundSum => Ok(()),
            ProcedureVariant::ConditionalSecondRound { margin_threshold } => {
                if *margin_threshold < S::zero() || *margin_threshold > S::one() {
                    return Err(Error::InvalidRule(
                        "margin_threshold must lie in [0, 1]".into(),
                    ));
                }
                match rule {
                    ElectionRule::Plurality | ElectionRule::Supermajority { .. } => Ok(()),
                    _ => Err(Error::InvalidRule(
                        "a conditional second round needs a plurality or supermajority rule".into(),
                    )),
                }
            }
            ProcedureVariant::BestOfThree => {
                if options != 2 {
                    return Err(Error::RuleArityError {
                        expected: 2,
                        found: options,
                    });
                }
                match rule {
                    ElectionRule::Plurality => Ok(()),
                    _ => Err(Error::InvalidRule(
                        "best of three is decided round by round with plurality".into(),
                    )),
                }
            }
            ProcedureVariant::WeightedRounds => {
                if rule.is_districts() {
                    Err(Error::InvalidRule(
                        "weighted rounds do not apply to district rules".into(),
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Rounds the variant can hold at most.
    pub fn max_rounds(&self) -> u8 {
        match self {
            ProcedureVariant::SingleRound => 1,
            ProcedureVariant::BestOfThree => 3,
            _ => 2,
        }
    }
}

/// What the final decision was computed from.
#[derive(Debug, Clone, PartialEq)]
pub enum Combined<S = f64> {
    Tally(Tally),
    Districts(Vec<Tally>),
    Shares(Vec<S>),
    RoundWinners(Vec<OptionId>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FinalResult<S = f64> {
    pub outcome: Outcome,
    pub combined: Combined<S>,
    pub rounds_held: u8,
    pub published: Vec<PublishedRound<S>>,
    /// A per-round tie was broken toward the lowest option.
    pub tie_broken: bool,
}

pub fn run_single_round<S: Scalar>(t: &Tally, rule: &ElectionRule<S>) -> Result<FinalResult<S>> {
    let published = publish_round(t, rule)?;
    Ok(FinalResult {
        outcome: published.provisional_outcome.clone()?,
        combined: Combined::Tally(t.clone()),
        rounds_held: 1,
        published: vec![published],
        tie_broken: false,
    })
}

pub fn run_two_round_sum<S: Scalar>(
    t1: &Tally,
    t2: &Tally,
    rule: &ElectionRule<S>,
) -> Result<FinalResult<S>> {
    let total = add_tallies(t1, t2)?;
    let outcome = decide(rule, &total)?;
    Ok(FinalResult {
        outcome,
        combined: Combined::Tally(total),
        rounds_held: 2,
        published: vec![publish_round(t1, rule)?, publish_round(t2, rule)?],
        tie_broken: false,
    })
}

pub fn run_single_round_districts<S: Scalar>(
    d1: &[Tally],
    rule: &ElectionRule<S>,
) -> Result<FinalResult<S>> {
    let published = publish_districts(d1, rule)?;
    Ok(FinalResult {
        outcome: published.provisional_outcome.clone()?,
        combined: Combined::Districts(d1.to_vec()),
        rounds_held: 1,
        published: vec![published],
        tie_broken: false,
    })
}

/// Summed rounds under an electoral college: each district adds its two
/// rounds before the district is decided.
pub fn run_two_round_sum_districts<S: Scalar>(
    d1: &[Tally],
    d2: &[Tally],
    rule: &ElectionRule<S>,
) -> Result<FinalResult<S>> {
    if d1.len() != d2.len() {
        return Err(Error::IncompatibleTallies(format!(
            "{} districts vs {}",
            d1.len(),
            d2.len()
        )));
    }
    let total = d1
        .iter()
        .zip(d2)
        .map(|(a, b)| add_tallies(a, b))
        .collect::<Result<Vec<_>>>()?;
    let outcome = decide_districts(rule, &total)?;
    Ok(FinalResult {
        outcome,
        combined: Combined::Districts(total),
        rounds_held: 2,
        published: vec![publish_districts(d1, rule)?, publish_districts(d2, rule)?],
        tie_broken: false,
    })
}

/// Holds round 2 only when round 1 was close.
///
/// `round2` is called at most once, and only when the round-1 margin is
/// strictly below `margin_threshold`.
pub fn run_conditional<S: Scalar, F>(
    t1: &Tally,
    round2: F,
    rule: &ElectionRule<S>,
    margin_threshold: S,
) -> Result<FinalResult<S>>
where
    F: FnOnce() -> Tally,
{
    ProcedureVariant::ConditionalSecondRound { margin_threshold }.validate(rule, t1.options())?;
    let m: S = rules::margin(t1)?;
    if m.at_least(margin_threshold) {
        run_single_round(t1, rule)
    } else {
        run_two_round_sum(t1, &round2(), rule)
    }
}

pub fn run_best_of_three<S: Scalar>(t1: &Tally, t2: &Tally, t3: &Tally) -> Result<FinalResult<S>> {
    let rule = ElectionRule::<S>::Plurality;
    let mut winners = Vec::with_capacity(3);
    let mut published = Vec::with_capacity(3);
    let mut tie_broken = false;
    for t in [t1, t2, t3] {
        if t.options() != 2 {
            return Err(Error::RuleArityError {
                expected: 2,
                found: t.options(),
            });
        }
        let winner = match plurality(t) {
            Outcome::Winner(w) => w,
            _ => {
                tie_broken = true;
                OptionId(0)
            }
        };
        winners.push(winner);
        published.push(publish_round(t, &rule)?);
    }
    let wins_of_zero = winners.iter().filter(|w| w.0 == 0).count();
    let outcome = Outcome::Winner(OptionId(if wins_of_zero >= 2 { 0 } else { 1 }));
    Ok(FinalResult {
        outcome,
        combined: Combined::RoundWinners(winners),
        rounds_held: 3,
        published,
        tie_broken,
    })
}

/// `(share_1[k] + share_2[k]) / 2` for every option.
pub fn averaged_shares<S: Scalar>(t1: &Tally, t2: &Tally) -> Result<Vec<S>> {
    if t1.options() != t2.options() {
        return Err(Error::IncompatibleTallies(format!(
            "{} options vs {}",
            t1.options(),
            t2.options()
        )));
    }
    if t1.is_empty() || t2.is_empty() {
        return Err(Error::EmptyElection);
    }
    let two = S::one() + S::one();
    Ok(t1
        .shares::<S>()
        .into_iter()
        .zip(t2.shares::<S>())
        .map(|(a, b)| (a + b) / two)
        .collect())
}

/// Averages the rounds' vote shares, which weights each ballot inversely to
/// its round's turnout, and applies the rule to the averaged shares.
pub fn run_weighted_rounds<S: Scalar>(
    t1: &Tally,
    t2: &Tally,
    rule: &ElectionRule<S>,
) -> Result<FinalResult<S>> {
    add_tallies(t1, t2)?;
    rule.check_arity(t1.options())?;
    let shares = averaged_shares::<S>(t1, t2)?;
    let outcome = match rule {
        ElectionRule::Plurality => {
            let top = shares
                .iter()
                .copied()
                .fold(S::zero(), |m, s| if s > m { s } else { m });
            let leaders: Vec<OptionId> = shares
                .iter()
                .enumerate()
                .filter(|&(_, s)| s.approx_eq(top))
                .map(|(k, _)| OptionId(k))
                .collect();
            if leaders.len() == 1 {
                Outcome::Winner(leaders[0])
            } else {
                Outcome::Tie(leaders)
            }
        }
        ElectionRule::Supermajority { quota } => {
            if shares[0].at_least(*quota) {
                Outcome::Passed
            } else {
                Outcome::Failed
            }
        }
        ElectionRule::Parliamentary {
            entry_threshold,
            seats,
            apportionment,
        } => {
            let scale = S::from_counts(PSEUDO_COUNT_SCALE, 1);
            let pseudo: Vec<u64> = shares
                .iter()
                .map(|s| {
                    if s.at_least(*entry_threshold) {
                        (*s * scale).round_to_u64()
                    } else {
                        0
                    }
                })
                .collect();
            if pseudo.iter().all(|&c| c == 0) {
                return Err(Error::NoViableParty);
            }
            let total = pseudo.iter().sum();
            let t = Tally::new(pseudo, total)?;
            Outcome::Seats(rules::allocate_seats(
                &t,
                S::zero(),
                *seats,
                *apportionment,
            )?)
        }
        ElectionRule::Districts { .. } => return Err(Error::WrongDecisionPath),
    };
    Ok(FinalResult {
        outcome,
        combined: Combined::Shares(shares),
        rounds_held: 2,
        published: vec![publish_round(t1, rule)?, publish_round(t2, rule)?],
        tie_broken: false,
    })
}

// Config files spell a variant either as a bare name or as a table.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VariantRepr<S> {
    Name(String),
    Table {
        kind: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        margin_threshold: Option<S>,
    },
}

impl<S: Scalar> TryFrom<VariantRepr<S>> for ProcedureVariant<S> {
    type Error = String;

    fn try_from(repr: VariantRepr<S>) -> std::result::Result<Self, String> {
        let (kind, threshold) = match repr {
            VariantRepr::Name(kind) => (kind, None),
            VariantRepr::Table {
                kind,
                margin_threshold,
            } => (kind, margin_threshold),
        };
        match (kind.as_str(), threshold) {
            ("single_round", None) => Ok(ProcedureVariant::SingleRound),
            ("two_round_sum", None) => Ok(ProcedureVariant::TwoRoundSum),
            ("best_of_three", None) => Ok(ProcedureVariant::BestOfThree),
            ("weighted_rounds", None) => Ok(ProcedureVariant::WeightedRounds),
            ("conditional_second_round", Some(margin_threshold)) => {
                Ok(ProcedureVariant::ConditionalSecondRound { margin_threshold })
            }
            ("conditional_second_round", None) => {
                Err("conditional_second_round needs a margin_threshold".into())
            }
            (other, Some(_)) if other != "conditional_second_round" => {
                Err(format!("variant {other} takes no margin_threshold"))
            }
            (other, _) => Err(format!("unknown variant {other:?}")),
        }
    }
}

impl<S: Scalar> From<ProcedureVariant<S>> for VariantRepr<S> {
    fn from(v: ProcedureVariant<S>) -> Self {
        match v {
            ProcedureVariant::ConditionalSecondRound { margin_threshold } => VariantRepr::Table {
                kind: "conditional_second_round".into(),
                margin_threshold: Some(margin_threshold),
            },
            other => VariantRepr::Name(other.name()),
        }
    }
}

impl<S: Scalar + Serialize> Serialize for ProcedureVariant<S> {
    fn serialize<Ser: serde::Serializer>(
        &self,
        serializer: Ser,
    ) -> std::result::Result<Ser::Ok, Ser::Error> {
        VariantRepr::from(self.clone()).serialize(serializer)
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for ProcedureVariant<S> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = VariantRepr::<S>::deserialize(deserializer)?;
        ProcedureVariant::try_from(repr).map_err(serde::de::Error::custom)
    }
}
