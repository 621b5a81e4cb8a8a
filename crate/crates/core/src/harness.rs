//! Seeded Monte Carlo comparison of procedure variants.
//!
//! Every replication samples one electorate, holds round 1 once, publishes
//! it, and lets every variant consume the same rounds, so cross-variant
//! differences are paired. Random streams are keyed by
//! `(master_seed, rep_index, round, voter_index)`: replication `r` uses
//! `Stream::new(seed).split(r)`, whose child `0` samples the electorate and
//! child `n` drives round `n`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::procedure::{
    self, publish_districts, publish_round, FinalResult, ProcedureVariant, PublishedRound,
};
use crate::rng::Stream;
use crate::rules::{decide, decide_districts, ElectionRule, OptionId, Outcome, Tally};
use crate::scalar::Scalar;
use crate::voters::{
    cast_round, sample_electorate, tally_choices, Choice, ElectorateSpec, Phase, Voter,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub schema_version: u32,
    #[serde(default)]
    pub name: String,
    #[serde(rename = "seed")]
    pub master_seed: u64,
    pub replications: u32,
    /// Variants to compare; the single-round baseline is always added.
    pub variants: Vec<ProcedureVariant>,
    pub electorate: ElectorateSpec,
    pub rule: ElectionRule,
    /// Parameter grid for sweeps: dotted config path to the values it takes.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sweep: BTreeMap<String, Vec<SweepValue>>,
}

/// One value of a sweep axis, kept in the config's own scalar types.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepValue {
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
}

impl std::fmt::Display for SweepValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepValue::Bool(b) => write!(f, "{b}"),
            SweepValue::Int(i) => write!(f, "{i}"),
            SweepValue::Float(x) => write!(f, "{x}"),
            SweepValue::Text(s) => write!(f, "{s}"),
        }
    }
}

impl ScenarioConfig {
    pub fn new(
        electorate: ElectorateSpec,
        rule: ElectionRule,
        variants: Vec<ProcedureVariant>,
        replications: u32,
        master_seed: u64,
    ) -> Self {
        ScenarioConfig {
            schema_version: SCHEMA_VERSION,
            name: String::new(),
            master_seed,
            replications,
            variants,
            electorate,
            rule,
            sweep: BTreeMap::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::bad_spec(
                "schema_version",
                format!(
                    "unsupported version {}, expected {SCHEMA_VERSION}",
                    self.schema_version
                ),
            ));
        }
        if self.replications == 0 {
            return Err(Error::bad_spec("replications", "must be at least 1"));
        }
        if self.variants.is_empty() {
            return Err(Error::bad_spec(
                "variants",
                "at least one variant is required",
            ));
        }
        self.electorate.validate()?;
        let in_rule = |e: Error| match e {
            Error::InvalidRule(m) => {
                let field = match self.rule {
                    ElectionRule::Supermajority { .. } => "rule.quota",
                    _ => "rule",
                };
                Error::bad_spec(field, m)
            }
            Error::RuleArityError { expected, found } => Error::bad_spec(
                "rule",
                format!("rule needs {expected} options, electorate.options is {found}"),
            ),
            other => other,
        };
        self.rule.validate().map_err(in_rule)?;
        self.rule
            .check_arity(self.electorate.options)
            .map_err(in_rule)?;
        if let ElectionRule::Districts { weights } = &self.rule {
            if weights.len() > self.electorate.voters {
                return Err(Error::bad_spec(
                    "rule.weights",
                    "more districts than voters",
                ));
            }
        }
        for (axis, values) in &self.sweep {
            if values.is_empty() {
                return Err(Error::bad_spec(
                    format!("sweep.{axis}"),
                    "needs at least one value",
                ));
            }
        }
        for (i, v) in self.variants.iter().enumerate() {
            let field = format!("variants[{i}]");
            v.validate(&self.rule, self.electorate.options).map_err(|e| match e {
                Error::RuleArityError { .. } if matches!(v, ProcedureVariant::BestOfThree) => {
                    Error::bad_spec(
                        field.clone(),
                        format!(
                            "best_of_three applies only to two-outcome elections, electorate.options is {}",
                            self.electorate.options
                        ),
                    )
                }
                Error::RuleArityError { expected, found } => {
                    Error::bad_spec(field.clone(), format!("needs {expected} options, got {found}"))
                }
                Error::InvalidRule(m) => Error::bad_spec(field.clone(), m),
                other => other,
            })?;
            if self.rule.is_districts()
                && !matches!(
                    v,
                    ProcedureVariant::SingleRound | ProcedureVariant::TwoRoundSum
                )
            {
                return Err(Error::bad_spec(
                    field,
                    "district rules support single_round and two_round_sum only",
                ));
            }
        }
        Ok(())
    }

    /// Baseline first, then the configured variants without duplicates.
    pub fn arms(&self) -> Vec<ProcedureVariant> {
        let mut arms = vec![ProcedureVariant::SingleRound];
        for v in &self.variants {
            if !arms.contains(v) {
                arms.push(v.clone());
            }
        }
        arms
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    pub turnout_r1: f64,
    /// Absent when no second round was held.
    pub turnout_r2: Option<f64>,
    /// Share of the electorate voting in at least one round held.
    pub turnout_union: f64,
    pub matched_benchmark: bool,
    pub wasted_vote_share_r1: Option<f64>,
    pub wasted_vote_share_r2: Option<f64>,
    pub margin_r1: f64,
    pub rounds_held: u8,
    pub tie_broken: bool,
}

/// Metric names in report order.
pub const METRIC_NAMES: [&str; 9] = [
    "turnout_r1",
    "turnout_r2",
    "turnout_union",
    "benchmark_match",
    "margin_r1",
    "rounds_held",
    "tie_broken",
    "wasted_vote_share_r1",
    "wasted_vote_share_r2",
];

impl Metrics {
    pub fn values(&self) -> [Option<f64>; 9] {
        let flag = |b: bool| if b { 1.0 } else { 0.0 };
        [
            Some(self.turnout_r1),
            self.turnout_r2,
            Some(self.turnout_union),
            Some(flag(self.matched_benchmark)),
            Some(self.margin_r1),
            Some(self.rounds_held as f64),
            Some(flag(self.tie_broken)),
            self.wasted_vote_share_r1,
            self.wasted_vote_share_r2,
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VariantRun {
    pub variant: ProcedureVariant,
    pub result: Result<FinalResult>,
    pub metrics: Metrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplicationResult {
    pub rep_index: u64,
    /// Decision under full, sincere participation of the whole electorate.
    pub benchmark_outcome: Result<Outcome>,
    pub variants: Vec<VariantRun>,
}

struct Round {
    choices: Vec<Choice>,
    districts: Vec<Tally>,
    published: PublishedRound,
}

impl Round {
    fn tally(&self) -> &Tally {
        &self.published.tally
    }
}

/// Voter `i` of `n` sits in district `i * d / n`.
fn district_of(i: usize, voters: usize, districts: usize) -> usize {
    i * districts / voters
}

fn district_tallies(choices: &[Choice], options: usize, districts: usize) -> Result<Vec<Tally>> {
    let n = choices.len();
    let mut out = Vec::with_capacity(districts);
    let mut start = 0;
    for d in 0..districts {
        let mut end = start;
        while end < n && district_of(end, n, districts) == d {
            end += 1;
        }
        out.push(tally_choices(&choices[start..end], options)?);
        start = end;
    }
    Ok(out)
}

fn hold_round(
    voters: &[Voter],
    phase: Phase<'_>,
    stream: &Stream,
    rule: &ElectionRule,
    options: usize,
) -> Result<Round> {
    let choices = cast_round(voters, phase, stream);
    let (districts, published) = match rule {
        ElectionRule::Districts { weights } => {
            let d = district_tallies(&choices, options, weights.len())?;
            let p = publish_districts(&d, rule)?;
            (d, p)
        }
        _ => (
            Vec::new(),
            publish_round(&tally_choices(&choices, options)?, rule)?,
        ),
    };
    Ok(Round {
        choices,
        districts,
        published,
    })
}

fn benchmark(voters: &[Voter], rule: &ElectionRule, options: usize) -> Result<Outcome> {
    let sincere: Vec<Choice> = voters.iter().map(|v| Choice::Vote(v.favourite())).collect();
    match rule {
        ElectionRule::Districts { weights } => {
            decide_districts(rule, &district_tallies(&sincere, options, weights.len())?)
        }
        _ => decide(rule, &tally_choices(&sincere, options)?),
    }
}

/// Share of a round's ballots cast for parties below the entry threshold in
/// that same round.
pub fn wasted_vote_share(t: &Tally, entry_threshold: f64) -> f64 {
    if t.is_empty() {
        return 0.0;
    }
    let wasted: u64 = t
        .counts()
        .iter()
        .filter(|&&c| !f64::from_counts(c, t.ballots_cast()).at_least(entry_threshold))
        .sum();
    f64::from_counts(wasted, t.ballots_cast())
}

fn union_turnout(rounds: &[&Round]) -> f64 {
    let n = rounds[0].choices.len();
    let voted = (0..n)
        .filter(|&i| rounds.iter().any(|r| r.choices[i].voted()))
        .count();
    f64::from_counts(voted as u64, n as u64)
}

pub fn run_replication(cfg: &ScenarioConfig, rep_index: u64) -> Result<ReplicationResult> {
    cfg.validate()?;
    replicate(cfg, &cfg.arms(), rep_index)
}

fn replicate(
    cfg: &ScenarioConfig,
    arms: &[ProcedureVariant],
    rep_index: u64,
) -> Result<ReplicationResult> {
    let rule = &cfg.rule;
    let options = cfg.electorate.options;
    let rep = Stream::new(cfg.master_seed).split(rep_index);
    let voters = sample_electorate(&cfg.electorate, &rep.split(0))?;
    let benchmark_outcome = benchmark(&voters, rule, options);

    let max_rounds = arms.iter().map(|a| a.max_rounds()).max().unwrap_or(1);
    let r1 = hold_round(&voters, Phase::Round1, &rep.split(1), rule, options)?;
    let later = |prev: &Round, round: u64| {
        hold_round(
            &voters,
            Phase::Later {
                published: &prev.published,
                rule,
            },
            &rep.split(round),
            rule,
            options,
        )
    };
    let r2 = if max_rounds >= 2 {
        Some(later(&r1, 2)?)
    } else {
        None
    };
    let r3 = match &r2 {
        Some(r2) if max_rounds >= 3 => Some(later(r2, 3)?),
        _ => None,
    };

    let threshold = rule.entry_threshold();
    let mut variants = Vec::with_capacity(arms.len());
    for arm in arms {
        let second = || r2.as_ref().expect("second round held");
        let result = match arm {
            ProcedureVariant::SingleRound => {
                if rule.is_districts() {
                    procedure::run_single_round_districts(&r1.districts, rule)
                } else {
                    procedure::run_single_round(r1.tally(), rule)
                }
            }
            ProcedureVariant::TwoRoundSum => {
                if rule.is_districts() {
                    procedure::run_two_round_sum_districts(&r1.districts, &second().districts, rule)
                } else {
                    procedure::run_two_round_sum(r1.tally(), second().tally(), rule)
                }
            }
            ProcedureVariant::ConditionalSecondRound { margin_threshold } => {
                procedure::run_conditional(
                    r1.tally(),
                    || second().tally().clone(),
                    rule,
                    *margin_threshold,
                )
            }
            ProcedureVariant::BestOfThree => procedure::run_best_of_three(
                r1.tally(),
                second().tally(),
                r3.as_ref().expect("third round held").tally(),
            ),
            ProcedureVariant::WeightedRounds => {
                procedure::run_weighted_rounds(r1.tally(), second().tally(), rule)
            }
        };

        let rounds_held = match (&result, arm) {
            (Ok(r), _) => r.rounds_held,
            (Err(_), ProcedureVariant::ConditionalSecondRound { .. }) => 1,
            (Err(_), a) => a.max_rounds(),
        };
        let mut held: Vec<&Round> = vec![&r1];
        held.extend(r2.iter().take((rounds_held >= 2) as usize));
        held.extend(r3.iter().take((rounds_held >= 3) as usize));

        let metrics = Metrics {
            turnout_r1: r1.published.turnout,
            turnout_r2: held.get(1).map(|r| r.published.turnout),
            turnout_union: union_turnout(&held),
            matched_benchmark: match (&result, &benchmark_outcome) {
                (Ok(r), Ok(b)) => r.outcome == *b,
                _ => false,
            },
            wasted_vote_share_r1: threshold.map(|t| wasted_vote_share(r1.tally(), t)),
            wasted_vote_share_r2: threshold
                .and_then(|t| held.get(1).map(|r| wasted_vote_share(r.tally(), t))),
            margin_r1: r1.published.margin,
            rounds_held,
            tie_broken: result.as_ref().is_ok_and(|r| r.tie_broken),
        };
        variants.push(VariantRun {
            variant: arm.clone(),
            result,
            metrics,
        });
    }
    Ok(ReplicationResult {
        rep_index,
        benchmark_outcome,
        variants,
    })
}

/// All replications in `rep_index` order. `threads` caps parallelism;
/// `None` or `Some(0)` uses every core.
pub fn run_replications(
    cfg: &ScenarioConfig,
    threads: Option<usize>,
) -> Result<Vec<ReplicationResult>> {
    cfg.validate()?;
    let arms = cfg.arms();
    let work = || {
        (0..cfg.replications as u64)
            .into_par_iter()
            .map(|r| replicate(cfg, &arms, r))
            .collect::<Result<Vec<_>>>()
    };
    match threads {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::bad_spec("threads", e.to_string()))?
            .install(work),
        _ => work(),
    }
}

/// Neumaier-compensated sum, accumulated in slice order.
fn compensated_sum(xs: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for x in xs {
        let t = sum + x;
        if f64::abs(sum) >= f64::abs(x) {
            c += (sum - t) + x;
        } else {
            c += (x - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Mean and standard error of the mean.
pub fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = compensated_sum(xs.iter().copied()) / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let ss = compensated_sum(xs.iter().map(|x| (x - mean) * (x - mean)));
    (mean, (ss / (n - 1) as f64 / n as f64).sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricSummary {
    pub name: &'static str,
    pub mean: f64,
    pub stderr: f64,
    /// Replications contributing a value.
    pub samples: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VariantSummary {
    pub variant: ProcedureVariant,
    pub metrics: Vec<MetricSummary>,
    /// Replications in which the variant produced no outcome.
    pub errors: u32,
}

impl VariantSummary {
    pub fn metric(&self, name: &str) -> Option<&MetricSummary> {
        self.metrics.iter().find(|m| m.name == name)
    }

    pub fn benchmark_match_rate(&self) -> f64 {
        self.metric("benchmark_match").map_or(f64::NAN, |m| m.mean)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateReport {
    pub scenario: String,
    pub master_seed: u64,
    pub replications: u32,
    pub variants: Vec<VariantSummary>,
}

/// Reduces replications in `rep_index` order.
pub fn aggregate(cfg: &ScenarioConfig, reps: &[ReplicationResult]) -> AggregateReport {
    let arms = cfg.arms();
    let variants = arms
        .iter()
        .enumerate()
        .map(|(a, arm)| {
            let metrics = METRIC_NAMES
                .iter()
                .enumerate()
                .filter_map(|(m, &name)| {
                    let xs: Vec<f64> = reps
                        .iter()
                        .filter_map(|r| r.variants[a].metrics.values()[m])
                        .collect();
                    if xs.is_empty() {
                        return None;
                    }
                    let (mean, stderr) = mean_and_stderr(&xs);
                    Some(MetricSummary {
                        name,
                        mean,
                        stderr,
                        samples: xs.len() as u32,
                    })
                })
                .collect();
            VariantSummary {
                variant: arm.clone(),
                metrics,
                errors: reps
                    .iter()
                    .filter(|r| r.variants[a].result.is_err())
                    .count() as u32,
            }
        })
        .collect();
    AggregateReport {
        scenario: cfg.name.clone(),
        master_seed: cfg.master_seed,
        replications: reps.len() as u32,
        variants,
    }
}

pub fn run_scenario(cfg: &ScenarioConfig, threads: Option<usize>) -> Result<AggregateReport> {
    Ok(aggregate(cfg, &run_replications(cfg, threads)?))
}

/// Paired difference `variant - baseline` of one metric.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaSummary {
    pub variant: ProcedureVariant,
    pub metric: &'static str,
    pub mean: f64,
    pub stderr: f64,
    pub samples: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub report: AggregateReport,
    pub deltas: Vec<DeltaSummary>,
}

impl Comparison {
    pub fn delta(&self, variant: &ProcedureVariant, metric: &str) -> Option<&DeltaSummary> {
        self.deltas
            .iter()
            .find(|d| d.variant == *variant && d.metric == metric)
    }
}

/// Side-by-side summaries plus paired deltas against the single-round
/// baseline.
pub fn compare_procedures(cfg: &ScenarioConfig, threads: Option<usize>) -> Result<Comparison> {
    let arms = cfg.arms();
    if arms.len() < 2 {
        return Err(Error::bad_spec(
            "variants",
            "comparison needs at least one variant besides single_round",
        ));
    }
    let reps = run_replications(cfg, threads)?;
    let report = aggregate(cfg, &reps);
    let mut deltas = Vec::new();
    for (a, arm) in arms.iter().enumerate().skip(1) {
        for (m, &metric) in METRIC_NAMES.iter().enumerate() {
            let diffs: Vec<f64> = reps
                .iter()
                .filter_map(|r| {
                    let base = r.variants[0].metrics.values()[m]?;
                    let other = r.variants[a].metrics.values()[m]?;
                    Some(other - base)
                })
                .collect();
            if diffs.is_empty() {
                continue;
            }
            let (mean, stderr) = mean_and_stderr(&diffs);
            deltas.push(DeltaSummary {
                variant: arm.clone(),
                metric,
                mean,
                stderr,
                samples: diffs.len() as u32,
            });
        }
    }
    Ok(Comparison { report, deltas })
}

/// Winner of the benchmark, when it has a single one.
pub fn benchmark_winner(r: &ReplicationResult) -> Option<OptionId> {
    r.benchmark_outcome.as_ref().ok().and_then(Outcome::winner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::Apportionment;
    use crate::voters::{Dist, SecondCost, StrategicShare};

    fn cfg(
        electorate: ElectorateSpec,
        rule: ElectionRule,
        variants: Vec<ProcedureVariant>,
    ) -> ScenarioConfig {
        ScenarioConfig::new(electorate, rule, variants, 8, 1234)
    }

    fn all_variants() -> Vec<ProcedureVariant> {
        vec![
            ProcedureVariant::TwoRoundSum,
            ProcedureVariant::ConditionalSecondRound {
                margin_threshold: 0.1,
            },
            ProcedureVariant::BestOfThree,
            ProcedureVariant::WeightedRounds,
        ]
    }

    #[test]
    fn collapse_matches_benchmark() {
        let c = cfg(
            ElectorateSpec::new(301, 2),
            ElectionRule::Plurality,
            all_variants(),
        );
        for r in run_replications(&c, Some(2)).unwrap() {
            for v in &r.variants {
                assert!(v.metrics.matched_benchmark, "{:?}", v.variant);
                assert_eq!(v.metrics.turnout_r1, 1.0);
            }
        }
    }

    #[test]
    fn replication_is_deterministic() {
        let mut e = ElectorateSpec::new(200, 3);
        e.cost_r1 = Dist::Uniform { lo: 0.0, hi: 0.6 };
        e.cost_r2 = SecondCost::Independent(Dist::Uniform { lo: 0.0, hi: 0.6 });
        e.bandwagon = Dist::Fixed(0.2);
        e.closeness = Dist::Fixed(1.0);
        let c = cfg(
            e,
            ElectionRule::Plurality,
            vec![ProcedureVariant::TwoRoundSum],
        );
        assert_eq!(
            run_replication(&c, 3).unwrap(),
            run_replication(&c, 3).unwrap()
        );
        assert_ne!(
            run_replication(&c, 3).unwrap(),
            run_replication(&c, 4).unwrap()
        );
    }

    #[test]
    fn compulsory_turnout_is_full() {
        let mut e = ElectorateSpec::new(100, 3);
        e.cost_r1 = Dist::Fixed(0.9);
        e.compulsory = true;
        let c = cfg(
            e,
            ElectionRule::Plurality,
            vec![ProcedureVariant::TwoRoundSum],
        );
        let r = run_replication(&c, 0).unwrap();
        let m = &r.variants[1].metrics;
        assert_eq!(
            (m.turnout_r1, m.turnout_r2, m.turnout_union),
            (1.0, Some(1.0), 1.0)
        );
    }

    #[test]
    fn single_replication_has_zero_stderr() {
        let mut e = ElectorateSpec::new(50, 3);
        e.cost_r1 = Dist::Uniform { lo: 0.0, hi: 0.5 };
        let mut c = cfg(
            e,
            ElectionRule::Plurality,
            vec![ProcedureVariant::TwoRoundSum],
        );
        c.replications = 1;
        let reps = run_replications(&c, None).unwrap();
        let report = aggregate(&c, &reps);
        for (v, run) in report.variants.iter().zip(&reps[0].variants) {
            for (m, value) in v
                .metrics
                .iter()
                .zip(run.metrics.values().into_iter().flatten())
            {
                assert_eq!(m.stderr, 0.0);
                assert_eq!(m.mean, value);
            }
        }
    }

    #[test]
    fn more_replications_extend_the_prefix() {
        let mut e = ElectorateSpec::new(60, 3);
        e.cost_r1 = Dist::Uniform { lo: 0.0, hi: 0.5 };
        let c = cfg(
            e,
            ElectionRule::Plurality,
            vec![ProcedureVariant::TwoRoundSum],
        );
        let mut c2 = c.clone();
        c2.replications *= 2;
        let a = run_replications(&c, None).unwrap();
        let b = run_replications(&c2, None).unwrap();
        assert_eq!(a[..], b[..a.len()]);
    }

    #[test]
    fn districts_run_end_to_end() {
        let mut e = ElectorateSpec::new(99, 2);
        e.compulsory = true;
        let rule = ElectionRule::Districts {
            weights: vec![5, 3, 2],
        };
        let c = cfg(e, rule, vec![ProcedureVariant::TwoRoundSum]);
        for r in run_replications(&c, None).unwrap() {
            assert!(r.variants.iter().all(|v| v.metrics.matched_benchmark));
        }
        assert_eq!(district_of(0, 99, 3), 0);
        assert_eq!(district_of(98, 99, 3), 2);
    }

    #[test]
    fn parliamentary_reports_wasted_votes() {
        let mut e = ElectorateSpec::new(400, 5);
        e.viability_strategic = StrategicShare(1.0);
        let rule = ElectionRule::Parliamentary {
            entry_threshold: 0.22,
            seats: 20,
            apportionment: Apportionment::HighestAverages,
        };
        let c = cfg(e, rule, vec![ProcedureVariant::TwoRoundSum]);
        let report = run_scenario(&c, None).unwrap();
        let two = &report.variants[1];
        assert!(
            two.metric("wasted_vote_share_r2").unwrap().mean
                <= two.metric("wasted_vote_share_r1").unwrap().mean
        );
        assert!(report.variants[0].metric("wasted_vote_share_r2").is_none());
    }

    #[test]
    fn validation_paths() {
        let c = cfg(
            ElectorateSpec::new(10, 3),
            ElectionRule::Plurality,
            vec![ProcedureVariant::BestOfThree],
        );
        assert!(
            matches!(c.validate(), Err(Error::BadSpec { field, .. }) if field == "variants[0]")
        );
        let c = cfg(
            ElectorateSpec::new(10, 3),
            ElectionRule::Supermajority { quota: 0.7 },
            vec![ProcedureVariant::TwoRoundSum],
        );
        assert!(matches!(c.validate(), Err(Error::BadSpec { field, .. }) if field == "rule"));
        let mut c = cfg(ElectorateSpec::new(10, 2), ElectionRule::Plurality, vec![]);
        assert!(c.validate().is_err());
        c.variants = vec![ProcedureVariant::TwoRoundSum];
        c.replications = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn stderr_formula() {
        let (m, se) = mean_and_stderr(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        // sample variance 5/3, se = sqrt(5/3/4)
        assert!((se - (5.0f64 / 12.0).sqrt()).abs() < 1e-15);
        assert_eq!(compensated_sum([1e16, 1.0, -1e16]), 1.0);
    }
}
