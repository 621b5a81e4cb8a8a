//! Agent-based electorate.
//!
//! A voter turns out when the gap between their two favourite options (their
//! intensity) covers their participation cost. In round 2 the stake is
//! scaled up by how close round 1 was, and the published round-1 result can
//! move the choice: viability-strategic voters abandon parties that fell
//! below the entry threshold, and bandwagon/underdog voters switch to the
//! round-1 leader or runner-up.
//!
//! Sampling draws from one substream per voter, in this order: preferences
//! (uniform: one draw per option; polarized: camp, then one draw per option;
//! spatial: position), `cost_r1`, `cost_r2`, `bandwagon`, `underdog`,
//! `closeness`, `viability_strategic`. Every attribute consumes exactly one
//! draw, fixed values included. A round-2 decision draws the bandwagon
//! number first and the underdog number second.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::procedure::PublishedRound;
use crate::rng::Stream;
use crate::rules::{leader_and_runner_up, tally_ballots, ElectionRule, OptionId, Tally};
use crate::scalar::Scalar;

/// One-parameter family of distributions for voter attributes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "DistRepr", into = "DistRepr")]
pub enum Dist {
    Fixed(f64),
    Uniform {
        lo: f64,
        hi: f64,
    },
    /// `high` with probability `p_high`, otherwise `low`.
    Bimodal {
        low: f64,
        high: f64,
        p_high: f64,
    },
}

impl Default for Dist {
    fn default() -> Self {
        Dist::Fixed(0.0)
    }
}

impl Dist {
    pub fn sample(&self, s: &mut Stream) -> f64 {
        let u = s.next_f64();
        match *self {
            Dist::Fixed(v) => v,
            Dist::Uniform { lo, hi } => lo + (hi - lo) * u,
            Dist::Bimodal { low, high, p_high } => {
                if u < p_high {
                    high
                } else {
                    low
                }
            }
        }
    }

    fn support(&self) -> (f64, f64) {
        match *self {
            Dist::Fixed(v) => (v, v),
            Dist::Uniform { lo, hi } => (lo, hi),
            Dist::Bimodal { low, high, .. } => (low.min(high), low.max(high)),
        }
    }

    fn validate(&self, field: &str, min: f64, max: f64) -> Result<()> {
        let finite = match *self {
            Dist::Fixed(v) => v.is_finite(),
            Dist::Uniform { lo, hi } => lo.is_finite() && hi.is_finite(),
            Dist::Bimodal { low, high, p_high } => {
                if !(0.0..=1.0).contains(&p_high) {
                    return Err(Error::bad_spec(
                        format!("{field}.p_high"),
                        "must lie in [0, 1]",
                    ));
                }
                low.is_finite() && high.is_finite()
            }
        };
        if !finite {
            return Err(Error::bad_spec(field, "values must be finite"));
        }
        if let Dist::Uniform { lo, hi } = *self {
            if lo > hi {
                return Err(Error::bad_spec(field, "lo must not exceed hi"));
            }
        }
        let (lo, hi) = self.support();
        if lo < min || hi > max {
            return Err(Error::bad_spec(
                field,
                format!("values must lie in [{min}, {max}]"),
            ));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DistRepr {
    Value(f64),
    Table(DistTable),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "dist", rename_all = "snake_case", deny_unknown_fields)]
enum DistTable {
    Fixed { value: f64 },
    Uniform { lo: f64, hi: f64 },
    Bimodal { low: f64, high: f64, p_high: f64 },
}

impl From<DistRepr> for Dist {
    fn from(r: DistRepr) -> Self {
        match r {
            DistRepr::Value(v) | DistRepr::Table(DistTable::Fixed { value: v }) => Dist::Fixed(v),
            DistRepr::Table(DistTable::Uniform { lo, hi }) => Dist::Uniform { lo, hi },
            DistRepr::Table(DistTable::Bimodal { low, high, p_high }) => {
                Dist::Bimodal { low, high, p_high }
            }
        }
    }
}

impl From<Dist> for DistRepr {
    fn from(d: Dist) -> Self {
        match d {
            Dist::Fixed(v) => DistRepr::Value(v),
            Dist::Uniform { lo, hi } => DistRepr::Table(DistTable::Uniform { lo, hi }),
            Dist::Bimodal { low, high, p_high } => {
                DistRepr::Table(DistTable::Bimodal { low, high, p_high })
            }
        }
    }
}

/// Round-2 cost: the voter's round-1 cost, or an independent draw.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "SecondCostRepr", into = "SecondCostRepr")]
pub enum SecondCost {
    #[default]
    SameAsFirst,
    Independent(Dist),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SecondCostRepr {
    Keyword(String),
    Dist(Dist),
}

impl TryFrom<SecondCostRepr> for SecondCost {
    type Error = String;

    fn try_from(r: SecondCostRepr) -> std::result::Result<Self, String> {
        match r {
            SecondCostRepr::Keyword(k) if k == "same" => Ok(SecondCost::SameAsFirst),
            SecondCostRepr::Keyword(k) => {
                Err(format!("expected \"same\" or a distribution, got {k:?}"))
            }
            SecondCostRepr::Dist(d) => Ok(SecondCost::Independent(d)),
        }
    }
}

impl From<SecondCost> for SecondCostRepr {
    fn from(c: SecondCost) -> Self {
        match c {
            SecondCost::SameAsFirst => SecondCostRepr::Keyword("same".into()),
            SecondCost::Independent(d) => SecondCostRepr::Dist(d),
        }
    }
}

/// Fraction of voters who vote viability-strategically; `true` means all.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "FractionRepr", into = "FractionRepr")]
pub struct StrategicShare(pub f64);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FractionRepr {
    Flag(bool),
    Fraction(f64),
}

impl From<FractionRepr> for StrategicShare {
    fn from(r: FractionRepr) -> Self {
        match r {
            FractionRepr::Flag(b) => StrategicShare(if b { 1.0 } else { 0.0 }),
            FractionRepr::Fraction(f) => StrategicShare(f),
        }
    }
}

impl From<StrategicShare> for FractionRepr {
    fn from(s: StrategicShare) -> Self {
        FractionRepr::Fraction(s.0)
    }
}

fn half() -> f64 {
    0.5
}

fn unit_uniform() -> Dist {
    Dist::Uniform { lo: 0.0, hi: 1.0 }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum PreferenceModel {
    /// Independent uniform utilities.
    #[default]
    Uniform,
    /// Two camps with opposite linear rankings of the options, blended with
    /// uniform noise: `u = (1 - mixing) * camp_profile + mixing * noise`.
    /// Camp 0 ranks option 0 first; it holds `camp_split` of the voters.
    Polarized {
        mixing: f64,
        #[serde(default = "half")]
        camp_split: f64,
    },
    /// Voters and options on `[0, 1]`, utility `1 - distance`.
    Spatial1d {
        options: Vec<f64>,
        #[serde(default = "unit_uniform")]
        positions: Dist,
    },
}

pub fn spatial_utilities(position: f64, options: &[f64]) -> Vec<f64> {
    options
        .iter()
        .map(|&p| 1.0 - (position - p).abs())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElectorateSpec {
    pub voters: usize,
    pub options: usize,
    #[serde(default)]
    pub preferences: PreferenceModel,
    #[serde(default)]
    pub cost_r1: Dist,
    #[serde(default)]
    pub cost_r2: SecondCost,
    #[serde(default)]
    pub bandwagon: Dist,
    #[serde(default)]
    pub underdog: Dist,
    #[serde(default)]
    pub closeness: Dist,
    #[serde(default)]
    pub viability_strategic: StrategicShare,
    /// Mandatory voting: every cost is zero.
    #[serde(default)]
    pub compulsory: bool,
}

impl ElectorateSpec {
    /// Sincere electorate of `voters` over `options` with every behavioural
    /// coefficient at zero and free participation.
    pub fn new(voters: usize, options: usize) -> Self {
        ElectorateSpec {
            voters,
            options,
            preferences: PreferenceModel::Uniform,
            cost_r1: Dist::default(),
            cost_r2: SecondCost::default(),
            bandwagon: Dist::default(),
            underdog: Dist::default(),
            closeness: Dist::default(),
            viability_strategic: StrategicShare::default(),
            compulsory: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.voters == 0 {
            return Err(Error::bad_spec("electorate.voters", "must be at least 1"));
        }
        if self.options < 2 {
            return Err(Error::bad_spec("electorate.options", "must be at least 2"));
        }
        match &self.preferences {
            PreferenceModel::Uniform => {}
            PreferenceModel::Polarized { mixing, camp_split } => {
                if !(0.0..=1.0).contains(mixing) {
                    return Err(Error::bad_spec(
                        "electorate.preferences.mixing",
                        "must lie in [0, 1]",
                    ));
                }
                if !(0.0..=1.0).contains(camp_split) {
                    return Err(Error::bad_spec(
                        "electorate.preferences.camp_split",
                        "must lie in [0, 1]",
                    ));
                }
            }
            PreferenceModel::Spatial1d { options, positions } => {
                if options.len() != self.options {
                    return Err(Error::bad_spec(
                        "electorate.preferences.options",
                        format!("{} positions for {} options", options.len(), self.options),
                    ));
                }
                if options.iter().any(|p| !(0.0..=1.0).contains(p)) {
                    return Err(Error::bad_spec(
                        "electorate.preferences.options",
                        "positions must lie in [0, 1]",
                    ));
                }
                positions.validate("electorate.preferences.positions", 0.0, 1.0)?;
            }
        }
        self.cost_r1.validate("electorate.cost_r1", 0.0, f64::MAX)?;
        if let SecondCost::Independent(d) = &self.cost_r2 {
            d.validate("electorate.cost_r2", 0.0, f64::MAX)?;
        }
        self.bandwagon.validate("electorate.bandwagon", 0.0, 1.0)?;
        self.underdog.validate("electorate.underdog", 0.0, 1.0)?;
        self.closeness
            .validate("electorate.closeness", 0.0, f64::MAX)?;
        if !(0.0..=1.0).contains(&self.viability_strategic.0) {
            return Err(Error::bad_spec(
                "electorate.viability_strategic",
                "must be a boolean or a fraction in [0, 1]",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Voter {
    utilities: Vec<f64>,
    cost_r1: f64,
    cost_r2: f64,
    bandwagon: f64,
    underdog: f64,
    viability_strategic: bool,
    closeness: f64,
}

impl Voter {
    /// A sincere voter with free participation.
    pub fn new(utilities: Vec<f64>) -> Result<Self> {
        if utilities.is_empty() {
            return Err(Error::bad_spec(
                "utilities",
                "at least one option is required",
            ));
        }
        if utilities.iter().any(|u| !(0.0..=1.0).contains(u)) {
            return Err(Error::bad_spec("utilities", "utilities must lie in [0, 1]"));
        }
        Ok(Voter {
            utilities,
            cost_r1: 0.0,
            cost_r2: 0.0,
            bandwagon: 0.0,
            underdog: 0.0,
            viability_strategic: false,
            closeness: 0.0,
        })
    }

    pub fn with_costs(mut self, round1: f64, round2: f64) -> Self {
        self.cost_r1 = round1.max(0.0);
        self.cost_r2 = round2.max(0.0);
        self
    }

    pub fn with_closeness(mut self, sensitivity: f64) -> Self {
        self.closeness = sensitivity.max(0.0);
        self
    }

    pub fn with_switching(mut self, bandwagon: f64, underdog: f64) -> Result<Self> {
        let unit = 0.0..=1.0;
        if !unit.contains(&bandwagon) || !unit.contains(&underdog) || bandwagon + underdog > 1.0 {
            return Err(Error::bad_spec(
                "bandwagon/underdog",
                "coefficients must lie in [0, 1] and sum to at most 1",
            ));
        }
        self.bandwagon = bandwagon;
        self.underdog = underdog;
        Ok(self)
    }

    pub fn with_viability_strategic(mut self, strategic: bool) -> Self {
        self.viability_strategic = strategic;
        self
    }

    pub fn utilities(&self) -> &[f64] {
        &self.utilities
    }

    pub fn cost_r1(&self) -> f64 {
        self.cost_r1
    }

    pub fn cost_r2(&self) -> f64 {
        self.cost_r2
    }

    pub fn bandwagon(&self) -> f64 {
        self.bandwagon
    }

    pub fn underdog(&self) -> f64 {
        self.underdog
    }

    pub fn closeness(&self) -> f64 {
        self.closeness
    }

    pub fn is_viability_strategic(&self) -> bool {
        self.viability_strategic
    }

    /// Favourite option, ties to the lower index.
    pub fn favourite(&self) -> OptionId {
        let mut best = 0;
        for (k, &u) in self.utilities.iter().enumerate() {
            if u > self.utilities[best] {
                best = k;
            }
        }
        OptionId(best)
    }

    /// Top utility minus second-highest utility.
    pub fn intensity(&self) -> f64 {
        let mut top = f64::NEG_INFINITY;
        let mut second = f64::NEG_INFINITY;
        for &u in &self.utilities {
            if u > top {
                second = top;
                top = u;
            } else if u > second {
                second = u;
            }
        }
        if second.is_finite() {
            top - second
        } else {
            top
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Choice {
    Vote(OptionId),
    Abstain,
}

impl Choice {
    pub fn voted(self) -> bool {
        matches!(self, Choice::Vote(_))
    }
}

pub fn sample_electorate(spec: &ElectorateSpec, stream: &Stream) -> Result<Vec<Voter>> {
    spec.validate()?;
    Ok((0..spec.voters)
        .map(|i| sample_voter(spec, &mut stream.split(i as u64)))
        .collect())
}

fn sample_voter(spec: &ElectorateSpec, s: &mut Stream) -> Voter {
    let k = spec.options;
    let utilities = match &spec.preferences {
        PreferenceModel::Uniform => (0..k).map(|_| s.next_f64()).collect(),
        PreferenceModel::Polarized { mixing, camp_split } => {
            let camp0 = s.next_f64() < *camp_split;
            (0..k)
                .map(|j| {
                    let rank = j as f64 / (k - 1) as f64;
                    let profile = if camp0 { 1.0 - rank } else { rank };
                    (1.0 - mixing) * profile + mixing * s.next_f64()
                })
                .collect()
        }
        PreferenceModel::Spatial1d { options, positions } => {
            spatial_utilities(positions.sample(s), options)
        }
    };
    let cost_r1 = spec.cost_r1.sample(s);
    let cost_r2 = match &spec.cost_r2 {
        SecondCost::SameAsFirst => {
            s.next_f64();
            cost_r1
        }
        SecondCost::Independent(d) => d.sample(s),
    };
    let bandwagon = spec.bandwagon.sample(s);
    // b + u <= 1: the underdog share is capped by what bandwagoning leaves.
    let underdog = spec.underdog.sample(s).min(1.0 - bandwagon);
    let closeness = spec.closeness.sample(s);
    let strategic = s.next_f64() < spec.viability_strategic.0;
    let (cost_r1, cost_r2) = if spec.compulsory {
        (0.0, 0.0)
    } else {
        (cost_r1, cost_r2)
    };
    Voter {
        utilities,
        cost_r1,
        cost_r2,
        bandwagon,
        underdog,
        viability_strategic: strategic,
        closeness,
    }
}

pub fn decide_round1(v: &Voter) -> Choice {
    if v.intensity() >= v.cost_r1 {
        Choice::Vote(v.favourite())
    } else {
        Choice::Abstain
    }
}

/// Round-2 decision given the published round-1 result.
pub fn decide_round2(
    v: &Voter,
    published: &PublishedRound<f64>,
    rule: &ElectionRule<f64>,
    s: &mut Stream,
) -> Choice {
    let stake = v.intensity() * (1.0 + v.closeness * (1.0 - published.margin));
    if stake < v.cost_r2 {
        return Choice::Abstain;
    }
    let mut choice = v.favourite();

    if v.viability_strategic {
        if let Some(threshold) = rule.entry_threshold() {
            let viable = |k: usize| published.shares[k].at_least(threshold);
            if !viable(choice.0) {
                let mut best: Option<usize> = None;
                for k in (0..v.utilities.len()).filter(|&k| viable(k)) {
                    if best.is_none_or(|b| v.utilities[k] > v.utilities[b]) {
                        best = Some(k);
                    }
                }
                if let Some(b) = best {
                    choice = OptionId(b);
                }
            }
        }
    }

    let bandwagon_draw = s.next_f64();
    let underdog_draw = s.next_f64();
    if !published.tally.is_empty() {
        let (leader, runner_up) = leader_and_runner_up(&published.tally);
        if bandwagon_draw < v.bandwagon {
            choice = leader;
        } else if v.bandwagon < 1.0 && underdog_draw < v.underdog / (1.0 - v.bandwagon) {
            if let Some(r) = runner_up {
                choice = r;
            }
        }
    }
    Choice::Vote(choice)
}

#[derive(Debug, Clone, Copy)]
pub enum Phase<'a> {
    Round1,
    /// Any round after the first, reacting to the latest published round.
    Later {
        published: &'a PublishedRound<f64>,
        rule: &'a ElectionRule<f64>,
    },
}

/// Every voter's decision, voter `i` drawing from `stream.split(i)`.
pub fn cast_round(voters: &[Voter], phase: Phase<'_>, stream: &Stream) -> Vec<Choice> {
    voters
        .par_iter()
        .with_min_len(512)
        .enumerate()
        .map(|(i, v)| match phase {
            Phase::Round1 => decide_round1(v),
            Phase::Later { published, rule } => {
                decide_round2(v, published, rule, &mut stream.split(i as u64))
            }
        })
        .collect()
}

pub fn tally_choices(choices: &[Choice], options: usize) -> Result<Tally> {
    let ballots: Vec<OptionId> = choices
        .iter()
        .filter_map(|c| match c {
            Choice::Vote(k) => Some(*k),
            Choice::Abstain => None,
        })
        .collect();
    tally_ballots(&ballots, options, choices.len() as u64)
}

pub fn run_electorate_round(voters: &[Voter], phase: Phase<'_>, stream: &Stream) -> Result<Tally> {
    let options = voters
        .first()
        .map(|v| v.utilities.len())
        .ok_or_else(|| Error::bad_spec("voters", "the electorate is empty"))?;
    if voters.iter().any(|v| v.utilities.len() != options) {
        return Err(Error::bad_spec(
            "voters",
            "voters disagree on the number of options",
        ));
    }
    tally_choices(&cast_round(voters, phase, stream), options)
}
