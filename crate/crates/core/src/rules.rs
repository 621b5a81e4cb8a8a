//! Tallies and the decision rules a repeat-voting procedure wraps.
//!
//! Counts are exact integers. Shares and fractional thresholds go through
//! [`Scalar`], so the same rule can be evaluated in `f64` or exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OptionId(pub usize);

impl OptionId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Vote counts of one round, or of several rounds added together.
///
/// A single round never has more ballots than eligible voters. A combined
/// tally may, because every voter is entitled to a ballot in each round.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tally {
    counts: Vec<u64>,
    ballots_cast: u64,
    eligible: u64,
}

impl Tally {
    pub fn new(counts: Vec<u64>, eligible: u64) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::bad_spec(
                "counts",
                "a tally needs at least one option",
            ));
        }
        let ballots_cast = counts.iter().sum();
        if ballots_cast > eligible {
            return Err(Error::OverVote {
                ballots: ballots_cast,
                eligible,
            });
        }
        Ok(Tally {
            counts,
            ballots_cast,
            eligible,
        })
    }

    pub fn zero(options: usize, eligible: u64) -> Self {
        assert!(options >= 1, "a tally needs at least one option");
        Tally {
            counts: vec![0; options],
            ballots_cast: 0,
            eligible,
        }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, option: OptionId) -> u64 {
        self.counts[option.0]
    }

    pub fn ballots_cast(&self) -> u64 {
        self.ballots_cast
    }

    pub fn eligible(&self) -> u64 {
        self.eligible
    }

    pub fn options(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ballots_cast == 0
    }

    /// Vote shares; all zero when nobody voted.
    pub fn shares<S: Scalar>(&self) -> Vec<S> {
        if self.ballots_cast == 0 {
            return vec![S::zero(); self.counts.len()];
        }
        self.counts
            .iter()
            .map(|&c| S::from_counts(c, self.ballots_cast))
            .collect()
    }

    /// Ballots over eligible voters; zero for an empty electorate.
    pub fn turnout<S: Scalar>(&self) -> S {
        if self.eligible == 0 {
            S::zero()
        } else {
            S::from_counts(self.ballots_cast, self.eligible)
        }
    }

    /// Option indices ordered by count, descending, ties by lower index.
    pub fn ranking(&self) -> Vec<OptionId> {
        let mut order: Vec<usize> = (0..self.counts.len()).collect();
        order.sort_by(|&a, &b| self.counts[b].cmp(&self.counts[a]).then(a.cmp(&b)));
        order.into_iter().map(OptionId).collect()
    }
}

pub fn tally_ballots(choices: &[OptionId], options: usize, eligible: u64) -> Result<Tally> {
    if options == 0 {
        return Err(Error::bad_spec(
            "options",
            "a tally needs at least one option",
        ));
    }
    let mut counts = vec![0u64; options];
    for &OptionId(index) in choices {
        if index >= options {
            return Err(Error::InvalidBallot { index, options });
        }
        counts[index] += 1;
    }
    if choices.len() as u64 > eligible {
        return Err(Error::OverVote {
            ballots: choices.len() as u64,
            eligible,
        });
    }
    Ok(Tally {
        counts,
        ballots_cast: choices.len() as u64,
        eligible,
    })
}

/// Componentwise sum of two rounds cast by the same electorate.
pub fn add_tallies(a: &Tally, b: &Tally) -> Result<Tally> {
    if a.options() != b.options() {
        return Err(Error::IncompatibleTallies(format!(
            "{} options vs {}",
            a.options(),
            b.options()
        )));
    }
    if a.eligible != b.eligible {
        return Err(Error::IncompatibleTallies(format!(
            "eligible {} vs {}",
            a.eligible, b.eligible
        )));
    }
    Ok(Tally {
        counts: a.counts.iter().zip(&b.counts).map(|(x, y)| x + y).collect(),
        ballots_cast: a.ballots_cast + b.ballots_cast,
        eligible: a.eligible,
    })
}

/// Nationwide tally of one round cast across districts.
pub fn merge_districts(per_district: &[Tally]) -> Result<Tally> {
    let Some(first) = per_district.first() else {
        return Err(Error::IncompatibleTallies("no district tallies".into()));
    };
    let mut counts = vec![0u64; first.options()];
    let mut eligible = 0;
    let mut ballots_cast = 0;
    for t in per_district {
        if t.options() != counts.len() {
            return Err(Error::IncompatibleTallies(format!(
                "districts with {} and {} options",
                counts.len(),
                t.options()
            )));
        }
        for (sum, c) in counts.iter_mut().zip(&t.counts) {
            *sum += c;
        }
        eligible += t.eligible;
        ballots_cast += t.ballots_cast;
    }
    Ok(Tally {
        counts,
        ballots_cast,
        eligible,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Apportionment {
    /// Divisors 1, 2, 3, ... (D'Hondt).
    #[default]
    #[serde(alias = "dhondt")]
    HighestAverages,
    /// Simple (Hare) quota, leftover seats by largest remainder.
    #[serde(alias = "hare")]
    LargestRemainder,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ElectionRule<S = f64> {
    Plurality,
    /// Two options; option 0 is the proposal and passes at `share >= quota`.
    Supermajority {
        quota: S,
    },
    Parliamentary {
        entry_threshold: S,
        seats: u32,
        #[serde(default)]
        apportionment: Apportionment,
    },
    /// Winner-take-all districts with the given college weights.
    Districts {
        weights: Vec<u64>,
    },
}

impl<S: Scalar> ElectionRule<S> {
    pub fn validate(&self) -> Result<()> {
        match self {
            ElectionRule::Plurality => Ok(()),
            ElectionRule::Supermajority { quota } => {
                if *quota <= S::half() || *quota > S::one() {
                    Err(Error::InvalidRule(
                        "quota must exceed 1/2 and be at most 1".into(),
                    ))
                } else {
                    Ok(())
                }
            }
            ElectionRule::Parliamentary {
                entry_threshold,
                seats,
                ..
            } => {
                if *entry_threshold < S::zero() || *entry_threshold >= S::one() {
                    Err(Error::InvalidRule(
                        "entry_threshold must lie in [0, 1)".into(),
                    ))
                } else if *seats == 0 {
                    Err(Error::InvalidRule("seats must be positive".into()))
                } else {
                    Ok(())
                }
            }
            ElectionRule::Districts { weights } => {
                if weights.is_empty() {
                    Err(Error::InvalidRule(
                        "at least one district is required".into(),
                    ))
                } else if weights.contains(&0) {
                    Err(Error::InvalidRule(
                        "district weights must be positive".into(),
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Option count the rule insists on, if any.
    pub fn required_options(&self) -> Option<usize> {
        match self {
            ElectionRule::Supermajority { .. } => Some(2),
            _ => None,
        }
    }

    pub fn check_arity(&self, options: usize) -> Result<()> {
        match self.required_options() {
            Some(expected) if expected != options => Err(Error::RuleArityError {
                expected,
                found: options,
            }),
            _ => Ok(()),
        }
    }

    pub fn entry_threshold(&self) -> Option<S> {
        match self {
            ElectionRule::Parliamentary {
                entry_threshold, ..
            } => Some(*entry_threshold),
            _ => None,
        }
    }

    pub fn is_districts(&self) -> bool {
        matches!(self, ElectionRule::Districts { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Outcome {
    Winner(OptionId),
    /// Two or more options share the decisive position; sorted ascending.
    Tie(Vec<OptionId>),
    Passed,
    Failed,
    Seats(Vec<u32>),
    CollegeWinner {
        winner: OptionId,
        college_votes: Vec<u64>,
    },
    /// A unique college leader without a strict majority of the weight,
    /// which happens when tied districts leave weight unassigned.
    NoMajority {
        leader: OptionId,
        college_votes: Vec<u64>,
    },
}

impl Outcome {
    pub fn winner(&self) -> Option<OptionId> {
        match self {
            Outcome::Winner(w) | Outcome::CollegeWinner { winner: w, .. } => Some(*w),
            _ => None,
        }
    }

    pub fn college_votes(&self) -> Option<&[u64]> {
        match self {
            Outcome::CollegeWinner { college_votes, .. }
            | Outcome::NoMajority { college_votes, .. } => Some(college_votes),
            _ => None,
        }
    }
}

/// Winner, or the tie among all options with the top count.
pub fn plurality(t: &Tally) -> Outcome {
    let top = t.counts.iter().copied().max().unwrap_or(0);
    let leaders: Vec<OptionId> = t
        .counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == top)
        .map(|(k, _)| OptionId(k))
        .collect();
    if leaders.len() == 1 {
        Outcome::Winner(leaders[0])
    } else {
        Outcome::Tie(leaders)
    }
}

pub fn decide<S: Scalar>(rule: &ElectionRule<S>, t: &Tally) -> Result<Outcome> {
    rule.check_arity(t.options())?;
    match rule {
        ElectionRule::Plurality => Ok(plurality(t)),
        ElectionRule::Supermajority { quota } => {
            if t.ballots_cast == 0 {
                return Ok(Outcome::Failed);
            }
            let share = S::from_counts(t.counts[0], t.ballots_cast);
            Ok(if share.at_least(*quota) {
                Outcome::Passed
            } else {
                Outcome::Failed
            })
        }
        ElectionRule::Parliamentary {
            entry_threshold,
            seats,
            apportionment,
        } => allocate_seats(t, *entry_threshold, *seats, *apportionment).map(Outcome::Seats),
        ElectionRule::Districts { .. } => Err(Error::WrongDecisionPath),
    }
}

/// Seats for parties at or above `entry_threshold` of the ballots cast.
pub fn allocate_seats<S: Scalar>(
    t: &Tally,
    entry_threshold: S,
    seats: u32,
    method: Apportionment,
) -> Result<Vec<u32>> {
    if t.ballots_cast == 0 {
        return Err(Error::EmptyElection);
    }
    if seats == 0 {
        return Err(Error::InvalidRule("seats must be positive".into()));
    }
    let votes: Vec<u64> = t
        .counts
        .iter()
        .map(|&c| {
            if S::from_counts(c, t.ballots_cast).at_least(entry_threshold) {
                c
            } else {
                0
            }
        })
        .collect();
    if votes.iter().all(|&v| v == 0) {
        return Err(Error::NoViableParty);
    }
    Ok(match method {
        Apportionment::HighestAverages => highest_averages(&votes, seats),
        Apportionment::LargestRemainder => largest_remainder(&votes, seats),
    })
}

/// Seat by seat, to the party with the largest `votes / (seats_won + 1)`;
/// equal quotients go to the lower index.
fn highest_averages(votes: &[u64], seats: u32) -> Vec<u32> {
    let mut won = vec![0u32; votes.len()];
    for _ in 0..seats {
        let mut best = 0;
        for k in 1..votes.len() {
            // votes[k] / (won[k]+1) > votes[best] / (won[best]+1)
            let lhs = votes[k] as u128 * (won[best] as u128 + 1);
            let rhs = votes[best] as u128 * (won[k] as u128 + 1);
            if lhs > rhs {
                best = k;
            }
        }
        won[best] += 1;
    }
    won
}

fn largest_remainder(votes: &[u64], seats: u32) -> Vec<u32> {
    let total: u128 = votes.iter().map(|&v| v as u128).sum();
    let scaled: Vec<u128> = votes.iter().map(|&v| v as u128 * seats as u128).collect();
    let mut won: Vec<u32> = scaled.iter().map(|&s| (s / total) as u32).collect();
    let mut left = seats - won.iter().sum::<u32>();
    let mut order: Vec<usize> = (0..votes.len()).collect();
    order.sort_by(|&a, &b| {
        (scaled[b] % total)
            .cmp(&(scaled[a] % total))
            .then(a.cmp(&b))
    });
    for k in order {
        if left == 0 {
            break;
        }
        won[k] += 1;
        left -= 1;
    }
    won
}

/// Electoral college over per-district tallies.
///
/// Each district's plurality winner takes the district's weight. A tied
/// district gives its weight to nobody. Without a strict majority of the
/// total weight the result is a tie among the top college scorers that won
/// or tied for first in at least one district.
pub fn decide_districts<S: Scalar>(
    rule: &ElectionRule<S>,
    per_district: &[Tally],
) -> Result<Outcome> {
    let ElectionRule::Districts { weights } = rule else {
        return Err(Error::WrongDecisionPath);
    };
    if weights.len() != per_district.len() {
        return Err(Error::DistrictMismatch {
            districts: per_district.len(),
            weights: weights.len(),
        });
    }
    let Some(first) = per_district.first() else {
        return Err(Error::InvalidRule(
            "at least one district is required".into(),
        ));
    };
    let options = first.options();
    if let Some(bad) = per_district.iter().find(|t| t.options() != options) {
        return Err(Error::IncompatibleTallies(format!(
            "districts with {} and {} options",
            options,
            bad.options()
        )));
    }

    let mut college_votes = vec![0u64; options];
    // won or tied for first in some district
    let mut contended = vec![false; options];
    for (t, &w) in per_district.iter().zip(weights) {
        match plurality(t) {
            Outcome::Winner(OptionId(k)) => {
                college_votes[k] += w;
                contended[k] = true;
            }
            Outcome::Tie(tied) => tied.iter().for_each(|k| contended[k.0] = true),
            _ => unreachable!("plurality yields a winner or a tie"),
        }
    }
    let total: u64 = weights.iter().sum();
    let top = college_votes.iter().copied().max().unwrap_or(0);
    let leaders: Vec<OptionId> = (0..options)
        .filter(|&k| contended[k] && college_votes[k] == top)
        .map(OptionId)
        .collect();
    Ok(if 2 * top > total {
        Outcome::CollegeWinner {
            winner: leaders[0],
            college_votes,
        }
    } else if leaders.len() >= 2 {
        Outcome::Tie(leaders)
    } else {
        Outcome::NoMajority {
            leader: leaders[0],
            college_votes,
        }
    })
}

/// Top share minus runner-up share. A single-option tally has margin 1.
pub fn margin<S: Scalar>(t: &Tally) -> Result<S> {
    if t.ballots_cast == 0 {
        return Err(Error::EmptyElection);
    }
    if t.options() == 1 {
        return Ok(S::one());
    }
    let ranked = t.ranking();
    let gap = t.count(ranked[0]) - t.count(ranked[1]);
    Ok(S::from_counts(gap, t.ballots_cast))
}

/// Leader and runner-up by count, ties to the lower index.
pub fn leader_and_runner_up(t: &Tally) -> (OptionId, Option<OptionId>) {
    let ranked = t.ranking();
    (ranked[0], ranked.get(1).copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn tally(counts: &[u64]) -> Tally {
        let n = counts.iter().sum::<u64>();
        Tally::new(counts.to_vec(), n.max(1)).unwrap()
    }

    fn ids(v: &[usize]) -> Vec<OptionId> {
        v.iter().copied().map(OptionId).collect()
    }

    /// Every quotient `votes/d` for `d = 1..=seats`, the `seats` largest
    /// (ties by lower party index) kept.
    fn quotient_oracle(votes: &[u64], seats: u32) -> Vec<u32> {
        let mut q: Vec<(f64, usize)> = Vec::new();
        for (k, &v) in votes.iter().enumerate() {
            for d in 1..=seats {
                q.push((v as f64 / d as f64, k));
            }
        }
        q.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
        let mut won = vec![0; votes.len()];
        for &(_, k) in q.iter().take(seats as usize) {
            won[k] += 1;
        }
        won
    }

    #[test]
    fn tally_ballots_examples() {
        let t = tally_ballots(&ids(&[0, 0, 1]), 2, 5).unwrap();
        assert_eq!(t.counts(), &[2, 1]);
        assert_eq!(t.ballots_cast(), 3);

        let t = tally_ballots(&[], 3, 10).unwrap();
        assert_eq!(t.counts(), &[0, 0, 0]);
        assert_eq!(t.ballots_cast(), 0);

        assert_eq!(
            tally_ballots(&ids(&[2]), 2, 1),
            Err(Error::InvalidBallot {
                index: 2,
                options: 2
            })
        );
        assert!(matches!(
            tally_ballots(&ids(&[0, 1]), 2, 1),
            Err(Error::OverVote { .. })
        ));
    }

    #[test]
    fn add_tallies_examples() {
        let a = Tally::new(vec![2, 1], 10).unwrap();
        let b = Tally::new(vec![0, 3], 10).unwrap();
        let s = add_tallies(&a, &b).unwrap();
        assert_eq!(s.counts(), &[2, 4]);
        assert_eq!(s.ballots_cast(), 6);
        assert_eq!(s.eligible(), 10);

        assert_eq!(add_tallies(&a, &Tally::zero(2, 10)).unwrap(), a);

        let c = Tally::new(vec![1, 1], 200).unwrap();
        let d = Tally::new(vec![1, 1], 100).unwrap();
        assert!(matches!(
            add_tallies(&c, &d),
            Err(Error::IncompatibleTallies(_))
        ));
        let e = Tally::new(vec![1, 1, 0], 200).unwrap();
        assert!(matches!(
            add_tallies(&c, &e),
            Err(Error::IncompatibleTallies(_))
        ));
    }

    #[test]
    fn combined_tally_may_exceed_electorate() {
        let a = Tally::new(vec![3, 2], 5).unwrap();
        let s = add_tallies(&a, &a).unwrap();
        assert_eq!(s.ballots_cast(), 10);
        assert_eq!(s.eligible(), 5);
    }

    #[test]
    fn decide_examples() {
        let r: ElectionRule = ElectionRule::Plurality;
        assert_eq!(
            decide(&r, &tally(&[2, 1])).unwrap(),
            Outcome::Winner(OptionId(0))
        );
        assert_eq!(
            decide(&r, &tally(&[3, 3, 1])).unwrap(),
            Outcome::Tie(ids(&[0, 1]))
        );

        let q = ElectionRule::Supermajority { quota: 2.0 / 3.0 };
        assert_eq!(decide(&q, &tally(&[40, 20])).unwrap(), Outcome::Passed);
        assert_eq!(decide(&q, &tally(&[39, 21])).unwrap(), Outcome::Failed);
        let exact = ElectionRule::Supermajority {
            quota: Rational::new(2, 3),
        };
        assert_eq!(decide(&exact, &tally(&[40, 20])).unwrap(), Outcome::Passed);
    }

    #[test]
    fn decide_errors_and_empty() {
        let q = ElectionRule::Supermajority { quota: 0.6 };
        assert_eq!(decide(&q, &Tally::zero(2, 10)).unwrap(), Outcome::Failed);
        assert_eq!(
            decide(&q, &tally(&[1, 1, 1])),
            Err(Error::RuleArityError {
                expected: 2,
                found: 3
            })
        );
        let d: ElectionRule = ElectionRule::Districts { weights: vec![1] };
        assert_eq!(decide(&d, &tally(&[1, 0])), Err(Error::WrongDecisionPath));
        let p: ElectionRule = ElectionRule::Plurality;
        assert_eq!(
            decide(&p, &Tally::zero(2, 3)).unwrap(),
            Outcome::Tie(ids(&[0, 1]))
        );
        assert_eq!(
            decide(&p, &Tally::zero(1, 3)).unwrap(),
            Outcome::Winner(OptionId(0))
        );
    }

    #[test]
    fn seat_examples() {
        let t = tally(&[100, 80, 30]);
        let oracle = quotient_oracle(&[100, 80, 30], 8);
        assert_eq!(oracle, vec![4, 3, 1]);
        assert_eq!(
            allocate_seats(&t, 0.0, 8, Apportionment::HighestAverages).unwrap(),
            oracle
        );

        // 30/210 < 0.20; the 8th seat is a 100/5 vs 80/4 tie, lower index wins.
        let oracle = quotient_oracle(&[100, 80, 0], 8);
        assert_eq!(oracle, vec![5, 3, 0]);
        assert_eq!(
            allocate_seats(&t, 0.20, 8, Apportionment::HighestAverages).unwrap(),
            oracle
        );

        let t = Tally::new(vec![10, 0], 10).unwrap();
        assert_eq!(
            allocate_seats(&t, 0.5, 3, Apportionment::HighestAverages).unwrap(),
            vec![3, 0]
        );
        assert_eq!(
            allocate_seats(&t, 0.5, 3, Apportionment::LargestRemainder).unwrap(),
            vec![3, 0]
        );
    }

    #[test]
    fn largest_remainder_hand_checked() {
        // quotas 3.5, 2.8, 0.7 over 7 seats: floors 3,2,0, remainders .5,.8,.7
        let t = tally(&[50, 40, 10]);
        assert_eq!(
            allocate_seats(&t, 0.0, 7, Apportionment::LargestRemainder).unwrap(),
            vec![3, 3, 1]
        );
        // D'Hondt favours the large party on the same votes
        assert_eq!(
            allocate_seats(&t, 0.0, 7, Apportionment::HighestAverages).unwrap(),
            quotient_oracle(&[50, 40, 10], 7)
        );
        assert_eq!(quotient_oracle(&[50, 40, 10], 7), vec![4, 3, 0]);
    }

    #[test]
    fn seat_errors() {
        assert_eq!(
            allocate_seats(&Tally::zero(3, 5), 0.0, 4, Apportionment::HighestAverages),
            Err(Error::EmptyElection)
        );
        assert_eq!(
            allocate_seats(&tally(&[1, 1, 1]), 0.5, 4, Apportionment::HighestAverages),
            Err(Error::NoViableParty)
        );
    }

    #[test]
    fn district_examples() {
        let rule: ElectionRule = ElectionRule::Districts {
            weights: vec![5, 3, 2],
        };
        let a = tally(&[3, 1]);
        let b = tally(&[1, 3]);
        let out = decide_districts(&rule, &[a.clone(), b.clone(), a.clone()]).unwrap();
        assert_eq!(
            out,
            Outcome::CollegeWinner {
                winner: OptionId(0),
                college_votes: vec![7, 3]
            }
        );

        let rule: ElectionRule = ElectionRule::Districts {
            weights: vec![1, 1],
        };
        assert_eq!(
            decide_districts(&rule, &[a.clone(), b.clone()]).unwrap(),
            Outcome::Tie(ids(&[0, 1]))
        );

        let rule: ElectionRule = ElectionRule::Districts { weights: vec![3] };
        assert_eq!(
            decide_districts(&rule, std::slice::from_ref(&b))
                .unwrap()
                .winner(),
            Some(OptionId(1))
        );

        assert_eq!(
            decide_districts(&rule, &[a.clone(), b.clone()]),
            Err(Error::DistrictMismatch {
                districts: 2,
                weights: 1
            })
        );
    }

    #[test]
    fn tied_district_weight_is_unassigned() {
        let rule: ElectionRule = ElectionRule::Districts {
            weights: vec![5, 3, 2],
        };
        let out =
            decide_districts(&rule, &[tally(&[3, 1]), tally(&[1, 3]), tally(&[2, 2])]).unwrap();
        assert_eq!(
            out,
            Outcome::NoMajority {
                leader: OptionId(0),
                college_votes: vec![5, 3]
            }
        );
    }

    #[test]
    fn margin_examples() {
        assert!((margin::<f64>(&tally(&[58, 42])).unwrap() - 0.16).abs() < 1e-12);
        assert_eq!(margin::<f64>(&tally(&[5, 5])).unwrap(), 0.0);
        assert_eq!(
            margin::<Rational>(&tally(&[7, 2, 1])).unwrap(),
            Rational::new(1, 2)
        );
        assert_eq!(margin::<f64>(&tally(&[4])).unwrap(), 1.0);
        assert_eq!(margin::<f64>(&Tally::zero(2, 4)), Err(Error::EmptyElection));
    }

    #[test]
    fn rule_validation() {
        assert!(ElectionRule::Supermajority { quota: 0.5 }
            .validate()
            .is_err());
        assert!(ElectionRule::Supermajority { quota: 1.0 }
            .validate()
            .is_ok());
        assert!(ElectionRule::Parliamentary {
            entry_threshold: 1.0,
            seats: 3,
            apportionment: Apportionment::HighestAverages
        }
        .validate()
        .is_err());
        assert!(ElectionRule::<f64>::Districts {
            weights: vec![2, 0]
        }
        .validate()
        .is_err());
    }
}
