//! Closed-form witness profiles for three alternatives.
//!
//! For a non-Borda rule `s = (1, s2, 0)` and any different rule
//! `s' = (1, s2', 0)`, [`witness_three`] builds a profile over `{x, y, z}` on
//! which `x` is the Condorcet loser, `s` elects `x` uniquely, and `s'` does
//! not elect `x`. The construction splits into six regions of the
//! `(s2, s2')` square (which side of the Borda value `1/2` each middle
//! score falls on, and which of the two is larger), each with its own
//! parametric profile. The parameters (`b`, and in two regions an auxiliary
//! integer `c`) are chosen exactly: midpoints of open rational intervals and
//! least integers above rational thresholds, so every inequality the region
//! promises can be re-checked by exact tallies before the profile is
//! returned.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{
    format_rational, frac, rat, Alt, Alternatives, Count, LinearOrder, Profile, Rational,
    ScoreVector,
};
use crate::witnessgen::verify_witness;

/// The six regions of the `(s2, s2')` square, `s2 != 1/2`, `s2 != s2'`.
///
/// "High" and "low" report whether the middle scores sit above or below the
/// Borda value `1/2`; "down"/"up" report whether `s2' < s2` or `s2 < s2'`.
/// The two boundary lines belong to the cross cases: `s2' = 1/2` pairs with
/// a high `s2` as [`ThreeCase::CrossDown`] and with a low `s2` as
/// [`ThreeCase::CrossUp`], where the constructions stay valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreeCase {
    /// `1/2 < s2' < s2 <= 1`
    HighPairDown,
    /// `1/2 < s2 < s2' <= 1`
    HighPairUp,
    /// `0 <= s2 < 1/2 <= s2' <= 1`
    CrossUp,
    /// `0 <= s2' <= 1/2 < s2 <= 1`
    CrossDown,
    /// `0 <= s2 < s2' < 1/2`
    LowPairUp,
    /// `0 <= s2' < s2 < 1/2`
    LowPairDown,
}

impl ThreeCase {
    /// Whether this region contains the pair. The six predicates are
    /// mutually exclusive and cover everything with `s2 != 1/2`, `s2 != s2'`.
    pub fn holds(&self, s2: &Rational, s2p: &Rational) -> bool {
        let half = frac(1, 2);
        match self {
            ThreeCase::HighPairDown => *s2 > half && *s2p > half && s2p < s2,
            ThreeCase::HighPairUp => *s2 > half && s2p > s2,
            ThreeCase::CrossUp => *s2 < half && *s2p >= half,
            ThreeCase::CrossDown => *s2 > half && *s2p <= half,
            ThreeCase::LowPairUp => *s2p < half && s2 < s2p,
            ThreeCase::LowPairDown => *s2 < half && s2p < s2,
        }
    }

    /// Dispatches a valid pair to its region.
    pub fn of(s2: &Rational, s2p: &Rational) -> Result<ThreeCase> {
        let all = [
            ThreeCase::HighPairDown,
            ThreeCase::HighPairUp,
            ThreeCase::CrossUp,
            ThreeCase::CrossDown,
            ThreeCase::LowPairUp,
            ThreeCase::LowPairDown,
        ];
        all.into_iter()
            .find(|case| case.holds(s2, s2p))
            .ok_or_else(|| {
                Error::ConstructionFault(format!(
                    "no region contains s2={}, s2'={}",
                    format_rational(s2),
                    format_rational(s2p)
                ))
            })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ThreeCase::HighPairDown => "high-pair-down",
            ThreeCase::HighPairUp => "high-pair-up",
            ThreeCase::CrossUp => "cross-up",
            ThreeCase::CrossDown => "cross-down",
            ThreeCase::LowPairUp => "low-pair-up",
            ThreeCase::LowPairDown => "low-pair-down",
        }
    }
}

/// Voter counts `(n1..n6)` over the six orders of `{x, y, z}`, in the fixed
/// convention `n1: x>y>z, n2: x>z>y, n3: y>x>z, n4: y>z>x, n5: z>x>y,
/// n6: z>y>x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeProfileCounts(pub [Count; 6]);

impl ThreeProfileCounts {
    pub const ORDER_IDS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];

    pub fn to_profile(&self) -> Profile {
        let mut profile = Profile::empty(Alternatives::xyz());
        for (ids, count) in Self::ORDER_IDS.iter().zip(self.0.iter()) {
            profile
                .add(LinearOrder::from_ids(ids).expect("fixed permutation"), count.clone())
                .expect("orders match registry");
        }
        profile
    }
}

/// The exact parameters one region instantiated to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessParameters {
    pub case: ThreeCase,
    /// Primary parameter, strictly inside the region's interval.
    pub b: Rational,
    /// `b = p / q` in lowest terms.
    pub p: Count,
    pub q: Count,
    /// Auxiliary integer for the two regions that need one.
    pub c: Option<Count>,
}

/// One strict tally inequality a region promises, with its closed-form value.
#[derive(Debug, Clone)]
pub struct GapCheck {
    pub label: &'static str,
    /// Checked under `s'` when true, under `s` otherwise.
    pub primed: bool,
    pub ahead: Alt,
    pub behind: Alt,
    pub value: Rational,
}

const X: Alt = Alt(0);
const Y: Alt = Alt(1);
const Z: Alt = Alt(2);

impl WitnessParameters {
    /// Re-derives the region's bounds and checks `b` (and `c`) sit strictly
    /// inside them.
    pub fn satisfies_bounds(&self, s2: &Rational, s2p: &Rational) -> bool {
        let one = rat(1);
        let two = rat(2);
        let b = &self.b;
        let c_rat = self.c.as_ref().map(crate::model::count_to_rational);
        match self.case {
            ThreeCase::HighPairDown => {
                b > &(one.clone() / (s2 * &two - &one)) && b < &(one / (s2p * &two - rat(1)))
            }
            ThreeCase::HighPairUp => {
                let lower_ok = b > &(s2 / (one.clone() - s2));
                let upper_ok = s2p == &one || b < &(s2p / (one.clone() - s2p));
                let c_ok = match &c_rat {
                    Some(c) => c > &((b * s2 + &one) / (s2 * &two - one)),
                    None => false,
                };
                lower_ok && upper_ok && c_ok
            }
            ThreeCase::CrossUp => b > &((one.clone() + s2) / (one - s2 * &two)),
            ThreeCase::CrossDown => b > &(one.clone() / (s2 * &two - one)),
            ThreeCase::LowPairUp => {
                b > &(one.clone() / (two.clone() - s2 * rat(4)))
                    && b < &(one / (two - s2p * rat(4)))
            }
            ThreeCase::LowPairDown => {
                let lower = (two.clone() - s2p * rat(3)) / (one.clone() - s2p * &two);
                let upper = (two.clone() - s2 * rat(3)) / (one.clone() - s2 * &two);
                let c_ok = match &c_rat {
                    Some(c) => c > &(b + (one + s2 * two) / (rat(1) - s2 * rat(2))),
                    None => false,
                };
                b > &lower && b < &upper && c_ok
            }
        }
    }

    /// The region's closed-form score-difference expressions, all of which
    /// must be strictly positive and must equal the actual tally gaps.
    pub fn gap_checks(&self, s2: &Rational, s2p: &Rational) -> Vec<GapCheck> {
        let one = rat(1);
        let two = rat(2);
        let b = &self.b;
        let q = crate::model::count_to_rational(&self.q);
        let c = self
            .c
            .as_ref()
            .map(crate::model::count_to_rational)
            .unwrap_or_else(Rational::zero);
        let gap = |label, primed, ahead, behind, value| GapCheck {
            label,
            primed,
            ahead,
            behind,
            value,
        };
        match self.case {
            ThreeCase::HighPairDown => vec![
                gap("x-y", false, X, Y, &q * (b * (s2 * &two - &one) - &one)),
                gap("y-x", true, Y, X, &q * (&one - b * (s2p * &two - &one))),
            ],
            ThreeCase::HighPairUp => vec![
                gap("x-y", false, X, Y, &q * (b * (&one - s2) - s2)),
                gap(
                    "x-z",
                    false,
                    X,
                    Z,
                    &q * (&c * (s2 * &two - &one) - (b * s2 + &one)),
                ),
                gap("y-x", true, Y, X, &q * (s2p - b * (&one - s2p))),
            ],
            ThreeCase::CrossUp => vec![
                gap("x-y", false, X, Y, &one - s2 * &two),
                gap("x-z", false, X, Z, b * (&one - s2 * &two) - (&one + s2)),
                gap("z-x", true, Z, X, &one - b + s2p * (b * &two + &one)),
            ],
            ThreeCase::CrossDown => vec![
                gap("x-y", false, X, Y, b * (s2 * &two - &one) - s2),
                gap("x-z", false, X, Z, b * (s2 * &two - &one) - &one),
                gap("z-x", true, Z, X, b + &one - b * s2p * &two),
            ],
            ThreeCase::LowPairUp => vec![
                gap("x-y", false, X, Y, &q * (b * (&one - s2 * &two) - s2)),
                gap("x-z", false, X, Z, &q * (b * (&two - s2 * rat(4)) - &one)),
                gap("z-x", true, Z, X, &q * (&one - b * (&two - s2p * rat(4)))),
            ],
            ThreeCase::LowPairDown => vec![
                gap(
                    "x-y",
                    false,
                    X,
                    Y,
                    &q * (&two - s2 * rat(3) - b * (&one - s2 * &two)),
                ),
                gap(
                    "x-z",
                    false,
                    X,
                    Z,
                    &q * ((&c - b) * (&one - s2 * &two) - (&one + s2 * &two)),
                ),
                gap(
                    "y-x",
                    true,
                    Y,
                    X,
                    &q * (b * (&one - s2p * &two) - (&two - s2p * rat(3))),
                ),
            ],
        }
    }
}

/// A canonical rational strictly inside `(lo, hi)`: the midpoint, or
/// `lo + 1` when the interval is unbounded above.
pub fn pick_rational_in(lo: &Rational, hi: Option<&Rational>) -> Result<Rational> {
    if lo < &Rational::zero() {
        return Err(Error::InvalidArgument(format!(
            "interval start {} is negative",
            format_rational(lo)
        )));
    }
    match hi {
        Some(hi) if lo >= hi => Err(Error::InvalidArgument(format!(
            "empty interval ({}, {})",
            format_rational(lo),
            format_rational(hi)
        ))),
        Some(hi) => Ok((lo + hi) / rat(2)),
        None => Ok(lo + rat(1)),
    }
}

/// The least integer that is both `>= 1` and strictly above `t`.
pub fn pick_integer_above(t: &Rational) -> Count {
    if t < &Rational::one() {
        Count::one()
    } else {
        (t.floor().to_integer() + 1u8)
            .to_biguint()
            .expect("floor of a rational >= 1 is positive")
    }
}

fn lowest_terms(b: &Rational) -> (Count, Count) {
    let p = b
        .numer()
        .to_biguint()
        .expect("region parameters are positive");
    let q = b.denom().to_biguint().expect("denominators are positive");
    (p, q)
}

fn parameters_for(case: ThreeCase, s2: &Rational, s2p: &Rational) -> Result<WitnessParameters> {
    let one = rat(1);
    let two = rat(2);
    let (b, c) = match case {
        ThreeCase::HighPairDown => {
            let lo = one.clone() / (s2 * &two - &one);
            let hi = one / (s2p * &two - rat(1));
            (pick_rational_in(&lo, Some(&hi))?, None)
        }
        ThreeCase::HighPairUp => {
            // s2 < s2' <= 1 keeps s2 < 1, so the lower bound is finite;
            // s2' = 1 leaves the interval unbounded above.
            debug_assert!(s2 < &one);
            let lo = s2 / (one.clone() - s2);
            let hi = if s2p == &one {
                None
            } else {
                Some(s2p / (one.clone() - s2p))
            };
            let b = pick_rational_in(&lo, hi.as_ref())?;
            let c = pick_integer_above(&((&b * s2 + &one) / (s2 * &two - one)));
            (b, Some(c))
        }
        ThreeCase::CrossUp => {
            let b = pick_integer_above(&((one.clone() + s2) / (one - s2 * &two)));
            (crate::model::count_to_rational(&b), None)
        }
        ThreeCase::CrossDown => {
            let b = pick_integer_above(&(one.clone() / (s2 * &two - one)));
            (crate::model::count_to_rational(&b), None)
        }
        ThreeCase::LowPairUp => {
            let lo = one.clone() / (two.clone() - s2 * rat(4));
            let hi = one / (two - s2p * rat(4));
            (pick_rational_in(&lo, Some(&hi))?, None)
        }
        ThreeCase::LowPairDown => {
            let lo = (two.clone() - s2p * rat(3)) / (one.clone() - s2p * &two);
            let hi = (two.clone() - s2 * rat(3)) / (one.clone() - s2 * &two);
            let b = pick_rational_in(&lo, Some(&hi))?;
            let c = pick_integer_above(&(&b + (one + s2 * &two) / (rat(1) - s2 * rat(2))));
            (b, Some(c))
        }
    };
    let (p, q) = lowest_terms(&b);
    Ok(WitnessParameters { case, b, p, q, c })
}

fn counts_for(params: &WitnessParameters) -> ThreeProfileCounts {
    let zero = Count::zero;
    let p = params.p.clone();
    let q = params.q.clone();
    match params.case {
        ThreeCase::HighPairDown => {
            ThreeProfileCounts([zero(), zero(), p.clone(), q, p, zero()])
        }
        ThreeCase::HighPairUp => {
            let c = params.c.as_ref().expect("region uses c");
            let cq = c * &q;
            ThreeProfileCounts([
                cq.clone(),
                p.clone(),
                cq.clone(),
                zero(),
                cq.clone(),
                p + cq + q,
            ])
        }
        ThreeCase::CrossUp => ThreeProfileCounts([
            zero(),
            &p + 1u8,
            zero(),
            p,
            zero(),
            Count::from(2u8),
        ]),
        ThreeCase::CrossDown => {
            ThreeProfileCounts([zero(), zero(), p.clone(), zero(), p, Count::one()])
        }
        ThreeCase::LowPairUp => {
            let p2 = &p * 2u8;
            ThreeProfileCounts([p.clone(), p2.clone(), zero(), p2, zero(), p + q])
        }
        ThreeCase::LowPairDown => {
            let c = params.c.as_ref().expect("region uses c");
            let cq = c * &q;
            ThreeProfileCounts([
                zero(),
                &cq + &(&q * 2u8),
                p.clone(),
                cq,
                p,
                q * 3u8,
            ])
        }
    }
}

/// Builds a three-alternative profile on which `x` is the Condorcet loser,
/// `(1, s2, 0)` elects `x` uniquely, and `(1, s2', 0)` does not elect `x`.
///
/// `s2 = 1/2` (the Borda rule) and `s2 = s2'` admit no witness and return
/// [`Error::NotApplicable`]. Every returned profile has been re-verified by
/// exact tallies: the region's closed-form score gaps are checked both for
/// positivity and for agreement with the actual tally differences.
pub fn witness_three(s2: &Rational, s2p: &Rational) -> Result<(Profile, WitnessParameters)> {
    let s = ScoreVector::three(s2.clone())?;
    let sp = ScoreVector::three(s2p.clone())?;
    if s2 == &frac(1, 2) {
        return Err(Error::NotApplicable(
            "the Borda rule never elects a Condorcet loser, so it has no witness".into(),
        ));
    }
    if s2 == s2p {
        return Err(Error::NotApplicable(
            "identical rules select identical winners on every profile".into(),
        ));
    }
    let case = ThreeCase::of(s2, s2p)?;
    let params = parameters_for(case, s2, s2p)?;
    if !params.satisfies_bounds(s2, s2p) {
        return Err(Error::ConstructionFault(format!(
            "chosen parameters violate the {} bounds",
            case.label()
        )));
    }
    let profile = counts_for(&params).to_profile();

    let totals = profile.total_scores(&s)?;
    let totals_p = profile.total_scores(&sp)?;
    for check in params.gap_checks(s2, s2p) {
        if check.value <= Rational::zero() {
            return Err(Error::ConstructionFault(format!(
                "{} gap {} is not positive in region {}",
                check.label,
                format_rational(&check.value),
                case.label()
            )));
        }
        let actual = if check.primed {
            totals_p[check.ahead.0].clone() - &totals_p[check.behind.0]
        } else {
            totals[check.ahead.0].clone() - &totals[check.behind.0]
        };
        if actual != check.value {
            return Err(Error::ConstructionFault(format!(
                "{} gap: closed form {} but tallies give {} in region {}",
                check.label,
                format_rational(&check.value),
                format_rational(&actual),
                case.label()
            )));
        }
    }

    let verdicts = verify_witness(&profile, &s, &sp, X)?;
    if verdicts != (true, true, true) {
        return Err(Error::ConstructionFault(format!(
            "region {} produced a profile failing verification {:?}",
            case.label(),
            verdicts
        )));
    }
    Ok((profile, params))
}
