//! Witness synthesis for any number of alternatives.
//!
//! A witness for an ordered pair of scoring rules `(s, s')` is a profile on
//! which the target alternative is the Condorcet loser, `s` elects it
//! uniquely, and `s'` does not elect it. [`witness`] builds one for every
//! valid pair: three alternatives go straight to the closed-form
//! constructions in [`crate::witness3`]; larger instances either reduce to a
//! smaller pair chosen by [`crate::reduce::classify`] and lift the smaller
//! witness back up, or, for the one family of pairs no reduction covers,
//! use direct cyclic profiles. Every profile returned has been re-verified
//! from scratch by exact tallies; [`WitnessReport::trace`] records the
//! construction path.

use std::fmt;

use itertools::Itertools;
use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::model::{
    count, count_to_rational, rat, Alt, Alternatives, Count, LinearOrder, Profile, Rational,
    ScoreVector,
};
use crate::reduce::{classify, ReductionCase};
use crate::witness3::{pick_integer_above, witness_three, ThreeCase};

/// Which end of the score vector a reduction dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DropSide {
    First,
    Last,
}

impl DropSide {
    pub fn label(&self) -> &'static str {
        match self {
            DropSide::First => "drop-first",
            DropSide::Last => "drop-last",
        }
    }
}

/// One construction step, from the outermost instance down to the base.
#[derive(Debug, Clone)]
pub enum TraceStep {
    /// Closed-form three-alternative construction.
    ThreeAlternative {
        case: ThreeCase,
        b: Rational,
        c: Option<Count>,
    },
    /// A smaller witness lifted by one alternative: its ballots are padded
    /// with the new alternative, uniform blocks pin every other alternative
    /// to a common benchmark, and one tie-break voter settles the new
    /// alternative's head-to-head contests.
    DropEmbed {
        m: usize,
        side: DropSide,
        sub_s: ScoreVector,
        sub_sp: ScoreVector,
        base_voters: Count,
        /// Voters carrying the base pattern, `lcm(base_voters, (m-1)!)`
        /// doubled until every score gap clears the tie-break voter.
        replication: Count,
        /// Multiplicity of each ballot in one uniform block.
        block: Count,
        doublings: u32,
    },
    /// A three-alternative witness lifted to `m` alternatives at once: the
    /// middle of each ballot is filled with dummy alternatives in every
    /// arrangement, and uniform head/tail blocks pin the dummies to the
    /// all-rule benchmark.
    AverageEmbed {
        m: usize,
        sub_s: ScoreVector,
        sub_sp: ScoreVector,
        base_voters: Count,
        /// How often the target is ranked first / middle / last in the base.
        rank_split: [Count; 3],
    },
    /// Direct cyclic construction for `s` with constant middle `1/2` and
    /// `s'` with constant middle below `1/2`.
    CyclicLow { m: usize, alpha: Rational, b: Count },
    /// As above with the `s'` middle above `1/2`.
    CyclicHigh {
        m: usize,
        alpha: Rational,
        b: Count,
        c: Count,
    },
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::ThreeAlternative { case, b, c } => {
                write!(
                    f,
                    "three-alternative construction {} with b = {}",
                    case.label(),
                    crate::model::format_rational(b)
                )?;
                if let Some(c) = c {
                    write!(f, ", c = {c}")?;
                }
                Ok(())
            }
            TraceStep::DropEmbed {
                m,
                side,
                sub_s,
                sub_sp,
                base_voters,
                replication,
                block,
                doublings,
            } => write!(
                f,
                "m={m}: {} reduction to ({sub_s}) vs ({sub_sp}); base of {base_voters} voters \
                 embedded with replication {replication} ({doublings} doublings), block \
                 multiplicity {block}, one tie-break voter",
                side.label()
            ),
            TraceStep::AverageEmbed {
                m,
                sub_s,
                sub_sp,
                base_voters,
                rank_split,
            } => write!(
                f,
                "m={m}: averaged reduction to ({sub_s}) vs ({sub_sp}); base of {base_voters} \
                 voters, target ranked first/middle/last {}/{}/{} times",
                rank_split[0], rank_split[1], rank_split[2]
            ),
            TraceStep::CyclicLow { m, alpha, b } => write!(
                f,
                "m={m}: cyclic construction for constant middles (alpha = {}) with b = {b}",
                crate::model::format_rational(alpha)
            ),
            TraceStep::CyclicHigh { m, alpha, b, c } => write!(
                f,
                "m={m}: cyclic construction for constant middles (alpha = {}) with b = {b}, c = {c}",
                crate::model::format_rational(alpha)
            ),
        }
    }
}

/// A synthesized witness, its construction path, and its verification.
#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub s: ScoreVector,
    pub s_prime: ScoreVector,
    pub profile: Profile,
    /// The alternative that loses every head-to-head contest yet wins under
    /// `s`; always id 0 (named `x` or `x1`).
    pub target: Alt,
    /// Construction steps, outermost first.
    pub trace: Vec<TraceStep>,
    /// Re-verified conditions, see [`verify_witness`].
    pub verdicts: (bool, bool, bool),
}

/// Checks the three witness conditions by exact tallies: `target` is the
/// Condorcet loser, `s` elects `target` uniquely, and `s'` does not elect
/// `target`.
pub fn verify_witness(
    profile: &Profile,
    s: &ScoreVector,
    sp: &ScoreVector,
    target: Alt,
) -> Result<(bool, bool, bool)> {
    if !profile.alternatives().contains(target) {
        return Err(Error::UnknownAlternative(format!("id {}", target.0)));
    }
    let is_loser = profile.condorcet_loser() == Some(target);
    let unique_winner = profile.winners(s)? == vec![target];
    let excluded = !profile.winners(sp)?.contains(&target);
    Ok((is_loser, unique_winner, excluded))
}

/// Builds a verified witness for the pair `(s, s')`.
///
/// Fails with [`Error::NotApplicable`] when `s` is the Borda rule (which
/// never elects a Condorcet loser) or when the two rules are equal; these
/// are the only pairs without a witness.
pub fn witness(s: &ScoreVector, sp: &ScoreVector) -> Result<WitnessReport> {
    if s.len() != sp.len() {
        return Err(Error::DimensionMismatch {
            got: sp.len(),
            want: s.len(),
        });
    }
    if s.is_borda() {
        return Err(Error::NotApplicable(
            "the Borda rule never elects a Condorcet loser, so it has no witness".into(),
        ));
    }
    if s == sp {
        return Err(Error::NotApplicable(
            "identical rules select identical winners on every profile".into(),
        ));
    }

    let m = s.len();
    let (profile, trace) = if m == 3 {
        let (profile, params) = witness_three(s.at(2), sp.at(2))?;
        (
            profile,
            vec![TraceStep::ThreeAlternative {
                case: params.case,
                b: params.b,
                c: params.c,
            }],
        )
    } else {
        match classify(s, sp)? {
            ReductionCase::SpecialLow { alpha } => {
                let (profile, b) = cyclic_low(m, &alpha)?;
                (profile, vec![TraceStep::CyclicLow { m, alpha, b }])
            }
            ReductionCase::SpecialHigh { alpha } => {
                let (profile, b, c) = cyclic_high(m, &alpha)?;
                (profile, vec![TraceStep::CyclicHigh { m, alpha, b, c }])
            }
            ReductionCase::Average { s: sub_s, sp: sub_sp } => {
                let base = witness(&sub_s, &sub_sp)?;
                let (profile, step) = embed_average(s, sp, &base)?;
                let mut trace = vec![step];
                trace.extend(base.trace);
                (profile, trace)
            }
            ReductionCase::DropFirst { s: sub_s, sp: sub_sp } => {
                let base = witness(&sub_s, &sub_sp)?;
                let (profile, step) = embed_drop(DropSide::First, s, sp, &base)?;
                let mut trace = vec![step];
                trace.extend(base.trace);
                (profile, trace)
            }
            ReductionCase::DropLast { s: sub_s, sp: sub_sp } => {
                let base = witness(&sub_s, &sub_sp)?;
                let (profile, step) = embed_drop(DropSide::Last, s, sp, &base)?;
                let mut trace = vec![step];
                trace.extend(base.trace);
                (profile, trace)
            }
        }
    };

    let verdicts = verify_witness(&profile, s, sp, Alt(0))?;
    if verdicts != (true, true, true) {
        return Err(Error::ConstructionFault(format!(
            "witness for ({s}) vs ({sp}) failed verification {verdicts:?}"
        )));
    }
    Ok(WitnessReport {
        s: s.clone(),
        s_prime: sp.clone(),
        profile,
        target: Alt(0),
        trace,
        verdicts,
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstructionFault(msg()))
    }
}

fn factorial(n: usize) -> Count {
    (1..=n as u64).fold(Count::one(), |acc, i| acc * i)
}

/// `1 + ((j - 1) mod (m - 1))`: cycles a 1-based index through `1..=m-1`.
fn cyc(j: usize, m: usize) -> usize {
    1 + (j - 1) % (m - 1)
}

/// Cyclic ballot of the non-target alternatives starting at `y_k`, with the
/// target inserted at the requested position.
enum CyclicRow {
    /// Target at rank `m - 1`, just above `y_{k-1}`.
    SecondLast,
    Last,
    First,
}

fn cyclic_row(m: usize, k: usize, shape: CyclicRow) -> LinearOrder {
    let mut ids = Vec::with_capacity(m);
    match shape {
        CyclicRow::SecondLast => {
            ids.extend((0..m - 2).map(|i| cyc(k + i, m)));
            ids.push(0);
            ids.push(cyc(k + m - 2, m));
        }
        CyclicRow::Last => {
            ids.extend((0..m - 1).map(|i| cyc(k + i, m)));
            ids.push(0);
        }
        CyclicRow::First => {
            ids.push(0);
            ids.extend((0..m - 1).map(|i| cyc(k + i, m)));
        }
    }
    LinearOrder::from_ids(&ids).expect("cyclic rows are permutations")
}

/// Direct construction for `s = (1, 1/2, ..., 1/2, 0)` against `s'` with
/// constant middle `alpha < 1/2`.
///
/// `m - 1` cyclic rows of `b` ballots place the target just above a
/// rotating last place, and one extra ballot puts it on top. Under `s` the
/// target leads by exactly `1/2`; under `s'` the alternative ranked second
/// by the extra ballot overtakes it by `b(1 - 2 alpha) - (1 - alpha) > 0`.
fn cyclic_low(m: usize, alpha: &Rational) -> Result<(Profile, Count)> {
    let one = rat(1);
    let threshold = (one.clone() - alpha) / (one - rat(2) * alpha);
    let b = pick_integer_above(&threshold);
    let alts = Alternatives::numbered(m)?;
    let mut profile = Profile::empty(alts);
    for k in 1..m {
        profile.add(cyclic_row(m, k, CyclicRow::SecondLast), b.clone())?;
    }
    profile.add(
        LinearOrder::from_ids(&(0..m).collect::<Vec<_>>()).expect("identity order"),
        Count::one(),
    )?;

    // The s' lead of the second-ranked alternative over the target has a
    // closed form; check it against the tallies.
    let sp = constant_middle_vector(m, alpha)?;
    let tallies = profile.total_scores(&sp)?;
    let lead = tallies[1].clone() - &tallies[0];
    let expected =
        count_to_rational(&b) * (rat(1) - rat(2) * alpha) - (rat(1) - alpha);
    ensure(lead == expected && lead.is_positive(), || {
        format!("cyclic-low lead {lead} does not match b = {b}, alpha = {alpha}")
    })?;
    Ok((profile, b))
}

/// Direct construction for `s = (1, 1/2, ..., 1/2, 0)` against `s'` with
/// constant middle `alpha > 1/2`.
///
/// Three cyclic families: `b` ballots per rotation with the target second
/// to last, `b` with it last, and `c` with it first, where `b < c` keeps the
/// target ahead by `(m/2)(c - b)` under `s` while `c` is small enough that
/// it still loses every head-to-head contest and falls behind under `s'`.
fn cyclic_high(m: usize, alpha: &Rational) -> Result<(Profile, Count, Count)> {
    let one = rat(1);
    let two = rat(2);
    // c must stay below both slopes' multiples of b; both slopes exceed 1,
    // so b with b + 1 < min_slope * b exists and c = b + 1 works.
    let slope_majority = rat(2 * m as i64 - 4) / rat(m as i64 - 1);
    let slope_prime = (two.clone() + rat(m as i64 - 4) * alpha)
        / (rat(m as i64 - 1) - rat(m as i64 - 2) * alpha);
    let slope = slope_majority.min(slope_prime);
    ensure(slope > one, || {
        format!("cyclic-high slope {slope} not above 1 for alpha = {alpha}")
    })?;
    let b = pick_integer_above(&(rat(1) / (slope - rat(1))));
    let c = &b + 1u8;

    let alts = Alternatives::numbered(m)?;
    let mut profile = Profile::empty(alts);
    for k in 1..m {
        profile.add(cyclic_row(m, k, CyclicRow::SecondLast), b.clone())?;
        profile.add(cyclic_row(m, k, CyclicRow::Last), b.clone())?;
        profile.add(cyclic_row(m, k, CyclicRow::First), c.clone())?;
    }

    // Closed forms: under s the target leads each rival by (m/2)(c - b);
    // under s' the rival y_1 leads by (2 + (m-4)a)b - (m-1 - (m-2)a)c.
    let s = constant_middle_vector(m, &(one.clone() / &two))?;
    let tallies = profile.total_scores(&s)?;
    let lead = tallies[0].clone() - &tallies[1];
    let c_minus_b = count_to_rational(&c) - count_to_rational(&b);
    ensure(lead == rat(m as i64) / two * &c_minus_b, || {
        format!("cyclic-high lead {lead} does not match (m/2)(c - b)")
    })?;
    let sp = constant_middle_vector(m, alpha)?;
    let tallies_p = profile.total_scores(&sp)?;
    let lead_p = tallies_p[1].clone() - &tallies_p[0];
    let expected_p = (rat(2) + rat(m as i64 - 4) * alpha) * count_to_rational(&b)
        - (rat(m as i64 - 1) - rat(m as i64 - 2) * alpha) * count_to_rational(&c);
    ensure(lead_p == expected_p && lead_p.is_positive(), || {
        format!("cyclic-high s' lead {lead_p} does not match b = {b}, c = {c}")
    })?;
    Ok((profile, b, c))
}

fn constant_middle_vector(m: usize, value: &Rational) -> Result<ScoreVector> {
    let mut entries = vec![rat(1)];
    entries.extend(std::iter::repeat_n(value.clone(), m - 2));
    entries.push(rat(0));
    ScoreVector::new(entries)
}

fn numbered_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x{i}")).collect()
}

/// Lifts a witness on `m - 1` alternatives to one on `m` by introducing a
/// fresh alternative `x_m`.
///
/// The base ballots are padded with `x_m` at the dropped end (so the old
/// scores transfer affinely), and `m - 1` uniform blocks cycle `x_m`
/// through the remaining ranks, which pins its tally to exactly the average
/// of the others under every scoring rule and ties all its head-to-head
/// contests at half the electorate. The base pattern is doubled until every
/// decisive score gap exceeds 1, then a single tie-break ballot ranking the
/// target last makes the new alternative beat it without disturbing any
/// score decision.
fn embed_drop(
    side: DropSide,
    s: &ScoreVector,
    sp: &ScoreVector,
    base: &WitnessReport,
) -> Result<(Profile, TraceStep)> {
    let m = s.len();
    let sub_m = m - 1;
    debug_assert_eq!(base.profile.m(), sub_m);

    // Put one of the base's s'-winners at id 1 so the lifted profile has a
    // known alternative overtaking the target under s'.
    let dominator = *base
        .profile
        .winners(&base.s_prime)?
        .first()
        .expect("populated profiles have winners");
    ensure(dominator != base.target, || {
        "base witness elects its target under s'".into()
    })?;
    let mut perm: Vec<usize> = (0..sub_m).collect();
    perm.swap(1, dominator.0);
    let base_profile = base
        .profile
        .relabeled(&perm)?
        .renamed(numbered_names(sub_m))?;

    let n0 = base_profile.voter_count();
    let block_fact = factorial(sub_m);
    let k0 = n0.lcm(&block_fact);
    let reps = &k0 / &n0;
    let t0 = &k0 / &block_fact;
    let new_name = format!("x{m}");

    let padded_rank = match side {
        DropSide::First => 1,
        DropSide::Last => m,
    };
    let block_ranks = match side {
        DropSide::First => 2..=m,
        DropSide::Last => 1..=sub_m,
    };

    let mut parts = vec![base_profile
        .replicate(&reps)?
        .insert_alternative(&new_name, padded_rank)?];
    let uniform = Profile::uniform(base_profile.alternatives().clone(), &t0)?;
    for rank in block_ranks {
        parts.push(uniform.insert_alternative(&new_name, rank)?);
    }
    let core = Profile::merge_all(&parts)?;

    // Structural invariants of the lift, checked exactly: x_m ties the
    // target at half the ballots, and its tally equals the common benchmark
    // K * sum(s) under both rules.
    let fresh = Alt(m - 1);
    ensure(
        core.voter_count() == count(m as u64) * &k0,
        || "lifted electorate size is off".into(),
    )?;
    ensure(
        core.majority_margins().margin(Alt(0), fresh) == &BigInt::zero(),
        || "fresh alternative does not tie the target".into(),
    )?;
    let tallies = core.total_scores(s)?;
    let tallies_p = core.total_scores(sp)?;
    let k0_rat = count_to_rational(&k0);
    ensure(tallies[fresh.0] == k0_rat.clone() * s.sum(), || {
        "fresh alternative misses the benchmark under s".into()
    })?;
    ensure(tallies_p[fresh.0] == k0_rat * sp.sum(), || {
        "fresh alternative misses the benchmark under s'".into()
    })?;

    // Every decisive gap must clear the one tie-break ballot; they all
    // scale linearly with replication, so double until the least does.
    let mut min_gap: Option<Rational> = None;
    let mut note = |gap: Rational| {
        if min_gap.as_ref().is_none_or(|g| gap < *g) {
            min_gap = Some(gap);
        }
    };
    for k in 1..m {
        note(tallies[0].clone() - &tallies[k]);
    }
    note(tallies_p[1].clone() - &tallies_p[0]);
    let min_gap = min_gap.expect("m >= 4 yields gaps");
    ensure(min_gap.is_positive(), || {
        format!("lifted profile lost a score gap ({min_gap})")
    })?;
    let mut doublings = 0u32;
    let mut cleared = min_gap;
    while cleared <= rat(1) {
        cleared *= rat(2);
        doublings += 1;
    }

    let mut lifted = core.replicate(&Count::from(2u8).pow(doublings))?;
    let descending: Vec<usize> = (0..m).rev().collect();
    lifted.add(
        LinearOrder::from_ids(&descending).expect("descending order"),
        Count::one(),
    )?;

    let factor = Count::from(2u8).pow(doublings);
    let step = TraceStep::DropEmbed {
        m,
        side,
        sub_s: base.s.clone(),
        sub_sp: base.s_prime.clone(),
        base_voters: n0,
        replication: k0 * &factor,
        block: t0 * &factor,
        doublings,
    };
    Ok((lifted, step))
}

/// Lifts a three-alternative witness straight to `m` alternatives.
///
/// Each base ballot keeps its top and bottom; its middle alternative and
/// the `m - 3` fresh dummies fill the interior in every one of the `(m-2)!`
/// arrangements, `3(m-2)` ballots each, so the three originals keep their
/// relative tallies under every rule whose middle scores average to the
/// base's middle score. For every dummy, uniform blocks rank it first and
/// last equally often, which lands each dummy on the one benchmark
/// `n (2m-5) (m-2)! sum(s)` that is independent of the rule, strictly
/// between the target's tally and the field, while all its head-to-head
/// contests against the target are lost because the base target sits last
/// more often than first.
fn embed_average(
    s: &ScoreVector,
    sp: &ScoreVector,
    base: &WitnessReport,
) -> Result<(Profile, TraceStep)> {
    let m = s.len();
    debug_assert_eq!(base.profile.m(), 3);
    let n = base.profile.voter_count();

    let mut split = [Count::zero(), Count::zero(), Count::zero()];
    for (order, cnt) in base.profile.counts() {
        split[order.rank(base.target)? - 1] += cnt;
    }
    ensure(split[2] > split[0], || {
        "base target must sit last more often than first".into()
    })?;

    let alts = Alternatives::new(numbered_names(m))?;
    let star_mult = count(3 * (m as u64 - 2));
    let mut star = Profile::empty(alts.clone());
    for (order, cnt) in base.profile.counts() {
        let ids: Vec<usize> = order.ranking().iter().map(|a| a.0).collect();
        let mut interior: Vec<usize> = vec![ids[1]];
        interior.extend(3..m);
        for arrangement in interior.iter().copied().permutations(m - 2) {
            let mut ballot = Vec::with_capacity(m);
            ballot.push(ids[0]);
            ballot.extend(arrangement);
            ballot.push(ids[2]);
            star.add(LinearOrder::from_ids(&ballot)?, cnt * &star_mult)?;
        }
    }

    // The arranged ballots restrict exactly to the base, replicated once
    // per arrangement per multiplicity.
    let restriction = star.restricted(&[Alt(0), Alt(1), Alt(2)])?;
    let expected = base
        .profile
        .replicate(&(star_mult * factorial(m - 2)))?
        .renamed(numbered_names(3))?;
    ensure(restriction == expected, || {
        "arranged ballots do not restrict to the base witness".into()
    })?;

    let mut parts = vec![star];
    for dummy in 3..m {
        let others: Vec<usize> = (0..m).filter(|&i| i != dummy).collect();
        let mut block = Profile::empty(alts.clone());
        for arrangement in others.iter().copied().permutations(m - 1) {
            let mut first = Vec::with_capacity(m);
            first.push(dummy);
            first.extend(arrangement.iter().copied());
            block.add(LinearOrder::from_ids(&first)?, n.clone())?;
            let mut last = arrangement;
            last.push(dummy);
            block.add(LinearOrder::from_ids(&last)?, n.clone())?;
        }
        parts.push(block);
    }
    let lifted = Profile::merge_all(&parts)?;

    // Every dummy must land exactly on the rule-independent benchmark.
    let benchmark_scale = count_to_rational(&(&n * count(2 * m as u64 - 5) * factorial(m - 2)));
    let tallies = lifted.total_scores(s)?;
    let tallies_p = lifted.total_scores(sp)?;
    for dummy in 3..m {
        ensure(tallies[dummy] == benchmark_scale.clone() * s.sum(), || {
            format!("dummy x{} misses the benchmark under s", dummy + 1)
        })?;
        ensure(tallies_p[dummy] == benchmark_scale.clone() * sp.sum(), || {
            format!("dummy x{} misses the benchmark under s'", dummy + 1)
        })?;
    }

    let step = TraceStep::AverageEmbed {
        m,
        sub_s: base.s.clone(),
        sub_sp: base.s_prime.clone(),
        base_voters: n,
        rank_split: split,
    };
    Ok((lifted, step))
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::model::frac;

    fn sv(entries: &[(i64, i64)]) -> ScoreVector {
        ScoreVector::new(entries.iter().map(|&(n, d)| frac(n, d)).collect()).unwrap()
    }

    #[test]
    fn three_alternative_pairs_delegate_to_closed_forms() {
        let s = sv(&[(1, 1), (1, 1), (0, 1)]);
        let sp = sv(&[(1, 1), (3, 4), (0, 1)]);
        let report = witness(&s, &sp).unwrap();
        assert_eq!(report.verdicts, (true, true, true));
        assert_eq!(report.target, Alt(0));
        assert_eq!(report.profile.alternatives().names(), ["x", "y", "z"]);
        assert_eq!(report.trace.len(), 1);
        assert!(matches!(
            report.trace[0],
            TraceStep::ThreeAlternative {
                case: ThreeCase::HighPairDown,
                ..
            }
        ));
    }

    #[test]
    fn borda_and_identical_pairs_are_rejected() {
        let borda = ScoreVector::borda(4).unwrap();
        let other = sv(&[(1, 1), (1, 2), (1, 2), (0, 1)]);
        assert!(matches!(
            witness(&borda, &other),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            witness(&other, &other.clone()),
            Err(Error::NotApplicable(_))
        ));
        let short = sv(&[(1, 1), (1, 2), (0, 1)]);
        assert!(matches!(
            witness(&other, &short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn cyclic_low_frozen_example() {
        let s = sv(&[(1, 1), (1, 2), (1, 2), (0, 1)]);
        let sp = sv(&[(1, 1), (1, 4), (1, 4), (0, 1)]);
        let report = witness(&s, &sp).unwrap();
        assert_eq!(report.verdicts, (true, true, true));
        assert!(matches!(
            report.trace[0],
            TraceStep::CyclicLow { m: 4, ref b, .. } if *b == count(2)
        ));
        assert_eq!(report.profile.voter_count(), count(7));

        let tallies = report.profile.total_scores(&s).unwrap();
        assert_eq!(tallies[0], rat(4));
        assert_eq!(tallies[1], frac(7, 2));
        assert_eq!(tallies[2], frac(7, 2));
        assert_eq!(tallies[3], rat(3));
        let tallies_p = report.profile.total_scores(&sp).unwrap();
        assert_eq!(tallies_p[0], frac(5, 2));
        assert_eq!(tallies_p[1], frac(11, 4));
    }

    #[test]
    fn cyclic_high_frozen_example() {
        let s = sv(&[(1, 1), (1, 2), (1, 2), (0, 1)]);
        let sp = sv(&[(1, 1), (3, 4), (3, 4), (0, 1)]);
        let report = witness(&s, &sp).unwrap();
        assert_eq!(report.verdicts, (true, true, true));
        assert!(matches!(
            report.trace[0],
            TraceStep::CyclicHigh { m: 4, ref b, ref c, .. }
                if *b == count(4) && *c == count(5)
        ));
        assert_eq!(report.profile.voter_count(), count(39));

        let tallies = report.profile.total_scores(&s).unwrap();
        assert_eq!(tallies[0], rat(21));
        assert_eq!(tallies[1], rat(19));
        let tallies_p = report.profile.total_scores(&sp).unwrap();
        assert_eq!(tallies_p[0], rat(24));
        assert_eq!(tallies_p[1], frac(49, 2));
    }

    #[test]
    fn averaged_route_example() {
        let s = sv(&[(1, 1), (1, 1), (1, 1), (0, 1)]);
        let sp = ScoreVector::borda(4).unwrap();
        let report = witness(&s, &sp).unwrap();
        assert_eq!(report.verdicts, (true, true, true));
        match &report.trace[0] {
            TraceStep::AverageEmbed { m, sub_s, sub_sp, rank_split, .. } => {
                assert_eq!(*m, 4);
                assert_eq!(*sub_s, sv(&[(1, 1), (1, 1), (0, 1)]));
                assert_eq!(*sub_sp, sv(&[(1, 1), (1, 2), (0, 1)]));
                assert!(rank_split[2] > rank_split[0]);
            }
            other => panic!("expected averaged embed, got {other}"),
        }
        assert_eq!(report.trace.len(), 2);
        assert!(matches!(report.trace[1], TraceStep::ThreeAlternative { .. }));
        assert_eq!(
            report.profile.alternatives().names(),
            ["x1", "x2", "x3", "x4"]
        );
    }

    #[test]
    fn drop_first_route_example() {
        let s = sv(&[(1, 1), (3, 4), (1, 4), (0, 1)]);
        let sp = sv(&[(1, 1), (1, 2), (1, 4), (0, 1)]);
        let report = witness(&s, &sp).unwrap();
        assert_eq!(report.verdicts, (true, true, true));
        assert!(matches!(
            report.trace[0],
            TraceStep::DropEmbed {
                m: 4,
                side: DropSide::First,
                ..
            }
        ));
    }

    #[test]
    fn drop_last_route_example() {
        let s = sv(&[(1, 1), (1, 2), (1, 4), (0, 1)]);
        let sp = sv(&[(1, 1), (3, 8), (3, 8), (0, 1)]);
        let report = witness(&s, &sp).unwrap();
        assert_eq!(report.verdicts, (true, true, true));
        assert!(matches!(
            report.trace[0],
            TraceStep::DropEmbed {
                m: 4,
                side: DropSide::Last,
                ..
            }
        ));
    }

    #[test]
    fn verify_rejects_unknown_target() {
        let s = sv(&[(1, 1), (0, 1), (0, 1)]);
        let profile = Profile::uniform(Alternatives::xyz(), &count(1)).unwrap();
        assert!(verify_witness(&profile, &s, &s, Alt(7)).is_err());
    }

    #[test]
    fn verify_reports_failures_without_error() {
        // A profile where the target wins head-to-heads: all verdicts off.
        let alts = Alternatives::xyz();
        let mut profile = Profile::empty(alts);
        profile
            .add(LinearOrder::from_ids(&[0, 1, 2]).unwrap(), count(5))
            .unwrap();
        profile
            .add(LinearOrder::from_ids(&[1, 2, 0]).unwrap(), count(2))
            .unwrap();
        let plurality = sv(&[(1, 1), (0, 1), (0, 1)]);
        let borda = ScoreVector::borda(3).unwrap();
        let (cl, unique, excluded) =
            verify_witness(&profile, &plurality, &borda, Alt(0)).unwrap();
        assert!(!cl);
        assert!(unique);
        assert!(!excluded);
    }

    fn random_vector(rng: &mut ChaCha8Rng, m: usize, max_denominator: u64) -> ScoreVector {
        loop {
            let mut middles: Vec<Rational> = (0..m - 2)
                .map(|_| {
                    let d = rng.gen_range(1..=max_denominator);
                    let n = rng.gen_range(0..=d);
                    frac(n as i64, d as i64)
                })
                .collect();
            middles.sort_by(|a, b| b.cmp(a));
            let mut entries = vec![rat(1)];
            entries.extend(middles);
            entries.push(rat(0));
            if let Ok(s) = ScoreVector::new(entries) {
                return s;
            }
        }
    }

    #[test]
    fn random_pairs_yield_verified_witnesses_up_to_six_alternatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x656d_6265_6464);
        for m in 3..=6 {
            let mut built = 0;
            while built < 12 {
                let s = random_vector(&mut rng, m, 20);
                let sp = random_vector(&mut rng, m, 20);
                if s.is_borda() || s == sp {
                    continue;
                }
                let report = witness(&s, &sp)
                    .unwrap_or_else(|e| panic!("witness({s}; {sp}) failed: {e}"));
                assert_eq!(report.verdicts, (true, true, true));
                assert_eq!(report.target, Alt(0));
                assert!(report.trace.len() <= m - 2, "trace too deep for m = {m}");
                built += 1;
            }
        }
    }

    #[test]
    fn witnesses_work_in_both_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6269_6469_7265);
        let mut built = 0;
        while built < 10 {
            let m = rng.gen_range(3..=5);
            let s = random_vector(&mut rng, m, 12);
            let sp = random_vector(&mut rng, m, 12);
            if s == sp {
                continue;
            }
            for (a, b) in [(&s, &sp), (&sp, &s)] {
                if a.is_borda() {
                    assert!(matches!(witness(a, b), Err(Error::NotApplicable(_))));
                } else {
                    let report = witness(a, b).unwrap();
                    assert_eq!(report.verdicts, (true, true, true));
                }
            }
            built += 1;
        }
    }
}
