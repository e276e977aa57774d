//! Sampling estimators for how often a scoring rule elects a Condorcet
//! loser, under impartial-culture and impartial-anonymous-culture draws.
//!
//! Estimators target the one-parameter family `(1, s2, 0)` over three
//! alternatives and run on an integer fast path (first-place and
//! second-place counts, pairwise wins), cross-checked in tests against the
//! exact enumeration oracle. Every sample gets its own generator seeded
//! from `(seed, index)`, so results are independent of chunking and thread
//! count, and a sample range can be split, computed apart, and merged.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{count, Alternatives, Profile, Rational, ScoreVector};
use crate::oracle::all_orders;

/// How ballots are drawn: impartial culture samples each voter's order
/// independently and uniformly; impartial anonymous culture samples a
/// ballot-count composition uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Culture {
    Ic,
    Iac,
}

impl FromStr for Culture {
    type Err = Error;

    fn from_str(text: &str) -> Result<Culture> {
        match text.to_ascii_lowercase().as_str() {
            "ic" => Ok(Culture::Ic),
            "iac" => Ok(Culture::Iac),
            other => Err(Error::Parse(format!(
                "unknown culture '{other}' (expected 'ic' or 'iac')"
            ))),
        }
    }
}

impl fmt::Display for Culture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Culture::Ic => "ic",
            Culture::Iac => "iac",
        })
    }
}

/// Decorrelates per-sample generator seeds (SplitMix64 finalizer), so
/// sample `index` draws the same profile no matter how the run is chunked.
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform j-subset of {0, .., symbols-1} by Floyd's algorithm, sorted.
fn floyd_bars(rng: &mut ChaCha8Rng, symbols: u64, j: usize, out: &mut Vec<u64>) {
    out.clear();
    for t in (symbols - j as u64)..symbols {
        let r = rng.gen_range(0..=t);
        if out.contains(&r) {
            out.push(t);
        } else {
            out.push(r);
        }
    }
    out.sort_unstable();
}

/// Fills `counts` (one slot per linear order, lexicographic) with one drawn
/// electorate of `n` voters. `bars` is reusable scratch for the
/// stars-and-bars decode.
fn draw_into(
    rng: &mut ChaCha8Rng,
    culture: Culture,
    n: u64,
    counts: &mut [u64],
    bars: &mut Vec<u64>,
) {
    counts.fill(0);
    match culture {
        Culture::Ic => {
            for _ in 0..n {
                counts[rng.gen_range(0..counts.len())] += 1;
            }
        }
        Culture::Iac => {
            // A composition of n into k parts is n stars and k-1 bars;
            // choosing the bar positions uniformly makes every composition
            // equally likely.
            let k = counts.len() as u64;
            let symbols = n + k - 1;
            let j = (k - 1) as usize;
            floyd_bars(rng, symbols, j, bars);
            counts[0] = bars[0];
            for i in 1..j {
                counts[i] = bars[i] - bars[i - 1] - 1;
            }
            counts[j] = (symbols - 1) - bars[j - 1];
        }
    }
}

/// One profile drawn from the culture, deterministic in the seed.
pub fn sample_profile(culture: Culture, n: u64, m: usize, seed: u64) -> Result<Profile> {
    if !(3..=8).contains(&m) {
        return Err(Error::InvalidArgument(
            "sampling supports between 3 and 8 alternatives".into(),
        ));
    }
    let alts = if m == 3 {
        Alternatives::xyz()
    } else {
        Alternatives::numbered(m)?
    };
    let orders = all_orders(&alts);
    let mut counts = vec![0u64; orders.len()];
    let mut bars = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_into(&mut rng, culture, n, &mut counts, &mut bars);
    let mut profile = Profile::empty(alts);
    for (order, &c) in orders.iter().zip(&counts) {
        if c > 0 {
            profile.add(order.clone(), count(c))?;
        }
    }
    Ok(profile)
}

// Lexicographic three-alternative orders: index 0 x>y>z, 1 x>z>y, 2 y>x>z,
// 3 y>z>x, 4 z>x>y, 5 z>y>x. The tallies below are hard-wired to this
// layout.
fn loser_of(c: &[u64; 6], n: u64) -> Option<usize> {
    let n = n as u128;
    let wins_xy = (c[0] + c[1] + c[4]) as u128;
    let wins_xz = (c[0] + c[1] + c[2]) as u128;
    let wins_yz = (c[0] + c[2] + c[3]) as u128;
    if 2 * wins_xy < n && 2 * wins_xz < n {
        Some(0)
    } else if 2 * wins_xy > n && 2 * wins_yz < n {
        Some(1)
    } else if 2 * wins_xz > n && 2 * wins_yz > n {
        Some(2)
    } else {
        None
    }
}

/// Whether alternative `who` attains the maximum of `q*firsts + p*seconds`,
/// the `(1, p/q, 0)` tally scaled by q.
fn attains_max(c: &[u64; 6], who: usize, p: u128, q: u128) -> bool {
    let firsts = [c[0] + c[1], c[2] + c[3], c[4] + c[5]];
    let seconds = [c[2] + c[4], c[0] + c[5], c[1] + c[3]];
    let score = |i: usize| q * firsts[i] as u128 + p * seconds[i] as u128;
    let mine = score(who);
    (0..3).all(|i| score(i) <= mine)
}

/// Mergeable tallies from a batch of samples: how many draws had a
/// Condorcet loser, and per rule, in how many of those the rule's winner
/// set contained it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionCounts {
    pub draws: u64,
    pub with_loser: u64,
    pub hits: Vec<u64>,
}

impl SelectionCounts {
    fn zero(rules: usize) -> Self {
        SelectionCounts {
            draws: 0,
            with_loser: 0,
            hits: vec![0; rules],
        }
    }

    pub fn merge(mut self, other: &SelectionCounts) -> SelectionCounts {
        self.draws += other.draws;
        self.with_loser += other.with_loser;
        for (a, b) in self.hits.iter_mut().zip(&other.hits) {
            *a += b;
        }
        self
    }

    fn absorb(&mut self, c: &[u64; 6], n: u64, rules: &[(u128, u128)]) {
        self.draws += 1;
        if let Some(cl) = loser_of(c, n) {
            self.with_loser += 1;
            for (hit, &(p, q)) in self.hits.iter_mut().zip(rules) {
                *hit += attains_max(c, cl, p, q) as u64;
            }
        }
    }
}

fn rule_fractions(s2s: &[Rational]) -> Result<Vec<(u128, u128)>> {
    s2s.iter()
        .map(|s2| {
            ScoreVector::three(s2.clone())?;
            let p = u128::try_from(s2.numer()).map_err(|_| {
                Error::InvalidArgument("middle score too large for the sampler".into())
            })?;
            let q = u128::try_from(s2.denom()).map_err(|_| {
                Error::InvalidArgument("middle score too large for the sampler".into())
            })?;
            Ok((p, q))
        })
        .collect()
}

/// Evaluates all rules `(1, s2, 0)` on samples `range` of the stream
/// identified by `seed`. Chunk-independent: disjoint ranges merge to the
/// same totals as one big range.
pub fn count_selections(
    s2s: &[Rational],
    n: u64,
    culture: Culture,
    seed: u64,
    range: std::ops::Range<u64>,
) -> Result<SelectionCounts> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sampled electorates must have at least one voter".into(),
        ));
    }
    let rules = Arc::new(rule_fractions(s2s)?);
    let counts = range
        .into_par_iter()
        .fold(
            || (SelectionCounts::zero(rules.len()), Vec::new()),
            |(mut acc, mut bars), index| {
                let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, index));
                let mut c = [0u64; 6];
                draw_into(&mut rng, culture, n, &mut c, &mut bars);
                acc.absorb(&c, n, &rules);
                (acc, bars)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(
            || SelectionCounts::zero(rules.len()),
            |a, b| a.merge(&b),
        );
    Ok(counts)
}

/// A sampled proportion with its binomial standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub point: f64,
    pub std_error: f64,
    /// Profiles drawn.
    pub draws: u64,
    /// Denominator of the reported proportion: draws, or for conditional
    /// estimates only the draws that had a Condorcet loser.
    pub qualifying: u64,
    pub hits: u64,
    pub conditional: bool,
}

fn make_estimate(hits: u64, counts: &SelectionCounts, conditional: bool) -> Result<Estimate> {
    let qualifying = if conditional {
        counts.with_loser
    } else {
        counts.draws
    };
    if qualifying == 0 {
        return Err(Error::InvalidArgument(format!(
            "none of the {} sampled profiles had a Condorcet loser; conditional estimate undefined",
            counts.draws
        )));
    }
    let point = hits as f64 / qualifying as f64;
    Ok(Estimate {
        point,
        std_error: (point * (1.0 - point) / qualifying as f64).sqrt(),
        draws: counts.draws,
        qualifying,
        hits,
        conditional,
    })
}

/// Estimated probability that the rule `(1, s2, 0)` elects a Condorcet
/// loser (winner-set membership) on an `n`-voter draw from the culture.
pub fn estimate_cl_selection(
    s2: &Rational,
    n: u64,
    culture: Culture,
    samples: u64,
    conditional: bool,
    seed: u64,
) -> Result<Estimate> {
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is required".into(),
        ));
    }
    let counts = count_selections(std::slice::from_ref(s2), n, culture, seed, 0..samples)?;
    make_estimate(counts.hits[0], &counts, conditional)
}

/// One rule's estimates in a sweep: the same counts read conditionally and
/// unconditionally.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub s2: Rational,
    pub conditional: Estimate,
    pub unconditional: Estimate,
}

/// Sweeps s2 over 0, 1/10, .., 1 in a single pass (the eleven rules share
/// every drawn profile) and reports both estimate variants per rule.
pub fn table2_sweep(
    n: u64,
    culture: Culture,
    samples: u64,
    seed: u64,
) -> Result<Vec<SweepRow>> {
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is required".into(),
        ));
    }
    let s2s: Vec<Rational> = (0..=10).map(|k| Rational::new(k.into(), 10.into())).collect();
    let counts = count_selections(&s2s, n, culture, seed, 0..samples)?;
    s2s.into_iter()
        .enumerate()
        .map(|(i, s2)| {
            Ok(SweepRow {
                s2,
                conditional: make_estimate(counts.hits[i], &counts, true)?,
                unconditional: make_estimate(counts.hits[i], &counts, false)?,
            })
        })
        .collect()
}
