//! Anonymous preference profiles and election tallies.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use num::bigint::Sign;
use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::model::majority::MajorityMatrix;
use crate::model::order::{Alt, Alternatives, LinearOrder};
use crate::model::rational::{count_to_rational, Count, Rational};
use crate::model::score::ScoreVector;

/// An anonymous profile: a multiset of linear orders over a fixed registry
/// of alternatives, stored as order -> multiplicity.
///
/// Invariant: every stored multiplicity is positive, so structural equality
/// of the count maps is profile equality. Counts are arbitrary-precision;
/// the recursive witness constructions multiply profile sizes well past any
/// fixed-width integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    alts: Arc<Alternatives>,
    counts: BTreeMap<LinearOrder, Count>,
}

impl Profile {
    pub fn empty(alts: Arc<Alternatives>) -> Self {
        Self {
            alts,
            counts: BTreeMap::new(),
        }
    }

    pub fn new<I>(alts: Arc<Alternatives>, voters: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LinearOrder, Count)>,
    {
        let mut profile = Self::empty(alts);
        for (order, count) in voters {
            profile.add(order, count)?;
        }
        Ok(profile)
    }

    /// Adds `count` voters with the given ranking; duplicates accumulate.
    pub fn add(&mut self, order: LinearOrder, count: Count) -> Result<()> {
        if order.len() != self.alts.len() {
            return Err(Error::InvalidProfile(format!(
                "ranking over {} alternatives in a profile over {}",
                order.len(),
                self.alts.len()
            )));
        }
        if !count.is_zero() {
            *self.counts.entry(order).or_insert_with(Count::zero) += count;
        }
        Ok(())
    }

    /// The uniform profile: every one of the `m!` orders with multiplicity `t`.
    pub fn uniform(alts: Arc<Alternatives>, t: &Count) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::InvalidArgument(
                "uniform profile multiplicity must be positive".into(),
            ));
        }
        let m = alts.len();
        let mut profile = Self::empty(alts);
        for ids in (0..m).permutations(m) {
            profile.add(LinearOrder::from_ids(&ids)?, t.clone())?;
        }
        Ok(profile)
    }

    pub fn alternatives(&self) -> &Arc<Alternatives> {
        &self.alts
    }

    /// Number of alternatives.
    pub fn m(&self) -> usize {
        self.alts.len()
    }

    /// Distinct rankings with their positive multiplicities, in canonical order.
    pub fn counts(&self) -> impl Iterator<Item = (&LinearOrder, &Count)> {
        self.counts.iter()
    }

    pub fn order_kinds(&self) -> usize {
        self.counts.len()
    }

    pub fn voter_count(&self) -> Count {
        self.counts.values().fold(Count::zero(), |acc, c| acc + c)
    }

    pub fn is_unpopulated(&self) -> bool {
        self.counts.is_empty()
    }

    /// Exact positional tally of every alternative under `s`, indexed by id.
    pub fn total_scores(&self, s: &ScoreVector) -> Result<Vec<Rational>> {
        if s.len() != self.m() {
            return Err(Error::DimensionMismatch {
                got: s.len(),
                want: self.m(),
            });
        }
        let mut totals = vec![Rational::zero(); self.m()];
        for (order, count) in &self.counts {
            let weight = count_to_rational(count);
            for (pos, &alt) in order.ranking().iter().enumerate() {
                totals[alt.0] += &weight * s.at(pos + 1);
            }
        }
        Ok(totals)
    }

    /// The winner set: alternatives attaining the maximum tally. On an
    /// unpopulated profile every alternative ties at zero and all win.
    pub fn winners(&self, s: &ScoreVector) -> Result<Vec<Alt>> {
        let totals = self.total_scores(s)?;
        let best = totals.iter().max().expect("at least two alternatives");
        Ok(totals
            .iter()
            .enumerate()
            .filter(|(_, t)| *t == best)
            .map(|(i, _)| Alt(i))
            .collect())
    }

    pub fn majority_margins(&self) -> MajorityMatrix {
        let m = self.m();
        let mut wins = vec![BigInt::zero(); m * m];
        for (order, count) in &self.counts {
            let c = BigInt::from_biguint(Sign::Plus, count.clone());
            let ranking = order.ranking();
            for i in 0..m {
                for j in i + 1..m {
                    wins[ranking[i].0 * m + ranking[j].0] += &c;
                }
            }
        }
        let mut margins = vec![BigInt::zero(); m * m];
        for i in 0..m {
            for j in 0..m {
                margins[i * m + j] = wins[i * m + j].clone() - &wins[j * m + i];
            }
        }
        MajorityMatrix::from_margins(m, margins)
    }

    /// The alternative beaten by every other in pairwise majority, if any.
    pub fn condorcet_loser(&self) -> Option<Alt> {
        self.majority_margins().condorcet_loser()
    }

    /// Disjoint union of two electorates over the identical registry.
    pub fn merge(&self, other: &Profile) -> Result<Profile> {
        if self.alts.names() != other.alts.names() {
            return Err(Error::InvalidArgument(
                "cannot merge profiles over different alternative sets".into(),
            ));
        }
        let mut merged = self.clone();
        for (order, count) in &other.counts {
            merged.add(order.clone(), count.clone())?;
        }
        Ok(merged)
    }

    pub fn merge_all(profiles: &[Profile]) -> Result<Profile> {
        let (first, rest) = profiles.split_first().ok_or_else(|| {
            Error::InvalidArgument("cannot merge an empty list of profiles".into())
        })?;
        rest.iter().try_fold(first.clone(), |acc, p| acc.merge(p))
    }

    /// Multiplies every multiplicity by `k >= 1`. Tallies and margins scale
    /// by exactly `k`, so winners and the Condorcet loser are unchanged.
    pub fn replicate(&self, k: &Count) -> Result<Profile> {
        if k.is_zero() {
            return Err(Error::InvalidArgument(
                "replication factor must be positive".into(),
            ));
        }
        if k.is_one() {
            return Ok(self.clone());
        }
        let counts = self
            .counts
            .iter()
            .map(|(order, count)| (order.clone(), count * k))
            .collect();
        Ok(Profile {
            alts: self.alts.clone(),
            counts,
        })
    }

    /// Extends every ballot with a fresh alternative at the rank chosen by
    /// `rule` (1-based; `m + 1` means last). The new alternative takes the
    /// next free id.
    pub fn insert_alternative_with<F>(&self, name: &str, rule: F) -> Result<Profile>
    where
        F: Fn(&LinearOrder) -> usize,
    {
        let mut names: Vec<String> = self.alts.names().to_vec();
        names.push(name.to_string());
        let alts = Alternatives::new(names)?;
        let fresh = Alt(self.m());
        let mut extended = Profile::empty(alts);
        for (order, count) in &self.counts {
            extended.add(order.with_inserted(fresh, rule(order))?, count.clone())?;
        }
        Ok(extended)
    }

    /// Extends every ballot with a fresh alternative at a fixed rank.
    pub fn insert_alternative(&self, name: &str, rank: usize) -> Result<Profile> {
        self.insert_alternative_with(name, |_| rank)
    }

    /// Applies an id permutation (`perm[old] = new`); display names travel
    /// with their alternatives, so the election is unchanged up to labels.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Profile> {
        let m = self.m();
        if perm.len() != m {
            return Err(Error::InvalidArgument(format!(
                "permutation over {} ids applied to {} alternatives",
                perm.len(),
                m
            )));
        }
        let mut names = vec![String::new(); m];
        for old in 0..m {
            if perm[old] >= m || !names[perm[old]].is_empty() {
                return Err(Error::InvalidArgument(
                    "relabeling is not a permutation".into(),
                ));
            }
            names[perm[old]] = self.alts.name(Alt(old)).to_string();
        }
        let alts = Alternatives::new(names)?;
        let mut relabeled = Profile::empty(alts);
        for (order, count) in &self.counts {
            relabeled.add(order.relabeled(perm)?, count.clone())?;
        }
        Ok(relabeled)
    }

    /// Same election, new display names (id positions unchanged).
    pub fn renamed<S: Into<String>>(&self, names: Vec<S>) -> Result<Profile> {
        let alts = Alternatives::new(names)?;
        if alts.len() != self.m() {
            return Err(Error::InvalidArgument(format!(
                "{} names for {} alternatives",
                alts.len(),
                self.m()
            )));
        }
        Ok(Profile {
            alts,
            counts: self.counts.clone(),
        })
    }

    /// The restriction of every ballot to `keep`, whose order fixes the new
    /// ids `0..keep.len()`. Names are preserved.
    pub fn restricted(&self, keep: &[Alt]) -> Result<Profile> {
        let mut new_id = vec![None; self.m()];
        let mut names = Vec::with_capacity(keep.len());
        for (fresh, &alt) in keep.iter().enumerate() {
            if !self.alts.contains(alt) {
                return Err(Error::UnknownAlternative(format!("id {}", alt.0)));
            }
            if new_id[alt.0].is_some() {
                return Err(Error::InvalidArgument(
                    "restriction lists an alternative twice".into(),
                ));
            }
            new_id[alt.0] = Some(fresh);
            names.push(self.alts.name(alt).to_string());
        }
        let alts = Alternatives::new(names)?;
        let mut restricted = Profile::empty(alts);
        for (order, count) in &self.counts {
            restricted.add(order.restricted(&new_id), count.clone())?;
        }
        Ok(restricted)
    }
}
