//! Brute-force ground truth: exhaustive enumeration of anonymous profiles.
//!
//! Anonymous profiles with `n` voters over `m` alternatives correspond
//! one-to-one with compositions of `n` into `m!` nonnegative parts, so small
//! spaces can be enumerated completely: `C(n + m! - 1, m! - 1)` profiles.
//! On top of the enumeration sit audits (the Borda rule never elects a
//! Condorcet loser), minimal-witness searches, and bounded scans comparing
//! where two rules elect Condorcet losers. [`selects_cl`] deliberately
//! recomputes tallies through an integer-scaled path that shares nothing
//! with [`Profile::total_scores`], so the two implementations check each
//! other.

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::model::{count, Alternatives, Count, LinearOrder, Profile, ScoreVector};
use crate::witnessgen::verify_witness;
use std::sync::Arc;

/// Default cap on how many profiles an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A bounded slice of the anonymous-profile space: all profiles with
/// exactly `n` voters over the given alternatives.
#[derive(Debug)]
pub struct EnumerationSpace {
    alts: Arc<Alternatives>,
    orders: Vec<LinearOrder>,
    n: u64,
    size: Count,
}

pub(crate) fn all_orders(alts: &Arc<Alternatives>) -> Vec<LinearOrder> {
    use itertools::Itertools;
    (0..alts.len())
        .permutations(alts.len())
        .map(|ids| LinearOrder::from_ids(&ids).expect("permutations are orders"))
        .collect()
}

/// `C(n + parts - 1, parts - 1)`: the number of profiles in the space.
pub fn space_size(parts: u64, n: u64) -> Count {
    num::integer::binomial(Count::from(n + parts - 1), Count::from(parts - 1))
}

/// Profiles with `0..=n_max` voters combined: `C(n_max + parts, parts)` by
/// the hockey-stick identity.
pub fn cumulative_space_size(parts: u64, n_max: u64) -> Count {
    num::integer::binomial(Count::from(n_max + parts), Count::from(parts))
}

fn check_budget(size: &Count, budget: u128) -> Result<()> {
    if *size > Count::from(budget) {
        Err(Error::BudgetExceeded {
            needed: u128::try_from(size.clone()).unwrap_or(u128::MAX),
            budget,
        })
    } else {
        Ok(())
    }
}

impl EnumerationSpace {
    pub fn new(alts: Arc<Alternatives>, n: u64, budget: u128) -> Result<Self> {
        let orders = all_orders(&alts);
        let size = space_size(orders.len() as u64, n);
        check_budget(&size, budget)?;
        Ok(EnumerationSpace {
            alts,
            orders,
            n,
            size,
        })
    }

    /// Exact space size, `C(n + m! - 1, m! - 1)`.
    pub fn size(&self) -> &Count {
        &self.size
    }

    pub fn iter(&self) -> Compositions<'_> {
        let mut counts = vec![0u64; self.orders.len()];
        counts[0] = self.n;
        Compositions {
            space: self,
            counts,
            done: false,
        }
    }
}

/// Streams every composition of `n` into `m!` parts exactly once.
pub struct Compositions<'a> {
    space: &'a EnumerationSpace,
    counts: Vec<u64>,
    done: bool,
}

impl Compositions<'_> {
    fn current(&self) -> Profile {
        let mut profile = Profile::empty(self.space.alts.clone());
        for (order, &c) in self.space.orders.iter().zip(&self.counts) {
            if c > 0 {
                profile
                    .add(order.clone(), count(c))
                    .expect("orders match registry");
            }
        }
        profile
    }

    /// Moves mass one step in reverse-lexicographic order: empty the
    /// leftmost nonzero non-final part, push one unit right, return the
    /// rest to the front.
    fn advance(&mut self) {
        let k = self.counts.len();
        match (0..k - 1).find(|&j| self.counts[j] > 0) {
            Some(j) => {
                let v = self.counts[j];
                self.counts[j] = 0;
                self.counts[0] = v - 1;
                self.counts[j + 1] += 1;
            }
            None => self.done = true,
        }
    }
}

impl Iterator for Compositions<'_> {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        let profile = self.current();
        self.advance();
        Some(profile)
    }
}

/// Convenience wrapper: the full stream for `(m, n)` under a budget.
pub fn enumerate_anonymous_profiles(
    alts: Arc<Alternatives>,
    n: u64,
    budget: u128,
) -> Result<EnumerationSpace> {
    EnumerationSpace::new(alts, n, budget)
}

/// Whether the rule's winner set contains a Condorcet loser (membership,
/// not uniqueness).
///
/// Recomputed from the ballots through integer arithmetic: scores are
/// rescaled by the least common denominator, so the tally comparison is a
/// pure big-integer argmax sharing no code with the rational tally path.
pub fn selects_cl(profile: &Profile, s: &ScoreVector) -> Result<bool> {
    let m = profile.m();
    if s.len() != m {
        return Err(Error::DimensionMismatch {
            got: s.len(),
            want: m,
        });
    }

    let mut wins = vec![vec![Count::zero(); m]; m];
    for (order, cnt) in profile.counts() {
        let ids = order.ranking();
        for a in 0..m {
            for b in a + 1..m {
                wins[ids[a].0][ids[b].0] += cnt;
            }
        }
    }
    let loser = (0..m).find(|&x| (0..m).all(|y| y == x || wins[x][y] < wins[y][x]));
    let Some(loser) = loser else {
        return Ok(false);
    };

    let scale = s
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let weights: Vec<BigInt> = s
        .entries()
        .iter()
        .map(|e| e.numer() * (&scale / e.denom()))
        .collect();
    let mut tallies = vec![BigInt::zero(); m];
    for (order, cnt) in profile.counts() {
        let cnt = BigInt::from(cnt.clone());
        for (rank0, alt) in order.ranking().iter().enumerate() {
            tallies[alt.0] += &cnt * &weights[rank0];
        }
    }
    let best = tallies.iter().max().expect("m >= 2");
    Ok(tallies[loser] == *best)
}

/// Counts enumerated profiles on which the Borda rule's winner set contains
/// a Condorcet loser, over all `n <= n_max`. Always 0.
pub fn borda_audit(m: usize, n_max: u64, budget: u128) -> Result<u64> {
    let alts = if m == 3 {
        Alternatives::xyz()
    } else {
        Alternatives::numbered(m)?
    };
    let parts = factorial_u64(m);
    let total = cumulative_space_size(parts, n_max);
    check_budget(&total, budget)?;
    let borda = ScoreVector::borda(m)?;
    let mut violations = 0;
    for n in 0..=n_max {
        for profile in EnumerationSpace::new(alts.clone(), n, budget)?.iter() {
            if selects_cl(&profile, &borda)? {
                violations += 1;
            }
        }
    }
    Ok(violations)
}

fn factorial_u64(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Searches for the fewest voters admitting a full witness profile: some
/// alternative is the Condorcet loser, `s` elects it uniquely, and `sp`
/// does not elect it. Three alternatives only.
pub fn minimal_witness_search(
    s: &ScoreVector,
    sp: &ScoreVector,
    n_max: u64,
    budget: u128,
) -> Result<Option<(u64, Profile)>> {
    if s.len() != 3 || sp.len() != 3 {
        return Err(Error::InvalidArgument(
            "minimal-witness search enumerates three alternatives only".into(),
        ));
    }
    if s == sp {
        return Err(Error::NotApplicable(
            "identical rules select identical winners on every profile".into(),
        ));
    }
    let total = cumulative_space_size(6, n_max) - 1u8;
    check_budget(&total, budget)?;
    let alts = Alternatives::xyz();
    for n in 1..=n_max {
        for profile in EnumerationSpace::new(alts.clone(), n, budget)?.iter() {
            let Some(target) = profile.condorcet_loser() else {
                continue;
            };
            if verify_witness(&profile, s, sp, target)? == (true, true, true) {
                return Ok(Some((n, profile)));
            }
        }
    }
    Ok(None)
}

/// Per-electorate-size counts from a [`dominance_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u64,
    /// Profiles where `s` elects the Condorcet loser.
    pub in_s: u64,
    /// Profiles where `sp` elects the Condorcet loser.
    pub in_sp: u64,
    /// Profiles where `s` elects the loser but `sp` does not.
    pub only_s: u64,
    /// Profiles where `sp` elects the loser but `s` does not.
    pub only_sp: u64,
}

/// Exhaustive comparison of where two rules elect Condorcet losers, with
/// one sample profile per strict difference direction.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub example_only_s: Option<Profile>,
    pub example_only_sp: Option<Profile>,
}

impl ScanReport {
    pub fn total_only_s(&self) -> u64 {
        self.rows.iter().map(|r| r.only_s).sum()
    }

    pub fn total_only_sp(&self) -> u64 {
        self.rows.iter().map(|r| r.only_sp).sum()
    }
}

/// Enumerates all profiles with `1..=n_max` voters over three alternatives
/// and tabulates the rules' Condorcet-loser selections against each other.
pub fn dominance_scan(
    s: &ScoreVector,
    sp: &ScoreVector,
    n_max: u64,
    budget: u128,
) -> Result<ScanReport> {
    if s.len() != 3 || sp.len() != 3 {
        return Err(Error::InvalidArgument(
            "dominance scan enumerates three alternatives only".into(),
        ));
    }
    let total = cumulative_space_size(6, n_max) - 1u8;
    check_budget(&total, budget)?;
    let alts = Alternatives::xyz();
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut example_only_s = None;
    let mut example_only_sp = None;
    for n in 1..=n_max {
        let mut row = ScanRow {
            n,
            in_s: 0,
            in_sp: 0,
            only_s: 0,
            only_sp: 0,
        };
        for profile in EnumerationSpace::new(alts.clone(), n, budget)?.iter() {
            let hit_s = selects_cl(&profile, s)?;
            let hit_sp = selects_cl(&profile, sp)?;
            row.in_s += hit_s as u64;
            row.in_sp += hit_sp as u64;
            if hit_s && !hit_sp {
                row.only_s += 1;
                example_only_s.get_or_insert(profile.clone());
            }
            if hit_sp && !hit_s {
                row.only_sp += 1;
                example_only_sp.get_or_insert(profile);
            }
        }
        rows.push(row);
    }
    Ok(ScanReport {
        rows,
        example_only_s,
        example_only_sp,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::model::{frac, profile_from_counts, rat, Alt};

    fn table_1784() -> Profile {
        profile_from_counts(
            Alternatives::new(vec!["A", "B", "C"]).unwrap(),
            &[(8, &["A", "B", "C"]), (7, &["B", "C", "A"]), (6, &["C", "B", "A"])],
        )
        .unwrap()
    }

    fn plurality() -> ScoreVector {
        ScoreVector::three(rat(0)).unwrap()
    }

    fn antiplurality() -> ScoreVector {
        ScoreVector::three(rat(1)).unwrap()
    }

    #[test]
    fn enumeration_sizes_match_the_closed_form() {
        let alts = Alternatives::xyz();
        for (n, expected) in [(1u64, 6u64), (2, 21), (9, 2002)] {
            let space = EnumerationSpace::new(alts.clone(), n, DEFAULT_BUDGET).unwrap();
            assert_eq!(*space.size(), count(expected));
            assert_eq!(space.iter().count() as u64, expected);
        }
    }

    #[test]
    fn enumeration_yields_each_profile_exactly_once() {
        let alts = Alternatives::xyz();
        let space = EnumerationSpace::new(alts, 2, DEFAULT_BUDGET).unwrap();
        let mut seen = BTreeSet::new();
        for profile in space.iter() {
            assert_eq!(profile.voter_count(), count(2));
            let key: Vec<(Vec<usize>, Count)> = profile
                .counts()
                .map(|(o, c)| (o.ranking().iter().map(|a| a.0).collect(), c.clone()))
                .collect();
            assert!(seen.insert(key), "duplicate profile in stream");
        }
        assert_eq!(seen.len(), 21);
    }

    #[test]
    fn budget_refusal_reports_the_needed_size() {
        let alts = Alternatives::xyz();
        match EnumerationSpace::new(alts, 9, 100) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 2002);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn historical_example_under_both_rules() {
        let profile = table_1784();
        assert!(selects_cl(&profile, &plurality()).unwrap());
        assert!(!selects_cl(&profile, &ScoreVector::borda(3).unwrap()).unwrap());
    }

    #[test]
    fn uniform_profile_selects_nothing() {
        let profile = Profile::uniform(Alternatives::xyz(), &count(2)).unwrap();
        assert!(!selects_cl(&profile, &plurality()).unwrap());
    }

    #[test]
    fn membership_counts_co_winners() {
        // Three ballots: the loser x shares the plurality win three ways.
        let alts = Alternatives::xyz();
        let profile = profile_from_counts(
            alts,
            &[(1, &["x", "y", "z"]), (1, &["y", "z", "x"]), (1, &["z", "y", "x"])],
        )
        .unwrap();
        assert_eq!(profile.condorcet_loser(), Some(Alt(0)));
        assert_eq!(profile.winners(&plurality()).unwrap().len(), 3);
        assert!(selects_cl(&profile, &plurality()).unwrap());
    }

    #[test]
    fn integer_path_agrees_with_rational_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6f72_6163_6c65);
        for _ in 0..400 {
            let m = rng.gen_range(3..=4usize);
            let alts = if m == 3 {
                Alternatives::xyz()
            } else {
                Alternatives::numbered(m).unwrap()
            };
            let space_orders = all_orders(&alts);
            let mut profile = Profile::empty(alts);
            for order in &space_orders {
                let c = rng.gen_range(0..5u64);
                if c > 0 {
                    profile.add(order.clone(), count(c)).unwrap();
                }
            }
            let mut entries = vec![rat(1)];
            for _ in 0..m - 2 {
                let d = rng.gen_range(1..=9u64);
                entries.push(frac(rng.gen_range(0..=d) as i64, d as i64));
            }
            entries.push(rat(0));
            entries[1..m - 1].sort_by(|a, b| b.cmp(a));
            let Ok(s) = ScoreVector::new(entries) else {
                continue;
            };
            let independent = selects_cl(&profile, &s).unwrap();
            let modeled = profile
                .condorcet_loser()
                .map(|x| profile.winners(&s).unwrap().contains(&x))
                .unwrap_or(false);
            assert_eq!(independent, modeled);
        }
    }

    #[test]
    fn borda_never_elects_the_loser_up_to_twelve_voters() {
        assert_eq!(borda_audit(3, 12, DEFAULT_BUDGET).unwrap(), 0);
        assert_eq!(borda_audit(3, 1, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn audit_respects_the_budget() {
        assert!(matches!(
            borda_audit(4, 3, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn minimal_witness_for_plurality_against_borda() {
        let borda = ScoreVector::borda(3).unwrap();
        let (n, profile) = minimal_witness_search(&plurality(), &borda, 9, DEFAULT_BUDGET)
            .unwrap()
            .expect("a witness exists by construction");
        assert_eq!(n, 7);
        let target = profile.condorcet_loser().unwrap();
        assert_eq!(
            verify_witness(&profile, &plurality(), &borda, target).unwrap(),
            (true, true, true)
        );
    }

    #[test]
    fn borda_has_no_witness_in_either_small_space() {
        let borda = ScoreVector::borda(3).unwrap();
        assert!(minimal_witness_search(&borda, &plurality(), 9, DEFAULT_BUDGET)
            .unwrap()
            .is_none());
        assert!(matches!(
            minimal_witness_search(&borda, &borda.clone(), 9, DEFAULT_BUDGET),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn scan_finds_differences_in_both_directions() {
        let report = dominance_scan(&plurality(), &antiplurality(), 9, DEFAULT_BUDGET).unwrap();
        assert!(report.total_only_s() > 0);
        assert!(report.total_only_sp() > 0);

        // The captured examples re-verify through the independent path.
        let ex = report.example_only_s.as_ref().unwrap();
        assert!(selects_cl(ex, &plurality()).unwrap());
        assert!(!selects_cl(ex, &antiplurality()).unwrap());
        let ex = report.example_only_sp.as_ref().unwrap();
        assert!(!selects_cl(ex, &plurality()).unwrap());
        assert!(selects_cl(ex, &antiplurality()).unwrap());
    }

    #[test]
    fn borda_side_of_a_scan_is_empty() {
        let borda = ScoreVector::borda(3).unwrap();
        let report = dominance_scan(&borda, &plurality(), 9, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.total_only_s(), 0);
        assert!(report.example_only_s.is_none());
        assert!(report.total_only_sp() > 0);
        for row in &report.rows {
            assert_eq!(row.in_s, 0);
        }
    }

    #[test]
    fn identical_rules_scan_to_zero_differences() {
        let report = dominance_scan(&plurality(), &plurality(), 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.total_only_s(), 0);
        assert_eq!(report.total_only_sp(), 0);
        for row in &report.rows {
            assert_eq!(row.in_s, row.in_sp);
        }
    }

    #[test]
    fn plurality_first_elects_a_loser_at_three_voters() {
        let report = dominance_scan(&plurality(), &antiplurality(), 4, DEFAULT_BUDGET).unwrap();
        let first = report.rows.iter().find(|r| r.in_s > 0).unwrap();
        assert_eq!(first.n, 3);
    }
}
