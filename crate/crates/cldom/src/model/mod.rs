//! Core election domain: exact rationals, alternatives, linear orders,
//! anonymous profiles, positional score vectors, and majority margins.

pub mod format;
pub mod majority;
pub mod order;
pub mod profile;
pub mod rational;
pub mod score;

pub use format::{
    is_score_alias, parse_score_vector, profile_from_counts, profile_from_lines, read_profile,
    read_profile_file, score_notation_len, write_profile,
};
pub use majority::MajorityMatrix;
pub use order::{Alt, Alternatives, LinearOrder};
pub use profile::Profile;
pub use rational::{count, count_to_rational, format_rational, frac, parse_rational, rat, Count, Rational};
pub use score::ScoreVector;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num::{BigInt, Zero};
    use proptest::prelude::*;

    use super::*;

    fn table_1784() -> Profile {
        profile_from_lines(
            &["A", "B", "C"],
            &[
                (8, &["A", "B", "C"]),
                (7, &["B", "C", "A"]),
                (6, &["C", "B", "A"]),
            ],
        )
        .unwrap()
    }

    fn plurality3() -> ScoreVector {
        ScoreVector::three(rat(0)).unwrap()
    }

    #[test]
    fn classic_example_tallies_and_winners() {
        let p = table_1784();
        let plu = p.total_scores(&plurality3()).unwrap();
        assert_eq!(plu, vec![rat(8), rat(7), rat(6)]);
        assert_eq!(p.winners(&plurality3()).unwrap(), vec![Alt(0)]);

        let borda = p.total_scores(&ScoreVector::borda(3).unwrap()).unwrap();
        assert_eq!(borda, vec![rat(8), rat(14), frac(19, 2)]);
        assert_eq!(p.winners(&ScoreVector::borda(3).unwrap()).unwrap(), vec![Alt(1)]);
    }

    #[test]
    fn classic_example_margins_and_condorcet_loser() {
        let p = table_1784();
        let mm = p.majority_margins();
        assert_eq!(mm.margin(Alt(0), Alt(1)), &BigInt::from(-5));
        assert_eq!(mm.margin(Alt(0), Alt(2)), &BigInt::from(-5));
        assert_eq!(mm.margin(Alt(1), Alt(0)), &BigInt::from(5));
        assert_eq!(mm.margin(Alt(1), Alt(2)), &BigInt::from(9));
        assert_eq!(mm.margin(Alt(0), Alt(0)), &BigInt::zero());
        assert_eq!(p.condorcet_loser(), Some(Alt(0)));
    }

    #[test]
    fn unpopulated_profile_everyone_wins_nobody_loses() {
        let p = Profile::empty(Alternatives::xyz());
        let scores = p.total_scores(&plurality3()).unwrap();
        assert_eq!(scores, vec![rat(0), rat(0), rat(0)]);
        assert_eq!(p.winners(&plurality3()).unwrap(), vec![Alt(0), Alt(1), Alt(2)]);
        assert_eq!(p.condorcet_loser(), None);
    }

    #[test]
    fn single_voter_bottom_is_condorcet_loser() {
        let p = profile_from_lines(&["x", "y", "z"], &[(1, &["x", "y", "z"])]).unwrap();
        assert_eq!(p.condorcet_loser(), Some(Alt(2)));
        assert_eq!(p.winners(&plurality3()).unwrap(), vec![Alt(0)]);
    }

    #[test]
    fn majority_cycle_has_no_condorcet_loser() {
        let p = profile_from_lines(
            &["x", "y", "z"],
            &[(1, &["x", "y", "z"]), (1, &["y", "z", "x"]), (1, &["z", "x", "y"])],
        )
        .unwrap();
        assert_eq!(p.condorcet_loser(), None);
    }

    #[test]
    fn uniform_profile_ties_everything() {
        let p = Profile::uniform(Alternatives::xyz(), &count(5)).unwrap();
        assert_eq!(p.order_kinds(), 6);
        assert_eq!(p.voter_count(), count(30));
        let scores = p.total_scores(&ScoreVector::borda(3).unwrap()).unwrap();
        assert_eq!(scores[0], scores[1]);
        assert_eq!(scores[1], scores[2]);
        assert_eq!(p.winners(&plurality3()).unwrap().len(), 3);
        assert_eq!(p.condorcet_loser(), None);
        assert!(Profile::uniform(Alternatives::xyz(), &Count::zero()).is_err());
    }

    #[test]
    fn merge_accumulates_and_checks_registries() {
        let p = table_1784();
        let doubled = p.merge(&p).unwrap();
        assert_eq!(doubled.voter_count(), count(42));
        let scores = doubled.total_scores(&plurality3()).unwrap();
        assert_eq!(scores, vec![rat(16), rat(14), rat(12)]);

        let other = Profile::empty(Alternatives::xyz());
        assert!(p.merge(&other).is_err());
        assert!(Profile::merge_all(&[]).is_err());
    }

    #[test]
    fn replicate_scales_counts_and_margins() {
        let p = table_1784();
        let tripled = p.replicate(&count(3)).unwrap();
        let counts: Vec<Count> = tripled.counts().map(|(_, c)| c.clone()).collect();
        assert_eq!(counts, vec![count(24), count(21), count(18)]);
        let mm = tripled.majority_margins();
        assert_eq!(mm.margin(Alt(0), Alt(1)), &BigInt::from(-15));
        assert_eq!(tripled.condorcet_loser(), Some(Alt(0)));
        assert!(p.replicate(&Count::zero()).is_err());
    }

    #[test]
    fn inserting_a_universal_bottom_makes_it_the_loser() {
        let p = table_1784();
        let q = p.insert_alternative("w", 4).unwrap();
        let w = q.alternatives().by_name("w").unwrap();
        assert_eq!(q.condorcet_loser(), Some(w));
        let mm = q.majority_margins();
        assert_eq!(mm.margin(Alt(0), Alt(1)), &BigInt::from(-5));
        assert_eq!(mm.margin(Alt(0), Alt(2)), &BigInt::from(-5));
        assert_eq!(mm.margin(w, Alt(0)), &BigInt::from(-21));
    }

    #[test]
    fn inserting_a_universal_top_leaves_old_loser_losing() {
        let p = table_1784();
        let q = p.insert_alternative("w", 1).unwrap();
        let w = q.alternatives().by_name("w").unwrap();
        assert_eq!(q.condorcet_loser(), Some(Alt(0)));
        assert_eq!(q.majority_margins().margin(w, Alt(0)), &BigInt::from(21));
        assert!(p.insert_alternative("w", 0).is_err());
        assert!(p.insert_alternative("w", 6).is_err());
        assert!(p.insert_alternative("A", 1).is_err());
    }

    #[test]
    fn per_order_insertion_rule() {
        let p = table_1784();
        let a = Alt(0);
        let q = p
            .insert_alternative_with("w", |order| if order.rank(a).unwrap() == 1 { 1 } else { 4 })
            .unwrap();
        let w = q.alternatives().by_name("w").unwrap();
        // 8 voters put w first, 13 put it last: w beats nobody overall.
        assert_eq!(q.majority_margins().margin(w, a), &BigInt::from(-5));
    }

    #[test]
    fn restriction_projects_ballots() {
        let p = table_1784();
        let r = p.restricted(&[Alt(0), Alt(1)]).unwrap();
        assert_eq!(r.m(), 2);
        let written = write_profile(&r);
        assert_eq!(written, "alternatives: A B\n8 : A > B\n13 : B > A\n");
    }

    fn arb_perm(m: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..m).collect::<Vec<usize>>()).prop_shuffle()
    }

    fn arb_profile() -> impl Strategy<Value = Profile> {
        (3usize..=5)
            .prop_flat_map(|m| {
                (
                    Just(m),
                    prop::collection::vec((arb_perm(m), 0u64..30), 0..8),
                )
            })
            .prop_map(|(m, rows)| {
                let alts = Alternatives::numbered(m).unwrap();
                let mut p = Profile::empty(alts);
                for (ids, c) in rows {
                    p.add(LinearOrder::from_ids(&ids).unwrap(), Count::from(c))
                        .unwrap();
                }
                p
            })
    }

    fn arb_score_vector(m: usize) -> impl Strategy<Value = ScoreVector> {
        prop::collection::vec((0i64..=24, 1i64..=24), m - 2).prop_map(move |mid| {
            let mut middles: Vec<Rational> = mid
                .into_iter()
                .map(|(n, d)| {
                    let r = frac(n, d);
                    if r > rat(1) {
                        rat(1)
                    } else {
                        r
                    }
                })
                .collect();
            middles.sort();
            middles.reverse();
            let mut entries = vec![rat(1)];
            entries.extend(middles);
            entries.push(rat(0));
            ScoreVector::new(entries).unwrap()
        })
    }

    fn arb_profile_and_vector() -> impl Strategy<Value = (Profile, ScoreVector)> {
        arb_profile().prop_flat_map(|p| {
            let m = p.m();
            (Just(p), arb_score_vector(m))
        })
    }

    proptest! {
        #[test]
        fn tallies_are_linear_under_merge((p, s) in arb_profile_and_vector(), q in arb_profile()) {
            prop_assume!(p.m() == q.m());
            let merged = p.merge(&q).unwrap();
            let lhs = merged.total_scores(&s).unwrap();
            let pa = p.total_scores(&s).unwrap();
            let qa = q.total_scores(&s).unwrap();
            for i in 0..p.m() {
                prop_assert_eq!(&lhs[i], &(pa[i].clone() + &qa[i]));
            }
            prop_assert_eq!(merged.voter_count(), p.voter_count() + q.voter_count());
        }

        #[test]
        fn margins_antisymmetric_and_additive(p in arb_profile(), q in arb_profile()) {
            prop_assume!(p.m() == q.m());
            let m = p.m();
            let mp = p.majority_margins();
            for i in 0..m {
                for j in 0..m {
                    prop_assert_eq!(
                        mp.margin(Alt(i), Alt(j)).clone(),
                        -mp.margin(Alt(j), Alt(i)).clone()
                    );
                }
            }
            let merged = p.merge(&q).unwrap().majority_margins();
            let mq = q.majority_margins();
            for i in 0..m {
                for j in 0..m {
                    prop_assert_eq!(
                        merged.margin(Alt(i), Alt(j)).clone(),
                        mp.margin(Alt(i), Alt(j)).clone() + mq.margin(Alt(i), Alt(j))
                    );
                }
            }
        }

        #[test]
        fn relabeling_is_equivariant((p, s) in arb_profile_and_vector(), seed in any::<u64>()) {
            let m = p.m();
            let mut perm: Vec<usize> = (0..m).collect();
            // cheap deterministic shuffle from the seed
            let mut state = seed;
            for i in (1..m).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let q = p.relabeled(&perm).unwrap();

            let mut expected: Vec<usize> = p.winners(&s).unwrap().iter().map(|a| perm[a.0]).collect();
            expected.sort_unstable();
            let got: Vec<usize> = q.winners(&s).unwrap().iter().map(|a| a.0).collect();
            prop_assert_eq!(expected, got);

            prop_assert_eq!(
                p.condorcet_loser().map(|a| perm[a.0]),
                q.condorcet_loser().map(|a| a.0)
            );
            // names travel with their alternatives
            for (old, &new) in perm.iter().enumerate() {
                prop_assert_eq!(p.alternatives().name(Alt(old)), q.alternatives().name(Alt(new)));
            }
        }

        #[test]
        fn affine_rescaling_normalizes_away((p, s) in arb_profile_and_vector(), a in 1i64..=7, b in -5i64..=5) {
            let raw: Vec<Rational> = s.entries().iter().map(|e| e * rat(a) + frac(b, 3)).collect();
            let t = ScoreVector::new(raw).unwrap();
            prop_assert_eq!(&t, &s);
            prop_assert_eq!(p.winners(&t).unwrap(), p.winners(&s).unwrap());
        }

        #[test]
        fn uniform_profiles_tie_all_alternatives(m in 3usize..=5, t in 1u64..6, s_seed in 0usize..4) {
            let alts = Alternatives::numbered(m).unwrap();
            let p = Profile::uniform(alts, &count(t)).unwrap();
            let s = match s_seed {
                0 => ScoreVector::borda(m).unwrap(),
                1 => parse_score_vector("plurality", m).unwrap(),
                2 => parse_score_vector("veto", m).unwrap(),
                _ => {
                    let mut entries = vec![rat(1); m - 1];
                    entries.push(rat(0));
                    entries[1] = frac(3, 4);
                    entries[1..m - 1].sort_by(|a, b| b.cmp(a));
                    ScoreVector::new(entries).unwrap()
                }
            };
            let scores = p.total_scores(&s).unwrap();
            for pair in scores.windows(2) {
                prop_assert_eq!(&pair[0], &pair[1]);
            }
            prop_assert_eq!(p.winners(&s).unwrap().len(), m);
            prop_assert_eq!(p.condorcet_loser(), None);
        }

        #[test]
        fn condorcet_loser_agrees_with_margins(p in arb_profile()) {
            let mm = p.majority_margins();
            let losers: Vec<Alt> = (0..p.m()).map(Alt).filter(|&x| mm.is_condorcet_loser(x)).collect();
            prop_assert!(losers.len() <= 1);
            prop_assert_eq!(p.condorcet_loser(), losers.first().copied());
        }

        #[test]
        fn profile_text_round_trips(p in arb_profile()) {
            let text = write_profile(&p);
            let q = read_profile(&text).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(write_profile(&q), text);
        }
    }

    #[test]
    fn arc_registries_share() {
        let alts: Arc<Alternatives> = Alternatives::xyz();
        let p = Profile::empty(alts.clone());
        assert!(Arc::ptr_eq(p.alternatives(), &alts));
    }
}
