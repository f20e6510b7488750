//! Cross-validation of the two oracle strategies (backtracking search and
//! character counting) against each other and against brute force.

use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rayon::prelude::*;

use hurwitz::enumerate::{all_candidates_n3_genus, partitions_of};
use hurwitz::model::{CandidateCover, Partition};
use hurwitz::oracle::perm::is_transitive;
use hurwitz::oracle::{
    count_transitive, count_tuples, exhaustive_decide, find_witness, verify_permutation_witness,
    ExhaustiveVerdict, Permutation, SearchBudget, SearchMode, SearchOutcome,
};

/// All permutations of 0..d as image vectors, lexicographic.
fn symmetric_group(d: usize) -> Vec<Permutation> {
    fn rec(d: usize, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == d {
            out.push(Permutation::from_images(cur.clone()).expect("bijection"));
            return;
        }
        for v in 0..d {
            if !used[v] {
                used[v] = true;
                cur.push(v as u32);
                rec(d, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(d, &mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

type Key = (Partition, Partition, Partition);

/// Tallies of (all, transitive) identity-product triples by cycle types.
fn brute_tally(d: usize) -> HashMap<Key, (u64, u64)> {
    let group = symmetric_group(d);
    let mut tally: HashMap<Key, (u64, u64)> = HashMap::new();
    for a in &group {
        for b in &group {
            let c = a.then(b).inverse();
            let entry = tally.entry((a.cycle_type(), b.cycle_type(), c.cycle_type())).or_default();
            entry.0 += 1;
            if is_transitive(d, &[a.clone(), b.clone()]) {
                entry.1 += 1;
            }
        }
    }
    tally
}

#[test]
fn frobenius_counts_match_brute_force_up_to_six() {
    for d in 1..=6u32 {
        let tally = brute_tally(d as usize);
        let parts = partitions_of(d);
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    let types = [a.clone(), b.clone(), c.clone()];
                    let (all, trans) = tally.get(&(a.clone(), b.clone(), c.clone())).copied().unwrap_or((0, 0));
                    assert_eq!(count_tuples(&types, d), BigInt::from(all), "{a}{b}{c}");
                    assert_eq!(count_transitive(&types, d), BigInt::from(trans), "{a}{b}{c}");
                }
            }
        }
    }
}

fn n3_candidates_up_to(dmax: u32) -> Vec<CandidateCover> {
    (2..=dmax).flat_map(|d| (0..=d / 2 + 1).flat_map(move |g| all_candidates_n3_genus(d, g))).collect()
}

#[test]
fn counting_and_exhaustive_search_agree_up_to_nine() {
    let budget = SearchBudget::nodes(50_000_000).with_mode(SearchMode::Backtracking);
    let cands = n3_candidates_up_to(9);
    assert!(cands.len() > 1000, "{}", cands.len());
    let mismatches: Vec<String> = cands
        .par_iter()
        .filter_map(|c| {
            let counted = count_transitive(c.partitions(), c.degree()) > BigInt::from(0);
            let searched = match exhaustive_decide(c, &budget) {
                ExhaustiveVerdict::Realizable(w) => {
                    assert!(verify_permutation_witness(c, &w).unwrap(), "{c}");
                    true
                }
                ExhaustiveVerdict::Exceptional => false,
                other => return Some(format!("{c}: {other}")),
            };
            (counted != searched).then(|| format!("{c}: count {counted}, search {searched}"))
        })
        .collect();
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

fn small_candidate() -> impl Strategy<Value = CandidateCover> {
    (3u32..=11).prop_flat_map(|d| {
        let all = n3_candidates_up_to(d).into_iter().filter(|c| c.degree() == d).collect::<Vec<_>>();
        proptest::sample::select(all)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn found_witnesses_verify(c in small_candidate(), seed in any::<u64>()) {
        let budget = SearchBudget::default().with_seed(seed);
        if let Ok(SearchOutcome::Found(w)) = find_witness(&c, &budget) {
            prop_assert!(verify_permutation_witness(&c, &w).unwrap());
        }
    }

    #[test]
    fn existence_does_not_depend_on_the_seed(c in small_candidate(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let found = |seed| match find_witness(&c, &SearchBudget::default().with_seed(seed)) {
            Ok(SearchOutcome::Found(_)) => Some(true),
            Ok(SearchOutcome::NotFound) => Some(false),
            _ => None,
        };
        let (a, b) = (found(s1), found(s2));
        prop_assert!(a.is_some() && a == b, "{} seeds {} {}: {:?} {:?}", c, s1, s2, a, b);
    }
}
