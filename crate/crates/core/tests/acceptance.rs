//! Acceptance criteria 1-10, each at its stated tolerance and time limit.
//! One pass/fail line per criterion is printed; run with `--nocapture` to
//! see them.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use hurwitz::decide::{euclidean_template, exceptional_positive_list, hyperbolic_table, match_euclidean_family, FAMILIES};
use hurwitz::enumerate::{all_candidates_n3, hyperbolic_triangular_census, positive_chi_candidates};
use hurwitz::oracle::{
    count_transitive, count_tuples, exhaustive_decide, find_witness, verify_permutation_witness, ExhaustiveVerdict,
    SearchBudget, SearchOutcome,
};
use hurwitz::quadform::{congruence_equivalence, densities, prime_support, primes_up_to, represent, Constraint, FormId};
use hurwitz::selfcheck::{GOLDEN_TABLE1, GOLDEN_TABLE2, IDENTITIES, PRIME_CLASSES};
use hurwitz::witness::affine::{construct_witness, torus_witness, verify_torus_witness, verify_witness};
use hurwitz::{decide, CandidateCover, Partition, Verdict};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdict(c: &CandidateCover) -> Verdict {
    decide(c).unwrap_or_else(|e| panic!("{c}: {e}")).verdict
}

fn seeded() -> SearchBudget {
    SearchBudget::nodes(10_000_000).with_seed(1)
}

fn found_and_verified(c: &CandidateCover, budget: &SearchBudget) -> bool {
    match find_witness(c, budget) {
        Ok(SearchOutcome::Found(w)) => verify_permutation_witness(c, &w) == Ok(true),
        _ => false,
    }
}

/// Realizable, Exceptional, or None when the budget ran out.
fn exhaustive(c: &CandidateCover) -> Option<Verdict> {
    match exhaustive_decide(c, &SearchBudget::nodes(200_000_000)) {
        ExhaustiveVerdict::Realizable(_) | ExhaustiveVerdict::KnownRealizable => Some(Verdict::Realizable),
        ExhaustiveVerdict::Exceptional => Some(Verdict::Exceptional),
        ExhaustiveVerdict::BudgetExceeded => None,
    }
}

fn agree_with_exhaustive(cands: &[CandidateCover]) -> Result<(), String> {
    let bad: Vec<String> = cands
        .par_iter()
        .filter_map(|c| {
            let v = verdict(c);
            let e = exhaustive(c);
            (e != Some(v)).then(|| format!("{c}: decide {v}, exhaustive {e:?}"))
        })
        .collect();
    check(bad.is_empty(), || bad.join("; "))
}

fn tables() -> Outcome {
    check(hurwitz::tables::table(1).as_deref() == Some(GOLDEN_TABLE1), || "table 1 differs".into())?;
    check(hurwitz::tables::table(2).as_deref() == Some(GOLDEN_TABLE2), || "table 2 differs".into())?;
    let partitions = GOLDEN_TABLE1.lines().filter(|l| l.starts_with("Pi")).map(|l| l.matches('(').count()).sum::<usize>();
    check(partitions == 15, || format!("{partitions} partitions"))?;
    Ok("15 partitions, 4 triples".into())
}

fn census() -> Outcome {
    let mut found = hyperbolic_triangular_census();
    found.sort();
    let mut rows: Vec<CandidateCover> = hyperbolic_table().iter().map(|r| r.candidate.clone()).collect();
    rows.sort();
    check(found == rows, || format!("{} candidates found", found.len()))?;
    for row in hyperbolic_table() {
        let expected = if row.index == 2 || row.index == 8 { Verdict::Exceptional } else { Verdict::Realizable };
        check(verdict(&row.candidate) == expected, || format!("row {}", row.index))?;
    }
    Ok("9 rows, rows 2 and 8 exceptional".into())
}

fn hyperbolic_oracle() -> Outcome {
    let table = hyperbolic_table();
    let start = Instant::now();
    for row in table.iter().filter(|r| r.verdict == Verdict::Realizable) {
        check(found_and_verified(&row.candidate, &seeded()), || format!("no tuple for row {}", row.index))?;
    }
    let find_time = start.elapsed();
    check(find_time < Duration::from_secs(60), || format!("finds took {find_time:?}"))?;

    let start = Instant::now();
    check(exhaustive(&table[1].candidate) == Some(Verdict::Exceptional), || "row 2 not refuted".into())?;
    let refute_time = start.elapsed();
    check(refute_time < Duration::from_secs(10), || format!("refutation took {refute_time:?}"))?;

    let start = Instant::now();
    let row8 = &table[7].candidate;
    check(count_transitive(row8.partitions(), row8.degree()).is_zero(), || "row 8 count is positive".into())?;
    for row in table.iter().filter(|r| r.verdict == Verdict::Realizable) {
        let n = count_transitive(row.candidate.partitions(), row.candidate.degree());
        check(n > BigInt::zero(), || format!("row {} count {n}", row.index))?;
    }
    let count_time = start.elapsed();
    check(count_time < Duration::from_secs(120), || format!("counts took {count_time:?}"))?;
    Ok(format!("finds {find_time:.2?}, refutation {refute_time:.2?}, counts {count_time:.2?}"))
}

fn positive_chi() -> Outcome {
    let cands = positive_chi_candidates(30);
    let exceptional: Vec<CandidateCover> = cands.iter().filter(|c| verdict(c) == Verdict::Exceptional).cloned().collect();
    let listed = exceptional_positive_list(30);
    check(exceptional == listed, || format!("{} exceptional, {} listed", exceptional.len(), listed.len()))?;
    let small: Vec<CandidateCover> = cands.into_iter().filter(|c| c.degree() <= 10).collect();
    agree_with_exhaustive(&small)?;
    Ok(format!("{} exceptional up to 30, {} checked exhaustively", listed.len(), small.len()))
}

fn euclidean_families() -> Outcome {
    let members: Vec<CandidateCover> =
        FAMILIES.iter().flat_map(|t| (1..=12).filter_map(move |k| t.instantiate(k))).collect();
    let bad: Vec<String> = members
        .par_iter()
        .filter_map(|c| {
            let v = verdict(c);
            let result = if c.cover_genus() == 1 {
                let w = torus_witness(c).map_err(|e| e.to_string());
                check(v == Verdict::Realizable && w.is_ok_and(|w| verify_torus_witness(c, &w).ok), || "torus".into())
            } else {
                let fam = match_euclidean_family(c).unwrap();
                let holds = fam.template().criterion.evaluate(c.degree() as u64).holds;
                check((v == Verdict::Realizable) == holds, || format!("{v} against criterion {holds}")).and_then(|_| {
                    match construct_witness(c).unwrap() {
                        Some(w) => check(v == Verdict::Realizable && verify_witness(c, &w).unwrap().ok, || {
                            format!("witness on {v}")
                        }),
                        None => check(v == Verdict::Exceptional, || "no witness on a realizable member".into()),
                    }
                })
            };
            result.err().map(|e| format!("{c}: {e}"))
        })
        .collect();
    check(bad.is_empty(), || bad.join("; "))?;
    let small: Vec<CandidateCover> = members.iter().filter(|c| c.degree() <= 13).cloned().collect();
    agree_with_exhaustive(&small)?;
    Ok(format!("{} members, {} checked exhaustively", members.len(), small.len()))
}

fn headline() -> Outcome {
    let mut checked = 0;
    for k in 1..=15u32 {
        let d = 4 * k + 1;
        let mut twos = vec![2; 2 * k as usize];
        twos.push(1);
        let mut fours = vec![4; k as usize];
        fours.push(1);
        let c = CandidateCover::sphere(d, &[&twos, &fours, &fours]).unwrap();
        let realizable = verdict(&c) == Verdict::Realizable;
        check(realizable == represent(FormId::X2Y2, d as u64, Constraint::NONE).is_some(), || format!("{c}"))?;
        let expected = match d {
            5 | 9 | 13 | 17 | 25 => Some(true),
            21 | 33 | 57 => Some(false),
            _ => None,
        };
        check(expected.is_none_or(|e| e == realizable), || format!("{c}: {realizable}"))?;
        checked += 1;
    }
    for (case_id, step) in [(2u8, 6u32), (3, 3)] {
        let t = euclidean_template(case_id, 1).ok_or("missing template")?;
        for k in 1..=(60 / step) {
            let c = t.instantiate(k).ok_or_else(|| format!("case {case_id} k={k}"))?;
            check(c.degree() == step * k + 1, || format!("{c}"))?;
            let representable = represent(FormId::X2XYY2, c.degree() as u64, Constraint::NONE).is_some();
            check((verdict(&c) == Verdict::Realizable) == representable, || format!("{c}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} degrees up to 61"))
}

fn congruences() -> Outcome {
    for (form, constraint, r, m) in IDENTITIES {
        let bad = congruence_equivalence(form, constraint, r, m, 10_000);
        check(bad.is_empty(), || format!("{form} {r} mod {m}: {bad:?}"))?;
    }
    Ok("3 identities up to 10^4".into())
}

fn primes() -> Outcome {
    for (form, r, m) in PRIME_CLASSES {
        let bad = prime_support(form, r, m, 100_000);
        check(bad.is_empty(), || format!("{form} {r} mod {m}: {bad:?}"))?;
    }
    let cands: Vec<CandidateCover> =
        primes_up_to(11).into_iter().flat_map(|p| all_candidates_n3(p as u32)).collect();
    let bad: Vec<String> =
        cands.par_iter().filter(|c| !found_and_verified(c, &seeded())).map(|c| c.to_string()).collect();
    check(bad.is_empty(), || format!("no tuple for {bad:?}"))?;
    Ok(format!("prime classes to 10^5, {} prime-degree candidates realized", cands.len()))
}

fn density_trend() -> Outcome {
    let limits: Vec<u64> = (2..=6).map(|j| 10u64.pow(j)).collect();
    for form in [FormId::X2Y2, FormId::X2XYY2] {
        let ds = densities(form, &limits);
        check(ds.windows(2).all(|w| w[1].ratio() < w[0].ratio()), || format!("{form}: {ds:?}"))?;
    }
    Ok("strictly decreasing for 10^2..10^6".into())
}

fn cycle_type(p: &[u8]) -> Vec<u32> {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

fn permutations(d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..d as u8).collect();
    permute(&mut p, 0, &mut out);
    out
}

fn permute(p: &mut Vec<u8>, i: usize, out: &mut Vec<Vec<u8>>) {
    if i == p.len() {
        out.push(p.clone());
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, out);
        p.swap(i, j);
    }
}

fn oracle_consistency() -> Outcome {
    let mut triples = 0;
    for d in 2..=8 {
        let cands = all_candidates_n3(d);
        let bad: Vec<String> = cands
            .par_iter()
            .filter_map(|c| {
                let counted = !count_transitive(c.partitions(), d).is_zero();
                let e = exhaustive(c);
                (e != Some(if counted { Verdict::Realizable } else { Verdict::Exceptional }))
                    .then(|| format!("{c}: count {counted}, exhaustive {e:?}"))
            })
            .collect();
        check(bad.is_empty(), || bad.join("; "))?;
        triples += cands.len();
    }
    // Direct tally of (a, b, (ab)^-1) over S_d by cycle type triple.
    for d in 1..=6usize {
        let perms = permutations(d);
        let mut tally: HashMap<[Vec<u32>; 3], u64> = HashMap::new();
        for a in &perms {
            for b in &perms {
                let mut inv = vec![0u8; d];
                for x in 0..d {
                    inv[b[a[x] as usize] as usize] = x as u8;
                }
                *tally.entry([cycle_type(a), cycle_type(b), cycle_type(&inv)]).or_default() += 1;
            }
        }
        let types: Vec<Vec<u32>> = hurwitz::enumerate::partitions_of(d as u32).iter().map(|p| p.entries().to_vec()).collect();
        for x in &types {
            for y in &types {
                for z in &types {
                    let parts: Vec<Partition> = [x, y, z].iter().map(|t| Partition::new(t.to_vec()).unwrap()).collect();
                    let brute = tally.get(&[x.clone(), y.clone(), z.clone()]).copied().unwrap_or(0);
                    let counted = count_tuples(&parts, d as u32);
                    check(counted == BigInt::from(brute), || format!("d={d} {x:?}{y:?}{z:?}: {counted} vs {brute}"))?;
                }
            }
        }
        let total: u64 = tally.values().sum();
        check(BigInt::from(total) == (1..=d as u64).map(BigInt::from).fold(BigInt::one(), |a, b| a * b).pow(2), || {
            "tally total".into()
        })?;
    }
    Ok(format!("{triples} n=3 candidates up to 8, tuple counts up to S_6"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("table reproduction", tables, 1),
        ("hyperbolic census", census, 5),
        ("oracle on the census", hyperbolic_oracle, 190),
        ("positive-chi classification", positive_chi, 300),
        ("euclidean families", euclidean_families, 600),
        ("headline sweeps", headline, 10),
        ("congruence identities", congruences, 5),
        ("prime support", primes, 600),
        ("density trend", density_trend, 60),
        ("oracle self-consistency", oracle_consistency, 600),
    ];
    let mut failures = Vec::new();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            check(elapsed < Duration::from_secs(limit), || format!("{elapsed:.2?} exceeds {limit} s")).map(|_| detail)
        });
        match &result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {e}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failing criteria {failures:?}");
}
