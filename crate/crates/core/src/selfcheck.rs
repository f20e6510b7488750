//! Invariant suites runnable from the command line. Each suite is a plain
//! function; `quick` shrinks the ranges so the whole run takes seconds.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::decide::{decide, exceptional_positive_list, hyperbolic_table, FAMILIES};
use crate::enumerate::{euclidean_candidates, hyperbolic_triangular_census, positive_chi_candidates};
use crate::model::{CandidateCover, Verdict};
use crate::oracle::{count_transitive, exhaustive_decide, find_witness, ExhaustiveVerdict, SearchBudget, SearchOutcome};
use crate::quadform::{congruence_equivalence, densities, prime_support, represent, Constraint, FormId};
use crate::witness::affine::{construct_witness, torus_witness, verify_torus_witness, verify_witness};

pub const GOLDEN_TABLE1: &str = include_str!("../tests/golden/table1.txt");
pub const GOLDEN_TABLE2: &str = include_str!("../tests/golden/table2.txt");

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Suite = fn(bool) -> Result<String, String>;

const SUITES: &[(&str, Suite)] = &[
    ("tables", tables),
    ("hyperbolic-census", census),
    ("hyperbolic-oracle", hyperbolic_oracle),
    ("positive-chi", positive_chi),
    ("euclidean-exhaustive", euclidean_exhaustive),
    ("euclidean-witnesses", euclidean_witnesses),
    ("headline-sweeps", headline),
    ("quadratic-forms", quadratic_forms),
    ("oracle-agreement", oracle_agreement),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite in order.
pub fn run_all(quick: bool) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|(name, suite)| {
            let start = Instant::now();
            let outcome = suite(quick);
            let elapsed = start.elapsed();
            match outcome {
                Ok(detail) => SuiteResult { name, passed: true, detail, elapsed },
                Err(detail) => SuiteResult { name, passed: false, detail, elapsed },
            }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdict_of(c: &CandidateCover) -> Result<Verdict, String> {
    decide(c).map(|d| d.verdict).map_err(|e| format!("{c}: {e}"))
}

fn tables(_quick: bool) -> Result<String, String> {
    ensure(crate::tables::table(1).as_deref() == Some(GOLDEN_TABLE1), || "table 1 differs from golden".into())?;
    ensure(crate::tables::table(2).as_deref() == Some(GOLDEN_TABLE2), || "table 2 differs from golden".into())?;
    Ok("both tables match".into())
}

fn census(_quick: bool) -> Result<String, String> {
    let found: BTreeSet<CandidateCover> = hyperbolic_triangular_census().into_iter().collect();
    let rows: BTreeSet<CandidateCover> = hyperbolic_table().iter().map(|r| r.candidate.clone()).collect();
    ensure(found == rows, || format!("census has {} members, table {}", found.len(), rows.len()))?;
    for row in hyperbolic_table() {
        let v = verdict_of(&row.candidate)?;
        ensure(v == row.verdict, || format!("row {} decided {v}", row.index))?;
    }
    Ok(format!("{} candidates, rows 2 and 8 exceptional", found.len()))
}

fn hyperbolic_oracle(_quick: bool) -> Result<String, String> {
    let budget = SearchBudget::default();
    for row in hyperbolic_table() {
        let types = row.candidate.partitions();
        let d = row.candidate.degree();
        if row.verdict == Verdict::Realizable {
            let out = find_witness(&row.candidate, &budget).map_err(|e| format!("row {}: {e}", row.index))?;
            ensure(matches!(out, SearchOutcome::Found(_)), || format!("row {}: no tuple", row.index))?;
        } else {
            let n = count_transitive(types, d);
            ensure(n == 0.into(), || format!("row {}: {n} transitive tuples", row.index))?;
        }
    }
    Ok("7 tuples found, exceptional rows count 0".into())
}

fn positive_chi(quick: bool) -> Result<String, String> {
    let dmax = if quick { 14 } else { 30 };
    let mut exceptional = Vec::new();
    for c in positive_chi_candidates(dmax) {
        if verdict_of(&c)? == Verdict::Exceptional {
            exceptional.push(c);
        }
    }
    let listed = exceptional_positive_list(dmax);
    ensure(exceptional == listed, || format!("{} exceptional by rule, {} listed", exceptional.len(), listed.len()))?;
    let prime = exceptional.iter().find(|c| crate::quadform::primes_up_to(dmax as u64).contains(&(c.degree() as u64)));
    ensure(prime.is_none(), || format!("prime-degree exception {}", prime.unwrap()))?;
    Ok(format!("{} exceptional candidates up to degree {dmax}", listed.len()))
}

/// Every family member up to `dmax`, torus families included.
pub fn template_union(dmax: u32) -> Vec<CandidateCover> {
    let mut out: Vec<CandidateCover> = FAMILIES
        .iter()
        .flat_map(|t| (0..=dmax).filter_map(move |k| t.instantiate(k)))
        .filter(|c| c.degree() <= dmax)
        .collect();
    out.sort();
    out.dedup();
    out
}

fn euclidean_exhaustive(quick: bool) -> Result<String, String> {
    let dmax = if quick { 13 } else { 25 };
    let found = euclidean_candidates(dmax);
    let templates = template_union(dmax);
    let missing: Vec<String> = found.iter().filter(|c| !templates.contains(c)).map(|c| c.to_string()).collect();
    let extra: Vec<String> = templates.iter().filter(|c| !found.contains(c)).map(|c| c.to_string()).collect();
    ensure(missing.is_empty() && extra.is_empty(), || format!("unmatched {missing:?}, not enumerated {extra:?}"))?;
    Ok(format!("{} candidates up to degree {dmax}", found.len()))
}

fn euclidean_witnesses(quick: bool) -> Result<String, String> {
    let kmax = if quick { 4 } else { 12 };
    let members: Vec<(String, CandidateCover)> = FAMILIES
        .iter()
        .filter(|t| !t.partitions.is_empty())
        .flat_map(|t| (1..=kmax).filter_map(move |k| t.instantiate(k).map(|c| (format!("{} k={k}", t.label()), c))))
        .collect();
    let errors: Vec<String> = members
        .par_iter()
        .filter_map(|(label, c)| check_member(c).err().map(|e| format!("{label}: {e}")))
        .collect();
    ensure(errors.is_empty(), || errors.join("; "))?;
    Ok(format!("{} family members consistent", members.len()))
}

/// Verdict against the criterion, and a verified certificate exactly when
/// realizable.
fn check_member(c: &CandidateCover) -> Result<(), String> {
    let v = verdict_of(c)?;
    if c.cover_genus() == 1 {
        let w = torus_witness(c).map_err(|e| e.to_string())?;
        return ensure(v == Verdict::Realizable && verify_torus_witness(c, &w).ok, || "torus witness".into());
    }
    let fam = crate::decide::match_euclidean_family(c).map_err(|e| e.to_string())?;
    let holds = fam.template().criterion.evaluate(c.degree() as u64).holds;
    ensure((v == Verdict::Realizable) == holds, || format!("verdict {v} against criterion {holds}"))?;
    match construct_witness(c).map_err(|e| e.to_string())? {
        Some(w) => {
            let report = verify_witness(c, &w).map_err(|e| e.to_string())?;
            ensure(v == Verdict::Realizable && report.ok, || format!("witness {w} on {v}: {report}"))
        }
        None => ensure(v == Verdict::Exceptional, || "no witness for a realizable member".into()),
    }
}

/// The three single-family statements at degrees 4k+1, 6k+1 and 3k+1.
pub fn headline_sweep(case_id: u8, form: FormId, dmax: u32) -> Result<usize, String> {
    let t = crate::decide::euclidean_template(case_id, 1).ok_or("missing family")?;
    let mut checked = 0;
    for k in 1.. {
        if t.degree(k) > dmax {
            break;
        }
        let c = t.instantiate(k).ok_or_else(|| format!("k={k} does not instantiate"))?;
        let realizable = verdict_of(&c)? == Verdict::Realizable;
        let representable = represent(form, c.degree() as u64, Constraint::NONE).is_some();
        ensure(realizable == representable, || format!("{c}: realizable {realizable}, representable {representable}"))?;
        checked += 1;
    }
    Ok(checked)
}

fn headline(_quick: bool) -> Result<String, String> {
    let a = headline_sweep(1, FormId::X2Y2, 61)?;
    let b = headline_sweep(2, FormId::X2XYY2, 61)?;
    let c = headline_sweep(3, FormId::X2XYY2, 61)?;
    Ok(format!("{a} + {b} + {c} degrees up to 61"))
}

/// The three congruence identities for the side conditions.
pub const IDENTITIES: [(FormId, Constraint, u64, u64); 3] = [
    (FormId::X2Y2, Constraint::DIFFERENT_PARITY, 1, 4),
    (FormId::X2XYY2, Constraint { different_parity: false, not_both_even: true, incongruent_mod_3: true }, 1, 6),
    (FormId::X2XYY2, Constraint::INCONGRUENT_MOD_3, 1, 3),
];

/// Prime classes every prime of which the form represents.
pub const PRIME_CLASSES: [(FormId, u64, u64); 3] = [(FormId::X2Y2, 1, 4), (FormId::X2XYY2, 1, 6), (FormId::X2XYY2, 1, 3)];

fn quadratic_forms(quick: bool) -> Result<String, String> {
    let limit = if quick { 1_000 } else { 10_000 };
    for (form, constraint, r, m) in IDENTITIES {
        let bad = congruence_equivalence(form, constraint, r, m, limit);
        ensure(bad.is_empty(), || format!("{form} {constraint} {r} mod {m}: {bad:?}"))?;
    }
    let plimit = if quick { 10_000 } else { 100_000 };
    for (form, r, m) in PRIME_CLASSES {
        let bad = prime_support(form, r, m, plimit);
        ensure(bad.is_empty(), || format!("{form} misses primes {bad:?}"))?;
    }
    let top = if quick { 4 } else { 6 };
    let limits: Vec<u64> = (2..=top).map(|j| 10u64.pow(j)).collect();
    for form in [FormId::X2Y2, FormId::X2XYY2] {
        let ds = densities(form, &limits);
        ensure(ds.windows(2).all(|w| w[1].ratio() < w[0].ratio()), || format!("{form} densities {ds:?}"))?;
    }
    Ok(format!("identities to {limit}, primes to {plimit}, densities to 10^{top}"))
}

fn oracle_agreement(quick: bool) -> Result<String, String> {
    let dmax = if quick { 9 } else { 13 };
    let mut cands: Vec<CandidateCover> = euclidean_candidates(dmax).into_iter().filter(|c| c.cover_genus() == 0).collect();
    cands.extend(positive_chi_candidates(if quick { 8 } else { 10 }));
    let budget = SearchBudget::default();
    let errors: Vec<String> = cands
        .par_iter()
        .filter_map(|c| {
            let v = match verdict_of(c) {
                Ok(v) => v,
                Err(e) => return Some(e),
            };
            let agree = match exhaustive_decide(c, &budget) {
                ExhaustiveVerdict::Realizable(_) | ExhaustiveVerdict::KnownRealizable => v == Verdict::Realizable,
                ExhaustiveVerdict::Exceptional => v == Verdict::Exceptional,
                ExhaustiveVerdict::BudgetExceeded => return Some(format!("{c}: budget exceeded")),
            };
            (!agree).then(|| format!("{c}: decide {v}, oracle disagrees"))
        })
        .collect();
    ensure(errors.is_empty(), || errors.join("; "))?;
    Ok(format!("{} candidates agree", cands.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for r in run_all(true) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
