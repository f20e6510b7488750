//! Candidate generation: partitions with bounded defect, triangular
//! candidates, and the sweeps used to cross-check the classification.
//!
//! Generation is constraint-first. Triples are built from partitions
//! grouped by length and lcm so that the ℓ budget of Riemann–Hurwitz and the
//! cone orders of the target prune before any candidate is assembled.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::euler::{geometry_class, induced_orbifold_cover, orbifold_euler_characteristic, GeometryClass};
use crate::model::{CandidateCover, Partition};

/// All partitions of d in reverse lexicographic order.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("nonempty"));
            return;
        }
        for v in (1..=left.min(max)).rev() {
            cur.push(v);
            rec(left - v, v, cur, out);
            cur.pop();
        }
    }
    if d > 0 {
        rec(d, d, &mut cur, &mut out);
    }
    out
}

/// Partitions of d with c(Π) ≤ `cmax`, reverse lexicographic. The trivial
/// partition (1,…,1) has defect 0 and is included.
pub fn partitions_defect_at_most(d: u32, cmax: usize) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| p.defect() <= cmax).collect()
}

fn nontrivial_partitions(d: u32) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| !p.is_trivial()).collect()
}

/// Unordered triples (as index triples i ≤ j ≤ k) whose lengths sum to
/// `total_len`, calling `keep` on each.
fn triples_with_length<F>(parts: &[Partition], total_len: usize, mut keep: F)
where
    F: FnMut(&Partition, &Partition, &Partition),
{
    for i in 0..parts.len() {
        let li = parts[i].len();
        if li >= total_len {
            continue;
        }
        for j in i..parts.len() {
            let lj = parts[j].len();
            if li + lj >= total_len {
                continue;
            }
            let want = total_len - li - lj;
            for k in j..parts.len() {
                if parts[k].len() == want {
                    keep(&parts[i], &parts[j], &parts[k]);
                }
            }
        }
    }
}

fn sphere_candidate(d: u32, parts: Vec<Partition>) -> Option<CandidateCover> {
    CandidateCover::new(0, d, parts).ok()
}

fn sorted_unique(mut v: Vec<CandidateCover>) -> Vec<CandidateCover> {
    v.sort();
    v.dedup();
    v
}

/// n = 3 sphere candidates whose induced cover is between triangular
/// orbifolds: ℓ = d + 2 and total defect 3.
pub fn triangular_candidates(d: u32) -> Vec<CandidateCover> {
    if d < 2 {
        return Vec::new();
    }
    let parts: Vec<Partition> = partitions_defect_at_most(d, 3).into_iter().filter(|p| !p.is_trivial()).collect();
    let mut out = Vec::new();
    triples_with_length(&parts, d as usize + 2, |a, b, c| {
        if a.defect() + b.defect() + c.defect() == 3 {
            out.extend(sphere_candidate(d, vec![a.clone(), b.clone(), c.clone()]));
        }
    });
    sorted_unique(out)
}

/// Largest degree of a cover between hyperbolic triangular orbifolds:
/// χ^orb(X̃) = d·χ^orb(X) with 0 < −χ^orb(X̃) < 1 and −χ^orb(X) ≥ 1/42
/// (attained by S(2,3,7)), so d < 42.
pub const CENSUS_MAX_DEGREE: u32 = 41;

/// Hyperbolic triangular covers for 2 ≤ d ≤ `dmax`.
pub fn hyperbolic_triangular_census_up_to(dmax: u32) -> Vec<CandidateCover> {
    let per_degree: Vec<Vec<CandidateCover>> = (2..=dmax)
        .into_par_iter()
        .map(|d| {
            triangular_candidates(d)
                .into_iter()
                .filter(|c| {
                    let oc = induced_orbifold_cover(c);
                    geometry_class(&oc.source) == GeometryClass::Hyperbolic
                        && geometry_class(&oc.target) == GeometryClass::Hyperbolic
                })
                .collect()
        })
        .collect();
    sorted_unique(per_degree.into_iter().flatten().collect())
}

pub fn hyperbolic_triangular_census() -> Vec<CandidateCover> {
    hyperbolic_triangular_census_up_to(CENSUS_MAX_DEGREE)
}

/// Nontrivial partitions of d keyed by lcm.
fn by_lcm(d: u32) -> BTreeMap<u64, Vec<Partition>> {
    let mut m: BTreeMap<u64, Vec<Partition>> = BTreeMap::new();
    for p in nontrivial_partitions(d) {
        m.entry(p.lcm()).or_default().push(p);
    }
    m
}

/// Candidates over the sphere with the given target cone orders (one lcm
/// per partition, `None` for any), valid for some cover genus.
fn with_target_orders(d: u32, lcms: &[Option<u64>], groups: &BTreeMap<u64, Vec<Partition>>) -> Vec<CandidateCover> {
    let all: Vec<Partition> = groups.values().flatten().cloned().collect();
    let pools: Vec<&[Partition]> = lcms
        .iter()
        .map(|l| match l {
            Some(l) => groups.get(l).map_or(&[][..], |v| &v[..]),
            None => &all[..],
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Partition> = Vec::new();
    fn rec(d: u32, pools: &[&[Partition]], chosen: &mut Vec<Partition>, out: &mut Vec<CandidateCover>) {
        if chosen.len() == pools.len() {
            out.extend(sphere_candidate(d, chosen.clone()));
            return;
        }
        // ℓ ≤ d·(n − 2) + 2 for any nonnegative cover genus.
        let n = pools.len() as i64;
        let budget = d as i64 * (n - 2) + 2;
        let used: i64 = chosen.iter().map(|p| p.len() as i64).sum();
        let left = pools.len() - chosen.len();
        for p in pools[chosen.len()] {
            if used + p.len() as i64 + (left as i64 - 1) > budget {
                continue;
            }
            chosen.push(p.clone());
            rec(d, pools, chosen, out);
            chosen.pop();
        }
    }
    rec(d, &pools, &mut chosen, &mut out);
    out
}

/// Every sphere candidate with n ≤ 3 and d ≤ `dmax` whose induced target
/// has χ^orb > 0.
pub fn positive_chi_candidates(dmax: u32) -> Vec<CandidateCover> {
    let per_degree: Vec<Vec<CandidateCover>> = (2..=dmax)
        .into_par_iter()
        .map(|d| {
            let groups = by_lcm(d);
            // n = 1 and n = 2 are tiny; enumerate them without lcm filters.
            let mut out = with_target_orders(d, &[None], &groups);
            out.extend(with_target_orders(d, &[None, None], &groups));
            // Spherical or bad three-cone targets: S(2,2,p), S(2,3,3|4|5).
            out.extend(with_target_orders(d, &[Some(2), Some(2), None], &groups));
            for r in [3, 4, 5] {
                out.extend(with_target_orders(d, &[Some(2), Some(3), Some(r)], &groups));
            }
            out.retain(|c| orbifold_euler_characteristic(&induced_orbifold_cover(c).target) > Zero::zero());
            out
        })
        .collect();
    sorted_unique(per_degree.into_iter().flatten().collect())
}

/// Every sphere candidate with d ≤ `dmax` between Euclidean orbifolds.
pub fn euclidean_candidates(dmax: u32) -> Vec<CandidateCover> {
    let per_degree: Vec<Vec<CandidateCover>> = (2..=dmax)
        .into_par_iter()
        .map(|d| {
            let groups = by_lcm(d);
            let mut out = Vec::new();
            for orders in [&[3, 3, 3][..], &[2, 4, 4], &[2, 3, 6], &[2, 2, 2, 2]] {
                let lcms: Vec<Option<u64>> = orders.iter().map(|&o| Some(o)).collect();
                out.extend(with_target_orders(d, &lcms, &groups));
            }
            out.retain(|c| {
                let oc = induced_orbifold_cover(c);
                geometry_class(&oc.source) == GeometryClass::Euclidean
            });
            out
        })
        .collect();
    sorted_unique(per_degree.into_iter().flatten().collect())
}

/// All n = 3 sphere candidates of degree d whose cover has genus
/// `cover_genus` (ℓ = d + 2 − 2g̃).
pub fn all_candidates_n3_genus(d: u32, cover_genus: u32) -> Vec<CandidateCover> {
    let Some(total) = (d as i64 + 2 - 2 * cover_genus as i64).try_into().ok() else { return Vec::new() };
    if d < 2 {
        return Vec::new();
    }
    let parts = nontrivial_partitions(d);
    let mut out = Vec::new();
    triples_with_length(&parts, total, |a, b, c| out.extend(sphere_candidate(d, vec![a.clone(), b.clone(), c.clone()])));
    sorted_unique(out)
}

/// All n = 3 candidates of degree d with the sphere as cover.
pub fn all_candidates_n3(d: u32) -> Vec<CandidateCover> {
    all_candidates_n3_genus(d, 0)
}
