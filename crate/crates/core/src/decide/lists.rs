//! Explicit lists: the exceptional positive-χ candidates, the realizable
//! ones grouped by source orbifold, and the nine triangular hyperbolic rows.

use std::sync::OnceLock;

use serde::Serialize;

use crate::model::{parse_candidate, CandidateCover, Partition, Verdict};

fn build(d: u32, parts: &[&[(u32, usize)]]) -> CandidateCover {
    let parts = parts.iter().map(|p| Partition::from_counts(p).expect("nonempty")).collect();
    CandidateCover::new(0, d, parts).expect("listed candidates are valid")
}

/// Sporadic members of the exceptional positive-χ list: (degree, counts of 2s,
/// 3s and the third partition), written as (value, multiplicity) pairs.
const SPORADIC_EXCEPTIONS: &[(u32, &[&[(u32, usize)]])] = &[
    (9, &[&[(2, 4), (1, 1)], &[(3, 3)], &[(3, 3)]]),
    (9, &[&[(2, 4), (1, 1)], &[(3, 3)], &[(4, 2), (1, 1)]]),
    (10, &[&[(2, 5)], &[(3, 3), (1, 1)], &[(4, 2), (2, 1)]]),
    (16, &[&[(2, 8)], &[(3, 5), (1, 1)], &[(4, 4)]]),
    (16, &[&[(2, 8)], &[(3, 5), (1, 1)], &[(5, 3), (1, 1)]]),
    (18, &[&[(2, 9)], &[(3, 6)], &[(4, 4), (2, 1)]]),
    (21, &[&[(2, 10), (1, 1)], &[(3, 7)], &[(5, 4), (1, 1)]]),
    (25, &[&[(2, 12), (1, 1)], &[(3, 8), (1, 1)], &[(5, 5)]]),
    (36, &[&[(2, 18)], &[(3, 12)], &[(5, 7), (1, 1)]]),
    (40, &[&[(2, 20)], &[(3, 13), (1, 1)], &[(5, 8)]]),
    (45, &[&[(2, 22), (1, 1)], &[(3, 15)], &[(5, 9)]]),
];

/// All exceptional candidates with positive target χ^orb and d ≤ `dmax`:
/// eleven sporadic ones and 2k: (2,…,2)(2,…,2)(h,2k−h) for k > h ≥ 1.
pub fn exceptional_positive_list(dmax: u32) -> Vec<CandidateCover> {
    let mut out: Vec<CandidateCover> =
        SPORADIC_EXCEPTIONS.iter().filter(|(d, _)| *d <= dmax).map(|(d, parts)| build(*d, parts)).collect();
    for k in 2..=dmax / 2 {
        for h in 1..k {
            out.push(build(2 * k, &[&[(2, k as usize)], &[(2, k as usize)], &[(2 * k - h, 1), (h, 1)]]));
        }
    }
    out.sort();
    out
}

/// Source type of a realizable positive-χ list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SphericalSource {
    /// S(p̃, p̃) with p̃ > 1.
    EqualPair,
    /// S(2, 2, p̃).
    Dihedral,
    /// S(2, 3, 3).
    Tetrahedral,
}

const EQUAL_PAIR_SPORADIC: &[(u32, &[&[(u32, usize)]])] = &[
    (4, &[&[(2, 2)], &[(3, 1), (1, 1)], &[(3, 1), (1, 1)]]),
    (6, &[&[(2, 2), (1, 2)], &[(3, 2)], &[(3, 2)]]),
    (6, &[&[(2, 3)], &[(3, 2)], &[(4, 1), (1, 2)]]),
    (8, &[&[(2, 4)], &[(3, 2), (1, 2)], &[(4, 2)]]),
    (12, &[&[(2, 5), (1, 2)], &[(3, 4)], &[(4, 3)]]),
    (12, &[&[(2, 6)], &[(3, 4)], &[(4, 2), (2, 2)]]),
    (12, &[&[(2, 6)], &[(3, 4)], &[(5, 2), (1, 2)]]),
    (20, &[&[(2, 10)], &[(3, 6), (1, 2)], &[(5, 4)]]),
    (30, &[&[(2, 14), (1, 2)], &[(3, 10)], &[(5, 6)]]),
];

const DIHEDRAL: &[(u32, &[&[(u32, usize)]])] = &[
    (4, &[&[(2, 1), (1, 2)], &[(3, 1), (1, 1)], &[(4, 1)]]),
    (6, &[&[(2, 2), (1, 2)], &[(3, 2)], &[(4, 1), (2, 1)]]),
    (6, &[&[(2, 2), (1, 2)], &[(3, 2)], &[(5, 1), (1, 1)]]),
    (10, &[&[(2, 4), (1, 2)], &[(3, 3), (1, 1)], &[(5, 2)]]),
    (15, &[&[(2, 6), (1, 3)], &[(3, 5)], &[(5, 3)]]),
];

/// The realizable candidates with the given spherical source and d ≤ `dmax`.
pub fn spherical_source_list(source: SphericalSource, dmax: u32) -> Vec<CandidateCover> {
    let mut out: Vec<CandidateCover> = match source {
        SphericalSource::EqualPair => {
            let mut v: Vec<CandidateCover> = EQUAL_PAIR_SPORADIC
                .iter()
                .filter(|(d, _)| *d <= dmax)
                .map(|(d, parts)| build(*d, parts))
                .collect();
            for k in 1.. {
                let (odd, even) = (2 * k + 1, 2 * k + 2);
                if odd > dmax {
                    break;
                }
                let k = k as usize;
                v.push(build(odd, &[&[(2, k), (1, 1)], &[(2, k), (1, 1)], &[(odd, 1)]]));
                if even <= dmax {
                    v.push(build(even, &[&[(2, k), (1, 2)], &[(2, k + 1)], &[(even, 1)]]));
                }
            }
            v
        }
        SphericalSource::Dihedral => {
            DIHEDRAL.iter().filter(|(d, _)| *d <= dmax).map(|(d, parts)| build(*d, parts)).collect()
        }
        SphericalSource::Tetrahedral => {
            if dmax >= 5 {
                vec![build(5, &[&[(2, 2), (1, 1)], &[(3, 1), (1, 2)], &[(5, 1)]])]
            } else {
                Vec::new()
            }
        }
    };
    out.sort();
    out
}

/// One row of the triangular hyperbolic census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypTableRow {
    pub index: u8,
    pub candidate: CandidateCover,
    pub verdict: Verdict,
}

const HYPERBOLIC_ROWS: [&str; 9] = [
    "6: (5,1)(4,1,1)(2,2,2)",
    "8: (5,1,1,1)(4,4)(2,2,2,2)",
    "8: (7,1)(3,3,1,1)(2,2,2,2)",
    "9: (7,1,1)(3,3,3)(2,2,2,2,1)",
    "10: (8,1,1)(3,3,3,1)(2,2,2,2,2)",
    "12: (8,2,1,1)(3,3,3,3)(2,2,2,2,2,2)",
    "12: (9,1,1,1)(3,3,3,3)(2,2,2,2,2,2)",
    "16: (7,7,1,1)(3,3,3,3,3,1)(2,2,2,2,2,2,2,2)",
    "24: (7,7,7,1,1,1)(3,3,3,3,3,3,3,3)(2,2,2,2,2,2,2,2,2,2,2,2)",
];

/// The nine rows; rows 2 and 8 are the exceptional ones.
pub fn hyperbolic_table() -> &'static [HypTableRow] {
    static TABLE: OnceLock<Vec<HypTableRow>> = OnceLock::new();
    TABLE.get_or_init(|| {
        HYPERBOLIC_ROWS
            .iter()
            .enumerate()
            .map(|(i, text)| {
                let index = i as u8 + 1;
                let verdict = if index == 2 || index == 8 { Verdict::Exceptional } else { Verdict::Realizable };
                HypTableRow { index, candidate: parse_candidate(text).expect("table rows parse"), verdict }
            })
            .collect()
    })
}

pub fn hyperbolic_row(c: &CandidateCover) -> Option<&'static HypTableRow> {
    hyperbolic_table().iter().find(|r| &r.candidate == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{geometry_class, induced_orbifold_cover, GeometryClass};
    use crate::model::Orbifold;

    #[test]
    fn exceptional_list_members_have_bad_source_and_composite_degree() {
        let list = exceptional_positive_list(45);
        assert!(list.len() > 11);
        for c in &list {
            let oc = induced_orbifold_cover(c);
            assert_eq!(geometry_class(&oc.source), GeometryClass::Bad, "{c}");
            assert_eq!(geometry_class(&oc.target), GeometryClass::Spherical, "{c}");
            assert_eq!(c.cover_genus(), 0);
            let d = c.degree();
            assert!((2..d).any(|q| d % q == 0), "{c} has prime degree");
        }
        assert!(list.contains(&parse_candidate("4: (2,2)(2,2)(3,1)").unwrap()));
    }

    #[test]
    fn source_lists_have_the_stated_source() {
        for c in spherical_source_list(SphericalSource::EqualPair, 30) {
            let s = induced_orbifold_cover(&c).source;
            let o = s.cone_orders();
            assert!(o.len() == 2 && o[0] == o[1], "{c} -> {s}");
        }
        for c in spherical_source_list(SphericalSource::Dihedral, 30) {
            let s = induced_orbifold_cover(&c).source;
            assert!(s.cone_orders().len() == 3 && s.cone_orders()[..2] == [2, 2], "{c} -> {s}");
        }
        let t = spherical_source_list(SphericalSource::Tetrahedral, 30);
        assert_eq!(t.len(), 1);
        assert_eq!(induced_orbifold_cover(&t[0]).source, Orbifold::sphere(&[2, 3, 3]));
    }

    #[test]
    fn hyperbolic_rows() {
        let t = hyperbolic_table();
        assert_eq!(t.len(), 9);
        let degrees: Vec<u32> = t.iter().map(|r| r.candidate.degree()).collect();
        assert_eq!(degrees, [6, 8, 8, 9, 10, 12, 12, 16, 24]);
        for r in t {
            let oc = induced_orbifold_cover(&r.candidate);
            assert_eq!(geometry_class(&oc.source), GeometryClass::Hyperbolic);
            assert_eq!(oc.source.cone_orders().len(), 3);
            assert_eq!(oc.target.cone_orders().len(), 3);
        }
    }
}
