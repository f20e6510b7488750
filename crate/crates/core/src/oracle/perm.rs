//! Permutations of {0..d} written 1-based in cycle notation, and the
//! permutation-tuple certificate.
//!
//! Products compose left to right: `a.then(&b)` applies `a` first.

use std::fmt;

use serde::Serialize;

use crate::model::{CandidateCover, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation of 1..{0}")]
    NotBijective(usize),
    #[error("cycle notation: {0}")]
    Syntax(String),
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d as u32).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i as usize >= d || std::mem::replace(&mut seen[i as usize], true) {
                return Err(PermError::NotBijective(d));
            }
        }
        Ok(Permutation { images })
    }

    /// From 0-based disjoint cycles.
    pub fn from_cycles(d: usize, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..d as u32).collect();
        let mut touched = vec![false; d];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                let x = x as usize;
                if x >= d || std::mem::replace(&mut touched[x], true) {
                    return Err(PermError::NotBijective(d));
                }
                images[x] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse(d: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| PermError::Syntax(format!("expected '(' at '{rest}'")))?;
            let close = body.find(')').ok_or_else(|| PermError::Syntax("unclosed cycle".into()))?;
            let cyc = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<u32>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(PermError::Syntax(format!("bad point '{s}'"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(d, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// g⁻¹·self·g in the left-to-right convention.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Disjoint cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths, fixed points included, as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect()).expect("nonempty degree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cyc in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Product of a tuple, left to right.
pub fn product(perms: &[Permutation]) -> Option<Permutation> {
    let (first, rest) = perms.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, p| acc.then(p)))
}

/// Whether the group generated by `perms` is transitive on 0..d.
pub fn is_transitive(d: usize, perms: &[Permutation]) -> bool {
    if d == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = d;
    for p in perms {
        for (i, &j) in p.images().iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j as usize));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components == 1
}

/// Reorders an identity-product tuple so that permutation i has type
/// `types[i]`, using the braid moves (x, y) → (y, y⁻¹xy), which keep the
/// product and the generated group. `None` if the type multisets differ.
pub fn reorder_to_types(mut tuple: Vec<Permutation>, types: &[Partition]) -> Option<Vec<Permutation>> {
    if tuple.len() != types.len() {
        return None;
    }
    for (pos, want) in types.iter().enumerate() {
        let j = (pos..tuple.len()).find(|&j| &tuple[j].cycle_type() == want)?;
        for k in (pos..j).rev() {
            let (x, y) = (tuple[k].clone(), tuple[k + 1].clone());
            tuple[k + 1] = x.conjugate_by(&y);
            tuple[k] = y;
        }
    }
    Some(tuple)
}

/// A tuple of permutations realizing a candidate: one per partition, product
/// the identity, transitive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationWitness {
    pub degree: u32,
    pub perms: Vec<Permutation>,
}

impl fmt::Display for PermutationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.perms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("witness has degree {witness_degree} and {witness_len} permutations, candidate has degree {degree} and {len} partitions")]
pub struct SizeMismatch {
    pub degree: u32,
    pub len: usize,
    pub witness_degree: u32,
    pub witness_len: usize,
}

/// Checks cycle types in order, the product relation and transitivity.
pub fn verify_permutation_witness(c: &CandidateCover, w: &PermutationWitness) -> Result<bool, SizeMismatch> {
    let sizes_ok = w.degree == c.degree()
        && w.perms.len() == c.n()
        && w.perms.iter().all(|p| p.degree() == c.degree() as usize);
    if !sizes_ok {
        return Err(SizeMismatch { degree: c.degree(), len: c.n(), witness_degree: w.degree, witness_len: w.perms.len() });
    }
    let types_ok = w.perms.iter().zip(c.partitions()).all(|(p, part)| &p.cycle_type() == part);
    let product_ok = product(&w.perms).is_some_and(|p| p.is_identity());
    Ok(types_ok && product_ok && is_transitive(c.degree() as usize, &w.perms))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::model::parse_candidate;

    fn perm(d: usize, s: &str) -> Permutation {
        Permutation::parse(d, s).unwrap()
    }

    #[test]
    fn notation_round_trip() {
        let p = perm(5, "(1 3 2)(4 5)");
        assert_eq!(p.to_string(), "(1 3 2)(4 5)");
        assert_eq!(perm(3, "()").to_string(), "()");
        assert_eq!(perm(4, "(2,4)").to_string(), "(2 4)");
        assert!(Permutation::parse(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse(3, "(1 4)").is_err());
    }

    #[test]
    fn left_to_right_product() {
        let a = perm(3, "(1 2)");
        let b = perm(3, "(2 3)");
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).to_string(), "(1 3 2)");
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.conjugate_by(&b).cycle_type(), a.cycle_type());
    }

    #[test]
    fn verify_examples() {
        let c = parse_candidate("2: (2)(2)").unwrap();
        let w = PermutationWitness { degree: 2, perms: vec![perm(2, "(1 2)"), perm(2, "(1 2)")] };
        assert!(verify_permutation_witness(&c, &w).unwrap());
        let c = parse_candidate("3: (3)(3)(3)").unwrap();
        let t = perm(3, "(1 2 3)");
        let w = PermutationWitness { degree: 3, perms: vec![t.clone(), t.clone(), t] };
        assert!(verify_permutation_witness(&c, &w).unwrap());
        let bad = PermutationWitness { degree: 3, perms: vec![perm(3, "(1 2 3)")] };
        assert!(verify_permutation_witness(&c, &bad).is_err());
    }

    #[test]
    fn braid_reordering_keeps_product() {
        let (x, y) = (perm(4, "(1 2)"), perm(4, "(1 2 3 4)"));
        let t = vec![x.clone(), y.clone(), x.then(&y).inverse()];
        assert!(product(&t).unwrap().is_identity());
        let types: Vec<Partition> = vec![t[2].cycle_type(), t[1].cycle_type(), t[0].cycle_type()];
        let r = reorder_to_types(t, &types).unwrap();
        assert!(product(&r).unwrap().is_identity());
        assert_eq!(r.iter().map(|p| p.cycle_type()).collect::<Vec<_>>(), types);
    }

    #[test]
    fn no_tuple_in_s4_for_exceptional() {
        let c = parse_candidate("4: (2,2)(2,2)(3,1)").unwrap();
        let all = all_perms(4);
        for a in &all {
            for b in &all {
                let w = PermutationWitness { degree: 4, perms: vec![a.clone(), b.clone(), a.then(b).inverse()] };
                if w.perms.iter().zip(c.partitions()).all(|(p, t)| &p.cycle_type() == t) {
                    assert!(!verify_permutation_witness(&c, &w).unwrap());
                }
            }
        }
    }

    pub(crate) fn all_perms(d: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (0..d as u32).collect();
        heap(d, &mut cur, &mut out);
        out
    }

    fn heap(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation { images: cur.clone() });
            return;
        }
        heap(k - 1, cur, out);
        for i in 0..k - 1 {
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
            heap(k - 1, cur, out);
        }
    }

    #[test]
    fn heap_generates_all() {
        let mut v = all_perms(4);
        assert_eq!(v.len(), 24);
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 24);
    }
}
