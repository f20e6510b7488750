//! Permutation tuples read off an affine or torus witness.
//!
//! The target group Γ is generated by rotations about its cone lifts and
//! the cover corresponds to the subgroup H generated by rotations about the
//! images of the source cone lifts. Γ acts on the d cosets Γ/H; the action
//! of the cone generators is the monodromy.

use std::collections::{BTreeMap, VecDeque};

use num_integer::Integer;

use crate::model::CandidateCover;
use crate::oracle::perm::{reorder_to_types, verify_permutation_witness, Permutation, PermutationWitness};

use super::affine::{construct_witness, torus_witness, AffineWitness, TorusWitness, WitnessError};
use super::lattice::{EuclideanOrbifold, Frame, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonodromyError {
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error("torus over torus has no branch data")]
    Unbranched,
    #[error("coset enumeration found {found} cosets, expected {expected}")]
    IndexMismatch { found: usize, expected: usize },
    #[error("no ordering of the cone generators multiplies to the identity")]
    NoRelation,
    #[error("cycle types do not match the candidate")]
    TypeMismatch,
    #[error("assembled tuple failed verification")]
    Unverified,
}

/// z ↦ ζ^rot·z + t with ζ the frame's generating unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Motion {
    rot: u8,
    t: LatticePoint,
}

impl Motion {
    fn identity(frame: Frame) -> Self {
        Motion { rot: 0, t: LatticePoint::origin(frame) }
    }

    fn n(&self) -> u8 {
        self.t.frame.rotation_order()
    }

    /// Rotation by `steps`·(2π/N) about `c`.
    fn rotation(c: LatticePoint, steps: u8) -> Self {
        Motion { rot: steps % c.frame.rotation_order(), t: c.sub(c.rotate(steps)) }
    }

    fn translation(t: LatticePoint) -> Self {
        Motion { rot: 0, t }
    }

    /// self ∘ other.
    fn compose(&self, other: &Motion) -> Motion {
        Motion { rot: (self.rot + other.rot) % self.n(), t: other.t.rotate(self.rot).add(self.t) }
    }

    fn inverse(&self) -> Motion {
        let back = (self.n() - self.rot) % self.n();
        Motion { rot: back, t: self.t.rotate(back).neg() }
    }

    fn is_identity(&self) -> bool {
        self.rot == 0 && self.t.a == 0 && self.t.b == 0
    }
}

/// Rank ≤ 2 sublattice of Z² in Hermite normal form: rows (a, b), (0, c).
#[derive(Debug, Clone, Copy, Default)]
struct Hnf {
    a: i128,
    b: i128,
    c: i128,
}

impl Hnf {
    fn add(&mut self, x: i128, y: i128) {
        if self.a == 0 && x == 0 {
            self.c = self.c.gcd(&y);
        } else {
            let g = self.a.extended_gcd(&x);
            // The combination of (a, b) and (x, y) killing the first coordinate.
            let y0 = (x / g.gcd) * self.b - (self.a / g.gcd) * y;
            self.b = g.x * self.b + g.y * y;
            self.a = g.gcd;
            self.c = self.c.gcd(&y0);
        }
        if self.c > 0 {
            self.b = self.b.rem_euclid(self.c);
        }
    }

    fn contains(&self, x: i128, y: i128) -> bool {
        let rest = if self.a == 0 {
            if x != 0 {
                return false;
            }
            y
        } else {
            if x % self.a != 0 {
                return false;
            }
            y - (x / self.a) * self.b
        };
        if self.c == 0 {
            rest == 0
        } else {
            rest % self.c == 0
        }
    }
}

/// The subgroup H: rotation transversal plus translation lattice.
struct Subgroup {
    transversal: BTreeMap<u8, Motion>,
    lattice: Hnf,
}

impl Subgroup {
    fn generated_by(frame: Frame, gens: &[Motion]) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(0, Motion::identity(frame));
        let mut queue = VecDeque::from([0u8]);
        while let Some(r) = queue.pop_front() {
            let h = transversal[&r];
            for s in gens {
                let next = s.compose(&h);
                if let std::collections::btree_map::Entry::Vacant(e) = transversal.entry(next.rot) {
                    e.insert(next);
                    queue.push_back(next.rot);
                }
            }
        }
        let mut lattice = Hnf::default();
        for h in transversal.values() {
            for s in gens {
                let sh = s.compose(h);
                let tr = transversal[&sh.rot].inverse().compose(&sh);
                debug_assert_eq!(tr.rot, 0);
                if tr.t.a != 0 || tr.t.b != 0 {
                    lattice.add(tr.t.a as i128, tr.t.b as i128);
                }
            }
        }
        Subgroup { transversal, lattice }
    }

    fn contains(&self, g: &Motion) -> bool {
        let Some(h) = self.transversal.get(&g.rot) else { return false };
        let tr = h.inverse().compose(g);
        self.lattice.contains(tr.t.a as i128, tr.t.b as i128)
    }
}

/// Permutations induced on Γ/H by each generator, plus the coset count.
fn coset_action(frame: Frame, h: &Subgroup, gens: &[Motion], degree: usize) -> Result<Vec<Permutation>, MonodromyError> {
    let mut reps = vec![Motion::identity(frame)];
    let find = |reps: &[Motion], g: &Motion| reps.iter().position(|x| h.contains(&x.inverse().compose(g)));
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut i = 0;
    while i < reps.len() {
        for (gi, g) in gens.iter().enumerate() {
            let y = g.compose(&reps[i]);
            let j = match find(&reps, &y) {
                Some(j) => j,
                None => {
                    if reps.len() == degree {
                        return Err(MonodromyError::IndexMismatch { found: degree + 1, expected: degree });
                    }
                    reps.push(y);
                    reps.len() - 1
                }
            };
            images[gi].push(j as u32);
        }
        i += 1;
    }
    if reps.len() != degree {
        return Err(MonodromyError::IndexMismatch { found: reps.len(), expected: degree });
    }
    images.into_iter().map(|im| Permutation::from_images(im).map_err(|_| MonodromyError::Unverified)).collect()
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations_of(n - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// Builds the tuple, reorders it to the candidate's partition order by braid
/// moves and verifies it.
fn assemble(c: &CandidateCover, target: EuclideanOrbifold, h: &Subgroup) -> Result<PermutationWitness, MonodromyError> {
    let frame = target.frame();
    let n = frame.rotation_order();
    let gens: Vec<Motion> = target
        .cone_representatives()
        .into_iter()
        .map(|(_, order, p)| Motion::rotation(p, n / order as u8))
        .collect();
    let order = permutations_of(gens.len())
        .into_iter()
        .find(|o| o.iter().fold(Motion::identity(frame), |acc, &i| acc.compose(&gens[i])).is_identity())
        .ok_or(MonodromyError::NoRelation)?;
    let perms = coset_action(frame, h, &gens, c.degree() as usize)?;
    // g₁∘g₂∘…∘gₙ = id as motions; permutations compose left to right, so
    // the tuple runs in reverse.
    let tuple: Vec<Permutation> = order.iter().rev().map(|&i| perms[i].clone()).collect();
    let tuple = reorder_to_types(tuple, c.partitions()).ok_or(MonodromyError::TypeMismatch)?;
    let w = PermutationWitness { degree: c.degree(), perms: tuple };
    match verify_permutation_witness(c, &w) {
        Ok(true) => Ok(w),
        _ => Err(MonodromyError::Unverified),
    }
}

fn case_target(case_id: u8) -> Option<EuclideanOrbifold> {
    use EuclideanOrbifold::*;
    Some(match case_id {
        1 | 6 => S244,
        2 | 5 | 7 => S236,
        3 => S333,
        4 => S2222,
        _ => return None,
    })
}

pub fn monodromy_from_affine(c: &CandidateCover, w: &AffineWitness) -> Result<PermutationWitness, MonodromyError> {
    let target = case_target(w.case_id).ok_or(WitnessError::UnknownCase(w.case_id))?;
    let n = target.frame().rotation_order();
    let gens: Vec<Motion> = w
        .images()?
        .iter()
        .map(|img| Motion::rotation(img.image, n / img.source_order as u8))
        .collect();
    assemble(c, target, &Subgroup::generated_by(target.frame(), &gens))
}

pub fn monodromy_from_torus(c: &CandidateCover, w: &TorusWitness) -> Result<PermutationWitness, MonodromyError> {
    let target = w.target.ok_or(MonodromyError::Unbranched)?;
    let gens: Vec<Motion> = w.basis.iter().map(|&b| Motion::translation(b)).collect();
    assemble(c, target, &Subgroup::generated_by(target.frame(), &gens))
}

/// Permutation certificate for a Euclidean candidate, `Ok(None)` when the
/// family criterion fails.
pub fn euclidean_permutation_witness(c: &CandidateCover) -> Result<Option<PermutationWitness>, MonodromyError> {
    match construct_witness(c) {
        Ok(Some(w)) => monodromy_from_affine(c, &w).map(Some),
        Ok(None) => Ok(None),
        Err(WitnessError::TorusSource(_)) => monodromy_from_torus(c, &torus_witness(c)?).map(Some),
        Err(e) => Err(e.into()),
    }
}
