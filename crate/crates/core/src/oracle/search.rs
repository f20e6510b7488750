//! Backtracking search for permutation tuples.
//!
//! One permutation is fixed to a canonical representative of its class,
//! which quotients out simultaneous conjugation. The remaining outer
//! permutations (only when n ≥ 4) are enumerated, and the last two are found
//! by a pointwise kernel: choosing b(y) = z also fixes p(a⁻¹(y)) = z for the
//! running product p = a·b, so both partial permutations are tracked as
//! chains and pruned against their required cycle types.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::model::{CandidateCover, Partition};

use super::count::{class_size, count_transitive};
use super::perm::{reorder_to_types, verify_permutation_witness, Permutation, PermutationWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchMode {
    /// Seeded restarts with growing node limits and shuffled value order.
    Randomized,
    /// One deterministic depth-first pass.
    Backtracking,
    /// Decide existence by counting, then backtrack for the tuple.
    CharacterCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
    pub seed: u64,
    pub mode: SearchMode,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 10_000_000, max_time: None, seed: 0, mode: SearchMode::Randomized }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, ..Default::default() }
    }

    pub fn with_mode(self, mode: SearchMode) -> Self {
        SearchBudget { mode, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SearchBudget { seed, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchOutcome {
    Found(PermutationWitness),
    /// The search space was exhausted (or the transitive count is zero).
    NotFound,
    /// Positive base genus: realizable by the known result, no tuple built.
    KnownRealizable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExhaustiveVerdict {
    Realizable(PermutationWitness),
    Exceptional,
    BudgetExceeded,
    KnownRealizable,
}

impl fmt::Display for ExhaustiveVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExhaustiveVerdict::Realizable(_) => "REALIZABLE",
            ExhaustiveVerdict::Exceptional => "EXCEPTIONAL",
            ExhaustiveVerdict::BudgetExceeded => "BUDGET_EXCEEDED",
            ExhaustiveVerdict::KnownRealizable => "REALIZABLE",
        })
    }
}

const NONE: u32 = u32::MAX;

/// Node and clock accounting; the clock is read every 4096 nodes.
struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
}

struct Exhausted;

impl Meter {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Exhausted);
        }
        if self.nodes % 4096 == 0 && self.deadline.is_some_and(|t| Instant::now() > t) {
            return Err(Exhausted);
        }
        Ok(())
    }
}

enum ChainUndo {
    Close { x: u32, y: u32, len: u32 },
    Merge { x: u32, y: u32, s: u32, e: u32, len_s: u32, len_e: u32, other_s: u32, other_e: u32 },
}

/// A partial permutation as disjoint cycles and open paths, with the cycle
/// lengths still allowed.
struct Chains {
    img: Vec<u32>,
    pre: Vec<u32>,
    /// At a path endpoint: the opposite endpoint.
    other: Vec<u32>,
    /// At a path endpoint: the path length.
    len: Vec<u32>,
    avail: Vec<u32>,
    max_avail: u32,
    trail: Vec<ChainUndo>,
}

impl Chains {
    fn new(d: usize, ty: &[u32]) -> Self {
        let mut avail = vec![0; d + 1];
        for &l in ty {
            avail[l as usize] += 1;
        }
        Chains {
            img: vec![NONE; d],
            pre: vec![NONE; d],
            other: (0..d as u32).collect(),
            len: vec![1; d],
            max_avail: ty.iter().copied().max().unwrap_or(0),
            avail,
            trail: Vec::new(),
        }
    }

    /// Whether x ↦ y keeps the cycle type reachable; x must be a path end
    /// and y a path start.
    fn feasible(&self, x: u32, y: u32) -> bool {
        let (x, y) = (x as usize, y as usize);
        if self.other[x] == y as u32 {
            self.avail[self.len[x] as usize] > 0
        } else {
            self.len[x] + self.len[y] <= self.max_avail
        }
    }

    fn apply(&mut self, x: u32, y: u32) {
        let (xi, yi) = (x as usize, y as usize);
        self.img[xi] = y;
        self.pre[yi] = x;
        if self.other[xi] == y {
            let len = self.len[xi];
            self.avail[len as usize] -= 1;
            if self.avail[len as usize] == 0 && len == self.max_avail {
                while self.max_avail > 0 && self.avail[self.max_avail as usize] == 0 {
                    self.max_avail -= 1;
                }
            }
            self.trail.push(ChainUndo::Close { x, y, len });
        } else {
            let (s, e) = (self.other[xi], self.other[yi]);
            let (si, ei) = (s as usize, e as usize);
            self.trail.push(ChainUndo::Merge {
                x,
                y,
                s,
                e,
                len_s: self.len[si],
                len_e: self.len[ei],
                other_s: self.other[si],
                other_e: self.other[ei],
            });
            let total = self.len[xi] + self.len[yi];
            self.other[si] = e;
            self.other[ei] = s;
            self.len[si] = total;
            self.len[ei] = total;
        }
    }

    fn undo(&mut self) {
        match self.trail.pop().expect("undo without apply") {
            ChainUndo::Close { x, y, len } => {
                self.avail[len as usize] += 1;
                self.max_avail = self.max_avail.max(len);
                self.img[x as usize] = NONE;
                self.pre[y as usize] = NONE;
            }
            ChainUndo::Merge { x, y, s, e, len_s, len_e, other_s, other_e } => {
                self.len[s as usize] = len_s;
                self.len[e as usize] = len_e;
                self.other[s as usize] = other_s;
                self.other[e as usize] = other_e;
                self.img[x as usize] = NONE;
                self.pre[y as usize] = NONE;
            }
        }
    }

    /// Every open path still fits in some allowed cycle.
    fn paths_fit(&self) -> bool {
        (0..self.pre.len()).all(|s| self.pre[s] != NONE || self.len[s] <= self.max_avail)
    }
}

/// Union-find with undo (union by size, no path compression).
struct Components {
    parent: Vec<u32>,
    size: Vec<u32>,
    count: usize,
    trail: Vec<Option<(u32, u32)>>,
}

impl Components {
    fn new(d: usize) -> Self {
        Components { parent: (0..d as u32).collect(), size: vec![1; d], count: d, trail: Vec::new() }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, x: u32, y: u32) {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            self.trail.push(None);
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
        self.count -= 1;
        self.trail.push(Some((a, b)));
    }

    fn undo(&mut self) {
        if let Some((a, b)) = self.trail.pop().expect("undo without union") {
            self.parent[b as usize] = b;
            self.size[a as usize] -= self.size[b as usize];
            self.count += 1;
        }
    }

    fn absorb(&mut self, p: &Permutation) {
        for (i, &j) in p.images().iter().enumerate() {
            self.union(i as u32, j);
        }
        self.trail.clear();
    }
}

/// Finds b of type `b_type` with a·b of type `p_type`, the group generated
/// together with the already absorbed permutations transitive.
struct Kernel<'a> {
    a_inv: Vec<u32>,
    b: Chains,
    p: Chains,
    comps: Components,
    assigned: usize,
    meter: &'a mut Meter,
    rng: Option<&'a mut ChaCha8Rng>,
}

impl Kernel<'_> {
    fn run(&mut self) -> Result<bool, Exhausted> {
        let d = self.a_inv.len();
        if self.assigned == d {
            return Ok(self.comps.count == 1);
        }
        if self.comps.count - 1 > d - self.assigned {
            return Ok(false);
        }
        // Most constrained unassigned point first.
        let mut best: Option<(usize, u32)> = None;
        for y in 0..d as u32 {
            if self.b.img[y as usize] != NONE {
                continue;
            }
            let x = self.a_inv[y as usize];
            let mut n = 0;
            for z in 0..d as u32 {
                if self.b.pre[z as usize] == NONE && self.b.feasible(y, z) && self.p.feasible(x, z) {
                    n += 1;
                    if best.is_some_and(|(m, _)| n >= m) {
                        break;
                    }
                }
            }
            if n == 0 {
                return Ok(false);
            }
            if best.is_none_or(|(m, _)| n < m) {
                best = Some((n, y));
            }
        }
        let (_, y) = best.expect("an unassigned point exists");
        let x = self.a_inv[y as usize];
        let mut values: Vec<u32> = (0..d as u32)
            .filter(|&z| self.b.pre[z as usize] == NONE && self.b.feasible(y, z) && self.p.feasible(x, z))
            .collect();
        if let Some(rng) = self.rng.as_deref_mut() {
            values.shuffle(rng);
        }
        for z in values {
            self.meter.tick()?;
            self.b.apply(y, z);
            self.p.apply(x, z);
            self.comps.union(y, z);
            self.assigned += 1;
            if self.b.paths_fit() && self.p.paths_fit() && self.run()? {
                return Ok(true);
            }
            self.assigned -= 1;
            self.comps.undo();
            self.p.undo();
            self.b.undo();
        }
        Ok(false)
    }

    fn b_perm(&self) -> Permutation {
        Permutation::from_images(self.b.img.clone()).expect("complete assignment is a bijection")
    }
}

/// Canonical representative: consecutive cycles in the partition's order.
fn canonical(ty: &Partition) -> Permutation {
    let d = ty.sum() as usize;
    let mut cycles = Vec::new();
    let mut next = 0u32;
    for &l in ty.entries() {
        cycles.push((next..next + l).collect());
        next += l;
    }
    Permutation::from_cycles(d, &cycles).expect("consecutive cycles")
}

/// Calls `visit` on every permutation of the type; stops when it returns true.
fn for_each_of_type(
    ty: &[u32],
    d: usize,
    visit: &mut dyn FnMut(&Permutation) -> Result<bool, Exhausted>,
) -> Result<bool, Exhausted> {
    fn rec(
        remaining: &mut Vec<u32>,
        used: &mut Vec<bool>,
        cycles: &mut Vec<Vec<u32>>,
        d: usize,
        visit: &mut dyn FnMut(&Permutation) -> Result<bool, Exhausted>,
    ) -> Result<bool, Exhausted> {
        let Some(first) = (0..d).find(|&i| !used[i]) else {
            let p = Permutation::from_cycles(d, cycles).expect("disjoint cycles");
            return visit(&p);
        };
        let mut lengths = remaining.clone();
        lengths.dedup();
        for l in lengths {
            let pos = remaining.iter().position(|&r| r == l).expect("length present");
            remaining.remove(pos);
            used[first] = true;
            let mut cyc = vec![first as u32];
            if fill(&mut cyc, l as usize, remaining, used, cycles, d, visit)? {
                return Ok(true);
            }
            used[first] = false;
            remaining.insert(pos, l);
        }
        Ok(false)
    }
    fn fill(
        cyc: &mut Vec<u32>,
        l: usize,
        remaining: &mut Vec<u32>,
        used: &mut Vec<bool>,
        cycles: &mut Vec<Vec<u32>>,
        d: usize,
        visit: &mut dyn FnMut(&Permutation) -> Result<bool, Exhausted>,
    ) -> Result<bool, Exhausted> {
        if cyc.len() == l {
            cycles.push(cyc.clone());
            let r = rec(remaining, used, cycles, d, visit)?;
            cycles.pop();
            return Ok(r);
        }
        for v in 0..d {
            if used[v] {
                continue;
            }
            used[v] = true;
            cyc.push(v as u32);
            let r = fill(cyc, l, remaining, used, cycles, d, visit)?;
            cyc.pop();
            used[v] = false;
            if r {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let mut remaining = ty.to_vec();
    remaining.sort_unstable_by(|a, b| b.cmp(a));
    rec(&mut remaining, &mut vec![false; d], &mut Vec::new(), d, visit)
}

/// Search arrangement: which candidate type plays which role.
struct Plan {
    d: usize,
    fixed: Partition,
    outer: Vec<Partition>,
    b_type: Partition,
    p_type: Partition,
}

impl Plan {
    fn new(c: &CandidateCover) -> Self {
        let mut types: Vec<(BigInt, Partition)> =
            c.partitions().iter().map(|t| (class_size(t.entries()), t.clone())).collect();
        // Largest class fixed; the kernel takes the two largest of the rest
        // and the smallest classes are enumerated outright.
        types.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        let fixed = types.pop().expect("n >= 3").1;
        let p_type = types.pop().expect("n >= 3").1;
        let b_type = types.pop().expect("n >= 3").1;
        Plan { d: c.degree() as usize, fixed, outer: types.into_iter().map(|t| t.1).collect(), b_type, p_type }
    }
}

/// One complete pass; `Ok(None)` means the space is exhausted.
fn search_once(
    c: &CandidateCover,
    plan: &Plan,
    meter: &mut Meter,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<Option<Vec<Permutation>>, Exhausted> {
    let d = plan.d;
    let fixed = canonical(&plan.fixed);
    // A random relabelling for the outer enumeration order.
    let relabel = match rng.as_deref_mut() {
        Some(r) => {
            let mut v: Vec<u32> = (0..d as u32).collect();
            v.shuffle(r);
            Some(Permutation::from_images(v).expect("shuffle is a bijection"))
        }
        None => None,
    };
    let mut found = None;
    let mut outer_stack: Vec<Permutation> = Vec::new();
    fn level(
        depth: usize,
        plan: &Plan,
        fixed: &Permutation,
        relabel: &Option<Permutation>,
        stack: &mut Vec<Permutation>,
        meter: &mut Meter,
        rng: &mut Option<&mut ChaCha8Rng>,
        found: &mut Option<Vec<Permutation>>,
    ) -> Result<bool, Exhausted> {
        let d = plan.d;
        if depth == plan.outer.len() {
            let a = stack.iter().fold(fixed.clone(), |acc, o| acc.then(o));
            let mut comps = Components::new(d);
            comps.absorb(fixed);
            for o in stack.iter() {
                comps.absorb(o);
            }
            let mut kernel = Kernel {
                a_inv: a.inverse().images().to_vec(),
                b: Chains::new(d, plan.b_type.entries()),
                p: Chains::new(d, plan.p_type.entries()),
                comps,
                assigned: 0,
                meter,
                rng: rng.as_deref_mut(),
            };
            if kernel.run()? {
                let b = kernel.b_perm();
                let last = a.then(&b).inverse();
                let mut tuple = vec![fixed.clone()];
                tuple.extend(stack.iter().cloned());
                tuple.push(b);
                tuple.push(last);
                *found = Some(tuple);
                return Ok(true);
            }
            return Ok(false);
        }
        let ty = plan.outer[depth].entries().to_vec();
        for_each_of_type(&ty, d, &mut |o: &Permutation| {
            meter.tick()?;
            let o = match relabel {
                Some(r) => o.conjugate_by(r),
                None => o.clone(),
            };
            stack.push(o);
            let r = level(depth + 1, plan, fixed, relabel, stack, meter, rng, found);
            stack.pop();
            r
        })
    }
    level(0, plan, &fixed, &relabel, &mut outer_stack, meter, &mut rng, &mut found)?;
    Ok(found.map(|t| reorder_to_types(t, c.partitions()).expect("same type multiset")))
}

/// Cases with at most two branch points have closed-form answers.
fn small_n(c: &CandidateCover) -> Option<Option<Vec<Permutation>>> {
    let d = c.degree() as usize;
    let full = Partition::uniform(d as u32, 1);
    match c.n() {
        0 => Some((d == 1).then(Vec::new)),
        1 => Some((d == 1).then(|| vec![Permutation::identity(1)])),
        2 => {
            let [x, y] = c.partitions() else { unreachable!() };
            Some((x == &full && y == &full).then(|| {
                let cyc = canonical(&full);
                vec![cyc.clone(), cyc.inverse()]
            }))
        }
        _ => None,
    }
}

fn witness(c: &CandidateCover, perms: Vec<Permutation>) -> PermutationWitness {
    let w = PermutationWitness { degree: c.degree(), perms };
    debug_assert_eq!(verify_permutation_witness(c, &w), Ok(true), "{c}: {w}");
    w
}

fn deadline(budget: &SearchBudget) -> Option<Instant> {
    budget.max_time.map(|t| Instant::now() + t)
}

fn backtrack(c: &CandidateCover, budget: &SearchBudget) -> Result<SearchOutcome, OracleError> {
    if let Some(r) = small_n(c) {
        return Ok(r.map_or(SearchOutcome::NotFound, |p| SearchOutcome::Found(witness(c, p))));
    }
    let plan = Plan::new(c);
    let mut meter = Meter { nodes: 0, limit: budget.max_nodes, deadline: deadline(budget) };
    match search_once(c, &plan, &mut meter, None) {
        Ok(Some(p)) => Ok(SearchOutcome::Found(witness(c, p))),
        Ok(None) => Ok(SearchOutcome::NotFound),
        Err(Exhausted) => Err(OracleError::BudgetExceeded { nodes: meter.nodes }),
    }
}

fn randomized(c: &CandidateCover, budget: &SearchBudget) -> Result<SearchOutcome, OracleError> {
    if let Some(r) = small_n(c) {
        return Ok(r.map_or(SearchOutcome::NotFound, |p| SearchOutcome::Found(witness(c, p))));
    }
    let plan = Plan::new(c);
    let deadline = deadline(budget);
    let mut master = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut spent = 0u64;
    let mut chunk = 1024u64;
    loop {
        let limit = chunk.min(budget.max_nodes - spent);
        let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
        let mut meter = Meter { nodes: 0, limit, deadline };
        let result = search_once(c, &plan, &mut meter, Some(&mut rng));
        spent += meter.nodes.min(limit);
        match result {
            Ok(Some(p)) => return Ok(SearchOutcome::Found(witness(c, p))),
            // A restart that finishes without running out has seen everything.
            Ok(None) => return Ok(SearchOutcome::NotFound),
            Err(Exhausted) => {
                let timed_out = deadline.is_some_and(|t| Instant::now() > t);
                if spent >= budget.max_nodes || timed_out {
                    return Err(OracleError::BudgetExceeded { nodes: spent });
                }
            }
        }
        chunk = chunk.saturating_mul(2);
    }
}

/// A tuple realizing the candidate, deterministic given the budget's seed.
pub fn find_witness(c: &CandidateCover, budget: &SearchBudget) -> Result<SearchOutcome, OracleError> {
    if c.base_genus() >= 1 {
        return Ok(SearchOutcome::KnownRealizable);
    }
    match budget.mode {
        SearchMode::Randomized => randomized(c, budget),
        SearchMode::Backtracking => backtrack(c, budget),
        SearchMode::CharacterCount => {
            if count_transitive(c.partitions(), c.degree()).is_zero() {
                Ok(SearchOutcome::NotFound)
            } else {
                backtrack(c, budget)
            }
        }
    }
}

/// Complete search; Exceptional only after the whole tree is exhausted.
pub fn exhaustive_decide(c: &CandidateCover, budget: &SearchBudget) -> ExhaustiveVerdict {
    if c.base_genus() >= 1 {
        return ExhaustiveVerdict::KnownRealizable;
    }
    match backtrack(c, budget) {
        Ok(SearchOutcome::Found(w)) => ExhaustiveVerdict::Realizable(w),
        Ok(SearchOutcome::NotFound) => ExhaustiveVerdict::Exceptional,
        Ok(SearchOutcome::KnownRealizable) => ExhaustiveVerdict::KnownRealizable,
        Err(OracleError::BudgetExceeded { .. }) => ExhaustiveVerdict::BudgetExceeded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_candidate;

    fn cand(s: &str) -> CandidateCover {
        parse_candidate(s).unwrap()
    }

    #[test]
    fn type_enumeration_counts() {
        for (ty, d, want) in [(vec![2, 2], 4, 3), (vec![3, 1], 4, 8), (vec![2, 2, 2], 6, 15), (vec![3, 2, 1], 6, 120)] {
            let mut n = 0;
            for_each_of_type(&ty, d, &mut |p: &Permutation| {
                assert_eq!(p.cycle_type().entries(), &ty[..]);
                n += 1;
                Ok(false)
            })
            .ok();
            assert_eq!(n, want, "{ty:?}");
        }
    }

    #[test]
    fn find_examples() {
        for s in ["6: (5,1)(4,1,1)(2,2,2)", "4: (2,2)(3,1)(3,1)", "5: (2,2,1)(3,1,1)(5)", "2: (2)(2)", "3: (3)(3)(3)"] {
            let c = cand(s);
            for mode in [SearchMode::Randomized, SearchMode::Backtracking, SearchMode::CharacterCount] {
                match find_witness(&c, &SearchBudget::default().with_mode(mode)).unwrap() {
                    SearchOutcome::Found(w) => assert!(verify_permutation_witness(&c, &w).unwrap(), "{s}"),
                    other => panic!("{s}: {other:?}"),
                }
            }
        }
        assert_eq!(find_witness(&cand("g=1 2: (2)(2)"), &SearchBudget::default()), Ok(SearchOutcome::KnownRealizable));
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(exhaustive_decide(&cand("4: (2,2)(2,2)(3,1)"), &SearchBudget::default()), ExhaustiveVerdict::Exceptional);
        assert_eq!(
            exhaustive_decide(&cand("9: (2,2,2,2,1)(3,3,3)(3,3,3)"), &SearchBudget::default()),
            ExhaustiveVerdict::Exceptional
        );
        assert!(matches!(
            exhaustive_decide(&cand("5: (2,2,1)(3,1,1)(5)"), &SearchBudget::default()),
            ExhaustiveVerdict::Realizable(_)
        ));
        let row2 = cand("8: (5,1,1,1)(4,4)(2,2,2,2)");
        assert_eq!(exhaustive_decide(&row2, &SearchBudget::default()), ExhaustiveVerdict::Exceptional);
        assert_eq!(find_witness(&row2, &SearchBudget::default()), Ok(SearchOutcome::NotFound));
        assert!(matches!(
            exhaustive_decide(&row2, &SearchBudget::nodes(3)),
            ExhaustiveVerdict::BudgetExceeded
        ));
    }

    #[test]
    fn four_branch_points() {
        let c = cand("4: (2,2)(2,2)(2,2)(2,2)");
        assert!(matches!(find_witness(&c, &SearchBudget::default()), Ok(SearchOutcome::Found(_))));
        let c = cand("6: (2,1,1,1,1)(2,2,2)(2,2,2)(2,2,2)");
        assert_eq!(exhaustive_decide(&c, &SearchBudget::default()), ExhaustiveVerdict::Exceptional);
    }

    #[test]
    fn existence_independent_of_seed() {
        let c = cand("8: (7,1)(3,3,1,1)(2,2,2,2)");
        for seed in 0..5 {
            let r = find_witness(&c, &SearchBudget::default().with_seed(seed)).unwrap();
            assert!(matches!(r, SearchOutcome::Found(_)));
        }
    }
}
