//! Exact tuple counts from the Frobenius character formula, and the
//! transitive part by sieving over the orbit of the first point.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumerate::partitions_of;
use crate::model::Partition;

type Shape = Vec<u32>;

/// χ^λ(μ) by Murnaghan–Nakayama on beta-sets; μ is consumed largest part
/// first. Shared memo, entries are idempotent.
pub fn character(lambda: &[u32], mu: &[u32]) -> BigInt {
    static MEMO: OnceLock<Mutex<HashMap<(Shape, Shape), BigInt>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let mut mu: Vec<u32> = mu.iter().copied().filter(|&m| m > 0).collect();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    let lambda: Vec<u32> = lambda.iter().copied().filter(|&l| l > 0).collect();
    mn(&lambda, &mu, memo)
}

fn mn(lambda: &[u32], mu: &[u32], memo: &Mutex<HashMap<(Shape, Shape), BigInt>>) -> BigInt {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.lock().expect("memo lock").get(&key) {
        return v.clone();
    }
    let k = lambda.len();
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &l)| l as i64 + (k - 1 - i) as i64).collect();
    let mut total = BigInt::zero();
    for &b in &beta {
        let target = b - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<i64> = beta.iter().map(|&c| if c == b { target } else { c }).collect();
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| (c - (k - 1 - i) as i64) as u32)
            .filter(|&l| l > 0)
            .collect();
        let v = mn(&shape, rest, memo);
        if crossed % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.lock().expect("memo lock").insert(key, total.clone());
    total
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// χ^λ(1) by the hook length formula.
pub fn dimension(lambda: &[u32]) -> BigInt {
    let n: u32 = lambda.iter().sum();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lambda[i + 1..].iter().filter(|&&l| l > j).count() as u32;
            hooks *= arm + leg + 1;
        }
    }
    factorial(n) / hooks
}

/// Size of the centralizer of a permutation with cycle type μ.
fn centralizer_order(mu: &[u32]) -> BigInt {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &m in mu {
        *counts.entry(m).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&m, &c)| acc * BigInt::from(m).pow(c) * factorial(c))
}

/// Number of permutations of cycle type μ.
pub fn class_size(mu: &[u32]) -> BigInt {
    factorial(mu.iter().sum()) / centralizer_order(mu)
}

fn count_shapes(types: &[Shape], d: u32) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    let n = types.len() as i32;
    let mut sum = BigRational::zero();
    for lambda in partitions_of(d) {
        let lambda = lambda.entries().to_vec();
        let dim = dimension(&lambda);
        let mut num = BigInt::one();
        for t in types {
            num *= character(&lambda, t);
            if num.is_zero() {
                break;
            }
        }
        if num.is_zero() {
            continue;
        }
        let dim = BigRational::from_integer(dim);
        let term = BigRational::from_integer(num) / pow_signed(&dim, n - 2);
        sum += term;
    }
    let sizes = types.iter().fold(BigInt::one(), |acc, t| acc * class_size(t));
    let total = sum * BigRational::from_integer(sizes) / BigRational::from_integer(factorial(d));
    assert!(total.is_integer(), "Frobenius sum is not an integer: {total}");
    total.to_integer()
}

fn pow_signed(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

fn shapes(types: &[Partition]) -> Vec<Shape> {
    types.iter().map(|p| p.entries().to_vec()).collect()
}

/// Tuples (σ₁,…,σₙ) in S_d with σᵢ of type `types[i]` and product 1.
pub fn count_tuples(types: &[Partition], d: u32) -> BigInt {
    assert!(types.iter().all(|t| t.sum() == d as u64), "types must be partitions of {d}");
    count_shapes(&shapes(types), d)
}

/// Transitive tuples only.
pub fn count_transitive(types: &[Partition], d: u32) -> BigInt {
    assert!(types.iter().all(|t| t.sum() == d as u64), "types must be partitions of {d}");
    let mut sieve = Sieve::default();
    sieve.transitive(&shapes(types), d)
}

#[derive(Default)]
struct Sieve {
    all: HashMap<Vec<Shape>, BigInt>,
    transitive: HashMap<Vec<Shape>, BigInt>,
}

/// Sub-multisets of `shape` with entries summing to `s`, each paired with
/// its complement.
fn splits(shape: &[u32], s: u32) -> Vec<(Shape, Shape)> {
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &v in shape {
        match groups.last_mut() {
            Some((w, c)) if *w == v => *c += 1,
            _ => groups.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    let mut take = vec![0u32; groups.len()];
    fn rec(i: usize, left: u32, groups: &[(u32, u32)], take: &mut [u32], out: &mut Vec<(Shape, Shape)>) {
        if i == groups.len() {
            if left == 0 {
                let mut inner = Vec::new();
                let mut outer = Vec::new();
                for (&(v, c), &t) in groups.iter().zip(take.iter()) {
                    inner.extend(std::iter::repeat(v).take(t as usize));
                    outer.extend(std::iter::repeat(v).take((c - t) as usize));
                }
                out.push((inner, outer));
            }
            return;
        }
        let (v, c) = groups[i];
        for t in 0..=c.min(left / v) {
            take[i] = t;
            rec(i + 1, left - t * v, groups, take, out);
        }
        take[i] = 0;
    }
    rec(0, s, &groups, &mut take, &mut out);
    out
}

fn sorted_key(types: &[Shape]) -> Vec<Shape> {
    let mut k = types.to_vec();
    k.sort();
    k
}

impl Sieve {
    fn all(&mut self, types: &[Shape], d: u32) -> BigInt {
        let key = sorted_key(types);
        if let Some(v) = self.all.get(&key) {
            return v.clone();
        }
        let v = count_shapes(types, d);
        self.all.insert(key, v.clone());
        v
    }

    fn transitive(&mut self, types: &[Shape], d: u32) -> BigInt {
        if d <= 1 {
            return BigInt::one();
        }
        let key = sorted_key(types);
        if let Some(v) = self.transitive.get(&key) {
            return v.clone();
        }
        let mut total = self.all(types, d);
        for s in 1..d {
            let weight = binomial(d - 1, s - 1);
            // Every combination of per-type splits with orbit size s.
            let options: Vec<Vec<(Shape, Shape)>> = types.iter().map(|t| splits(t, s)).collect();
            if options.iter().any(|o| o.is_empty()) {
                continue;
            }
            let mut idx = vec![0usize; options.len()];
            loop {
                let inner: Vec<Shape> = idx.iter().zip(&options).map(|(&i, o)| o[i].0.clone()).collect();
                let outer: Vec<Shape> = idx.iter().zip(&options).map(|(&i, o)| o[i].1.clone()).collect();
                let rest = self.all(&outer, d - s);
                if !rest.is_zero() {
                    let t = self.transitive(&inner, s);
                    total -= &weight * t * rest;
                }
                // Odometer step.
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        break;
                    }
                    idx[pos] += 1;
                    if idx[pos] < options[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == idx.len() {
                    break;
                }
            }
        }
        assert!(total >= BigInt::zero(), "negative transitive count");
        self.transitive.insert(key, total.clone());
        total
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::perm::is_transitive;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn characters_of_s3_and_s4() {
        assert_eq!(character(&[2, 1], &[3]), BigInt::from(-1));
        assert_eq!(character(&[2, 1], &[2, 1]), BigInt::from(0));
        assert_eq!(character(&[2, 1], &[1, 1, 1]), BigInt::from(2));
        assert_eq!(character(&[2, 2], &[2, 2]), BigInt::from(2));
        assert_eq!(character(&[3, 1], &[4]), BigInt::from(-1));
        assert_eq!(dimension(&[3, 2, 1]), BigInt::from(16));
        // Column orthogonality at the identity: Σ dim² = d!.
        let sum: BigInt = partitions_of(7).iter().map(|l| dimension(l.entries()).pow(2)).sum();
        assert_eq!(sum, factorial(7));
        for l in partitions_of(6) {
            assert_eq!(character(l.entries(), &[1; 6]), dimension(l.entries()));
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_tuples(&[p("(2)"), p("(2)")], 2), BigInt::from(1));
        assert_eq!(count_tuples(&[p("(3)"), p("(3)"), p("(3)")], 3), BigInt::from(2));
        assert_eq!(count_transitive(&[p("(3)"), p("(3)"), p("(3)")], 3), BigInt::from(2));
        assert_eq!(count_transitive(&[p("(2)"), p("(2)")], 2), BigInt::from(1));
        assert_eq!(count_transitive(&[p("(2,2)"), p("(2,2)"), p("(3,1)")], 4), BigInt::zero());
    }

    fn brute(types: &[Partition], d: usize) -> (u64, u64) {
        let all = crate::oracle::perm::tests::all_perms(d);
        let of_type = |t: &Partition| all.iter().filter(|q| &q.cycle_type() == t).cloned().collect::<Vec<_>>();
        let (mut total, mut trans) = (0, 0);
        let first = of_type(&types[0]);
        let second = of_type(&types[1]);
        for a in &first {
            for b in &second {
                let c = a.then(b).inverse();
                if &c.cycle_type() == &types[2] {
                    total += 1;
                    if is_transitive(d, &[a.clone(), b.clone(), c]) {
                        trans += 1;
                    }
                }
            }
        }
        (total, trans)
    }

    #[test]
    fn frobenius_and_sieve_match_brute_force_up_to_five() {
        for d in 1..=5u32 {
            let parts = partitions_of(d);
            for a in &parts {
                for b in &parts {
                    for c in &parts {
                        let types = [a.clone(), b.clone(), c.clone()];
                        let (total, trans) = brute(&types, d as usize);
                        assert_eq!(count_tuples(&types, d), BigInt::from(total), "{types:?}");
                        assert_eq!(count_transitive(&types, d), BigInt::from(trans), "{types:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn splits_pair_up() {
        let s = splits(&[3, 2, 2, 1], 3);
        assert_eq!(s, vec![(vec![2, 1], vec![3, 2]), (vec![3], vec![2, 2, 1])]);
    }
}
