//! Representability of integers by x²+y², x²+xy+y² and x²+3xy+3y² with
//! x, y ∈ ℕ (0 included), plus the sweeps built on top of it.

use std::fmt;
use std::str::FromStr;

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormId {
    /// x² + y²
    X2Y2,
    /// x² + xy + y²
    X2XYY2,
    /// x² + 3xy + 3y²
    #[allow(non_camel_case_types)]
    X2_3XY_3Y2,
}

impl FormId {
    pub const ALL: [FormId; 3] = [FormId::X2Y2, FormId::X2XYY2, FormId::X2_3XY_3Y2];

    pub fn eval(self, x: u64, y: u64) -> u64 {
        match self {
            FormId::X2Y2 => x * x + y * y,
            FormId::X2XYY2 => x * x + x * y + y * y,
            FormId::X2_3XY_3Y2 => x * x + 3 * x * y + 3 * y * y,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormId::X2Y2 => "X2_Y2",
            FormId::X2XYY2 => "X2_XY_Y2",
            FormId::X2_3XY_3Y2 => "X2_3XY_3Y2",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            FormId::X2Y2 => "x^2+y^2",
            FormId::X2XYY2 => "x^2+xy+y^2",
            FormId::X2_3XY_3Y2 => "x^2+3xy+3y^2",
        }
    }

    /// The unique y ≥ 0 with form(x, y) = target, if any. Each form is
    /// strictly increasing in y, so at most one exists.
    fn solve_y(self, x: u64, target: u64) -> Option<u64> {
        let x2 = x * x;
        if x2 > target {
            return None;
        }
        // Closed-form estimate of the positive root, then confirm exactly.
        let estimate = match self {
            FormId::X2Y2 => (target - x2).sqrt(),
            FormId::X2XYY2 => ((4 * target - 3 * x2).sqrt()).saturating_sub(x) / 2,
            FormId::X2_3XY_3Y2 => ((12 * target - 3 * x2).sqrt()).saturating_sub(3 * x) / 6,
        };
        (estimate.saturating_sub(1)..=estimate + 1).find(|&y| self.eval(x, y) == target)
    }
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "X2_Y2" | "X2Y2" => Ok(FormId::X2Y2),
            "X2_XY_Y2" | "X2XYY2" => Ok(FormId::X2XYY2),
            "X2_3XY_3Y2" | "X23XY3Y2" => Ok(FormId::X2_3XY_3Y2),
            _ => Err(format!("unknown form '{s}' (expected X2_Y2, X2_XY_Y2 or X2_3XY_3Y2)")),
        }
    }
}

/// Conjunction of side conditions on (x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Constraint {
    pub different_parity: bool,
    pub not_both_even: bool,
    pub incongruent_mod_3: bool,
}

impl Constraint {
    pub const NONE: Constraint = Constraint { different_parity: false, not_both_even: false, incongruent_mod_3: false };
    pub const DIFFERENT_PARITY: Constraint = Constraint { different_parity: true, ..Constraint::NONE };
    pub const NOT_BOTH_EVEN: Constraint = Constraint { not_both_even: true, ..Constraint::NONE };
    pub const INCONGRUENT_MOD_3: Constraint = Constraint { incongruent_mod_3: true, ..Constraint::NONE };

    pub fn and(self, other: Constraint) -> Constraint {
        Constraint {
            different_parity: self.different_parity || other.different_parity,
            not_both_even: self.not_both_even || other.not_both_even,
            incongruent_mod_3: self.incongruent_mod_3 || other.incongruent_mod_3,
        }
    }

    pub fn holds(self, x: u64, y: u64) -> bool {
        (!self.different_parity || x % 2 != y % 2)
            && (!self.not_both_even || x % 2 == 1 || y % 2 == 1)
            && (!self.incongruent_mod_3 || x % 3 != y % 3)
    }

    pub fn is_none(self) -> bool {
        self == Constraint::NONE
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.different_parity {
            parts.push("different_parity");
        }
        if self.not_both_even {
            parts.push("not_both_even");
        }
        if self.incongruent_mod_3 {
            parts.push("incongruent_mod_3");
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl FromStr for Constraint {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Constraint::NONE;
        for part in s.split(['+', ',']).map(str::trim).filter(|p| !p.is_empty()) {
            c = c.and(match part {
                "none" => Constraint::NONE,
                "different_parity" => Constraint::DIFFERENT_PARITY,
                "not_both_even" => Constraint::NOT_BOTH_EVEN,
                "incongruent_mod_3" => Constraint::INCONGRUENT_MOD_3,
                other => return Err(format!("unknown constraint flag '{other}'")),
            });
        }
        Ok(c)
    }
}

/// Lexicographically smallest (x, y) ∈ ℕ² with form(x, y) = target and the
/// constraint satisfied.
pub fn represent(form: FormId, target: u64, constraint: Constraint) -> Option<(u64, u64)> {
    let bound = target.sqrt() + 1;
    (0..=bound).find_map(|x| form.solve_y(x, target).filter(|&y| constraint.holds(x, y)).map(|y| (x, y)))
}

/// `table[v]` is true iff v ≤ limit is represented under the constraint;
/// built by walking every (x, y) with form value ≤ limit.
pub fn representability_table(form: FormId, constraint: Constraint, limit: u64) -> Vec<bool> {
    let mut table = vec![false; limit as usize + 1];
    let mut x = 0u64;
    while form.eval(x, 0) <= limit {
        let mut y = 0u64;
        loop {
            let v = form.eval(x, y);
            if v > limit {
                break;
            }
            if constraint.holds(x, y) {
                table[v as usize] = true;
            }
            y += 1;
        }
        x += 1;
    }
    table
}

/// All d in 1..=limit where constrained representability differs from
/// "d ≡ residue (mod modulus) and unconstrained representability".
pub fn congruence_equivalence(
    form: FormId,
    constraint: Constraint,
    residue: u64,
    modulus: u64,
    limit: u64,
) -> Vec<u64> {
    let constrained = representability_table(form, constraint, limit);
    let plain = representability_table(form, Constraint::NONE, limit);
    (1..=limit)
        .filter(|&d| constrained[d as usize] != (d % modulus == residue % modulus && plain[d as usize]))
        .collect()
}

/// Count of represented integers in 1..=limit over `limit`. Displayed
/// unreduced as `count/limit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Density {
    pub count: u64,
    pub limit: u64,
}

impl Density {
    pub fn ratio(self) -> Ratio<u64> {
        Ratio::new(self.count, self.limit)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.count, self.limit)
    }
}

pub fn density(form: FormId, limit: u64) -> Density {
    let table = representability_table(form, Constraint::NONE, limit);
    Density { count: table[1..].iter().filter(|&&b| b).count() as u64, limit }
}

/// Densities at several limits from a single table.
pub fn densities(form: FormId, limits: &[u64]) -> Vec<Density> {
    let top = limits.iter().copied().max().unwrap_or(1);
    let table = representability_table(form, Constraint::NONE, top);
    let mut prefix = vec![0u64; top as usize + 1];
    for v in 1..=top as usize {
        prefix[v] = prefix[v - 1] + table[v] as u64;
    }
    limits.iter().map(|&l| Density { count: prefix[l as usize], limit: l }).collect()
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    primes
}

/// Primes p ≤ limit with p ≡ residue (mod modulus) that the form misses.
pub fn prime_support(form: FormId, residue: u64, modulus: u64, limit: u64) -> Vec<u64> {
    let table = representability_table(form, Constraint::NONE, limit);
    primes_up_to(limit)
        .into_iter()
        .filter(|&p| p % modulus == residue % modulus && !table[p as usize])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn represent_examples() {
        assert_eq!(represent(FormId::X2Y2, 5, Constraint::DIFFERENT_PARITY), Some((1, 2)));
        assert_eq!(represent(FormId::X2Y2, 21, Constraint::NONE), None);
        assert_eq!(represent(FormId::X2XYY2, 7, Constraint::INCONGRUENT_MOD_3), Some((1, 2)));
        assert_eq!(represent(FormId::X2Y2, 9, Constraint::DIFFERENT_PARITY), Some((0, 3)));
        assert_eq!(represent(FormId::X2Y2, 0, Constraint::NONE), Some((0, 0)));
        assert_eq!(represent(FormId::X2_3XY_3Y2, 7, Constraint::NONE), Some((1, 1)));
    }

    #[test]
    fn congruence_identities() {
        let limit = 10_000;
        assert!(congruence_equivalence(FormId::X2Y2, Constraint::DIFFERENT_PARITY, 1, 4, limit).is_empty());
        let c = Constraint::NOT_BOTH_EVEN.and(Constraint::INCONGRUENT_MOD_3);
        assert!(congruence_equivalence(FormId::X2XYY2, c, 1, 6, limit).is_empty());
        assert!(congruence_equivalence(FormId::X2XYY2, Constraint::INCONGRUENT_MOD_3, 1, 3, limit).is_empty());
        // A wrong modulus must produce counterexamples.
        assert!(!congruence_equivalence(FormId::X2Y2, Constraint::DIFFERENT_PARITY, 1, 8, 100).is_empty());
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(FormId::X2Y2, 10).to_string(), "7/10");
        assert_eq!(density(FormId::X2XYY2, 10).to_string(), "5/10");
        assert_eq!(density(FormId::X2Y2, 1).to_string(), "1/1");
        assert_eq!(density(FormId::X2XYY2, 10).ratio(), Ratio::new(1, 2));
    }

    #[test]
    fn prime_examples() {
        assert!(prime_support(FormId::X2Y2, 1, 4, 100_000).is_empty());
        assert!(prime_support(FormId::X2XYY2, 1, 6, 100_000).is_empty());
        assert!(prime_support(FormId::X2XYY2, 1, 3, 100_000).is_empty());
        assert!(prime_support(FormId::X2Y2, 3, 4, 100).contains(&3));
    }

    #[test]
    fn q3_represents_the_loeschian_numbers() {
        let a = representability_table(FormId::X2XYY2, Constraint::NONE, 5000);
        let b = representability_table(FormId::X2_3XY_3Y2, Constraint::NONE, 5000);
        assert_eq!(a, b);
    }

    #[test]
    fn multiplicativity_of_sums_of_two_squares() {
        let t = representability_table(FormId::X2Y2, Constraint::NONE, 250_000);
        for a in 1..=500u64 {
            if !t[a as usize] {
                continue;
            }
            for b in (a..=500).filter(|&b| t[b as usize]) {
                assert!(t[(a * b) as usize], "{a}*{b}");
            }
        }
    }

    #[test]
    fn parse_names() {
        for f in FormId::ALL {
            assert_eq!(f.name().parse::<FormId>().unwrap(), f);
        }
        let c: Constraint = "not_both_even+incongruent_mod_3".parse().unwrap();
        assert_eq!(c.to_string(), "not_both_even+incongruent_mod_3");
        assert!("odd".parse::<Constraint>().is_err());
    }

    fn any_constraint() -> impl Strategy<Value = Constraint> {
        (any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(a, b, c)| Constraint {
            different_parity: a,
            not_both_even: b,
            incongruent_mod_3: c,
        })
    }

    fn any_form() -> impl Strategy<Value = FormId> {
        prop::sample::select(FormId::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn represent_is_sound(form in any_form(), c in any_constraint(), target in 0u64..2_000_000) {
            if let Some((x, y)) = represent(form, target, c) {
                prop_assert_eq!(form.eval(x, y), target);
                prop_assert!(c.holds(x, y));
            }
        }

        #[test]
        fn represent_matches_box_enumeration(form in any_form(), c in any_constraint(), target in 0u64..3000) {
            let bound = (target as f64).sqrt().ceil() as u64;
            let brute = (0..=bound)
                .flat_map(|x| (0..=bound).map(move |y| (x, y)))
                .find(|&(x, y)| form.eval(x, y) == target && c.holds(x, y));
            prop_assert_eq!(represent(form, target, c), brute);
        }
    }
}
