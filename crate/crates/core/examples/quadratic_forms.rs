//! Representations, the congruence identities for the side conditions,
//! prime support and density trends of the three forms.

use hurwitz::quadform::{congruence_equivalence, densities, prime_support, represent, Constraint, FormId};
use hurwitz::selfcheck::{IDENTITIES, PRIME_CLASSES};

fn main() {
    for d in [5u64, 9, 13, 21, 25, 33, 57, 61] {
        let rep = represent(FormId::X2Y2, d, Constraint::DIFFERENT_PARITY);
        println!("{d:>3} = x^2+y^2, different parity: {rep:?}");
    }
    for (form, constraint, r, m) in IDENTITIES {
        let bad = congruence_equivalence(form, constraint, r, m, 10_000);
        println!("{form} with {constraint} <=> d = {r} mod {m}: {} counterexamples", bad.len());
    }
    for (form, r, m) in PRIME_CLASSES {
        println!("primes {r} mod {m} missed by {form} up to 1e5: {:?}", prime_support(form, r, m, 100_000));
    }
    let limits: Vec<u64> = (2..=6).map(|j| 10u64.pow(j)).collect();
    for form in [FormId::X2Y2, FormId::X2XYY2] {
        let row: Vec<String> = densities(form, &limits).iter().map(|d| format!("{:.4}", d.count as f64 / d.limit as f64)).collect();
        println!("density of {form}: {}", row.join(" "));
    }
}
