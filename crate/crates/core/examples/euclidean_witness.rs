//! Builds affine certificates for members of every Euclidean family, checks
//! them, and turns one into a permutation tuple.

use hurwitz::decide::FAMILIES;
use hurwitz::oracle::verify_permutation_witness;
use hurwitz::witness::affine::{construct_witness, torus_witness, verify_witness};
use hurwitz::witness::monodromy::euclidean_permutation_witness;

fn main() {
    let k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for t in FAMILIES.iter().filter(|t| !t.partitions.is_empty()) {
        let c = t.instantiate(k).expect("family member");
        let line = if c.cover_genus() == 1 {
            torus_witness(&c).map(|w| w.to_string()).unwrap_or_else(|e| e.to_string())
        } else {
            match construct_witness(&c) {
                Ok(Some(w)) => {
                    let ok = verify_witness(&c, &w).map(|r| r.ok).unwrap_or(false);
                    format!("{w} verified={ok}")
                }
                Ok(None) => format!("none ({})", t.criterion),
                Err(e) => e.to_string(),
            }
        };
        println!("{:<5} {c}\n      {line}", t.label());
    }
    let c = FAMILIES[5].instantiate(1).expect("first S(2,4,4) family");
    let w = euclidean_permutation_witness(&c).expect("construction").expect("realizable");
    println!("\ntuple for {c}:\n{w}\nverified={}", verify_permutation_witness(&c, &w).unwrap_or(false));
}
