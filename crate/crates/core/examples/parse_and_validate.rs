//! Parses candidates from the command line (or a few built-in ones) and
//! prints the Riemann-Hurwitz report for each.

use hurwitz::euler::validate_candidate;
use hurwitz::model::{parse_candidate, RawCandidate};

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["5: (2,2,1)(4,1)(4,1)", "5: (2,2)(4,1)(4,1)", "g=1 2: (2)(2)", "4: (2,2)(3,1)(3,1)"]
            .map(String::from)
            .to_vec();
    }
    for text in &inputs {
        println!("== {text}");
        match RawCandidate::parse(text) {
            Err(e) => println!("parse error: {e}"),
            Ok(raw) => {
                print!("{}", validate_candidate(&raw));
                if let Ok(c) = parse_candidate(text) {
                    println!("canonical {c}, cover genus {}", c.cover_genus());
                }
            }
        }
    }
}
