//! Decides one candidate per geometry and prints the verdict with its
//! governing statement.

use hurwitz::{decide, parse_candidate};

fn main() {
    let inputs = [
        "4: (2,2)(2,2)(3,1)",
        "5: (2,2,1)(3,1,1)(5)",
        "5: (2,2,1)(4,1)(4,1)",
        "21: (2,2,2,2,2,2,2,2,2,2,1)(4,4,4,4,4,1)(4,4,4,4,4,1)",
        "7: (2,2,2,1)(3,3,1)(6,1)",
        "8: (5,1,1,1)(4,4)(2,2,2,2)",
        "9: (7,1,1)(3,3,3)(2,2,2,2,1)",
        "6: (2,2,2)(2,2,2)(2,2,2)(2,1,1,1,1)",
        "6: (2,2,2)(3,3)(4,1,1)(5,1)",
    ];
    for text in inputs {
        let c = parse_candidate(text).expect("valid candidate");
        let d = decide(&c).expect("decidable input");
        println!("{c}\n  {d}\n  {}", d.reason.citation());
    }
}
