//! The permutation oracle on the nine hyperbolic rows: seeded search,
//! exhaustive refutation and character counts.

use std::time::Instant;

use hurwitz::decide::hyperbolic_table;
use hurwitz::model::Verdict;
use hurwitz::oracle::{count_transitive, count_tuples, exhaustive_decide, find_witness, SearchBudget, SearchOutcome};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let budget = SearchBudget::default().with_seed(seed);
    for row in hyperbolic_table() {
        let c = &row.candidate;
        let start = Instant::now();
        let all = count_tuples(c.partitions(), c.degree());
        let transitive = count_transitive(c.partitions(), c.degree());
        let found = match find_witness(c, &budget) {
            Ok(SearchOutcome::Found(w)) => w.perms.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "),
            Ok(other) => format!("{other:?}"),
            Err(e) => e.to_string(),
        };
        println!("row {} {c}\n  tuples={all} transitive={transitive} ({:?})\n  {found}", row.index, start.elapsed());
        if row.verdict == Verdict::Exceptional && c.degree() <= 8 {
            println!("  exhaustive: {}", exhaustive_decide(c, &budget));
        }
    }
}
