//! Prints both degree-8 tables and, optionally, the same tables at another
//! degree: `cargo run --example reproduce_tables -- 10`.

use hurwitz::tables::{partition_table, table, triangular_table};

fn main() {
    print!("{}", table(1).expect("table 1"));
    println!();
    print!("{}", table(2).expect("table 2"));
    if let Some(d) = std::env::args().nth(1).and_then(|s| s.parse::<u32>().ok()) {
        println!();
        print!("{}", partition_table(d));
        println!();
        print!("{}", triangular_table(d));
    }
}
