//! Induced orbifold covers and their geometry, including the four rigid
//! Euclidean orbifolds and a few bad and spherical ones.

use hurwitz::euler::{geometry_class, induced_orbifold_cover, orbifold_euler_characteristic};
use hurwitz::model::{parse_candidate, parse_orbifold};

fn main() {
    for text in ["S(2,4,4)", "S(2,2,2,2)", "S(2,3,6)", "S(3,3,3)", "S(2,3,7)", "S(2,3,5)", "S(2,3)", "T", "G2(2)"] {
        let o = parse_orbifold(text).expect("orbifold");
        println!("{:<12} chi={:<6} {:?}", o.to_string(), orbifold_euler_characteristic(&o).to_string(), geometry_class(&o));
    }
    println!();
    for text in ["5: (2,2,1)(4,1)(4,1)", "4: (2,2)(2,2)(3,1)", "8: (7,1)(3,3,1,1)(2,2,2,2)"] {
        let c = parse_candidate(text).expect("candidate");
        let oc = induced_orbifold_cover(&c);
        println!("{c}\n  {oc}");
        for ins in &oc.instructions {
            println!("    {ins}");
        }
    }
}
