//! Every cover between hyperbolic triangular orbifolds, with decide's
//! verdict and the degree bound used to stop the sweep.

use hurwitz::decide;
use hurwitz::enumerate::{hyperbolic_triangular_census_up_to, CENSUS_MAX_DEGREE};
use hurwitz::euler::induced_orbifold_cover;

fn main() {
    let dmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(CENSUS_MAX_DEGREE);
    let census = hyperbolic_triangular_census_up_to(dmax);
    println!("{} covers up to degree {dmax}", census.len());
    for c in &census {
        let d = decide(c).expect("triangular");
        println!("{:<60} {:<22} {d}", c.to_string(), induced_orbifold_cover(c).to_string());
    }
}
