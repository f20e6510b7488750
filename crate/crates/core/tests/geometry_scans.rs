//! Exhaustive scans over small orbifolds: the sign of χ^orb against the
//! geometry class, and the complete positive and zero lists.

use num_traits::{Signed, Zero};

use hurwitz::euler::{geometry_class, orbifold_euler_characteristic, GeometryClass};
use hurwitz::model::Orbifold;

/// Non-decreasing cone order lists of length ≤ `max_cones` from 2..=`max_order`.
fn cone_lists(max_cones: usize, max_order: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_cones {
        let mut next = Vec::new();
        for list in &frontier {
            let start = list.last().copied().unwrap_or(2);
            for o in start..=max_order {
                let mut l: Vec<u32> = list.clone();
                l.push(o);
                next.push(l);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn orbifolds(max_genus: u32, lists: &[Vec<u32>]) -> impl Iterator<Item = Orbifold> + '_ {
    (0..=max_genus).flat_map(move |g| lists.iter().map(move |l| Orbifold::new(g, l.clone()).expect("orders ≥ 2")))
}

#[test]
fn geometry_follows_the_sign_of_chi() {
    let lists = cone_lists(5, 12);
    for o in orbifolds(2, &lists) {
        let class = geometry_class(&o);
        if class == GeometryClass::Bad {
            continue;
        }
        let chi = orbifold_euler_characteristic(&o);
        let expected = if chi.is_positive() {
            GeometryClass::Spherical
        } else if chi.is_zero() {
            GeometryClass::Euclidean
        } else {
            GeometryClass::Hyperbolic
        };
        assert_eq!(class, expected, "{o}");
    }
}

/// S, S(p), S(p,q), S(2,2,p), S(2,3,3), S(2,3,4), S(2,3,5).
fn in_positive_list(o: &Orbifold) -> bool {
    o.genus() == 0
        && match o.cone_orders() {
            [] | [_] | [_, _] => true,
            [2, 2, _] => true,
            [2, 3, r] => (3..=5).contains(r),
            _ => false,
        }
}

#[test]
fn positive_chi_list_is_complete() {
    let mut lists = cone_lists(4, 60);
    lists.extend(cone_lists(6, 10).into_iter().filter(|l| l.len() > 4));
    for o in orbifolds(2, &lists) {
        let positive = orbifold_euler_characteristic(&o).is_positive();
        assert_eq!(positive, in_positive_list(&o), "{o}");
    }
}

#[test]
fn euclidean_list_is_complete() {
    let mut lists = cone_lists(4, 100);
    lists.extend(cone_lists(6, 8).into_iter().filter(|l| l.len() > 4));
    let mut zero: Vec<String> = orbifolds(1, &lists)
        .filter(|o| orbifold_euler_characteristic(o).is_zero())
        .map(|o| o.to_string())
        .collect();
    zero.sort();
    assert_eq!(zero, ["S(2,2,2,2)", "S(2,3,6)", "S(2,4,4)", "S(3,3,3)", "T"]);
}
