//! Realizability decisions by the geometry of the induced orbifold cover.
//!
//! Dispatch: positive base genus is always realizable; otherwise the sign of
//! χ^orb of the induced target selects the spherical rule, the Euclidean
//! family criteria, or the triangular hyperbolic table.

mod families;
mod lists;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::euler::{geometry_class, induced_orbifold_cover, orbifold_euler_characteristic, GeometryClass, OrbifoldCover};
use crate::model::{CandidateCover, Decision, ReasonCode, Verdict};
use crate::witness::lattice::EuclideanOrbifold;

pub use families::{
    case_families, case_for, euclidean_template, Criterion, CriterionOutcome, FamilyTemplate, PartTemplate, FAMILIES,
};
pub use lists::{
    exceptional_positive_list, hyperbolic_row, hyperbolic_table, spherical_source_list, HypTableRow, SphericalSource,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("no Euclidean family matches {candidate}")]
    NoFamilyMatch { candidate: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A matched Euclidean family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EuclideanFamily {
    pub case_id: u8,
    pub family_index: u8,
    pub k: u32,
}

impl EuclideanFamily {
    pub fn template(&self) -> &'static FamilyTemplate {
        euclidean_template(self.case_id, self.family_index).expect("matched families exist")
    }
}

impl fmt::Display for EuclideanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} family {} k={}", self.case_id, self.family_index, self.k)
    }
}

/// Decide a validated candidate.
pub fn decide(c: &CandidateCover) -> Result<Decision, DecideError> {
    if c.base_genus() >= 1 {
        return Ok(Decision::new(Verdict::Realizable, ReasonCode::KnownPositiveGenusBase));
    }
    let oc = induced_orbifold_cover(c);
    let chi = orbifold_euler_characteristic(&oc.target);
    if chi > Zero::zero() {
        decide_positive(&oc)
    } else if chi.is_zero() {
        decide_euclidean(c)
    } else if is_triangular(&oc) {
        decide_hyperbolic_triangular(c)
    } else {
        Ok(Decision::new(Verdict::Undecided, ReasonCode::HyperbolicNonrigid))
    }
}

fn is_triangular(oc: &OrbifoldCover) -> bool {
    [&oc.source, &oc.target].iter().all(|o| o.genus() == 0 && o.cone_orders().len() == 3)
}

/// Exceptional exactly when a bad source lies over a spherical target.
pub fn decide_positive(oc: &OrbifoldCover) -> Result<Decision, DecideError> {
    if orbifold_euler_characteristic(&oc.target) <= Zero::zero() {
        return Err(DecideError::Precondition(format!("target {} does not have positive Euler characteristic", oc.target)));
    }
    let bad_over_spherical =
        geometry_class(&oc.source) == GeometryClass::Bad && geometry_class(&oc.target) == GeometryClass::Spherical;
    Ok(if bad_over_spherical {
        Decision::new(Verdict::Exceptional, ReasonCode::PositiveBadOverSpherical)
    } else {
        Decision::new(Verdict::Realizable, ReasonCode::PositiveGoodSource)
    })
}

/// Torus becomes `None`; other orbifolds must be one of the rigid four.
fn euclidean_id(o: &crate::model::Orbifold) -> Result<Option<EuclideanOrbifold>, ()> {
    if o.genus() == 1 && o.cone_orders().is_empty() {
        return Ok(None);
    }
    EuclideanOrbifold::from_orbifold(o).map(Some).ok_or(())
}

/// Case of a candidate whose induced cover is Euclidean.
pub fn euclidean_case(c: &CandidateCover) -> Result<u8, DecideError> {
    let oc = induced_orbifold_cover(c);
    let no_match = || DecideError::NoFamilyMatch { candidate: c.to_string() };
    let src = euclidean_id(&oc.source).map_err(|_| no_match())?;
    let tgt = euclidean_id(&oc.target).map_err(|_| no_match())?;
    case_for(src, tgt).ok_or_else(no_match)
}

/// Matches against the displayed families of one case.
pub fn match_in_case(c: &CandidateCover, case_id: u8) -> Result<EuclideanFamily, DecideError> {
    for t in case_families(case_id) {
        let Some(k) = t.solve_k(c.degree()) else { continue };
        if c.base_genus() == 0 && t.instantiate(k).as_ref() == Some(c) {
            return Ok(EuclideanFamily { case_id, family_index: t.family_index, k });
        }
    }
    Err(DecideError::NoFamilyMatch { candidate: c.to_string() })
}

/// Identifies (case, family, k) by exact multiset match.
pub fn match_euclidean_family(c: &CandidateCover) -> Result<EuclideanFamily, DecideError> {
    match_in_case(c, euclidean_case(c)?)
}

/// Applies the matched family's criterion.
pub fn decide_euclidean(c: &CandidateCover) -> Result<Decision, DecideError> {
    let fam = match_euclidean_family(c)?;
    let t = fam.template();
    let outcome = t.criterion.evaluate(c.degree() as u64);
    let verdict = if outcome.holds { Verdict::Realizable } else { Verdict::Exceptional };
    let reason = if fam.case_id == 0 {
        ReasonCode::EuclideanTorus { family: fam.family_index }
    } else {
        ReasonCode::EuclideanFamily { case_id: fam.case_id, family: fam.family_index, tag: t.tag }
    };
    let mut d = Decision::new(verdict, reason);
    if let Some((x, y)) = outcome.representation {
        d = d.with_evidence("x", x as i64).with_evidence("y", y as i64);
    }
    Ok(d)
}

/// Looks the candidate up in the nine-row table.
pub fn decide_hyperbolic_triangular(c: &CandidateCover) -> Result<Decision, DecideError> {
    let oc = induced_orbifold_cover(c);
    let hyperbolic = geometry_class(&oc.target) == GeometryClass::Hyperbolic;
    if c.base_genus() != 0 || !hyperbolic || !is_triangular(&oc) {
        return Err(DecideError::Precondition(format!("{oc} is not between triangular hyperbolic orbifolds")));
    }
    Ok(match hyperbolic_row(c) {
        Some(row) => Decision::new(row.verdict, ReasonCode::HyperbolicRow(row.index)),
        None => Decision::new(Verdict::Undecided, ReasonCode::HyperbolicTriangularUnlisted),
    })
}
