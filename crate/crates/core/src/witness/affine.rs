//! Affine certificates f̃(z) = λ·z + μ between Euclidean orbifold covers.
//!
//! A witness is checked by mapping one lift of every source cone point and
//! classifying the image. Every rotation generating the source group is
//! conjugated by f̃ to a rotation of the same angle about the image, so the
//! images alone determine whether f̃ descends, and the local degrees above
//! each target cone point give back the branching data.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Roots;
use serde::Serialize;

use crate::decide::{euclidean_case, match_euclidean_family, DecideError, EuclideanFamily};
use crate::euler::{geometry_class, induced_orbifold_cover, GeometryClass, ValidationReport};
use crate::model::{CandidateCover, Partition};
use crate::quadform::FormId;

use super::lattice::{lift_class, ConeLiftClass, EuclideanOrbifold, Frame, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("{0} does not induce a cover between Euclidean orbifolds")]
    NotEuclidean(String),
    #[error("{0} has a torus source; use the torus witness")]
    TorusSource(String),
    #[error("{0} is not a torus-source candidate")]
    NotTorusSource(String),
    #[error("unknown Euclidean case {0}")]
    UnknownCase(u8),
    #[error("parameters do not fit case {0}")]
    CaseMismatch(u8),
    #[error(transparent)]
    Decide(#[from] DecideError),
}

/// Integer data of an affine witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WitnessParams {
    /// λ = n + im in case 1, λ = (n+m) − ωm in cases 2 and 3, and
    /// λ = √2·((n+m) − ωm) in case 5.
    Ring { n: i64, m: i64 },
    /// The four-parameter description of cases 4, 6 and 7, where the source
    /// lattice is spanned by the preimages of (n, m) and (p, q).
    Matrix { n: i64, m: i64, p: i64, q: i64 },
    /// A multiplier given directly as a plane point, for inclusion checks.
    Lambda(LatticePoint),
}

impl fmt::Display for WitnessParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessParams::Ring { n, m } => write!(f, "n={n} m={m}"),
            WitnessParams::Matrix { n, m, p, q } => write!(f, "n={n} m={m} p={p} q={q}"),
            WitnessParams::Lambda(l) => write!(f, "lambda={l}"),
        }
    }
}

/// Image of one source cone representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConeImage {
    pub source_label: char,
    pub source_order: u32,
    pub image: LatticePoint,
    pub class: ConeLiftClass,
}

impl fmt::Display for ConeImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} -> {} {}", self.source_label, self.source_order, self.image, self.class)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineWitness {
    pub case_id: u8,
    pub family_index: u8,
    pub k: u32,
    pub params: WitnessParams,
    pub mu: LatticePoint,
    /// |λ|² in units where the source and target have their fixed areas;
    /// equals the degree.
    pub lambda_squared: i64,
    /// True when the recipe from the classification failed verification and
    /// the parameters came from the bounded search.
    pub from_fallback: bool,
}

impl AffineWitness {
    pub fn images(&self) -> Result<Vec<ConeImage>, WitnessError> {
        cone_images(self.case_id, &self.params, self.mu)
    }
}

impl fmt::Display for AffineWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case={} family={} k={} {} mu={} lambda2={}",
            self.case_id, self.family_index, self.k, self.params, self.mu, self.lambda_squared
        )?;
        if self.from_fallback {
            f.write_str(" fallback")?;
        }
        Ok(())
    }
}

/// Source and target orbifolds of a rigid-source case.
fn case_orbifolds(case_id: u8) -> Result<(EuclideanOrbifold, EuclideanOrbifold), WitnessError> {
    use EuclideanOrbifold::*;
    Ok(match case_id {
        1 => (S244, S244),
        2 => (S236, S236),
        3 => (S333, S333),
        4 => (S2222, S2222),
        5 => (S333, S236),
        6 => (S2222, S244),
        7 => (S2222, S236),
        _ => return Err(WitnessError::UnknownCase(case_id)),
    })
}

/// The Eisenstein integer (n+m) − ωm as a hex point.
fn eisenstein_lambda(n: i64, m: i64) -> LatticePoint {
    LatticePoint::eisenstein(n + m, -m)
}

/// Degree formula of each case, as an exact integer.
pub fn degree_formula(case_id: u8, params: &WitnessParams) -> Result<i64, WitnessError> {
    Ok(match (case_id, *params) {
        (1, WitnessParams::Ring { n, m }) => n * n + m * m,
        (2 | 3, WitnessParams::Ring { n, m }) => n * n + n * m + m * m,
        (5, WitnessParams::Ring { n, m }) => 2 * (n * n + n * m + m * m),
        (4, WitnessParams::Matrix { n, m, p, q }) => p * m - q * n,
        (6, WitnessParams::Matrix { n, m, p, q }) => 2 * (p * m - q * n),
        (7, WitnessParams::Matrix { n, m, p, q }) => 3 * (q * n - p * m),
        (0..=7, _) => return Err(WitnessError::CaseMismatch(case_id)),
        _ => return Err(WitnessError::UnknownCase(case_id)),
    })
}

/// Whether a point lies in the translation lattice of the orbifold.
fn in_translation_lattice(o: EuclideanOrbifold, p: LatticePoint) -> bool {
    let even = p.a.rem_euclid(2) == 0 && p.b.rem_euclid(2) == 0;
    match o.frame() {
        Frame::Square => even,
        Frame::Hex => even && (p.a / 2 - p.b / 2).rem_euclid(3) == 0,
    }
}

/// Exact product of a hex point with a multiplier given as a hex point;
/// `None` when the result leaves the half-integer grid.
fn hex_product(p: LatticePoint, lambda: LatticePoint) -> Option<LatticePoint> {
    let raw = p.mul_ring(lambda.a, lambda.b);
    (raw.a % 2 == 0 && raw.b % 2 == 0).then(|| LatticePoint::hex_doubled(raw.a / 2, raw.b / 2))
}

/// True iff λ maps the source translation lattice into the target one.
pub fn lattice_inclusion_check(case_id: u8, params: &WitnessParams) -> Result<bool, WitnessError> {
    let (source, target) = case_orbifolds(case_id)?;
    let lambda = match *params {
        WitnessParams::Matrix { n, m, p, q } => {
            // The preimages of the source lattice generators map to 2·(n,m)
            // and 2·(p,q) (square frame) or to the doubled vectors u and v.
            let gens = match target.frame() {
                Frame::Square => [LatticePoint::square(2 * n, 2 * m), LatticePoint::square(2 * p, 2 * q)],
                Frame::Hex => [
                    LatticePoint::hex_doubled(2 * (m - n), 2 * (m + 2 * n)),
                    LatticePoint::hex_doubled(2 * (q - p), 2 * (q + 2 * p)),
                ],
            };
            if !matches!(case_id, 4 | 6 | 7) {
                return Err(WitnessError::CaseMismatch(case_id));
            }
            return Ok(gens.iter().all(|&g| in_translation_lattice(target, g)));
        }
        WitnessParams::Ring { n, m } => match case_id {
            1 => LatticePoint::square(n, m),
            2 | 3 | 5 => eisenstein_lambda(n, m),
            _ => return Err(WitnessError::CaseMismatch(case_id)),
        },
        WitnessParams::Lambda(l) => l,
    };
    if matches!(case_id, 4 | 6 | 7) {
        return Err(WitnessError::CaseMismatch(case_id));
    }
    // In case 5 the source is scaled by 1/√2 and λ carries √2, so the
    // multiplier acting on the unscaled lattice is the Eisenstein part.
    Ok(match target.frame() {
        Frame::Square => {
            let lambda = match lambda.frame {
                Frame::Square => lambda,
                // A hex point is Gaussian only if it is a real integer.
                Frame::Hex if lambda.b == 0 && lambda.a % 2 == 0 => LatticePoint::square(lambda.a / 2, 0),
                Frame::Hex => return Ok(false),
            };
            source.lattice_basis().iter().all(|g| in_translation_lattice(target, g.mul_ring(lambda.a, lambda.b)))
        }
        Frame::Hex => {
            let lambda = match lambda.frame {
                Frame::Hex => lambda,
                Frame::Square if lambda.b == 0 => LatticePoint::eisenstein(lambda.a, 0),
                Frame::Square => return Ok(false),
            };
            source
                .lattice_basis()
                .iter()
                .all(|&g| hex_product(g, lambda).is_some_and(|img| in_translation_lattice(target, img)))
        }
    })
}

/// Images of the source cone representatives, classified in the target.
pub fn cone_images(case_id: u8, params: &WitnessParams, mu: LatticePoint) -> Result<Vec<ConeImage>, WitnessError> {
    let (source, target) = case_orbifolds(case_id)?;
    if mu.frame != target.frame() {
        return Err(WitnessError::CaseMismatch(case_id));
    }
    let points: Vec<(char, u32, LatticePoint)> = match (case_id, *params) {
        (1, WitnessParams::Ring { n, m }) => source
            .cone_representatives()
            .into_iter()
            .map(|(l, o, p)| (l, o, p.mul_ring(n, m).add(mu)))
            .collect(),
        (2 | 3, WitnessParams::Ring { n, m }) => {
            let lambda = eisenstein_lambda(n, m);
            source
                .cone_representatives()
                .into_iter()
                .map(|(l, o, p)| (l, o, hex_product(p, lambda).expect("integral multiplier").add(mu)))
                .collect()
        }
        (5, WitnessParams::Ring { n, m }) => {
            // Source lifts 0, 1/√2, ω/√2 go to μ, e + μ, eω + μ.
            let e = eisenstein_lambda(n, m);
            vec![('A', 3, mu), ('B', 3, e.add(mu)), ('C', 3, e.rotate(1).add(mu))]
        }
        (4 | 6, WitnessParams::Matrix { n, m, p, q }) => vec![
            ('A', 2, mu),
            ('B', 2, LatticePoint::square(p, q).add(mu)),
            ('C', 2, LatticePoint::square(n + p, m + q).add(mu)),
            ('D', 2, LatticePoint::square(n, m).add(mu)),
        ],
        (7, WitnessParams::Matrix { n, m, p, q }) => {
            let u = LatticePoint::hex_doubled(m - n, m + 2 * n);
            let v = LatticePoint::hex_doubled(q - p, q + 2 * p);
            vec![('A', 2, mu), ('B', 2, v.add(mu)), ('C', 2, u.add(v).add(mu)), ('D', 2, u.add(mu))]
        }
        _ => return Err(WitnessError::CaseMismatch(case_id)),
    };
    points
        .into_iter()
        .map(|(source_label, source_order, image)| {
            let class = lift_class(target, image).expect("frames agree");
            Ok(ConeImage { source_label, source_order, image, class })
        })
        .collect()
}

/// Branching data produced by the images: above a target cone point of
/// order p every source cone of order p̃ contributes p/p̃ and regular points
/// contribute p. `None` if some image is not a compatible cone lift or the
/// counts do not fit the degree.
pub fn realized_partitions(target: EuclideanOrbifold, images: &[ConeImage], degree: i64) -> Option<Vec<Partition>> {
    if degree <= 0 {
        return None;
    }
    let mut above: BTreeMap<char, Vec<u32>> = BTreeMap::new();
    for img in images {
        let ConeLiftClass::Lift { label, order } = img.class else { return None };
        if order % img.source_order != 0 {
            return None;
        }
        above.entry(label).or_default().push(order / img.source_order);
    }
    let mut out = Vec::new();
    for (label, order, _) in target.cone_representatives() {
        let mut entries = above.remove(&label).unwrap_or_default();
        let used: i64 = entries.iter().map(|&e| e as i64).sum();
        let rest = degree - used;
        if rest < 0 || rest % order as i64 != 0 {
            return None;
        }
        entries.extend(std::iter::repeat(order).take((rest / order as i64) as usize));
        out.push(Partition::new(entries).ok()?);
    }
    Some(out)
}

fn sorted_partitions(parts: &[Partition]) -> Vec<Partition> {
    let mut v = parts.to_vec();
    v.sort();
    v
}

/// Exact verification against the candidate.
pub fn verify_witness(c: &CandidateCover, w: &AffineWitness) -> Result<ValidationReport, WitnessError> {
    let (_, target) = case_orbifolds(w.case_id)?;
    let mut r = ValidationReport::new();
    let d = c.degree() as i64;
    let formula = degree_formula(w.case_id, &w.params)?;
    r.push(
        "degree",
        formula == d && formula > 0 && w.lambda_squared == formula,
        format!("formula {formula}, recorded {}, candidate {d}", w.lambda_squared),
    );
    let inclusion = lattice_inclusion_check(w.case_id, &w.params)?;
    r.push("lattice-inclusion", inclusion, "multiplier maps the source lattice into the target lattice");
    let images = w.images()?;
    // Each image must be a cone lift whose local degree p/p̃ occurs above a
    // target cone point of that order.
    let compatible = images.iter().all(|i| {
        i.class.order().is_some_and(|o| {
            o % i.source_order == 0
                && c.partitions().iter().any(|p| p.lcm() == o as u64 && p.entries().contains(&(o / i.source_order)))
        })
    });
    let listing: Vec<String> = images.iter().map(|i| i.to_string()).collect();
    r.push("cone-images", compatible, listing.join(", "));
    let realized = realized_partitions(target, &images, d);
    let want = sorted_partitions(c.partitions());
    let matches = realized.as_ref().is_some_and(|p| sorted_partitions(p) == want);
    let shown = realized.map(|p| p.iter().map(|x| x.to_string()).collect::<String>()).unwrap_or_else(|| "none".into());
    r.push("branching-data", matches, format!("realized {shown}"));
    let oc = induced_orbifold_cover(c);
    let sums_ok = oc
        .instructions
        .iter()
        .all(|ins| ins.source_orders.iter().map(|&q| (ins.target_order / q) as i64).sum::<i64>() == d);
    r.push("instructions", sums_ok, "local degrees above each target cone sum to d");
    Ok(r)
}

fn candidate_case(c: &CandidateCover) -> Result<EuclideanFamily, WitnessError> {
    let oc = induced_orbifold_cover(c);
    if c.base_genus() != 0 || geometry_class(&oc.target) != GeometryClass::Euclidean {
        return Err(WitnessError::NotEuclidean(c.to_string()));
    }
    let fam = match_euclidean_family(c)?;
    if fam.case_id == 0 {
        return Err(WitnessError::TorusSource(c.to_string()));
    }
    Ok(fam)
}

/// Published parameters for the family member, before verification.
fn recipe(fam: &EuclideanFamily, d: u64) -> Option<(WitnessParams, LatticePoint)> {
    let t = fam.template();
    let outcome = t.criterion.evaluate(d);
    if !outcome.holds {
        return None;
    }
    let k = fam.k as i64;
    let sq0 = LatticePoint::square(0, 0);
    let hex0 = LatticePoint::hex_doubled(0, 0);
    let omega = LatticePoint::eisenstein(0, 1);
    let half = LatticePoint::hex_doubled(1, 0);
    let xy = outcome.representation.map(|(x, y)| (x as i64, y as i64));
    // Signs chosen so that x − y ≡ r (mod 3).
    let signed = |(x, y): (i64, i64), r: i64| if (x - y).rem_euclid(3) == r { (x, y) } else { (-x, -y) };
    let ring = |n, m| WitnessParams::Ring { n, m };
    let matrix = |n, m, p, q| WitnessParams::Matrix { n, m, p, q };
    Some(match (fam.case_id, fam.family_index) {
        (1, 1) => {
            let (x, y) = xy?;
            (ring(x, y), sq0)
        }
        (1, 2) => {
            let (x, y) = xy?;
            (ring(x + y, x - y), sq0)
        }
        (1, 3) => {
            let (x, y) = xy?;
            (ring(2 * x, 2 * y), sq0)
        }
        (2, 1) | (3, 1) => {
            let (x, y) = signed(xy?, 1);
            (ring(x, y), hex0)
        }
        (2, 2) => {
            let (x, y) = xy?;
            (ring(x, x + 3 * y), omega)
        }
        (2, 3) => {
            // d = 4(u² + uv + v²): n = 2u, m = 2v with u − v ≡ 2 (mod 3).
            let (u, v) = signed(xy?, 2);
            (ring(2 * u, 2 * v), hex0)
        }
        (2, 4) => {
            let (x, y) = xy?;
            (ring(2 * x, 2 * (x + 3 * y)), omega)
        }
        (3, 2) | (5, 1) => {
            let (x, y) = xy?;
            (ring(x, x + 3 * y), hex0)
        }
        (5, 2) => {
            let (x, y) = signed(xy?, 2);
            (ring(x, y), hex0)
        }
        (5, 4) => {
            let (x, y) = xy?;
            (ring(x, x + 3 * y), omega)
        }
        (4, 1) => {
            let d = d as i64;
            let (a, p) = if d % 4 == 1 { ((d - 1) / 4, 1) } else { ((d + 1) / 4, -1) };
            (matrix(2 * a, 1, p, -2), sq0)
        }
        (4, 2) => {
            let d = d as i64;
            let (a, m) = if d % 4 == 0 { (d / 4, 0) } else { ((d - 2) / 4, 2) };
            (matrix(2 * a, m, 1, -2), sq0)
        }
        (4, 3) => {
            let a = d as i64 / 4;
            (matrix(2, 2, 2 * (a + 1), 2), sq0)
        }
        (6, 1) => (matrix(k + 1, k + 1, 1, -1), LatticePoint::square(1, 0)),
        (6, 2) | (6, 4) => (matrix(k, k + 1, 2, 0), sq0),
        (6, 3) => (matrix(k, k + 1, 1, -1), sq0),
        (6, 6) => (matrix(0, 2, d as i64 / 4, 0), sq0),
        (7, 1) => (matrix(k + 1, 1, 2, 2), half),
        (7, 2) => {
            if k % 2 == 1 {
                (matrix(2, 1, -1, k), half)
            } else {
                (matrix(2, 1, 1, k + 1), half)
            }
        }
        (7, 3) => {
            if k % 2 == 0 {
                (matrix(k, 2, -1, 2), half)
            } else {
                (matrix(k + 1, 2, 1, 2), half)
            }
        }
        (7, 5) => {
            let h = (d as i64 - 12) / 12;
            (matrix(2, 2, -2, 2 * h), omega)
        }
        _ => return None,
    })
}

fn build(fam: &EuclideanFamily, params: WitnessParams, mu: LatticePoint, from_fallback: bool) -> Option<AffineWitness> {
    let lambda_squared = degree_formula(fam.case_id, &params).ok()?;
    Some(AffineWitness {
        case_id: fam.case_id,
        family_index: fam.family_index,
        k: fam.k,
        params,
        mu,
        lambda_squared,
        from_fallback,
    })
}

fn passes(c: &CandidateCover, w: &AffineWitness) -> bool {
    verify_witness(c, w).is_ok_and(|r| r.ok)
}

/// Cheap filter used inside the search before the full report.
fn quick_match(c: &CandidateCover, target: EuclideanOrbifold, case_id: u8, params: &WitnessParams, mu: LatticePoint) -> bool {
    let Ok(images) = cone_images(case_id, params, mu) else { return false };
    realized_partitions(target, &images, c.degree() as i64)
        .is_some_and(|p| sorted_partitions(&p) == sorted_partitions(c.partitions()))
}

/// Bounded search over |n|,|m|,|p|,|q| ≤ 4√d with μ at a cone lift. Radii
/// grow geometrically so small solutions are found first.
pub fn fallback_search(c: &CandidateCover, fam: &EuclideanFamily) -> Option<AffineWitness> {
    let (_, target) = case_orbifolds(fam.case_id).ok()?;
    let d = c.degree() as i64;
    let bound = 4 * (d.sqrt() + 1);
    let mus: Vec<LatticePoint> = target.cone_representatives().into_iter().map(|(_, _, p)| p).collect();
    let accept = |params: WitnessParams, mu: LatticePoint| {
        if !quick_match(c, target, fam.case_id, &params, mu) {
            return None;
        }
        build(fam, params, mu, true).filter(|w| passes(c, w))
    };
    let mut radius = 2;
    loop {
        let r = radius.min(bound);
        for &mu in &mus {
            let found = match fam.case_id {
                1 | 2 | 3 | 5 => (-r..=r).flat_map(|n| (-r..=r).map(move |m| (n, m))).find_map(|(n, m)| {
                    let params = WitnessParams::Ring { n, m };
                    if degree_formula(fam.case_id, &params).ok()? != d {
                        return None;
                    }
                    accept(params, mu)
                }),
                _ => matrix_search(d, fam.case_id, r, |params| accept(params, mu)),
            };
            if found.is_some() {
                return found;
            }
        }
        if r == bound {
            return None;
        }
        radius *= 2;
    }
}

/// Every (n, m, p, q) in the box with the right determinant, in a fixed
/// order, until `accept` returns a witness.
fn matrix_search<F>(d: i64, case_id: u8, r: i64, accept: F) -> Option<AffineWitness>
where
    F: Fn(WitnessParams) -> Option<AffineWitness>,
{
    // d = s·(pm − qn) with s = 1, 2 or −3 (the last for 3(qn − pm)).
    let (scale, sign) = match case_id {
        4 => (1, 1),
        6 => (2, 1),
        _ => (3, -1),
    };
    if d % scale != 0 {
        return None;
    }
    let det = sign * d / scale; // pm − qn
    for n in -r..=r {
        for m in -r..=r {
            for p in -r..=r {
                // Solve pm − qn = det for q, or scan q when n = 0.
                let qs: Vec<i64> = if n != 0 {
                    let num = p * m - det;
                    if num % n != 0 {
                        continue;
                    }
                    vec![num / n]
                } else if p * m == det {
                    (-r..=r).collect()
                } else {
                    continue;
                };
                for q in qs.into_iter().filter(|q| q.abs() <= r) {
                    if let Some(w) = accept(WitnessParams::Matrix { n, m, p, q }) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Builds and self-verifies a witness; `Ok(None)` when the family
/// criterion fails (the candidate is exceptional).
pub fn construct_witness(c: &CandidateCover) -> Result<Option<AffineWitness>, WitnessError> {
    let fam = candidate_case(c)?;
    let Some((params, mu)) = recipe(&fam, c.degree() as u64) else {
        return Ok(None);
    };
    if let Some(w) = build(&fam, params, mu, false).filter(|w| passes(c, w)) {
        return Ok(Some(w));
    }
    Ok(fallback_search(c, &fam))
}

/// Translation sublattice realizing a torus-source candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusWitness {
    /// `None` for the torus itself.
    pub target: Option<EuclideanOrbifold>,
    pub k: u32,
    pub basis: [LatticePoint; 2],
    /// [Γ : Λ(Γ)], 1 for the torus.
    pub point_group_order: u32,
    pub degree: u32,
}

impl fmt::Display for TorusWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = self.target.map_or("T".to_string(), |t| t.to_string());
        write!(
            f,
            "T -> {target} degree={} k={} index={} basis={},{}",
            self.degree, self.k, self.point_group_order, self.basis[0], self.basis[1]
        )
    }
}

/// T → X of degree d as the quotient by ⟨k·u₁, u₂⟩ ⊂ Λ(Γ); `None` if the
/// point-group order does not divide d.
pub fn torus_witness_for(target: Option<EuclideanOrbifold>, degree: u32) -> Option<TorusWitness> {
    let (order, [u1, u2]) = match target {
        None => (1, [LatticePoint::square(1, 0), LatticePoint::square(0, 1)]),
        Some(t) => (t.point_group_order(), t.lattice_basis()),
    };
    if degree == 0 || degree % order != 0 {
        return None;
    }
    let k = degree / order;
    Some(TorusWitness { target, k, basis: [u1.scale(k as i64), u2], point_group_order: order, degree })
}

pub fn torus_witness(c: &CandidateCover) -> Result<TorusWitness, WitnessError> {
    let case = euclidean_case(c).map_err(|_| WitnessError::NotTorusSource(c.to_string()))?;
    if case != 0 {
        return Err(WitnessError::NotTorusSource(c.to_string()));
    }
    let target = EuclideanOrbifold::from_orbifold(&induced_orbifold_cover(c).target);
    torus_witness_for(target, c.degree()).ok_or_else(|| WitnessError::NotTorusSource(c.to_string()))
}

/// All points of a torus cover are regular, so every target cone of order
/// p carries (p,…,p); also checks the sublattice index.
pub fn verify_torus_witness(c: &CandidateCover, w: &TorusWitness) -> ValidationReport {
    let mut r = ValidationReport::new();
    let [b1, b2] = w.basis;
    let index = match w.target {
        None => (b1.a * b2.b - b1.b * b2.a).abs(),
        Some(t) => {
            let [u1, u2] = t.lattice_basis();
            let det = |x: LatticePoint, y: LatticePoint| x.a * y.b - x.b * y.a;
            let (full, sub) = (det(u1, u2).abs(), det(b1, b2).abs());
            if full == 0 || sub % full != 0 {
                0
            } else {
                sub / full
            }
        }
    };
    r.push(
        "index",
        index == w.k as i64 && w.k * w.point_group_order == c.degree(),
        format!("sublattice index {index}, degree {} = {}*{}", c.degree(), w.k, w.point_group_order),
    );
    r.push("cover-genus", c.cover_genus() == 1, format!("cover genus {}", c.cover_genus()));
    let mut want: Vec<Partition> = match w.target {
        None => Vec::new(),
        Some(t) => t
            .cone_representatives()
            .into_iter()
            .map(|(_, order, _)| Partition::uniform(order, (c.degree() / order) as usize))
            .collect(),
    };
    want.sort();
    r.push("branching-data", want == sorted_partitions(c.partitions()), "every point above a cone point is regular");
    r
}

/// Largest x with x² ≤ v, for callers sizing searches.
pub fn isqrt(v: u64) -> u64 {
    v.sqrt()
}

/// Gaussian multiplier λ = x + yi for case 1, with
/// d = x² + y².
pub fn square_lambda(x: i64, y: i64) -> WitnessParams {
    WitnessParams::Ring { n: x, m: y }
}

/// For reporting: the form a ring witness represents.
pub fn ring_form(case_id: u8) -> Option<FormId> {
    match case_id {
        1 => Some(FormId::X2Y2),
        2 | 3 | 5 => Some(FormId::X2XYY2),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::{decide, FAMILIES};
    use crate::model::{parse_candidate, Verdict};

    fn cand(s: &str) -> CandidateCover {
        parse_candidate(s).unwrap()
    }

    #[test]
    fn inclusion_examples() {
        assert!(lattice_inclusion_check(1, &WitnessParams::Lambda(LatticePoint::square(1, 2))).unwrap());
        assert!(lattice_inclusion_check(2, &WitnessParams::Ring { n: 1, m: 2 }).unwrap());
        // 1 + i√3 = 2ω
        assert!(!lattice_inclusion_check(1, &WitnessParams::Lambda(LatticePoint::eisenstein(0, 2))).unwrap());
        // (1 + ω)/2 is not an Eisenstein integer
        assert!(!lattice_inclusion_check(2, &WitnessParams::Lambda(LatticePoint::hex_doubled(1, 1))).unwrap());
        assert!(lattice_inclusion_check(9, &WitnessParams::Ring { n: 1, m: 0 }).is_err());
    }

    #[test]
    fn construct_examples() {
        let c = cand("5: (2,2,1)(4,1)(4,1)");
        let w = construct_witness(&c).unwrap().unwrap();
        assert_eq!((w.case_id, w.family_index, w.params, w.mu), (1, 1, WitnessParams::Ring { n: 1, m: 2 }, LatticePoint::square(0, 0)));
        let shown: Vec<String> = w.images().unwrap().iter().map(|i| format!("{}{}", i.image, i.class)).collect();
        assert_eq!(shown, ["(1,2)A2", "(0,0)B4", "(-1,3)C4"]);
        assert!(verify_witness(&c, &w).unwrap().ok);

        assert_eq!(construct_witness(&cand("6: (2,1,1,1,1)(2,2,2)(2,2,2)(2,2,2)")).unwrap(), None);

        let w = construct_witness(&cand("9: (2,2,2,2,1)(4,4,1)(4,4,1)")).unwrap().unwrap();
        assert_eq!(w.params, WitnessParams::Ring { n: 0, m: 3 });
        assert!(matches!(construct_witness(&cand("4: (2,2)(2,2)(2,2)(2,2)")), Err(WitnessError::TorusSource(_))));
        assert!(matches!(construct_witness(&cand("4: (2,2)(3,1)(3,1)")), Err(WitnessError::NotEuclidean(_))));
    }

    #[test]
    fn verify_examples() {
        let c = cand("5: (2,2,1)(4,1)(4,1)");
        let w = AffineWitness {
            case_id: 1,
            family_index: 1,
            k: 1,
            params: WitnessParams::Ring { n: 2, m: 1 },
            mu: LatticePoint::square(0, 0),
            lambda_squared: 5,
            from_fallback: false,
        };
        assert!(verify_witness(&c, &w).unwrap().ok);
        // λ = 2+2i sends A to a B lift, which the first family forbids.
        let c = cand("9: (2,2,2,2,1)(4,4,1)(4,4,1)");
        let w = AffineWitness { params: WitnessParams::Ring { n: 2, m: 2 }, lambda_squared: 8, k: 2, ..w };
        let r = verify_witness(&c, &w).unwrap();
        assert!(!r.ok);
        assert!(!r.check("cone-images").unwrap().passed);
        // The same multiplier is a valid witness for the third family.
        let c = cand("8: (2,2,2,2)(4,4)(4,2,1,1)");
        let w = AffineWitness { family_index: 3, k: 1, ..w };
        assert!(verify_witness(&c, &w).unwrap().ok);
    }

    #[test]
    fn corrected_case2_family3_at_76() {
        let c = euclidean_template_instance(2, 3, 12);
        assert_eq!(c.degree(), 76);
        let w = construct_witness(&c).unwrap().expect("76 = 4*19 is realizable");
        assert!(verify_witness(&c, &w).unwrap().ok);
        assert!(!w.from_fallback);
    }

    fn euclidean_template_instance(case: u8, fam: u8, k: u32) -> CandidateCover {
        crate::decide::euclidean_template(case, fam).unwrap().instantiate(k).unwrap()
    }

    #[test]
    fn witnesses_match_verdicts_for_small_k() {
        for t in FAMILIES.iter().filter(|t| t.case_id != 0) {
            for k in 1..=6 {
                let c = t.instantiate(k).unwrap();
                let verdict = decide(&c).unwrap().verdict;
                let w = construct_witness(&c).unwrap();
                assert_eq!(w.is_some(), verdict == Verdict::Realizable, "{} k={k} {c}", t.label());
                if let Some(w) = w {
                    assert!(verify_witness(&c, &w).unwrap().ok, "{c} {w}");
                }
            }
        }
    }

    #[test]
    fn torus_examples() {
        let w = torus_witness(&cand("2: (2)(2)(2)(2)")).unwrap();
        assert_eq!((w.k, w.point_group_order), (1, 2));
        let c = euclidean_template_instance(0, 5, 2);
        assert_eq!(c.degree(), 12);
        let w = torus_witness(&c).unwrap();
        assert_eq!(w.k, 2);
        assert!(verify_torus_witness(&c, &w).ok);
        let w = torus_witness_for(None, 3).unwrap();
        assert_eq!(w.basis, [LatticePoint::square(3, 0), LatticePoint::square(0, 1)]);
        assert!(torus_witness(&cand("5: (2,2,1)(4,1)(4,1)")).is_err());
    }
}
