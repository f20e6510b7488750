//! Riemann–Hurwitz bookkeeping, orbifold Euler characteristics, geometry
//! classes and the orbifold cover induced by a candidate.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::model::{CandidateCover, ModelError, Orbifold, RawCandidate};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a list of named checks; `ok` iff all passed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport { ok: true, checks: Vec::new() }
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.ok &= passed;
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok = {}", self.ok)?;
        for c in &self.checks {
            writeln!(f, "{} {} {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn raw_cover_euler(raw: &RawCandidate) -> i64 {
    let chi = 2 - 2 * raw.base_genus as i64;
    raw.total_length() as i64 + raw.degree as i64 * (chi - raw.partitions.len() as i64)
}

/// χ̃ = ℓ(Π) + d·(χ(Σ) − n). The caller decides whether the value is admissible.
pub fn cover_euler_characteristic(c: &CandidateCover) -> i64 {
    raw_cover_euler(&c.to_raw())
}

/// Genus of the covering surface forced by Riemann–Hurwitz, if any.
pub fn derived_cover_genus(raw: &RawCandidate) -> Option<u32> {
    let chi = raw_cover_euler(raw);
    if chi > 2 || chi % 2 != 0 {
        None
    } else {
        u32::try_from((2 - chi) / 2).ok()
    }
}

/// All reasons why `raw` is not a valid candidate, in a fixed order.
pub fn candidate_violations(raw: &RawCandidate) -> Vec<ModelError> {
    let mut out = Vec::new();
    if raw.degree < 2 {
        out.push(ModelError::Degree(raw.degree));
    }
    if raw.partitions.is_empty() {
        out.push(ModelError::NoPartitions);
    }
    for (index, p) in raw.partitions.iter().enumerate() {
        if p.sum() != raw.degree as u64 {
            out.push(ModelError::PartitionSum { index, sum: p.sum(), degree: raw.degree });
        }
    }
    for (index, p) in raw.partitions.iter().enumerate() {
        if p.is_trivial() {
            out.push(ModelError::TrivialPartition { index });
        }
    }
    let chi = raw_cover_euler(raw);
    if chi > 2 {
        out.push(ModelError::RiemannHurwitz(format!("cover Euler characteristic {chi} exceeds 2")));
    } else if chi % 2 != 0 {
        out.push(ModelError::RiemannHurwitz(format!("cover Euler characteristic {chi} is odd")));
    } else if let (Some(stated), Some(derived)) = (raw.cover_genus, derived_cover_genus(raw)) {
        if stated != derived {
            out.push(ModelError::CoverGenusMismatch { stated, derived });
        }
    }
    out
}

pub fn validate_candidate(raw: &RawCandidate) -> ValidationReport {
    let violations = candidate_violations(raw);
    let has = |f: &dyn Fn(&ModelError) -> bool| violations.iter().find(|v| f(v)).map(|v| v.to_string());
    let mut r = ValidationReport::new();
    let deg = has(&|v| matches!(v, ModelError::Degree(_) | ModelError::NoPartitions));
    r.push("degree", deg.is_none(), deg.unwrap_or_else(|| format!("d={} n={}", raw.degree, raw.partitions.len())));
    let sums = has(&|v| matches!(v, ModelError::PartitionSum { .. }));
    r.push("partition-sums", sums.is_none(), sums.unwrap_or_else(|| "every partition sums to d".into()));
    let triv = has(&|v| matches!(v, ModelError::TrivialPartition { .. }));
    r.push("nontrivial", triv.is_none(), triv.unwrap_or_else(|| "every partition has an entry > 1".into()));
    let rh = has(&|v| matches!(v, ModelError::RiemannHurwitz(_) | ModelError::CoverGenusMismatch { .. }));
    let rh_passed = rh.is_none();
    let chi = raw_cover_euler(raw);
    let ell = raw.total_length();
    let detail = match rh {
        Some(msg) => msg,
        None => {
            let mut s = format!("cover chi={chi} genus={} l={ell}", (2 - chi) / 2);
            if raw.base_genus == 0 && raw.partitions.len() == 3 && chi == 2 {
                s.push_str(" = d+2");
            }
            s
        }
    };
    r.push("riemann-hurwitz", rh_passed, detail);
    r
}

/// χ^orb = χ(Σ) − Σ (1 − 1/p_i), exactly.
pub fn orbifold_euler_characteristic(o: &Orbifold) -> Rational64 {
    let mut chi = Rational64::from_integer(2 - 2 * o.genus() as i64);
    for &p in o.cone_orders() {
        chi -= Rational64::new(p as i64 - 1, p as i64);
    }
    chi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GeometryClass {
    Bad,
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl GeometryClass {
    /// One-letter tag as used in tables: B, S, E, H.
    pub fn letter(self) -> char {
        match self {
            GeometryClass::Bad => 'B',
            GeometryClass::Spherical => 'S',
            GeometryClass::Euclidean => 'E',
            GeometryClass::Hyperbolic => 'H',
        }
    }
}

/// Bad iff genus 0 with one cone point or two unequal ones; otherwise the
/// sign of χ^orb decides.
pub fn geometry_class(o: &Orbifold) -> GeometryClass {
    let cones = o.cone_orders();
    if o.genus() == 0 && (cones.len() == 1 || (cones.len() == 2 && cones[0] != cones[1])) {
        return GeometryClass::Bad;
    }
    let chi = orbifold_euler_characteristic(o);
    if chi.is_positive() {
        GeometryClass::Spherical
    } else if chi.is_zero() {
        GeometryClass::Euclidean
    } else {
        GeometryClass::Hyperbolic
    }
}

/// Cone orders of the source sitting over one target cone point, 1s included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringInstruction {
    pub target_order: u32,
    pub source_orders: Vec<u32>,
}

impl fmt::Display for CoveringInstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.source_orders.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ") ~> {}", self.target_order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbifoldCover {
    pub source: Orbifold,
    pub target: Orbifold,
    pub degree: u32,
    pub instructions: Vec<CoveringInstruction>,
}

impl OrbifoldCover {
    /// Source cone orders above each target point, without the 1s.
    pub fn nontrivial_instructions(&self) -> Vec<(u32, Vec<u32>)> {
        self.instructions
            .iter()
            .map(|ins| (ins.target_order, ins.source_orders.iter().copied().filter(|&p| p > 1).collect()))
            .collect()
    }
}

impl fmt::Display for OrbifoldCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~> {} (degree {})", self.source, self.target, self.degree)
    }
}

/// p_i = lcm(Π_i), p_ij = p_i / d_ij; the source genus is the cover genus.
pub fn induced_orbifold_cover(c: &CandidateCover) -> OrbifoldCover {
    let mut target_cones = Vec::new();
    let mut source_cones = Vec::new();
    let mut instructions = Vec::new();
    for p in c.partitions() {
        let lcm = p.lcm() as u32;
        let source_orders: Vec<u32> = p.entries().iter().map(|&e| lcm / e).collect();
        if lcm > 1 {
            target_cones.push(lcm);
        }
        source_cones.extend(source_orders.iter().copied().filter(|&q| q > 1));
        instructions.push(CoveringInstruction { target_order: lcm, source_orders });
    }
    OrbifoldCover {
        source: Orbifold::new(c.cover_genus(), source_cones).expect("orders above 1"),
        target: Orbifold::new(c.base_genus(), target_cones).expect("orders above 1"),
        degree: c.degree(),
        instructions,
    }
}

/// Checks divisibility, local degree sums, source cone bookkeeping and
/// multiplicativity of χ^orb.
pub fn validate_orbifold_cover(cov: &OrbifoldCover) -> ValidationReport {
    let mut r = ValidationReport::new();
    let d = cov.degree as u64;
    let divides = cov.instructions.iter().all(|ins| ins.source_orders.iter().all(|&q| ins.target_order % q == 0));
    r.push("divisibility", divides, "each source order divides its target order");
    let sums: Vec<u64> = cov
        .instructions
        .iter()
        .map(|ins| ins.source_orders.iter().map(|&q| (ins.target_order / q.max(1)) as u64).sum())
        .collect();
    r.push("local-degrees", divides && sums.iter().all(|&s| s == d), format!("sums {sums:?}, degree {d}"));
    let mut listed: Vec<u32> = cov.instructions.iter().flat_map(|i| i.source_orders.iter().copied()).filter(|&q| q > 1).collect();
    listed.sort_unstable();
    r.push("source-cones", listed == cov.source.cone_orders(), format!("{listed:?} vs {}", cov.source));
    let mut targets: Vec<u32> = cov.instructions.iter().map(|i| i.target_order).filter(|&p| p > 1).collect();
    targets.sort_unstable();
    r.push("target-cones", targets == cov.target.cone_orders(), format!("{targets:?} vs {}", cov.target));
    let src = orbifold_euler_characteristic(&cov.source);
    let tgt = orbifold_euler_characteristic(&cov.target);
    let want = tgt * Rational64::from_integer(d as i64);
    r.push("euler-multiplicative", src == want, format!("{src} vs {d}*{tgt} = {want}"));
    r
}
