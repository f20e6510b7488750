//! Domain types and the text grammar for candidates and orbifolds.
//!
//! Candidate grammar (whitespace between tokens is ignored):
//!
//! ```text
//! ["g=" INT "->"] ["g=" INT] INT ":" "(" INT {"," INT} ")" { "(" INT {"," INT} ")" }
//! ```
//!
//! The first optional prefix is the genus of the covering surface, the second the
//! genus of the covered surface. Orbifold grammar: `S`, `S(2,3,6)`, `T`, `G2`, `G1(2,2)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("partition is empty")]
    EmptyPartition,
    #[error("partition entries must be positive")]
    ZeroEntry,
    #[error("degree must be at least 2, got {0}")]
    Degree(u32),
    #[error("a candidate needs at least one partition")]
    NoPartitions,
    #[error("partition {index} sums to {sum}, expected the degree {degree}")]
    PartitionSum { index: usize, sum: u64, degree: u32 },
    #[error("partition {index} has no entry larger than 1")]
    TrivialPartition { index: usize },
    #[error("Riemann-Hurwitz: {0}")]
    RiemannHurwitz(String),
    #[error("stated cover genus {stated} differs from the Riemann-Hurwitz value {derived}")]
    CoverGenusMismatch { stated: u32, derived: u32 },
    #[error("cone order {0} is below 2")]
    ConeOrder(u32),
}

/// A partition of the degree, stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    entries: Vec<u32>,
}

/// Summary numbers of a partition: ℓ is `length`, the defect counts entries
/// different from the lcm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub sum: u64,
    pub length: usize,
    pub lcm: u64,
    pub defect: usize,
}

impl Partition {
    pub fn new(mut entries: Vec<u32>) -> Result<Self, ModelError> {
        if entries.is_empty() {
            return Err(ModelError::EmptyPartition);
        }
        if entries.contains(&0) {
            return Err(ModelError::ZeroEntry);
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { entries })
    }

    /// `count` copies of `value`.
    pub fn uniform(value: u32, count: usize) -> Self {
        Partition::new(vec![value; count]).expect("uniform partition needs positive value and count")
    }

    /// Builds from (value, count) pairs; zero counts are skipped.
    pub fn from_counts(counts: &[(u32, usize)]) -> Result<Self, ModelError> {
        let entries = counts.iter().flat_map(|&(v, c)| std::iter::repeat(v).take(c)).collect();
        Partition::new(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.entries[0]
    }

    pub fn lcm(&self) -> u64 {
        self.entries.iter().fold(1u64, |acc, &e| acc.lcm(&(e as u64)))
    }

    pub fn defect(&self) -> usize {
        let l = self.lcm();
        self.entries.iter().filter(|&&e| e as u64 != l).count()
    }

    /// True when every entry is 1.
    pub fn is_trivial(&self) -> bool {
        self.entries[0] == 1
    }

    pub fn stats(&self) -> PartitionStats {
        partition_stats(self)
    }

    /// Multiplicity of each value, as (value, count) with values descending.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &e in &self.entries {
            match out.last_mut() {
                Some((v, c)) if *v == e => *c += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }
}

pub fn partition_stats(p: &Partition) -> PartitionStats {
    PartitionStats { sum: p.sum(), length: p.len(), lcm: p.lcm(), defect: p.defect() }
}

/// Lexicographic on the non-increasing entry lists, so sorting descending
/// gives the usual reverse-lexicographic listing (8), (7,1), (6,2), ...
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let p = cur.partition()?;
        cur.end()?;
        Ok(p)
    }
}

/// Canonical order of the partitions inside a candidate: largest entry
/// descending, then length ascending, then entries descending.
pub fn canonical_partition_order(a: &Partition, b: &Partition) -> Ordering {
    b.largest()
        .cmp(&a.largest())
        .then(a.len().cmp(&b.len()))
        .then(b.entries.cmp(&a.entries))
}

/// Unvalidated candidate data, as written by a user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCandidate {
    pub base_genus: u32,
    pub cover_genus: Option<u32>,
    pub degree: u32,
    pub partitions: Vec<Partition>,
}

impl RawCandidate {
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let mut cur = Cursor::new(text);
        let raw = cur.candidate()?;
        cur.end()?;
        Ok(raw)
    }

    pub fn total_length(&self) -> u64 {
        self.partitions.iter().map(|p| p.len() as u64).sum()
    }
}

/// A validated candidate branched cover Σ̃ → Σ of the given degree with one
/// partition per branching point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidateCover {
    base_genus: u32,
    cover_genus: u32,
    degree: u32,
    partitions: Vec<Partition>,
}

impl CandidateCover {
    /// Validates and canonicalizes; the cover genus is derived.
    pub fn new(base_genus: u32, degree: u32, partitions: Vec<Partition>) -> Result<Self, ModelError> {
        Self::from_raw(RawCandidate { base_genus, cover_genus: None, degree, partitions })
    }

    /// Candidate over the sphere from plain entry lists.
    pub fn sphere(degree: u32, parts: &[&[u32]]) -> Result<Self, ModelError> {
        let partitions =
            parts.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<Vec<_>, _>>()?;
        Self::new(0, degree, partitions)
    }

    pub fn from_raw(raw: RawCandidate) -> Result<Self, ModelError> {
        if let Some(v) = crate::euler::candidate_violations(&raw).into_iter().next() {
            return Err(v);
        }
        let derived = crate::euler::derived_cover_genus(&raw).expect("checked above");
        let mut partitions = raw.partitions;
        partitions.sort_by(canonical_partition_order);
        Ok(CandidateCover { base_genus: raw.base_genus, cover_genus: derived, degree: raw.degree, partitions })
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn cover_genus(&self) -> u32 {
        self.cover_genus
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Number of branching points.
    pub fn n(&self) -> usize {
        self.partitions.len()
    }

    /// ℓ(Π), the total number of entries.
    pub fn total_length(&self) -> u64 {
        self.partitions.iter().map(|p| p.len() as u64).sum()
    }

    pub fn to_raw(&self) -> RawCandidate {
        RawCandidate {
            base_genus: self.base_genus,
            cover_genus: Some(self.cover_genus),
            degree: self.degree,
            partitions: self.partitions.clone(),
        }
    }
}

impl Ord for CandidateCover {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base_genus
            .cmp(&other.base_genus)
            .then(self.degree.cmp(&other.degree))
            .then(self.partitions.len().cmp(&other.partitions.len()))
            .then_with(|| {
                for (a, b) in self.partitions.iter().zip(&other.partitions) {
                    let o = canonical_partition_order(a, b);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for CandidateCover {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text. The base genus prefix is written only when nonzero; the
/// cover genus is never written since it is derived.
pub fn format_candidate(c: &CandidateCover) -> String {
    c.to_string()
}

impl fmt::Display for CandidateCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base_genus != 0 {
            write!(f, "g={} ", self.base_genus)?;
        }
        write!(f, "{}: ", self.degree)?;
        for p in &self.partitions {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub fn parse_candidate(text: &str) -> Result<CandidateCover, ModelError> {
    CandidateCover::from_raw(RawCandidate::parse(text)?)
}

impl FromStr for CandidateCover {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_candidate(s)
    }
}

/// Closed orientable surface of some genus with cone points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Orbifold {
    genus: u32,
    cone_orders: Vec<u32>,
}

impl Orbifold {
    pub fn new(genus: u32, mut cone_orders: Vec<u32>) -> Result<Self, ModelError> {
        if let Some(&bad) = cone_orders.iter().find(|&&p| p < 2) {
            return Err(ModelError::ConeOrder(bad));
        }
        cone_orders.sort_unstable();
        Ok(Orbifold { genus, cone_orders })
    }

    /// Genus-0 orbifold with the given cone orders.
    pub fn sphere(cones: &[u32]) -> Self {
        Orbifold::new(0, cones.to_vec()).expect("cone orders must be at least 2")
    }

    pub fn torus() -> Self {
        Orbifold { genus: 1, cone_orders: Vec::new() }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }
}

impl fmt::Display for Orbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.genus, self.cone_orders.is_empty()) {
            (0, _) => f.write_str("S")?,
            (1, true) => return f.write_str("T"),
            (g, _) => write!(f, "G{g}")?,
        }
        if !self.cone_orders.is_empty() {
            f.write_str("(")?;
            for (i, p) in self.cone_orders.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn parse_orbifold(text: &str) -> Result<Orbifold, ModelError> {
    let mut cur = Cursor::new(text);
    let o = cur.orbifold()?;
    cur.end()?;
    Ok(o)
}

impl FromStr for Orbifold {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_orbifold(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Realizable,
    Exceptional,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "REALIZABLE",
            Verdict::Exceptional => "EXCEPTIONAL",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

/// Stable machine-readable reason for a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ReasonCode {
    /// The covered surface is not the sphere.
    KnownPositiveGenusBase,
    PositiveBadOverSpherical,
    PositiveGoodSource,
    EuclideanTorus { family: u8 },
    EuclideanFamily { case_id: u8, family: u8, tag: &'static str },
    HyperbolicRow(u8),
    HyperbolicTriangularUnlisted,
    HyperbolicNonrigid,
}

impl ReasonCode {
    pub fn code(&self) -> String {
        match self {
            ReasonCode::KnownPositiveGenusBase => "KNOWN_POSITIVE_GENUS_BASE".into(),
            ReasonCode::PositiveBadOverSpherical => "POS_BAD_OVER_SPHERICAL".into(),
            ReasonCode::PositiveGoodSource => "POS_GOOD_SOURCE".into(),
            ReasonCode::EuclideanTorus { family } => format!("EUCL_C0F{family}_TORUS"),
            ReasonCode::EuclideanFamily { case_id, family, tag } => format!("EUCL_C{case_id}F{family}_{tag}"),
            ReasonCode::HyperbolicRow(i) => format!("HYP_ROW_{i}"),
            ReasonCode::HyperbolicTriangularUnlisted => "HYP_TRIANGULAR_UNLISTED".into(),
            ReasonCode::HyperbolicNonrigid => "HYPERBOLIC_NONRIGID".into(),
        }
    }

    /// Human-readable statement of the governing result.
    pub fn citation(&self) -> String {
        match self {
            ReasonCode::KnownPositiveGenusBase => {
                "every candidate over a surface of positive genus is realizable".into()
            }
            ReasonCode::PositiveBadOverSpherical => {
                "induced cover has a bad source over a spherical target, which is never realized".into()
            }
            ReasonCode::PositiveGoodSource => {
                "induced cover has a good source over a spherical target, which is always realized".into()
            }
            ReasonCode::EuclideanTorus { .. } => {
                "torus over a Euclidean orbifold: always realized by a sublattice of the translation lattice".into()
            }
            ReasonCode::EuclideanFamily { case_id, family, .. } => {
                let crit = crate::decide::euclidean_template(*case_id, *family)
                    .map(|t| t.criterion.describe())
                    .unwrap_or_default();
                format!("Euclidean case {case_id}, family {family}: realizable iff {crit}")
            }
            ReasonCode::HyperbolicRow(i) => {
                format!("row {i} of the nine triangular hyperbolic candidates")
            }
            ReasonCode::HyperbolicTriangularUnlisted => {
                "triangular hyperbolic cover outside the nine-row census".into()
            }
            ReasonCode::HyperbolicNonrigid => {
                "hyperbolic cover with a non-triangular orbifold: no rigidity to exploit".into()
            }
        }
    }
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

/// Verdict plus reason and optional named integer evidence such as a
/// representation `x=1 y=2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub reason: ReasonCode,
    pub evidence: Vec<(String, i64)>,
}

impl Decision {
    pub fn new(verdict: Verdict, reason: ReasonCode) -> Self {
        Decision { verdict, reason, evidence: Vec::new() }
    }

    pub fn with_evidence(mut self, name: &str, value: i64) -> Self {
        self.evidence.push((name.to_string(), value));
        self
    }

    pub fn evidence_value(&self, name: &str) -> Option<i64> {
        self.evidence.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

/// `VERDICT REASON key=value ...`
impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.verdict, self.reason)?;
        for (k, v) in &self.evidence {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ModelError> {
        Err(ModelError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ModelError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected '{token}'"))
        }
    }

    fn int(&mut self) -> Result<u32, ModelError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        self.pos += digits;
        self.text[start..self.pos].parse::<u32>().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn end(&mut self) -> Result<(), ModelError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn int_list(&mut self) -> Result<Vec<u32>, ModelError> {
        self.expect("(")?;
        let mut entries = vec![self.int()?];
        while self.eat(",") {
            entries.push(self.int()?);
        }
        self.expect(")")?;
        Ok(entries)
    }

    fn partition(&mut self) -> Result<Partition, ModelError> {
        let at = self.pos;
        let entries = self.int_list()?;
        Partition::new(entries).map_err(|e| ModelError::Syntax { pos: at, msg: e.to_string() })
    }

    fn candidate(&mut self) -> Result<RawCandidate, ModelError> {
        let mut cover_genus = None;
        let mut base_genus = 0;
        if self.eat("g=") {
            let g = self.int()?;
            if self.eat("->") {
                cover_genus = Some(g);
                if self.eat("g=") {
                    base_genus = self.int()?;
                }
            } else {
                base_genus = g;
            }
        }
        let degree = self.int()?;
        self.expect(":")?;
        let mut partitions = vec![self.partition()?];
        while self.peek() == Some('(') {
            partitions.push(self.partition()?);
        }
        Ok(RawCandidate { base_genus, cover_genus, degree, partitions })
    }

    fn orbifold(&mut self) -> Result<Orbifold, ModelError> {
        let genus = if self.eat("S") {
            0
        } else if self.eat("T") {
            return Ok(Orbifold::torus());
        } else if self.eat("G") {
            self.int()?
        } else {
            return self.err("expected 'S', 'T' or 'G'");
        };
        let cones = if self.peek() == Some('(') { self.int_list()? } else { Vec::new() };
        Orbifold::new(genus, cones)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_census_row() {
        let c = parse_candidate("8: (5,1,1,1)(4,4)(2,2,2,2)").unwrap();
        assert_eq!((c.degree(), c.n(), c.base_genus(), c.cover_genus()), (8, 3, 0, 0));
    }

    #[test]
    fn parses_double_cover() {
        let c = parse_candidate("2: (2)(2)").unwrap();
        assert_eq!((c.degree(), c.n(), c.cover_genus()), (2, 2, 0));
        assert_eq!(c.to_string(), "2: (2)(2)");
    }

    #[test]
    fn rejects_euler_overflow() {
        let e = parse_candidate("4: (2,2)(3,1)").unwrap_err();
        assert!(matches!(e, ModelError::RiemannHurwitz(_)), "{e}");
    }

    #[test]
    fn canonical_order() {
        let c = parse_candidate("8:(4,4)(5,1,1,1)(2,2,2,2)").unwrap();
        assert_eq!(c.to_string(), "8: (5,1,1,1)(4,4)(2,2,2,2)");
        let c = parse_candidate("8: (2,2,2,2)(4,4)(4,2,1,1)").unwrap();
        assert_eq!(c.to_string(), "8: (4,4)(4,2,1,1)(2,2,2,2)");
    }

    #[test]
    fn round_trips() {
        for s in ["6: (5,1)(4,1,1)(2,2,2)", "2: (2)(2)", "g=1 2: (2)(2)"] {
            assert_eq!(parse_candidate(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn genus_prefixes() {
        let c = parse_candidate("g=1 2: (2)(2)").unwrap();
        assert_eq!((c.base_genus(), c.cover_genus()), (1, 2));
        let c = parse_candidate("g=1 -> 3: (3)(3)(3)").unwrap();
        assert_eq!((c.base_genus(), c.cover_genus()), (0, 1));
        let c = parse_candidate("g=2 -> g=1 2: (2)(2)").unwrap();
        assert_eq!((c.base_genus(), c.cover_genus()), (1, 2));
        let e = parse_candidate("g=0 -> 3: (3)(3)(3)").unwrap_err();
        assert_eq!(e, ModelError::CoverGenusMismatch { stated: 0, derived: 1 });
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_candidate("3: (1,1,1)(3)"), Err(ModelError::TrivialPartition { index: 0 })));
        assert!(matches!(parse_candidate("4: (2,1)(2,2)(2,2)"), Err(ModelError::PartitionSum { .. })));
        assert!(matches!(parse_candidate("4 (2,2)"), Err(ModelError::Syntax { .. })));
        assert!(matches!(parse_candidate("4: (2,0,2)"), Err(ModelError::Syntax { .. })));
        assert!(matches!(parse_candidate("4: (2,2)(2,2) x"), Err(ModelError::Syntax { .. })));
        assert!(matches!(parse_candidate("1: (1)"), Err(ModelError::Degree(1))));
    }

    #[test]
    fn orbifolds() {
        let o = parse_orbifold("S(6,2,3)").unwrap();
        assert_eq!((o.genus(), o.cone_orders()), (0, &[2, 3, 6][..]));
        assert_eq!(o.to_string(), "S(2,3,6)");
        let t = parse_orbifold("T").unwrap();
        assert_eq!((t.genus(), t.cone_orders().len()), (1, 0));
        assert_eq!(parse_orbifold("S(1,3)"), Err(ModelError::ConeOrder(1)));
        assert!(parse_orbifold("Q(2)").is_err());
        for s in ["S", "S(5)", "T", "G2", "G1(2,2)", "G3(2)"] {
            assert_eq!(parse_orbifold(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn stats_examples() {
        let s = partition_stats(&"(5,2,1)".parse().unwrap());
        assert_eq!(s, PartitionStats { sum: 8, length: 3, lcm: 10, defect: 3 });
        let s = partition_stats(&"(4,4)".parse().unwrap());
        assert_eq!(s, PartitionStats { sum: 8, length: 2, lcm: 4, defect: 0 });
        for d in 1..20 {
            let s = partition_stats(&Partition::uniform(d, 1));
            assert_eq!(s, PartitionStats { sum: d as u64, length: 1, lcm: d as u64, defect: 0 });
        }
    }

    #[test]
    fn decision_line() {
        let d = Decision::new(
            Verdict::Realizable,
            ReasonCode::EuclideanFamily { case_id: 1, family: 1, tag: "SUM2SQ" },
        )
        .with_evidence("x", 1)
        .with_evidence("y", 2);
        assert_eq!(d.to_string(), "REALIZABLE EUCL_C1F1_SUM2SQ x=1 y=2");
    }
}
