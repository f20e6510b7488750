//! Family templates of the Euclidean classification, cases 0 to 7.
//!
//! Each family is a list of partitions whose multiplicities are affine in a
//! parameter k, together with its degree d = slope·k + offset and the
//! arithmetic criterion for realizability.

use std::fmt;

use crate::model::{CandidateCover, Partition};
use crate::quadform::{represent, Constraint, FormId};
use crate::witness::lattice::EuclideanOrbifold;

/// `value` repeated `per_k·k + offset` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartTemplate {
    pub value: u32,
    pub per_k: u32,
    pub offset: i32,
}

impl PartTemplate {
    pub fn count(self, k: u32) -> Option<usize> {
        usize::try_from(self.per_k as i64 * k as i64 + self.offset as i64).ok()
    }
}

const fn part(value: u32, per_k: u32, offset: i32) -> PartTemplate {
    PartTemplate { value, per_k, offset }
}

const fn one(count: i32) -> PartTemplate {
    part(1, 0, count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Always,
    Never,
    MultipleOf(u64),
    /// d = multiplier · form(x, y) with (x, y) ∈ ℕ² under the constraint.
    Form { multiplier: u64, form: FormId, constraint: Constraint },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub representation: Option<(u64, u64)>,
}

impl Criterion {
    pub fn evaluate(self, d: u64) -> CriterionOutcome {
        match self {
            Criterion::Always => CriterionOutcome { holds: true, representation: None },
            Criterion::Never => CriterionOutcome { holds: false, representation: None },
            Criterion::MultipleOf(m) => CriterionOutcome { holds: d % m == 0, representation: None },
            Criterion::Form { multiplier, form, constraint } => {
                let rep = if d % multiplier == 0 { represent(form, d / multiplier, constraint) } else { None };
                CriterionOutcome { holds: rep.is_some(), representation: rep }
            }
        }
    }

    pub fn describe(self) -> String {
        match self {
            Criterion::Always => "always".into(),
            Criterion::Never => "never".into(),
            Criterion::MultipleOf(m) => format!("d is a multiple of {m}"),
            Criterion::Form { multiplier, form, constraint } => {
                let lhs = if multiplier == 1 { form.formula().to_string() } else { format!("{multiplier}({})", form.formula()) };
                let mut conds = Vec::new();
                if constraint.different_parity {
                    conds.push("x,y of different parity");
                }
                if constraint.not_both_even {
                    conds.push("x,y not both even");
                }
                if constraint.incongruent_mod_3 {
                    conds.push("x != y mod 3");
                }
                if conds.is_empty() {
                    format!("d = {lhs} for some x,y >= 0")
                } else {
                    format!("d = {lhs} for some x,y >= 0 with {}", conds.join(" and "))
                }
            }
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// One displayed family of a Euclidean case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyTemplate {
    pub case_id: u8,
    pub family_index: u8,
    /// `None` stands for the torus.
    pub source: Option<EuclideanOrbifold>,
    pub target: Option<EuclideanOrbifold>,
    pub slope: u32,
    pub offset: u32,
    pub partitions: &'static [&'static [PartTemplate]],
    pub criterion: Criterion,
    pub tag: &'static str,
}

impl FamilyTemplate {
    pub fn degree(&self, k: u32) -> u32 {
        self.slope * k + self.offset
    }

    /// The k with degree(k) = d, if d lies in this family's progression.
    pub fn solve_k(&self, d: u32) -> Option<u32> {
        let rest = d.checked_sub(self.offset)?;
        (rest % self.slope == 0).then_some(rest / self.slope)
    }

    /// Cover genus of every member: 1 over the torus source, else 0.
    pub fn cover_genus(&self) -> u32 {
        if self.source.is_none() {
            1
        } else {
            0
        }
    }

    /// The member with parameter k, or `None` for the torus self-cover,
    /// which has no branching data. k = 0 yields a member only when it still
    /// induces this family's orbifold cover; that happens once, at degree 6
    /// in the last S(2,3,6) family.
    pub fn instantiate(&self, k: u32) -> Option<CandidateCover> {
        if self.partitions.is_empty() {
            return None;
        }
        let parts = self
            .partitions
            .iter()
            .map(|tpl| {
                let counts: Option<Vec<(u32, usize)>> = tpl.iter().map(|p| p.count(k).map(|c| (p.value, c))).collect();
                Partition::from_counts(&counts?).ok()
            })
            .collect::<Option<Vec<_>>>()?;
        let c = CandidateCover::new(0, self.degree(k), parts).ok()?;
        if k == 0 && !self.induces_own_cover(&c) {
            return None;
        }
        debug_assert_eq!(c.cover_genus(), self.cover_genus(), "C{}F{} k={k}", self.case_id, self.family_index);
        Some(c)
    }

    fn induces_own_cover(&self, c: &CandidateCover) -> bool {
        let oc = crate::euler::induced_orbifold_cover(c);
        let id = |o: &crate::model::Orbifold| {
            if o.genus() == 1 && o.cone_orders().is_empty() {
                Some(None)
            } else {
                EuclideanOrbifold::from_orbifold(o).map(Some)
            }
        };
        id(&oc.source) == Some(self.source) && id(&oc.target) == Some(self.target)
    }

    pub fn label(&self) -> String {
        format!("C{}F{}", self.case_id, self.family_index)
    }
}

const S244: Option<EuclideanOrbifold> = Some(EuclideanOrbifold::S244);
const S2222: Option<EuclideanOrbifold> = Some(EuclideanOrbifold::S2222);
const S236: Option<EuclideanOrbifold> = Some(EuclideanOrbifold::S236);
const S333: Option<EuclideanOrbifold> = Some(EuclideanOrbifold::S333);

const SQUARES: FormId = FormId::X2Y2;
const LOESCHIAN: FormId = FormId::X2XYY2;
const Q3: FormId = FormId::X2_3XY_3Y2;

const DIFF_PARITY: Constraint = Constraint::DIFFERENT_PARITY;
const INCONG3: Constraint = Constraint::INCONGRUENT_MOD_3;
const NOT_EVEN_INCONG3: Constraint = Constraint { different_parity: false, not_both_even: true, incongruent_mod_3: true };

const fn form(multiplier: u64, form: FormId, constraint: Constraint) -> Criterion {
    Criterion::Form { multiplier, form, constraint }
}

macro_rules! fam {
    ($case:expr, $fam:expr, $src:expr, $tgt:expr, $slope:expr, $off:expr, [$($p:expr),* $(,)?], $crit:expr, $tag:expr) => {
        FamilyTemplate {
            case_id: $case,
            family_index: $fam,
            source: $src,
            target: $tgt,
            slope: $slope,
            offset: $off,
            partitions: &[$($p),*],
            criterion: $crit,
            tag: $tag,
        }
    };
}

/// Every family, ordered by case then family index.
pub static FAMILIES: &[FamilyTemplate] = &[
    // T over T, S(2,2,2,2), S(3,3,3), S(2,4,4), S(2,3,6).
    fam!(0, 1, None, None, 1, 0, [], Criterion::Always, "TORUS"),
    fam!(0, 2, None, S2222, 2, 0, [&[part(2, 1, 0)], &[part(2, 1, 0)], &[part(2, 1, 0)], &[part(2, 1, 0)]], Criterion::Always, "TORUS"),
    fam!(0, 3, None, S333, 3, 0, [&[part(3, 1, 0)], &[part(3, 1, 0)], &[part(3, 1, 0)]], Criterion::Always, "TORUS"),
    fam!(0, 4, None, S244, 4, 0, [&[part(2, 2, 0)], &[part(4, 1, 0)], &[part(4, 1, 0)]], Criterion::Always, "TORUS"),
    fam!(0, 5, None, S236, 6, 0, [&[part(2, 3, 0)], &[part(3, 2, 0)], &[part(6, 1, 0)]], Criterion::Always, "TORUS"),
    // S(2,4,4) over S(2,4,4)
    fam!(1, 1, S244, S244, 4, 1,
        [&[part(2, 2, 0), one(1)], &[part(4, 1, 0), one(1)], &[part(4, 1, 0), one(1)]],
        form(1, SQUARES, DIFF_PARITY), "SUM2SQ"),
    fam!(1, 2, S244, S244, 4, 2,
        [&[part(2, 2, 1)], &[part(4, 1, 0), part(2, 0, 1)], &[part(4, 1, 0), one(2)]],
        form(2, SQUARES, DIFF_PARITY), "TWICE_SUM2SQ"),
    fam!(1, 3, S244, S244, 4, 4,
        [&[part(2, 2, 2)], &[part(4, 1, 1)], &[part(4, 1, 0), part(2, 0, 1), one(2)]],
        form(4, SQUARES, Constraint::NONE), "FOUR_SUM2SQ"),
    // S(2,3,6) over S(2,3,6)
    fam!(2, 1, S236, S236, 6, 1,
        [&[part(2, 3, 0), one(1)], &[part(3, 2, 0), one(1)], &[part(6, 1, 0), one(1)]],
        form(1, LOESCHIAN, NOT_EVEN_INCONG3), "LOESCHIAN"),
    fam!(2, 2, S236, S236, 6, 3,
        [&[part(2, 3, 1), one(1)], &[part(3, 2, 1)], &[part(6, 1, 0), part(2, 0, 1), one(1)]],
        form(3, Q3, Constraint::NOT_BOTH_EVEN), "THREE_Q3"),
    // Corrected criterion: four times a Loeschian number with x != y mod 3.
    fam!(2, 3, S236, S236, 6, 4,
        [&[part(2, 3, 2)], &[part(3, 2, 1), one(1)], &[part(6, 1, 0), part(3, 0, 1), one(1)]],
        form(4, LOESCHIAN, INCONG3), "FOUR_LOESCHIAN"),
    fam!(2, 4, S236, S236, 6, 6,
        [&[part(2, 3, 3)], &[part(3, 2, 2)], &[part(6, 1, 0), part(3, 0, 1), part(2, 0, 1), one(1)]],
        form(12, Q3, Constraint::NONE), "TWELVE_Q3"),
    // S(3,3,3) over S(3,3,3)
    fam!(3, 1, S333, S333, 3, 1,
        [&[part(3, 1, 0), one(1)], &[part(3, 1, 0), one(1)], &[part(3, 1, 0), one(1)]],
        form(1, LOESCHIAN, INCONG3), "LOESCHIAN"),
    fam!(3, 2, S333, S333, 3, 3,
        [&[part(3, 1, 1)], &[part(3, 1, 1)], &[part(3, 1, 0), one(3)]],
        form(3, Q3, Constraint::NONE), "THREE_Q3"),
    // S(2,2,2,2) over S(2,2,2,2)
    fam!(4, 1, S2222, S2222, 2, 1,
        [&[part(2, 1, 0), one(1)], &[part(2, 1, 0), one(1)], &[part(2, 1, 0), one(1)], &[part(2, 1, 0), one(1)]],
        Criterion::Always, "ALWAYS"),
    fam!(4, 2, S2222, S2222, 2, 2,
        [&[part(2, 1, 0), one(2)], &[part(2, 1, 0), one(2)], &[part(2, 1, 1)], &[part(2, 1, 1)]],
        Criterion::Always, "ALWAYS"),
    fam!(4, 3, S2222, S2222, 2, 4,
        [&[part(2, 1, 0), one(4)], &[part(2, 1, 2)], &[part(2, 1, 2)], &[part(2, 1, 2)]],
        Criterion::MultipleOf(4), "MOD4"),
    // S(3,3,3) over S(2,3,6)
    fam!(5, 1, S333, S236, 6, 0,
        [&[part(2, 3, 0)], &[part(3, 2, -1), one(3)], &[part(6, 1, 0)]],
        form(6, Q3, Constraint::NONE), "SIX_Q3"),
    fam!(5, 2, S333, S236, 6, 2,
        [&[part(2, 3, 1)], &[part(3, 2, 0), one(2)], &[part(6, 1, 0), part(2, 0, 1)]],
        form(2, LOESCHIAN, INCONG3), "TWICE_LOESCHIAN"),
    fam!(5, 3, S333, S236, 6, 4,
        [&[part(2, 3, 2)], &[part(3, 2, 1), one(1)], &[part(6, 1, 0), part(2, 0, 2)]],
        Criterion::Never, "NEVER"),
    fam!(5, 4, S333, S236, 6, 6,
        [&[part(2, 3, 3)], &[part(3, 2, 2)], &[part(6, 1, 0), part(2, 0, 3)]],
        form(6, Q3, Constraint::NONE), "SIX_Q3"),
    // S(2,2,2,2) over S(2,4,4)
    fam!(6, 1, S2222, S244, 4, 4,
        [&[part(2, 2, 0), one(4)], &[part(4, 1, 1)], &[part(4, 1, 1)]],
        Criterion::Always, "ALWAYS"),
    fam!(6, 2, S2222, S244, 4, 4,
        [&[part(2, 2, 1), one(2)], &[part(4, 1, 0), part(2, 0, 2)], &[part(4, 1, 1)]],
        Criterion::Always, "ALWAYS"),
    fam!(6, 3, S2222, S244, 4, 2,
        [&[part(2, 2, 0), one(2)], &[part(4, 1, 0), part(2, 0, 1)], &[part(4, 1, 0), part(2, 0, 1)]],
        Criterion::Always, "ALWAYS"),
    fam!(6, 4, S2222, S244, 4, 4,
        [&[part(2, 2, 2)], &[part(4, 1, 0), part(2, 0, 2)], &[part(4, 1, 0), part(2, 0, 2)]],
        Criterion::Always, "ALWAYS"),
    fam!(6, 5, S2222, S244, 4, 6,
        [&[part(2, 2, 3)], &[part(4, 1, 0), part(2, 0, 3)], &[part(4, 1, 1), part(2, 0, 1)]],
        Criterion::Never, "NEVER"),
    fam!(6, 6, S2222, S244, 4, 8,
        [&[part(2, 2, 4)], &[part(4, 1, 0), part(2, 0, 4)], &[part(4, 1, 2)]],
        Criterion::MultipleOf(8), "MOD8"),
    // S(2,2,2,2) over S(2,3,6)
    fam!(7, 1, S2222, S236, 6, 0,
        [&[part(2, 3, -2), one(4)], &[part(3, 2, 0)], &[part(6, 1, 0)]],
        Criterion::Always, "ALWAYS"),
    fam!(7, 2, S2222, S236, 6, 3,
        [&[part(2, 3, 0), one(3)], &[part(3, 2, 1)], &[part(6, 1, 0), part(3, 0, 1)]],
        Criterion::Always, "ALWAYS"),
    fam!(7, 3, S2222, S236, 6, 6,
        [&[part(2, 3, 2), one(2)], &[part(3, 2, 2)], &[part(6, 1, 0), part(3, 0, 2)]],
        Criterion::Always, "ALWAYS"),
    fam!(7, 4, S2222, S236, 6, 9,
        [&[part(2, 3, 4), one(1)], &[part(3, 2, 3)], &[part(6, 1, 0), part(3, 0, 3)]],
        Criterion::Never, "NEVER"),
    fam!(7, 5, S2222, S236, 6, 12,
        [&[part(2, 3, 6)], &[part(3, 2, 4)], &[part(6, 1, 0), part(3, 0, 4)]],
        Criterion::MultipleOf(12), "MOD12"),
];

pub fn euclidean_template(case_id: u8, family: u8) -> Option<&'static FamilyTemplate> {
    FAMILIES.iter().find(|t| t.case_id == case_id && t.family_index == family)
}

pub fn case_families(case_id: u8) -> impl Iterator<Item = &'static FamilyTemplate> {
    FAMILIES.iter().filter(move |t| t.case_id == case_id)
}

/// The case joining a source and target (torus as `None`).
pub fn case_for(source: Option<EuclideanOrbifold>, target: Option<EuclideanOrbifold>) -> Option<u8> {
    use EuclideanOrbifold::*;
    match (source, target) {
        (None, _) => Some(0),
        (Some(S244), Some(S244)) => Some(1),
        (Some(S236), Some(S236)) => Some(2),
        (Some(S333), Some(S333)) => Some(3),
        (Some(S2222), Some(S2222)) => Some(4),
        (Some(S333), Some(S236)) => Some(5),
        (Some(S2222), Some(S244)) => Some(6),
        (Some(S2222), Some(S236)) => Some(7),
        _ => None,
    }
}
