//! Exact plane geometry for the four rigid Euclidean orbifolds.
//!
//! Square frame: (a, b) is a + ib. Hex frame: (a, b) is (a + ωb)/2 with
//! ω = (1 + i√3)/2 = e^{iπ/3}, so ω² = ω − 1 and every point used here has
//! integer doubled coordinates.

use std::fmt;

use serde::Serialize;

use crate::model::Orbifold;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Frame {
    Square,
    Hex,
}

impl Frame {
    /// Order of the rotation ζ generating the frame's point group
    /// (ζ = i or ζ = ω).
    pub fn rotation_order(self) -> u8 {
        match self {
            Frame::Square => 4,
            Frame::Hex => 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LatticePoint {
    pub frame: Frame,
    pub a: i64,
    pub b: i64,
}

impl LatticePoint {
    pub const fn square(a: i64, b: i64) -> Self {
        LatticePoint { frame: Frame::Square, a, b }
    }

    /// Hex point from doubled coordinates: (a + ωb)/2.
    pub const fn hex_doubled(a: i64, b: i64) -> Self {
        LatticePoint { frame: Frame::Hex, a, b }
    }

    /// The Eisenstein integer a + ωb.
    pub const fn eisenstein(a: i64, b: i64) -> Self {
        LatticePoint { frame: Frame::Hex, a: 2 * a, b: 2 * b }
    }

    pub fn origin(frame: Frame) -> Self {
        LatticePoint { frame, a: 0, b: 0 }
    }

    pub fn add(self, o: LatticePoint) -> Self {
        debug_assert_eq!(self.frame, o.frame);
        LatticePoint { frame: self.frame, a: self.a + o.a, b: self.b + o.b }
    }

    pub fn sub(self, o: LatticePoint) -> Self {
        debug_assert_eq!(self.frame, o.frame);
        LatticePoint { frame: self.frame, a: self.a - o.a, b: self.b - o.b }
    }

    pub fn neg(self) -> Self {
        LatticePoint { frame: self.frame, a: -self.a, b: -self.b }
    }

    pub fn scale(self, k: i64) -> Self {
        LatticePoint { frame: self.frame, a: self.a * k, b: self.b * k }
    }

    /// Product with the ring element c + ζ'd, where ζ' is i (square) or
    /// ω (hex). Linear in the coordinates, so doubling is preserved.
    pub fn mul_ring(self, c: i64, d: i64) -> Self {
        let (a, b) = (self.a, self.b);
        match self.frame {
            // (a+bi)(c+di)
            Frame::Square => LatticePoint::square(a * c - b * d, a * d + b * c),
            // (a+bω)(c+dω) = ac − bd + (ad + bc + bd)ω
            Frame::Hex => LatticePoint::hex_doubled(a * c - b * d, a * d + b * c + b * d),
        }
    }

    /// Multiplication by ζ^r, ζ the generating unit of the frame.
    pub fn rotate(self, r: u8) -> Self {
        let mut p = self;
        for _ in 0..(r % self.frame.rotation_order()) {
            p = match p.frame {
                Frame::Square => LatticePoint::square(-p.b, p.a),
                Frame::Hex => LatticePoint::hex_doubled(-p.b, p.a + p.b),
            };
        }
        p
    }

    /// Both coordinates even, i.e. the hex point is an Eisenstein integer.
    pub fn is_integral_hex(self) -> bool {
        self.frame == Frame::Hex && self.a % 2 == 0 && self.b % 2 == 0
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.frame {
            Frame::Square => write!(f, "({},{})", self.a, self.b),
            Frame::Hex => write!(f, "({},{})/2", self.a, self.b),
        }
    }
}

/// The four genus-0 Euclidean orbifolds with a fixed plane model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EuclideanOrbifold {
    S244,
    S2222,
    S236,
    S333,
}

impl EuclideanOrbifold {
    pub fn frame(self) -> Frame {
        match self {
            EuclideanOrbifold::S244 | EuclideanOrbifold::S2222 => Frame::Square,
            EuclideanOrbifold::S236 | EuclideanOrbifold::S333 => Frame::Hex,
        }
    }

    pub fn orbifold(self) -> Orbifold {
        match self {
            EuclideanOrbifold::S244 => Orbifold::sphere(&[2, 4, 4]),
            EuclideanOrbifold::S2222 => Orbifold::sphere(&[2, 2, 2, 2]),
            EuclideanOrbifold::S236 => Orbifold::sphere(&[2, 3, 6]),
            EuclideanOrbifold::S333 => Orbifold::sphere(&[3, 3, 3]),
        }
    }

    pub fn from_orbifold(o: &Orbifold) -> Option<Self> {
        if o.genus() != 0 {
            return None;
        }
        match o.cone_orders() {
            [2, 4, 4] => Some(EuclideanOrbifold::S244),
            [2, 2, 2, 2] => Some(EuclideanOrbifold::S2222),
            [2, 3, 6] => Some(EuclideanOrbifold::S236),
            [3, 3, 3] => Some(EuclideanOrbifold::S333),
            _ => None,
        }
    }

    /// One representative lift per cone point, as (label, order, point):
    /// the corners of a fundamental triangle or quadrilateral.
    pub fn cone_representatives(self) -> Vec<(char, u32, LatticePoint)> {
        match self {
            EuclideanOrbifold::S244 => vec![
                ('A', 2, LatticePoint::square(1, 0)),
                ('B', 4, LatticePoint::square(0, 0)),
                ('C', 4, LatticePoint::square(1, 1)),
            ],
            EuclideanOrbifold::S2222 => vec![
                ('A', 2, LatticePoint::square(0, 0)),
                ('B', 2, LatticePoint::square(1, 0)),
                ('C', 2, LatticePoint::square(1, 1)),
                ('D', 2, LatticePoint::square(0, 1)),
            ],
            EuclideanOrbifold::S236 => vec![
                ('A', 2, LatticePoint::hex_doubled(1, 0)),
                ('B', 3, LatticePoint::hex_doubled(0, 0)),
                ('C', 6, LatticePoint::hex_doubled(0, 2)),
            ],
            EuclideanOrbifold::S333 => vec![
                ('A', 3, LatticePoint::eisenstein(0, 0)),
                ('B', 3, LatticePoint::eisenstein(1, 0)),
                ('C', 3, LatticePoint::eisenstein(0, 1)),
            ],
        }
    }

    /// Generators of the translation lattice: ⟨2, 2i⟩ in the square frame and
    /// ⟨i√3, (3+i√3)/2⟩ = ⟨2ω−1, 1+ω⟩ in the hex frame.
    pub fn lattice_basis(self) -> [LatticePoint; 2] {
        match self.frame() {
            Frame::Square => [LatticePoint::square(2, 0), LatticePoint::square(0, 2)],
            Frame::Hex => [LatticePoint::eisenstein(-1, 2), LatticePoint::eisenstein(1, 1)],
        }
    }

    /// Index of the translation lattice in the orbifold group.
    pub fn point_group_order(self) -> u32 {
        match self {
            EuclideanOrbifold::S2222 => 2,
            EuclideanOrbifold::S333 => 3,
            EuclideanOrbifold::S244 => 4,
            EuclideanOrbifold::S236 => 6,
        }
    }
}

impl fmt::Display for EuclideanOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.orbifold())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConeLiftClass {
    Lift { label: char, order: u32 },
    NotALift,
}

impl ConeLiftClass {
    pub fn order(self) -> Option<u32> {
        match self {
            ConeLiftClass::Lift { order, .. } => Some(order),
            ConeLiftClass::NotALift => None,
        }
    }
}

impl fmt::Display for ConeLiftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeLiftClass::Lift { label, order } => write!(f, "{label}{order}"),
            ConeLiftClass::NotALift => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{orbifold} uses the {expected:?} frame, got a {got:?} point")]
pub struct FrameMismatch {
    pub orbifold: EuclideanOrbifold,
    pub expected: Frame,
    pub got: Frame,
}

fn lift(label: char, order: u32) -> ConeLiftClass {
    ConeLiftClass::Lift { label, order }
}

/// Which cone point, if any, a plane point lies over.
pub fn lift_class(orbifold: EuclideanOrbifold, p: LatticePoint) -> Result<ConeLiftClass, FrameMismatch> {
    if p.frame != orbifold.frame() {
        return Err(FrameMismatch { orbifold, expected: orbifold.frame(), got: p.frame });
    }
    let (a, b) = (p.a, p.b);
    let even = |v: i64| v.rem_euclid(2) == 0;
    Ok(match orbifold {
        EuclideanOrbifold::S244 => match (even(a), even(b)) {
            (true, true) => lift('B', 4),
            (false, false) => lift('C', 4),
            _ => lift('A', 2),
        },
        EuclideanOrbifold::S2222 => match (even(a), even(b)) {
            (true, true) => lift('A', 2),
            (false, true) => lift('B', 2),
            (false, false) => lift('C', 2),
            (true, false) => lift('D', 2),
        },
        EuclideanOrbifold::S236 => {
            if even(a) && even(b) {
                if (a / 2 - b / 2).rem_euclid(3) == 2 {
                    lift('C', 6)
                } else {
                    lift('B', 3)
                }
            } else if (a - b).rem_euclid(3) == 1 {
                lift('A', 2)
            } else {
                ConeLiftClass::NotALift
            }
        }
        EuclideanOrbifold::S333 => {
            if !(even(a) && even(b)) {
                ConeLiftClass::NotALift
            } else {
                match (a / 2 - b / 2).rem_euclid(3) {
                    0 => lift('A', 3),
                    1 => lift('B', 3),
                    _ => lift('C', 3),
                }
            }
        }
    })
}
