//! Trits and the four primitive operators.
//!
//! `ROTATE` maps 0→2, 1→0, 2→1. Each dyadic operator returns the minimum of
//! its operands under a cyclically shifted order of the three values:
//!
//! | operator | token | order      | bound | identity |
//! |----------|-------|------------|-------|----------|
//! | ALPHA    | `*`   | 0 ≺ 1 ≺ 2  | 0     | 2        |
//! | BETA     | `+`   | 1 ≺ 2 ≺ 0  | 1     | 0        |
//! | GAMMA    | `@`   | 2 ≺ 0 ≺ 1  | 2     | 1        |
//!
//! All functions here are total and pure.

use std::fmt;

use thiserror::Error;

/// A ternary digit: 0, 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trit(u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{0} is not a trit (expected 0, 1 or 2)")]
pub struct InvalidTrit(pub i64);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);
    pub const ALL: [Trit; 3] = [Trit::ZERO, Trit::ONE, Trit::TWO];

    pub fn new(value: i64) -> Result<Trit, InvalidTrit> {
        match value {
            0..=2 => Ok(Trit(value as u8)),
            _ => Err(InvalidTrit(value)),
        }
    }

    pub fn from_char(c: char) -> Option<Trit> {
        match c {
            '0' => Some(Trit::ZERO),
            '1' => Some(Trit::ONE),
            '2' => Some(Trit::TWO),
            _ => None,
        }
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }
}

impl TryFrom<u8> for Trit {
    type Error = InvalidTrit;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        Trit::new(value as i64)
    }
}

impl From<Trit> for u8 {
    fn from(t: Trit) -> u8 {
        t.0
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// ROTATE: `x - 1 mod 3`.
#[inline]
pub fn rotate(x: Trit) -> Trit {
    Trit((x.0 + 2) % 3)
}

/// `rotate` applied `times` times.
#[inline]
pub fn rotate_n(x: Trit, times: u8) -> Trit {
    Trit((x.0 + 2 * (times % 3)) % 3)
}

// Rank of `v` in the order that starts at `first`; the dyadic operators
// pick the operand of lower rank.
#[inline]
fn rank(v: Trit, first: u8) -> u8 {
    (v.0 + 3 - first) % 3
}

#[inline]
fn min_from(x: Trit, y: Trit, first: u8) -> Trit {
    if rank(x, first) <= rank(y, first) {
        x
    } else {
        y
    }
}

/// ALPHA (`×`): minimum under 0 ≺ 1 ≺ 2.
#[inline]
pub fn alpha(x: Trit, y: Trit) -> Trit {
    min_from(x, y, 0)
}

/// BETA (`+`): minimum under 1 ≺ 2 ≺ 0.
#[inline]
pub fn beta(x: Trit, y: Trit) -> Trit {
    min_from(x, y, 1)
}

/// GAMMA (`⋄`): minimum under 2 ≺ 0 ≺ 1.
#[inline]
pub fn gamma(x: Trit, y: Trit) -> Trit {
    min_from(x, y, 2)
}

/// The three dyadic operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dyadic {
    Alpha,
    Beta,
    Gamma,
}

impl Dyadic {
    pub const ALL: [Dyadic; 3] = [Dyadic::Alpha, Dyadic::Beta, Dyadic::Gamma];

    pub fn apply(self, x: Trit, y: Trit) -> Trit {
        match self {
            Dyadic::Alpha => alpha(x, y),
            Dyadic::Beta => beta(x, y),
            Dyadic::Gamma => gamma(x, y),
        }
    }

    /// The absorbing element: 0, 1, 2 respectively.
    pub fn bound(self) -> Trit {
        match self {
            Dyadic::Alpha => Trit::ZERO,
            Dyadic::Beta => Trit::ONE,
            Dyadic::Gamma => Trit::TWO,
        }
    }

    /// The neutral element: 2, 0, 1 respectively.
    pub fn identity(self) -> Trit {
        match self {
            Dyadic::Alpha => Trit::TWO,
            Dyadic::Beta => Trit::ZERO,
            Dyadic::Gamma => Trit::ONE,
        }
    }

    /// The operator that `rotate` maps this one onto: `~(x op y) = ~x op' ~y`.
    pub fn rotated(self) -> Dyadic {
        match self {
            Dyadic::Alpha => Dyadic::Gamma,
            Dyadic::Beta => Dyadic::Alpha,
            Dyadic::Gamma => Dyadic::Beta,
        }
    }

    /// The operator this one distributes over, with this one computed first:
    /// `x × (y + z) = (x × y) + (x × z)` and its two cyclic analogues.
    pub fn distributes_over(self) -> Dyadic {
        match self {
            Dyadic::Alpha => Dyadic::Beta,
            Dyadic::Beta => Dyadic::Gamma,
            Dyadic::Gamma => Dyadic::Alpha,
        }
    }

    pub fn token(self) -> char {
        match self {
            Dyadic::Alpha => '*',
            Dyadic::Beta => '+',
            Dyadic::Gamma => '@',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Dyadic::Alpha => "ALPHA",
            Dyadic::Beta => "BETA",
            Dyadic::Gamma => "GAMMA",
        }
    }
}

/// The six bijections of {0, 1, 2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PermOp {
    Identity,
    Rotate,
    Rotate2,
    Reverse,
    RotateReverse,
    Rotate2Reverse,
}

impl PermOp {
    pub const ALL: [PermOp; 6] = [
        PermOp::Identity,
        PermOp::Rotate,
        PermOp::Rotate2,
        PermOp::Reverse,
        PermOp::RotateReverse,
        PermOp::Rotate2Reverse,
    ];

    /// Output column on inputs (0, 1, 2).
    pub fn table(self) -> [Trit; 3] {
        Trit::ALL.map(|x| apply_perm(self, x))
    }

    pub fn name(self) -> &'static str {
        match self {
            PermOp::Identity => "identity",
            PermOp::Rotate => "rotate",
            PermOp::Rotate2 => "rotate2",
            PermOp::Reverse => "reverse",
            PermOp::RotateReverse => "rotate-reverse",
            PermOp::Rotate2Reverse => "rotate2-reverse",
        }
    }
}

/// Reverse, written x̂: swaps 1 and 2, fixes 0.
#[inline]
pub fn reverse(x: Trit) -> Trit {
    Trit((3 - x.0) % 3)
}

pub fn apply_perm(p: PermOp, x: Trit) -> Trit {
    match p {
        PermOp::Identity => x,
        PermOp::Rotate => rotate(x),
        PermOp::Rotate2 => rotate(rotate(x)),
        PermOp::Reverse => reverse(x),
        PermOp::RotateReverse => rotate(reverse(x)),
        PermOp::Rotate2Reverse => rotate(rotate(reverse(x))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: u8) -> Trit {
        Trit::try_from(v).unwrap()
    }

    // Rows (x, y, x×y, x+y, x⋄y), transcribed from the operator table.
    const TABLE: [[u8; 5]; 9] = [
        [0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 2, 0, 2, 2],
        [1, 0, 0, 1, 0],
        [1, 1, 1, 1, 1],
        [1, 2, 1, 1, 2],
        [2, 0, 0, 2, 2],
        [2, 1, 1, 1, 2],
        [2, 2, 2, 2, 2],
    ];

    #[test]
    fn construction_rejects_out_of_range() {
        assert!(Trit::new(3).is_err());
        assert!(Trit::new(-1).is_err());
        assert_eq!(Trit::new(2).unwrap().value(), 2);
        assert_eq!(Trit::from_char('7'), None);
    }

    #[test]
    fn rotate_table() {
        assert_eq!(rotate(t(0)), t(2));
        assert_eq!(rotate(t(1)), t(0));
        assert_eq!(rotate(t(2)), t(1));
        assert_eq!(rotate(rotate(rotate(t(2)))), t(2));
        for x in Trit::ALL {
            assert_eq!(rotate_n(x, 2), rotate(rotate(x)));
            assert_eq!(rotate_n(x, 3), x);
        }
    }

    #[test]
    fn dyadic_tables() {
        for row in TABLE {
            let (x, y) = (t(row[0]), t(row[1]));
            assert_eq!(alpha(x, y), t(row[2]), "alpha({x},{y})");
            assert_eq!(beta(x, y), t(row[3]), "beta({x},{y})");
            assert_eq!(gamma(x, y), t(row[4]), "gamma({x},{y})");
        }
        assert_eq!(alpha(t(1), t(2)), t(1));
        assert_eq!(beta(t(2), t(0)), t(2));
        assert_eq!(gamma(t(0), t(1)), t(0));
        assert_eq!(gamma(t(1), t(2)), t(2));
    }

    #[test]
    fn bounds_and_identities() {
        for op in Dyadic::ALL {
            for x in Trit::ALL {
                assert_eq!(op.apply(x, op.bound()), op.bound());
                assert_eq!(op.apply(x, op.identity()), x);
            }
        }
    }

    #[test]
    fn de_morgan_mapping() {
        for op in Dyadic::ALL {
            for x in Trit::ALL {
                for y in Trit::ALL {
                    assert_eq!(
                        rotate(op.apply(x, y)),
                        op.rotated().apply(rotate(x), rotate(y))
                    );
                }
            }
        }
    }

    #[test]
    fn perm_tables() {
        assert_eq!(PermOp::Reverse.table(), [t(0), t(2), t(1)]);
        assert_eq!(PermOp::RotateReverse.table(), [t(2), t(1), t(0)]);
        assert_eq!(PermOp::Rotate2Reverse.table(), [t(1), t(0), t(2)]);
        assert_eq!(apply_perm(PermOp::Rotate2, t(0)), t(1));
        assert_eq!(apply_perm(PermOp::Identity, t(2)), t(2));
    }

    #[test]
    fn perms_exhaust_bijections() {
        let mut tables: Vec<_> = PermOp::ALL.iter().map(|p| p.table()).collect();
        for tab in &tables {
            let mut sorted = *tab;
            sorted.sort();
            assert_eq!(sorted, Trit::ALL);
        }
        tables.sort();
        tables.dedup();
        assert_eq!(tables.len(), 6);
    }
}
