//! Which monadic functions are reachable as `(m(X) op c) op' c'`.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Dyadic, PermOp, Trit};
use crate::expr::{pretty_print, Expr};
use crate::rewrite::lookup;
use crate::truthtab::table_of;

/// The 27 columns as transcribed from the reference coverage table, in form
/// order: rotation count, then inner operation, then outer operation, each
/// over `(@,0), (*,1), (+,2)`.
#[rustfmt::skip]
pub const PRINTED_TABLE: [[u8; 3]; 27] = [
    [0, 0, 2], [0, 0, 1], [2, 2, 2], [0, 0, 0], [0, 1, 1], [2, 1, 1], [2, 0, 2], [1, 1, 1], [2, 1, 2],
    [2, 0, 0], [1, 0, 0], [2, 2, 2], [0, 0, 0], [1, 0, 1], [1, 2, 1], [2, 2, 0], [1, 1, 1], [2, 2, 1],
    [0, 2, 0], [0, 1, 0], [2, 2, 2], [0, 0, 0], [1, 1, 0], [1, 1, 2], [0, 0, 2], [1, 1, 1], [1, 2, 2],
];

const STEPS: [(Dyadic, Trit); 3] = [
    (Dyadic::Gamma, Trit::ZERO),
    (Dyadic::Alpha, Trit::ONE),
    (Dyadic::Beta, Trit::TWO),
];

#[derive(Clone, Debug)]
pub struct CensusForm {
    pub rotations: u8,
    pub inner: (Dyadic, Trit),
    pub outer: (Dyadic, Trit),
    pub expr: Expr,
    pub computed: [Trit; 3],
    pub printed: [Trit; 3],
}

#[derive(Clone, Debug)]
pub struct Census {
    pub forms: Vec<CensusForm>,
    pub distinct: BTreeSet<[Trit; 3]>,
    pub uncovered: BTreeSet<[Trit; 3]>,
}

impl Census {
    /// Indices of forms whose printed column differs from evaluation.
    pub fn mismatches(&self) -> Vec<usize> {
        (0..self.forms.len())
            .filter(|&i| self.forms[i].computed != self.forms[i].printed)
            .collect()
    }

    pub fn printed_distinct(&self) -> usize {
        self.forms
            .iter()
            .map(|f| f.printed)
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn uncovered_are_permutations(&self) -> bool {
        let perms: BTreeSet<[Trit; 3]> = PermOp::ALL.iter().map(|p| p.table()).collect();
        perms == self.uncovered
    }

    /// Each uncovered function is rebuilt by its selector identity.
    pub fn reconstructions_hold(&self) -> bool {
        let eqs = [
            ("fusion-eq5", PermOp::Identity),
            ("fusion-eq6", PermOp::Rotate),
            ("fusion-eq7", PermOp::Rotate2),
            ("fusion-eq8", PermOp::Reverse),
            ("fusion-eq9", PermOp::RotateReverse),
            ("fusion-eq10", PermOp::Rotate2Reverse),
        ];
        eqs.iter().all(|&(rule, p)| {
            let lhs = &lookup(rule).expect("fusion rules exist").lhs;
            let t = table_of(lhs, &["x".to_string()]).expect("monadic");
            t.outputs() == p.table() && self.uncovered.contains(&p.table())
        })
    }
}

fn digits(t: &[Trit; 3]) -> String {
    t.iter().map(|d| d.to_char()).collect()
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, form) in self.forms.iter().enumerate() {
            let flag = if form.computed == form.printed {
                String::new()
            } else {
                format!("  printed {}", digits(&form.printed))
            };
            writeln!(
                f,
                "{:>2}  {:<14} {}{}",
                i + 1,
                pretty_print(&form.expr),
                digits(&form.computed),
                flag
            )?;
        }
        writeln!(f, "distinct: {}", self.distinct.len())?;
        let uncovered: Vec<String> = self.uncovered.iter().map(digits).collect();
        write!(f, "uncovered: {}", uncovered.join(" "))
    }
}

pub fn monadic_census() -> Census {
    let x = ["x".to_string()];
    let mut forms = Vec::with_capacity(27);
    for rotations in 0..3u8 {
        for inner in STEPS {
            for outer in STEPS {
                let m = Expr::rotate_n(Expr::var("x"), rotations as usize);
                let e = Expr::dyadic(
                    outer.0,
                    Expr::dyadic(inner.0, m, Expr::Const(inner.1)),
                    Expr::Const(outer.1),
                );
                let t = table_of(&e, &x).expect("monadic");
                let computed = [t.output(0), t.output(1), t.output(2)];
                let printed = PRINTED_TABLE[forms.len()].map(|d| Trit::try_from(d).unwrap());
                forms.push(CensusForm {
                    rotations,
                    inner,
                    outer,
                    expr: e,
                    computed,
                    printed,
                });
            }
        }
    }
    let distinct: BTreeSet<[Trit; 3]> = forms.iter().map(|f| f.computed).collect();
    let mut uncovered = BTreeSet::new();
    for a in Trit::ALL {
        for b in Trit::ALL {
            for c in Trit::ALL {
                if !distinct.contains(&[a, b, c]) {
                    uncovered.insert([a, b, c]);
                }
            }
        }
    }
    Census {
        forms,
        distinct,
        uncovered,
    }
}
