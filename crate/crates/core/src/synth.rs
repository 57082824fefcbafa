//! Regular-formula synthesis: any truth table as a GAMMA-combination of
//! selector terms.
//!
//! For row `(v_1, ..., v_n)` with output `a`, the selector term is
//!
//! ```text
//! (rot^v_1(x_1) + ... + rot^v_n(x_n)) * 1 + a
//! ```
//!
//! `rot^v(v)` is 0, and the BETA of the rotated inputs is 0 only when every
//! rotated input is 0, so the filter `* 1` yields 0 on exactly that row and 1
//! elsewhere. `0 + a = a` and `1 + a = 1`; 1 is the GAMMA identity, so the
//! GAMMA of all terms selects `a` on its own row.

use crate::algebra::{self, Trit};
use crate::expr::Expr;
use crate::truthtab::{decode_row, TruthTable};

/// One summand of the regular formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectorTerm {
    pub rotations: Vec<u8>,
    pub payload: Trit,
}

impl SelectorTerm {
    /// The term for `row` of an `arity`-input table: rotation counts equal
    /// the row's input digits.
    pub fn for_row(row: usize, arity: usize, payload: Trit) -> Self {
        SelectorTerm {
            rotations: decode_row(row, arity).iter().map(|t| t.value()).collect(),
            payload,
        }
    }

    pub fn to_expr(&self, vars: &[String]) -> Expr {
        let sum = self
            .rotations
            .iter()
            .zip(vars)
            .map(|(&c, v)| Expr::rotate_n(Expr::var(v.clone()), c as usize))
            .reduce(Expr::beta)
            .expect("selector terms have at least one input");
        Expr::beta(
            Expr::alpha(sum, Expr::Const(Trit::ONE)),
            Expr::Const(self.payload),
        )
    }

    pub fn value(&self, inputs: &[Trit]) -> Trit {
        selector_value(&self.rotations, self.payload, inputs)
    }
}

/// Direct evaluation of a selector term on `inputs`.
pub fn selector_value(rotations: &[u8], payload: Trit, inputs: &[Trit]) -> Trit {
    assert_eq!(
        rotations.len(),
        inputs.len(),
        "one rotation count per input"
    );
    let sum = rotations
        .iter()
        .zip(inputs)
        .map(|(&c, &x)| algebra::rotate_n(x, c))
        .reduce(algebra::beta)
        .unwrap_or(Trit::ZERO);
    algebra::beta(algebra::alpha(sum, Trit::ONE), payload)
}

/// Selector terms of `t`, in canonical row order.
pub fn selector_terms(t: &TruthTable) -> Vec<SelectorTerm> {
    t.outputs()
        .iter()
        .enumerate()
        .map(|(row, &a)| SelectorTerm::for_row(row, t.arity(), a))
        .collect()
}

/// The regular formula of `t`, left-nested in row order. Vanishing terms
/// (payload 1) are kept; removing them is the simplifier's job. A nullary
/// table becomes its constant.
pub fn synthesize(t: &TruthTable) -> Expr {
    if t.arity() == 0 {
        return Expr::Const(t.output(0));
    }
    selector_terms(t)
        .iter()
        .map(|term| term.to_expr(t.vars()))
        .reduce(Expr::gamma)
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, pretty_print};
    use crate::truthtab::{realizes, row_count};

    fn trit(v: u8) -> Trit {
        Trit::try_from(v).unwrap()
    }

    #[test]
    fn monadic_formula_shape() {
        let sti = TruthTable::from_digits("x", "210").unwrap();
        let e = synthesize(&sti);
        assert_eq!(pretty_print(&e), "x*1+2@~x*1+1@~~x*1+0");
        assert_eq!(e, parse("x*1+2 @ ~x*1+1 @ ~~x*1+0").unwrap());
        assert!(realizes(&e, &sti).unwrap());
    }

    #[test]
    fn dyadic_formula_shape() {
        let t = TruthTable::from_digits("x y", "012000000").unwrap();
        let expected = "(x+y)*1+0@(x+~y)*1+1@(x+~~y)*1+2\
                        @(~x+y)*1+0@(~x+~y)*1+0@(~x+~~y)*1+0\
                        @(~~x+y)*1+0@(~~x+~y)*1+0@(~~x+~~y)*1+0";
        assert_eq!(pretty_print(&synthesize(&t)), expected);
    }

    #[test]
    fn nullary_and_constant() {
        let t = TruthTable::from_digits("", "2").unwrap();
        assert_eq!(synthesize(&t), Expr::Const(Trit::TWO));
        let ones = TruthTable::from_digits("x", "111").unwrap();
        assert!(realizes(&synthesize(&ones), &ones).unwrap());
    }

    #[test]
    fn selector_values() {
        for a in Trit::ALL {
            assert_eq!(selector_value(&[0], a, &[Trit::ZERO]), a);
            assert_eq!(selector_value(&[0], a, &[Trit::ONE]), Trit::ONE);
        }
        // beta(0,2)=2, alpha(2,1)=1, beta(1,2)=1
        assert_eq!(
            selector_value(&[0, 0], trit(2), &[trit(0), trit(2)]),
            Trit::ONE
        );
    }

    #[test]
    fn exactly_one_active_term_per_row() {
        for arity in 1..=3 {
            for row in 0..row_count(arity) {
                let inputs = decode_row(row, arity);
                let active: Vec<usize> = (0..row_count(arity))
                    .filter(|&r| {
                        // payload 0 exposes the filter value
                        SelectorTerm::for_row(r, arity, Trit::ZERO).value(&inputs) != Trit::ONE
                    })
                    .collect();
                assert_eq!(active, vec![row]);
            }
        }
    }
}
