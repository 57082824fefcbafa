//! The ternary law table, checked by exhaustive evaluation.

use crate::expr::{parse, Expr};
use crate::truthtab::{equivalent, Equivalence};

#[derive(Clone, Debug)]
pub struct Law {
    pub family: &'static str,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Law {
    fn new(family: &'static str, lhs: &str, rhs: &str) -> Self {
        Law {
            family,
            lhs: parse(lhs).expect("law lhs parses"),
            rhs: parse(rhs).expect("law rhs parses"),
        }
    }

    pub fn check(&self) -> Equivalence {
        equivalent(&self.lhs, &self.rhs).expect("laws have at most three variables")
    }
}

/// All 25 laws: involution, then three each of boundedness, identity,
/// complementation, idempotency, commutativity, associativity,
/// distributivity and De Morgan.
pub fn laws() -> Vec<Law> {
    let table: [(&str, &str, &str); 25] = [
        ("involution", "~~~x", "x"),
        ("boundedness", "x*0", "0"),
        ("boundedness", "x+1", "1"),
        ("boundedness", "x@2", "2"),
        ("identity", "x*2", "x"),
        ("identity", "x+0", "x"),
        ("identity", "x@1", "x"),
        ("complementation", "x*~x*~~x", "0"),
        ("complementation", "x+~x+~~x", "1"),
        ("complementation", "x@~x@~~x", "2"),
        ("idempotency", "x*x", "x"),
        ("idempotency", "x+x", "x"),
        ("idempotency", "x@x", "x"),
        ("commutativity", "x*y", "y*x"),
        ("commutativity", "x+y", "y+x"),
        ("commutativity", "x@y", "y@x"),
        ("associativity", "(x*y)*z", "x*(y*z)"),
        ("associativity", "(x+y)+z", "x+(y+z)"),
        ("associativity", "(x@y)@z", "x@(y@z)"),
        ("distributivity", "x*(y+z)", "(x*y)+(x*z)"),
        ("distributivity", "x+(y@z)", "(x+y)@(x+z)"),
        ("distributivity", "x@(y*z)", "(x@y)*(x@z)"),
        ("de-morgan", "~(x*y)", "~x@~y"),
        ("de-morgan", "~(x+y)", "~x*~y"),
        ("de-morgan", "~(x@y)", "~x+~y"),
    ];
    table.iter().map(|&(f, l, r)| Law::new(f, l, r)).collect()
}

/// `x+(y*z)` against `(x+y)*(x+z)`; the two sides differ.
pub fn reversed_distributivity() -> (Law, Equivalence) {
    let law = Law::new("distributivity-reversed", "x+(y*z)", "(x+y)*(x+z)");
    let verdict = law.check();
    (law, verdict)
}
