//! The rewrite rule catalog.
//!
//! Every rule carries a representative `lhs → rhs` pattern over the variables
//! `x`, `y`, `z`. The patterns are what soundness is checked against; the
//! engine matches them modulo associativity and commutativity, with the
//! remaining spine operands passed through untouched.

use std::sync::OnceLock;

use crate::algebra::{self, Dyadic, Trit};
use crate::expr::{free_vars, parse, Assignment, Expr};
use crate::truthtab::{equivalent, Equivalence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RuleKind {
    FoldRotate(Trit),
    FoldDyadic(Dyadic, Trit, Trit),
    Bound(Dyadic),
    Identity(Dyadic),
    Idempotency(Dyadic),
    Involution,
    /// `rot^first(X)*1 @ rot^second(X)*1+2`, X not itself a rotation.
    Fusion {
        first: u8,
        second: u8,
        guarded: bool,
    },
    Complement(Dyadic),
    FilterLemma,
    DeMorgan(Dyadic),
    /// The De Morgan law read right to left, on a spine of `op.rotated()`.
    DeMorganInverse(Dyadic),
    /// Absorption in a spine of the given (outer) operator.
    Absorb(Dyadic),
    MergeSelectors,
    /// Factoring a common operand out of a spine of the given (outer) operator.
    Factor(Dyadic),
}

#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub law_ref: &'static str,
    pub(crate) kind: RuleKind,
}

impl RewriteRule {
    fn new(
        name: impl Into<String>,
        lhs: &str,
        rhs: &str,
        law_ref: &'static str,
        kind: RuleKind,
    ) -> Self {
        RewriteRule {
            name: name.into(),
            lhs: parse(lhs).expect("catalog lhs parses"),
            rhs: parse(rhs).expect("catalog rhs parses"),
            law_ref,
            kind,
        }
    }

    /// Exhaustive check of `lhs = rhs` over all trit substitutions; returns a
    /// counterexample if the rule is unsound.
    pub fn counterexample(&self) -> Option<Assignment> {
        match equivalent(&self.lhs, &self.rhs).expect("patterns have at most three variables") {
            Equivalence::Equal => None,
            Equivalence::Counterexample { env, .. } => Some(env),
        }
    }

    /// Whether every variable of `rhs` occurs in `lhs`.
    pub fn is_well_formed(&self) -> bool {
        let lhs = free_vars(&self.lhs);
        free_vars(&self.rhs).iter().all(|v| lhs.contains(v))
    }
}

fn op_name(op: Dyadic) -> &'static str {
    match op {
        Dyadic::Alpha => "alpha",
        Dyadic::Beta => "beta",
        Dyadic::Gamma => "gamma",
    }
}

fn binary(op: Dyadic, l: &str, r: &str) -> String {
    format!("({l}){}({r})", op.token())
}

// Cheapest primitive realizations of x̂, ~x̂ and ~~x̂ (five operators each,
// the minimum for these three permutations).
const REVERSE: &str = "x*1@~(x@~x)";
const ROTATE_REVERSE: &str = "(x+2)*~(x*~x)";
const ROTATE2_REVERSE: &str = "(x@0)+~(x+~x)";

fn build_catalog() -> Vec<RewriteRule> {
    use RuleKind::*;
    let mut rules = Vec::new();

    for c in Trit::ALL {
        rules.push(RewriteRule::new(
            format!("fold-rotate-{c}"),
            &format!("~{c}"),
            &algebra::rotate(c).to_string(),
            "ROTATE truth table",
            FoldRotate(c),
        ));
    }
    for op in Dyadic::ALL {
        for a in Trit::ALL {
            for b in Trit::ALL.into_iter().filter(|&b| b >= a) {
                rules.push(RewriteRule::new(
                    format!("fold-{}-{a}-{b}", op_name(op)),
                    &format!("{a}{}{b}", op.token()),
                    &op.apply(a, b).to_string(),
                    "ALPHA/BETA/GAMMA truth table",
                    FoldDyadic(op, a, b),
                ));
            }
        }
    }
    for op in Dyadic::ALL {
        rules.push(RewriteRule::new(
            format!("bound-{}", op_name(op)),
            &format!("x{}{}", op.token(), op.bound()),
            &op.bound().to_string(),
            "Boundedness",
            Bound(op),
        ));
    }
    for op in Dyadic::ALL {
        rules.push(RewriteRule::new(
            format!("identity-{}", op_name(op)),
            &format!("x{}{}", op.token(), op.identity()),
            "x",
            "Identity",
            Identity(op),
        ));
    }
    for op in Dyadic::ALL {
        rules.push(RewriteRule::new(
            format!("idempotency-{}", op_name(op)),
            &format!("x{}x", op.token()),
            "x",
            "Idempotency",
            Idempotency(op),
        ));
    }
    rules.push(RewriteRule::new(
        "involution",
        "~~~x",
        "x",
        "Involution",
        Involution,
    ));

    let fusions: [(&str, &str, &str, u8, u8, bool); 6] = [
        ("fusion-eq5", "x*1 @ ~~x*1+2", "x", 0, 2, false),
        ("fusion-eq6", "~x*1 @ x*1+2", "~x", 1, 0, false),
        ("fusion-eq7", "~~x*1 @ ~x*1+2", "~~x", 2, 1, false),
        ("fusion-eq8", "x*1 @ ~x*1+2", REVERSE, 0, 1, true),
        ("fusion-eq9", "~~x*1 @ x*1+2", ROTATE_REVERSE, 2, 0, true),
        ("fusion-eq10", "~x*1 @ ~~x*1+2", ROTATE2_REVERSE, 1, 2, true),
    ];
    for (name, lhs, rhs, first, second, guarded) in fusions {
        rules.push(RewriteRule::new(
            name,
            lhs,
            rhs,
            "Selector reconstruction of the six permutations",
            Fusion {
                first,
                second,
                guarded,
            },
        ));
    }

    for op in Dyadic::ALL {
        let t = op.token();
        rules.push(RewriteRule::new(
            format!("complement-{}", op_name(op)),
            &format!("x{t}~x{t}~~x"),
            &op.bound().to_string(),
            "Complementation",
            Complement(op),
        ));
    }
    rules.push(RewriteRule::new(
        "complement-lemma",
        "x*1 @ ~x*1 @ ~~x*1",
        "0",
        "Complementation of filters (TNAND derivation)",
        FilterLemma,
    ));

    for op in Dyadic::ALL {
        let r = op.rotated().token();
        rules.push(RewriteRule::new(
            format!("demorgan-{}", op_name(op)),
            &format!("~(x{}y)", op.token()),
            &format!("~x{r}~y"),
            "De Morgan",
            DeMorgan(op),
        ));
    }
    for op in Dyadic::ALL {
        let r = op.rotated().token();
        rules.push(RewriteRule::new(
            format!("demorgan-{}-inverse", op_name(op)),
            &format!("~x{r}~y"),
            &format!("~(x{}y)", op.token()),
            "De Morgan",
            DeMorganInverse(op),
        ));
    }

    // x @ (x + d) = x whenever d ∈ {0,1}; the other two are its rotations.
    let absorptions = [
        (Dyadic::Gamma, "x@(x+y*1)"),
        (Dyadic::Beta, "x+x*(y@0)"),
        (Dyadic::Alpha, "x*(x@(y+2))"),
    ];
    for (op, lhs) in absorptions {
        rules.push(RewriteRule::new(
            format!("absorb-{}", op_name(op)),
            lhs,
            "x",
            "Idempotency and boundedness on a two-valued operand",
            Absorb(op),
        ));
    }

    rules.push(RewriteRule::new(
        "merge-selectors",
        "(x+y*1)@(x+~y*1)@(x+~~y*1)",
        "x",
        "Distributivity with complementation of filters",
        MergeSelectors,
    ));

    for outer in [Dyadic::Beta, Dyadic::Gamma, Dyadic::Alpha] {
        let inner = Dyadic::ALL
            .into_iter()
            .find(|i| i.distributes_over() == outer)
            .unwrap();
        let (o, i) = (outer.token(), inner.token());
        rules.push(RewriteRule::new(
            format!("factor-{}-over-{}", op_name(inner), op_name(outer)),
            &binary(outer, &format!("x{i}y"), &format!("x{i}z")),
            &format!("x{i}(y{o}z)"),
            "Distributivity",
            Factor(outer),
        ));
    }

    rules
}

/// The full catalog, in application order.
pub fn rule_catalog() -> &'static [RewriteRule] {
    static CATALOG: OnceLock<Vec<RewriteRule>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn lookup(name: &str) -> Option<&'static RewriteRule> {
    rule_catalog().iter().find(|r| r.name == name)
}
