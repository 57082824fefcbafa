//! Rule-based simplification.

mod engine;
mod rules;
mod term;

use std::collections::HashSet;

pub use engine::TraceStep;
pub use rules::{lookup, rule_catalog, RewriteRule};
pub use term::{canonicalize, NormalForm, Term};

use crate::expr::{pretty_print, Expr};
use engine::Engine;

pub const DEFAULT_BUDGET: usize = 32;

/// Operator nodes of the hash-consed DAG of `e`; constants and variables are
/// free and structurally equal subtrees are counted once.
pub fn cost(e: &Expr) -> usize {
    fn walk<'a>(e: &'a Expr, seen: &mut HashSet<&'a Expr>) {
        if !e.is_operator() || !seen.insert(e) {
            return;
        }
        match e {
            Expr::Rotate(c) => walk(c, seen),
            Expr::Alpha(l, r) | Expr::Beta(l, r) | Expr::Gamma(l, r) => {
                walk(l, seen);
                walk(r, seen);
            }
            Expr::Const(_) | Expr::Var(_) => {}
        }
    }
    let mut seen = HashSet::new();
    walk(e, &mut seen);
    seen.len()
}

#[derive(Clone, Debug)]
pub struct Simplified {
    pub expr: Expr,
    pub steps: Vec<TraceStep>,
    pub passes: usize,
}

/// Simplifies `e` with at most `budget` passes (at least one is run).
pub fn simplify(e: &Expr, budget: usize) -> Expr {
    simplify_traced(e, budget).expr
}

pub fn simplify_traced(e: &Expr, budget: usize) -> Simplified {
    let mut engine = Engine::new();
    let mut best = (cost(e), pretty_print(e), e.clone());
    let mut current = canonicalize(e).into_term();
    let mut passes = 0;
    for _ in 0..budget.max(1) {
        passes += 1;
        let next = canonicalize(&engine.normalize(&current).to_expr()).into_term();
        let expr = next.to_expr();
        let candidate = (cost(&expr), pretty_print(&expr), expr);
        if (candidate.0, &candidate.1) < (best.0, &best.1) {
            best = candidate;
        }
        if next == current {
            break;
        }
        current = next;
    }
    Simplified {
        expr: best.2,
        steps: engine.trace,
        passes,
    }
}
