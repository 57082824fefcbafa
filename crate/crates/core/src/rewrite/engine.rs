//! Memoized innermost rewriting over canonical terms.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::rules::{rule_catalog, RewriteRule, RuleKind};
use super::term::{filter, rotated, term_cost, Term};
use crate::algebra::{Dyadic, Trit};

/// One rule application: the rule and the operator count of the rewritten
/// node before and after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: &'static str,
    pub before: usize,
    pub after: usize,
}

const FUEL: usize = 200_000;
const MAX_CUBES: usize = 512;

pub(crate) struct Engine {
    memo: HashMap<Term, Term>,
    // terms being normalized further up the stack; reaching one again is a
    // cycle through guarded candidates and is cut there
    active: HashSet<Term>,
    pub(crate) trace: Vec<TraceStep>,
    fuel: usize,
    // factoring candidates are scored by a full normalization only at the
    // outermost level; nested scoring normalizes just the factored part
    lookahead: bool,
}

impl Engine {
    pub(crate) fn new() -> Self {
        Engine {
            memo: HashMap::new(),
            active: HashSet::new(),
            trace: Vec::new(),
            fuel: FUEL,
            lookahead: true,
        }
    }

    pub(crate) fn normalize(&mut self, t: &Term) -> Term {
        if let Some(done) = self.memo.get(t) {
            return done.clone();
        }
        if !self.active.insert(t.clone()) {
            return t.clone();
        }
        let node = match t {
            Term::Const(_) | Term::Var(_) => t.clone(),
            Term::Rot(c) => Term::rot(self.normalize(c)),
            Term::Spine(op, xs) => {
                let xs: Vec<Term> = xs.iter().map(|x| self.normalize(x)).collect();
                Term::spine(*op, xs)
            }
        };
        let result = self.rewrite_top(node);
        self.active.remove(t);
        self.memo.insert(t.clone(), result.clone());
        self.memo.insert(result.clone(), result.clone());
        result
    }

    fn rewrite_top(&mut self, node: Term) -> Term {
        if self.fuel == 0 {
            return node;
        }
        for rule in rule_catalog() {
            if let Some(next) = self.apply(rule, &node) {
                self.fuel = self.fuel.saturating_sub(1);
                self.trace.push(TraceStep {
                    rule: &rule.name,
                    before: term_cost(&node),
                    after: term_cost(&next),
                });
                return self.normalize(&next);
            }
        }
        node
    }

    /// Normalizes `candidate` and keeps it only if it is strictly cheaper
    /// than `node`. Trace entries of a rejected attempt are discarded.
    fn guarded(&mut self, node: &Term, candidate: Term) -> Option<Term> {
        let mark = self.trace.len();
        let n = self.normalize(&candidate);
        self.trace.truncate(mark);
        (term_cost(&n) < term_cost(node)).then_some(n)
    }

    fn apply(&mut self, rule: &RewriteRule, node: &Term) -> Option<Term> {
        match rule.kind {
            RuleKind::FoldRotate(c) => match node {
                Term::Rot(inner) if **inner == Term::Const(c) => Some(rotated(inner, 1)),
                _ => None,
            },
            RuleKind::FoldDyadic(op, a, b) => {
                let xs = node.operands(op)?;
                if xs.len() >= 2 && xs[0] == Term::Const(a) && xs[1] == Term::Const(b) {
                    let folded = Term::Const(op.apply(a, b));
                    Some(Term::spine(
                        op,
                        std::iter::once(folded).chain(xs[2..].iter().cloned()),
                    ))
                } else {
                    None
                }
            }
            RuleKind::Bound(op) => {
                let xs = node.operands(op)?;
                xs.contains(&Term::Const(op.bound()))
                    .then(|| Term::Const(op.bound()))
            }
            RuleKind::Identity(op) => {
                let xs = node.operands(op)?;
                let id = Term::Const(op.identity());
                xs.contains(&id)
                    .then(|| Term::spine(op, xs.iter().filter(|x| **x != id).cloned()))
            }
            RuleKind::Idempotency(op) => {
                let xs = node.operands(op)?;
                if xs.windows(2).any(|w| w[0] == w[1]) {
                    let mut ys = xs.to_vec();
                    ys.dedup();
                    Some(Term::spine(op, ys))
                } else {
                    None
                }
            }
            RuleKind::Involution => match node {
                Term::Rot(a) => match &**a {
                    Term::Rot(b) => match &**b {
                        Term::Rot(c) => Some((**c).clone()),
                        _ => None,
                    },
                    _ => None,
                },
                _ => None,
            },
            RuleKind::Fusion {
                first,
                second,
                guarded,
            } => {
                let candidate = fusion(rule, node, first, second)?;
                if guarded {
                    self.guarded(node, candidate)
                } else {
                    Some(candidate)
                }
            }
            RuleKind::Complement(op) => {
                let xs = node.operands(op)?;
                let mut seen: HashMap<&Term, u8> = HashMap::new();
                for x in xs.iter().filter(|x| x.as_const().is_none()) {
                    let (base, k) = x.peel();
                    *seen.entry(base).or_default() |= 1 << k;
                }
                seen.values()
                    .any(|&m| m == 0b111)
                    .then(|| Term::Const(op.bound()))
            }
            RuleKind::FilterLemma => {
                let xs = node.operands(Dyadic::Gamma)?;
                let mut seen: HashMap<&Term, u8> = HashMap::new();
                for x in xs {
                    if let Some(e) = x.as_filter() {
                        let (base, k) = e.peel();
                        if base.as_const().is_none() {
                            *seen.entry(base).or_default() |= 1 << k;
                        }
                    }
                }
                let (base, _) = seen.into_iter().find(|&(_, m)| m == 0b111)?;
                let triple: Vec<Term> = (0..3).map(|k| filter(rotated(base, k))).collect();
                let rest = xs.iter().filter(|x| !triple.contains(x)).cloned();
                Some(Term::spine(
                    Dyadic::Gamma,
                    rest.chain(std::iter::once(Term::Const(Trit::ZERO))),
                ))
            }
            RuleKind::DeMorgan(op) => match node {
                Term::Rot(inner) => {
                    let xs = inner.operands(op)?;
                    let pushed = Term::spine(op.rotated(), xs.iter().map(|x| rotated(x, 1)));
                    self.guarded(node, pushed)
                }
                _ => None,
            },
            RuleKind::DeMorganInverse(op) => {
                let xs = node.operands(op.rotated())?;
                let (pulled, rest): (Vec<&Term>, Vec<&Term>) = xs
                    .iter()
                    .partition(|x| x.as_const().is_some() || x.peel().1 > 0);
                if pulled.iter().filter(|x| x.as_const().is_none()).count() < 2 {
                    return None;
                }
                let inner = Term::spine(op, pulled.iter().map(|x| rotated(x, 2)));
                let candidate = Term::spine(
                    op.rotated(),
                    rest.into_iter()
                        .cloned()
                        .chain(std::iter::once(Term::rot(inner))),
                );
                self.guarded(node, candidate)
            }
            RuleKind::Absorb(outer) => {
                let xs = node.operands(outer)?;
                let inner = inner_of(outer);
                let views: Vec<Vec<Term>> = xs.iter().map(|x| items(x, inner)).collect();
                let victim = (0..xs.len()).find(|&t| {
                    (0..xs.len()).any(|s| s != t && absorbs(&views[s], &views[t], inner, outer))
                })?;
                Some(Term::spine(
                    outer,
                    xs.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != victim)
                        .map(|(_, x)| x.clone()),
                ))
            }
            RuleKind::MergeSelectors => {
                let xs = node.operands(Dyadic::Gamma)?;
                let merged = merge_selectors(xs)?;
                self.guarded(node, merged)
            }
            RuleKind::Factor(outer) => {
                let xs = node.operands(outer)?;
                let limit = term_cost(node);
                let mut best: Option<(usize, Term)> = None;
                let deep = std::mem::replace(&mut self.lookahead, false);
                for (rest, factored) in factorings(xs, outer) {
                    let mark = self.trace.len();
                    let f = self.normalize(&factored);
                    let mut t = Term::spine(outer, rest.into_iter().chain(std::iter::once(f)));
                    if deep {
                        t = self.normalize(&t);
                    }
                    self.trace.truncate(mark);
                    let c = term_cost(&t);
                    if c < limit && best.as_ref().is_none_or(|(b, _)| c < *b) {
                        best = Some((c, t));
                    }
                }
                self.lookahead = deep;
                best.map(|(_, t)| t)
            }
        }
    }
}

/// The operator whose factoring out of an `outer` spine is sound.
fn inner_of(outer: Dyadic) -> Dyadic {
    Dyadic::ALL
        .into_iter()
        .find(|i| i.distributes_over() == outer)
        .unwrap()
}

fn items(t: &Term, op: Dyadic) -> Vec<Term> {
    match t {
        Term::Spine(o, xs) if *o == op => xs.clone(),
        other => vec![other.clone()],
    }
}

fn is_sub_multiset(small: &[Term], large: &[Term]) -> bool {
    let mut it = large.iter();
    small.iter().all(|s| it.any(|l| l == s))
}

fn difference(large: &[Term], small: &[Term]) -> Vec<Term> {
    let mut out = Vec::new();
    let mut rest = small.iter().peekable();
    for l in large {
        if rest.peek() == Some(&l) {
            rest.next();
        } else {
            out.push(l.clone());
        }
    }
    out
}

/// `s outer (s inner d) = s` when d avoids the outer bound.
fn absorbs(s: &[Term], t: &[Term], inner: Dyadic, outer: Dyadic) -> bool {
    if s.len() >= t.len() || !is_sub_multiset(s, t) {
        return false;
    }
    let d = Term::spine(inner, difference(t, s));
    d.range() & (1 << outer.bound().value()) == 0
}

fn fusion(rule: &RewriteRule, node: &Term, first: u8, second: u8) -> Option<Term> {
    let xs = node.operands(Dyadic::Gamma)?;
    for (i, a) in xs.iter().enumerate() {
        let Some((base, k)) = a.as_filter().map(Term::peel) else {
            continue;
        };
        if k != first || base.as_const().is_some() {
            continue;
        }
        for (j, b) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let Some(bs) = b.operands(Dyadic::Beta) else {
                continue;
            };
            if bs.len() != 2 || bs[0] != Term::Const(Trit::TWO) {
                continue;
            }
            let Some((base2, k2)) = bs[1].as_filter().map(Term::peel) else {
                continue;
            };
            if base2 != base || k2 != second {
                continue;
            }
            let x = base.to_expr();
            let replacement = rule
                .rhs
                .substitute(&|v: &str| (v == "x").then(|| x.clone()));
            let rest = xs
                .iter()
                .enumerate()
                .filter(|&(n, _)| n != i && n != j)
                .map(|(_, t)| t.clone());
            return Some(Term::spine(
                Dyadic::Gamma,
                rest.chain(std::iter::once(Term::from_expr(&replacement))),
            ));
        }
    }
    None
}

/// Summands of `e` under `op`, looking through rotations of other operators
/// by De Morgan (`~~(x*y)` is `~~x+~~y`).
fn summands(e: &Term, op: Dyadic, out: &mut Vec<Term>) {
    let (base, k) = e.peel();
    match base {
        Term::Spine(inner, xs) if (0..k).fold(*inner, |o, _| o.rotated()) == op => {
            for x in xs {
                summands(&rotated(x, k), op, out);
            }
        }
        _ => out.push(e.clone()),
    }
}

/// A GAMMA operand as a set of BETA items, filters of BETA sums split into
/// filters of the summands.
fn cube(t: &Term) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    if *t == Term::Const(Trit::ZERO) {
        return out;
    }
    let mut top = Vec::new();
    summands(t, Dyadic::Beta, &mut top);
    for item in top {
        match item.as_filter() {
            Some(e) => {
                let mut parts = Vec::new();
                summands(e, Dyadic::Beta, &mut parts);
                out.extend(parts.into_iter().map(filter));
            }
            None => {
                out.insert(item);
            }
        }
    }
    out
}

/// Combines `R + f(b)`, `R + f(~b)`, `R + f(~~b)` into `R`, closes under
/// that step, then drops every cube absorbed by a smaller one.
fn merge_selectors(xs: &[Term]) -> Option<Term> {
    let mut cubes: BTreeSet<BTreeSet<Term>> = xs.iter().map(cube).collect();
    let mut merged_any = false;
    loop {
        let mut fresh = Vec::new();
        for c in &cubes {
            for lit in c {
                let Some(e) = lit.as_filter() else { continue };
                let (base, k) = e.peel();
                if k != 0 || base.as_const().is_some() {
                    continue;
                }
                let mut rest = c.clone();
                rest.remove(lit);
                let sibling = |n: u8| {
                    let mut s = rest.clone();
                    s.insert(filter(rotated(base, n)));
                    s
                };
                if cubes.contains(&sibling(1))
                    && cubes.contains(&sibling(2))
                    && !cubes.contains(&rest)
                {
                    fresh.push(rest);
                }
            }
        }
        if fresh.is_empty() || cubes.len() > MAX_CUBES {
            break;
        }
        merged_any = true;
        cubes.extend(fresh);
    }
    if !merged_any {
        return None;
    }
    let list: Vec<Vec<Term>> = cubes.iter().map(|c| c.iter().cloned().collect()).collect();
    let kept = (0..list.len()).filter(|&t| {
        !(0..list.len()).any(|s| s != t && absorbs(&list[s], &list[t], Dyadic::Beta, Dyadic::Gamma))
    });
    let terms: Vec<Term> = kept
        .map(|i| Term::spine(Dyadic::Beta, list[i].clone()))
        .collect();
    Some(Term::spine(Dyadic::Gamma, terms))
}

/// Every way of pulling one shared item out of an `outer` spine, as the
/// untouched operands and the factored term.
fn factorings(xs: &[Term], outer: Dyadic) -> Vec<(Vec<Term>, Term)> {
    let inner = inner_of(outer);
    let views: Vec<Vec<Term>> = xs
        .iter()
        .map(|x| match outer {
            Dyadic::Gamma => cube(x).into_iter().collect(),
            _ => items(x, inner),
        })
        .collect();
    let shared: BTreeSet<&Term> = views
        .iter()
        .flatten()
        .filter(|u| views.iter().filter(|v| v.contains(u)).count() >= 2)
        .collect();
    shared
        .into_iter()
        .map(|u| {
            let (with, without): (Vec<usize>, Vec<usize>) =
                (0..xs.len()).partition(|&i| views[i].contains(u));
            let remainders = with.iter().map(|&i| {
                let mut v = views[i].clone();
                let pos = v.iter().position(|t| t == u).unwrap();
                v.remove(pos);
                Term::spine(inner, v)
            });
            let factored = Term::spine(inner, [u.clone(), Term::spine(outer, remainders)]);
            (
                without.into_iter().map(|i| xs[i].clone()).collect(),
                factored,
            )
        })
        .collect()
}
