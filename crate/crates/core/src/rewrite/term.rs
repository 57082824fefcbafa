//! AC-canonical terms.
//!
//! Each dyadic operator is associative and commutative, so nested chains of
//! one operator are flattened into an n-ary spine whose operands are sorted:
//! constants by value, then variables by name, then rotations, then spines
//! (by operator, then operand-wise).

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{self, Dyadic, Trit};
use crate::expr::{pretty_print, Expr};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(Trit),
    Var(String),
    Rot(Box<Term>),
    /// At least two sorted operands, none of them a spine of the same operator.
    Spine(Dyadic, Vec<Term>),
}

impl Term {
    pub fn rot(t: Term) -> Term {
        Term::Rot(Box::new(t))
    }

    /// Builds a spine, flattening nested spines of `op` and sorting. An empty
    /// spine is the operator's identity; a single operand stands for itself.
    pub fn spine(op: Dyadic, operands: impl IntoIterator<Item = Term>) -> Term {
        let mut flat = Vec::new();
        for t in operands {
            match t {
                Term::Spine(inner, xs) if inner == op => flat.extend(xs),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Term::Const(op.identity()),
            1 => flat.pop().unwrap(),
            _ => {
                flat.sort();
                Term::Spine(op, flat)
            }
        }
    }

    pub fn from_expr(e: &Expr) -> Term {
        match e {
            Expr::Const(t) => Term::Const(*t),
            Expr::Var(name) => Term::Var(name.clone()),
            Expr::Rotate(c) => Term::rot(Term::from_expr(c)),
            Expr::Alpha(l, r) | Expr::Beta(l, r) | Expr::Gamma(l, r) => {
                let op = e.as_dyadic().unwrap().0;
                Term::spine(op, [Term::from_expr(l), Term::from_expr(r)])
            }
        }
    }

    /// Binary expression, spines left-nested with constants moved last so
    /// filters read `x*1` rather than `1*x`.
    pub fn to_expr(&self) -> Expr {
        match self {
            Term::Const(t) => Expr::Const(*t),
            Term::Var(name) => Expr::Var(name.clone()),
            Term::Rot(c) => Expr::rotate(c.to_expr()),
            Term::Spine(op, xs) => presentation_order(xs)
                .map(Term::to_expr)
                .reduce(|l, r| Expr::dyadic(*op, l, r))
                .unwrap(),
        }
    }

    pub fn as_const(&self) -> Option<Trit> {
        match self {
            Term::Const(t) => Some(*t),
            _ => None,
        }
    }

    pub fn operands(&self, op: Dyadic) -> Option<&[Term]> {
        match self {
            Term::Spine(o, xs) if *o == op => Some(xs),
            _ => None,
        }
    }

    /// Strips leading rotations: `~~x` is `(x, 2)`.
    pub fn peel(&self) -> (&Term, u8) {
        let mut t = self;
        let mut n = 0u8;
        while let Term::Rot(c) = t {
            t = c;
            n = (n + 1) % 3;
        }
        (t, n)
    }

    /// The operand of a filter `e * 1`.
    pub fn as_filter(&self) -> Option<&Term> {
        match self {
            Term::Spine(Dyadic::Alpha, xs) if xs.len() == 2 && xs[0] == Term::Const(Trit::ONE) => {
                Some(&xs[1])
            }
            _ => None,
        }
    }

    /// Set of values the term can take, as a bit mask over {0, 1, 2}.
    pub fn range(&self) -> u8 {
        match self {
            Term::Const(t) => 1 << t.value(),
            Term::Var(_) => 0b111,
            Term::Rot(c) => {
                let m = c.range();
                Trit::ALL
                    .iter()
                    .filter(|t| m & (1 << t.value()) != 0)
                    .fold(0, |acc, &t| acc | 1 << algebra::rotate(t).value())
            }
            Term::Spine(op, xs) => xs
                .iter()
                .map(Term::range)
                .reduce(|a, b| combine_ranges(*op, a, b))
                .unwrap(),
        }
    }
}

pub(crate) fn combine_ranges(op: Dyadic, a: u8, b: u8) -> u8 {
    let mut out = 0;
    for x in Trit::ALL.iter().filter(|t| a & (1 << t.value()) != 0) {
        for y in Trit::ALL.iter().filter(|t| b & (1 << t.value()) != 0) {
            out |= 1 << op.apply(*x, *y).value();
        }
    }
    out
}

fn presentation_order(xs: &[Term]) -> impl Iterator<Item = &Term> {
    xs.iter()
        .filter(|t| t.as_const().is_none())
        .chain(xs.iter().filter(|t| t.as_const().is_some()))
}

/// `base` under `times` rotations, folding constants.
pub fn rotated(base: &Term, times: u8) -> Term {
    match base {
        Term::Const(t) => Term::Const(algebra::rotate_n(*t, times)),
        _ => {
            let (inner, n) = base.peel();
            let mut t = inner.clone();
            for _ in 0..(n + times) % 3 {
                t = Term::rot(t);
            }
            t
        }
    }
}

pub fn filter(e: Term) -> Term {
    Term::spine(Dyadic::Alpha, [Term::Const(Trit::ONE), e])
}

#[derive(Hash, PartialEq, Eq)]
enum Node {
    Leaf(usize),
    Rot(usize),
    Bin(Dyadic, usize, usize),
}

/// Hash-consed operator count of `to_expr()`, computed without building it.
pub(crate) fn term_cost(t: &Term) -> usize {
    struct Interner<'a> {
        ids: HashMap<Node, usize>,
        leaves: HashMap<&'a Term, usize>,
        operators: usize,
    }
    impl<'a> Interner<'a> {
        fn node(&mut self, n: Node) -> usize {
            let next = self.ids.len();
            let is_op = !matches!(n, Node::Leaf(_));
            let id = *self.ids.entry(n).or_insert(next);
            if id == next && is_op {
                self.operators += 1;
            }
            id
        }
        fn visit(&mut self, t: &'a Term) -> usize {
            match t {
                Term::Const(_) | Term::Var(_) => {
                    let next = self.leaves.len();
                    let leaf = *self.leaves.entry(t).or_insert(next);
                    self.node(Node::Leaf(leaf))
                }
                Term::Rot(c) => {
                    let c = self.visit(c);
                    self.node(Node::Rot(c))
                }
                Term::Spine(op, xs) => {
                    let mut it = presentation_order(xs);
                    let mut acc = self.visit(it.next().unwrap());
                    for x in it {
                        let r = self.visit(x);
                        acc = self.node(Node::Bin(*op, acc, r));
                    }
                    acc
                }
            }
        }
    }
    let mut interner = Interner {
        ids: HashMap::new(),
        leaves: HashMap::new(),
        operators: 0,
    };
    interner.visit(t);
    interner.operators
}

/// An expression in AC-canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm(Term);

impl NormalForm {
    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn into_term(self) -> Term {
        self.0
    }

    pub fn to_expr(&self) -> Expr {
        self.0.to_expr()
    }

    /// Top-level spine, if the form is a dyadic node.
    pub fn spine(&self) -> Option<(Dyadic, &[Term])> {
        match &self.0 {
            Term::Spine(op, xs) => Some((*op, xs)),
            _ => None,
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_print(&self.to_expr()))
    }
}

/// Flattens and sorts every associative-commutative chain. Semantics are
/// unchanged and `canonicalize(canonicalize(e).to_expr()) == canonicalize(e)`.
pub fn canonicalize(e: &Expr) -> NormalForm {
    NormalForm(Term::from_expr(e))
}
