//! Exhaustive truth tables of n-ary ternary functions.
//!
//! Rows are stored in canonical order: row `i` holds the output for inputs
//! `(x_1, ..., x_n)` with `i = Σ x_k · 3^(n-k)`, so `x_1` is the most
//! significant digit. For two inputs the rows run 00, 01, 02, 10, ..., 22.
//!
//! Two text formats are accepted by [`parse_table`]:
//!
//! ```text
//! vars: x y          vars: x y
//! 222211210          0 0 -> 2
//!                    0 1 -> 2
//!                    ...
//! ```
//!
//! The compact form (left) lists all `3^n` outputs in row order; the row form
//! (right) lists every row exactly once, in any order.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{self, Trit};
use crate::expr::{free_vars, Assignment, Expr};

/// Default cap on the number of inputs for exhaustive enumeration.
pub const DEFAULT_MAX_ARITY: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("arity {arity} exceeds the limit of {limit} inputs")]
    ArityLimit { arity: usize, limit: usize },
    #[error("variable `{0}` is not in the variable order")]
    MissingVariable(String),
    #[error("variable `{0}` appears twice in the variable order")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("line {line}: missing `vars:` header")]
    MissingHeader { line: usize },
    #[error("line {line}: invalid character {found:?}")]
    InvalidChar { line: usize, found: char },
    #[error("expected {expected} outputs, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("line {line}: expected {expected} inputs, found {found}")]
    WrongRowWidth {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: malformed row, expected `i1 ... in -> o`")]
    MalformedRow { line: usize },
    #[error("line {line}: duplicate row {row}")]
    DuplicateRow { line: usize, row: String },
    #[error("missing row {0}")]
    MissingRow(String),
}

/// Output trits of an n-ary function, in canonical row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    vars: Vec<String>,
    outputs: Vec<Trit>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn row_count(arity: usize) -> usize {
    3usize.pow(arity as u32)
}

/// Input digits of row `index`, most significant first.
pub fn decode_row(mut index: usize, arity: usize) -> Vec<Trit> {
    let mut digits = vec![Trit::ZERO; arity];
    for slot in digits.iter_mut().rev() {
        *slot = Trit::try_from((index % 3) as u8).unwrap();
        index /= 3;
    }
    digits
}

pub fn encode_row(inputs: &[Trit]) -> usize {
    inputs.iter().fold(0, |acc, t| acc * 3 + t.index())
}

impl TruthTable {
    pub fn new(vars: Vec<String>, outputs: Vec<Trit>) -> Result<Self, TableError> {
        check_vars(&vars)?;
        let expected = row_count(vars.len());
        if outputs.len() != expected {
            return Err(TableError::WrongLength {
                expected,
                found: outputs.len(),
            });
        }
        Ok(TruthTable { vars, outputs })
    }

    /// Builds a table from a closure over the input digits of each row.
    pub fn from_fn(
        vars: Vec<String>,
        mut f: impl FnMut(&[Trit]) -> Trit,
    ) -> Result<Self, TableError> {
        check_vars(&vars)?;
        let n = vars.len();
        let outputs = (0..row_count(n)).map(|i| f(&decode_row(i, n))).collect();
        Ok(TruthTable { vars, outputs })
    }

    /// Shorthand for tests and fixtures: `("x y", "222211210")`.
    pub fn from_digits(vars: &str, digits: &str) -> Result<Self, TableError> {
        let vars = vars.split_whitespace().map(str::to_string).collect();
        let outputs = digits
            .chars()
            .map(|c| Trit::from_char(c).ok_or(TableError::InvalidChar { line: 1, found: c }))
            .collect::<Result<_, _>>()?;
        TruthTable::new(vars, outputs)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn outputs(&self) -> &[Trit] {
        &self.outputs
    }

    pub fn output(&self, row: usize) -> Trit {
        self.outputs[row]
    }

    pub fn assignment(&self, row: usize) -> Assignment {
        self.vars
            .iter()
            .cloned()
            .zip(decode_row(row, self.arity()))
            .collect()
    }

    /// Outputs as a digit string, e.g. `"210"`.
    pub fn digits(&self) -> String {
        self.outputs.iter().map(|t| t.to_char()).collect()
    }

    /// Pointwise application of a monadic function to the outputs.
    pub fn map(&self, f: impl Fn(Trit) -> Trit) -> TruthTable {
        TruthTable {
            vars: self.vars.clone(),
            outputs: self.outputs.iter().map(|&t| f(t)).collect(),
        }
    }

    /// Row-format text, one `i1 ... in -> o` line per row.
    pub fn to_rows_string(&self) -> String {
        let mut out = header(&self.vars);
        for (i, o) in self.outputs.iter().enumerate() {
            out.push('\n');
            let inputs: Vec<String> = decode_row(i, self.arity())
                .iter()
                .map(|t| t.to_string())
                .collect();
            out.push_str(&inputs.join(" "));
            if !inputs.is_empty() {
                out.push(' ');
            }
            out.push_str("-> ");
            out.push(o.to_char());
        }
        out
    }
}

fn header(vars: &[String]) -> String {
    if vars.is_empty() {
        "vars:".to_string()
    } else {
        format!("vars: {}", vars.join(" "))
    }
}

/// Compact format: `vars: x y` then the output digits.
impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", header(&self.vars), self.digits())
    }
}

fn check_vars(vars: &[String]) -> Result<(), TableError> {
    for (i, v) in vars.iter().enumerate() {
        if !is_identifier(v) {
            return Err(TableError::InvalidName(v.clone()));
        }
        if vars[..i].contains(v) {
            return Err(TableError::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

/// Flat post-order program used for fast repeated evaluation.
enum Step {
    Const(Trit),
    Input(usize),
    Rotate(usize),
    Alpha(usize, usize),
    Beta(usize, usize),
    Gamma(usize, usize),
}

pub(crate) struct Compiled {
    steps: Vec<Step>,
}

impl Compiled {
    pub(crate) fn new(e: &Expr, vars: &[String]) -> Result<Self, TableError> {
        let index: HashMap<&str, usize> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut steps = Vec::new();
        compile(e, &index, &mut steps)?;
        Ok(Compiled { steps })
    }

    pub(crate) fn eval(&self, inputs: &[Trit], scratch: &mut Vec<Trit>) -> Trit {
        scratch.clear();
        for step in &self.steps {
            let v = match *step {
                Step::Const(t) => t,
                Step::Input(i) => inputs[i],
                Step::Rotate(a) => algebra::rotate(scratch[a]),
                Step::Alpha(a, b) => algebra::alpha(scratch[a], scratch[b]),
                Step::Beta(a, b) => algebra::beta(scratch[a], scratch[b]),
                Step::Gamma(a, b) => algebra::gamma(scratch[a], scratch[b]),
            };
            scratch.push(v);
        }
        *scratch.last().unwrap()
    }
}

fn compile(
    e: &Expr,
    index: &HashMap<&str, usize>,
    steps: &mut Vec<Step>,
) -> Result<usize, TableError> {
    let step = match e {
        Expr::Const(t) => Step::Const(*t),
        Expr::Var(name) => Step::Input(
            *index
                .get(name.as_str())
                .ok_or_else(|| TableError::MissingVariable(name.clone()))?,
        ),
        Expr::Rotate(c) => Step::Rotate(compile(c, index, steps)?),
        Expr::Alpha(l, r) => Step::Alpha(compile(l, index, steps)?, compile(r, index, steps)?),
        Expr::Beta(l, r) => Step::Beta(compile(l, index, steps)?, compile(r, index, steps)?),
        Expr::Gamma(l, r) => Step::Gamma(compile(l, index, steps)?, compile(r, index, steps)?),
    };
    steps.push(step);
    Ok(steps.len() - 1)
}

/// Exhaustive table of `e` over `var_order`, capped at [`DEFAULT_MAX_ARITY`].
pub fn table_of(e: &Expr, var_order: &[String]) -> Result<TruthTable, TableError> {
    table_of_with_limit(e, var_order, DEFAULT_MAX_ARITY)
}

pub fn table_of_with_limit(
    e: &Expr,
    var_order: &[String],
    max_arity: usize,
) -> Result<TruthTable, TableError> {
    if var_order.len() > max_arity {
        return Err(TableError::ArityLimit {
            arity: var_order.len(),
            limit: max_arity,
        });
    }
    check_vars(var_order)?;
    let program = Compiled::new(e, var_order)?;
    let mut scratch = Vec::new();
    TruthTable::from_fn(var_order.to_vec(), |inputs| {
        program.eval(inputs, &mut scratch)
    })
}

/// Table over `free_vars(e)` in sorted order.
pub fn table_of_free(e: &Expr) -> Result<TruthTable, TableError> {
    table_of(e, &free_vars(e))
}

/// Result of an exhaustive equivalence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    Counterexample {
        env: Assignment,
        left: Trit,
        right: Trit,
    },
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

/// `EQUAL`, or `x=.. y=.. : a=.. b=..` for a counterexample.
impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equivalence::Equal => f.write_str("EQUAL"),
            Equivalence::Counterexample { env, left, right } => {
                if env.is_empty() {
                    write!(f, ": a={left} b={right}")
                } else {
                    write!(f, "{env} : a={left} b={right}")
                }
            }
        }
    }
}

fn union_vars(a: &Expr, b: &Expr) -> Vec<String> {
    let mut vars = free_vars(a);
    vars.extend(free_vars(b));
    vars.sort();
    vars.dedup();
    vars
}

/// Compares `a` and `b` over the union of their free variables and reports
/// the least-index differing row.
pub fn equivalent(a: &Expr, b: &Expr) -> Result<Equivalence, TableError> {
    equivalent_with_limit(a, b, DEFAULT_MAX_ARITY)
}

pub fn equivalent_with_limit(
    a: &Expr,
    b: &Expr,
    max_arity: usize,
) -> Result<Equivalence, TableError> {
    let vars = union_vars(a, b);
    if vars.len() > max_arity {
        return Err(TableError::ArityLimit {
            arity: vars.len(),
            limit: max_arity,
        });
    }
    let (pa, pb) = (Compiled::new(a, &vars)?, Compiled::new(b, &vars)?);
    let mut scratch = Vec::new();
    for row in 0..row_count(vars.len()) {
        let inputs = decode_row(row, vars.len());
        let (left, right) = (
            pa.eval(&inputs, &mut scratch),
            pb.eval(&inputs, &mut scratch),
        );
        if left != right {
            let env = vars.iter().cloned().zip(inputs).collect();
            return Ok(Equivalence::Counterexample { env, left, right });
        }
    }
    Ok(Equivalence::Equal)
}

/// Checks that `e` realizes `table` (over the table's own variable order).
pub fn realizes(e: &Expr, table: &TruthTable) -> Result<bool, TableError> {
    Ok(table_of(e, table.vars())? == *table)
}

/// Parses either text format; see the module docs.
pub fn parse_table(text: &str) -> Result<TruthTable, TableError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, first) = lines.next().ok_or(TableError::MissingHeader { line: 1 })?;
    let vars: Vec<String> = first
        .strip_prefix("vars:")
        .ok_or(TableError::MissingHeader { line: line_no })?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    check_vars(&vars)?;
    let n = vars.len();
    let body: Vec<(usize, &str)> = lines.collect();

    if body.iter().any(|(_, l)| l.contains("->")) {
        parse_rows(vars, &body)
    } else {
        let mut outputs = Vec::with_capacity(row_count(n));
        for (line, l) in &body {
            for c in l.chars().filter(|c| !c.is_whitespace()) {
                outputs.push(Trit::from_char(c).ok_or(TableError::InvalidChar {
                    line: *line,
                    found: c,
                })?);
            }
        }
        TruthTable::new(vars, outputs)
    }
}

fn parse_rows(vars: Vec<String>, body: &[(usize, &str)]) -> Result<TruthTable, TableError> {
    let n = vars.len();
    let mut outputs: Vec<Option<Trit>> = vec![None; row_count(n)];
    for &(line, text) in body {
        let (lhs, rhs) = text
            .split_once("->")
            .ok_or(TableError::MalformedRow { line })?;
        let inputs = lhs
            .split_whitespace()
            .map(|tok| parse_trit_token(tok, line))
            .collect::<Result<Vec<_>, _>>()?;
        if inputs.len() != n {
            return Err(TableError::WrongRowWidth {
                line,
                expected: n,
                found: inputs.len(),
            });
        }
        let mut out = rhs.split_whitespace();
        let output = match (out.next(), out.next()) {
            (Some(tok), None) => parse_trit_token(tok, line)?,
            _ => return Err(TableError::MalformedRow { line }),
        };
        let slot = &mut outputs[encode_row(&inputs)];
        if slot.is_some() {
            return Err(TableError::DuplicateRow {
                line,
                row: row_label(&inputs),
            });
        }
        *slot = Some(output);
    }
    let outputs = outputs
        .into_iter()
        .enumerate()
        .map(|(i, o)| o.ok_or_else(|| TableError::MissingRow(row_label(&decode_row(i, n)))))
        .collect::<Result<_, _>>()?;
    TruthTable::new(vars, outputs)
}

fn parse_trit_token(tok: &str, line: usize) -> Result<Trit, TableError> {
    let mut chars = tok.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Trit::from_char(c).ok_or(TableError::InvalidChar { line, found: c }),
        (Some(_), Some(c)) => Err(TableError::InvalidChar { line, found: c }),
        _ => Err(TableError::MalformedRow { line }),
    }
}

fn row_label(inputs: &[Trit]) -> String {
    let s: Vec<String> = inputs.iter().map(|t| t.to_string()).collect();
    format!("({})", s.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn names(vs: &[&str]) -> Vec<String> {
        vs.iter().map(|s| s.to_string()).collect()
    }

    fn digits(e: &str, vars: &[&str]) -> String {
        table_of(&parse(e).unwrap(), &names(vars)).unwrap().digits()
    }

    #[test]
    fn tables_of_expressions() {
        assert_eq!(digits("~x", &["x"]), "201");
        assert_eq!(digits("x*y", &["x", "y"]), "000011012");
        assert_eq!(digits("0", &[]), "0");
        // unused variables are allowed
        assert_eq!(digits("x", &["x", "y"]), "000111222");
    }

    #[test]
    fn table_errors() {
        let e = parse("x*y").unwrap();
        assert_eq!(
            table_of(&e, &names(&["x"])),
            Err(TableError::MissingVariable("y".into()))
        );
        let many: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
        assert_eq!(
            table_of(&parse("v0").unwrap(), &many),
            Err(TableError::ArityLimit {
                arity: 13,
                limit: 12
            })
        );
        assert_eq!(
            table_of(&e, &names(&["x", "y", "x"])),
            Err(TableError::DuplicateVariable("x".into()))
        );
    }

    #[test]
    fn row_codec() {
        assert_eq!(encode_row(&decode_row(17, 3)), 17);
        assert_eq!(
            decode_row(5, 2),
            vec![Trit::ONE, Trit::TWO],
            "row 5 of a dyadic table is (1,2)"
        );
    }

    #[test]
    fn equivalence() {
        let eq = |a: &str, b: &str| equivalent(&parse(a).unwrap(), &parse(b).unwrap()).unwrap();
        assert_eq!(eq("x@1", "x"), Equivalence::Equal);
        assert_eq!(
            eq("x", "y"),
            Equivalence::Counterexample {
                env: Assignment::new().with("x", Trit::ZERO).with("y", Trit::ONE),
                left: Trit::ZERO,
                right: Trit::ONE,
            }
        );
        assert_eq!(eq("x", "y").to_string(), "x=0 y=1 : a=0 b=1");
        assert_eq!(eq("0", "1").to_string(), ": a=0 b=1");
    }

    #[test]
    fn reversed_distributivity_witness() {
        let a = parse("x+(y*z)").unwrap();
        let b = parse("(x+y)*(x+z)").unwrap();
        // brute force for the least row index
        let vars = names(&["x", "y", "z"]);
        let least = (0..27)
            .find(|&i| {
                let env: Assignment = vars.iter().cloned().zip(decode_row(i, 3)).collect();
                crate::expr::evaluate(&a, &env) != crate::expr::evaluate(&b, &env)
            })
            .unwrap();
        assert_eq!(decode_row(least, 3), vec![Trit::TWO, Trit::ZERO, Trit::ONE]);
        match equivalent(&a, &b).unwrap() {
            Equivalence::Counterexample { env, left, right } => {
                assert_eq!(env.to_string(), "x=2 y=0 z=1");
                assert_eq!((left, right), (Trit::TWO, Trit::ONE));
            }
            Equivalence::Equal => panic!("distributivity in this direction must fail"),
        }
    }

    #[test]
    fn compact_format() {
        let t = parse_table("vars: x\n210").unwrap();
        assert_eq!(t, TruthTable::from_digits("x", "210").unwrap());
        assert_eq!(t.to_string(), "vars: x\n210");
        assert_eq!(
            parse_table("vars: x\n21"),
            Err(TableError::WrongLength {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            parse_table("vars: x\n2a0"),
            Err(TableError::InvalidChar {
                line: 2,
                found: 'a'
            })
        );
        assert_eq!(parse_table("vars:\n1").unwrap().outputs(), &[Trit::ONE]);
        assert_eq!(
            parse_table("210"),
            Err(TableError::MissingHeader { line: 1 })
        );
    }

    const TNAND_ROWS: &str = "vars: x y
0 0 -> 2
0 1 -> 2
0 2 -> 2
1 0 -> 2
1 1 -> 1
1 2 -> 1
2 0 -> 2
2 1 -> 1
2 2 -> 0";

    #[test]
    fn row_format() {
        let t = parse_table(TNAND_ROWS).unwrap();
        assert_eq!(t.digits(), "222211210");
        assert_eq!(parse_table(&t.to_rows_string()).unwrap(), t);
    }

    #[test]
    fn row_format_errors() {
        let missing: String = TNAND_ROWS.lines().take(9).collect::<Vec<_>>().join("\n");
        assert_eq!(
            parse_table(&missing),
            Err(TableError::MissingRow("(2,2)".into()))
        );
        let dup = format!("{TNAND_ROWS}\n0 1 -> 0");
        assert_eq!(
            parse_table(&dup),
            Err(TableError::DuplicateRow {
                line: 11,
                row: "(0,1)".into()
            })
        );
        assert_eq!(
            parse_table("vars: x y\n0 -> 1"),
            Err(TableError::WrongRowWidth {
                line: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_table("vars: x\n0 -> 3\n1 -> 0\n2 -> 0"),
            Err(TableError::InvalidChar {
                line: 2,
                found: '3'
            })
        );
        assert_eq!(
            parse_table("vars: x\n0 -> 1 2\n1 -> 0\n2 -> 0"),
            Err(TableError::MalformedRow { line: 2 })
        );
    }
}
