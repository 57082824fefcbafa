//! Named ternary gates with reference tables and hand-derived expressions.

mod census;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::PermOp;
use crate::expr::{parse, pretty_print, Expr};
use crate::netlist::{lower, Netlist};
use crate::rewrite::{cost, simplify, DEFAULT_BUDGET};
use crate::synth::synthesize;
use crate::truthtab::{equivalent, table_of, TruthTable};

pub use census::{monadic_census, Census, CensusForm, PRINTED_TABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellName {
    Sti,
    Nti,
    Pti,
    Tand,
    Tor,
    Tnand,
    Tnor,
    ThaCarry,
    ThaSum,
    Reverse,
    Rot,
    Rot2,
}

impl CellName {
    pub const ALL: [CellName; 12] = [
        CellName::Sti,
        CellName::Nti,
        CellName::Pti,
        CellName::Tand,
        CellName::Tor,
        CellName::Tnand,
        CellName::Tnor,
        CellName::ThaCarry,
        CellName::ThaSum,
        CellName::Reverse,
        CellName::Rot,
        CellName::Rot2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CellName::Sti => "STI",
            CellName::Nti => "NTI",
            CellName::Pti => "PTI",
            CellName::Tand => "TAND",
            CellName::Tor => "TOR",
            CellName::Tnand => "TNAND",
            CellName::Tnor => "TNOR",
            CellName::ThaCarry => "THA_CARRY",
            CellName::ThaSum => "THA_SUM",
            CellName::Reverse => "REVERSE",
            CellName::Rot => "ROT",
            CellName::Rot2 => "ROT2",
        }
    }
}

impl fmt::Display for CellName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown cell {0:?}")]
pub struct UnknownCell(pub String);

impl FromStr for CellName {
    type Err = UnknownCell;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.to_ascii_uppercase().replace('-', "_");
        CellName::ALL
            .into_iter()
            .find(|c| c.as_str() == wanted)
            .ok_or_else(|| UnknownCell(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct StdCell {
    pub name: CellName,
    pub arity: usize,
    pub reference_table: TruthTable,
    pub paper_expr: Expr,
}

const STI: &str = "~~x*1 @ x*1+2";
const TNAND: &str = "(x*1 @ y*1)+2 @ (~~x + ~~y)*1";
const TNOR: &str = "~~x*1 @ ~~y*1 @ (x+y)*1+2";

fn sti_of(inner: &str) -> String {
    format!("~~({inner})*1 @ ({inner})*1+2")
}

fn perm_table(p: PermOp) -> TruthTable {
    TruthTable::new(vec!["x".into()], p.table().to_vec()).unwrap()
}

fn build() -> Vec<StdCell> {
    let table = |vars: &str, digits: &str| TruthTable::from_digits(vars, digits).unwrap();
    let tnand = table("x y", "222211210");
    let tnor = table("x y", "210110000");
    let sti = |t: &TruthTable| t.map(|v| crate::algebra::rotate(crate::algebra::reverse(v)));
    let specs: Vec<(CellName, TruthTable, String)> = vec![
        (CellName::Sti, table("x", "210"), STI.into()),
        (CellName::Nti, table("x", "200"), format!("{STI} @ ~x")),
        (CellName::Pti, table("x", "220"), format!("{STI} @ ~~x")),
        (CellName::Tand, sti(&tnand), sti_of(TNAND)),
        (CellName::Tor, sti(&tnor), sti_of(TNOR)),
        (CellName::Tnand, tnand, TNAND.into()),
        (CellName::Tnor, tnor, TNOR.into()),
        (
            CellName::ThaCarry,
            table("x y", "000001011"),
            "x*1 @ y*1 @ (~x + ~y)*1".into(),
        ),
        (
            CellName::ThaSum,
            table("x y", "012120201"),
            "x*1+y @ ~x*1+~~y @ ~~x*1+~y".into(),
        ),
        (
            CellName::Reverse,
            perm_table(PermOp::Reverse),
            "x*1 @ ~x*1+2".into(),
        ),
        (CellName::Rot, perm_table(PermOp::Rotate), "~x".into()),
        (CellName::Rot2, perm_table(PermOp::Rotate2), "~~x".into()),
    ];
    specs
        .into_iter()
        .map(|(name, reference_table, expr)| {
            let paper_expr = parse(&expr).expect("cell expressions parse");
            let realized =
                table_of(&paper_expr, reference_table.vars()).expect("cell arity is small");
            assert_eq!(
                realized, reference_table,
                "{name} expression does not match its table"
            );
            StdCell {
                name,
                arity: reference_table.arity(),
                reference_table,
                paper_expr,
            }
        })
        .collect()
}

pub fn cells() -> &'static [StdCell] {
    static CELLS: OnceLock<Vec<StdCell>> = OnceLock::new();
    CELLS.get_or_init(build)
}

pub fn cell(name: CellName) -> &'static StdCell {
    cells().iter().find(|c| c.name == name).unwrap()
}

pub fn cell_by_name(name: &str) -> Result<&'static StdCell, UnknownCell> {
    Ok(cell(name.parse()?))
}

/// Both half-adder outputs in one netlist, sharing common gates.
pub fn half_adder() -> Netlist {
    lower(&BTreeMap::from([
        (
            "carry".to_string(),
            cell(CellName::ThaCarry).paper_expr.clone(),
        ),
        ("sum".to_string(), cell(CellName::ThaSum).paper_expr.clone()),
    ]))
}

#[derive(Clone, Debug)]
pub struct CellCheck {
    pub name: CellName,
    pub table_matches: bool,
    pub synthesis_equivalent: bool,
    pub simplified: Expr,
    pub simplified_cost: usize,
    pub reference_cost: usize,
}

impl CellCheck {
    pub fn cost_ok(&self) -> bool {
        self.simplified_cost <= self.reference_cost
    }

    pub fn passed(&self) -> bool {
        self.table_matches && self.synthesis_equivalent && self.cost_ok()
    }
}

impl fmt::Display for CellCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        write!(
            f,
            "{:<10} table {:<4} synth {:<4} cost {:<4} ({} <= {})  {}",
            self.name.as_str(),
            mark(self.table_matches),
            mark(self.synthesis_equivalent),
            mark(self.cost_ok()),
            self.simplified_cost,
            self.reference_cost,
            pretty_print(&self.simplified)
        )
    }
}

pub fn verify_cell(c: &StdCell) -> CellCheck {
    let table_matches = table_of(&c.paper_expr, c.reference_table.vars())
        .map(|t| t == c.reference_table)
        .unwrap_or(false);
    let synthesized = synthesize(&c.reference_table);
    let synthesis_equivalent = equivalent(&synthesized, &c.paper_expr)
        .map(|v| v.is_equal())
        .unwrap_or(false);
    let simplified = simplify(&synthesized, DEFAULT_BUDGET);
    CellCheck {
        name: c.name,
        table_matches,
        synthesis_equivalent,
        simplified_cost: cost(&simplified),
        reference_cost: cost(&c.paper_expr),
        simplified,
    }
}

pub fn verify_all() -> Vec<CellCheck> {
    cells().iter().map(verify_cell).collect()
}

/// The alternate single-gate-plus-constant inverter forms.
pub fn alternates() -> [(CellName, Expr); 2] {
    [
        (CellName::Nti, parse("~x@0").unwrap()),
        (CellName::Pti, parse("(~x+2)@0").unwrap()),
    ]
}
