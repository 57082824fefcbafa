//! Hash-consed gate netlists: lowering, simulation, DOT and JSON.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{self, Trit};
use crate::expr::{Assignment, Expr};
use crate::truthtab::is_identifier;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateKind {
    Input,
    Const,
    Rot,
    Alpha,
    Beta,
    Gamma,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::Input | GateKind::Const => 0,
            GateKind::Rot => 1,
            GateKind::Alpha | GateKind::Beta | GateKind::Gamma => 2,
        }
    }

    pub fn is_operator(self) -> bool {
        self.arity() > 0
    }

    fn symbol(self) -> &'static str {
        match self {
            GateKind::Input => "INPUT",
            GateKind::Const => "CONST",
            GateKind::Rot => "ROT",
            GateKind::Alpha => "α",
            GateKind::Beta => "β",
            GateKind::Gamma => "γ",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Gate {
    pub id: usize,
    pub kind: GateKind,
    pub operands: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Netlist {
    pub gates: Vec<Gate>,
    pub outputs: BTreeMap<String, usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetlistError {
    #[error("at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("gate at position {position} has id {id}")]
    NonDenseId { position: usize, id: usize },
    #[error("gate {gate}: {kind:?} takes {expected} operands, found {found}")]
    OperandCount {
        gate: usize,
        kind: GateKind,
        expected: usize,
        found: usize,
    },
    #[error("gate {gate}: operand {operand} is not an earlier gate")]
    BadOperand { gate: usize, operand: usize },
    #[error("gate {gate}: invalid label {label:?}")]
    BadLabel { gate: usize, label: Option<String> },
    #[error("gate {gate} duplicates gate {original}")]
    Duplicate { gate: usize, original: usize },
    #[error("output {name:?} references unknown gate {id}")]
    UnknownOutput { name: String, id: usize },
    #[error("gate {0} is not reachable from any output")]
    Unreachable(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no value for input {0:?}")]
pub struct MissingInput(pub String);

type Key = (GateKind, Vec<usize>, Option<String>);

struct Builder {
    gates: Vec<Gate>,
    index: HashMap<Key, usize>,
}

impl Builder {
    fn gate(&mut self, kind: GateKind, operands: Vec<usize>, label: Option<String>) -> usize {
        let key = (kind, operands, label);
        if let Some(&id) = self.index.get(&key) {
            return id;
        }
        let id = self.gates.len();
        self.gates.push(Gate {
            id,
            kind,
            operands: key.1.clone(),
            label: key.2.clone(),
        });
        self.index.insert(key, id);
        id
    }

    fn lower(&mut self, e: &Expr) -> usize {
        match e {
            Expr::Const(t) => self.gate(GateKind::Const, vec![], Some(t.to_string())),
            Expr::Var(name) => self.gate(GateKind::Input, vec![], Some(name.clone())),
            Expr::Rotate(c) => {
                let c = self.lower(c);
                self.gate(GateKind::Rot, vec![c], None)
            }
            Expr::Alpha(l, r) | Expr::Beta(l, r) | Expr::Gamma(l, r) => {
                let kind = match e {
                    Expr::Alpha(..) => GateKind::Alpha,
                    Expr::Beta(..) => GateKind::Beta,
                    _ => GateKind::Gamma,
                };
                let l = self.lower(l);
                let r = self.lower(r);
                self.gate(kind, vec![l, r], None)
            }
        }
    }
}

/// Lowers each named expression; gates are numbered depth-first over the
/// outputs in name order, left operand first.
pub fn lower(outputs: &BTreeMap<String, Expr>) -> Netlist {
    let mut b = Builder {
        gates: Vec::new(),
        index: HashMap::new(),
    };
    let outputs = outputs
        .iter()
        .map(|(name, e)| (name.clone(), b.lower(e)))
        .collect();
    Netlist {
        gates: b.gates,
        outputs,
    }
}

pub fn lower_one(name: &str, e: &Expr) -> Netlist {
    lower(&BTreeMap::from([(name.to_string(), e.clone())]))
}

impl Netlist {
    /// Gates other than inputs and constants.
    pub fn operator_count(&self) -> usize {
        self.gates.iter().filter(|g| g.kind.is_operator()).count()
    }

    pub fn inputs(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self
            .gates
            .iter()
            .filter(|g| g.kind == GateKind::Input)
            .filter_map(|g| g.label.as_deref())
            .collect();
        names.sort_unstable();
        names
    }

    pub fn simulate(&self, env: &Assignment) -> Result<BTreeMap<String, Trit>, MissingInput> {
        let mut values: Vec<Trit> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let arg = |i: usize| values[g.operands[i]];
            let v = match g.kind {
                GateKind::Input => {
                    let name = g.label.as_deref().unwrap_or_default();
                    env.get(name)
                        .ok_or_else(|| MissingInput(name.to_string()))?
                }
                GateKind::Const => g
                    .label
                    .as_deref()
                    .and_then(|l| l.chars().next())
                    .and_then(Trit::from_char)
                    .expect("constant gates carry a trit label"),
                GateKind::Rot => algebra::rotate(arg(0)),
                GateKind::Alpha => algebra::alpha(arg(0), arg(1)),
                GateKind::Beta => algebra::beta(arg(0), arg(1)),
                GateKind::Gamma => algebra::gamma(arg(0), arg(1)),
            };
            values.push(v);
        }
        Ok(self
            .outputs
            .iter()
            .map(|(name, &id)| (name.clone(), values[id]))
            .collect())
    }

    pub fn emit_dot(&self) -> String {
        let mut marks: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
        for (name, &id) in &self.outputs {
            marks.entry(id).or_default().push(name);
        }
        let mut out = String::from("digraph netlist {\n");
        for g in &self.gates {
            let label = match g.kind {
                GateKind::Input | GateKind::Const => g.label.clone().unwrap_or_default(),
                k => k.symbol().to_string(),
            };
            let shape = match g.kind {
                GateKind::Input => "plaintext",
                GateKind::Const => "box",
                _ => "circle",
            };
            write!(
                out,
                "  n{} [label=\"{}\", shape={}",
                g.id,
                escape(&label),
                shape
            )
            .unwrap();
            if let Some(names) = marks.get(&g.id) {
                write!(
                    out,
                    ", xlabel=\"{}\", peripheries=2",
                    escape(&names.join(","))
                )
                .unwrap();
            }
            out.push_str("];\n");
        }
        for g in &self.gates {
            for op in &g.operands {
                writeln!(out, "  n{op} -> n{};", g.id).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn emit_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("netlists serialize")
    }

    pub fn parse_json(text: &str) -> Result<Netlist, NetlistError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let n: Netlist =
            serde_path_to_error::deserialize(de).map_err(|e| NetlistError::Schema {
                path: e.path().to_string(),
                message: e.inner().to_string(),
            })?;
        n.validate()?;
        Ok(n)
    }

    /// Checks every structural invariant: dense topological ids, operand
    /// counts, labels, structural hashing, output ids and reachability.
    pub fn validate(&self) -> Result<(), NetlistError> {
        let mut seen: HashMap<(GateKind, &[usize], Option<&str>), usize> = HashMap::new();
        for (position, g) in self.gates.iter().enumerate() {
            if g.id != position {
                return Err(NetlistError::NonDenseId { position, id: g.id });
            }
            if g.operands.len() != g.kind.arity() {
                return Err(NetlistError::OperandCount {
                    gate: g.id,
                    kind: g.kind,
                    expected: g.kind.arity(),
                    found: g.operands.len(),
                });
            }
            if let Some(&operand) = g.operands.iter().find(|&&o| o >= g.id) {
                return Err(NetlistError::BadOperand {
                    gate: g.id,
                    operand,
                });
            }
            let label_ok = match (g.kind, g.label.as_deref()) {
                (GateKind::Input, Some(l)) => is_identifier(l),
                (GateKind::Const, Some(l)) => matches!(l, "0" | "1" | "2"),
                (_, None) => g.kind.is_operator(),
                _ => false,
            };
            if !label_ok {
                return Err(NetlistError::BadLabel {
                    gate: g.id,
                    label: g.label.clone(),
                });
            }
            if let Some(&original) = seen.get(&(g.kind, &g.operands[..], g.label.as_deref())) {
                return Err(NetlistError::Duplicate {
                    gate: g.id,
                    original,
                });
            }
            seen.insert((g.kind, &g.operands, g.label.as_deref()), g.id);
        }
        let mut live = vec![false; self.gates.len()];
        for (name, &id) in &self.outputs {
            if id >= self.gates.len() {
                return Err(NetlistError::UnknownOutput {
                    name: name.clone(),
                    id,
                });
            }
            live[id] = true;
        }
        for g in self.gates.iter().rev() {
            if live[g.id] {
                for &o in &g.operands {
                    live[o] = true;
                }
            }
        }
        match live.iter().position(|&l| !l) {
            Some(id) => Err(NetlistError::Unreachable(id)),
            None => Ok(()),
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn net(s: &str) -> Netlist {
        lower_one("out", &parse(s).unwrap())
    }

    #[test]
    fn rotate_netlist() {
        let n = net("~x");
        assert_eq!(n.gates.len(), 2);
        let dot = n.emit_dot();
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 2);
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn sharing() {
        let n = net("x*1 @ x*1");
        assert_eq!(n.gates.len(), 4);
        assert_eq!(n.operator_count(), 2);
    }

    #[test]
    fn simulation() {
        let n = net("~~x*1@x*1+2");
        let out = n
            .simulate(&Assignment::new().with("x", Trit::ZERO))
            .unwrap();
        assert_eq!(out["out"], Trit::TWO);
        assert_eq!(
            n.simulate(&Assignment::new()).unwrap_err(),
            MissingInput("x".into())
        );
    }

    #[test]
    fn empty_outputs() {
        let n = lower(&BTreeMap::new());
        assert_eq!(n.emit_dot(), "digraph netlist {\n}\n");
        assert_eq!(Netlist::parse_json(&n.emit_json()).unwrap(), n);
    }

    #[test]
    fn json_errors() {
        let bad_kind = r#"{"gates":[{"id":0,"kind":"NAND","operands":[]}],"outputs":{}}"#;
        match Netlist::parse_json(bad_kind) {
            Err(NetlistError::Schema { path, .. }) => assert_eq!(path, "gates[0].kind"),
            other => panic!("{other:?}"),
        }
        let unknown =
            r#"{"gates":[{"id":0,"kind":"INPUT","operands":[],"label":"x"}],"outputs":{"o":3}}"#;
        assert_eq!(
            Netlist::parse_json(unknown),
            Err(NetlistError::UnknownOutput {
                name: "o".into(),
                id: 3
            })
        );
        let forward = r#"{"gates":[{"id":0,"kind":"ROT","operands":[0]}],"outputs":{"o":0}}"#;
        assert!(matches!(
            Netlist::parse_json(forward),
            Err(NetlistError::BadOperand { .. })
        ));
        let dangling = r#"{"gates":[{"id":0,"kind":"INPUT","operands":[],"label":"x"},
            {"id":1,"kind":"INPUT","operands":[],"label":"y"}],"outputs":{"o":1}}"#;
        assert_eq!(
            Netlist::parse_json(dangling),
            Err(NetlistError::Unreachable(0))
        );
    }
}
