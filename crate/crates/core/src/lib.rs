//! Ternary logic built from one monadic operator (ROTATE) and three dyadic
//! operators (ALPHA, BETA, GAMMA): expressions, truth tables, synthesis,
//! simplification and gate-level netlists.

pub mod algebra;
pub mod expr;
pub mod laws;
pub mod netlist;
pub mod rewrite;
pub mod stdcells;
pub mod synth;
pub mod truthtab;

pub use algebra::{Dyadic, PermOp, Trit};
pub use expr::{evaluate, parse, pretty_print, Assignment, Expr, ParseError};
pub use rewrite::{canonicalize, cost, simplify, NormalForm};
pub use synth::synthesize;
pub use truthtab::{equivalent, table_of, Equivalence, TruthTable};
