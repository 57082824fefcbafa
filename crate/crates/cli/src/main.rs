use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use ternlogic::expr::{self, Assignment, Expr};
use ternlogic::netlist::{self, Netlist};
use ternlogic::{laws, rewrite, stdcells, synth, truthtab, Trit};

#[derive(Parser)]
#[command(
    name = "ternlogic",
    version,
    about = "Ternary logic synthesis and simplification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression under an assignment
    Eval {
        expr: String,
        /// Variable binding, e.g. x=2
        #[arg(long = "set", value_name = "VAR=TRIT")]
        set: Vec<String>,
    },
    /// Print the truth table of an expression
    Table {
        expr: String,
        /// Variable order, space separated (default: sorted free variables)
        #[arg(long)]
        vars: Option<String>,
    },
    /// Build the regular formula of a truth-table file
    Synth {
        table: String,
        #[arg(long)]
        simplify: bool,
        #[arg(long, default_value_t = rewrite::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Simplify an expression
    Simplify {
        expr: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = rewrite::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check two expressions for equivalence (exit status 1 if they differ)
    Equiv { left: String, right: String },
    /// Emit a DOT netlist for NAME=EXPR outputs
    Dot {
        #[arg(required = true)]
        outputs: Vec<String>,
    },
    /// Emit a JSON netlist for NAME=EXPR outputs
    Json {
        #[arg(required = true)]
        outputs: Vec<String>,
    },
    /// Show a library cell
    Stdcell {
        name: String,
        #[arg(long, group = "view")]
        table: bool,
        #[arg(long, group = "view")]
        expr: bool,
        #[arg(long, group = "view")]
        dot: bool,
    },
    /// Monadic coverage of one-operator-one-constant forms
    Census,
    /// Check every library cell and the law table
    Verify,
}

/// An argument, or the contents of a file when written `@path`.
fn text_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_string()),
    }
}

fn expr_arg(arg: &str) -> Result<Expr> {
    let text = text_arg(arg)?;
    expr::parse(text.trim()).map_err(|e| anyhow!("{e}"))
}

fn binding(s: &str) -> Result<(String, Trit)> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| anyhow!("expected VAR=TRIT, found {s:?}"))?;
    let value: i64 = value
        .trim()
        .parse()
        .map_err(|_| anyhow!("invalid trit {value:?}"))?;
    Ok((name.trim().to_string(), Trit::new(value)?))
}

fn outputs_arg(args: &[String]) -> Result<BTreeMap<String, Expr>> {
    let mut map = BTreeMap::new();
    for a in args {
        let (name, body) = match a.split_once('=') {
            Some((n, b)) => (n.trim().to_string(), b),
            None => ("out".to_string(), a.as_str()),
        };
        if map.insert(name.clone(), expr_arg(body)?).is_some() {
            bail!("output {name:?} given twice");
        }
    }
    Ok(map)
}

/// Output text and whether the command succeeded.
fn run(cli: Cli) -> Result<(String, bool)> {
    let mut out = String::new();
    let mut ok = true;
    match cli.command {
        Command::Eval { expr, set } => {
            let e = expr_arg(&expr)?;
            let mut env = Assignment::new();
            for s in &set {
                let (name, value) = binding(s)?;
                env.set(name, value);
            }
            writeln!(out, "{}", expr::evaluate(&e, &env)?)?;
        }
        Command::Table { expr, vars } => {
            let e = expr_arg(&expr)?;
            let t = match vars {
                Some(v) => {
                    let order: Vec<String> = v.split_whitespace().map(String::from).collect();
                    truthtab::table_of(&e, &order)?
                }
                None => truthtab::table_of_free(&e)?,
            };
            writeln!(out, "{t}")?;
        }
        Command::Synth {
            table,
            simplify,
            budget,
        } => {
            let path = table.strip_prefix('@').unwrap_or(&table);
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let t = truthtab::parse_table(&text)?;
            let mut e = synth::synthesize(&t);
            if simplify {
                e = rewrite::simplify(&e, budget.max(1));
            }
            writeln!(out, "{}", expr::pretty_print(&e))?;
        }
        Command::Simplify {
            expr,
            trace,
            budget,
        } => {
            let e = expr_arg(&expr)?;
            let result = rewrite::simplify_traced(&e, budget.max(1));
            if trace {
                for step in &result.steps {
                    writeln!(out, "{} {} -> {}", step.rule, step.before, step.after)?;
                }
                writeln!(
                    out,
                    "cost {} -> {}",
                    rewrite::cost(&e),
                    rewrite::cost(&result.expr)
                )?;
            }
            writeln!(out, "{}", expr::pretty_print(&result.expr))?;
        }
        Command::Equiv { left, right } => {
            let verdict = truthtab::equivalent(&expr_arg(&left)?, &expr_arg(&right)?)?;
            ok = verdict.is_equal();
            writeln!(out, "{verdict}")?;
        }
        Command::Dot { outputs } => {
            out.push_str(&netlist::lower(&outputs_arg(&outputs)?).emit_dot());
        }
        Command::Json { outputs } => {
            writeln!(
                out,
                "{}",
                netlist::lower(&outputs_arg(&outputs)?).emit_json()
            )?;
        }
        Command::Stdcell {
            name,
            table,
            expr: show_expr,
            dot,
        } => {
            let cell = stdcells::cell_by_name(&name)?;
            if table {
                writeln!(out, "{}", cell.reference_table)?;
            } else if show_expr {
                writeln!(out, "{}", expr::pretty_print(&cell.paper_expr))?;
            } else if dot {
                out.push_str(&netlist::lower_one("out", &cell.paper_expr).emit_dot());
            } else {
                writeln!(out, "name: {}", cell.name)?;
                writeln!(out, "arity: {}", cell.arity)?;
                writeln!(out, "table: {}", cell.reference_table.digits())?;
                writeln!(out, "expr: {}", expr::pretty_print(&cell.paper_expr))?;
                writeln!(out, "cost: {}", rewrite::cost(&cell.paper_expr))?;
            }
        }
        Command::Census => {
            let c = stdcells::monadic_census();
            writeln!(out, "{c}")?;
            writeln!(
                out,
                "permutations uncovered: {}",
                c.uncovered_are_permutations()
            )?;
            writeln!(out, "reconstructions hold: {}", c.reconstructions_hold())?;
            let mismatches = c.mismatches();
            writeln!(
                out,
                "printed columns differing from evaluation: {}",
                mismatches.len()
            )?;
            for i in mismatches {
                let f = &c.forms[i];
                let d = |t: &[Trit; 3]| t.iter().map(|v| v.to_char()).collect::<String>();
                writeln!(
                    out,
                    "  column {}: {} printed {} evaluates to {}",
                    i + 1,
                    expr::pretty_print(&f.expr),
                    d(&f.printed),
                    d(&f.computed)
                )?;
            }
        }
        Command::Verify => {
            for check in stdcells::verify_all() {
                ok &= check.passed();
                writeln!(out, "{check}")?;
            }
            for law in laws::laws() {
                let verdict = law.check();
                ok &= verdict.is_equal();
                writeln!(
                    out,
                    "law {:<16} {} = {}  {}",
                    law.family,
                    expr::pretty_print(&law.lhs),
                    expr::pretty_print(&law.rhs),
                    verdict
                )?;
            }
            let (law, verdict) = laws::reversed_distributivity();
            ok &= !verdict.is_equal();
            writeln!(
                out,
                "refuted {} = {}  {}",
                expr::pretty_print(&law.lhs),
                expr::pretty_print(&law.rhs),
                verdict
            )?;
            for (name, alt) in stdcells::alternates() {
                let verdict = truthtab::equivalent(&alt, &stdcells::cell(name).paper_expr)?;
                ok &= verdict.is_equal();
                writeln!(
                    out,
                    "alternate {name} {}  {verdict}",
                    expr::pretty_print(&alt)
                )?;
            }
            let tha = stdcells::half_adder();
            writeln!(out, "half adder gates: {}", tha.gates.len())?;
            ok &= Netlist::parse_json(&tha.emit_json()).as_ref() == Ok(&tha);
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
