use ternlogic::rewrite::{
    canonicalize, cost, rule_catalog, simplify, simplify_traced, DEFAULT_BUDGET,
};
use ternlogic::stdcells::{self, CellName};
use ternlogic::{equivalent, parse, pretty_print, synthesize};

fn simp(s: &str) -> String {
    pretty_print(&simplify(&parse(s).unwrap(), DEFAULT_BUDGET))
}

#[test]
fn documented_examples() {
    assert_eq!(simp("x*0"), "0");
    assert_eq!(simp("x*1 @ ~~x*1+2"), "x");
    assert_eq!(simp("x*1 @ ~x*1 @ ~~x*1"), "0");
    assert_eq!(canonicalize(&parse("y*x").unwrap()).to_string(), "x*y");
}

#[test]
fn inverter_reaches_reconstruction_cost() {
    let sti = synthesize(&stdcells::cell(CellName::Sti).reference_table);
    let out = simplify(&sti, DEFAULT_BUDGET);
    assert!(cost(&out) <= cost(&parse("~~x*1 @ x*1+2").unwrap()));
    assert!(equivalent(&sti, &out).unwrap().is_equal());
}

#[test]
fn every_cell_simplifies_within_its_reference_cost() {
    for check in stdcells::verify_all() {
        assert!(check.passed(), "{check}");
    }
}

#[test]
fn intermediate_derivation_lines_are_equivalent() {
    let pairs = [
        ("x*1+2 @ ~x*1+1 @ ~~x*1+0", "x*1+2 @ 1 @ ~~x*1"),
        (
            "x*1+2 @ ~x*1+0 @ ~~x*1+0",
            "(~~x*1 @ x*1+2) @ (~x*1 @ x*1+2)",
        ),
        (
            "x*1+2 @ ~x*1+2 @ ~~x*1+0",
            "(~~x*1 @ x*1+2) @ (~~x*1 @ ~x*1+2)",
        ),
        (
            "(y*1 @ ~y*1 @ ~~y*1)+~~x*1 @ (x*1 @ ~x*1 @ ~~x*1)+~~y*1 @ (x+y)*1+2",
            "~~x*1 @ ~~y*1 @ (x+y)*1+2",
        ),
    ];
    for (a, b) in pairs {
        assert!(
            equivalent(&parse(a).unwrap(), &parse(b).unwrap())
                .unwrap()
                .is_equal(),
            "{a}"
        );
    }
}

#[test]
fn budget_limits_passes() {
    let e = synthesize(&stdcells::cell(CellName::Tnand).reference_table);
    let one = simplify_traced(&e, 1);
    assert_eq!(one.passes, 1);
    assert!(equivalent(&e, &one.expr).unwrap().is_equal());
    assert!(cost(&one.expr) <= cost(&e));
}

#[test]
fn trace_records_cost_changes() {
    let r = simplify_traced(&parse("x*1 @ ~~x*1+2").unwrap(), DEFAULT_BUDGET);
    let step = r.steps.iter().find(|s| s.rule == "fusion-eq5").unwrap();
    assert_eq!((step.before, step.after), (6, 0));
    assert!(rule_catalog().iter().all(|r| !r.law_ref.is_empty()));
}
