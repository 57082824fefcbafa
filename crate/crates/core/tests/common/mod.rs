#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ternlogic::algebra::Dyadic;
use ternlogic::{Expr, Trit, TruthTable};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn trit(rng: &mut impl Rng) -> Trit {
    Trit::ALL[rng.gen_range(0..3)]
}

/// Random expression over `vars` with at most `depth` levels of operators.
pub fn random_expr(rng: &mut impl Rng, vars: &[&str], depth: usize) -> Expr {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return if rng.gen_ratio(1, 4) {
            Expr::Const(trit(rng))
        } else {
            Expr::var(vars[rng.gen_range(0..vars.len())])
        };
    }
    match rng.gen_range(0..4) {
        0 => Expr::rotate(random_expr(rng, vars, depth - 1)),
        k => Expr::dyadic(
            Dyadic::ALL[k - 1],
            random_expr(rng, vars, depth - 1),
            random_expr(rng, vars, depth - 1),
        ),
    }
}

pub fn random_table(rng: &mut impl Rng, vars: &[&str]) -> TruthTable {
    let n = 3usize.pow(vars.len() as u32);
    let outputs = (0..n).map(|_| trit(rng)).collect();
    TruthTable::new(vars.iter().map(|v| v.to_string()).collect(), outputs).unwrap()
}

/// Every assignment of `vars`, first variable most significant.
pub fn assignments(vars: &[&str]) -> Vec<ternlogic::Assignment> {
    let mut out = vec![ternlogic::Assignment::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|a| Trit::ALL.into_iter().map(move |t| a.clone().with(*v, t)))
            .collect();
    }
    out
}
