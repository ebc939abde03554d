//! Intertwinedness through a SAT query: two points are not intertwined
//! exactly when disjoint witness-opens around them exist.

use super::cnf::{Cnf, Lit};
use super::dpll;
use crate::error::Result;
use crate::witness::WitnessFunction;

/// Variables `in_a(r)`, `in_b(r)` for each point, plus one selector per
/// (side, point, witness-set). Satisfiable iff `p` and `q` have disjoint
/// open neighbourhoods.
pub fn separation_cnf(w: &WitnessFunction, p: usize, q: usize) -> Result<Cnf> {
    let n = w.len();
    let side = |s: usize, r: usize| s * n + r;
    let mut vars: Vec<String> = Vec::new();
    for s in ["a", "b"] {
        for l in w.labels() {
            vars.push(format!("{}:{}", s, l));
        }
    }
    let mut clauses = vec![vec![Lit::pos(side(0, p))], vec![Lit::pos(side(1, q))]];
    for r in 0..n {
        clauses.push(vec![Lit::neg(side(0, r)), Lit::neg(side(1, r))]);
    }
    for s in 0..2 {
        for r in 0..n {
            let mut pick = vec![Lit::neg(side(s, r))];
            for (k, ws) in w.witness_sets(r).iter().enumerate() {
                let sel = vars.len();
                vars.push(format!("{}:{}#{}", if s == 0 { "a" } else { "b" }, w.labels()[r], k));
                pick.push(Lit::pos(sel));
                for t in ws.iter() {
                    clauses.push(vec![Lit::neg(sel), Lit::pos(side(s, t))]);
                }
            }
            clauses.push(pick);
        }
    }
    Cnf::new(vars, clauses)
}

pub fn intertwined_by_sat(w: &WitnessFunction, p: usize, q: usize) -> Result<bool> {
    Ok(dpll::solve(&separation_cnf(w, p, q)?).is_none())
}
