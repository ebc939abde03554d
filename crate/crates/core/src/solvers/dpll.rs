//! A small DPLL solver used as the reference answer.

use super::cnf::{Cnf, Lit};

fn simplify(clauses: &[Vec<Lit>], lit: Lit) -> Option<Vec<Vec<Lit>>> {
    let mut out = Vec::with_capacity(clauses.len());
    for c in clauses {
        if c.contains(&lit) {
            continue;
        }
        let rest: Vec<Lit> = c
            .iter()
            .copied()
            .filter(|l| !(l.var == lit.var && l.positive != lit.positive))
            .collect();
        if rest.is_empty() {
            return None;
        }
        out.push(rest);
    }
    Some(out)
}

fn search(clauses: Vec<Vec<Lit>>, assign: &mut Vec<Option<bool>>) -> bool {
    let mut clauses = clauses;
    // unit propagation
    loop {
        let unit = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]);
        match unit {
            Some(l) => {
                assign[l.var] = Some(l.positive);
                match simplify(&clauses, l) {
                    Some(c) => clauses = c,
                    None => return false,
                }
            }
            None => break,
        }
    }
    let Some(first) = clauses.first() else {
        return true;
    };
    let var = first[0].var;
    for positive in [true, false] {
        let l = Lit { var, positive };
        let saved = assign.clone();
        assign[var] = Some(positive);
        if let Some(c) = simplify(&clauses, l) {
            if search(c, assign) {
                return true;
            }
        }
        *assign = saved;
    }
    false
}

/// A satisfying assignment, if one exists. Unconstrained variables are false.
pub fn solve(cnf: &Cnf) -> Option<Vec<bool>> {
    if cnf.clauses.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut assign = vec![None; cnf.vars.len()];
    if search(cnf.clauses.clone(), &mut assign) {
        Some(assign.into_iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        None
    }
}
