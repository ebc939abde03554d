//! Satisfiability as non-intertwinedness of two points of a witness space.

use super::cnf::Cnf;
use super::dpll;
use crate::error::{check_bound, Result};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::witness::{WitnessFunction, OPEN_SEARCH_LIMIT};

#[derive(Clone, Debug)]
pub struct Reduction {
    pub witness: WitnessFunction,
    pub left: usize,
    pub right: usize,
    /// True when a padding variable was added because the formula had none.
    pub padded: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatMethod {
    Reduction,
    Dpll,
}

/// Builds the witness function whose `left` and `right` points are intertwined
/// exactly when `psi` is unsatisfiable.
///
/// Points are `left`, `right`, then `right_i1..`, then per variable `qk+`,
/// `qk-`, `left_qk`, `right_qk`. An empty clause is given the witness-set
/// `{left}` so that any open containing `right` also contains `left`. A
/// formula without variables gets one padding variable.
pub fn cnf_to_witness(psi: &Cnf) -> Result<Reduction> {
    let nvars = psi.vars.len().max(1);
    let padded = psi.vars.is_empty();
    let nclauses = psi.clauses.len();
    let mut labels = vec!["left".to_string(), "right".to_string()];
    for i in 0..nclauses {
        labels.push(format!("right_i{}", i + 1));
    }
    let clause_pt = |i: usize| 2 + i;
    let base = 2 + nclauses;
    let plus = |q: usize| base + 4 * q;
    let minus = |q: usize| base + 4 * q + 1;
    let left_q = |q: usize| base + 4 * q + 2;
    let right_q = |q: usize| base + 4 * q + 3;
    for q in 0..nvars {
        let k = q + 1;
        labels.push(format!("q{}+", k));
        labels.push(format!("q{}-", k));
        labels.push(format!("left_q{}", k));
        labels.push(format!("right_q{}", k));
    }
    let n = labels.len();
    check_bound("reduction universe", n, MAX_POINTS)?;
    let mut w: Vec<Vec<PointSet>> = vec![Vec::new(); n];
    for q in 0..nvars {
        w[plus(q)] = vec![PointSet::singleton(plus(q))];
        w[minus(q)] = vec![PointSet::singleton(minus(q))];
        let both = vec![PointSet::singleton(plus(q)), PointSet::singleton(minus(q))];
        w[left_q(q)] = both.clone();
        w[right_q(q)] = both;
    }
    w[0] = vec![(0..nvars).map(left_q).collect()];
    w[1] = vec![(0..nvars)
        .map(right_q)
        .chain((0..nclauses).map(clause_pt))
        .collect()];
    for (i, c) in psi.clauses.iter().enumerate() {
        w[clause_pt(i)] = if c.is_empty() {
            vec![PointSet::singleton(0)]
        } else {
            c.iter()
                .map(|l| PointSet::singleton(if l.positive { plus(l.var) } else { minus(l.var) }))
                .collect()
        };
    }
    Ok(Reduction {
        witness: WitnessFunction::new(labels, w)?,
        left: 0,
        right: 1,
        padded,
    })
}

pub fn sat_check(psi: &Cnf, method: SatMethod) -> Result<bool> {
    match method {
        SatMethod::Dpll => Ok(dpll::solve(psi).is_some()),
        SatMethod::Reduction => {
            let r = cnf_to_witness(psi)?;
            Ok(!r.witness.intertwined(r.left, r.right, OPEN_SEARCH_LIMIT)?)
        }
    }
}
