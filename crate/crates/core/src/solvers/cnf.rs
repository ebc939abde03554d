use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// A conjunction of clauses, each a disjunction of literals over `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub vars: Vec<String>,
    pub clauses: Vec<Vec<Lit>>,
}

impl Cnf {
    pub fn new(vars: Vec<String>, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        for c in &clauses {
            if let Some(l) = c.iter().find(|l| l.var >= vars.len()) {
                return Err(Error::Precondition(format!(
                    "literal refers to variable {} of {}",
                    l.var + 1,
                    vars.len()
                )));
            }
        }
        Ok(Cnf { vars, clauses })
    }

    /// Variables named `1..=n`.
    pub fn numbered(n: usize, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect(), clauses)
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Satisfiability by trying all `2^n` assignments.
    pub fn brute_force_sat(&self) -> bool {
        let n = self.vars.len();
        (0u64..1 << n).any(|m| {
            let a: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
            self.eval(&a)
        })
    }
}
