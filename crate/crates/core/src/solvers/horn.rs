//! HORNSAT over two and three truth values.

use std::fmt;

use crate::error::{Error, Result};
use crate::three::{Three, Valuation3};

/// `¬neg₁ ∨ … ∨ ¬negₖ ∨ pos`, with `pos` optional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HornClause {
    pub neg: Vec<usize>,
    pub pos: Option<usize>,
}

impl HornClause {
    pub fn holds(&self, a: &[bool]) -> bool {
        self.neg.iter().any(|&q| !a[q]) || self.pos.is_some_and(|p| a[p])
    }
}

/// Positive-unit propagation. Atoms never forced stay false.
pub fn hornsat2(n_atoms: usize, theory: &[HornClause]) -> Option<Vec<bool>> {
    let mut clauses: Vec<HornClause> = theory.to_vec();
    let mut truth = vec![false; n_atoms];
    loop {
        if clauses.iter().any(|c| c.neg.is_empty() && c.pos.is_none()) {
            return None;
        }
        let unit = clauses
            .iter()
            .filter(|c| c.neg.is_empty())
            .filter_map(|c| c.pos)
            .find(|&p| !truth[p]);
        let Some(p) = unit else { break };
        truth[p] = true;
        clauses.retain(|c| c.pos != Some(p));
        for c in &mut clauses {
            c.neg.retain(|&q| q != p);
        }
    }
    debug_assert!(theory.iter().all(|c| c.holds(&truth)));
    Some(truth)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Horn3Lit {
    pub atom: usize,
    pub negated: bool,
    pub boxed: bool,
}

impl Horn3Lit {
    pub fn is_positive(self) -> bool {
        !self.negated
    }

    /// Whether `f` designates this literal.
    pub fn designated(self, f: &Valuation3) -> bool {
        let v = f.get(self.atom);
        match (self.boxed, self.negated) {
            (false, false) => v != Three::F,
            (false, true) => v != Three::T,
            (true, false) => v == Three::T,
            (true, true) => v == Three::F,
        }
    }
}

pub type Horn3Clause = Vec<Horn3Lit>;

/// Clauses over named atoms, each with at most one positive literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Horn3Theory {
    pub atoms: Vec<String>,
    pub clauses: Vec<Horn3Clause>,
}

impl Horn3Theory {
    pub fn new(atoms: Vec<String>, clauses: Vec<Horn3Clause>) -> Result<Self> {
        let t = Horn3Theory { atoms, clauses };
        for c in &t.clauses {
            if let Some(l) = c.iter().find(|l| l.atom >= t.atoms.len()) {
                return Err(Error::Precondition(format!("atom index {} out of range", l.atom)));
            }
            if c.iter().filter(|l| l.is_positive()).count() > 1 {
                return Err(Error::NotHorn(t.fmt_clause(c)));
            }
        }
        Ok(t)
    }

    /// One clause per line; literals `p`, `~p`, `[]p`, `[]~p`.
    ///
    /// Blank lines and lines starting with `#` are skipped; `{}` alone is the
    /// empty clause. Atoms are numbered in order of first appearance.
    pub fn parse(text: &str) -> Result<Self> {
        let mut atoms: Vec<String> = Vec::new();
        let mut clauses = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut clause = Vec::new();
            if line != "{}" {
                for tok in line.split_whitespace() {
                    let (boxed, rest) = match tok.strip_prefix("[]") {
                        Some(r) => (true, r),
                        None => (false, tok),
                    };
                    let (negated, name) = match rest.strip_prefix('~') {
                        Some(r) => (true, r),
                        None => (false, rest),
                    };
                    if name.is_empty() || name.starts_with(['~', '[']) {
                        return Err(Error::Parse {
                            line: k + 1,
                            msg: format!("bad literal `{}`", tok),
                        });
                    }
                    let atom = match atoms.iter().position(|a| a == name) {
                        Some(i) => i,
                        None => {
                            atoms.push(name.to_string());
                            atoms.len() - 1
                        }
                    };
                    clause.push(Horn3Lit {
                        atom,
                        negated,
                        boxed,
                    });
                }
            }
            clauses.push(clause);
        }
        Self::new(atoms, clauses)
    }

    pub fn fmt_lit(&self, l: Horn3Lit) -> String {
        format!(
            "{}{}{}",
            if l.boxed { "[]" } else { "" },
            if l.negated { "~" } else { "" },
            self.atoms[l.atom]
        )
    }

    pub fn fmt_clause(&self, c: &[Horn3Lit]) -> String {
        if c.is_empty() {
            "{}".to_string()
        } else {
            c.iter()
                .map(|&l| self.fmt_lit(l))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Every clause has a designated literal under `f`.
    pub fn designates_all(&self, f: &Valuation3) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.designated(f)))
    }
}

impl fmt::Display for Horn3Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{}", self.fmt_clause(c))?;
        }
        Ok(())
    }
}

fn lit(atom: usize, negated: bool, boxed: bool) -> Horn3Lit {
    Horn3Lit {
        atom,
        negated,
        boxed,
    }
}

fn is_unit(c: &[Horn3Lit], l: Horn3Lit) -> bool {
    c.len() == 1 && c[0] == l
}

/// Boxed positive unit: drop other clauses with `p` or `[]p`, delete `[]~p` and `~p`.
fn rule_boxed(clauses: &mut Vec<Horn3Clause>, p: usize) -> bool {
    let unit = lit(p, false, true);
    let before = clauses.clone();
    let mut kept_unit = false;
    clauses.retain(|c| {
        if is_unit(c, unit) && !kept_unit {
            kept_unit = true;
            return true;
        }
        !c.iter().any(|l| l.atom == p && !l.negated)
    });
    for c in clauses.iter_mut() {
        c.retain(|l| !(l.atom == p && l.negated));
    }
    *clauses != before
}

/// Unboxed positive unit: drop other clauses with `p` (not `[]p`), delete `[]~p`.
fn rule_unboxed(clauses: &mut Vec<Horn3Clause>, p: usize) -> bool {
    let unit = lit(p, false, false);
    let before = clauses.clone();
    let mut kept_unit = false;
    clauses.retain(|c| {
        if is_unit(c, unit) && !kept_unit {
            kept_unit = true;
            return true;
        }
        !c.contains(&unit)
    });
    for c in clauses.iter_mut() {
        c.retain(|&l| l != lit(p, true, true));
    }
    *clauses != before
}

/// Priority-ordered rewriting, boxed units before unboxed ones, lowest atom first.
///
/// On success `[]p` units read as `T`, `p` units as `B`, everything else `F`.
pub fn hornsat3(theory: &Horn3Theory) -> Option<Valuation3> {
    let n = theory.atoms.len();
    let mut clauses = theory.clauses.clone();
    'outer: loop {
        if clauses.iter().any(|c| c.is_empty()) {
            return None;
        }
        for boxed in [true, false] {
            for p in 0..n {
                let unit = lit(p, false, boxed);
                if !clauses.iter().any(|c| is_unit(c, unit)) {
                    continue;
                }
                let changed = if boxed {
                    rule_boxed(&mut clauses, p)
                } else {
                    rule_unboxed(&mut clauses, p)
                };
                if changed {
                    continue 'outer;
                }
            }
        }
        break;
    }
    let mut v = vec![Three::F; n];
    for c in &clauses {
        if c.len() == 1 && !c[0].negated {
            let l = c[0];
            if l.boxed {
                v[l.atom] = Three::T;
            } else if v[l.atom] != Three::T {
                v[l.atom] = Three::B;
            }
        }
    }
    Some(Valuation3(v))
}
