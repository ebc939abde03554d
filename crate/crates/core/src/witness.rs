//! Witness functions and the semitopologies they generate.

use std::collections::HashMap;

use crate::error::{check_bound, Error, Result};
use crate::pointset::PointSet;
use crate::solvers::horn::HornClause;
use crate::space::{minimal, Mode, Semitopology, DEFAULT_POINT_BOUND};

/// Default cap on search states for [`WitnessFunction::opens_around`].
pub const OPEN_SEARCH_LIMIT: usize = 1 << 20;

/// Each point's finite family of nonempty witness-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessFunction {
    labels: Vec<String>,
    witness: Vec<Vec<PointSet>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chooser {
    /// First witness-set in canonical order.
    First,
    /// Witness-set adding the fewest new points, ties broken canonically.
    LeastGrowth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
    Both,
}

/// `(⋀_{w ∈ body} ⋁_{q ∈ w} q) → head`, or the same with every atom negated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessClause {
    pub body: Vec<PointSet>,
    pub head: usize,
    pub negated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornTheory {
    pub atoms: Vec<String>,
    pub clauses: Vec<WitnessClause>,
}

impl HornTheory {
    /// Whether the assignment making exactly `truth` true satisfies every clause.
    pub fn is_model(&self, truth: PointSet) -> bool {
        self.clauses.iter().all(|c| {
            let holds = |q: usize| truth.contains(q) != c.negated;
            let body = c.body.iter().all(|w| w.iter().any(holds));
            !body || holds(c.head)
        })
    }

    /// Distributes each body into strict Horn clauses over positive atoms.
    ///
    /// Only positive clauses are expanded. The result can be exponential in
    /// the number of witness-sets.
    pub fn expand(&self) -> Vec<HornClause> {
        let mut out = Vec::new();
        for c in self.clauses.iter().filter(|c| !c.negated) {
            let mut choices: Vec<PointSet> = vec![PointSet::EMPTY];
            for w in &c.body {
                let mut next = Vec::new();
                for &ch in &choices {
                    for q in w.iter() {
                        next.push(ch.with(q));
                    }
                }
                next.sort();
                next.dedup();
                choices = next;
            }
            for ch in choices {
                out.push(HornClause {
                    neg: ch.iter().collect(),
                    pos: Some(c.head),
                });
            }
        }
        out
    }
}

impl WitnessFunction {
    pub fn new(labels: Vec<String>, witness: Vec<Vec<PointSet>>) -> Result<Self> {
        if witness.len() != labels.len() {
            return Err(Error::InvalidWitness(format!(
                "{} points but {} witness families",
                labels.len(),
                witness.len()
            )));
        }
        // reuse the label checks of the space constructor
        Semitopology::from_index_sets(labels.clone(), &[], Mode::Generators)?;
        let u = PointSet::full(labels.len());
        let mut fixed = Vec::with_capacity(witness.len());
        for (p, mut ws) in witness.into_iter().enumerate() {
            if ws.is_empty() {
                return Err(Error::InvalidWitness(format!(
                    "point `{}` has no witness-set",
                    labels[p]
                )));
            }
            if ws.iter().any(|w| w.is_empty()) {
                return Err(Error::InvalidWitness(format!(
                    "point `{}` has an empty witness-set",
                    labels[p]
                )));
            }
            if ws.iter().any(|w| !w.is_subset(u)) {
                return Err(Error::InvalidWitness(format!(
                    "point `{}` has a witness-set outside the universe",
                    labels[p]
                )));
            }
            ws.sort();
            ws.dedup();
            fixed.push(ws);
        }
        Ok(WitnessFunction {
            labels,
            witness: fixed,
        })
    }

    /// Builds from labels, keyed by point label.
    pub fn from_labels<S: AsRef<str>>(points: &[S], witness: &HashMap<String, Vec<Vec<String>>>) -> Result<Self> {
        let labels: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        for k in witness.keys() {
            if !index.contains_key(k.as_str()) {
                return Err(Error::InvalidWitness(format!("witness given for unknown point `{}`", k)));
            }
        }
        let mut ws = Vec::with_capacity(labels.len());
        for l in &labels {
            let fam = witness.get(l).ok_or_else(|| {
                Error::InvalidWitness(format!("point `{}` has no witness-set", l))
            })?;
            let mut sets = Vec::with_capacity(fam.len());
            for w in fam {
                let mut s = PointSet::EMPTY;
                for q in w {
                    let i = index.get(q.as_str()).ok_or_else(|| {
                        Error::InvalidWitness(format!(
                            "point `{}` names unknown point `{}`",
                            l, q
                        ))
                    })?;
                    s.insert(*i);
                }
                sets.push(s);
            }
            ws.push(sets);
        }
        Self::new(labels, ws)
    }

    /// `W(p)` = all opens containing `p`.
    pub fn from_semitopology(s: &Semitopology) -> Self {
        let witness = (0..s.len()).map(|p| s.open_nbhds(p).collect()).collect();
        WitnessFunction {
            labels: s.labels().to_vec(),
            witness,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn universe(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn witness_sets(&self, p: usize) -> &[PointSet] {
        &self.witness[p]
    }

    /// `x` contains a witness-set of `p`.
    pub fn enables(&self, x: PointSet, p: usize) -> bool {
        self.witness[p].iter().any(|w| w.is_subset(x))
    }

    /// `x` meets every witness-set of `p`.
    pub fn blocks(&self, x: PointSet, p: usize) -> bool {
        self.witness[p].iter().all(|w| w.meets(x))
    }

    /// Sets that enable each of their own members.
    pub fn witness_opens(&self) -> Result<Semitopology> {
        self.witness_opens_bounded(DEFAULT_POINT_BOUND)
    }

    pub fn witness_opens_bounded(&self, bound: usize) -> Result<Semitopology> {
        check_bound("witness universe", self.len(), bound)?;
        let opens: Vec<PointSet> = self
            .universe()
            .subsets()
            .filter(|&o| o.iter().all(|p| self.enables(o, p)))
            .collect();
        // unions of witness-opens are witness-open
        Ok(Semitopology::from_parts_unchecked(self.labels.clone(), opens))
    }

    /// Grows `seed` by adding chosen witness-sets until nothing changes.
    pub fn grow_open(&self, seed: PointSet, chooser: Chooser) -> PointSet {
        let mut r = seed;
        loop {
            let mut next = r;
            for p in r.iter() {
                let ws = &self.witness[p];
                let pick = match chooser {
                    Chooser::First => ws[0],
                    Chooser::LeastGrowth => *ws
                        .iter()
                        .min_by_key(|w| ((**w - r).len(), **w))
                        .unwrap(),
                };
                next = next | pick;
            }
            if next == r {
                return r;
            }
            r = next;
        }
    }

    /// Witness-opens containing `p` such that every witness-open containing
    /// `p` includes one of them. Built by repeatedly taking the least member
    /// not yet enabled and branching over its witness-sets; `limit` caps the
    /// number of search states.
    pub fn opens_around(&self, p: usize, limit: usize) -> Result<Vec<PointSet>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let mut stack = vec![PointSet::singleton(p)];
        while let Some(x) = stack.pop() {
            if !seen.insert(x) {
                continue;
            }
            check_bound("open search states", seen.len(), limit)?;
            match x.iter().find(|&r| !self.enables(x, r)) {
                None => out.push(x),
                Some(r) => stack.extend(self.witness[r].iter().map(|&w| x | w)),
            }
        }
        Ok(minimal(&out))
    }

    /// Intertwinedness in the witness semitopology, without enumerating all opens.
    pub fn intertwined(&self, p: usize, q: usize, limit: usize) -> Result<bool> {
        let a = self.opens_around(p, limit)?;
        let b = self.opens_around(q, limit)?;
        Ok(a.iter().all(|x| b.iter().all(|y| x.meets(*y))))
    }

    /// Adds every point blocked by the current set until nothing changes.
    pub fn lim_closure(&self, x: PointSet) -> PointSet {
        let mut r = x;
        loop {
            let next = (0..self.len()).filter(|&p| self.blocks(r, p)).collect::<PointSet>() | r;
            if next == r {
                return r;
            }
            r = next;
        }
    }

    pub fn horn_theory(&self, polarity: Polarity) -> HornTheory {
        let mut clauses = Vec::new();
        for (p, ws) in self.witness.iter().enumerate() {
            for negated in [false, true] {
                let want = match polarity {
                    Polarity::Positive => !negated,
                    Polarity::Negative => negated,
                    Polarity::Both => true,
                };
                if want {
                    clauses.push(WitnessClause {
                        body: ws.clone(),
                        head: p,
                        negated,
                    });
                }
            }
        }
        HornTheory {
            atoms: self.labels.clone(),
            clauses,
        }
    }

    /// Every point has exactly one witness-set.
    pub fn is_deterministic(&self) -> bool {
        self.witness.iter().all(|ws| ws.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> WitnessFunction {
        WitnessFunction::new(
            vec!["0".into(), "1".into(), "2".into()],
            vec![
                vec![PointSet::from_indices([0, 1])],
                vec![PointSet::from_indices([1])],
                vec![PointSet::from_indices([1, 2])],
            ],
        )
        .unwrap()
    }

    #[test]
    fn opens_of_example() {
        let s = ex1().witness_opens().unwrap();
        let got: Vec<String> = s.opens().iter().map(|&o| s.fmt_set(o)).collect();
        assert_eq!(got, ["{}", "{1}", "{0,1}", "{1,2}", "{0,1,2}"]);
    }

    #[test]
    fn grow_from_zero() {
        assert_eq!(
            ex1().grow_open(PointSet::singleton(0), Chooser::First),
            PointSet::from_indices([0, 1])
        );
        assert_eq!(ex1().grow_open(PointSet::EMPTY, Chooser::LeastGrowth), PointSet::EMPTY);
    }

    #[test]
    fn rejects_empty_witness_set() {
        let e = WitnessFunction::new(vec!["a".into()], vec![vec![PointSet::EMPTY]]).unwrap_err();
        assert!(e.to_string().contains("`a`"));
    }
}
