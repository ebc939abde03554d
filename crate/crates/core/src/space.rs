//! Finite semitopologies and their purely topological operations.

use std::collections::{BTreeSet, HashMap};

use crate::error::{check_bound, Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// Default cap on universe size for enumerating operations.
pub const DEFAULT_POINT_BOUND: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Close the given sets under unions and add `∅` and the universe.
    Generators,
    /// The given family is already the full open family.
    Full,
}

/// A finite set of labelled points with a union-closed family of opens.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semitopology {
    labels: Vec<String>,
    opens: Vec<PointSet>,
}

fn check_labels(labels: &[String]) -> Result<()> {
    check_bound("universe", labels.len(), MAX_POINTS)?;
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicatePoint(l.clone()));
        }
    }
    Ok(())
}

/// Least union-closed family containing `gens`, `∅` and `universe`.
pub(crate) fn union_closure(universe: PointSet, gens: &[PointSet]) -> Vec<PointSet> {
    let mut gens: Vec<PointSet> = gens.iter().copied().filter(|g| !g.is_empty()).collect();
    gens.sort();
    gens.dedup();
    let mut fam: BTreeSet<PointSet> = BTreeSet::new();
    fam.insert(PointSet::EMPTY);
    fam.insert(universe);
    let mut stack = vec![PointSet::EMPTY, universe];
    for &g in &gens {
        if fam.insert(g) {
            stack.push(g);
        }
    }
    while let Some(x) = stack.pop() {
        for &g in &gens {
            let y = x | g;
            if fam.insert(y) {
                stack.push(y);
            }
        }
    }
    fam.into_iter().collect()
}

impl Semitopology {
    /// Builds a space from labels and sets of point indices.
    pub fn from_index_sets(labels: Vec<String>, sets: &[PointSet], mode: Mode) -> Result<Self> {
        check_labels(&labels)?;
        let universe = PointSet::full(labels.len());
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(universe)) {
            return Err(Error::NotSemitopology(format!(
                "set {:?} is not inside the universe",
                bad
            )));
        }
        match mode {
            Mode::Generators => {
                let opens = union_closure(universe, sets);
                Ok(Semitopology { labels, opens })
            }
            Mode::Full => {
                let mut opens: Vec<PointSet> = sets.to_vec();
                opens.sort();
                opens.dedup();
                let s = Semitopology { labels, opens };
                s.validate()?;
                Ok(s)
            }
        }
    }

    /// Builds a space from labels and sets of labels.
    pub fn from_generators<S: AsRef<str>>(
        points: &[S],
        gens: &[Vec<S>],
        mode: Mode,
    ) -> Result<Self> {
        let labels: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        check_labels(&labels)?;
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut sets = Vec::with_capacity(gens.len());
        for g in gens {
            let mut s = PointSet::EMPTY;
            for l in g {
                let l = l.as_ref();
                let i = *index
                    .get(l)
                    .ok_or_else(|| Error::UnknownPoint(l.to_string()))?;
                s.insert(i);
            }
            sets.push(s);
        }
        Self::from_index_sets(labels, &sets, mode)
    }

    /// Points labelled `0..n` with the given generators.
    pub fn numbered(n: usize, gens: &[&[usize]]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let sets: Vec<PointSet> = gens
            .iter()
            .map(|g| PointSet::from_indices(g.iter().copied()))
            .collect();
        Self::from_index_sets(labels, &sets, Mode::Generators)
    }

    /// Trusted constructor for families known to be union-closed.
    pub(crate) fn from_parts_unchecked(labels: Vec<String>, mut opens: Vec<PointSet>) -> Self {
        opens.sort();
        opens.dedup();
        Semitopology { labels, opens }
    }

    /// The empty semitopology: no points, one open.
    pub fn empty() -> Self {
        Semitopology {
            labels: Vec::new(),
            opens: vec![PointSet::EMPTY],
        }
    }

    pub fn discrete(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        let sets: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        Self::from_index_sets(labels, &sets, Mode::Generators)
    }

    fn validate(&self) -> Result<()> {
        let u = self.universe();
        if self.opens.first() != Some(&PointSet::EMPTY) {
            return Err(Error::NotSemitopology("the empty set is not open".into()));
        }
        if !self.is_open(u) {
            return Err(Error::NotSemitopology("the universe is not open".into()));
        }
        for (i, &a) in self.opens.iter().enumerate() {
            for &b in &self.opens[i + 1..] {
                if !self.is_open(a | b) {
                    return Err(Error::NotSemitopology(format!(
                        "union of {} and {} is missing",
                        self.fmt_set(a),
                        self.fmt_set(b)
                    )));
                }
            }
        }
        Ok(())
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

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(PointSet::from_indices)
    }

    pub fn set_labels(&self, s: PointSet) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn fmt_set(&self, s: PointSet) -> String {
        format!("{{{}}}", self.set_labels(s).join(","))
    }

    pub fn universe(&self) -> PointSet {
        PointSet::full(self.labels.len())
    }

    /// All opens in canonical order, starting with `∅`.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn nonempty_opens(&self) -> &[PointSet] {
        &self.opens[1..]
    }

    pub fn is_open(&self, x: PointSet) -> bool {
        self.opens.binary_search(&x).is_ok()
    }

    pub fn is_closed(&self, x: PointSet) -> bool {
        x.is_subset(self.universe()) && self.is_open(self.universe() - x)
    }

    /// Closed sets, as complements of opens.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let u = self.universe();
        let mut v: Vec<PointSet> = self.opens.iter().map(|&o| u - o).collect();
        v.sort();
        v
    }

    /// Opens containing point `p`.
    pub fn open_nbhds(&self, p: usize) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().copied().filter(move |o| o.contains(p))
    }

    /// Greatest open subset of `x`.
    pub fn interior(&self, x: PointSet) -> PointSet {
        self.opens
            .iter()
            .filter(|o| o.is_subset(x))
            .fold(PointSet::EMPTY, |a, &o| a | o)
    }

    /// Points all of whose open neighbourhoods meet `x`.
    pub fn closure(&self, x: PointSet) -> PointSet {
        let u = self.universe();
        u - self.interior(u - x)
    }

    pub fn boundary(&self, x: PointSet) -> PointSet {
        self.closure(x) - self.interior(x)
    }

    pub fn is_regular_open(&self, o: PointSet) -> bool {
        self.is_open(o) && self.interior(self.closure(o)) == o
    }

    /// Opens `O` with `O = interior(closure(O))`, in canonical order.
    pub fn regular_opens(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .copied()
            .filter(|&o| self.interior(self.closure(o)) == o)
            .collect()
    }

    /// Minimal open neighbourhoods of `p`.
    pub fn covers(&self, p: usize) -> Vec<PointSet> {
        let nb: Vec<PointSet> = self.open_nbhds(p).collect();
        minimal(&nb)
    }

    /// Every open neighbourhood of `p` meets every open neighbourhood of `q`.
    pub fn intertwined(&self, p: usize, q: usize) -> bool {
        let (cp, cq) = (self.covers(p), self.covers(q));
        cp.iter().all(|a| cq.iter().all(|b| a.meets(*b)))
    }

    /// Minimal nonempty opens.
    pub fn atoms(&self) -> Vec<PointSet> {
        minimal(self.nonempty_opens())
    }

    /// True when opens are closed under pairwise intersection.
    pub fn is_topology(&self) -> bool {
        self.opens
            .iter()
            .enumerate()
            .all(|(i, &a)| self.opens[i + 1..].iter().all(|&b| self.is_open(a & b)))
    }

    /// The induced space on `x`, with points renumbered in order.
    pub fn subspace(&self, x: PointSet) -> Semitopology {
        let idx: Vec<usize> = x.iter().collect();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let project = |o: PointSet| -> PointSet {
            idx.iter()
                .enumerate()
                .filter(|(_, &i)| o.contains(i))
                .map(|(j, _)| j)
                .collect()
        };
        let mut opens: Vec<PointSet> = self.opens.iter().map(|&o| project(o & x)).collect();
        opens.sort();
        opens.dedup();
        Semitopology { labels, opens }
    }

    /// Product space. Point `(i, j)` gets index `i * |other| + j` and label `(a,b)`.
    pub fn product(&self, other: &Semitopology, bound: usize) -> Result<(Semitopology, Vec<(usize, usize)>)> {
        let (n1, n2) = (self.len(), other.len());
        check_bound("product universe", n1 * n2, bound.min(MAX_POINTS))?;
        let mut labels = Vec::with_capacity(n1 * n2);
        let mut pairs = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
                pairs.push((i, j));
            }
        }
        let square = |a: PointSet, b: PointSet| -> PointSet {
            let mut s = PointSet::EMPTY;
            for i in a {
                for j in b {
                    s.insert(i * n2 + j);
                }
            }
            s
        };
        let mut gens = Vec::new();
        for &a in self.nonempty_opens() {
            for &b in other.nonempty_opens() {
                gens.push(square(a, b));
            }
        }
        let s = Semitopology::from_index_sets(labels, &gens, Mode::Generators)?;
        Ok((s, pairs))
    }

    /// Global continuity of a value assignment into a discrete space.
    pub fn is_continuous<V: PartialEq>(&self, f: &[V]) -> Result<bool> {
        self.check_assignment(f.len())?;
        let mut seen = PointSet::EMPTY;
        for p in 0..self.len() {
            if seen.contains(p) {
                continue;
            }
            let pre: PointSet = (0..self.len()).filter(|&q| f[q] == f[p]).collect();
            if !self.is_open(pre) {
                return Ok(false);
            }
            seen = seen | pre;
        }
        Ok(true)
    }

    /// Continuity at `p`: `f` is constant on some open neighbourhood of `p`.
    pub fn is_continuous_at<V: PartialEq>(&self, f: &[V], p: usize) -> Result<bool> {
        self.check_assignment(f.len())?;
        if p >= self.len() {
            return Err(Error::UnknownPoint(p.to_string()));
        }
        Ok(self.open_nbhds(p).any(|o| o.iter().all(|q| f[q] == f[p])))
    }

    /// Points at which `f` is continuous.
    pub fn continuity_set<V: PartialEq>(&self, f: &[V]) -> Result<PointSet> {
        self.check_assignment(f.len())?;
        let mut good = PointSet::EMPTY;
        for &o in self.nonempty_opens() {
            let p = o.first().unwrap();
            if o.iter().all(|q| f[q] == f[p]) {
                good = good | o;
            }
        }
        Ok(good)
    }

    fn check_assignment(&self, len: usize) -> Result<()> {
        if len != self.len() {
            return Err(Error::Precondition(format!(
                "assignment has {} values for {} points",
                len,
                self.len()
            )));
        }
        Ok(())
    }

    /// Same space with points relabelled.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Semitopology> {
        if labels.len() != self.len() {
            return Err(Error::Precondition("relabel length mismatch".into()));
        }
        check_labels(&labels)?;
        Ok(Semitopology {
            labels,
            opens: self.opens.clone(),
        })
    }
}

/// Inclusion-minimal members of a family.
pub fn minimal(family: &[PointSet]) -> Vec<PointSet> {
    let mut sorted = family.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<PointSet> = Vec::new();
    // canonical order lists subsets before supersets
    for x in sorted {
        if !out.iter().any(|y| y.is_subset(x)) {
            out.push(x);
        }
    }
    out
}

/// Inclusion-maximal members of a family.
pub fn maximal(family: &[PointSet]) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = family
        .iter()
        .copied()
        .filter(|&x| !family.iter().any(|&y| y != x && x.is_subset(y)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every semitopology on `n` numbered points, by brute force over set families.
///
/// Families range over subsets of the powerset that contain `∅` and the
/// universe; only union-closed ones are kept.
pub fn all_semitopologies(n: usize) -> Result<Vec<Semitopology>> {
    check_bound("enumeration universe", n, 4)?;
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let u = PointSet::full(n);
    let middle: Vec<PointSet> = u
        .subsets()
        .filter(|s| !s.is_empty() && *s != u)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << middle.len()) {
        let mut fam: Vec<PointSet> = vec![PointSet::EMPTY, u];
        fam.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s),
        );
        fam.sort();
        fam.dedup();
        let closed = fam
            .iter()
            .all(|&a| fam.iter().all(|&b| fam.binary_search(&(a | b)).is_ok()));
        if closed {
            out.push(Semitopology {
                labels: labels.clone(),
                opens: fam,
            });
        }
    }
    Ok(out)
}
