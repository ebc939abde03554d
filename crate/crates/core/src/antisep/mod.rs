//! Intertwinedness, communities, kernels and the regularity hierarchy.

mod extend;
mod extremal;
mod graph;

pub use extend::{extend_to_regular, kernel_limit, KernelLimit};
pub use extremal::{extremal_valuation_of, extremal_valuations, is_extremal};
pub use graph::{flanks, IntersectionGraph};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{maximal, minimal, Semitopology};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighbourhoodInvariants {
    pub intertwined_set: PointSet,
    pub community: PointSet,
    pub kernel: PointSet,
    pub covers: Vec<PointSet>,
    pub boundary_of_k: PointSet,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub regular: bool,
    pub weakly_regular: bool,
    pub quasiregular: bool,
    pub indirectly_regular: bool,
    pub unconflicted: bool,
    pub conflicted: bool,
    pub hypertransitive: bool,
    pub hyperdefinite: bool,
    /// The intertwined set is a minimal closed neighbourhood.
    pub mcn: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopenPartition {
    pub maximal_topens: Vec<PointSet>,
    pub irregular_points: PointSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointRelations {
    pub intertwined: bool,
    pub top_indistinguishable: bool,
    pub consensus_equivalent: bool,
    pub hypertwined: bool,
    pub transitively_intertwined: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    OfPoint(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub weakly: bool,
    pub strongly: bool,
}

/// Per-space cache of the neighbourhood structure.
#[derive(Clone, Debug)]
pub struct Analysis<'a> {
    s: &'a Semitopology,
    covers: Vec<Vec<PointSet>>,
    k: Vec<PointSet>,
    community: Vec<PointSet>,
    atoms: Vec<PointSet>,
    regular_opens: Vec<PointSet>,
    regular: PointSet,
}

impl<'a> Analysis<'a> {
    pub fn new(s: &'a Semitopology) -> Self {
        let n = s.len();
        let covers: Vec<Vec<PointSet>> = (0..n).map(|p| s.covers(p)).collect();
        let mut k = vec![PointSet::EMPTY; n];
        for p in 0..n {
            for q in p..n {
                let tw = covers[p]
                    .iter()
                    .all(|a| covers[q].iter().all(|b| a.meets(*b)));
                if tw {
                    k[p].insert(q);
                    k[q].insert(p);
                }
            }
        }
        let community: Vec<PointSet> = k.iter().map(|&kp| s.interior(kp)).collect();
        let mut a = Analysis {
            s,
            covers,
            k,
            community,
            atoms: s.atoms(),
            regular_opens: s.regular_opens(),
            regular: PointSet::EMPTY,
        };
        a.regular = (0..n)
            .filter(|&p| a.community[p].contains(p) && a.is_transitive(a.community[p]))
            .collect();
        a
    }

    pub fn space(&self) -> &'a Semitopology {
        self.s
    }

    fn check(&self, p: usize) -> Result<()> {
        if p < self.s.len() {
            Ok(())
        } else {
            Err(Error::UnknownPoint(p.to_string()))
        }
    }

    pub fn intertwined(&self, p: usize, q: usize) -> bool {
        self.k[p].contains(q)
    }

    pub fn intertwined_set(&self, p: usize) -> PointSet {
        self.k[p]
    }

    pub fn community(&self, p: usize) -> PointSet {
        self.community[p]
    }

    /// Union of the communities of the members of `x`.
    pub fn community_of(&self, x: PointSet) -> PointSet {
        x.iter().fold(PointSet::EMPTY, |a, p| a | self.community[p])
    }

    pub fn atoms(&self) -> &[PointSet] {
        &self.atoms
    }

    /// Union of the atoms inside `community(p)`.
    pub fn kernel(&self, p: usize) -> PointSet {
        let c = self.community[p];
        self.atoms
            .iter()
            .filter(|a| a.is_subset(c))
            .fold(PointSet::EMPTY, |acc, &a| acc | a)
    }

    pub fn kernel_of(&self, x: PointSet) -> PointSet {
        x.iter().fold(PointSet::EMPTY, |a, p| a | self.kernel(p))
    }

    pub fn covers(&self, p: usize) -> &[PointSet] {
        &self.covers[p]
    }

    pub fn regular_opens(&self) -> &[PointSet] {
        &self.regular_opens
    }

    /// Regular points.
    pub fn regular_points(&self) -> PointSet {
        self.regular
    }

    /// `O ⋔ T ⋔ O'` implies `O ⋔ O'` for all opens.
    pub fn is_transitive(&self, t: PointSet) -> bool {
        let touching: Vec<PointSet> = self
            .s
            .nonempty_opens()
            .iter()
            .copied()
            .filter(|o| o.meets(t))
            .collect();
        pairwise_meet(&touching, PointSet::full(self.s.len()))
    }

    /// `O ⋔ T ⋔ O'` implies `O ∩ O' ∩ T ≠ ∅`.
    pub fn is_strongly_transitive(&self, t: PointSet) -> bool {
        let touching: Vec<PointSet> = self
            .s
            .nonempty_opens()
            .iter()
            .copied()
            .filter(|o| o.meets(t))
            .collect();
        pairwise_meet(&touching, t)
    }

    pub fn is_topen(&self, t: PointSet) -> bool {
        !t.is_empty() && self.s.is_open(t) && self.is_transitive(t)
    }

    pub fn is_strong_topen(&self, t: PointSet) -> bool {
        !t.is_empty() && self.s.is_open(t) && self.is_strongly_transitive(t)
    }

    /// All nonempty opens inside `t` pairwise intersect.
    pub fn is_hyperconnected(&self, t: PointSet) -> bool {
        let inside: Vec<PointSet> = self
            .s
            .nonempty_opens()
            .iter()
            .copied()
            .filter(|o| o.is_subset(t))
            .collect();
        pairwise_meet(&inside, PointSet::full(self.s.len()))
    }

    pub fn is_regular(&self, p: usize) -> bool {
        self.regular.contains(p)
    }

    pub fn is_weakly_regular(&self, p: usize) -> bool {
        self.community[p].contains(p)
    }

    pub fn is_quasiregular(&self, p: usize) -> bool {
        !self.community[p].is_empty()
    }

    pub fn is_indirectly_regular(&self, p: usize) -> bool {
        self.k[p].meets(self.regular)
    }

    /// `p' ⋔ p ⋔ p''` implies `p' ⋔ p''`.
    pub fn is_unconflicted(&self, p: usize) -> bool {
        let kp = self.k[p];
        kp.iter().all(|q| kp.is_subset(self.k[q]))
    }

    /// Opens meeting every neighbourhood of `p` pairwise intersect.
    pub fn is_hypertransitive(&self, p: usize) -> bool {
        let near: Vec<PointSet> = self
            .s
            .nonempty_opens()
            .iter()
            .copied()
            .filter(|&o| self.covers[p].iter().all(|c| c.meets(o)))
            .collect();
        pairwise_meet(&near, PointSet::full(self.s.len()))
    }

    /// Every extremal valuation is definite at `p`.
    pub fn is_hyperdefinite(&self, p: usize) -> bool {
        let u = self.s.universe();
        self.regular_opens
            .iter()
            .all(|&o| o.contains(p) || self.s.interior(u - o).contains(p))
    }

    /// The intertwined set is a closed neighbourhood minimal among all closed neighbourhoods.
    pub fn is_mcn(&self, p: usize) -> bool {
        let kp = self.k[p];
        if self.s.interior(kp).is_empty() {
            return false;
        }
        !self
            .s
            .closed_sets()
            .into_iter()
            .any(|c| c != kp && c.is_subset(kp) && !self.s.interior(c).is_empty())
    }

    pub fn neighbourhood_invariants(&self, p: usize) -> Result<NeighbourhoodInvariants> {
        self.check(p)?;
        Ok(NeighbourhoodInvariants {
            intertwined_set: self.k[p],
            community: self.community[p],
            kernel: self.kernel(p),
            covers: self.covers[p].clone(),
            boundary_of_k: self.k[p] - self.community[p],
        })
    }

    pub fn classify(&self, p: usize) -> Result<Classification> {
        self.check(p)?;
        let unconflicted = self.is_unconflicted(p);
        Ok(Classification {
            regular: self.is_regular(p),
            weakly_regular: self.is_weakly_regular(p),
            quasiregular: self.is_quasiregular(p),
            indirectly_regular: self.is_indirectly_regular(p),
            unconflicted,
            conflicted: !unconflicted,
            hypertransitive: self.is_hypertransitive(p),
            hyperdefinite: self.is_hyperdefinite(p),
            mcn: self.is_mcn(p),
        })
    }

    /// Maximal topens are the communities of regular points.
    pub fn topen_partition(&self) -> TopenPartition {
        let mut topens: Vec<PointSet> = self.regular.iter().map(|p| self.community[p]).collect();
        topens.sort();
        topens.dedup();
        TopenPartition {
            maximal_topens: topens,
            irregular_points: self.s.universe() - self.regular,
        }
    }

    /// Minimal closed neighbourhoods, globally or of one point.
    pub fn min_closed_neighbourhoods(&self, scope: Scope) -> Result<Vec<PointSet>> {
        if let Scope::OfPoint(p) = scope {
            self.check(p)?;
        }
        let cands: Vec<PointSet> = self
            .s
            .closed_sets()
            .into_iter()
            .filter(|&c| {
                let i = self.s.interior(c);
                match scope {
                    Scope::All => !i.is_empty(),
                    Scope::OfPoint(p) => i.contains(p),
                }
            })
            .collect();
        Ok(minimal(&cands))
    }

    /// Weak and strong density of `d` in the open set `p`.
    pub fn dense_check(&self, d: PointSet, p: PointSet) -> Result<Density> {
        if d.is_empty() {
            return Err(Error::Precondition("dense set is empty".into()));
        }
        if !d.is_subset(p) {
            return Err(Error::Precondition("dense set is not inside the ambient set".into()));
        }
        if !self.s.is_open(p) {
            return Err(Error::Precondition("ambient set is not open".into()));
        }
        let opens = self.s.nonempty_opens();
        Ok(Density {
            weakly: opens.iter().filter(|o| o.is_subset(p)).all(|o| o.meets(d)),
            strongly: opens.iter().filter(|o| o.meets(p)).all(|o| o.meets(d)),
        })
    }

    /// Equivalence classes of the reflexive-transitive closure of intertwinedness.
    pub fn intertwined_components(&self) -> Vec<PointSet> {
        let n = self.s.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let nx = parent[y];
                parent[y] = r;
                y = nx;
            }
            r
        }
        for p in 0..n {
            for q in self.k[p] {
                let (a, b) = (find(&mut parent, p), find(&mut parent, q));
                // least label index is the representative
                if a < b {
                    parent[b] = a;
                } else if b < a {
                    parent[a] = b;
                }
            }
        }
        let mut comps = vec![PointSet::EMPTY; n];
        for p in 0..n {
            let r = find(&mut parent, p);
            comps[r].insert(p);
        }
        comps.into_iter().filter(|c| !c.is_empty()).collect()
    }

    pub fn point_relations(&self, p: usize, q: usize) -> Result<PointRelations> {
        self.check(p)?;
        self.check(q)?;
        let u = self.s.universe();
        let mut consensus = true;
        let mut hyper = true;
        for &o in &self.regular_opens {
            let out = self.s.interior(u - o);
            let (pin, qin) = (o.contains(p), o.contains(q));
            let (pout, qout) = (out.contains(p), out.contains(q));
            if pin != qin || pout != qout {
                consensus = false;
            }
            if !((pin && qin) || (pout && qout)) {
                hyper = false;
            }
        }
        let top_indis = self
            .s
            .opens()
            .iter()
            .all(|o| o.contains(p) == o.contains(q));
        let trans = self
            .intertwined_components()
            .iter()
            .any(|c| c.contains(p) && c.contains(q));
        Ok(PointRelations {
            intertwined: self.intertwined(p, q),
            top_indistinguishable: top_indis,
            consensus_equivalent: consensus,
            hypertwined: hyper,
            transitively_intertwined: trans,
        })
    }

    /// All topens, by scanning every nonempty open.
    pub fn topens(&self) -> Vec<PointSet> {
        self.s
            .nonempty_opens()
            .iter()
            .copied()
            .filter(|&o| self.is_transitive(o))
            .collect()
    }

    pub fn maximal_topens_by_scan(&self) -> Vec<PointSet> {
        maximal(&self.topens())
    }
}

fn pairwise_meet(family: &[PointSet], within: PointSet) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, &a)| family[i..].iter().all(|&b| (a & b).meets(within)))
}
