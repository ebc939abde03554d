//! Semiframes, semifilters, abstract points and soberification.

use crate::error::{check_bound, Error, Result};
use crate::pointset::PointSet;
use crate::space::{Mode, Semitopology};

/// Default cap on carrier size.
pub const DEFAULT_CARRIER_BOUND: usize = 20;

/// A finite join-semilattice with a compatibility relation.
///
/// Subsets of the carrier are [`PointSet`]s over element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiframe {
    labels: Vec<String>,
    up: Vec<PointSet>,
    compat: Vec<PointSet>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualRegularity {
    pub transitive_elements: PointSet,
    /// `F*`: elements compatible with every member.
    pub compat_system: PointSet,
    pub strongly_compatible: bool,
    pub frame_community: usize,
    pub quasiregular: bool,
    pub weakly_regular: bool,
    pub regular: bool,
}

impl Semiframe {
    /// Builds from a strict-or-reflexive order table and a compatibility table.
    ///
    /// `leq` is closed reflexively and transitively; joins must exist.
    pub fn new(labels: Vec<String>, leq: &[(usize, usize)], compat: &[(usize, usize)]) -> Result<Self> {
        let m = labels.len();
        check_bound("semiframe carrier", m, crate::pointset::MAX_POINTS)?;
        if m == 0 {
            return Err(Error::InvalidSemiframe("carrier is empty".into()));
        }
        let mut up: Vec<PointSet> = (0..m).map(PointSet::singleton).collect();
        for &(a, b) in leq {
            if a >= m || b >= m {
                return Err(Error::InvalidSemiframe("order pair out of range".into()));
            }
            up[a].insert(b);
        }
        // transitive closure
        loop {
            let mut changed = false;
            for a in 0..m {
                let reach = up[a].iter().fold(up[a], |acc, b| acc | up[b]);
                if reach != up[a] {
                    up[a] = reach;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..m {
            for b in up[a] {
                if a != b && up[b].contains(a) {
                    return Err(Error::InvalidSemiframe(format!(
                        "`{}` and `{}` are mutually below each other",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        let mut cm = vec![PointSet::EMPTY; m];
        for &(a, b) in compat {
            if a >= m || b >= m {
                return Err(Error::InvalidSemiframe("compatibility pair out of range".into()));
            }
            cm[a].insert(b);
            cm[b].insert(a);
        }
        let lub = |s: PointSet| -> Option<usize> {
            let ubs: Vec<usize> = (0..m).filter(|&u| s.iter().all(|x| up[x].contains(u))).collect();
            ubs.iter().copied().find(|&u| ubs.iter().all(|&v| up[u].contains(v)))
        };
        let bottom = lub(PointSet::EMPTY)
            .ok_or_else(|| Error::InvalidSemiframe("no least element".into()))?;
        let mut join = vec![vec![0; m]; m];
        for a in 0..m {
            for b in 0..m {
                join[a][b] = lub(PointSet::from_indices([a, b])).ok_or_else(|| {
                    Error::InvalidSemiframe(format!("`{}` and `{}` have no join", labels[a], labels[b]))
                })?;
            }
        }
        let top = (0..m).fold(bottom, |acc, x| join[acc][x]);
        let f = Semiframe {
            labels,
            up,
            compat: cm,
            join,
            bottom,
            top,
        };
        f.validate_compat()?;
        Ok(f)
    }

    fn validate_compat(&self) -> Result<()> {
        let m = self.len();
        for x in 0..m {
            if self.compat[x].contains(x) == (x == self.bottom) {
                return Err(Error::InvalidSemiframe(format!(
                    "`{}` must be self-compatible exactly when it is not bottom",
                    self.labels[x]
                )));
            }
            for a in 0..m {
                for b in 0..m {
                    let lhs = self.compat[x].contains(self.join[a][b]);
                    let rhs = self.compat[x].contains(a) || self.compat[x].contains(b);
                    if lhs != rhs {
                        return Err(Error::InvalidSemiframe(format!(
                            "compatibility of `{}` does not distribute over `{}` and `{}`",
                            self.labels[x], self.labels[a], self.labels[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The semiframe of opens: inclusion and intersection.
    ///
    /// Element `i` is the `i`-th open of `s` in canonical order.
    pub fn of_space(s: &Semitopology) -> Self {
        let opens = s.opens();
        let m = opens.len();
        let labels = opens.iter().map(|&o| s.fmt_set(o)).collect();
        let up = opens
            .iter()
            .map(|&a| (0..m).filter(|&j| a.is_subset(opens[j])).collect())
            .collect();
        let compat = opens
            .iter()
            .map(|&a| (0..m).filter(|&j| a.meets(opens[j])).collect())
            .collect();
        let idx = |o: PointSet| opens.binary_search(&o).expect("union of opens is open");
        let join = (0..m)
            .map(|a| (0..m).map(|b| idx(opens[a] | opens[b])).collect())
            .collect();
        Semiframe {
            labels,
            up,
            compat,
            join,
            bottom: 0,
            top: m - 1,
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

    pub fn index_of(&self, l: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::InvalidSemiframe(format!("unknown element `{}`", l)))
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.compat[a].contains(b)
    }

    pub fn join2(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn join(&self, s: PointSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join[acc][x])
    }

    pub fn up_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc | self.up[x])
    }

    /// Order pairs `a < b` and compatible pairs `a ≤ b` by index, for serialisation.
    pub fn tables(&self) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let m = self.len();
        let mut leq = Vec::new();
        let mut compat = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a != b && self.le(a, b) {
                    leq.push((a, b));
                }
                if a <= b && self.compatible(a, b) {
                    compat.push((a, b));
                }
            }
        }
        (leq, compat)
    }

    pub fn is_semifilter(&self, f: PointSet) -> bool {
        !f.is_empty()
            && f.is_subset(self.carrier())
            && self.up_closure(f) == f
            && f.iter().all(|x| f.is_subset(self.compat[x]))
    }

    /// `⋁X' ∈ F` implies `X' ∩ F ≠ ∅`, for every subset, including the empty one.
    pub fn is_completely_prime(&self, f: PointSet) -> bool {
        // the join of the complement bounds every join that avoids F
        !f.contains(self.join(self.carrier() - f))
    }

    pub fn is_abstract_point(&self, f: PointSet) -> bool {
        self.is_semifilter(f) && self.is_completely_prime(f)
    }

    /// All semifilters, as up-closures of pairwise compatible antichains.
    pub fn semifilters(&self) -> Result<Vec<PointSet>> {
        check_bound("semiframe carrier", self.len(), DEFAULT_CARRIER_BOUND)?;
        let m = self.len();
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        self.antichains(0, m, &mut chosen, &mut out);
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn antichains(&self, from: usize, m: usize, chosen: &mut Vec<usize>, out: &mut Vec<PointSet>) {
        for x in from..m {
            let ok = self.compatible(x, x)
                && chosen
                    .iter()
                    .all(|&y| self.compatible(x, y) && !self.le(x, y) && !self.le(y, x));
            if ok {
                chosen.push(x);
                out.push(self.up_closure(PointSet::from_indices(chosen.iter().copied())));
                self.antichains(x + 1, m, chosen, out);
                chosen.pop();
            }
        }
    }

    /// Completely prime semifilters, in canonical order.
    pub fn abstract_points(&self) -> Result<Vec<PointSet>> {
        Ok(self
            .semifilters()?
            .into_iter()
            .filter(|&f| self.is_completely_prime(f))
            .collect())
    }

    /// Abstract points containing `x`.
    pub fn op(&self, points: &[PointSet], x: usize) -> PointSet {
        points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.contains(x))
            .map(|(i, _)| i)
            .collect()
    }

    fn point_label(&self, p: PointSet) -> String {
        let mins: Vec<&str> = p
            .iter()
            .filter(|&x| !p.iter().any(|y| y != x && self.le(y, x)))
            .map(|x| self.labels[x].as_str())
            .collect();
        format!("[{}]", mins.join(";"))
    }

    /// The space of abstract points, with opens `Op(x)`.
    ///
    /// Points are labelled by the minimal elements of their semifilter.
    pub fn st(&self) -> Result<(Semitopology, Vec<PointSet>)> {
        let points = self.abstract_points()?;
        let labels = points.iter().map(|&p| self.point_label(p)).collect();
        let gens: Vec<PointSet> = (0..self.len()).map(|x| self.op(&points, x)).collect();
        let s = Semitopology::from_index_sets(labels, &gens, Mode::Generators)?;
        Ok((s, points))
    }

    /// `Op` reflects order and compatibility.
    pub fn is_spatial(&self) -> Result<bool> {
        let points = self.abstract_points()?;
        let m = self.len();
        let ops: Vec<PointSet> = (0..m).map(|x| self.op(&points, x)).collect();
        for a in 0..m {
            for b in 0..m {
                if ops[a].is_subset(ops[b]) && !self.le(a, b) {
                    return Ok(false);
                }
                if self.compatible(a, b) && !ops[a].meets(ops[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_transitive_element(&self, x: usize) -> bool {
        x != self.bottom && {
            let xs = self.compat[x];
            xs.iter().all(|a| xs.is_subset(self.compat[a]))
        }
    }

    pub fn transitive_elements(&self) -> PointSet {
        (0..self.len()).filter(|&x| self.is_transitive_element(x)).collect()
    }

    /// `x*`.
    pub fn compat_of(&self, x: usize) -> PointSet {
        self.compat[x]
    }

    /// `F*`, the elements compatible with every member of `f`.
    pub fn compat_system(&self, f: PointSet) -> PointSet {
        f.iter().fold(self.carrier(), |acc, x| acc & self.compat[x])
    }

    /// `F*` is nonempty and pairwise compatible.
    pub fn is_strongly_compatible(&self, f: PointSet) -> bool {
        let fs = self.compat_system(f);
        !fs.is_empty() && fs.iter().all(|x| fs.is_subset(self.compat[x]))
    }

    /// Join of the elements whose compatibility system lies inside `F*`.
    pub fn frame_community(&self, f: PointSet) -> usize {
        let fs = self.compat_system(f);
        let below: PointSet = (0..self.len()).filter(|&x| self.compat[x].is_subset(fs)).collect();
        self.join(below)
    }

    pub fn dual_regularity(&self, f: PointSet) -> Result<DualRegularity> {
        if !self.is_semifilter(f) {
            return Err(Error::InvalidSemifilter(format!(
                "{{{}}}",
                f.iter().map(|x| self.labels[x].as_str()).collect::<Vec<_>>().join(",")
            )));
        }
        let c = self.frame_community(f);
        let weakly = f.contains(c);
        Ok(DualRegularity {
            transitive_elements: self.transitive_elements(),
            compat_system: self.compat_system(f),
            strongly_compatible: self.is_strongly_compatible(f),
            frame_community: c,
            quasiregular: c != self.bottom,
            weakly_regular: weakly,
            regular: weakly && self.is_transitive_element(c),
        })
    }
}

/// The neighbourhood semifilter of `p`: indices of opens containing `p`.
pub fn nbhd(s: &Semitopology, p: usize) -> PointSet {
    s.opens()
        .iter()
        .enumerate()
        .filter(|(_, o)| o.contains(p))
        .map(|(i, _)| i)
        .collect()
}

/// A space rebuilt from the abstract points of its open-set semiframe.
#[derive(Clone, Debug)]
pub struct Soberification {
    pub space: Semitopology,
    /// Abstract points as sets of opens of the original space.
    pub points: Vec<PointSet>,
    /// Original point index to abstract point index.
    pub nbhd: Vec<usize>,
}

impl Soberification {
    /// Original points whose neighbourhood semifilter lies in the given open.
    pub fn preimage(&self, open: PointSet) -> PointSet {
        self.nbhd
            .iter()
            .enumerate()
            .filter(|(_, &q)| open.contains(q))
            .map(|(p, _)| p)
            .collect()
    }
}

pub fn soberify(s: &Semitopology) -> Result<Soberification> {
    let fr = Semiframe::of_space(s);
    let (space, points) = fr.st()?;
    let nb = (0..s.len())
        .map(|p| {
            let f = nbhd(s, p);
            points
                .iter()
                .position(|&q| q == f)
                .ok_or_else(|| Error::InvalidSemifilter("neighbourhood semifilter is not an abstract point".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Soberification {
        space,
        points,
        nbhd: nb,
    })
}

/// Distinct points have distinct open neighbourhoods.
pub fn is_t0(s: &Semitopology) -> bool {
    let nb: Vec<PointSet> = (0..s.len()).map(|p| nbhd(s, p)).collect();
    (0..nb.len()).all(|i| (i + 1..nb.len()).all(|j| nb[i] != nb[j]))
}

/// Every abstract point is the neighbourhood semifilter of exactly one point.
pub fn is_sober(s: &Semitopology) -> Result<bool> {
    let points = Semiframe::of_space(s).abstract_points()?;
    let nb: Vec<PointSet> = (0..s.len()).map(|p| nbhd(s, p)).collect();
    Ok(points
        .iter()
        .all(|pt| nb.iter().filter(|&&x| x == *pt).count() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn triangle_points_are_neighbourhoods_plus_the_top_semifilter() {
        let s = catalog("fig-triangle", 0).unwrap();
        let f = Semiframe::of_space(&s);
        let pts = f.abstract_points().unwrap();
        assert_eq!(pts.len(), 4);
        assert!(pts.contains(&f.carrier().without(f.bottom())));
        assert!(!is_sober(&s).unwrap());
        assert!(is_t0(&s));
    }

    #[test]
    fn sierpinski_is_sober() {
        let s = catalog("sierpinski", 0).unwrap();
        assert!(is_sober(&s).unwrap());
    }

    #[test]
    fn empty_space_frame() {
        let f = Semiframe::of_space(&Semitopology::empty());
        assert_eq!(f.len(), 1);
        assert_eq!(f.top(), f.bottom());
        assert!(!f.compatible(0, 0));
        assert!(f.abstract_points().unwrap().is_empty());
    }
}
