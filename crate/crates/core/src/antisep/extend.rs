use super::Analysis;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Continuity at `p` of a partial assignment: constant and defined on some open neighbourhood.
fn partial_continuous_at<V: PartialEq>(a: &Analysis, f: &[Option<V>], p: usize) -> bool {
    match &f[p] {
        None => false,
        Some(v) => a
            .space()
            .open_nbhds(p)
            .any(|o| o.iter().all(|q| f[q].as_ref() == Some(v))),
    }
}

/// Extends `f`, continuous on `d`, to an assignment continuous at every regular point.
///
/// Where `f` is continuous its value is kept. A regular point whose community
/// meets `d` takes the value at the least such point of `d`. Everything else
/// gets `default`.
pub fn extend_to_regular<V: Clone + PartialEq>(
    a: &Analysis,
    f: &[Option<V>],
    d: PointSet,
    default: V,
) -> Result<Vec<V>> {
    let s = a.space();
    if f.len() != s.len() {
        return Err(Error::Precondition(format!(
            "assignment has {} values for {} points",
            f.len(),
            s.len()
        )));
    }
    if !d.is_subset(s.universe()) {
        return Err(Error::Precondition("domain is not inside the universe".into()));
    }
    if let Some(bad) = d.iter().find(|&p| !partial_continuous_at(a, f, p)) {
        return Err(Error::Precondition(format!(
            "assignment is not continuous at `{}`",
            s.label(bad)
        )));
    }
    let mut g = Vec::with_capacity(s.len());
    for p in 0..s.len() {
        let v = if partial_continuous_at(a, f, p) {
            f[p].clone().unwrap()
        } else if a.is_regular(p) {
            match (a.community(p) & d).first() {
                Some(q) => f[q].clone().unwrap(),
                None => default.clone(),
            }
        } else {
            default.clone()
        };
        g.push(v);
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelLimit<V> {
    pub confident: bool,
    pub unanimous: bool,
    pub limit: Option<V>,
}

/// Confidence, unanimity and the kernel limit of `f` at `p`.
///
/// For a point that is not regular all three are reported as absent.
pub fn kernel_limit<V: Clone + PartialEq>(a: &Analysis, f: &[V], p: usize) -> Result<KernelLimit<V>> {
    let s = a.space();
    if p >= s.len() {
        return Err(Error::UnknownPoint(p.to_string()));
    }
    if !a.is_regular(p) {
        return Ok(KernelLimit {
            confident: false,
            unanimous: false,
            limit: None,
        });
    }
    let good = s.continuity_set(f)?;
    let kernel = a.kernel(p);
    let atom = a
        .atoms()
        .iter()
        .copied()
        .find(|at| at.is_subset(kernel) && at.is_subset(good));
    Ok(KernelLimit {
        confident: atom.is_some(),
        unanimous: a.community(p).is_subset(good),
        limit: atom.map(|at| f[at.first().unwrap()].clone()),
    })
}
