//! The truth space `{T, B, F}` and valuations into it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::Semitopology;

/// A truth value. The derived order is `F < B < T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Three {
    F,
    B,
    T,
}

impl Three {
    pub const ALL: [Three; 3] = [Three::T, Three::B, Three::F];

    /// `T` and `B` are designated.
    pub fn designated(self) -> bool {
        self != Three::F
    }

    pub fn is_definite(self) -> bool {
        self != Three::B
    }

    pub fn as_char(self) -> char {
        match self {
            Three::T => 'T',
            Three::B => 'B',
            Three::F => 'F',
        }
    }
}

impl fmt::Display for Three {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Three {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "T" => Ok(Three::T),
            "B" => Ok(Three::B),
            "F" => Ok(Three::F),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("expected T, B or F, got `{}`", other),
            }),
        }
    }
}

/// A total map from point indices to [`Three`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation3(pub Vec<Three>);

impl Valuation3 {
    pub fn constant(n: usize, v: Three) -> Self {
        Valuation3(vec![v; n])
    }

    /// Valuation with `T` on `t`, `F` on `f`, and `B` elsewhere.
    pub fn from_sets(n: usize, t: PointSet, f: PointSet) -> Self {
        Valuation3(
            (0..n)
                .map(|i| {
                    if t.contains(i) {
                        Three::T
                    } else if f.contains(i) {
                        Three::F
                    } else {
                        Three::B
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Three {
        self.0[i]
    }

    pub fn preimage(&self, vals: &[Three]) -> PointSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| vals.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Points mapped to `T` or `B`.
    pub fn designated(&self) -> PointSet {
        self.preimage(&[Three::T, Three::B])
    }

    /// Points mapped to `F` or `B`.
    pub fn neg_designated(&self) -> PointSet {
        self.preimage(&[Three::F, Three::B])
    }

    /// Points mapped to `T` or `F`.
    pub fn definite(&self) -> PointSet {
        self.preimage(&[Three::T, Three::F])
    }

    /// `self ≤ other`: `other` agrees with `self` wherever `self` is definite.
    pub fn le(&self, other: &Valuation3) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| !a.is_definite() || a == b)
    }

    /// Every valuation on `n` points, in lexicographic order of `T, B, F`.
    pub fn all(n: usize) -> impl Iterator<Item = Valuation3> {
        let total = 3usize.pow(n as u32);
        (0..total).map(move |mut k| {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push(Three::ALL[k % 3]);
                k /= 3;
            }
            Valuation3(v)
        })
    }

    pub fn to_string_compact(&self) -> String {
        self.0.iter().map(|v| v.as_char()).collect()
    }
}

impl Semitopology {
    /// Continuity into the three-point space with opens `∅,{T},{F},{T,F}` and all.
    pub fn is_continuous_valuation(&self, f: &Valuation3) -> bool {
        f.len() == self.len()
            && self.is_open(f.preimage(&[Three::T]))
            && self.is_open(f.preimage(&[Three::F]))
    }

    /// All continuous valuations, by filtering the `3^n` candidates.
    pub fn continuous_valuations(&self) -> Vec<Valuation3> {
        Valuation3::all(self.len())
            .filter(|f| self.is_continuous_valuation(f))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_designation() {
        assert!(Three::F < Three::B && Three::B < Three::T);
        assert!(Three::B.designated());
        assert!(!Three::F.designated());
    }

    #[test]
    fn enumerate_all() {
        assert_eq!(Valuation3::all(3).count(), 27);
        assert_eq!(Valuation3::all(0).count(), 1);
    }
}
