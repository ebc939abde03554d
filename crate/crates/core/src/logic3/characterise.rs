//! Predicates whose validity characterises properties of points of a
//! witness semitopology. Each builder takes point indices; `Kw`/`Ew` refer
//! to the witness function of the evaluating [`Model`](super::Model).

use super::pred::{Modality, Pred};
use crate::error::{Error, Result};

fn kw(p: Pred) -> Pred {
    Pred::modal(Modality::Kw, p)
}

fn ew(p: Pred) -> Pred {
    Pred::modal(Modality::Ew, p)
}

fn tw(a: Pred, b: Pred) -> Pred {
    kw(Pred::mat_iff(a, b))
}

fn x() -> Pred {
    Pred::var("x")
}

/// Every continuous valuation makes `p` and `q` agree up to `B`.
pub fn intertwined_w(p: usize, q: usize) -> Pred {
    tw(Pred::Atom(p), Pred::Atom(q))
}

pub fn top_indis_w(p: usize, q: usize) -> Pred {
    kw(Pred::iff(Pred::Atom(p), Pred::Atom(q)))
}

/// `∀x. x ↔ (p ⋔ x)`: the designated points are exactly those intertwined with `p`.
fn designates_intertwined(p: usize) -> Pred {
    Pred::forall("x", Pred::iff(x(), tw(Pred::Atom(p), x())))
}

pub fn quasi_regular_w(p: usize) -> Pred {
    ew(Pred::and(
        Pred::exists("x", Pred::box_t(x())),
        designates_intertwined(p),
    ))
}

pub fn weakly_regular_w(p: usize) -> Pred {
    ew(Pred::and(Pred::box_t(Pred::Atom(p)), designates_intertwined(p)))
}

pub fn unconflicted_w(p: usize) -> Pred {
    let (y, z) = (Pred::var("y"), Pred::var("z"));
    Pred::forall(
        "y",
        Pred::forall(
            "z",
            Pred::imp(
                Pred::and(tw(y.clone(), Pred::Atom(p)), tw(Pred::Atom(p), z.clone())),
                tw(y, z),
            ),
        ),
    )
}

pub fn regular_w(p: usize) -> Pred {
    Pred::and(weakly_regular_w(p), unconflicted_w(p))
}

pub fn regular_prime_w(p: usize) -> Pred {
    let y = || Pred::var("y");
    let pt = |v: Pred| tw(Pred::Atom(p), v);
    let inner = Pred::imp(
        Pred::exists("x", Pred::box_t(x())),
        Pred::imp(
            Pred::forall("y", Pred::imp(y(), pt(y()))),
            Pred::forall("y", Pred::imp(pt(y()), y())),
        ),
    );
    Pred::and(weakly_regular_w(p), kw(inner))
}

/// Builder names for the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Characterisation {
    Intertwined,
    TopIndis,
    QuasiRegular,
    WeaklyRegular,
    Unconflicted,
    Regular,
    RegularPrime,
}

impl Characterisation {
    pub const NAMES: [&'static str; 7] = [
        "intertwined",
        "top-indis",
        "quasi-regular",
        "weakly-regular",
        "unconflicted",
        "regular",
        "regular-prime",
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        use Characterisation::*;
        Ok(match name {
            "intertwined" => Intertwined,
            "top-indis" => TopIndis,
            "quasi-regular" => QuasiRegular,
            "weakly-regular" => WeaklyRegular,
            "unconflicted" => Unconflicted,
            "regular" => Regular,
            "regular-prime" => RegularPrime,
            other => return Err(Error::Precondition(format!("unknown characterisation `{}`", other))),
        })
    }

    pub fn arity(self) -> usize {
        match self {
            Characterisation::Intertwined | Characterisation::TopIndis => 2,
            _ => 1,
        }
    }

    pub fn build(self, args: &[usize]) -> Result<Pred> {
        if args.len() != self.arity() {
            return Err(Error::Precondition(format!("expected {} point arguments, got {}", self.arity(), args.len())));
        }
        use Characterisation::*;
        Ok(match self {
            Intertwined => intertwined_w(args[0], args[1]),
            TopIndis => top_indis_w(args[0], args[1]),
            QuasiRegular => quasi_regular_w(args[0]),
            WeaklyRegular => weakly_regular_w(args[0]),
            Unconflicted => unconflicted_w(args[0]),
            Regular => regular_w(args[0]),
            RegularPrime => regular_prime_w(args[0]),
        })
    }
}
