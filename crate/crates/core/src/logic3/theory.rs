use super::pred::Pred;
use super::{and, imp, neg, or};
use crate::error::Result;
use crate::three::{Three, Valuation3};
use crate::witness::WitnessFunction;

fn atoms(w: &WitnessFunction, p: usize, lit: impl Fn(usize) -> Pred) -> Pred {
    Pred::and_all(
        w.witness_sets(p)
            .iter()
            .map(|ws| Pred::or_all(ws.iter().map(&lit))),
    )
}

/// The theory whose models are the valuations continuous on the witness
/// semitopology of `w`. With `extremal` set, the extra cover axioms cut the
/// models down to the extremal valuations.
pub fn theory_ax(w: &WitnessFunction, extremal: bool) -> Result<Pred> {
    let mut parts = Vec::new();
    for p in 0..w.len() {
        parts.push(Pred::imp(atoms(w, p, Pred::Atom), Pred::Atom(p)));
        parts.push(Pred::imp(
            atoms(w, p, |q| Pred::not(Pred::Atom(q))),
            Pred::not(Pred::Atom(p)),
        ));
    }
    if extremal {
        let s = w.witness_opens()?;
        for p in 0..w.len() {
            let covers = s.covers(p);
            let side = |lit: &dyn Fn(usize) -> Pred| {
                Pred::and_all(covers.iter().map(|c| Pred::or_all(c.iter().map(|q| Pred::box_t(lit(q))))))
            };
            parts.push(Pred::imp(Pred::Atom(p), side(&Pred::Atom)));
            parts.push(Pred::imp(
                Pred::not(Pred::Atom(p)),
                side(&|q| Pred::not(Pred::Atom(q))),
            ));
        }
    }
    Ok(Pred::and_all(parts))
}

/// The value of `theory_ax(w, false)` under `f`, computed directly.
pub fn ax_value(w: &WitnessFunction, f: &Valuation3) -> Three {
    let mut acc = Three::T;
    for p in 0..w.len() {
        let ws = w.witness_sets(p);
        let body = |g: &dyn Fn(Three) -> Three| {
            ws.iter()
                .map(|s| s.iter().map(|q| g(f.get(q))).fold(Three::F, or))
                .fold(Three::T, and)
        };
        acc = and(acc, imp(body(&|v| v), f.get(p)));
        acc = and(acc, imp(body(&neg), neg(f.get(p))));
        if acc == Three::F {
            break;
        }
    }
    acc
}

/// The open-set presentation of the same theory: a point that is `T`
/// (resp. `F`) must have a witness-set that is entirely `T` (resp. `F`).
pub fn open_ax(w: &WitnessFunction) -> Pred {
    let side = |p: usize, lit: &dyn Fn(usize) -> Pred| {
        Pred::imp(
            Pred::box_t(lit(p)),
            Pred::or_all(
                w.witness_sets(p)
                    .iter()
                    .map(|ws| Pred::and_all(ws.iter().map(|q| Pred::box_t(lit(q))))),
            ),
        )
    };
    Pred::and_all((0..w.len()).flat_map(|p| {
        [side(p, &Pred::Atom), side(p, &|q| Pred::not(Pred::Atom(q)))]
    }))
}
