//! Tag-sequents and their derivability.
//!
//! A sequent is a set of tagged predicates. It is valid when every
//! valuation gives some entry a value inside its tag.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::eval::Model;
use super::parse::parse_at;
use super::pred::{BinOp, Modality, Pred, UnOp};
use super::theory::theory_ax;
use crate::error::{check_bound, Error, Result};
use crate::pointset::MAX_POINTS;
use crate::three::{Three, Valuation3};
use crate::witness::WitnessFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// `{T, B}`
    TB,
    /// `{F}`
    FF,
    /// `{F, B}`
    FB,
    /// `{T}`
    TT,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::TB, Tag::FF, Tag::FB, Tag::TT];

    pub fn accepts(self, v: Three) -> bool {
        match self {
            Tag::TB => v != Three::F,
            Tag::FF => v == Three::F,
            Tag::FB => v != Three::T,
            Tag::TT => v == Three::T,
        }
    }

    /// The tag `t'` with `t:¬φ` equivalent to `t':φ`.
    pub fn neg(self) -> Tag {
        match self {
            Tag::TB => Tag::FB,
            Tag::FB => Tag::TB,
            Tag::FF => Tag::TT,
            Tag::TT => Tag::FF,
        }
    }

    /// Tags closed upwards in the truth order.
    fn is_upper(self) -> bool {
        matches!(self, Tag::TB | Tag::TT)
    }

    fn mask(self) -> u8 {
        Three::ALL
            .iter()
            .enumerate()
            .filter(|(_, v)| self.accepts(**v))
            .fold(0, |m, (i, _)| m | 1 << i)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::TB => "TB",
            Tag::FF => "FF",
            Tag::FB => "FB",
            Tag::TT => "TT",
        })
    }
}

impl FromStr for Tag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tag> {
        match s.trim() {
            "TB" => Ok(Tag::TB),
            "FF" => Ok(Tag::FF),
            "FB" => Ok(Tag::FB),
            "TT" => Ok(Tag::TT),
            other => Err(Error::Parse { line: 0, msg: format!("unknown tag `{}`", other) }),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TagSequent {
    pub entries: BTreeSet<(Tag, Pred)>,
}

impl TagSequent {
    pub fn new<I: IntoIterator<Item = (Tag, Pred)>>(entries: I) -> Self {
        TagSequent { entries: entries.into_iter().collect() }
    }

    /// One `tag: predicate` per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, labels: &[String]) -> Result<Self> {
        let mut entries = BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let (tag, rest) = t.split_once(':').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "expected `tag: predicate`".into(),
            })?;
            let tag: Tag = tag.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("unknown tag `{}`", tag.trim()),
            })?;
            entries.insert((tag, parse_at(rest, labels, line_no)?));
        }
        Ok(TagSequent { entries })
    }

    pub fn render(&self, labels: &[String]) -> String {
        self.entries
            .iter()
            .map(|(t, p)| format!("{}: {}\n", t, p.render(labels)))
            .collect()
    }

    fn check(&self, n: usize) -> Result<()> {
        check_bound("points", n, MAX_POINTS)?;
        for (_, p) in &self.entries {
            if let Some(x) = p.free_vars().into_iter().next() {
                return Err(Error::FreeVariable(x));
            }
            if let Some(a) = p.max_atom().filter(|&a| a >= n) {
                return Err(Error::UnknownPoint(format!("#{}", a)));
            }
        }
        Ok(())
    }

    /// Validity by enumerating all `3^n` valuations.
    pub fn is_valid(&self, n: usize, witness: Option<&WitnessFunction>) -> Result<bool> {
        self.check(n)?;
        let m = match witness {
            Some(w) => Model::with_witness(w.clone()),
            None => Model::new(n),
        };
        let all: Vec<Valuation3> = {
            check_bound("valuation enumeration", n, super::DEFAULT_VALUATION_BOUND)?;
            Valuation3::all(n).collect()
        };
        let values: Vec<Vec<Three>> = self
            .entries
            .iter()
            .map(|(_, p)| m.eval_each(p, &all))
            .collect::<Result<_>>()?;
        Ok((0..all.len()).all(|i| {
            self.entries.iter().zip(&values).any(|((t, _), vs)| t.accepts(vs[i]))
        }))
    }

    /// Derivability in the sequent rules over `n` atoms. Witness-relative
    /// modalities are first unfolded into `K`/`E` of the witness theory.
    pub fn derive(&self, n: usize, witness: Option<&WitnessFunction>) -> Result<bool> {
        self.check(n)?;
        let mut ax = None;
        let mut entries = Vec::new();
        for (t, p) in &self.entries {
            let p = if p.uses_witness() {
                if ax.is_none() {
                    let w = witness.ok_or_else(|| {
                        Error::Precondition("witness-relative modality needs a witness function".into())
                    })?;
                    ax = Some(theory_ax(w, false)?);
                }
                unfold_witness(p, ax.as_ref().unwrap())
            } else {
                p.clone()
            };
            entries.push((*t, p));
        }
        Ok(derive(entries, n))
    }
}

fn unfold_witness(p: &Pred, ax: &Pred) -> Pred {
    let rec = |q: &Pred| Box::new(unfold_witness(q, ax));
    match p {
        Pred::Modal(Modality::Kw, a) => Pred::modal(Modality::K, Pred::imp(ax.clone(), unfold_witness(a, ax))),
        Pred::Modal(Modality::Ew, a) => Pred::modal(Modality::E, Pred::and(ax.clone(), unfold_witness(a, ax))),
        Pred::Const(_) | Pred::Atom(_) | Pred::Var(_) => p.clone(),
        Pred::Un(op, a) => Pred::Un(*op, rec(a)),
        Pred::Modal(m, a) => Pred::Modal(*m, rec(a)),
        Pred::Bin(op, a, b) => Pred::Bin(*op, rec(a), rec(b)),
        Pred::Forall(x, a) => Pred::Forall(x.clone(), rec(a)),
        Pred::Exists(x, a) => Pred::Exists(x.clone(), rec(a)),
    }
}

/// Rewrite a derived connective at the root into primitive ones
/// (`¬`, `∧`, `□T`, `K`, `∀`).
fn unfold(p: &Pred) -> Option<Pred> {
    use Pred as P;
    Some(match p {
        P::Un(UnOp::BoxTB, a) => P::not(P::box_t(P::not((**a).clone()))),
        P::Un(UnOp::BoxB, a) => P::and(
            P::not(P::box_t(P::not((**a).clone()))),
            P::not(P::box_t((**a).clone())),
        ),
        P::Bin(op, a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            match op {
                BinOp::And => return None,
                BinOp::Or => P::not(P::and(P::not(a), P::not(b))),
                BinOp::MatImp => P::or(P::not(a), b),
                BinOp::MatIff => P::and(P::mat_imp(a.clone(), b.clone()), P::mat_imp(b, a)),
                BinOp::Imp => P::mat_imp(P::box_tb(a), b),
                BinOp::Iff => P::and(P::imp(a.clone(), b.clone()), P::imp(b, a)),
            }
        }
        P::Modal(Modality::E, a) => P::not(P::modal(Modality::K, P::not((**a).clone()))),
        P::Exists(x, a) => P::not(P::forall(x, P::not((**a).clone()))),
        _ => return None,
    })
}

fn single(t: Tag, p: &Pred, n: usize) -> bool {
    derive(vec![(t, p.clone())], n)
}

fn derive(mut entries: Vec<(Tag, Pred)>, n: usize) -> bool {
    loop {
        let Some(i) = entries.iter().position(|(_, p)| !matches!(p, Pred::Atom(_))) else {
            break;
        };
        let (t, p) = entries.swap_remove(i);
        if let Some(q) = unfold(&p) {
            entries.push((t, q));
            continue;
        }
        match p {
            Pred::Const(v) => {
                if t.accepts(v) {
                    return true;
                }
            }
            Pred::Un(UnOp::Not, a) => entries.push((t.neg(), *a)),
            Pred::Un(UnOp::BoxT, a) => entries.push((if t.is_upper() { Tag::TT } else { Tag::FB }, *a)),
            Pred::Bin(BinOp::And, a, b) => {
                if t.is_upper() {
                    let mut left = entries.clone();
                    left.push((t, *a));
                    if !derive(left, n) {
                        return false;
                    }
                    entries.push((t, *b));
                } else {
                    entries.push((t, *a));
                    entries.push((t, *b));
                }
            }
            Pred::Modal(Modality::K, a) => {
                // `K φ` is the same under every valuation, so the entry is
                // either an axiom or can be weakened away.
                let holds = match t {
                    Tag::TB => single(Tag::TB, &a, n),
                    Tag::TT => single(Tag::TT, &a, n),
                    Tag::FF => !single(Tag::TB, &a, n),
                    Tag::FB => !single(Tag::TT, &a, n),
                };
                if holds {
                    return true;
                }
            }
            Pred::Forall(x, a) => {
                if t.is_upper() {
                    for q in 0..n {
                        let mut branch = entries.clone();
                        branch.push((t, a.subst(&x, q)));
                        if !derive(branch, n) {
                            return false;
                        }
                    }
                    return true;
                } else {
                    entries.extend((0..n).map(|q| (t, a.subst(&x, q))));
                }
            }
            Pred::Var(_) | Pred::Atom(_) | Pred::Un(..) | Pred::Bin(..) | Pred::Modal(..) | Pred::Exists(..) => {
                unreachable!("closed primitive predicate expected")
            }
        }
    }
    let mut masks = vec![0u8; n];
    for (t, p) in &entries {
        if let Pred::Atom(q) = p {
            masks[*q] |= t.mask();
        }
    }
    masks.iter().any(|&m| m == 0b111)
}
