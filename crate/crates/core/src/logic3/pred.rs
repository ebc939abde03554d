use std::collections::BTreeSet;
use std::fmt::Write;

use crate::three::Three;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnOp {
    Not,
    BoxT,
    BoxTB,
    BoxB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    And,
    Or,
    /// `⊃`
    MatImp,
    /// `⇔̃`
    MatIff,
    /// `→`
    Imp,
    /// `↔`
    Iff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Modality {
    /// Meet over all valuations.
    K,
    /// Join over all valuations.
    E,
    /// `K` restricted to valuations satisfying the witness theory.
    Kw,
    /// `E` conjoined with the witness theory.
    Ew,
}

/// A predicate. Atoms are point indices; variables range over points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pred {
    Const(Three),
    Atom(usize),
    Var(String),
    Un(UnOp, Box<Pred>),
    Bin(BinOp, Box<Pred>, Box<Pred>),
    Modal(Modality, Box<Pred>),
    Forall(String, Box<Pred>),
    Exists(String, Box<Pred>),
}

impl Pred {
    pub fn atom(p: usize) -> Pred {
        Pred::Atom(p)
    }

    pub fn var(x: &str) -> Pred {
        Pred::Var(x.to_string())
    }

    pub fn not(a: Pred) -> Pred {
        Pred::Un(UnOp::Not, Box::new(a))
    }

    pub fn box_t(a: Pred) -> Pred {
        Pred::Un(UnOp::BoxT, Box::new(a))
    }

    pub fn box_tb(a: Pred) -> Pred {
        Pred::Un(UnOp::BoxTB, Box::new(a))
    }

    pub fn box_b(a: Pred) -> Pred {
        Pred::Un(UnOp::BoxB, Box::new(a))
    }

    pub fn bin(op: BinOp, a: Pred, b: Pred) -> Pred {
        Pred::Bin(op, Box::new(a), Box::new(b))
    }

    pub fn and(a: Pred, b: Pred) -> Pred {
        Pred::bin(BinOp::And, a, b)
    }

    pub fn or(a: Pred, b: Pred) -> Pred {
        Pred::bin(BinOp::Or, a, b)
    }

    pub fn mat_imp(a: Pred, b: Pred) -> Pred {
        Pred::bin(BinOp::MatImp, a, b)
    }

    pub fn mat_iff(a: Pred, b: Pred) -> Pred {
        Pred::bin(BinOp::MatIff, a, b)
    }

    pub fn imp(a: Pred, b: Pred) -> Pred {
        Pred::bin(BinOp::Imp, a, b)
    }

    pub fn iff(a: Pred, b: Pred) -> Pred {
        Pred::bin(BinOp::Iff, a, b)
    }

    pub fn modal(m: Modality, a: Pred) -> Pred {
        Pred::Modal(m, Box::new(a))
    }

    pub fn forall(x: &str, a: Pred) -> Pred {
        Pred::Forall(x.to_string(), Box::new(a))
    }

    pub fn exists(x: &str, a: Pred) -> Pred {
        Pred::Exists(x.to_string(), Box::new(a))
    }

    /// Conjunction of a list; `T` when empty.
    pub fn and_all<I: IntoIterator<Item = Pred>>(items: I) -> Pred {
        items
            .into_iter()
            .reduce(Pred::and)
            .unwrap_or(Pred::Const(Three::T))
    }

    /// Disjunction of a list; `F` when empty.
    pub fn or_all<I: IntoIterator<Item = Pred>>(items: I) -> Pred {
        items
            .into_iter()
            .reduce(Pred::or)
            .unwrap_or(Pred::Const(Three::F))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Pred::Const(_) | Pred::Atom(_) => {}
            Pred::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            Pred::Un(_, a) | Pred::Modal(_, a) => a.collect_free(bound, out),
            Pred::Bin(_, a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Pred::Forall(x, a) | Pred::Exists(x, a) => {
                bound.push(x.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Replace free occurrences of `x` by the atom `p`. Atoms cannot be
    /// captured, so no renaming is needed.
    pub fn subst(&self, x: &str, p: usize) -> Pred {
        match self {
            Pred::Var(y) if y == x => Pred::Atom(p),
            Pred::Const(_) | Pred::Atom(_) | Pred::Var(_) => self.clone(),
            Pred::Un(op, a) => Pred::Un(*op, Box::new(a.subst(x, p))),
            Pred::Modal(m, a) => Pred::Modal(*m, Box::new(a.subst(x, p))),
            Pred::Bin(op, a, b) => Pred::Bin(*op, Box::new(a.subst(x, p)), Box::new(b.subst(x, p))),
            Pred::Forall(y, _) | Pred::Exists(y, _) if y == x => self.clone(),
            Pred::Forall(y, a) => Pred::Forall(y.clone(), Box::new(a.subst(x, p))),
            Pred::Exists(y, a) => Pred::Exists(y.clone(), Box::new(a.subst(x, p))),
        }
    }

    /// Largest atom index mentioned, if any.
    pub fn max_atom(&self) -> Option<usize> {
        match self {
            Pred::Atom(p) => Some(*p),
            Pred::Const(_) | Pred::Var(_) => None,
            Pred::Un(_, a) | Pred::Modal(_, a) | Pred::Forall(_, a) | Pred::Exists(_, a) => a.max_atom(),
            Pred::Bin(_, a, b) => a.max_atom().max(b.max_atom()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Pred::Const(_) | Pred::Atom(_) | Pred::Var(_) => 0,
            Pred::Un(_, a) | Pred::Modal(_, a) | Pred::Forall(_, a) | Pred::Exists(_, a) => 1 + a.depth(),
            Pred::Bin(_, a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn uses_witness(&self) -> bool {
        match self {
            Pred::Modal(Modality::Kw | Modality::Ew, _) => true,
            Pred::Const(_) | Pred::Atom(_) | Pred::Var(_) => false,
            Pred::Un(_, a) | Pred::Modal(_, a) | Pred::Forall(_, a) | Pred::Exists(_, a) => a.uses_witness(),
            Pred::Bin(_, a, b) => a.uses_witness() || b.uses_witness(),
        }
    }

    /// Text form accepted by [`parse`](super::parse), with every compound
    /// subterm parenthesised.
    pub fn render(&self, labels: &[String]) -> String {
        let mut s = String::new();
        self.render_into(labels, &mut s);
        s
    }

    fn render_into(&self, labels: &[String], s: &mut String) {
        match self {
            Pred::Const(v) => s.push(v.as_char()),
            Pred::Atom(p) => {
                s.push('\'');
                match labels.get(*p) {
                    Some(l) if is_plain_label(l) => s.push_str(l),
                    Some(l) => {
                        s.push('"');
                        s.push_str(&l.replace('\\', "\\\\").replace('"', "\\\""));
                        s.push('"');
                    }
                    None => {
                        let _ = write!(s, "\"#{}\"", p);
                    }
                }
            }
            Pred::Var(x) => s.push_str(x),
            Pred::Un(op, a) => {
                s.push_str(match op {
                    UnOp::Not => "~",
                    UnOp::BoxT => "[]T ",
                    UnOp::BoxTB => "[]TB ",
                    UnOp::BoxB => "[]B ",
                });
                a.render_atomic(labels, s);
            }
            Pred::Bin(op, a, b) => {
                a.render_atomic(labels, s);
                s.push_str(match op {
                    BinOp::And => " & ",
                    BinOp::Or => " | ",
                    BinOp::MatImp => " => ",
                    BinOp::MatIff => " <=> ",
                    BinOp::Imp => " -> ",
                    BinOp::Iff => " <-> ",
                });
                b.render_atomic(labels, s);
            }
            Pred::Modal(m, a) => {
                s.push_str(match m {
                    Modality::K => "K{",
                    Modality::E => "E{",
                    Modality::Kw => "Kw{",
                    Modality::Ew => "Ew{",
                });
                a.render_into(labels, s);
                s.push('}');
            }
            Pred::Forall(x, a) | Pred::Exists(x, a) => {
                s.push_str(if matches!(self, Pred::Forall(..)) { "forall " } else { "exists " });
                s.push_str(x);
                s.push_str(". ");
                a.render_into(labels, s);
            }
        }
    }

    fn render_atomic(&self, labels: &[String], s: &mut String) {
        match self {
            Pred::Bin(..) | Pred::Forall(..) | Pred::Exists(..) => {
                s.push('(');
                self.render_into(labels, s);
                s.push(')');
            }
            _ => self.render_into(labels, s),
        }
    }
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '*' | '+' | '-')
}

fn is_plain_label(l: &str) -> bool {
    !l.is_empty() && l.chars().all(is_label_char) && !l.contains("->")
}
