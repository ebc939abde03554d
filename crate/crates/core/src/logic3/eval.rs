use std::cell::OnceCell;
use std::collections::HashMap;

use super::pred::Pred;
use super::theory::ax_value;
use crate::antisep::extremal_valuations;
use crate::error::{check_bound, Error, Result};
use crate::space::Semitopology;
use crate::three::{Three, Valuation3};
use crate::witness::WitnessFunction;

/// Largest point count for which `K` and `E` enumerate all valuations.
pub const DEFAULT_VALUATION_BOUND: usize = 12;

/// Evaluation context: the number of points, an optional witness function
/// for the relative modalities, and lazily built valuation tables.
pub struct Model {
    n: usize,
    witness: Option<WitnessFunction>,
    bound: usize,
    all: OnceCell<Vec<Valuation3>>,
    ax: OnceCell<Vec<Three>>,
}

type Cache = HashMap<(usize, Vec<usize>), Three>;

impl Model {
    pub fn new(n: usize) -> Self {
        Model { n, witness: None, bound: DEFAULT_VALUATION_BOUND, all: OnceCell::new(), ax: OnceCell::new() }
    }

    pub fn with_witness(w: WitnessFunction) -> Self {
        let mut m = Model::new(w.len());
        m.witness = Some(w);
        m
    }

    pub fn bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn witness(&self) -> Option<&WitnessFunction> {
        self.witness.as_ref()
    }

    fn all(&self) -> Result<&[Valuation3]> {
        check_bound("valuation enumeration", self.n, self.bound)?;
        Ok(self.all.get_or_init(|| Valuation3::all(self.n).collect()))
    }

    fn ax(&self) -> Result<&[Three]> {
        let w = self
            .witness
            .as_ref()
            .ok_or_else(|| Error::Precondition("witness-relative modality needs a witness function".into()))?;
        let all = self.all()?;
        Ok(self.ax.get_or_init(|| all.iter().map(|f| ax_value(w, f)).collect()))
    }

    /// Valuations designating the witness theory, i.e. the continuous ones.
    pub fn continuous(&self) -> Result<Vec<Valuation3>> {
        let ax = self.ax()?;
        Ok(self.all()?.iter().zip(ax).filter(|(_, a)| a.designated()).map(|(f, _)| f.clone()).collect())
    }

    fn check(&self, phi: &Pred, f: &Valuation3) -> Result<()> {
        if let Some(x) = phi.free_vars().into_iter().next() {
            return Err(Error::FreeVariable(x));
        }
        if f.len() != self.n {
            return Err(Error::Precondition(format!("valuation has {} points, expected {}", f.len(), self.n)));
        }
        if let Some(p) = phi.max_atom().filter(|&p| p >= self.n) {
            return Err(Error::UnknownPoint(format!("#{}", p)));
        }
        Ok(())
    }

    pub fn eval(&self, phi: &Pred, f: &Valuation3) -> Result<Three> {
        self.check(phi, f)?;
        self.go(phi, f, &mut Vec::new(), &mut Cache::new())
    }

    /// Evaluate under each valuation, sharing modal subresults.
    pub fn eval_each(&self, phi: &Pred, fs: &[Valuation3]) -> Result<Vec<Three>> {
        let mut cache = Cache::new();
        fs.iter()
            .map(|f| {
                self.check(phi, f)?;
                self.go(phi, f, &mut Vec::new(), &mut cache)
            })
            .collect()
    }

    pub fn valid(&self, phi: &Pred, f: &Valuation3) -> Result<bool> {
        Ok(self.eval(phi, f)?.designated())
    }

    /// Designated under every valuation in `fs`.
    pub fn valid_on(&self, phi: &Pred, fs: &[Valuation3]) -> Result<bool> {
        Ok(self.eval_each(phi, fs)?.into_iter().all(Three::designated))
    }

    fn go(&self, phi: &Pred, f: &Valuation3, env: &mut Vec<(String, usize)>, cache: &mut Cache) -> Result<Three> {
        use super::*;
        Ok(match phi {
            Pred::Const(v) => *v,
            Pred::Atom(p) => f.get(*p),
            Pred::Var(x) => match env.iter().rev().find(|(y, _)| y == x) {
                Some((_, p)) => f.get(*p),
                None => return Err(Error::FreeVariable(x.clone())),
            },
            Pred::Un(op, a) => {
                let v = self.go(a, f, env, cache)?;
                match op {
                    UnOp::Not => neg(v),
                    UnOp::BoxT => box_t(v),
                    UnOp::BoxTB => box_tb(v),
                    UnOp::BoxB => box_b(v),
                }
            }
            Pred::Bin(op, a, b) => {
                let x = self.go(a, f, env, cache)?;
                let y = self.go(b, f, env, cache)?;
                match op {
                    BinOp::And => and(x, y),
                    BinOp::Or => or(x, y),
                    BinOp::MatImp => mat_imp(x, y),
                    BinOp::MatIff => mat_iff(x, y),
                    BinOp::Imp => imp(x, y),
                    BinOp::Iff => iff(x, y),
                }
            }
            Pred::Forall(x, a) | Pred::Exists(x, a) => {
                let forall = matches!(phi, Pred::Forall(..));
                let mut acc = if forall { Three::T } else { Three::F };
                for p in 0..self.n {
                    env.push((x.clone(), p));
                    let v = self.go(a, f, env, cache);
                    env.pop();
                    acc = if forall { and(acc, v?) } else { or(acc, v?) };
                }
                acc
            }
            Pred::Modal(m, a) => {
                let key = (phi as *const Pred as usize, env.iter().map(|(_, p)| *p).collect::<Vec<_>>());
                if let Some(v) = cache.get(&key) {
                    return Ok(*v);
                }
                let all = self.all()?;
                let v = match m {
                    Modality::K | Modality::E => {
                        let k = *m == Modality::K;
                        let mut acc = if k { Three::T } else { Three::F };
                        for g in all {
                            let v = self.go(a, g, env, cache)?;
                            acc = if k { and(acc, v) } else { or(acc, v) };
                            if (k && acc == Three::F) || (!k && acc == Three::T) {
                                break;
                            }
                        }
                        acc
                    }
                    Modality::Kw => {
                        let ax = self.ax()?;
                        let mut acc = Three::T;
                        for (g, axv) in all.iter().zip(ax) {
                            if axv.designated() {
                                acc = and(acc, self.go(a, g, env, cache)?);
                                if acc == Three::F {
                                    break;
                                }
                            }
                        }
                        acc
                    }
                    Modality::Ew => {
                        let ax = self.ax()?;
                        let mut acc = Three::F;
                        for (g, axv) in all.iter().zip(ax) {
                            if *axv > acc {
                                acc = or(acc, and(*axv, self.go(a, g, env, cache)?));
                                if acc == Three::T {
                                    break;
                                }
                            }
                        }
                        acc
                    }
                };
                cache.insert(key, v);
                v
            }
        })
    }
}

/// Evaluate a closed predicate with no witness-relative modalities.
pub fn eval(phi: &Pred, f: &Valuation3) -> Result<Three> {
    Model::new(f.len()).eval(phi, f)
}

pub fn valid(f: &Valuation3, phi: &Pred) -> Result<bool> {
    Ok(eval(phi, f)?.designated())
}

/// Designated under every continuous valuation of `s`. Witness-relative
/// modalities inside `phi` refer to the opens of `s`.
pub fn valid_continuous(s: &Semitopology, phi: &Pred) -> Result<bool> {
    let m = Model::with_witness(covers_witness(s));
    let fs = m.continuous()?;
    m.valid_on(phi, &fs)
}

/// Designated under every extremal valuation of `s`.
pub fn valid_extremal(s: &Semitopology, phi: &Pred) -> Result<bool> {
    let m = Model::with_witness(covers_witness(s));
    m.valid_on(phi, &extremal_valuations(s))
}

/// The witness function sending each point to its minimal open
/// neighbourhoods; its witness semitopology is `s` again.
pub(crate) fn covers_witness(s: &Semitopology) -> WitnessFunction {
    let witness = (0..s.len()).map(|p| s.covers(p)).collect();
    WitnessFunction::new(s.labels().to_vec(), witness).expect("covers of a semitopology form a witness function")
}
