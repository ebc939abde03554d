//! Brute-force reference implementations shared by the integration tests.
//! Everything here works on raw bitmasks and is deliberately naive.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use semitop::space::all_semitopologies;
use semitop::logic3::{BinOp, Modality, Pred};
use semitop::{PointSet, Semitopology, Three, Valuation3, WitnessFunction};

pub fn bits(s: PointSet) -> u64 {
    s.bits()
}

pub fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

pub fn has(x: u64, p: usize) -> bool {
    x >> p & 1 == 1
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Sets `O` such that every member has a witness-set inside `O`.
pub fn witness_opens(n: usize, w: &[Vec<u64>]) -> Vec<u64> {
    (0..=full(n))
        .filter(|&o| (0..n).filter(|&p| has(o, p)).all(|p| w[p].iter().any(|&ws| ws & !o == 0)))
        .collect()
}

pub fn opens_of(s: &Semitopology) -> Vec<u64> {
    s.opens().iter().map(|o| o.bits()).collect()
}

pub fn interior(opens: &[u64], x: u64) -> u64 {
    opens.iter().filter(|&&o| o & !x == 0).fold(0, |a, &o| a | o)
}

pub fn closure(n: usize, opens: &[u64], x: u64) -> u64 {
    (0..n)
        .filter(|&p| opens.iter().all(|&o| !has(o, p) || o & x != 0))
        .fold(0, |a, p| a | 1 << p)
}

pub fn intertwined(opens: &[u64], p: usize, q: usize) -> bool {
    opens
        .iter()
        .filter(|&&o| has(o, p))
        .all(|&o| opens.iter().filter(|&&o2| has(o2, q)).all(|&o2| o & o2 != 0))
}

pub fn intertwined_set(n: usize, opens: &[u64], p: usize) -> u64 {
    (0..n).filter(|&q| intertwined(opens, p, q)).fold(0, |a, q| a | 1 << q)
}

pub fn community(n: usize, opens: &[u64], p: usize) -> u64 {
    interior(opens, intertwined_set(n, opens, p))
}

/// Any two opens that meet `t` meet each other.
pub fn transitive(opens: &[u64], t: u64) -> bool {
    opens.iter().all(|&a| {
        a & t == 0 || opens.iter().all(|&b| b & t == 0 || a & b != 0)
    })
}

pub fn weakly_regular(n: usize, opens: &[u64], p: usize) -> bool {
    has(community(n, opens, p), p)
}

pub fn regular(n: usize, opens: &[u64], p: usize) -> bool {
    let k = community(n, opens, p);
    has(k, p) && transitive(opens, k)
}

pub fn quasiregular(n: usize, opens: &[u64], p: usize) -> bool {
    community(n, opens, p) != 0
}

pub fn unconflicted(n: usize, opens: &[u64], p: usize) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| !(intertwined(opens, a, p) && intertwined(opens, p, b)) || intertwined(opens, a, b))
    })
}

pub fn is_open(opens: &[u64], x: u64) -> bool {
    opens.contains(&x)
}

pub fn continuous(opens: &[u64], f: &Valuation3) -> bool {
    is_open(opens, f.preimage(&[Three::T]).bits()) && is_open(opens, f.preimage(&[Three::F]).bits())
}

/// Continuous valuations that are maximal in the definiteness order.
pub fn extremal(n: usize, opens: &[u64]) -> Vec<Valuation3> {
    let cont: Vec<Valuation3> = Valuation3::all(n).filter(|f| continuous(opens, f)).collect();
    cont.iter()
        .filter(|f| !cont.iter().any(|g| g != *f && Valuation3::le(f, g)))
        .cloned()
        .collect()
}

pub fn to_sets(w: &[Vec<u64>]) -> Vec<Vec<PointSet>> {
    w.iter().map(|ws| ws.iter().map(|&b| PointSet::from_bits(b)).collect()).collect()
}

pub fn witness(n: usize, w: &[Vec<u64>]) -> WitnessFunction {
    WitnessFunction::new(labels(n), to_sets(w)).unwrap()
}

/// Every witness function on at most two points.
pub fn all_small_witnesses() -> Vec<(usize, Vec<Vec<u64>>)> {
    let mut out = vec![(0, vec![])];
    for n in 1..=2usize {
        let subsets: Vec<u64> = (1..=full(n)).collect();
        let fams: Vec<Vec<u64>> = (1u64..1 << subsets.len())
            .map(|m| subsets.iter().enumerate().filter(|(i, _)| has(m, *i)).map(|(_, &s)| s).collect())
            .collect();
        let mut idx = vec![0usize; n];
        loop {
            out.push((n, idx.iter().map(|&i| fams[i].clone()).collect()));
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < fams.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    out
}

pub fn random_witness(rng: &mut StdRng, n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|_| {
            let k = rng.gen_range(1..=3);
            (0..k).map(|_| rng.gen_range(1..=full(n))).collect()
        })
        .collect()
}

/// Witness functions on up to `max_n` points: every small one, every
/// semitopology presented by its open neighbourhoods, and `random` more.
pub fn witness_corpus(rng: &mut StdRng, max_n: usize, random: usize) -> Vec<(usize, Vec<Vec<u64>>)> {
    let mut out = all_small_witnesses();
    for n in 3..=max_n {
        for s in all_semitopologies(n).unwrap() {
            let opens = opens_of(&s);
            out.push((n, (0..n).map(|p| opens.iter().copied().filter(|&o| has(o, p)).collect()).collect()));
        }
        for _ in 0..random {
            out.push((n, random_witness(rng, n)));
        }
    }
    out
}

/// Open families on `n` points: every set of subsets containing `∅` and the
/// universe and closed under binary union.
pub fn union_closed_families(n: usize) -> Vec<Vec<u64>> {
    let inner: Vec<u64> = (1..full(n)).collect();
    let mut out = Vec::new();
    for m in 0u64..1 << inner.len() {
        let mut fam = vec![0];
        fam.extend(inner.iter().enumerate().filter(|(i, _)| has(m, *i)).map(|(_, &s)| s));
        if n > 0 {
            fam.push(full(n));
        }
        if fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a | b)))) {
            out.push(fam);
        }
    }
    out
}

/// Families closed under binary intersection that contain `∅` and the
/// universe, counted directly.
pub fn count_intersection_closed(n: usize) -> usize {
    let inner: Vec<u64> = (1..full(n)).collect();
    (0u64..1 << inner.len())
        .filter(|&m| {
            let mut fam = vec![0];
            fam.extend(inner.iter().enumerate().filter(|(i, _)| has(m, *i)).map(|(_, &s)| s));
            if n > 0 {
                fam.push(full(n));
            }
            fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a & b))))
        })
        .count()
}

/// Nonempty opens that meet every open neighbourhood of `p` pairwise meet.
pub fn hypertransitive(opens: &[u64], p: usize) -> bool {
    let near: Vec<u64> = opens
        .iter()
        .copied()
        .filter(|&o| o != 0 && opens.iter().filter(|&&u| has(u, p)).all(|&u| u & o != 0))
        .collect();
    near.iter().all(|&a| near.iter().all(|&b| a & b != 0))
}

pub fn closed_sets(n: usize, opens: &[u64]) -> Vec<u64> {
    opens.iter().map(|&o| full(n) & !o).collect()
}

/// Closed sets with nonempty interior that contain no other such set.
pub fn min_closed_nbhds(n: usize, opens: &[u64]) -> Vec<u64> {
    let cands: Vec<u64> = closed_sets(n, opens).into_iter().filter(|&c| interior(opens, c) != 0).collect();
    let mut out: Vec<u64> = cands
        .iter()
        .copied()
        .filter(|&c| !cands.iter().any(|&d| d != c && d & !c == 0))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn regular_opens(n: usize, opens: &[u64]) -> Vec<u64> {
    opens
        .iter()
        .copied()
        .filter(|&o| interior(opens, closure(n, opens, o)) == o)
        .collect()
}

pub fn random_space(rng: &mut StdRng, n: usize) -> Semitopology {
    let k = rng.gen_range(0..=n + 2);
    let gens: Vec<PointSet> = (0..k).map(|_| PointSet::from_bits(rng.gen_range(0..=full(n)))).collect();
    Semitopology::from_index_sets(labels(n), &gens, semitop::Mode::Generators).unwrap()
}

/// A random predicate of at most `depth` over atoms `0..n`, using only
/// the variables in scope.
pub fn random_pred(rng: &mut StdRng, depth: usize, n: usize, vars: &mut Vec<String>) -> Pred {
    let leaf = |rng: &mut StdRng, vars: &Vec<String>| -> Pred {
        match rng.gen_range(0..6) {
            0 => Pred::Const(Three::ALL[rng.gen_range(0..3)]),
            1 | 2 if !vars.is_empty() => Pred::Var(vars[rng.gen_range(0..vars.len())].clone()),
            _ if n == 0 => Pred::Const(Three::B),
            _ => Pred::Atom(rng.gen_range(0..n)),
        }
    };
    if depth == 0 || rng.gen_bool(0.2) {
        return leaf(rng, vars);
    }
    match rng.gen_range(0..14) {
        0 => Pred::not(random_pred(rng, depth - 1, n, vars)),
        1 => Pred::box_t(random_pred(rng, depth - 1, n, vars)),
        2 => Pred::box_tb(random_pred(rng, depth - 1, n, vars)),
        3 => Pred::box_b(random_pred(rng, depth - 1, n, vars)),
        4..=9 => {
            let ops = [BinOp::And, BinOp::Or, BinOp::MatImp, BinOp::MatIff, BinOp::Imp, BinOp::Iff];
            let op = ops[rng.gen_range(0..6)];
            let l = random_pred(rng, depth - 1, n, vars);
            let r = random_pred(rng, depth - 1, n, vars);
            Pred::bin(op, l, r)
        }
        10 => Pred::modal(Modality::K, random_pred(rng, depth - 1, n, vars)),
        11 => Pred::modal(Modality::E, random_pred(rng, depth - 1, n, vars)),
        q => {
            let x = format!("x{}", vars.len());
            vars.push(x.clone());
            let body = random_pred(rng, depth - 1, n, vars);
            vars.pop();
            if q == 12 {
                Pred::forall(&x, body)
            } else {
                Pred::exists(&x, body)
            }
        }
    }
}

pub fn random_closed(rng: &mut StdRng, depth: usize, n: usize) -> Pred {
    random_pred(rng, depth, n, &mut Vec::new())
}
