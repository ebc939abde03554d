mod common;

use common::*;
use semitop::semiframe::{is_sober, is_t0, nbhd, soberify, Semiframe};
use semitop::space::all_semitopologies;
use semitop::{catalog, Analysis, PointSet, Semitopology};

fn spaces_upto(n: usize) -> Vec<Semitopology> {
    (0..=n).flat_map(|k| all_semitopologies(k).unwrap()).collect()
}

/// Abstract points of the open-set semiframe, by scanning every family of opens.
fn abstract_points_oracle(opens: &[u64]) -> Vec<u64> {
    let m = opens.len();
    let union = |fam: u64| (0..m).filter(|&i| has(fam, i)).fold(0u64, |a, i| a | opens[i]);
    (1u64..1 << m)
        .filter(|&f| {
            let up = (0..m).filter(|&i| has(f, i)).all(|i| (0..m).all(|j| opens[i] & !opens[j] != 0 || has(f, j)));
            let compat = (0..m).filter(|&i| has(f, i)).all(|i| (0..m).filter(|&j| has(f, j)).all(|j| opens[i] & opens[j] != 0));
            let prime = (0..1u64 << m).all(|x| {
                let u = union(x);
                let idx = opens.iter().position(|&o| o == u).unwrap();
                !has(f, idx) || x & f != 0
            });
            up && compat && prime
        })
        .collect()
}

#[test]
fn abstract_points_match_oracle() {
    for s in spaces_upto(3) {
        let fr = Semiframe::of_space(&s);
        let mut got: Vec<u64> = fr.abstract_points().unwrap().iter().map(|p| p.bits()).collect();
        got.sort();
        let mut expect = abstract_points_oracle(&opens_of(&s));
        expect.sort();
        assert_eq!(got, expect, "{:?}", opens_of(&s));
    }
}

#[test]
fn soberification_is_sober_t0_and_preserves_opens() {
    for s in spaces_upto(3) {
        let sob = soberify(&s).unwrap();
        assert!(is_sober(&sob.space).unwrap());
        assert!(is_t0(&sob.space));
        let mut pre: Vec<u64> = sob.space.opens().iter().map(|&u| sob.preimage(u).bits()).collect();
        let mut ours = opens_of(&s);
        pre.sort();
        pre.dedup();
        ours.sort();
        assert_eq!(pre, ours);
        for &u in sob.space.opens() {
            for &v in sob.space.opens() {
                let (pu, pv) = (sob.preimage(u), sob.preimage(v));
                assert_eq!(u.is_subset(v), pu.is_subset(pv));
                assert_eq!(u.meets(v), pu.meets(pv));
            }
        }
        for p in 0..s.len() {
            for q in 0..s.len() {
                let same = s.opens().iter().all(|o| o.contains(p) == o.contains(q));
                assert_eq!(sob.nbhd[p] == sob.nbhd[q], same);
            }
        }
        if is_sober(&s).unwrap() {
            assert_eq!(sob.space.len(), s.len());
        }
    }
}

#[test]
fn regularity_matches_neighbourhood_semifilter() {
    for s in spaces_upto(3) {
        let a = Analysis::new(&s);
        let fr = Semiframe::of_space(&s);
        let sob = soberify(&s).unwrap();
        let sa = Analysis::new(&sob.space);
        for p in 0..s.len() {
            let d = fr.dual_regularity(nbhd(&s, p)).unwrap();
            assert_eq!(d.quasiregular, a.is_quasiregular(p));
            assert_eq!(d.weakly_regular, a.is_weakly_regular(p));
            assert_eq!(d.regular, a.is_regular(p));
            for q in 0..s.len() {
                let (np, nq) = (nbhd(&s, p), nbhd(&s, q));
                let compat = np.iter().all(|x| nq.iter().all(|y| fr.compatible(x, y)));
                assert_eq!(compat, a.intertwined(p, q));
                assert_eq!(sa.intertwined(sob.nbhd[p], sob.nbhd[q]), a.intertwined(p, q));
            }
        }
    }
}

#[test]
fn maximal_semifilters_are_their_own_compatibility_system() {
    for s in spaces_upto(3) {
        let fr = Semiframe::of_space(&s);
        let sfs = fr.semifilters().unwrap();
        for &f in &sfs {
            let maximal = !sfs.iter().any(|&g| g != f && f.is_subset(g));
            assert_eq!(maximal, fr.compat_system(f) == f);
        }
        for x in 0..fr.len() {
            if x == fr.bottom() {
                continue;
            }
            let xs = fr.compat_of(x);
            let trans = fr.is_transitive_element(x);
            assert_eq!(trans, fr.is_abstract_point(xs), "x = {}", x);
            let max_sf = fr.is_semifilter(xs) && !sfs.iter().any(|&g| g != xs && xs.is_subset(g));
            assert_eq!(trans, max_sf);
        }
    }
}

#[test]
fn semiframe_axioms_of_spaces() {
    for s in spaces_upto(3) {
        let fr = Semiframe::of_space(&s);
        let opens = s.opens();
        for a in 0..fr.len() {
            for b in 0..fr.len() {
                assert_eq!(opens[fr.join2(a, b)], opens[a] | opens[b]);
                assert_eq!(fr.le(a, b), opens[a].is_subset(opens[b]));
                assert_eq!(fr.compatible(a, b), opens[a].meets(opens[b]));
            }
        }
        let (leq, compat) = fr.tables();
        let rebuilt = Semiframe::new(fr.labels().to_vec(), &leq, &compat).unwrap();
        assert_eq!(rebuilt, fr);
    }
}

#[test]
fn invalid_semiframes_are_rejected() {
    let labels: Vec<String> = ["bot", "a", "top"].iter().map(|s| s.to_string()).collect();
    // a is compatible with itself but not with a join above it
    let four: Vec<String> = ["bot", "a", "b", "top"].iter().map(|s| s.to_string()).collect();
    let order = [(0, 1), (0, 2), (1, 3), (2, 3)];
    assert!(Semiframe::new(four.clone(), &order, &[(1, 1), (2, 2), (3, 3)]).is_err());
    assert!(Semiframe::new(four, &order, &[(1, 1), (2, 2), (3, 3), (1, 3), (2, 3)]).is_ok());
    // bottom compatible with itself
    assert!(Semiframe::new(labels.clone(), &[(0, 1), (1, 2)], &[(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)]).is_err());
    // no joins for two incomparable maximal elements
    assert!(Semiframe::new(labels, &[(0, 1), (0, 2)], &[(1, 1), (2, 2)]).is_err());
}

#[test]
fn sober_examples() {
    let sk = catalog("sierpinski", 0).unwrap();
    assert!(is_sober(&sk).unwrap());
    assert_eq!(soberify(&sk).unwrap().space.len(), 2);
    let tr = catalog("trivial", 2).unwrap();
    assert!(!is_t0(&tr));
    assert_eq!(soberify(&tr).unwrap().space.len(), 1);
    let empty = Semitopology::empty();
    let fr = Semiframe::of_space(&empty);
    assert_eq!(fr.len(), 1);
    assert_eq!(fr.top(), fr.bottom());
    assert!(!fr.compatible(fr.top(), fr.top()));
}

#[test]
fn non_semifilters_are_rejected() {
    let s = catalog("fig-012-tl", 0).unwrap();
    let fr = Semiframe::of_space(&s);
    assert!(fr.dual_regularity(PointSet::EMPTY).is_err());
    assert!(fr.dual_regularity(PointSet::singleton(fr.bottom())).is_err());
}
