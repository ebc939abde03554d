mod common;

use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use semitop::antisep::extremal_valuations;
use semitop::logic3::*;
use semitop::space::all_semitopologies;
use semitop::{catalog, Analysis, Three, Valuation3};

fn a(p: usize) -> Pred {
    Pred::Atom(p)
}

fn pointwise_equal(lhs: &Pred, rhs: &Pred, n: usize) -> bool {
    Valuation3::all(n).all(|f| eval(lhs, &f).unwrap() == eval(rhs, &f).unwrap())
}

#[test]
fn truth_table_equivalences() {
    let (p, q) = (a(0), a(1));
    let eqs = vec![
        (Pred::not(Pred::not(p.clone())), p.clone()),
        (Pred::mat_imp(p.clone(), q.clone()), Pred::or(Pred::not(p.clone()), q.clone())),
        (Pred::imp(p.clone(), q.clone()), Pred::mat_imp(Pred::box_tb(p.clone()), q.clone())),
        (Pred::box_t(Pred::box_tb(p.clone())), Pred::box_tb(p.clone())),
        (Pred::box_tb(p.clone()), Pred::not(Pred::box_t(Pred::not(p.clone())))),
        (Pred::box_b(p.clone()), Pred::and(Pred::box_tb(p.clone()), Pred::not(Pred::box_t(p.clone())))),
        (
            Pred::mat_iff(p.clone(), q.clone()),
            Pred::and(Pred::mat_imp(p.clone(), q.clone()), Pred::mat_imp(q.clone(), p.clone())),
        ),
        (
            Pred::iff(p.clone(), q.clone()),
            Pred::and(Pred::imp(p.clone(), q.clone()), Pred::imp(q.clone(), p.clone())),
        ),
        (Pred::or(p.clone(), q.clone()), Pred::not(Pred::and(Pred::not(p.clone()), Pred::not(q.clone())))),
        (
            Pred::mat_imp(p.clone(), q.clone()),
            Pred::mat_imp(Pred::not(q.clone()), Pred::not(p.clone())),
        ),
        (
            Pred::exists("x", Pred::var("x")),
            Pred::not(Pred::forall("x", Pred::not(Pred::var("x")))),
        ),
        (
            Pred::modal(Modality::E, p.clone()),
            Pred::not(Pred::modal(Modality::K, Pred::not(p.clone()))),
        ),
    ];
    for (l, r) in &eqs {
        assert!(pointwise_equal(l, r, 2), "{:?} vs {:?}", l, r);
    }
    for m in [Pred::box_t as fn(Pred) -> Pred, Pred::box_tb] {
        for op in [Pred::and as fn(Pred, Pred) -> Pred, Pred::or] {
            let l = m(op(p.clone(), q.clone()));
            let r = op(m(p.clone()), m(q.clone()));
            assert!(pointwise_equal(&l, &r, 2));
        }
    }
}

#[test]
fn timp_has_no_contrapositive() {
    let l = Pred::imp(a(0), a(1));
    let r = Pred::imp(Pred::not(a(1)), Pred::not(a(0)));
    let f = Valuation3(vec![Three::B, Three::F]);
    assert_ne!(eval(&l, &f).unwrap(), eval(&r, &f).unwrap());
}

#[test]
fn material_modus_ponens_fails_at_b_f() {
    let f = Valuation3(vec![Three::B, Three::F]);
    assert!(valid(&f, &a(0)).unwrap());
    assert!(valid(&f, &Pred::mat_imp(a(0), a(1))).unwrap());
    assert!(!valid(&f, &a(1)).unwrap());
    assert_eq!(eval(&Pred::imp(Pred::Const(Three::B), Pred::Const(Three::F)), &f).unwrap(), Three::F);
    assert_eq!(eval(&Pred::mat_imp(Pred::Const(Three::B), Pred::Const(Three::F)), &f).unwrap(), Three::B);
    assert_eq!(eval(&Pred::box_t(Pred::Const(Three::B)), &f).unwrap(), Three::F);
}

#[test]
fn validity_laws_on_random_predicates() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..400 {
        let n = rng.gen_range(0..=3);
        let phi = random_closed(&mut rng, 3, n);
        let psi = random_closed(&mut rng, 3, n);
        let f = Valuation3((0..n).map(|_| Three::ALL[rng.gen_range(0..3)]).collect());
        let vphi = valid(&f, &phi).unwrap();
        let vpsi = valid(&f, &psi).unwrap();
        assert_eq!(vphi, valid(&f, &Pred::box_tb(phi.clone())).unwrap());
        assert_eq!(valid(&f, &Pred::and(phi.clone(), psi.clone())).unwrap(), vphi && vpsi);
        assert_eq!(valid(&f, &Pred::imp(phi.clone(), psi.clone())).unwrap(), !vphi || vpsi);
    }
}

#[test]
fn ax_designated_iff_continuous() {
    let mut rng = StdRng::seed_from_u64(11);
    for (n, w) in witness_corpus(&mut rng, 4, 40) {
        let wf = witness(n, &w);
        let opens = witness_opens(n, &w);
        let ax = theory_ax(&wf, false).unwrap();
        let open = open_ax(&wf);
        for f in Valuation3::all(n) {
            let v = eval(&ax, &f).unwrap();
            assert_eq!(v, ax_value(&wf, &f));
            assert_eq!(v.designated(), continuous(&opens, &f), "{:?} {}", w, f.to_string_compact());
            assert_eq!(eval(&open, &f).unwrap().designated(), v.designated());
        }
    }
}

#[test]
fn axex_designated_iff_extremal() {
    let mut rng = StdRng::seed_from_u64(12);
    for (n, w) in witness_corpus(&mut rng, 3, 40) {
        let wf = witness(n, &w);
        let opens = witness_opens(n, &w);
        let ext = extremal(n, &opens);
        let axex = theory_ax(&wf, true).unwrap();
        for f in Valuation3::all(n) {
            assert_eq!(eval(&axex, &f).unwrap().designated(), ext.contains(&f), "{:?} {}", w, f.to_string_compact());
        }
    }
}

#[test]
fn singleton_witnesses_make_ax_valid_everywhere() {
    let n = 3;
    let w: Vec<Vec<u64>> = (0..n).map(|p| vec![1u64 << p]).collect();
    let ax = theory_ax(&witness(n, &w), false).unwrap();
    assert!(Valuation3::all(n).all(|f| valid(&f, &ax).unwrap()));
}

#[test]
fn characterisations_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(13);
    for (n, w) in witness_corpus(&mut rng, 3, 60) {
        let wf = witness(n, &w);
        let o = witness_opens(n, &w);
        let m = Model::with_witness(wf.clone());
        let all: Vec<Valuation3> = Valuation3::all(n).collect();
        let check = |phi: Pred, expect: bool, what: &str| {
            let vals = m.eval_each(&phi, &all).unwrap();
            assert!(vals.iter().all(|v| *v == vals[0]), "{} depends on the valuation", what);
            assert_eq!(vals[0].designated(), expect, "{} on {:?}", what, w);
        };
        for p in 0..n {
            for q in 0..n {
                check(intertwined_w(p, q), intertwined(&o, p, q), "intertwined");
                let same = o.iter().all(|&x| has(x, p) == has(x, q));
                check(top_indis_w(p, q), same, "top-indis");
            }
            check(quasi_regular_w(p), quasiregular(n, &o, p), "quasi-regular");
            check(weakly_regular_w(p), weakly_regular(n, &o, p), "weakly-regular");
            check(unconflicted_w(p), unconflicted(n, &o, p), "unconflicted");
            check(regular_w(p), regular(n, &o, p), "regular");
            check(regular_prime_w(p), regular(n, &o, p), "regular-prime");
        }
    }
}

#[test]
fn characterisations_agree_with_analysis() {
    for n in 1..=3 {
        for s in all_semitopologies(n).unwrap() {
            let an = Analysis::new(&s);
            for p in 0..n {
                let c = an.classify(p).unwrap();
                assert_eq!(valid_continuous(&s, &regular_w(p)).unwrap(), c.regular);
                assert_eq!(valid_continuous(&s, &weakly_regular_w(p)).unwrap(), c.weakly_regular);
            }
        }
    }
}

#[test]
fn intertwined_on_the_three_point_example() {
    let s = catalog("fig-012-tl", 0).unwrap();
    let i = |l: &str| s.index_of(l).unwrap();
    assert!(valid_continuous(&s, &Pred::mat_iff(a(i("0")), a(i("1")))).unwrap());
    assert!(!valid_continuous(&s, &Pred::mat_iff(a(i("0")), a(i("2")))).unwrap());
}

#[test]
fn top_indis_is_reflexive() {
    let mut rng = StdRng::seed_from_u64(14);
    for (n, w) in witness_corpus(&mut rng, 3, 10) {
        let m = Model::with_witness(witness(n, &w));
        for p in 0..n {
            let f = Valuation3::constant(n, Three::F);
            assert!(m.valid(&top_indis_w(p, p), &f).unwrap());
        }
    }
}

#[test]
fn extremal_iff_is_consensus_equivalence() {
    for n in 1..=3 {
        for s in all_semitopologies(n).unwrap() {
            let o = opens_of(&s);
            let ext = extremal(n, &o);
            assert_eq!(extremal_valuations(&s).len(), ext.len());
            let an = Analysis::new(&s);
            for p in 0..n {
                for q in 0..n {
                    let ce = ext.iter().all(|f| f.get(p) == f.get(q));
                    assert_eq!(valid_extremal(&s, &Pred::iff(a(p), a(q))).unwrap(), ce);
                    assert_eq!(an.point_relations(p, q).unwrap().consensus_equivalent, ce);
                }
            }
        }
    }
}

#[test]
fn s5_laws_over_continuous_valuations() {
    let mut rng = StdRng::seed_from_u64(15);
    let kw = |p: Pred| Pred::modal(Modality::Kw, p);
    let ew = |p: Pred| Pred::modal(Modality::Ew, p);
    for (n, w) in witness_corpus(&mut rng, 3, 10) {
        let m = Model::with_witness(witness(n, &w));
        let cont = m.continuous().unwrap();
        for _ in 0..6 {
            let phi = random_closed(&mut rng, 2, n);
            let psi = random_closed(&mut rng, 2, n);
            let laws = [
                Pred::imp(kw(Pred::imp(phi.clone(), psi.clone())), Pred::imp(kw(phi.clone()), kw(psi.clone()))),
                Pred::imp(kw(phi.clone()), phi.clone()),
                Pred::imp(kw(phi.clone()), kw(kw(phi.clone()))),
                Pred::imp(ew(phi.clone()), kw(ew(phi.clone()))),
                Pred::imp(phi.clone(), kw(ew(phi.clone()))),
            ];
            for law in &laws {
                assert!(m.valid_on(law, &cont).unwrap(), "{:?} on {:?}", law, w);
            }
            if m.valid_on(&phi, &cont).unwrap() {
                assert!(m.valid_on(&kw(phi.clone()), &cont).unwrap());
            }
        }
    }
}

#[test]
fn derivable_iff_valid() {
    let mut rng = StdRng::seed_from_u64(16);
    let mut derivable = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let s = TagSequent::new((0..k).map(|_| (Tag::ALL[rng.gen_range(0..4)], random_closed(&mut rng, 3, n))));
        let d = s.derive(n, None).unwrap();
        assert_eq!(d, s.is_valid(n, None).unwrap(), "{:?}", s);
        derivable += d as usize;
    }
    assert!(derivable > 50, "too few derivable samples: {}", derivable);
}

#[test]
fn derivable_iff_valid_with_witness_modalities() {
    let mut rng = StdRng::seed_from_u64(17);
    for (n, w) in witness_corpus(&mut rng, 2, 0).into_iter().step_by(3) {
        let wf = witness(n, &w);
        for p in 0..n {
            for q in 0..n {
                let s = TagSequent::new([(Tag::TB, intertwined_w(p, q))]);
                assert_eq!(s.derive(n, Some(&wf)).unwrap(), s.is_valid(n, Some(&wf)).unwrap());
            }
        }
    }
}

#[test]
fn axiom_rule_instances() {
    let mut rng = StdRng::seed_from_u64(18);
    for _ in 0..50 {
        let phi = random_closed(&mut rng, 3, 2);
        assert!(TagSequent::new([(Tag::TB, phi.clone()), (Tag::FF, phi.clone())]).derive(2, None).unwrap());
        assert!(TagSequent::new([(Tag::FB, phi.clone()), (Tag::TT, phi)]).derive(2, None).unwrap());
    }
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let phi = random_closed(&mut rng, 4, n);
        let mut labels = labels(n);
        labels[0] = "a-b(c)".to_string();
        let text = phi.render(&labels);
        prop_assert_eq!(parse(&text, &labels).unwrap(), phi);
    }
}
