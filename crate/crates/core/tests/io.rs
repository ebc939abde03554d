mod common;

use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use semitop::io::*;
use semitop::semiframe::{soberify, Semiframe};
use semitop::{catalog, Three, Valuation3};

#[test]
fn catalog_spaces_round_trip_byte_stable() {
    for name in semitop::catalog::NAMES {
        let s = catalog(name, 4).unwrap();
        let text = write_space(&s);
        let back = read_space(&text).unwrap();
        assert_eq!(back, s, "{}", name);
        assert_eq!(write_space(&back), text);
        assert!(matches!(read_spec(&text).unwrap(), Spec::Space(_)));
    }
}

#[test]
fn generator_and_full_modes_agree() {
    let gens = r#"{"points": ["a", "b", "c"], "opens": [["a"], ["c"]]}"#;
    let full = r#"{"points": ["a", "b", "c"], "opens": [[], ["a"], ["c"], ["a", "c"], ["a", "b", "c"]], "mode": "full"}"#;
    assert_eq!(read_space(gens).unwrap(), read_space(full).unwrap());
    assert!(read_space(r#"{"points": ["a"], "opens": [], "mode": "sideways"}"#).is_err());
    assert!(read_space(r#"{"points": ["a"], "opens": [["z"]]}"#).is_err());
    assert!(read_space(r#"{"points": ["a"], "opens": [], "extra": 1}"#).is_err());
}

proptest! {
    #[test]
    fn random_spaces_round_trip(seed in any::<u64>(), n in 0usize..7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let s = random_space(&mut rng, n);
        let text = write_space(&s);
        prop_assert_eq!(read_space(&text).unwrap(), s);
    }

    #[test]
    fn random_witnesses_round_trip(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let w = witness(n, &random_witness(&mut rng, n));
        let text = write_witness(&w);
        let back = read_witness(&text).unwrap();
        prop_assert_eq!(write_witness(&back), text.clone());
        prop_assert_eq!(back.witness_opens().unwrap(), w.witness_opens().unwrap());
        let spec = read_spec(&text).unwrap();
        prop_assert!(matches!(spec, Spec::Witness(_)));
        prop_assert_eq!(spec.space().unwrap(), w.witness_opens().unwrap());
    }

    #[test]
    fn valuations_round_trip(vals in proptest::collection::vec(0usize..3, 0..8)) {
        let f = Valuation3(vals.iter().map(|&i| Three::ALL[i]).collect());
        let l = labels(vals.len());
        prop_assert_eq!(read_valuation(&write_valuation(&f, &l), &l).unwrap(), f.clone());
        let compact: String = f.0.iter().map(|v| v.as_char()).collect();
        prop_assert_eq!(read_valuation(&compact, &l).unwrap(), f);
    }
}

#[test]
fn frames_round_trip() {
    for name in ["fig-012-tl", "fig-square", "sierpinski", "fig-triangle"] {
        let fr = Semiframe::of_space(&catalog(name, 0).unwrap());
        let text = write_frame(&fr);
        let back = read_frame(&text).unwrap();
        assert_eq!(back, fr);
        assert_eq!(write_frame(&back), text);
        let spec = read_spec(&text).unwrap();
        assert!(matches!(spec, Spec::Frame(_)));
        assert_eq!(spec.space().unwrap().len(), fr.abstract_points().unwrap().len());
    }
}

#[test]
fn soberification_output_loads_back() {
    let s = catalog("trivial", 3).unwrap();
    let text = write_soberification(&s, &soberify(&s).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let sob = read_space(&v["space"].to_string()).unwrap();
    assert_eq!(sob.len(), 1);
    let target = v["nbhd"]["0"].as_str().unwrap();
    assert!(sob.index_of(target).is_ok());
}

#[test]
fn valuation_errors() {
    let l = labels(2);
    assert!(read_valuation("TBF", &l).is_err());
    assert!(read_valuation("TX", &l).is_err());
    assert!(read_valuation(r#"{"0": "T"}"#, &l).is_err());
    assert!(read_valuation(r#"{"0": "T", "1": "B", "9": "F"}"#, &l).is_err());
    assert_eq!(read_valuation("\"TB\"", &l).unwrap().0, vec![Three::T, Three::B]);
}

#[test]
fn witness_validation_names_the_point() {
    let e = read_witness(r#"{"points": ["a", "b"], "witness": {"a": [["a"]]}}"#).unwrap_err().to_string();
    assert!(e.contains('b'), "{}", e);
    let e = read_witness(r#"{"points": ["a"], "witness": {"a": [["q"]]}}"#).unwrap_err().to_string();
    assert!(e.contains('q'), "{}", e);
}
