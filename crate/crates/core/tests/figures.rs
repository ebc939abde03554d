use semitop::figures::check_figures;

#[test]
fn every_figure_value_matches_or_is_a_recorded_conflict() {
    let checks = check_figures().unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed() && c.conflict.is_none()).collect();
    assert!(failed.is_empty(), "{:#?}", failed);
    assert!(checks.len() > 60);
}

#[test]
fn recorded_conflicts_really_disagree() {
    // if one of these starts passing the note is stale
    for c in check_figures().unwrap().iter().filter(|c| c.conflict.is_some()) {
        assert!(!c.passed(), "{} now matches", c.name);
    }
}
