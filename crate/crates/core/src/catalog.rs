//! Named spaces: small parametric families and the worked figures.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{Mode, Semitopology};

/// Largest `n` accepted by the parametric families.
pub const MAX_CATALOG_N: usize = 20;

pub const NAMES: &[&str] = &[
    "discrete",
    "trivial",
    "sierpinski",
    "three",
    "supermajority",
    "all-but-one",
    "more-than-one",
    "fig-012-tl",
    "fig-012-tr",
    "fig-012-bl",
    "fig-012-br",
    "fig-square",
    "fig-irregular-a",
    "fig-irregular-b",
    "fig-nitpick",
    "fig-hypertwined12",
    "fig-triangle",
    "fig-wd-not-enough",
    "fig-strong-compat",
    "fig-ovals-a",
    "fig-ovals-b",
    "fig-two-min",
];

/// Whether `name` takes the size parameter.
pub fn is_parametric(name: &str) -> bool {
    matches!(
        name,
        "discrete" | "trivial" | "supermajority" | "all-but-one" | "more-than-one"
    )
}

fn numbered_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn by_size(n: usize, keep: impl Fn(usize) -> bool) -> Result<Semitopology> {
    let u = PointSet::full(n);
    let gens: Vec<PointSet> = u.subsets().filter(|s| keep(s.len())).collect();
    Semitopology::from_index_sets(numbered_labels(n), &gens, Mode::Generators)
}

fn figure(labels: &[&str], gens: &[&[&str]]) -> Semitopology {
    let gens: Vec<Vec<&str>> = gens.iter().map(|g| g.to_vec()).collect();
    Semitopology::from_generators(labels, &gens, Mode::Generators).expect("catalog figure")
}

/// Builds a named space. `n` is used by the parametric families only.
pub fn catalog(name: &str, n: usize) -> Result<Semitopology> {
    if is_parametric(name) && (n == 0 || n > MAX_CATALOG_N) {
        return Err(Error::OutOfRange(format!(
            "{} needs 1 <= n <= {}, got {}",
            name, MAX_CATALOG_N, n
        )));
    }
    let s = match name {
        "discrete" => Semitopology::discrete(numbered_labels(n))?,
        "trivial" => Semitopology::from_index_sets(numbered_labels(n), &[], Mode::Generators)?,
        "sierpinski" => figure(&["0", "1"], &[&["1"]]),
        "three" => figure(&["T", "B", "F"], &[&["T"], &["F"]]),
        // |O| > 2n/3, i.e. 3|O| > 2n
        "supermajority" => by_size(n, |k| 3 * k > 2 * n)?,
        "all-but-one" => by_size(n, |k| k + 1 == n)?,
        "more-than-one" => by_size(n, |k| k >= 2)?,
        "fig-012-tl" => figure(&["0", "1", "2"], &[&["0"], &["2"]]),
        "fig-012-tr" => figure(&["0", "1", "2"], &[&["0"], &["0", "1"], &["2"], &["1", "2"]]),
        "fig-012-bl" => figure(
            &["0", "1", "2", "3", "4"],
            &[&["0", "1"], &["1"], &["3"], &["3", "4"]],
        ),
        "fig-012-br" | "fig-nitpick" => figure(
            &["0", "1", "2", "*"],
            &[&["0"], &["1"], &["2"], &["0", "1", "*"], &["1", "2", "*"]],
        ),
        "fig-square" => figure(
            &["0", "1", "2", "3"],
            &[&["3", "0"], &["0", "1"], &["1", "2"], &["2", "3"]],
        ),
        "fig-irregular-a" => figure(
            &["0", "1", "2", "3", "4"],
            &[&["1", "2"], &["0", "1", "3"], &["0", "2", "4"], &["3"], &["4"]],
        ),
        "fig-irregular-b" => figure(
            &["0", "1", "2", "3", "4"],
            &[
                &["1"],
                &["2"],
                &["3"],
                &["4"],
                &["0", "1", "2", "3"],
                &["0", "1", "2", "4"],
            ],
        ),
        "fig-hypertwined12" => figure(
            &["0", "1", "2", "3"],
            &[&["0"], &["3"], &["0", "1", "2"], &["1", "2", "3"]],
        ),
        "fig-triangle" => figure(&["0", "1", "2"], &[&["0", "1"], &["1", "2"], &["0", "2"]]),
        "fig-wd-not-enough" => figure(
            &["0", "1", "2", "3"],
            &[&["0"], &["0", "1"], &["0", "1", "2"], &["2", "3"]],
        ),
        "fig-strong-compat" => figure(
            &["-2", "-1", "0", "1", "2"],
            &[&["-2", "-1"], &["-1", "0"], &["0", "1"], &["1", "2"]],
        ),
        "fig-ovals-a" => figure(&["0", "1", "2"], &[&["0", "1"], &["0", "2"], &["1", "2"], &["2"]]),
        "fig-ovals-b" => figure(&["0", "1", "2", "3"], &[&["0", "1"], &["1", "2"], &["2", "3"]]),
        "fig-two-min" => figure(&["0", "1", "2"], &[&["0", "1"], &["1", "2"]]),
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    Ok(s)
}
