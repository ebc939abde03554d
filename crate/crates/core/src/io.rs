//! JSON formats for spaces, witness functions, semiframes and valuations.
//!
//! ```text
//! space:     {"points": [..], "opens": [[..], ..], "mode": "generators" | "full"}
//! witness:   {"points": [..], "witness": {"p": [["a", "b"], ["c"]], ..}}
//! semiframe: {"elements": [..], "leq": [[a, b], ..], "compat": [[a, b], ..]}
//! ```
//!
//! Writers emit canonical forms, so reading and writing back is byte-stable.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::semiframe::{Semiframe, Soberification};
use crate::space::{Mode, Semitopology};
use crate::three::{Three, Valuation3};
use crate::witness::WitnessFunction;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceJson {
    points: Vec<String>,
    opens: Vec<Vec<String>>,
    #[serde(default = "default_mode")]
    mode: String,
}

fn default_mode() -> String {
    "generators".into()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessJson {
    points: Vec<String>,
    witness: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrameJson {
    elements: Vec<String>,
    leq: Vec<(String, String)>,
    compat: Vec<(String, String)>,
}

/// Any of the loadable structures.
#[derive(Clone, Debug)]
pub enum Spec {
    Space(Semitopology),
    Witness(WitnessFunction),
    Frame(Semiframe),
}

impl Spec {
    /// The semitopology denoted: the witness semitopology of a witness
    /// function, or the space of abstract points of a semiframe.
    pub fn space(&self) -> Result<Semitopology> {
        match self {
            Spec::Space(s) => Ok(s.clone()),
            Spec::Witness(w) => w.witness_opens(),
            Spec::Frame(f) => Ok(f.st()?.0),
        }
    }

    /// The witness function, or the open-neighbourhood witness function of a space.
    pub fn witness(&self) -> Result<WitnessFunction> {
        match self {
            Spec::Witness(w) => Ok(w.clone()),
            _ => Ok(WitnessFunction::from_semitopology(&self.space()?)),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            Spec::Space(s) => s.labels().to_vec(),
            Spec::Witness(w) => w.labels().to_vec(),
            Spec::Frame(f) => f.labels().to_vec(),
        }
    }
}

pub fn read_spec(text: &str) -> Result<Spec> {
    let v: Value = serde_json::from_str(text)?;
    let obj = v.as_object().ok_or_else(|| Error::Json("expected a JSON object".into()))?;
    if obj.contains_key("witness") {
        Ok(Spec::Witness(witness_from_value(v)?))
    } else if obj.contains_key("elements") {
        Ok(Spec::Frame(frame_from_value(v)?))
    } else {
        Ok(Spec::Space(space_from_value(v)?))
    }
}

fn space_from_value(v: Value) -> Result<Semitopology> {
    let j: SpaceJson = serde_json::from_value(v)?;
    let mode = match j.mode.as_str() {
        "generators" => Mode::Generators,
        "full" => Mode::Full,
        other => return Err(Error::Json(format!("unknown mode `{}`", other))),
    };
    Semitopology::from_generators(&j.points, &j.opens, mode)
}

pub fn read_space(text: &str) -> Result<Semitopology> {
    space_from_value(serde_json::from_str(text)?)
}

fn space_json(s: &Semitopology) -> SpaceJson {
    SpaceJson {
        points: s.labels().to_vec(),
        opens: s.opens().iter().map(|&o| s.set_labels(o)).collect(),
        mode: "full".into(),
    }
}

/// Every open, in canonical order, with mode `full`.
pub fn write_space(s: &Semitopology) -> String {
    pretty(&space_json(s))
}

fn witness_from_value(v: Value) -> Result<WitnessFunction> {
    let j: WitnessJson = serde_json::from_value(v)?;
    let map: HashMap<String, Vec<Vec<String>>> = j.witness.into_iter().collect();
    WitnessFunction::from_labels(&j.points, &map)
}

pub fn read_witness(text: &str) -> Result<WitnessFunction> {
    witness_from_value(serde_json::from_str(text)?)
}

pub fn write_witness(w: &WitnessFunction) -> String {
    let labels = w.labels();
    let witness = (0..w.len())
        .map(|p| {
            let sets = w
                .witness_sets(p)
                .iter()
                .map(|ws| ws.iter().map(|q| labels[q].clone()).collect())
                .collect();
            (labels[p].clone(), sets)
        })
        .collect();
    pretty(&WitnessJson { points: labels.to_vec(), witness })
}

fn frame_from_value(v: Value) -> Result<Semiframe> {
    let j: FrameJson = serde_json::from_value(v)?;
    let idx = |l: &str| {
        j.elements
            .iter()
            .position(|e| e == l)
            .ok_or_else(|| Error::UnknownPoint(l.to_string()))
    };
    let pairs = |ps: &[(String, String)]| -> Result<Vec<(usize, usize)>> {
        ps.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect()
    };
    Semiframe::new(j.elements.clone(), &pairs(&j.leq)?, &pairs(&j.compat)?)
}

pub fn read_frame(text: &str) -> Result<Semiframe> {
    frame_from_value(serde_json::from_str(text)?)
}

pub fn write_frame(f: &Semiframe) -> String {
    let (leq, compat) = f.tables();
    let l = f.labels();
    let name = |ps: Vec<(usize, usize)>| ps.into_iter().map(|(a, b)| (l[a].clone(), l[b].clone())).collect();
    pretty(&FrameJson { elements: l.to_vec(), leq: name(leq), compat: name(compat) })
}

#[derive(Serialize)]
struct SoberJson {
    space: SpaceJson,
    nbhd: BTreeMap<String, String>,
}

/// The sober space together with the map from original points to abstract points.
pub fn write_soberification(original: &Semitopology, sob: &Soberification) -> String {
    let nbhd = sob
        .nbhd
        .iter()
        .enumerate()
        .map(|(p, &q)| (original.label(p).to_string(), sob.space.label(q).to_string()))
        .collect();
    pretty(&SoberJson { space: space_json(&sob.space), nbhd })
}

/// A valuation, either as `{"label": "T", ..}` or as a string of `T`, `B`,
/// `F` in point order. Points missing from an object are an error.
pub fn read_valuation(text: &str, labels: &[String]) -> Result<Valuation3> {
    let t = text.trim();
    if !t.starts_with('{') {
        let vals: Vec<Three> = t
            .trim_matches('"')
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_string().parse())
            .collect::<Result<_>>()?;
        if vals.len() != labels.len() {
            return Err(Error::Precondition(format!(
                "valuation has {} values for {} points",
                vals.len(),
                labels.len()
            )));
        }
        return Ok(Valuation3(vals));
    }
    let map: BTreeMap<String, String> = serde_json::from_str(t)?;
    if let Some(k) = map.keys().find(|k| !labels.contains(k)) {
        return Err(Error::UnknownPoint(k.clone()));
    }
    labels
        .iter()
        .map(|l| {
            map.get(l)
                .ok_or_else(|| Error::Precondition(format!("valuation misses point `{}`", l)))?
                .parse()
        })
        .collect::<Result<Vec<Three>>>()
        .map(Valuation3)
}

pub fn write_valuation(f: &Valuation3, labels: &[String]) -> String {
    let map: BTreeMap<&str, String> = labels.iter().map(|l| l.as_str()).zip(f.0.iter().map(|v| v.to_string())).collect();
    serde_json::to_string(&map).expect("string map serialises")
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serialises");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn space_round_trip_is_byte_stable() {
        let s = catalog("fig-012-tl", 0).unwrap();
        let a = write_space(&s);
        let b = write_space(&read_space(&a).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn witness_errors_name_point() {
        let text = r#"{"points":["a","b"],"witness":{"a":[["a"]],"b":[]}}"#;
        let e = read_witness(text).unwrap_err().to_string();
        assert!(e.contains("`b`"), "{}", e);
    }

    #[test]
    fn valuation_forms() {
        let labels = vec!["x".to_string(), "y".to_string()];
        let f = read_valuation("TB", &labels).unwrap();
        assert_eq!(read_valuation(r#"{"x":"T","y":"B"}"#, &labels).unwrap(), f);
        assert_eq!(read_valuation(&write_valuation(&f, &labels), &labels).unwrap(), f);
        assert!(read_valuation(r#"{"x":"T"}"#, &labels).is_err());
    }
}
