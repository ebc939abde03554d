//! The `semitop` command line.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::antisep::{extremal_valuations, Analysis, IntersectionGraph};
use crate::catalog::{catalog, is_parametric};
use crate::error::{Error, Result};
use crate::figures::check_figures;
use crate::io::{read_spec, read_valuation, write_soberification, write_space, Spec};
use crate::logic3::{intertwined_w, parse, Model, TagSequent};
use crate::pointset::PointSet;
use crate::semiframe::soberify;
use crate::solvers::{dimacs, dpll, hornsat3, intertwined_by_sat, sat_check, Horn3Theory, SatMethod};
use crate::space::Semitopology;
use crate::three::{Three, Valuation3};

#[derive(Parser, Debug)]
#[command(name = "semitop", version, about = "Finite semitopologies, witness functions and three-valued logic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Regularity flags for every point, or for one.
    Classify {
        spec: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Maximal topens and irregular points.
    Partition {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    Closure {
        spec: String,
        #[arg(long, value_name = "a,b")]
        set: String,
    },
    Interior {
        spec: String,
        #[arg(long, value_name = "a,b")]
        set: String,
    },
    Intertwined {
        spec: String,
        p: String,
        q: String,
        #[arg(long, value_enum, default_value_t = IntertwinedMethod::Brute)]
        method: IntertwinedMethod,
    },
    /// The space of abstract points, with the map from the original points.
    Soberify {
        spec: String,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// Extremal valuations, one per line.
    Extremal { spec: String },
    /// Evaluate a predicate under one valuation, or under every continuous one.
    Eval {
        spec: String,
        #[arg(long)]
        pred: String,
        #[arg(long)]
        valuation: Option<PathBuf>,
    },
    /// Derivability of a tag-sequent.
    Derive {
        spec: String,
        #[arg(long)]
        sequent: PathBuf,
        /// Also decide validity by enumerating valuations.
        #[arg(long)]
        check: bool,
    },
    Sat {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SatCliMethod::Dpll)]
        method: SatCliMethod,
    },
    Hornsat3 { file: PathBuf },
    /// Emit a catalogued space as JSON.
    Catalog {
        name: String,
        #[arg(short, default_value_t = 0)]
        n: usize,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// The intersection graph of the nonempty opens.
    Graph {
        spec: String,
        #[arg(long, required = true)]
        dot: bool,
        #[arg(long)]
        flanks: bool,
        #[arg(long)]
        self_loops: bool,
    },
    /// Check every recorded value for the catalogued spaces.
    CheckFigures,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IntertwinedMethod {
    Brute,
    Sat,
    Logic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SatCliMethod {
    Reduction,
    Dpll,
}

/// Run with explicit streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e) } else { write!(err, "{}", e) };
            return code;
        }
    };
    match dispatch(cli.cmd, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            1
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Precondition(e.to_string())
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {}", path.display(), e)))
}

/// `-` for standard input, an existing file, or a catalog name with an
/// optional `:n` size.
fn load(spec: &str, stdin: &mut dyn Read) -> Result<Spec> {
    if spec == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_err)?;
        return read_spec(&s);
    }
    let path = Path::new(spec);
    if path.is_file() {
        return read_spec(&read_file(path)?);
    }
    let (name, n) = match spec.split_once(':') {
        Some((name, k)) => (name, k.parse().map_err(|_| Error::OutOfRange(format!("bad size `{}`", k)))?),
        None => (spec, if is_parametric(spec) { 3 } else { 0 }),
    };
    Ok(Spec::Space(catalog(name, n)?))
}

fn point(s: &Semitopology, l: &str) -> Result<usize> {
    s.index_of(l)
}

fn parse_set(s: &Semitopology, text: &str) -> Result<PointSet> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|l| point(s, l))
        .collect()
}

fn emit(out: &mut dyn Write, o: &Option<PathBuf>, text: &str) -> Result<()> {
    match o {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Precondition(format!("{}: {}", path.display(), e))),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn classification_json(a: &Analysis, p: usize) -> Result<Value> {
    let mut v = serde_json::to_value(a.classify(p)?)?;
    if let Value::Object(m) = &mut v {
        m.insert("point".into(), json!(a.space().label(p)));
    }
    Ok(v)
}

fn dispatch(cmd: Cmd, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    let w = |out: &mut dyn Write, s: String| out.write_all(s.as_bytes()).map_err(io_err);
    match cmd {
        Cmd::Classify { spec, point: pt, json } => {
            let s = load(&spec, stdin)?.space()?;
            let a = Analysis::new(&s);
            let pts: Vec<usize> = match pt {
                Some(l) => vec![point(&s, &l)?],
                None => (0..s.len()).collect(),
            };
            if json {
                let v = if pts.len() == 1 && s.len() != 1 {
                    classification_json(&a, pts[0])?
                } else {
                    let part = a.topen_partition();
                    json!({
                        "points": pts.iter().map(|&p| classification_json(&a, p)).collect::<Result<Vec<_>>>()?,
                        "maximal_topens": part.maximal_topens.iter().map(|&t| s.set_labels(t)).collect::<Vec<_>>(),
                        "irregular_points": s.set_labels(part.irregular_points),
                    })
                };
                w(out, format!("{}\n", serde_json::to_string_pretty(&v)?))?;
            } else {
                let head = ["point", "regular", "weakly", "quasi", "unconfl", "hypertr", "hyperdef", "mcn"];
                w(out, format!("{}\n", head.join("\t")))?;
                for p in pts {
                    let c = a.classify(p)?;
                    let flags = [c.regular, c.weakly_regular, c.quasiregular, c.unconflicted, c.hypertransitive, c.hyperdefinite, c.mcn];
                    let cells: Vec<&str> = flags.iter().map(|&b| if b { "yes" } else { "no" }).collect();
                    w(out, format!("{}\t{}\n", s.label(p), cells.join("\t")))?;
                }
            }
        }
        Cmd::Partition { spec, json } => {
            let s = load(&spec, stdin)?.space()?;
            let part = Analysis::new(&s).topen_partition();
            if json {
                let v = json!({
                    "maximal_topens": part.maximal_topens.iter().map(|&t| s.set_labels(t)).collect::<Vec<_>>(),
                    "irregular_points": s.set_labels(part.irregular_points),
                });
                w(out, format!("{}\n", serde_json::to_string_pretty(&v)?))?;
            } else {
                for t in &part.maximal_topens {
                    w(out, format!("topen {}\n", s.fmt_set(*t)))?;
                }
                w(out, format!("irregular {}\n", s.fmt_set(part.irregular_points)))?;
            }
        }
        Cmd::Closure { spec, set } => {
            let s = load(&spec, stdin)?.space()?;
            let x = parse_set(&s, &set)?;
            w(out, format!("{}\n", s.fmt_set(s.closure(x))))?;
        }
        Cmd::Interior { spec, set } => {
            let s = load(&spec, stdin)?.space()?;
            let x = parse_set(&s, &set)?;
            w(out, format!("{}\n", s.fmt_set(s.interior(x))))?;
        }
        Cmd::Intertwined { spec, p, q, method } => {
            let sp = load(&spec, stdin)?;
            let s = sp.space()?;
            let (p, q) = (point(&s, &p)?, point(&s, &q)?);
            let wf = sp.witness()?;
            let v = match method {
                IntertwinedMethod::Brute => s.intertwined(p, q),
                IntertwinedMethod::Sat => intertwined_by_sat(&wf, p, q)?,
                IntertwinedMethod::Logic => {
                    let m = Model::with_witness(wf);
                    m.valid(&intertwined_w(p, q), &Valuation3::constant(s.len(), Three::B))?
                }
            };
            w(out, format!("{}\n", v))?;
        }
        Cmd::Soberify { spec, o } => {
            let text = match load(&spec, stdin)? {
                Spec::Frame(f) => write_space(&f.st()?.0),
                other => {
                    let s = other.space()?;
                    write_soberification(&s, &soberify(&s)?)
                }
            };
            emit(out, &o, &text)?;
        }
        Cmd::Extremal { spec } => {
            let s = load(&spec, stdin)?.space()?;
            for f in extremal_valuations(&s) {
                w(
                    out,
                    format!(
                        "T={} B={} F={}\n",
                        s.fmt_set(f.preimage(&[Three::T])),
                        s.fmt_set(f.preimage(&[Three::B])),
                        s.fmt_set(f.preimage(&[Three::F]))
                    ),
                )?;
            }
        }
        Cmd::Eval { spec, pred, valuation } => {
            let sp = load(&spec, stdin)?;
            let labels = sp.labels();
            let phi = parse(&pred, &labels)?;
            let m = Model::with_witness(sp.witness()?);
            match valuation {
                Some(path) => {
                    let f = read_valuation(&read_file(&path)?, &labels)?;
                    w(out, format!("{}\n", m.eval(&phi, &f)?))?;
                }
                None => {
                    let fs = m.continuous()?;
                    let vals = m.eval_each(&phi, &fs)?;
                    if vals.iter().all(|v| *v == vals[0]) {
                        w(out, format!("{}\n", vals[0]))?;
                    } else {
                        for (f, v) in fs.iter().zip(&vals) {
                            w(out, format!("{}\t{}\n", f.to_string_compact(), v))?;
                        }
                        let valid = vals.iter().all(|v| v.designated());
                        w(out, format!("valid {}\n", valid))?;
                    }
                }
            }
        }
        Cmd::Derive { spec, sequent, check } => {
            let sp = load(&spec, stdin)?;
            let labels = sp.labels();
            let seq = TagSequent::parse(&read_file(&sequent)?, &labels)?;
            let wf = sp.witness()?;
            let d = seq.derive(labels.len(), Some(&wf))?;
            w(out, format!("derivable {}\n", d))?;
            if check {
                w(out, format!("valid {}\n", seq.is_valid(labels.len(), Some(&wf))?))?;
            }
        }
        Cmd::Sat { file, method } => {
            let cnf = dimacs::parse(&read_file(&file)?)?;
            match method {
                SatCliMethod::Dpll => match dpll::solve(&cnf) {
                    Some(model) => {
                        let lits: Vec<String> = model
                            .iter()
                            .enumerate()
                            .map(|(i, &b)| format!("{}{}", if b { "" } else { "-" }, i + 1))
                            .collect();
                        w(out, format!("s SATISFIABLE\nv {} 0\n", lits.join(" ")))?;
                    }
                    None => w(out, "s UNSATISFIABLE\n".into())?,
                },
                SatCliMethod::Reduction => {
                    let sat = sat_check(&cnf, SatMethod::Reduction)?;
                    w(out, format!("s {}\n", if sat { "SATISFIABLE" } else { "UNSATISFIABLE" }))?;
                }
            }
        }
        Cmd::Hornsat3 { file } => {
            let th = Horn3Theory::parse(&read_file(&file)?)?;
            match hornsat3(&th) {
                Some(f) => {
                    for (a, v) in th.atoms.iter().zip(&f.0) {
                        w(out, format!("{} {}\n", a, v))?;
                    }
                }
                None => w(out, "unsatisfiable\n".into())?,
            }
        }
        Cmd::Catalog { name, n, o } => {
            let s = catalog(&name, n)?;
            emit(out, &o, &write_space(&s))?;
        }
        Cmd::Graph { spec, dot: _, flanks, self_loops } => {
            let s = load(&spec, stdin)?.space()?;
            w(out, IntersectionGraph::new(&s).to_dot(self_loops, flanks))?;
        }
        Cmd::CheckFigures => {
            let checks = check_figures()?;
            let mut failed = 0;
            let mut conflicts = 0;
            for c in &checks {
                if c.passed() {
                    w(out, format!("PASS {}\n", c.name))?;
                } else {
                    w(out, format!("FAIL {}: expected {}, got {}\n", c.name, c.expected, c.actual))?;
                    match c.conflict {
                        Some(why) => {
                            conflicts += 1;
                            w(out, format!("     recorded conflict: {}\n", why))?;
                        }
                        None => failed += 1,
                    }
                }
            }
            w(
                out,
                format!(
                    "{} checks, {} passed, {} failed ({} of them recorded conflicts)\n",
                    checks.len(),
                    checks.len() - failed - conflicts,
                    failed + conflicts,
                    conflicts
                ),
            )?;
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}
