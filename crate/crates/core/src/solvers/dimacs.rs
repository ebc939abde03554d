//! DIMACS CNF reading and writing.

use std::fmt::Write;

use super::cnf::{Cnf, Lit};
use crate::error::{Error, Result};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Cnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut cur: Vec<Lit> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        last_line = line_no;
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err(line_no, "second header"));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(err(line_no, "malformed header, expected `p cnf V C`"));
            }
            let v = parts[2]
                .parse()
                .map_err(|_| err(line_no, "malformed variable count"))?;
            let c = parts[3]
                .parse()
                .map_err(|_| err(line_no, "malformed clause count"))?;
            header = Some((v, c));
            continue;
        }
        let (nv, _) = header.ok_or_else(|| err(line_no, "clause before header"))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| err(line_no, format!("bad literal `{}`", tok)))?;
            if x == 0 {
                clauses.push(std::mem::take(&mut cur));
                continue;
            }
            let v = x.unsigned_abs() as usize;
            if v > nv {
                return Err(err(
                    line_no,
                    format!("literal {} out of range for {} variables", x, nv),
                ));
            }
            cur.push(if x > 0 { Lit::pos(v - 1) } else { Lit::neg(v - 1) });
        }
    }
    let (nv, nc) = header.ok_or_else(|| err(0, "missing header"))?;
    if !cur.is_empty() {
        return Err(err(last_line, "missing terminating 0"));
    }
    if clauses.len() != nc {
        return Err(err(
            last_line,
            format!("header declares {} clauses, found {}", nc, clauses.len()),
        ));
    }
    Cnf::numbered(nv, clauses)
}

pub fn write(cnf: &Cnf) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.vars.len(), cnf.clauses.len());
    for c in &cnf.clauses {
        for l in c {
            let v = l.var as i64 + 1;
            write!(out, "{} ", if l.positive { v } else { -v }).unwrap();
        }
        out.push_str("0\n");
    }
    out
}
