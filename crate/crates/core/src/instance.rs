//! Text formats: instance files and verdict reports.
//!
//! ```text
//! ptg 1
//! n 6
//! adj 1: 2 3 4 5 6
//! adj 2: 1 6 3
//! adj 3: 1 2 4
//! adj 4: 1 3 5
//! adj 5: 1 4 6
//! adj 6: 1 5 2
//! outer: 2 3 4 5 6
//! ```
//!
//! Neighbors are listed clockwise; the outer walk is clockwise too. `#` starts
//! a comment that runs to the end of the line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::{Certificate, CertificateSyntaxError};
use crate::decide::{ChordalVerdict, PerfectVerdict};
use crate::plane::{PlaneError, PlaneGraph, RotationSystem, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {vertex} lists neighbor {neighbor}, which has no adjacency line")]
    DanglingVertex { line: usize, vertex: u32, neighbor: u32 },
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error("line {line}: {source}")]
    Certificate { line: usize, source: CertificateSyntaxError },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn parse_ids(line: usize, text: &str) -> Result<Vec<u32>, ParseError> {
    text.split_whitespace()
        .map(|w| match w.parse::<u32>() {
            Ok(0) | Err(_) => Err(syntax(line, format!("bad vertex id {w:?}"))),
            Ok(id) => Ok(id),
        })
        .collect()
}

/// Lines with comments stripped, paired with 1-based line numbers; blank
/// lines are dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub fn parse_instance(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count().max(1);

    match lines.next() {
        Some((_, "ptg 1")) => {}
        Some((l, other)) => return Err(syntax(l, format!("expected `ptg 1`, found {other:?}"))),
        None => return Err(syntax(1, "empty instance")),
    }
    let n = match lines.next() {
        Some((l, body)) => body
            .strip_prefix("n ")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| syntax(l, "expected `n <count>`"))?,
        None => return Err(syntax(last_line, "missing `n` line")),
    };
    if n == 0 {
        return Err(PlaneError::EmptyVertexSet.into());
    }

    let mut adj: Vec<Option<(usize, Vec<u32>)>> = vec![None; n];
    let mut outer = None;
    for (l, body) in lines {
        if outer.is_some() {
            return Err(syntax(l, "content after the `outer` line"));
        }
        if let Some(rest) = body.strip_prefix("outer:") {
            outer = Some(parse_ids(l, rest)?);
        } else if let Some(rest) = body.strip_prefix("adj ") {
            let (head, tail) = rest.split_once(':').ok_or_else(|| syntax(l, "expected `adj <v>: ...`"))?;
            let u = head
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&u| (1..=n).contains(&u))
                .ok_or_else(|| syntax(l, format!("vertex {:?} out of range 1..={n}", head.trim())))?;
            if adj[u - 1].is_some() {
                return Err(syntax(l, format!("second adjacency line for vertex {u}")));
            }
            adj[u - 1] = Some((l, parse_ids(l, tail)?));
        } else {
            return Err(syntax(l, format!("unrecognized line {body:?}")));
        }
    }
    let outer = outer.ok_or_else(|| syntax(last_line, "missing `outer:` line"))?;

    for (i, entry) in adj.iter().enumerate() {
        if let Some((l, list)) = entry {
            if let Some(&w) = list.iter().find(|&&w| w as usize > n || adj[w as usize - 1].is_none()) {
                return Err(ParseError::DanglingVertex { line: *l, vertex: i as u32 + 1, neighbor: w });
            }
        }
    }
    if let Some(i) = adj.iter().position(Option::is_none) {
        return Err(syntax(last_line, format!("no adjacency line for vertex {}", i + 1)));
    }
    let to_ids = |list: &[u32]| -> Result<Vec<VertexId>, ParseError> {
        list.iter().map(|&w| VertexId::new(w).ok_or(PlaneError::UnknownVertex(w).into())).collect()
    };
    let rot = adj
        .iter()
        .map(|e| to_ids(&e.as_ref().expect("checked above").1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PlaneGraph::new(RotationSystem::new(rot)?, to_ids(&outer)?)?)
}

/// Canonical text: rotations start at their smallest neighbor, the outer walk
/// at its smallest vertex.
pub fn serialize_instance(g: &PlaneGraph) -> String {
    let g = g.canonical();
    let mut out = format!("ptg 1\nn {}\n", g.vertex_count());
    let join = |vs: &[VertexId]| vs.iter().map(|u| u.to_string()).collect::<Vec<_>>().join(" ");
    for u in g.vertices() {
        let list = join(g.neighbors(u));
        let sep = if list.is_empty() { "" } else { " " };
        writeln!(out, "adj {u}:{sep}{list}").expect("writing to a String");
    }
    writeln!(out, "outer: {}", join(g.outer())).expect("writing to a String");
    out
}

/// `VERDICT` line followed by certificate lines.
pub fn format_chordal(v: &ChordalVerdict) -> String {
    let word = if v.is_chordal() { "chordal" } else { "not-chordal" };
    report(word, v.certificate())
}

pub fn format_perfect(v: &PerfectVerdict) -> String {
    let word = match v {
        PerfectVerdict::Perfect => "perfect",
        PerfectVerdict::NotPerfect(_) => "not-perfect",
        PerfectVerdict::NotW5Free(_) => "not-w5-free",
    };
    report(word, v.certificate())
}

pub fn format_unknown() -> String {
    "VERDICT unknown\n".to_string()
}

fn report(word: &str, cert: Option<Certificate>) -> String {
    let mut out = format!("VERDICT {word}\n");
    if let Some(c) = cert {
        writeln!(out, "{c}").expect("writing to a String");
    }
    out
}

/// Every `CERT` line of a report; `VERDICT` lines and comments are skipped.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>, ParseError> {
    content_lines(text)
        .filter(|(_, body)| !body.starts_with("VERDICT"))
        .map(|(line, body)| body.parse().map_err(|source| ParseError::Certificate { line, source }))
        .collect()
}
