//! Graph JSON and OFF mesh files.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{parse_rational, to_decimal, Vec3};
use crate::plane_graph::{GraphError, GraphJson, RotationGraph};
use crate::polyhedron::Polyhedron;

pub const DEFAULT_PRECISION: usize = 12;
pub const PRECISION_VAR: &str = "ZG_PRECISION";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid graph JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("OFF line {line}: {message}")]
    Off { line: usize, message: String },
    #[error("{var} must be a non-negative integer, got {value:?}")]
    Precision { var: &'static str, value: String },
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        IoError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

pub fn parse_graph(text: &str) -> Result<RotationGraph, IoError> {
    let raw: GraphJson = serde_json::from_str(text)?;
    Ok(RotationGraph::try_from(raw)?)
}

/// `{"n":…,"adj":[…]}` with one rotation per line.
pub fn emit_graph(g: &RotationGraph) -> String {
    let mut out = format!("{{\"n\":{},\"adj\":[", g.vertex_count());
    for (v, rot) in g.rotations().iter().enumerate() {
        let sep = if v + 1 < g.vertex_count() { "," } else { "" };
        let row: Vec<String> = rot.iter().map(|u| u.to_string()).collect();
        write!(out, "\n  [{}]{sep}", row.join(",")).unwrap();
    }
    out.push_str("\n]}\n");
    out
}

/// Decimal digits for OFF output: `ZG_PRECISION` if set, else 12.
pub fn precision_from_env() -> Result<usize, IoError> {
    match std::env::var(PRECISION_VAR) {
        Ok(value) => value.trim().parse().map_err(|_| IoError::Precision {
            var: PRECISION_VAR,
            value,
        }),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

pub fn emit_off(p: &Polyhedron, precision: usize) -> String {
    let mut out = format!(
        "OFF\n{} {} {}\n",
        p.vertex_count(),
        p.face_count(),
        p.edge_count()
    );
    for v in &p.vertices {
        let c: Vec<String> = v.0.iter().map(|x| to_decimal(x, precision)).collect();
        writeln!(out, "{}", c.join(" ")).unwrap();
    }
    for face in &p.faces {
        let ids: Vec<String> = face.iter().map(|i| i.to_string()).collect();
        writeln!(out, "{} {}", face.len(), ids.join(" ")).unwrap();
    }
    out
}

/// Reads an OFF mesh with exact coordinates. `#` starts a comment; the edge
/// count in the header is not checked.
pub fn parse_off(text: &str) -> Result<Polyhedron, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: &str| IoError::Off {
        line,
        message: message.to_string(),
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let mut counts_inline = None;
    match header.strip_prefix("OFF") {
        Some(rest) if rest.trim().is_empty() => {}
        Some(rest) => counts_inline = Some((line, rest.trim())),
        None => return Err(err(line, "missing OFF header")),
    }
    let (line, counts) = match counts_inline {
        Some(c) => c,
        None => lines.next().ok_or_else(|| err(line, "missing counts"))?,
    };
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| err(line, "counts must be integers")))
        .collect::<Result<_, _>>()?;
    let (nv, nf) = match counts[..] {
        [nv, nf] | [nv, nf, _] => (nv, nf),
        _ => return Err(err(line, "expected \"V F E\"")),
    };

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (line, text) = lines
            .next()
            .ok_or_else(|| err(line, "too few vertex lines"))?;
        let c: Vec<_> = text.split_whitespace().map(parse_rational).collect();
        match c[..] {
            [Some(ref x), Some(ref y), Some(ref z)] => {
                vertices.push(Vec3::new(x.clone(), y.clone(), z.clone()))
            }
            _ => return Err(err(line, "expected three coordinates")),
        }
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, text) = lines
            .next()
            .ok_or_else(|| err(line, "too few face lines"))?;
        let ids: Vec<usize> = text
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| err(line, "face entries must be integers"))
            })
            .collect::<Result<_, _>>()?;
        let Some((&k, rest)) = ids.split_first() else {
            return Err(err(line, "empty face"));
        };
        if rest.len() != k {
            return Err(err(line, "face length does not match its vertex list"));
        }
        if rest.iter().any(|&i| i >= nv) {
            return Err(err(line, "face refers to a missing vertex"));
        }
        faces.push(rest.to_vec());
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "trailing data"));
    }
    Ok(Polyhedron::new(vertices, faces))
}
