//! Quiver files, DOT export.
//!
//! A quiver file is TOML:
//!
//! ```toml
//! [[vertices]]
//! id = "a"
//! dim = 1
//!
//! [[vertices]]
//! id = "b"
//! dim = 5
//!
//! [[arrows]]
//! from = "a"
//! to = "b"
//! count = 2
//! ```
//!
//! `count` defaults to 1. Errors carry the line and column of the offending
//! value.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::Range;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::quiver::{Arrow, DimensionVector, Quiver, QuiverSetting};

/// A parse or validation failure, positioned in the source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn at(text: &str, span: Option<Range<usize>>, message: impl Into<String>) -> Self {
        let offset = span.map_or(0, |s| s.start).min(text.len());
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    vertices: Vec<RawVertex>,
    #[serde(default)]
    arrows: Vec<RawArrow>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: Spanned<String>,
    dim: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrow {
    from: Spanned<String>,
    to: Spanned<String>,
    #[serde(default = "one")]
    count: Spanned<u64>,
}

fn one() -> Spanned<u64> {
    Spanned::new(0..0, 1)
}

#[derive(Serialize)]
struct OutFile<'a> {
    vertices: Vec<OutVertex<'a>>,
    arrows: Vec<OutArrow<'a>>,
}

#[derive(Serialize)]
struct OutVertex<'a> {
    id: &'a str,
    dim: u64,
}

#[derive(Serialize)]
struct OutArrow<'a> {
    from: &'a str,
    to: &'a str,
    count: usize,
}

/// Parses and validates a quiver file.
pub fn parse_setting(text: &str) -> Result<QuiverSetting, ParseError> {
    let raw: RawFile = toml::from_str(text).map_err(|e| ParseError::at(text, e.span(), e.message()))?;

    let mut index = BTreeMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if v.id.get_ref().is_empty() {
            return Err(ParseError::at(text, Some(v.id.span()), "vertex id must not be empty"));
        }
        if index.insert(v.id.get_ref().as_str(), i).is_some() {
            return Err(ParseError::at(
                text,
                Some(v.id.span()),
                format!("duplicate vertex `{}`", v.id.get_ref()),
            ));
        }
    }
    let lookup = |id: &Spanned<String>| {
        index.get(id.get_ref().as_str()).copied().ok_or_else(|| {
            ParseError::at(
                text,
                Some(id.span()),
                format!("arrow endpoint `{}` is not a declared vertex", id.get_ref()),
            )
        })
    };

    let mut arrows = Vec::new();
    for a in &raw.arrows {
        let (from, to) = (lookup(&a.from)?, lookup(&a.to)?);
        let count = *a.count.get_ref();
        if count == 0 {
            return Err(ParseError::at(text, Some(a.count.span()), "arrow count must be positive"));
        }
        arrows.extend(std::iter::repeat_n(Arrow::new(from, to), count as usize));
    }

    let ids: Vec<String> = raw.vertices.iter().map(|v| v.id.get_ref().clone()).collect();
    let dims: Vec<u64> = raw.vertices.iter().map(|v| v.dim).collect();
    let (quiver, position) =
        Quiver::from_indexed(ids, arrows).map_err(|e| ParseError::at(text, None, e.to_string()))?;
    let mut sorted = vec![0; dims.len()];
    for (i, &p) in position.iter().enumerate() {
        sorted[p] = dims[i];
    }
    QuiverSetting::new(quiver, DimensionVector::new(sorted)).map_err(|e| ParseError::at(text, None, e.to_string()))
}

/// Canonical text: vertices sorted by id, parallel arrows merged into one
/// entry with a count, entries sorted by endpoints.
pub fn to_toml(s: &QuiverSetting) -> String {
    let q = s.quiver();
    let mut arrows: Vec<OutArrow> = Vec::new();
    for a in q.arrows() {
        match arrows.last_mut() {
            Some(last) if last.from == q.id(a.source) && last.to == q.id(a.target) => last.count += 1,
            _ => arrows.push(OutArrow {
                from: q.id(a.source),
                to: q.id(a.target),
                count: 1,
            }),
        }
    }
    let file = OutFile {
        vertices: (0..q.vertex_count())
            .map(|v| OutVertex {
                id: q.id(v),
                dim: s.dim(v),
            })
            .collect(),
        arrows,
    };
    toml::to_string(&file).expect("quiver files always serialize")
}

fn dot_quote(id: &str) -> String {
    let mut out = String::with_capacity(id.len() + 2);
    out.push('"');
    for ch in id.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Graphviz digraph with vertices sorted by id, labelled `id/dim`, and one
/// edge line per arrow.
pub fn to_dot(s: &QuiverSetting) -> String {
    let q = s.quiver();
    let mut out = String::from("digraph quiver {\n");
    for v in 0..q.vertex_count() {
        let id = q.id(v);
        let label = format!("{id}/{}", s.dim(v));
        writeln!(out, "  {} [label={}];", dot_quote(id), dot_quote(&label)).expect("writing to a String");
    }
    for a in q.arrows() {
        writeln!(out, "  {} -> {};", dot_quote(q.id(a.source)), dot_quote(q.id(a.target))).expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
