//! The line-oriented configuration format.
//!
//! ```text
//! # comment
//! space P^2 over C(-3)
//! point [1, -1, 0]
//! plane [0, 1, -1/2+1/2*rt(-3)]
//! infinity [1, 1, 1]
//! ```
//!
//! Domains are `R`, `R(d)`, `C(d)`, `H` and `H(d)`.  Full-line comments are
//! kept as notes; text after a `#` elsewhere is ignored.  Printing is
//! canonical, so `parse(print(x)) == x`.

use std::fmt::{self, Write as _};

use super::{Arrangement, Configuration, Coord, Domain, Hyperplane, ProjPoint};
use crate::error::{Error, Result};
use crate::linalg::split_top;
use crate::scalars::{check_discriminant, Quad, Quat, Rat};

/// Everything a configuration file can hold.
#[derive(Clone, PartialEq, Debug)]
pub struct Document<S> {
    pub dim: usize,
    pub domain: Domain,
    pub notes: Vec<String>,
    pub points: Vec<ProjPoint<S>>,
    pub planes: Vec<Hyperplane<S>>,
    pub infinity: Option<Hyperplane<S>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_domain(s: &str) -> Option<Domain> {
    let s = s.trim();
    let tagged = |prefix: &str| -> Option<i64> {
        let body = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        body.trim().parse().ok()
    };
    let dom = match s {
        "R" => Domain::Real,
        "H" => Domain::Quaternion(None),
        _ => {
            if let Some(d) = tagged("R") {
                Domain::RealQuad(d)
            } else if let Some(d) = tagged("C") {
                Domain::Complex(d)
            } else if let Some(d) = tagged("H") {
                Domain::Quaternion(Some(d))
            } else {
                return None;
            }
        }
    };
    let ok = match dom {
        Domain::Real | Domain::Quaternion(None) => true,
        Domain::RealQuad(d) | Domain::Quaternion(Some(d)) => d > 0 && check_discriminant(d).is_ok(),
        Domain::Complex(d) => d < 0 && check_discriminant(d).is_ok(),
    };
    ok.then_some(dom)
}

/// Parse `space P^N over D`.
fn parse_header(line: &str, lineno: usize) -> Result<(usize, Domain)> {
    let bad = || parse_err(lineno, 1, "expected `space P^N over R | R(d) | C(d) | H | H(d)`");
    let rest = line.trim().strip_prefix("space").ok_or_else(bad)?.trim_start();
    let rest = rest.strip_prefix("P^").ok_or_else(bad)?;
    let (n, rest) = rest.split_once(char::is_whitespace).ok_or_else(bad)?;
    let dim: usize = n.parse().map_err(|_| bad())?;
    let dom = rest.trim_start().strip_prefix("over").ok_or_else(bad)?;
    let domain = parse_domain(dom).ok_or_else(|| {
        let col = line.find("over").map_or(1, |c| c + 6);
        parse_err(lineno, col, format!("unknown domain `{}`", dom.trim()))
    })?;
    Ok((dim, domain))
}

/// The header of the first non-comment line.
fn find_header(text: &str) -> Result<(usize, usize, Domain)> {
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let (dim, domain) = parse_header(line, i + 1)?;
        return Ok((i, dim, domain));
    }
    Err(parse_err(1, 1, "missing `space` header"))
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

fn parse_vector<S: Coord>(body: &str, line: &str, lineno: usize, dim: usize, ctx: Option<i64>) -> Result<Vec<S>> {
    let offset = |s: &str| s.as_ptr() as usize - line.as_ptr() as usize + 1;
    let trimmed = body.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err(lineno, offset(trimmed), "expected `[s, ...]`"))?;
    let parts = split_top(inner, ',');
    if parts.len() != dim + 1 {
        return Err(parse_err(
            lineno,
            offset(trimmed),
            format!("expected {} coordinates, found {}", dim + 1, parts.len()),
        ));
    }
    parts
        .into_iter()
        .map(|p| {
            S::parse_literal(p, ctx).map_err(|e| {
                let lead = p.len() - p.trim_start().len();
                parse_err(lineno, offset(p) + lead, e.to_string())
            })
        })
        .collect()
}

impl<S: Coord> Document<S> {
    pub fn new(dim: usize, domain: Domain) -> Self {
        Document {
            dim,
            domain,
            notes: Vec::new(),
            points: Vec::new(),
            planes: Vec::new(),
            infinity: None,
        }
    }

    pub fn from_configuration(c: &Configuration<S>) -> Self {
        let mut doc = Document::new(c.dim(), c.domain());
        doc.points = c.points().to_vec();
        doc
    }

    pub fn from_arrangement(a: &Arrangement<S>) -> Self {
        let mut doc = Document::new(a.dim(), a.domain());
        doc.planes = a.planes().to_vec();
        doc.infinity = a.infinity().cloned();
        doc
    }

    pub fn configuration(&self) -> Result<Configuration<S>> {
        Configuration::new(self.dim, self.domain, self.points.clone())
    }

    pub fn arrangement(&self) -> Result<Arrangement<S>> {
        Arrangement::new(self.dim, self.domain, self.planes.clone(), self.infinity.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (start, dim, domain) = find_header(text)?;
        let ctx = domain.context();
        if S::domain(ctx.unwrap_or(0)) != domain {
            return Err(parse_err(start + 1, 1, format!("domain {domain} does not match the requested scalar type")));
        }
        let mut doc = Document::new(dim, domain);
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            if i < start {
                if let Some(note) = raw.trim_start().strip_prefix('#') {
                    doc.notes.push(note.strip_prefix(' ').unwrap_or(note).to_string());
                }
                continue;
            }
            if i == start {
                continue;
            }
            if let Some(note) = raw.trim_start().strip_prefix('#') {
                doc.notes.push(note.strip_prefix(' ').unwrap_or(note).to_string());
                continue;
            }
            let line = strip_comment(raw);
            let t = line.trim_start();
            if t.is_empty() {
                continue;
            }
            let col = line.len() - t.len() + 1;
            let (kw, body) = t.split_at(t.find(|c: char| c.is_whitespace() || c == '[').unwrap_or(t.len()));
            let zero = || parse_err(lineno, col, "zero vector");
            match kw {
                "point" => {
                    let v = parse_vector(body, raw, lineno, dim, ctx)?;
                    doc.points.push(ProjPoint::new(v).map_err(|_| zero())?);
                }
                "plane" => {
                    let v = parse_vector(body, raw, lineno, dim, ctx)?;
                    doc.planes.push(Hyperplane::new(v).map_err(|_| zero())?);
                }
                "infinity" => {
                    if doc.infinity.is_some() {
                        return Err(parse_err(lineno, col, "second `infinity` line"));
                    }
                    let v = parse_vector(body, raw, lineno, dim, ctx)?;
                    doc.infinity = Some(Hyperplane::new(v).map_err(|_| zero())?);
                }
                "space" => return Err(parse_err(lineno, col, "second `space` header")),
                other => return Err(parse_err(lineno, col, format!("unknown keyword `{other}`"))),
            }
        }
        Ok(doc)
    }
}

fn write_vec<S: fmt::Display>(out: &mut String, kw: &str, v: &[S]) {
    let _ = write!(out, "{kw} [");
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out.push_str("]\n");
}

impl<S: Coord> fmt::Display for Document<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = format!("space P^{} over {}\n", self.dim, self.domain);
        for n in &self.notes {
            if n.is_empty() {
                out.push_str("#\n");
            } else {
                let _ = writeln!(out, "# {n}");
            }
        }
        for p in &self.points {
            write_vec(&mut out, "point", p.coords());
        }
        for h in &self.planes {
            write_vec(&mut out, "plane", h.covector());
        }
        if let Some(h) = &self.infinity {
            write_vec(&mut out, "infinity", h.covector());
        }
        f.write_str(&out)
    }
}

/// A document over whichever domain its header declares.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyDocument {
    Real(Document<Rat>),
    RealQuad(Document<Quad>),
    Complex(Document<Quad>),
    Quaternion(Document<Quat<Rat>>),
    QuaternionQuad(Document<Quat<Quad>>),
}

impl AnyDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let (_, _, domain) = find_header(text)?;
        Ok(match domain {
            Domain::Real => AnyDocument::Real(Document::parse(text)?),
            Domain::RealQuad(_) => AnyDocument::RealQuad(Document::parse(text)?),
            Domain::Complex(_) => AnyDocument::Complex(Document::parse(text)?),
            Domain::Quaternion(None) => AnyDocument::Quaternion(Document::parse(text)?),
            Domain::Quaternion(Some(_)) => AnyDocument::QuaternionQuad(Document::parse(text)?),
        })
    }

    pub fn domain(&self) -> Domain {
        match self {
            AnyDocument::Real(d) => d.domain,
            AnyDocument::RealQuad(d) | AnyDocument::Complex(d) => d.domain,
            AnyDocument::Quaternion(d) => d.domain,
            AnyDocument::QuaternionQuad(d) => d.domain,
        }
    }
}

impl fmt::Display for AnyDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyDocument::Real(d) => d.fmt(f),
            AnyDocument::RealQuad(d) | AnyDocument::Complex(d) => d.fmt(f),
            AnyDocument::Quaternion(d) => d.fmt(f),
            AnyDocument::QuaternionQuad(d) => d.fmt(f),
        }
    }
}
