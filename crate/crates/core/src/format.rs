//! Text formats.
//!
//! Edge list:
//!
//! ```text
//! p <order> <edge-count>
//! e <a> <b>          one per edge, a < b, sorted
//! v <id> <x1>,...,<xk>   optional vertex table of an M_k / F_k graph
//! ```
//!
//! Cycle file (one `M_2` vertex per line, closure implicit):
//!
//! ```text
//! # M2 fan m=<m> n=<n>
//! v1,w1
//! ...
//! ```
//!
//! Certificate file: the same header, one `S a,b` line per cut vertex and a
//! trailer `components=<c> |S|=<s>`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fan::CycleSeq;
use crate::graph::{FanLabel, FanLabeling, Graph, Vertex};
use crate::multiset::{LabeledBigGraph, MultisetVertex};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    write_edges(&mut out, g);
    out
}

fn write_edges(out: &mut String, g: &Graph) {
    let _ = writeln!(out, "p {} {}", g.order(), g.edge_count());
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "e {a} {b}");
    }
}

/// Edge list followed by the vertex table.
pub fn write_labeled(big: &LabeledBigGraph) -> String {
    let mut out = String::new();
    write_edges(&mut out, &big.graph);
    for (i, v) in big.vertices().iter().enumerate() {
        let _ = writeln!(out, "v {} {v}", i + 1);
    }
    out
}

/// A parsed edge-list document.
#[derive(Clone, Debug)]
pub struct EdgeListDocument {
    pub graph: Graph,
    /// `vertex_table[id - 1]` labels dense id `id`, when a table is present.
    pub vertex_table: Option<Vec<MultisetVertex>>,
}

impl EdgeListDocument {
    /// Dense id of a multiset, via the vertex table.
    pub fn id_of(&self, v: &MultisetVertex) -> Option<Vertex> {
        self.vertex_table
            .as_ref()?
            .iter()
            .position(|x| x == v)
            .map(|i| i + 1)
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what}")))
}

/// Reads an edge list. Blank lines and lines starting with `c` or `#` are
/// skipped; edges may appear in any order.
pub fn parse_edge_list(text: &str) -> Result<EdgeListDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut table: Vec<(usize, MultisetVertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') || l.starts_with('c') {
            continue;
        }
        let mut toks = l.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "second `p` line"));
                }
                let order = parse_usize(toks.next(), line, "order")?;
                let count = parse_usize(toks.next(), line, "edge count")?;
                header = Some((order, count));
            }
            "e" => {
                if header.is_none() {
                    return Err(Error::parse(line, "edge before the `p` line"));
                }
                let a = parse_usize(toks.next(), line, "endpoint")?;
                let b = parse_usize(toks.next(), line, "endpoint")?;
                edges.push((a, b));
            }
            "v" => {
                let id = parse_usize(toks.next(), line, "vertex id")?;
                let elems = toks
                    .next()
                    .ok_or_else(|| Error::parse(line, "missing vertex elements"))?
                    .split(',')
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::parse(line, "bad vertex elements"))?;
                let v = MultisetVertex::new(elems).map_err(|e| Error::parse(line, e.to_string()))?;
                table.push((id, v));
            }
            other => return Err(Error::parse(line, format!("unknown line tag `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
    }
    let (order, count) = header.ok_or_else(|| Error::parse(1, "missing `p` line"))?;
    if edges.len() != count {
        return Err(Error::parse(
            0,
            format!("header promises {count} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::new(order, edges).map_err(|e| Error::parse(0, e.to_string()))?;
    let vertex_table = if table.is_empty() {
        None
    } else {
        table.sort_by_key(|(id, _)| *id);
        if table.len() != order || table.iter().enumerate().any(|(i, (id, _))| *id != i + 1) {
            return Err(Error::parse(0, "vertex table must list ids 1..=order once each"));
        }
        Some(table.into_iter().map(|(_, v)| v).collect())
    };
    Ok(EdgeListDocument {
        graph,
        vertex_table,
    })
}

/// Undirected DOT. `label` may rename nodes; ids are used otherwise.
pub fn write_dot(g: &Graph, label: Option<&dyn Fn(Vertex) -> String>) -> String {
    let name = |v: Vertex| match label {
        Some(f) => f(v),
        None => v.to_string(),
    };
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "    \"{}\";", name(v));
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "    \"{}\" -- \"{}\";", name(a), name(b));
    }
    out.push_str("}\n");
    out
}

/// DOT with fan nodes named `v1..vn`, `w1..wm`.
pub fn write_fan_dot(g: &Graph, lab: FanLabeling) -> String {
    let f = move |v: Vertex| {
        lab.label(v)
            .map_or_else(|| v.to_string(), |l| l.to_string())
    };
    write_dot(g, Some(&f))
}

/// What the `#` header of a cycle or certificate file says about ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleHeader {
    /// Elements are fan labels of `F_{m,n}`.
    Fan { m: usize, n: usize },
    /// Elements are numeric ids of `g1 + g2` with `|g1| = m`, `|g2| = n`.
    Join { m: usize, n: usize },
    /// No header: elements are numeric.
    Plain,
}

impl CycleHeader {
    fn line(&self) -> Option<String> {
        match self {
            CycleHeader::Fan { m, n } => Some(format!("# M2 fan m={m} n={n}")),
            CycleHeader::Join { m, n } => Some(format!("# M2 join m={m} n={n}")),
            CycleHeader::Plain => None,
        }
    }

    fn parse(line: usize, text: &str) -> Result<Option<Self>> {
        let mut toks = text.trim_start_matches('#').split_whitespace();
        if toks.next() != Some("M2") {
            return Ok(None);
        }
        let kind = toks.next();
        let mut get = |key: &str| -> Result<usize> {
            toks.next()
                .and_then(|t| t.strip_prefix(key))
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(line, format!("header lacks {key}<int>")))
        };
        let m = get("m=")?;
        let n = get("n=")?;
        match kind {
            Some("fan") => Ok(Some(CycleHeader::Fan { m, n })),
            Some("join") => Ok(Some(CycleHeader::Join { m, n })),
            _ => Err(Error::parse(line, "header kind must be `fan` or `join`")),
        }
    }

    fn format_vertex(&self, v: &MultisetVertex) -> String {
        match *self {
            CycleHeader::Fan { m, n } => {
                let lab = FanLabeling::new(m, n);
                v.elems()
                    .iter()
                    .map(|&x| lab.label(x).map_or_else(|| x.to_string(), |l| l.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            }
            _ => v.to_string(),
        }
    }

    fn parse_vertex(&self, line: usize, text: &str) -> Result<MultisetVertex> {
        let ids = text
            .split(',')
            .map(|t| {
                let t = t.trim();
                match *self {
                    CycleHeader::Fan { m, n } => t
                        .parse::<FanLabel>()
                        .ok()
                        .and_then(|l| FanLabeling::new(m, n).id(l)),
                    _ => t.parse::<usize>().ok(),
                }
                .ok_or_else(|| Error::parse(line, format!("bad vertex element `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultisetVertex::new(ids).map_err(|e| Error::parse(line, e.to_string()))
    }
}

pub fn write_cycle_file(header: CycleHeader, cycle: &CycleSeq) -> String {
    let mut out = String::new();
    if let Some(h) = header.line() {
        out.push_str(&h);
        out.push('\n');
    }
    for v in cycle.vertices() {
        out.push_str(&header.format_vertex(v));
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFile {
    pub header: CycleHeader,
    /// Each entry is a multiset over base-graph ids (fan labels resolved).
    pub vertices: Vec<MultisetVertex>,
}

pub fn parse_cycle_file(text: &str) -> Result<CycleFile> {
    let mut header = CycleHeader::Plain;
    let mut vertices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if l.starts_with('#') {
            if let Some(h) = CycleHeader::parse(line, l)? {
                if !vertices.is_empty() {
                    return Err(Error::parse(line, "header after vertices"));
                }
                header = h;
            }
            continue;
        }
        vertices.push(header.parse_vertex(line, l)?);
    }
    Ok(CycleFile { header, vertices })
}

/// Maps the entries of a cycle file to dense ids of `doc`'s graph. With a
/// vertex table entries are looked up as multisets; without one each entry
/// must be a single dense id.
pub fn resolve_cycle_ids(doc: &EdgeListDocument, cycle: &CycleFile) -> Result<Vec<Vertex>> {
    match &doc.vertex_table {
        Some(table) => {
            let index: HashMap<&MultisetVertex, Vertex> =
                table.iter().enumerate().map(|(i, v)| (v, i + 1)).collect();
            cycle
                .vertices
                .iter()
                .map(|v| {
                    index.get(v).copied().ok_or_else(|| {
                        Error::invalid(format!("{{{v}}} is not in the vertex table"))
                    })
                })
                .collect()
        }
        None => cycle
            .vertices
            .iter()
            .map(|v| match v.elems() {
                [id] => Ok(*id),
                _ => Err(Error::invalid(format!(
                    "{{{v}}} needs a vertex table to resolve; pass an M_k graph file"
                ))),
            })
            .collect(),
    }
}

pub fn write_certificate_file(
    m: usize,
    n: usize,
    cut: &[MultisetVertex],
    components: usize,
) -> String {
    let header = CycleHeader::Fan { m, n };
    let mut out = header.line().unwrap_or_default();
    out.push('\n');
    for v in cut {
        let _ = writeln!(out, "S {}", header.format_vertex(v));
    }
    let _ = writeln!(out, "components={components} |S|={}", cut.len());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateFile {
    pub m: usize,
    pub n: usize,
    pub cut: Vec<MultisetVertex>,
    pub components: usize,
    pub cut_size: usize,
}

pub fn parse_certificate_file(text: &str) -> Result<CertificateFile> {
    let mut header = None;
    let mut cut = Vec::new();
    let mut trailer = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if l.starts_with('#') {
            if let Some(CycleHeader::Fan { m, n }) = CycleHeader::parse(line, l)? {
                header = Some((m, n));
            }
            continue;
        }
        let (m, n) = header.ok_or_else(|| Error::parse(line, "missing `# M2 fan` header"))?;
        if let Some(rest) = l.strip_prefix("S ") {
            cut.push(CycleHeader::Fan { m, n }.parse_vertex(line, rest)?);
        } else if let Some(rest) = l.strip_prefix("components=") {
            let (c, s) = rest
                .split_once(" |S|=")
                .ok_or_else(|| Error::parse(line, "bad trailer"))?;
            let c = c.parse().map_err(|_| Error::parse(line, "bad component count"))?;
            let s = s.parse().map_err(|_| Error::parse(line, "bad cut size"))?;
            trailer = Some((c, s));
        } else {
            return Err(Error::parse(line, "expected `S` line or trailer"));
        }
    }
    let (m, n) = header.ok_or_else(|| Error::parse(1, "missing `# M2 fan` header"))?;
    let (components, cut_size) = trailer.ok_or_else(|| Error::parse(0, "missing trailer"))?;
    if cut_size != cut.len() {
        return Err(Error::parse(0, "trailer |S| disagrees with the S lines"));
    }
    Ok(CertificateFile {
        m,
        n,
        cut,
        components,
        cut_size,
    })
}
