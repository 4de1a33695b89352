//! Simple undirected graphs on vertex ids `1..=order`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A 1-based vertex id.
pub type Vertex = usize;

/// An immutable simple graph.
///
/// Edges are kept as canonical `(min, max)` pairs in lexicographic order, and
/// every adjacency list is sorted ascending, so two graphs with the same edge
/// set compare equal and serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    /// Endpoints may be given in either orientation.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            for x in [a, b] {
                if x == 0 || x > order {
                    return Err(Error::invalid(format!(
                        "vertex {x} out of range 1..={order}"
                    )));
                }
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "duplicate edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_canonical(order, canon))
    }

    /// `edges` must already be canonical, sorted and deduplicated.
    pub(crate) fn from_canonical(order: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); order];
        for &(a, b) in &edges {
            adj[a - 1].push(b);
            adj[b - 1].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { order, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.order
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.order
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.contains(a) && self.contains(b) && self.adj[a - 1].binary_search(&b).is_ok()
    }
}

/// The base families used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    Path,
    Cycle,
    Empty,
    Complete,
}

impl FromStr for BaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(BaseKind::Path),
            "cycle" => Ok(BaseKind::Cycle),
            "empty" => Ok(BaseKind::Empty),
            "complete" => Ok(BaseKind::Complete),
            other => Err(Error::invalid(format!("unknown graph kind `{other}`"))),
        }
    }
}

pub fn make_base_graph(kind: BaseKind, size: usize) -> Result<Graph> {
    if size == 0 {
        return Err(Error::invalid("graph size must be at least 1"));
    }
    let edges: Vec<(Vertex, Vertex)> = match kind {
        BaseKind::Path => (1..size).map(|i| (i, i + 1)).collect(),
        BaseKind::Cycle => {
            if size < 3 {
                return Err(Error::invalid("a cycle needs at least 3 vertices"));
            }
            let mut e: Vec<_> = (1..size).map(|i| (i, i + 1)).collect();
            e.push((1, size));
            e
        }
        BaseKind::Empty => Vec::new(),
        BaseKind::Complete => (1..=size)
            .flat_map(|a| (a + 1..=size).map(move |b| (a, b)))
            .collect(),
    };
    Graph::new(size, edges)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    make_base_graph(BaseKind::Path, n)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    make_base_graph(BaseKind::Cycle, n)
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    make_base_graph(BaseKind::Empty, n)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    make_base_graph(BaseKind::Complete, n)
}

/// The join `g1 + g2`: ids of `g1` are kept, ids of `g2` are shifted by
/// `g1.order()`, and every cross pair becomes an edge.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::invalid("join operands must be nonempty"));
    }
    let shift = g1.order();
    let mut edges: Vec<(Vertex, Vertex)> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(a, b)| (a + shift, b + shift)));
    for a in g1.vertices() {
        for b in g2.vertices() {
            edges.push((a, b + shift));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(shift + g2.order(), edges))
}

/// One vertex of `F_{m,n}` by its role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FanLabel {
    /// `v_i`, on the path part.
    V(usize),
    /// `w_i`, on the empty part.
    W(usize),
}

impl fmt::Display for FanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanLabel::V(i) => write!(f, "v{i}"),
            FanLabel::W(i) => write!(f, "w{i}"),
        }
    }
}

impl FromStr for FanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("bad fan label `{s}`"));
        let (ctor, rest): (fn(usize) -> FanLabel, &str) = if let Some(r) = s.strip_prefix('v') {
            (FanLabel::V, r)
        } else if let Some(r) = s.strip_prefix('w') {
            (FanLabel::W, r)
        } else {
            return Err(bad());
        };
        let i: usize = rest.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        Ok(ctor(i))
    }
}

/// Id convention for `F_{m,n}`: ids `1..=n` are `v_1..v_n` and ids
/// `n+1..=n+m` are `w_1..w_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FanLabeling {
    pub n: usize,
    pub m: usize,
}

impl FanLabeling {
    pub fn new(m: usize, n: usize) -> Self {
        FanLabeling { n, m }
    }

    pub fn order(&self) -> usize {
        self.n + self.m
    }

    pub fn v(&self, i: usize) -> Vertex {
        debug_assert!(i >= 1 && i <= self.n);
        i
    }

    pub fn w(&self, i: usize) -> Vertex {
        self.n + i
    }

    pub fn label(&self, id: Vertex) -> Option<FanLabel> {
        match id {
            0 => None,
            i if i <= self.n => Some(FanLabel::V(i)),
            i if i <= self.n + self.m => Some(FanLabel::W(i - self.n)),
            _ => None,
        }
    }

    pub fn id(&self, label: FanLabel) -> Option<Vertex> {
        match label {
            FanLabel::V(i) if i >= 1 && i <= self.n => Some(i),
            FanLabel::W(i) if i >= 1 && i <= self.m => Some(self.n + i),
            _ => None,
        }
    }
}

/// The generalized fan `F_{m,n} = E_m + P_n` with the v-first labeling.
pub fn fan_graph(m: usize, n: usize) -> Result<(Graph, FanLabeling)> {
    if m < 1 || n < 1 {
        return Err(Error::invalid(format!(
            "fan graph needs m >= 1 and n >= 1, got m={m}, n={n}"
        )));
    }
    let lab = FanLabeling::new(m, n);
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|j| (lab.v(j), lab.v(j + 1))).collect();
    for j in 1..=n {
        for i in 1..=m {
            edges.push((lab.v(j), lab.w(i)));
        }
    }
    edges.sort_unstable();
    Ok((Graph::from_canonical(lab.order(), edges), lab))
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.order() + 1];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &x in g.neighbors(u) {
                if !seen[x] {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// An induced subgraph relabeled onto dense ids.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[new_id - 1]` is the id the vertex had in the source graph.
    pub original: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn original_id(&self, new_id: Vertex) -> Vertex {
        self.original[new_id - 1]
    }
}

/// `g - s`: the subgraph induced on the vertices outside `s`. Surviving
/// vertices keep their relative order.
pub fn delete_vertices(g: &Graph, s: &[Vertex]) -> Result<InducedSubgraph> {
    let mut removed = vec![false; g.order() + 1];
    for &x in s {
        if !g.contains(x) {
            return Err(Error::invalid(format!(
                "vertex {x} out of range 1..={}",
                g.order()
            )));
        }
        removed[x] = true;
    }
    let mut new_id = vec![0; g.order() + 1];
    let mut original = Vec::new();
    for v in g.vertices().filter(|&v| !removed[v]) {
        original.push(v);
        new_id[v] = original.len();
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| !removed[a] && !removed[b])
        .map(|&(a, b)| (new_id[a], new_id[b]))
        .collect();
    Ok(InducedSubgraph {
        graph: Graph::from_canonical(original.len(), edges),
        original,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_graphs() {
        let p = path_graph(2).unwrap();
        assert_eq!((p.order(), p.edges()), (2, &[(1, 2)][..]));
        let e = empty_graph(3).unwrap();
        assert_eq!((e.order(), e.edge_count()), (3, 0));
        let c = cycle_graph(4).unwrap();
        assert_eq!(c.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
    }

    #[test]
    fn base_graph_size_errors() {
        assert!(make_base_graph(BaseKind::Path, 0).is_err());
        assert!(make_base_graph(BaseKind::Cycle, 2).is_err());
        assert!(make_base_graph(BaseKind::Cycle, 3).is_ok());
    }

    #[test]
    fn graph_rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        let g = Graph::new(3, [(3, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3)]);
        assert_eq!(g.neighbors(1), &[2, 3]);
    }

    #[test]
    fn join_examples() {
        let f22 = join(&empty_graph(2).unwrap(), &path_graph(2).unwrap()).unwrap();
        assert_eq!((f22.order(), f22.edge_count()), (4, 5));
        let k2 = join(&empty_graph(1).unwrap(), &path_graph(1).unwrap()).unwrap();
        assert_eq!(k2, complete_graph(2).unwrap());
        let k3 = join(&empty_graph(1).unwrap(), &path_graph(2).unwrap()).unwrap();
        assert_eq!(k3, complete_graph(3).unwrap());
    }

    #[test]
    fn fan_examples() {
        let (g, lab) = fan_graph(2, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 5));
        assert_eq!(lab.w(1), 3);
        assert_eq!(fan_graph(1, 1).unwrap().0, complete_graph(2).unwrap());
        let (g, _) = fan_graph(4, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (7, 14));
        assert!(fan_graph(0, 3).is_err());
        assert!(fan_graph(3, 0).is_err());
    }

    #[test]
    fn fan_is_relabeled_join() {
        // join puts E_m first; the fan labeling puts P_n first.
        for m in 1..5 {
            for n in 1..5 {
                let (fan, lab) = fan_graph(m, n).unwrap();
                let j = join(&empty_graph(m).unwrap(), &path_graph(n).unwrap()).unwrap();
                let relabel = |x: Vertex| if x <= m { lab.w(x) } else { lab.v(x - m) };
                let mapped =
                    Graph::new(j.order(), j.edges().iter().map(|&(a, b)| (relabel(a), relabel(b))))
                        .unwrap();
                assert_eq!(mapped, fan);
            }
        }
    }

    #[test]
    fn fan_labels() {
        let lab = FanLabeling::new(2, 3);
        assert_eq!(lab.label(3), Some(FanLabel::V(3)));
        assert_eq!(lab.label(4), Some(FanLabel::W(1)));
        assert_eq!(lab.label(6), None);
        assert_eq!("w2".parse::<FanLabel>().unwrap(), FanLabel::W(2));
        assert_eq!(lab.id(FanLabel::W(2)), Some(5));
        assert!("x1".parse::<FanLabel>().is_err());
        assert!("v0".parse::<FanLabel>().is_err());
        assert_eq!(FanLabel::V(7).to_string(), "v7");
    }

    #[test]
    fn components() {
        assert_eq!(
            connected_components(&empty_graph(3).unwrap()),
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            connected_components(&path_graph(4).unwrap()),
            vec![vec![1, 2, 3, 4]]
        );
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![1, 2], vec![3]]);
        let g = Graph::new(5, [(2, 5), (1, 3)]).unwrap();
        assert_eq!(
            connected_components(&g),
            vec![vec![1, 3], vec![2, 5], vec![4]]
        );
    }

    #[test]
    fn deletion() {
        let sub = delete_vertices(&path_graph(3).unwrap(), &[2]).unwrap();
        assert_eq!(sub.graph, empty_graph(2).unwrap());
        assert_eq!(sub.original, vec![1, 3]);

        let c = cycle_graph(5).unwrap();
        let same = delete_vertices(&c, &[]).unwrap();
        assert_eq!(same.graph, c);

        let (fan, lab) = fan_graph(2, 3).unwrap();
        let sub = delete_vertices(&fan, &[lab.w(1), lab.w(2)]).unwrap();
        assert_eq!(sub.graph, path_graph(3).unwrap());

        assert!(delete_vertices(&c, &[6]).is_err());
        assert!(delete_vertices(&c, &[0]).is_err());
    }
}
