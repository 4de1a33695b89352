//! k-multisets of vertex ids and the graphs `M_k(G)` and `F_k(G)` built on
//! them.
//!
//! Two k-multisets are adjacent when their multiset symmetric difference is
//! exactly `{x, y}` with `xy` an edge of the base graph. Equivalently, one is
//! obtained from the other by replacing a single copy of `x` with `y`; the
//! builder enumerates these replacements instead of testing all pairs.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A k-multiset of vertex ids, stored sorted nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultisetVertex(Vec<Vertex>);

impl MultisetVertex {
    /// Sorts `elems` into canonical form. Rejects empty input and id 0.
    pub fn new(mut elems: Vec<Vertex>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::invalid("a multiset vertex needs at least one element"));
        }
        if elems.contains(&0) {
            return Err(Error::invalid("vertex ids are 1-based"));
        }
        elems.sort_unstable();
        Ok(MultisetVertex(elems))
    }

    /// The unordered pair `{a, b}` (possibly `a == b`).
    pub fn pair(a: Vertex, b: Vertex) -> Self {
        MultisetVertex(vec![a.min(b), a.max(b)])
    }

    pub fn elems(&self) -> &[Vertex] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// True when no element repeats, i.e. this is also a vertex of `F_k`.
    pub fn is_set(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn multiplicity(&self, x: Vertex) -> usize {
        self.0.iter().filter(|&&e| e == x).count()
    }

    pub fn max_elem(&self) -> Vertex {
        *self.0.last().expect("nonempty by construction")
    }

    /// Applies `f` to every element and re-canonicalizes.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        let mut v: Vec<_> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        MultisetVertex(v)
    }
}

impl fmt::Display for MultisetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Which vertex universe to use: all k-multisets (`M_k`) or only the
/// k-subsets (`F_k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Multiset,
    Subset,
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of vertices of `M_k` / `F_k` over a base of order `n`.
pub fn universe_size(n: usize, k: usize, kind: TokenKind) -> Option<u64> {
    match kind {
        TokenKind::Multiset => binomial((n + k).checked_sub(1)? as u64, k as u64),
        TokenKind::Subset => binomial(n as u64, k as u64),
    }
}

fn check_kind(n: usize, k: usize, kind: TokenKind) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("base order must be at least 1"));
    }
    if k == 0 {
        return Err(Error::invalid("token count k must be at least 1"));
    }
    if kind == TokenKind::Subset && k > n - 1 {
        return Err(Error::invalid(format!(
            "k-subsets need 1 <= k <= n-1, got k={k}, n={n}"
        )));
    }
    Ok(())
}

/// All k-multisets (or k-subsets) of `[n]` in lexicographic order.
pub fn enumerate_k_multisets(n: usize, k: usize, kind: TokenKind) -> Result<Vec<MultisetVertex>> {
    check_kind(n, k, kind)?;
    let mut cur: Vec<Vertex> = match kind {
        TokenKind::Multiset => vec![1; k],
        TokenKind::Subset => (1..=k).collect(),
    };
    // Largest value allowed at position i.
    let cap = |i: usize| match kind {
        TokenKind::Multiset => n,
        TokenKind::Subset => n - (k - 1 - i),
    };
    let mut out = Vec::new();
    loop {
        out.push(MultisetVertex(cur.clone()));
        let Some(i) = (0..k).rev().find(|&i| cur[i] < cap(i)) else {
            return Ok(out);
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = match kind {
                TokenKind::Multiset => cur[j - 1],
                TokenKind::Subset => cur[j - 1] + 1,
            };
        }
    }
}

/// Per-element `|mult_a(x) - mult_b(x)|` copies of each `x`, sorted.
pub fn multiset_sym_diff(a: &MultisetVertex, b: &MultisetVertex) -> Result<Vec<Vertex>> {
    if a.k() != b.k() {
        return Err(Error::invalid(format!(
            "symmetric difference of multisets of different size ({} vs {})",
            a.k(),
            b.k()
        )));
    }
    let (x, y) = (a.elems(), b.elems());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < x.len() || j < y.len() {
        match (x.get(i), y.get(j)) {
            (Some(p), Some(q)) if p == q => {
                i += 1;
                j += 1;
            }
            (Some(p), Some(q)) if p < q => {
                out.push(*p);
                i += 1;
            }
            (Some(_), Some(q)) => {
                out.push(*q);
                j += 1;
            }
            (Some(p), None) => {
                out.push(*p);
                i += 1;
            }
            (None, Some(q)) => {
                out.push(*q);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(out)
}

/// The adjacency rule of `M_k(G)` / `F_k(G)`, applied directly.
pub fn adjacent_in(base: &Graph, a: &MultisetVertex, b: &MultisetVertex) -> bool {
    match multiset_sym_diff(a, b).as_deref() {
        Ok([x, y]) => base.has_edge(*x, *y),
        _ => false,
    }
}

/// Guardrails for [`build_big_graph_with_limits`].
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_k: usize,
    pub max_vertices: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_k: 6,
            max_vertices: 1_000_000,
        }
    }
}

/// `M_k(G)` or `F_k(G)` with its dense-id labeling.
#[derive(Clone, Debug)]
pub struct LabeledBigGraph {
    /// The graph on dense ids `1..=N`, in lexicographic order of the multisets.
    pub graph: Graph,
    pub kind: TokenKind,
    pub k: usize,
    pub base_order: usize,
    vertices: Vec<MultisetVertex>,
    index: HashMap<MultisetVertex, Vertex>,
}

impl LabeledBigGraph {
    /// The multiset at dense id `id`.
    pub fn vertex(&self, id: Vertex) -> &MultisetVertex {
        &self.vertices[id - 1]
    }

    pub fn vertices(&self) -> &[MultisetVertex] {
        &self.vertices
    }

    pub fn id_of(&self, v: &MultisetVertex) -> Option<Vertex> {
        self.index.get(v).copied()
    }

    /// Maps a sequence of multisets to dense ids, failing on the first
    /// multiset that is not a vertex.
    pub fn ids_of<'a>(
        &self,
        seq: impl IntoIterator<Item = &'a MultisetVertex>,
    ) -> Result<Vec<Vertex>> {
        seq.into_iter()
            .map(|v| {
                self.id_of(v)
                    .ok_or_else(|| Error::invalid(format!("{{{v}}} is not a vertex of this graph")))
            })
            .collect()
    }
}

pub fn build_big_graph(g: &Graph, k: usize, kind: TokenKind) -> Result<LabeledBigGraph> {
    build_big_graph_with_limits(g, k, kind, Limits::default())
}

pub fn build_big_graph_with_limits(
    g: &Graph,
    k: usize,
    kind: TokenKind,
    limits: Limits,
) -> Result<LabeledBigGraph> {
    if g.order() < 2 {
        return Err(Error::invalid("base graph must have at least 2 vertices"));
    }
    check_kind(g.order(), k, kind)?;
    if k > limits.max_k {
        return Err(Error::LimitExceeded(format!(
            "k={k} exceeds the cap of {}",
            limits.max_k
        )));
    }
    match universe_size(g.order(), k, kind) {
        Some(size) if size <= limits.max_vertices => {}
        _ => {
            return Err(Error::LimitExceeded(format!(
                "more than {} vertices for n={}, k={k}",
                limits.max_vertices,
                g.order()
            )))
        }
    }

    let vertices = enumerate_k_multisets(g.order(), k, kind)?;
    let index: HashMap<MultisetVertex, Vertex> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i + 1))
        .collect();

    let mut edges = Vec::new();
    let mut scratch = Vec::with_capacity(k);
    for (i, a) in vertices.iter().enumerate() {
        let id_a = i + 1;
        let elems = a.elems();
        for (pos, &x) in elems.iter().enumerate() {
            if pos > 0 && elems[pos - 1] == x {
                continue;
            }
            for &y in g.neighbors(x) {
                if kind == TokenKind::Subset && elems.binary_search(&y).is_ok() {
                    continue;
                }
                scratch.clear();
                scratch.extend_from_slice(elems);
                scratch[pos] = y;
                scratch.sort_unstable();
                let id_b = index[scratch.as_slice()];
                if id_a < id_b {
                    edges.push((id_a, id_b));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    Ok(LabeledBigGraph {
        graph: Graph::from_canonical(vertices.len(), edges),
        kind,
        k,
        base_order: g.order(),
        vertices,
        index,
    })
}

impl std::borrow::Borrow<[Vertex]> for MultisetVertex {
    fn borrow(&self) -> &[Vertex] {
        &self.0
    }
}

/// Checks that `seq` is a Hamiltonian cycle of `M_k(base)` (or `F_k(base)`)
/// without building the big graph: size, membership, distinctness and the
/// symmetric-difference rule on every consecutive pair including the
/// closing one.
pub fn check_cycle_over_base(
    base: &Graph,
    k: usize,
    kind: TokenKind,
    seq: &[MultisetVertex],
) -> std::result::Result<(), String> {
    let expected = universe_size(base.order(), k, kind).ok_or("universe size overflows")?;
    if seq.len() as u64 != expected {
        return Err(format!("length {} but the graph has {expected} vertices", seq.len()));
    }
    if seq.len() < 3 {
        return Err("a cycle needs at least 3 vertices".into());
    }
    let mut seen = std::collections::HashSet::with_capacity(seq.len());
    for (pos, v) in seq.iter().enumerate() {
        if v.k() != k || v.max_elem() > base.order() || (kind == TokenKind::Subset && !v.is_set()) {
            return Err(format!("position {pos}: {{{v}}} is not a vertex"));
        }
        if !seen.insert(v) {
            return Err(format!("position {pos}: {{{v}}} repeats"));
        }
    }
    for pos in 0..seq.len() {
        let (a, b) = (&seq[pos], &seq[(pos + 1) % seq.len()]);
        if !adjacent_in(base, a, b) {
            return Err(format!("position {pos}: {{{a}}} and {{{b}}} are not adjacent"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, fan_graph, path_graph};

    fn ms(v: &[Vertex]) -> MultisetVertex {
        MultisetVertex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let l = enumerate_k_multisets(2, 2, TokenKind::Multiset).unwrap();
        assert_eq!(l, vec![ms(&[1, 1]), ms(&[1, 2]), ms(&[2, 2])]);
        assert_eq!(enumerate_k_multisets(4, 2, TokenKind::Multiset).unwrap().len(), 10);
        assert_eq!(enumerate_k_multisets(4, 2, TokenKind::Subset).unwrap().len(), 6);
        assert!(enumerate_k_multisets(4, 4, TokenKind::Subset).is_err());
        assert!(enumerate_k_multisets(4, 0, TokenKind::Multiset).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        for kind in [TokenKind::Multiset, TokenKind::Subset] {
            let l = enumerate_k_multisets(5, 3, kind).unwrap();
            assert!(l.windows(2).all(|w| w[0] < w[1]));
            assert!(l.iter().all(|v| kind == TokenKind::Multiset || v.is_set()));
        }
    }

    #[test]
    fn sym_diff_examples() {
        assert_eq!(multiset_sym_diff(&ms(&[1, 2]), &ms(&[1, 3])).unwrap(), vec![2, 3]);
        assert_eq!(multiset_sym_diff(&ms(&[1, 1]), &ms(&[1, 2])).unwrap(), vec![1, 2]);
        assert_eq!(
            multiset_sym_diff(&ms(&[1, 1]), &ms(&[2, 2])).unwrap(),
            vec![1, 1, 2, 2]
        );
        assert!(multiset_sym_diff(&ms(&[1]), &ms(&[1, 2])).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(35, 2), Some(595));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(60, 30), Some(118264581564861424));
    }

    #[test]
    fn m2_of_p2_is_a_path() {
        let big = build_big_graph(&path_graph(2).unwrap(), 2, TokenKind::Multiset).unwrap();
        assert_eq!(big.graph.order(), 3);
        assert_eq!(big.graph.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(big.vertex(2), &ms(&[1, 2]));
    }

    #[test]
    fn f2_of_p3() {
        let big = build_big_graph(&path_graph(3).unwrap(), 2, TokenKind::Subset).unwrap();
        let names: Vec<_> = big.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["1,2", "1,3", "2,3"]);
        assert_eq!(big.graph.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn m2_of_fan22_order() {
        let (g, _) = fan_graph(2, 2).unwrap();
        let big = build_big_graph(&g, 2, TokenKind::Multiset).unwrap();
        assert_eq!(big.graph.order(), 10);
        assert_eq!(big.id_of(&ms(&[3, 3])), Some(8));
    }

    #[test]
    fn builder_rejects_out_of_domain() {
        let g = path_graph(3).unwrap();
        assert!(build_big_graph(&path_graph(1).unwrap(), 1, TokenKind::Multiset).is_err());
        assert!(build_big_graph(&g, 3, TokenKind::Subset).is_err());
        assert!(matches!(
            build_big_graph(&g, 7, TokenKind::Multiset),
            Err(Error::LimitExceeded(_))
        ));
        let tight = Limits {
            max_k: 6,
            max_vertices: 5,
        };
        assert!(matches!(
            build_big_graph_with_limits(&g, 2, TokenKind::Multiset, tight),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn replacement_view_matches_pairwise_rule() {
        for g in [
            cycle_graph(5).unwrap(),
            fan_graph(2, 3).unwrap().0,
            complete_graph(4).unwrap(),
        ] {
            for k in 1..=3 {
                for kind in [TokenKind::Multiset, TokenKind::Subset] {
                    if kind == TokenKind::Subset && k >= g.order() {
                        continue;
                    }
                    let big = build_big_graph(&g, k, kind).unwrap();
                    let vs = big.vertices();
                    let mut brute = Vec::new();
                    for i in 0..vs.len() {
                        for j in i + 1..vs.len() {
                            if adjacent_in(&g, &vs[i], &vs[j]) {
                                brute.push((i + 1, j + 1));
                            }
                        }
                    }
                    assert_eq!(big.graph.edges(), brute.as_slice());
                }
            }
        }
    }

    #[test]
    fn cycle_check_over_base() {
        // M_2(K_3): a 6-cycle through 11,12,22,23,33,13.
        let g = complete_graph(3).unwrap();
        let seq = [ms(&[1, 1]), ms(&[1, 2]), ms(&[2, 2]), ms(&[2, 3]), ms(&[3, 3]), ms(&[1, 3])];
        assert_eq!(check_cycle_over_base(&g, 2, TokenKind::Multiset, &seq), Ok(()));
        let mut bad = seq.to_vec();
        bad.swap(0, 1);
        assert!(check_cycle_over_base(&g, 2, TokenKind::Multiset, &bad).is_err());
        assert!(check_cycle_over_base(&g, 2, TokenKind::Multiset, &seq[..5]).is_err());
    }
}
