//! Scans over small graphs recording whether `G` and `M_k(G)` are
//! Hamiltonian.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, Vertex};
use crate::graph6::emit_graph6;
use crate::multiset::{build_big_graph, TokenKind};
use crate::oracle::{find_hamiltonian_cycle_with_budget, TriState, DEFAULT_BUDGET};

/// Default largest order for [`enumerate_labeled_graphs`].
pub const DEFAULT_MAX_ORDER: usize = 6;

/// All labeled simple graphs on `[order]`, by increasing edge mask. Bit `b`
/// of the mask stands for the `b`-th pair in lexicographic order.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    order: usize,
    pairs: Vec<(Vertex, Vertex)>,
    next_mask: u64,
    end_mask: u64,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end_mask {
            let mask = self.next_mask;
            self.next_mask += 1;
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_canonical(self.order, edges);
            if !self.connected_only || connected_components(&g).len() == 1 {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_labeled_graphs(order: usize, connected_only: bool) -> Result<LabeledGraphs> {
    enumerate_labeled_graphs_capped(order, connected_only, DEFAULT_MAX_ORDER)
}

pub fn enumerate_labeled_graphs_capped(
    order: usize,
    connected_only: bool,
    max_order: usize,
) -> Result<LabeledGraphs> {
    if order < 1 || order > max_order {
        return Err(Error::invalid(format!(
            "labeled enumeration needs 1 <= order <= {max_order}, got {order}"
        )));
    }
    let pairs: Vec<_> = (1..=order)
        .flat_map(|a| (a + 1..=order).map(move |b| (a, b)))
        .collect();
    if pairs.len() >= 64 {
        return Err(Error::invalid(format!("order {order} has too many edge masks")));
    }
    Ok(LabeledGraphs {
        order,
        end_mask: 1u64 << pairs.len(),
        pairs,
        next_mask: 0,
        connected_only,
    })
}

/// Cheap isomorphism-invariant key: the sorted degree sequence and the sorted
/// list of endpoint-degree pairs. Isomorphic graphs share a key, but distinct
/// classes may collide.
pub fn approx_iso_key(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (g.degree(a), g.degree(b));
            (x.min(y), x.max(y))
        })
        .collect();
    degrees.sort_unstable();
    pairs.sort_unstable();
    (degrees, pairs)
}

/// Keeps the first graph of each [`approx_iso_key`] class.
pub fn dedup_approx(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert((g.order(), approx_iso_key(g))))
        .collect()
}

/// One line of scan output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    /// graph6 encoding of `G`.
    pub graph: String,
    pub order: usize,
    pub k: usize,
    pub ham_g: TriState,
    pub ham_mk: TriState,
    pub elapsed_ms: u64,
    pub budget_hit: bool,
}

impl SearchRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub budget: u64,
    /// Record wall-clock time. Off by default so that output is reproducible;
    /// `elapsed_ms` is then written as 0.
    pub timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            budget: DEFAULT_BUDGET,
            timing: false,
        }
    }
}

pub fn scan_one(g: &Graph, k: usize, opts: &ScanOptions) -> Result<SearchRecord> {
    let started = Instant::now();
    let big = build_big_graph(g, k, TokenKind::Multiset)?;
    let ham_g = find_hamiltonian_cycle_with_budget(g, opts.budget).tri_state();
    let ham_mk = find_hamiltonian_cycle_with_budget(&big.graph, opts.budget).tri_state();
    let elapsed_ms = if opts.timing {
        started.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(SearchRecord {
        graph: emit_graph6(g)?,
        order: g.order(),
        k,
        ham_g,
        ham_mk,
        elapsed_ms,
        budget_hit: ham_g == TriState::Inconclusive || ham_mk == TriState::Inconclusive,
    })
}

/// Lazily scans `graphs` in order.
pub fn scan<'a>(
    graphs: impl IntoIterator<Item = Graph> + 'a,
    k: usize,
    opts: ScanOptions,
) -> impl Iterator<Item = Result<SearchRecord>> + 'a {
    graphs.into_iter().map(move |g| scan_one(&g, k, &opts))
}

/// Scans on `jobs` worker threads; output order equals input order.
pub fn scan_parallel(
    graphs: Vec<Graph>,
    k: usize,
    opts: ScanOptions,
    jobs: usize,
) -> Result<Vec<SearchRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
    pool.install(|| graphs.par_iter().map(|g| scan_one(g, k, &opts)).collect())
}

/// One JSON object per line.
pub fn write_jsonl(records: &[SearchRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_json_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::fan_m2_is_hamiltonian;
    use crate::graph::{cycle_graph, fan_graph, path_graph};
    use crate::graph6::parse_graph6;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(2, true).unwrap().count(), 1);
        let conn3: Vec<_> = enumerate_labeled_graphs(3, true).unwrap().collect();
        assert_eq!(conn3.len(), 4);
        assert_eq!(conn3.iter().filter(|g| g.edge_count() == 2).count(), 3);
        assert_eq!(enumerate_labeled_graphs(4, false).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(1, false).unwrap().count(), 1);
        assert!(enumerate_labeled_graphs(7, false).is_err());
        assert!(enumerate_labeled_graphs(0, false).is_err());
        assert_eq!(enumerate_labeled_graphs_capped(7, false, 7).unwrap().end_mask, 1 << 21);
    }

    #[test]
    fn enumeration_order() {
        let gs: Vec<_> = enumerate_labeled_graphs(3, false).unwrap().collect();
        assert_eq!(gs[0].edge_count(), 0);
        assert_eq!(gs[1].edges(), &[(1, 2)]);
        assert_eq!(gs[2].edges(), &[(1, 3)]);
        assert_eq!(gs[7].edge_count(), 3);
    }

    #[test]
    fn record_examples() {
        let opts = ScanOptions::default();
        let r = scan_one(&path_graph(2).unwrap(), 2, &opts).unwrap();
        assert_eq!((r.ham_g, r.ham_mk), (TriState::No, TriState::No));
        let r = scan_one(&fan_graph(2, 2).unwrap().0, 2, &opts).unwrap();
        assert_eq!((r.ham_g, r.ham_mk), (TriState::Yes, TriState::Yes));
        let r = scan_one(&fan_graph(4, 3).unwrap().0, 2, &opts).unwrap();
        assert_eq!((r.ham_g, r.ham_mk), (TriState::No, TriState::Yes));
        assert_eq!(parse_graph6(&r.graph).unwrap(), fan_graph(4, 3).unwrap().0);
        assert!(!r.budget_hit);
    }

    #[test]
    fn budget_exhaustion_is_recorded() {
        let opts = ScanOptions {
            budget: 2,
            timing: false,
        };
        let r = scan_one(&cycle_graph(6).unwrap(), 2, &opts).unwrap();
        assert_eq!(r.ham_mk, TriState::Inconclusive);
        assert!(r.budget_hit);
    }

    #[test]
    fn json_fields_in_order() {
        let r = scan_one(&path_graph(2).unwrap(), 2, &ScanOptions::default()).unwrap();
        assert_eq!(
            r.to_json_line(),
            r#"{"graph":"A_","order":2,"k":2,"ham_g":"no","ham_mk":"no","elapsed_ms":0,"budget_hit":false}"#
        );
    }

    #[test]
    fn fan_scan_agrees_with_decide_fan() {
        let fans: Vec<_> = (1..=4)
            .flat_map(|m| (1..=3).map(move |n| (m, n)))
            .filter(|&(m, n)| m + n >= 2)
            .collect();
        for (m, n) in fans {
            let (g, _) = fan_graph(m, n).unwrap();
            let r = scan_one(&g, 2, &ScanOptions::default()).unwrap();
            let expected = if fan_m2_is_hamiltonian(m, n) {
                TriState::Yes
            } else {
                TriState::No
            };
            assert_eq!(r.ham_mk, expected, "F_{{{m},{n}}}");
        }
    }

    #[test]
    fn parallel_keeps_input_order() {
        let gs: Vec<_> = enumerate_labeled_graphs(4, false).unwrap().collect();
        let seq: Vec<_> = scan(gs.clone(), 2, ScanOptions::default())
            .collect::<Result<_>>()
            .unwrap();
        let par = scan_parallel(gs, 2, ScanOptions::default(), 4).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn dedup_keeps_one_per_key() {
        let gs: Vec<_> = enumerate_labeled_graphs(3, false).unwrap().collect();
        // empty, one edge, path, triangle
        assert_eq!(dedup_approx(gs).len(), 4);
    }
}
