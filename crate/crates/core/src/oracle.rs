//! Ground truth for any [`Graph`]: cycle and path verification, exhaustive
//! Hamiltonicity search and cut-set checking.
//!
//! Nothing here knows about fans or multisets. The constructions in
//! [`crate::fan`] are checked against these routines, not the other way
//! round.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, delete_vertices, Graph, Vertex};

/// Default cap on search-tree expansions.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Why a sequence is not a Hamiltonian cycle (or path).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    TooShort { len: usize },
    OutOfRange { position: usize, vertex: Vertex },
    Repeated { position: usize, vertex: Vertex },
    /// The pair starting at `position` is not an edge. For a cycle the
    /// closing pair has `position == len - 1`.
    MissingEdge { position: usize, a: Vertex, b: Vertex },
    Missing { covered: usize, order: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::TooShort { len } => write!(f, "sequence of length {len} is too short"),
            Rejection::OutOfRange { position, vertex } => {
                write!(f, "position {position}: vertex {vertex} does not exist")
            }
            Rejection::Repeated { position, vertex } => {
                write!(f, "position {position}: vertex {vertex} repeats")
            }
            Rejection::MissingEdge { position, a, b } => {
                write!(f, "position {position}: no edge between {a} and {b}")
            }
            Rejection::Missing { covered, order } => {
                write!(f, "covers {covered} of {order} vertices")
            }
        }
    }
}

/// Checks `seq` vertex by vertex and reports the first violation.
fn check_walk(g: &Graph, seq: &[Vertex], closed: bool) -> Result<(), Rejection> {
    let min_len = if closed { 3 } else { 1 };
    if seq.len() < min_len {
        return Err(Rejection::TooShort { len: seq.len() });
    }
    let mut seen = vec![false; g.order() + 1];
    for (position, &vertex) in seq.iter().enumerate() {
        if !g.contains(vertex) {
            return Err(Rejection::OutOfRange { position, vertex });
        }
        if seen[vertex] {
            return Err(Rejection::Repeated { position, vertex });
        }
        seen[vertex] = true;
        if position > 0 && !g.has_edge(seq[position - 1], vertex) {
            return Err(Rejection::MissingEdge {
                position: position - 1,
                a: seq[position - 1],
                b: vertex,
            });
        }
    }
    if seq.len() != g.order() {
        return Err(Rejection::Missing {
            covered: seq.len(),
            order: g.order(),
        });
    }
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    if closed && !g.has_edge(last, first) {
        return Err(Rejection::MissingEdge {
            position: seq.len() - 1,
            a: last,
            b: first,
        });
    }
    Ok(())
}

pub fn is_hamiltonian_cycle(g: &Graph, seq: &[Vertex]) -> Result<(), Rejection> {
    check_walk(g, seq, true)
}

pub fn is_hamiltonian_path(g: &Graph, seq: &[Vertex]) -> Result<(), Rejection> {
    check_walk(g, seq, false)
}

/// Three-valued answer of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<Vertex>),
    NoneExists,
    /// The expansion budget ran out before the search finished.
    Inconclusive,
}

impl SearchOutcome {
    pub fn tri_state(&self) -> TriState {
        match self {
            SearchOutcome::Found(_) => TriState::Yes,
            SearchOutcome::NoneExists => TriState::No,
            SearchOutcome::Inconclusive => TriState::Inconclusive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Inconclusive,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'g> {
    g: &'g Graph,
    closed: bool,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    expansions: u64,
    budget: u64,
    // scratch for the reachability test
    mark: Vec<bool>,
    stack: Vec<Vertex>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, closed: bool, budget: u64) -> Self {
        let n = g.order() + 1;
        Search {
            g,
            closed,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            expansions: 0,
            budget,
            mark: vec![false; n],
            stack: Vec::with_capacity(n),
        }
    }

    fn push(&mut self, v: Vertex) {
        self.visited[v] = true;
        self.path.push(v);
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("nonempty path");
        self.visited[v] = false;
    }

    fn head(&self) -> Vertex {
        *self.path.last().expect("nonempty path")
    }

    fn start(&self) -> Vertex {
        self.path[0]
    }

    /// Prunes states that cannot be completed. On success returns the one
    /// neighbor of the head the search is forced to take next, if any.
    ///
    /// An unvisited vertex with exactly as many usable neighbors as it needs
    /// (two on a cycle, one on a path) must use all of them. If one is the
    /// head it has to come next; if one is the cycle's start it has to come
    /// last; a path vertex with a single usable neighbor other than the head
    /// has to be the far end.
    fn feasible(&mut self) -> Option<Option<Vertex>> {
        let g = self.g;
        let head = self.head();
        let start = self.start();
        let remaining = g.order() - self.path.len();
        // At the root the start is also the head and has both slots free, so
        // nothing is forced yet.
        let root = self.path.len() == 1;
        let start_open = self.closed && !root;
        let need = if self.closed { 2 } else { 1 };

        let mut forced_next = None;
        let mut pinned_last = 0;
        for u in g.vertices().filter(|&u| !self.visited[u]) {
            let mut count = 0;
            let mut touches_head = false;
            let mut touches_start = false;
            for &x in g.neighbors(u) {
                if !self.visited[x] {
                    count += 1;
                } else if x == head {
                    count += 1;
                    touches_head = true;
                } else if start_open && x == start {
                    count += 1;
                    touches_start = true;
                }
            }
            if count < need {
                return None;
            }
            if remaining == 1 || count > need || (self.closed && root) {
                continue;
            }
            if self.closed {
                match (touches_head, touches_start) {
                    (true, true) => return None,
                    (true, false) => {
                        if forced_next.replace(u).is_some() {
                            return None;
                        }
                    }
                    (false, true) => pinned_last += 1,
                    (false, false) => {}
                }
            } else {
                if touches_head {
                    return None;
                }
                pinned_last += 1;
            }
        }
        if pinned_last > 1 {
            return None;
        }

        // Every unvisited vertex must be reachable from the head through
        // unvisited vertices.
        self.mark.iter_mut().for_each(|m| *m = false);
        self.stack.clear();
        self.stack.push(head);
        self.mark[head] = true;
        let mut reached = 0;
        while let Some(u) = self.stack.pop() {
            for &x in g.neighbors(u) {
                if !self.visited[x] && !self.mark[x] {
                    self.mark[x] = true;
                    reached += 1;
                    self.stack.push(x);
                }
            }
        }
        if reached < remaining {
            return None;
        }
        Some(forced_next)
    }

    fn extend(&mut self) -> Step {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Step::OutOfBudget;
        }
        let head = self.head();
        if self.path.len() == self.g.order() {
            return if !self.closed || self.g.has_edge(head, self.start()) {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        let forced = match self.feasible() {
            None => return Step::Exhausted,
            Some(f) => f,
        };
        let g = self.g;
        let candidates: Vec<Vertex> = match forced {
            Some(u) => vec![u],
            None => g
                .neighbors(head)
                .iter()
                .copied()
                .filter(|&x| !self.visited[x])
                .collect(),
        };
        for x in candidates {
            self.push(x);
            match self.extend() {
                Step::Exhausted => self.pop(),
                other => return other,
            }
        }
        Step::Exhausted
    }
}

pub fn find_hamiltonian_cycle(g: &Graph) -> SearchOutcome {
    find_hamiltonian_cycle_with_budget(g, DEFAULT_BUDGET)
}

/// Backtracking anchored at vertex 1, neighbors tried in ascending order.
pub fn find_hamiltonian_cycle_with_budget(g: &Graph, budget: u64) -> SearchOutcome {
    if g.order() < 3 || g.vertices().any(|v| g.degree(v) < 2) {
        return SearchOutcome::NoneExists;
    }
    let mut search = Search::new(g, true, budget);
    search.push(1);
    match search.extend() {
        Step::Found => SearchOutcome::Found(search.path),
        Step::Exhausted => SearchOutcome::NoneExists,
        Step::OutOfBudget => SearchOutcome::Inconclusive,
    }
}

pub fn find_hamiltonian_path(g: &Graph) -> SearchOutcome {
    find_hamiltonian_path_with_budget(g, DEFAULT_BUDGET)
}

/// Tries each start vertex in ascending order; the budget is shared.
pub fn find_hamiltonian_path_with_budget(g: &Graph, budget: u64) -> SearchOutcome {
    if g.order() == 0 {
        return SearchOutcome::NoneExists;
    }
    if g.order() > 1 && g.vertices().any(|v| g.degree(v) == 0) {
        return SearchOutcome::NoneExists;
    }
    let mut search = Search::new(g, false, budget);
    for start in g.vertices() {
        search.push(start);
        match search.extend() {
            Step::Found => return SearchOutcome::Found(search.path),
            Step::OutOfBudget => return SearchOutcome::Inconclusive,
            Step::Exhausted => search.pop(),
        }
    }
    SearchOutcome::NoneExists
}

/// Result of counting the components left after deleting a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CutCheck {
    pub components: usize,
    pub cut_size: usize,
    /// More components than deleted vertices: no Hamiltonian cycle exists.
    pub refutes_hamiltonicity: bool,
}

pub fn check_cut_certificate(g: &Graph, s: &[Vertex]) -> Result<CutCheck> {
    if s.is_empty() {
        return Err(Error::invalid("the cut set must be nonempty"));
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    let rest = delete_vertices(g, &set)?;
    let components = connected_components(&rest.graph).len();
    Ok(CutCheck {
        components,
        cut_size: set.len(),
        refutes_hamiltonicity: components > set.len(),
    })
}
