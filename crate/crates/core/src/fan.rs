//! Explicit Hamiltonian cycles of `M_2(F_{m,n})`, the cut-set certificate for
//! `m > 2(n-1)`, and the lift of the constructions to joins `G_1 + G_2`.
//!
//! All multisets use the fan ids of [`FanLabeling`]: `v_j` is `j` and `w_i` is
//! `n + i`. Since the v's come first, `w_1` and the v's carry the same id for
//! every `m`, which lets the `m = 1` cycle be reused verbatim inside larger
//! fans.
//!
//! Regimes:
//!
//! * `n = 1`: `{w_1, w_1}` has degree one.
//! * `m = 1`: concatenate the fans `T_i` and their reversals, alternating.
//! * `m = 2(n-1)`: open the `m = 1` cycle between `{v_n, w_1}` and
//!   `{v_n, v_n}` and follow it with one segment `P_i` per `w_i`.
//! * `1 < m < 2(n-1)`: build the segments for `2(n-1)` and drop every
//!   `{w_i, w_j}` with `j > m`; the last segment first swaps `{w_m, w_{m+1}}`
//!   with `{w_m, w_1}` so that it still ends next to `{v_n, w_1}`.
//! * `m > 2(n-1)`: deleting every `{w_i, v_j}` isolates each `{w_i, w_j}`
//!   and leaves the `{v_i, v_j}` block connected, which is too many pieces.

use crate::error::{Error, Result};
use crate::graph::{fan_graph, join, FanLabeling, Graph, Vertex};
use crate::multiset::{
    binomial, build_big_graph, check_cycle_over_base, universe_size, Limits, MultisetVertex,
    TokenKind,
};
use crate::oracle::{check_cut_certificate, is_hamiltonian_path};

/// An ordered run of `M_2` vertices, either an open path segment or a cycle
/// whose closing edge joins the last element back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSeq {
    seq: Vec<MultisetVertex>,
    closed: bool,
}

impl CycleSeq {
    pub fn open(seq: Vec<MultisetVertex>) -> Result<Self> {
        Self::build(seq, false)
    }

    pub fn closed(seq: Vec<MultisetVertex>) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::invalid("a closed sequence needs at least 3 vertices"));
        }
        Self::build(seq, true)
    }

    fn build(seq: Vec<MultisetVertex>, closed: bool) -> Result<Self> {
        let mut sorted: Vec<&MultisetVertex> = seq.iter().collect();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("vertex {{{}}} repeats", w[0])));
        }
        Ok(CycleSeq { seq, closed })
    }

    pub fn vertices(&self) -> &[MultisetVertex] {
        &self.seq
    }

    pub fn into_vertices(self) -> Vec<MultisetVertex> {
        self.seq
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn first(&self) -> Option<&MultisetVertex> {
        self.seq.first()
    }

    pub fn last(&self) -> Option<&MultisetVertex> {
        self.seq.last()
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        CycleSeq {
            seq,
            closed: self.closed,
        }
    }
}

fn pair(a: Vertex, b: Vertex) -> MultisetVertex {
    MultisetVertex::pair(a, b)
}

/// Largest `m` for which `M_2(F_{m,n})` is Hamiltonian, i.e. `2(n-1)`.
pub fn max_hamiltonian_m(n: usize) -> usize {
    2 * n.saturating_sub(1)
}

/// True iff `M_2(F_{m,n})` is Hamiltonian: `n >= 2` and `1 <= m <= 2(n-1)`.
pub fn fan_m2_is_hamiltonian(m: usize, n: usize) -> bool {
    n >= 2 && m >= 1 && m <= max_hamiltonian_m(n)
}

/// `T_i = {v_i,w_1} {v_i,v_i} {v_i,v_{i+1}} ... {v_i,v_n}`.
pub fn path_t(i: usize, n: usize) -> Result<CycleSeq> {
    if i < 1 || i > n {
        return Err(Error::invalid(format!("T_i needs 1 <= i <= n, got i={i}, n={n}")));
    }
    let lab = FanLabeling::new(1, n);
    let mut seq = vec![pair(lab.v(i), lab.w(1))];
    seq.extend((i..=n).map(|j| pair(lab.v(i), lab.v(j))));
    CycleSeq::open(seq)
}

/// The Hamiltonian cycle of `M_2(F_{1,n})`.
///
/// For even `n`: `T_1 rev(T_2) T_3 ... T_{n-1} rev(T_n) {w_1,w_1}`.
/// For odd `n`: `rev(T_1) {w_1,w_1} T_2 rev(T_3) ... T_{n-1} rev(T_n)`.
pub fn cycle_case_m1(n: usize) -> Result<CycleSeq> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "the m = 1 construction needs n >= 2, got n={n}"
        )));
    }
    let w1 = FanLabeling::new(1, n).w(1);
    let ww = pair(w1, w1);
    let segment = |i: usize, forward: bool| -> Result<Vec<MultisetVertex>> {
        let t = path_t(i, n)?;
        Ok(if forward { t } else { t.reversed() }.into_vertices())
    };
    let mut seq = Vec::new();
    if n % 2 == 0 {
        for i in 1..=n {
            seq.extend(segment(i, i % 2 == 1)?);
        }
        seq.push(ww);
    } else {
        seq.extend(segment(1, false)?);
        seq.push(ww);
        for i in 2..=n {
            seq.extend(segment(i, i % 2 == 0)?);
        }
    }
    let cycle = CycleSeq::closed(seq)?;
    self_verify(1, n, &cycle)?;
    Ok(cycle)
}

/// `P_1`: the `m = 1` cycle opened at the edge `{v_n,w_1}`–`{v_n,v_n}`,
/// running from `{v_n,w_1}` to `{v_n,v_n}`.
pub fn path_p1(n: usize) -> Result<CycleSeq> {
    let c = cycle_case_m1(n)?;
    let lab = FanLabeling::new(1, n);
    let from = pair(lab.v(n), lab.w(1));
    let to = pair(lab.v(n), lab.v(n));
    let seq = c.vertices();
    let len = seq.len();
    let p = seq.iter().position(|x| *x == from);
    let q = seq.iter().position(|x| *x == to);
    let (Some(p), Some(q)) = (p, q) else {
        return Err(Error::integrity("the m = 1 cycle lacks {v_n,w_1} or {v_n,v_n}"));
    };
    // Walk away from `to`.
    let out: Vec<MultisetVertex> = if q == (p + len - 1) % len {
        (0..len).map(|s| seq[(p + s) % len].clone()).collect()
    } else if q == (p + 1) % len {
        (0..len).map(|s| seq[(p + len - s) % len].clone()).collect()
    } else {
        return Err(Error::integrity(
            "{v_n,w_1} and {v_n,v_n} are not consecutive in the m = 1 cycle",
        ));
    };
    CycleSeq::open(out)
}

/// The segment `P_i` for `2 <= i <= 2(n-1)`, with every `w` subscript
/// reduced into `1..=2(n-1)`.
///
/// For `i <= n-1`: `{w_i,v_n} {w_i,w_i} {w_i,v_{n-1}} {w_i,w_1}` followed by
/// `{w_i,v_j} {w_i,w_{i+j}}` for `j = n-2` down to `1`.
/// For `i >= n`: `{w_i,v_n} {w_i,w_i}` followed by `{w_i,v_j} {w_i,w_{i+j}}`
/// for `j = n-1` down to `1`.
pub fn path_p(i: usize, n: usize) -> Result<CycleSeq> {
    if n < 2 {
        return Err(Error::invalid(format!("P_i needs n >= 2, got n={n}")));
    }
    let m_eff = max_hamiltonian_m(n);
    if i < 2 || i > m_eff {
        return Err(Error::invalid(format!(
            "P_i needs 2 <= i <= {m_eff} (P_1 comes from the m = 1 cycle), got i={i}"
        )));
    }
    let lab = FanLabeling::new(m_eff, n);
    let reduce = |x: usize| (x - 1) % m_eff + 1;
    let wi = lab.w(i);
    let mut seq = vec![pair(wi, lab.v(n)), pair(wi, wi)];
    if i <= n - 1 {
        seq.push(pair(wi, lab.v(n - 1)));
        seq.push(pair(wi, lab.w(1)));
        for j in (1..=n - 2).rev() {
            if i + j > m_eff {
                return Err(Error::integrity(format!(
                    "subscript i+j={} of P_{i} exceeds {m_eff}",
                    i + j
                )));
            }
            seq.push(pair(wi, lab.v(j)));
            seq.push(pair(wi, lab.w(i + j)));
        }
    } else {
        for j in (1..=n - 1).rev() {
            seq.push(pair(wi, lab.v(j)));
            seq.push(pair(wi, lab.w(reduce(i + j))));
        }
    }
    let p = CycleSeq::open(seq)?;
    let last = pair(wi, lab.w(reduce(i + 1)));
    if p.last() != Some(&last) {
        return Err(Error::integrity(format!("P_{i} does not end at {{w_i,w_(i+1)}}")));
    }
    Ok(p)
}

/// The Hamiltonian cycle of `M_2(F_{2(n-1),n})`: `P_1 P_2 ... P_m`, closed by
/// the edge from `{w_m,w_1}` back to `{v_n,w_1}`.
pub fn cycle_case_mmax(n: usize) -> Result<CycleSeq> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "the m = 2(n-1) construction needs n >= 2, got n={n}"
        )));
    }
    let m = max_hamiltonian_m(n);
    let mut seq = path_p1(n)?.into_vertices();
    for i in 2..=m {
        seq.extend(path_p(i, n)?.into_vertices());
    }
    let cycle = CycleSeq::closed(seq)?;
    self_verify(m, n, &cycle)?;
    Ok(cycle)
}

/// Trims a segment `P_i` (built for `2(n-1)`) down to `F_{m,n}`.
///
/// Every `{w_i,w_j}` with `j > m` is dropped. For `i = m` the vertices
/// `{w_m,w_{m+1}}` and `{w_m,w_1}` first trade places, so the trimmed segment
/// ends at `{w_m,w_1}`.
pub fn prune_path(p: &CycleSeq, i: usize, m: usize, n: usize) -> Result<CycleSeq> {
    if n < 2 || !(2..=m).contains(&i) || m >= max_hamiltonian_m(n) {
        return Err(Error::invalid(format!(
            "pruning needs 2 <= i <= m < 2(n-1), got i={i}, m={m}, n={n}"
        )));
    }
    let lab = FanLabeling::new(max_hamiltonian_m(n), n);
    let wi = lab.w(i);
    let shape_ok = !p.is_closed()
        && p.first() == Some(&pair(wi, lab.v(n)))
        && p.vertices().get(1) == Some(&pair(wi, wi))
        && p.vertices().iter().all(|x| x.elems().contains(&wi));
    if !shape_ok {
        return Err(Error::integrity(format!("segment is not shaped like P_{i}")));
    }
    // The other member of {w_i, x}.
    let partner = |x: &MultisetVertex| {
        let e = x.elems();
        if e[0] == wi {
            e[1]
        } else {
            e[0]
        }
    };
    let mut seq = p.vertices().to_vec();
    if i == m {
        let a = pair(wi, lab.w(m + 1));
        let b = pair(wi, lab.w(1));
        let pa = seq.iter().position(|x| *x == a);
        let pb = seq.iter().position(|x| *x == b);
        let (Some(pa), Some(pb)) = (pa, pb) else {
            return Err(Error::integrity(format!(
                "P_{m} lacks {{w_m,w_(m+1)}} or {{w_m,w_1}}"
            )));
        };
        seq.swap(pa, pb);
    }
    seq.retain(|x| partner(x) <= lab.w(m));
    let out = CycleSeq::open(seq)?;
    if i < m && (out.first() != p.first() || out.last() != p.last()) {
        return Err(Error::integrity(format!("pruning changed the ends of P_{i}")));
    }
    Ok(out)
}

/// The Hamiltonian cycle of `M_2(F_{m,n})` for `1 < m < 2(n-1)`:
/// `P_1 P'_2 ... P'_m`, closed by `{w_m,w_1}`–`{v_n,w_1}`.
pub fn cycle_case_mid(m: usize, n: usize) -> Result<CycleSeq> {
    if n < 3 || m <= 1 || m >= max_hamiltonian_m(n) {
        return Err(Error::invalid(format!(
            "the middle construction needs 1 < m < 2(n-1), got m={m}, n={n}"
        )));
    }
    let mut seq = path_p1(n)?.into_vertices();
    for i in 2..=m {
        seq.extend(prune_path(&path_p(i, n)?, i, m, n)?.into_vertices());
    }
    let cycle = CycleSeq::closed(seq)?;
    self_verify(m, n, &cycle)?;
    Ok(cycle)
}

/// The constructive branch for any `(m, n)` in the Hamiltonian range.
pub fn fan_cycle(m: usize, n: usize) -> Result<CycleSeq> {
    if !fan_m2_is_hamiltonian(m, n) {
        return Err(Error::invalid(format!(
            "M_2(F_{{{m},{n}}}) has no Hamiltonian cycle to construct"
        )));
    }
    if m == 1 {
        cycle_case_m1(n)
    } else if m == max_hamiltonian_m(n) {
        cycle_case_mmax(n)
    } else {
        cycle_case_mid(m, n)
    }
}

fn self_verify(m: usize, n: usize, cycle: &CycleSeq) -> Result<()> {
    let (g, _) = fan_graph(m, n)?;
    check_cycle_over_base(&g, 2, TokenKind::Multiset, cycle.vertices()).map_err(|why| {
        Error::integrity(format!("cycle for M_2(F_{{{m},{n}}}) fails verification: {why}"))
    })
}

/// A cut set `S` of `M_2(F_{m,n})` with the number of components of
/// `M_2 - S` it must produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    /// All `{v_j, w_i}`, in lexicographic order.
    pub cut: Vec<MultisetVertex>,
    /// `C(m+1, 2) + 1`: one isolated vertex per `{w_i, w_j}`, plus the
    /// `{v_i, v_j}` block.
    pub predicted_components: usize,
}

pub fn cut_certificate(m: usize, n: usize) -> Result<CutCertificate> {
    if n < 2 || m <= max_hamiltonian_m(n) {
        return Err(Error::invalid(format!(
            "the cut-set certificate needs n >= 2 and m > 2(n-1), got m={m}, n={n}"
        )));
    }
    let lab = FanLabeling::new(m, n);
    let cut = (1..=n)
        .flat_map(|j| (1..=m).map(move |i| pair(lab.v(j), lab.w(i))))
        .collect();
    let predicted = binomial(m as u64 + 1, 2)
        .and_then(|c| usize::try_from(c).ok())
        .ok_or_else(|| Error::invalid("m too large"))?
        + 1;
    Ok(CutCertificate {
        cut,
        predicted_components: predicted,
    })
}

/// The `{w_i, w_j}` vertices (including `i = j`) of `M_2(F_{m,n})`.
pub fn w_pair_set(m: usize, n: usize) -> Vec<MultisetVertex> {
    let lab = FanLabeling::new(m, n);
    (1..=m)
        .flat_map(|i| (i..=m).map(move |j| pair(lab.w(i), lab.w(j))))
        .collect()
}

/// Outcome of deciding Hamiltonicity of `M_2(F_{m,n})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Hamiltonian(CycleSeq),
    /// `n = 1`: the witness has a single neighbor.
    NotHamiltonianDegreeOne { witness: MultisetVertex },
    /// `m > 2(n-1)`: deleting `cut` leaves `components > |cut|` pieces.
    NotHamiltonianCutSet {
        cut: Vec<MultisetVertex>,
        components: usize,
    },
}

impl Decision {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, Decision::Hamiltonian(_))
    }
}

pub fn decide_fan(m: usize, n: usize) -> Result<Decision> {
    if m < 1 || n < 1 {
        return Err(Error::invalid(format!(
            "fan parameters need m >= 1 and n >= 1, got m={m}, n={n}"
        )));
    }
    if n == 1 {
        let w1 = FanLabeling::new(m, n).w(1);
        return Ok(Decision::NotHamiltonianDegreeOne {
            witness: pair(w1, w1),
        });
    }
    if m > max_hamiltonian_m(n) {
        let cert = cut_certificate(m, n)?;
        confirm_certificate(m, n, &cert)?;
        return Ok(Decision::NotHamiltonianCutSet {
            cut: cert.cut,
            components: cert.predicted_components,
        });
    }
    Ok(Decision::Hamiltonian(fan_cycle(m, n)?))
}

/// Recounts the components of `M_2 - S` when `M_2` fits the default limits.
fn confirm_certificate(m: usize, n: usize, cert: &CutCertificate) -> Result<()> {
    let within = universe_size(m + n, 2, TokenKind::Multiset)
        .is_some_and(|s| s <= Limits::default().max_vertices);
    if !within {
        return Ok(());
    }
    let (g, _) = fan_graph(m, n)?;
    let big = build_big_graph(&g, 2, TokenKind::Multiset)?;
    let ids = big.ids_of(&cert.cut)?;
    let check = check_cut_certificate(&big.graph, &ids)?;
    if check.components != cert.predicted_components || !check.refutes_hamiltonicity {
        return Err(Error::integrity(format!(
            "M_2(F_{{{m},{n}}}) - S has {} components, expected {}",
            check.components, cert.predicted_components
        )));
    }
    Ok(())
}

/// A Hamiltonian cycle of `M_2(g1 + g2)`, given a Hamiltonian path of `g2`.
///
/// The path's vertices play `v_1..v_n` and `g1`'s vertices play `w_1..w_m`,
/// so `F_{m,n}` sits inside `g1 + g2` as a spanning subgraph and any cycle of
/// `M_2(F_{m,n})` is a cycle of `M_2(g1 + g2)`. The result uses the ids of
/// [`join`]: `g1` keeps its ids and `g2` is shifted by `g1.order()`.
pub fn join_cycle(g1: &Graph, g2: &Graph, ham_path: &[Vertex]) -> Result<CycleSeq> {
    let (m, n) = (g1.order(), g2.order());
    if let Err(why) = is_hamiltonian_path(g2, ham_path) {
        return Err(Error::invalid(format!(
            "the given sequence is not a Hamiltonian path of the second graph: {why}"
        )));
    }
    if n < 2 || m < 1 || m > max_hamiltonian_m(n) {
        return Err(Error::invalid(format!(
            "the join construction needs n >= 2 and 1 <= m <= 2(n-1), got m={m}, n={n}"
        )));
    }
    let fan = fan_cycle(m, n)?;
    let to_join = |x: Vertex| {
        if x <= n {
            m + ham_path[x - 1]
        } else {
            x - n
        }
    };
    let seq: Vec<MultisetVertex> = fan.vertices().iter().map(|v| v.map(to_join)).collect();
    let cycle = CycleSeq::closed(seq)?;
    let g = join(g1, g2)?;
    check_cycle_over_base(&g, 2, TokenKind::Multiset, cycle.vertices())
        .map_err(|why| Error::integrity(format!("lifted cycle fails verification: {why}")))?;
    Ok(cycle)
}
