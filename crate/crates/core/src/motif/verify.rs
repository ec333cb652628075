//! Definitional checks, written directly from the motif definitions and kept
//! independent of the search engine so they can judge its output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Coloring, Edge};

use super::{MotifKind, MotifSpec, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexRole {
    /// Lies in at least two edges of the witness.
    Cross,
    /// Lies in exactly one edge.
    Free,
}

/// Checks `w` against the structural definition of `m` and, when a coloring
/// is given, that its edges carry pairwise distinct colors.
///
/// The witness is judged as an `m`, not by its own `kind` tag, so a linear
/// path can be checked as a loose or Berge path.
pub fn verify_witness(w: &Witness, m: MotifSpec, coloring: Option<&Coloring>) -> Result<bool> {
    if w.k != m.k || w.edges.len() != m.k as usize {
        return Err(Error::invalid(format!(
            "witness has k={} with {} edges, motif expects k={}",
            w.k,
            w.edges.len(),
            m.k
        )));
    }
    if let Some(c) = coloring {
        let host = c.host();
        for e in &w.edges {
            host.check_edge(e)?;
        }
        let colors: Vec<u32> = w.edges.iter().map(|e| c.color_of(e)).collect::<Result<_>>()?;
        if !w.colors.is_empty() && w.colors != colors {
            return Ok(false);
        }
        if !pairwise_distinct(&colors) {
            return Ok(false);
        }
    }
    Ok(structure_holds(&w.edges, &w.defining_vertices, m.kind))
}

/// True iff `edges` (with `defining` for Berge kinds) form a copy of `kind`
/// of length `edges.len()`.
pub(crate) fn structure_holds(edges: &[Edge], defining: &[u32], kind: MotifKind) -> bool {
    let k = edges.len();
    if k == 0 || !pairwise_distinct(edges) {
        return false;
    }
    let s = edges[0].len();
    if edges.iter().any(|e| e.len() != s) {
        return false;
    }
    if !kind.is_berge() && !defining.is_empty() {
        return false;
    }
    match kind {
        MotifKind::Matching => all_pairs(k, |i, j| edges[i].is_disjoint(&edges[j])),
        MotifKind::LinearPath => chain_holds(edges, false, |x| x == 1),
        MotifKind::LoosePath => chain_holds(edges, false, |x| x >= 1),
        MotifKind::LinearCycle => k >= 3 && chain_holds(edges, true, |x| x == 1),
        MotifKind::LooseCycle => k >= 3 && chain_holds(edges, true, |x| x >= 1),
        MotifKind::BergePath => berge_holds(edges, defining, false),
        MotifKind::BergeCycle => k >= 3 && berge_holds(edges, defining, true),
    }
}

fn pairwise_distinct<T: PartialEq>(items: &[T]) -> bool {
    all_pairs(items.len(), |i, j| items[i] != items[j])
}

fn all_pairs(k: usize, ok: impl Fn(usize, usize) -> bool) -> bool {
    (0..k).all(|i| (i + 1..k).all(|j| ok(i, j)))
}

fn adjacent(i: usize, j: usize, k: usize, cyclic: bool) -> bool {
    j == i + 1 || (cyclic && i == 0 && j == k - 1)
}

fn chain_holds(edges: &[Edge], cyclic: bool, consecutive_ok: impl Fn(usize) -> bool) -> bool {
    let k = edges.len();
    let pairs_ok = all_pairs(k, |i, j| {
        let meet = edges[i].intersection_size(&edges[j]);
        if adjacent(i, j, k, cyclic) {
            consecutive_ok(meet)
        } else {
            meet == 0
        }
    });
    if !pairs_ok {
        return false;
    }
    // A 3-cycle has no nonconsecutive pair, so the three shared vertices
    // must additionally be distinct: three edges through one vertex are a
    // star, not a cycle.
    if cyclic && k == 3 {
        let a = edges[0].intersection(&edges[1]);
        let b = edges[1].intersection(&edges[2]);
        let c = edges[2].intersection(&edges[0]);
        return a.iter().any(|x| b.iter().any(|y| y != x && c.iter().any(|z| z != x && z != y)));
    }
    true
}

fn berge_holds(edges: &[Edge], defining: &[u32], cyclic: bool) -> bool {
    let k = edges.len();
    let want = if cyclic { k } else { k + 1 };
    if defining.len() != want || !pairwise_distinct(defining) {
        return false;
    }
    (0..k).all(|i| {
        let next = defining[(i + 1) % defining.len()];
        edges[i].contains(defining[i]) && edges[i].contains(next)
    })
}

/// Cross vertices lie in two or more edges of `w`, free vertices in one.
pub fn classify_vertices(w: &Witness) -> BTreeMap<u32, VertexRole> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for e in &w.edges {
        for &v in e.vertices() {
            *counts.entry(v).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .map(|(v, c)| (v, if c >= 2 { VertexRole::Cross } else { VertexRole::Free }))
        .collect()
}
