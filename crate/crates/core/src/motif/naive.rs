//! Reference oracle: enumerate ordered edge tuples and judge each prefix with
//! the definitional checks. Slow by design; used to cross-check the engine.

use num_bigint::BigUint;

use crate::binom;
use crate::error::{Error, Result};
use crate::model::{Coloring, Edge};

use super::verify::structure_holds;
use super::{MotifKind, MotifSpec, Witness};

/// Default cap on `C(E, k) * k!` ordered tuples.
pub const DEFAULT_NAIVE_BUDGET: u64 = 100_000_000;

/// Exhaustive rainbow search over ordered tuples of distinct edges.
///
/// Fails with a resource-limit error when `C(E, k) * k!` exceeds `budget`,
/// where `E` is the number of host edges.
pub fn find_rainbow_naive(coloring: &Coloring, spec: MotifSpec, budget: u64) -> Result<Option<Witness>> {
    let host = coloring.host();
    spec.validate_for(&host)?;
    let edges: Vec<Edge> = host.edges().collect();
    let k = spec.k as usize;
    let mut tuples = binom::big(edges.len() as u64, k as u64);
    for i in 2..=k as u64 {
        tuples *= i;
    }
    if tuples > BigUint::from(budget) {
        return Err(Error::ResourceLimit(format!("{tuples} ordered tuples exceed the naive budget {budget}")));
    }
    let colors = coloring.colors();
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    let found = extend(&edges, colors, spec, &mut picked);
    Ok(found.map(|(idx, defining)| Witness {
        kind: spec.kind,
        k: spec.k,
        edges: idx.iter().map(|&i| edges[i].clone()).collect(),
        defining_vertices: defining,
        colors: idx.iter().map(|&i| colors[i]).collect(),
    }))
}

fn extend(edges: &[Edge], colors: &[u32], spec: MotifSpec, picked: &mut Vec<usize>) -> Option<(Vec<usize>, Vec<u32>)> {
    if picked.len() == spec.k as usize {
        let chosen: Vec<Edge> = picked.iter().map(|&i| edges[i].clone()).collect();
        return full_match(&chosen, spec.kind).map(|d| (picked.clone(), d));
    }
    for i in 0..edges.len() {
        if picked.contains(&i) || picked.iter().any(|&j| colors[j] == colors[i]) {
            continue;
        }
        picked.push(i);
        let prefix: Vec<Edge> = picked.iter().map(|&j| edges[j].clone()).collect();
        if picked.len() == spec.k as usize || prefix_ok(&prefix, spec.kind) {
            if let Some(hit) = extend(edges, colors, spec, picked) {
                return Some(hit);
            }
        }
        picked.pop();
    }
    None
}

/// A proper prefix of a path or cycle is a path of the same flavor; a prefix
/// of a matching is a matching.
fn prefix_ok(prefix: &[Edge], kind: MotifKind) -> bool {
    let as_path = match kind {
        MotifKind::LinearCycle => MotifKind::LinearPath,
        MotifKind::LooseCycle => MotifKind::LoosePath,
        MotifKind::BergeCycle => MotifKind::BergePath,
        other => other,
    };
    full_match(prefix, as_path).is_some()
}

/// Defining vertices (empty unless Berge) making `edges` a copy of `kind`.
fn full_match(edges: &[Edge], kind: MotifKind) -> Option<Vec<u32>> {
    if !kind.is_berge() {
        return structure_holds(edges, &[], kind).then(Vec::new);
    }
    let len = if kind == MotifKind::BergeCycle { edges.len() } else { edges.len() + 1 };
    let mut defining = Vec::with_capacity(len);
    any_defining(edges, kind, len, &mut defining).then_some(defining)
}

/// Position `j` needs a vertex of `e_j` that also lies in `e_{j-1}`; the
/// definitional check has the final word.
fn any_defining(edges: &[Edge], kind: MotifKind, len: usize, defining: &mut Vec<u32>) -> bool {
    let j = defining.len();
    if j == len {
        return structure_holds(edges, defining, kind);
    }
    let home = &edges[j.min(edges.len() - 1)];
    for &v in home.vertices() {
        if defining.contains(&v) || (j >= 1 && !edges[j - 1].contains(v)) {
            continue;
        }
        defining.push(v);
        if any_defining(edges, kind, len, defining) {
            return true;
        }
        defining.pop();
    }
    false
}
