//! Path, cycle and matching motifs: witnesses, verification and search.
//!
//! Motif length `k` always counts edges. For `s = 2` a linear path of length
//! `k` is the ordinary graph path on `k + 1` vertices.

mod naive;
pub(crate) mod search;
mod verify;

pub use naive::{find_rainbow_naive, DEFAULT_NAIVE_BUDGET};
pub use verify::{classify_vertices, verify_witness, VertexRole};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::model::{Coloring, Edge, EdgeSet, HostGraph};

use search::{ColoringView, Pool, RawCopy, SubsetView};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MotifKind {
    LinearPath,
    LoosePath,
    BergePath,
    LinearCycle,
    LooseCycle,
    BergeCycle,
    Matching,
}

impl MotifKind {
    pub const ALL: [MotifKind; 7] = [
        MotifKind::LinearPath,
        MotifKind::LoosePath,
        MotifKind::BergePath,
        MotifKind::LinearCycle,
        MotifKind::LooseCycle,
        MotifKind::BergeCycle,
        MotifKind::Matching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MotifKind::LinearPath => "linear-path",
            MotifKind::LoosePath => "loose-path",
            MotifKind::BergePath => "berge-path",
            MotifKind::LinearCycle => "linear-cycle",
            MotifKind::LooseCycle => "loose-cycle",
            MotifKind::BergeCycle => "berge-cycle",
            MotifKind::Matching => "matching",
        }
    }

    pub fn is_cycle(self) -> bool {
        matches!(self, MotifKind::LinearCycle | MotifKind::LooseCycle | MotifKind::BergeCycle)
    }

    pub fn is_berge(self) -> bool {
        matches!(self, MotifKind::BergePath | MotifKind::BergeCycle)
    }

    /// Smallest legal length for this kind.
    pub fn min_k(self) -> u32 {
        if self.is_cycle() {
            3
        } else {
            1
        }
    }
}

impl fmt::Display for MotifKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MotifKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MotifKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown motif `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MotifSpec {
    pub kind: MotifKind,
    pub k: u32,
}

impl MotifSpec {
    pub fn new(kind: MotifKind, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("motif length k must be at least 1"));
        }
        if k < kind.min_k() {
            return Err(Error::invalid(format!("{kind} needs k >= {}, got {k}", kind.min_k())));
        }
        Ok(MotifSpec { kind, k })
    }

    pub fn linear_path(k: u32) -> Result<Self> {
        MotifSpec::new(MotifKind::LinearPath, k)
    }

    /// Host-dependent checks: Berge motifs need `k <= n`.
    pub fn validate_for(&self, host: &HostGraph) -> Result<()> {
        if self.kind.is_berge() && self.k > host.n() {
            return Err(Error::invalid(format!("{self} does not fit on n={} vertices", host.n())));
        }
        Ok(())
    }

    /// Number of defining vertices a witness of this motif carries.
    pub fn defining_len(&self) -> usize {
        match self.kind {
            MotifKind::BergePath => self.k as usize + 1,
            MotifKind::BergeCycle => self.k as usize,
            _ => 0,
        }
    }
}

impl fmt::Display for MotifSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.k)
    }
}

/// An ordered copy of a motif, optionally annotated with its edge colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: MotifKind,
    pub k: u32,
    pub edges: Vec<Edge>,
    #[serde(default)]
    pub defining_vertices: Vec<u32>,
    #[serde(default)]
    pub colors: Vec<u32>,
}

impl Witness {
    pub fn spec(&self) -> Result<MotifSpec> {
        MotifSpec::new(self.kind, self.k)
    }

    /// Re-reads a linear or loose path as a Berge path of the same length:
    /// defining vertices are one shared vertex per consecutive pair plus a
    /// private vertex at each end.
    pub fn as_berge_path(&self) -> Option<Witness> {
        if !matches!(self.kind, MotifKind::LinearPath | MotifKind::LoosePath) || self.edges.is_empty() {
            return None;
        }
        let k = self.edges.len();
        let mut verts = Vec::with_capacity(k + 1);
        let first = &self.edges[0];
        let start = if k == 1 {
            first.vertices()[0]
        } else {
            *first.vertices().iter().find(|&&v| !self.edges[1].contains(v))?
        };
        verts.push(start);
        for pair in self.edges.windows(2) {
            verts.push(*pair[0].intersection(&pair[1]).first()?);
        }
        let last = &self.edges[k - 1];
        let end = *last.vertices().iter().find(|&&v| !verts.contains(&v))?;
        verts.push(end);
        Some(Witness {
            kind: MotifKind::BergePath,
            k: self.k,
            edges: self.edges.clone(),
            defining_vertices: verts,
            colors: self.colors.clone(),
        })
    }
}

fn witness_from_raw(pool: &Pool, host: &HostGraph, spec: MotifSpec, raw: RawCopy, coloring: Option<&Coloring>) -> Witness {
    let edges: Vec<Edge> = raw
        .edges
        .iter()
        .map(|&i| host.edge_unrank(pool.rank_of(i)).expect("pool ranks are valid"))
        .collect();
    let colors = match coloring {
        Some(c) => raw.edges.iter().map(|&i| c.color_of_rank(pool.rank_of(i) as usize)).collect(),
        None => Vec::new(),
    };
    Witness { kind: spec.kind, k: spec.k, edges, defining_vertices: raw.defining, colors }
}

/// Any copy of `spec` using only edges of `available`.
///
/// Returns the witness whose edge-rank sequence is lexicographically least,
/// so every execution mode reports the same copy.
pub fn find_copy(available: &EdgeSet, spec: MotifSpec) -> Result<Option<Witness>> {
    find_copy_with(available, spec, Execution::default())
}

pub fn find_copy_with(available: &EdgeSet, spec: MotifSpec, exec: Execution) -> Result<Option<Witness>> {
    let host = available.host();
    spec.validate_for(&host)?;
    let pool = Pool::for_host(host)?;
    let view = SubsetView::from_ranks(pool.len(), available.ranks());
    Ok(search::first_copy(&pool, &view, spec, exec).map(|raw| witness_from_raw(&pool, &host, spec, raw, None)))
}

/// A rainbow copy of `spec` under `coloring`, or `None` if none exists.
///
/// The search is exhaustive, so `None` certifies rainbow-freeness. At most one
/// edge of each color class enters a partial witness.
pub fn find_rainbow(coloring: &Coloring, spec: MotifSpec) -> Result<Option<Witness>> {
    find_rainbow_with(coloring, spec, Execution::default())
}

pub fn find_rainbow_with(coloring: &Coloring, spec: MotifSpec, exec: Execution) -> Result<Option<Witness>> {
    let host = coloring.host();
    spec.validate_for(&host)?;
    let pool = Pool::for_host(host)?;
    let view = ColoringView::new(coloring.colors());
    Ok(search::first_copy(&pool, &view, spec, exec)
        .map(|raw| witness_from_raw(&pool, &host, spec, raw, Some(coloring))))
}

#[cfg(test)]
mod tests;
