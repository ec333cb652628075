//! Extremal families, lower-bound colorings and path-assembly gadgets.
//!
//! Anchor sets are always the lowest-indexed vertices: the star center is
//! `S = {0..t-1}`, the extra edge is `{t..t+s-1}`, the fixed pair of a book
//! outside `S` is `{t, t+1}`. Every output is therefore reproducible.

mod cherry;
mod gadget;

pub use cherry::{cherry_density_margin, find_cherry_pairs, CherryPair};
pub use gadget::{assemble_linear_path, GadgetPath, Segment};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Coloring, EdgeSet, HostGraph};
use crate::motif::MotifKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum FamilySpec {
    /// All edges meeting `S = {0..t-1}`.
    Star { t: u32 },
    /// A star plus the single edge `{t..t+s-1}` disjoint from `S`.
    StarPlusEdge { t: u32 },
    /// A star plus every edge outside `S` containing both `t` and `t+1`.
    StarPlusBook { t: u32 },
    /// A star plus `count` disjoint edges outside `S`, in consecutive blocks.
    StarPlusMatching { t: u32, count: u32 },
    /// Every edge containing both `0` and `1`.
    PairBook,
    /// Every edge inside one of the consecutive blocks of `block` vertices;
    /// leftover vertices get no edges.
    DisjointCliques { block: u32 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Star { t } => write!(f, "star(t={t})"),
            FamilySpec::StarPlusEdge { t } => write!(f, "star-plus-edge(t={t})"),
            FamilySpec::StarPlusBook { t } => write!(f, "star-plus-book(t={t})"),
            FamilySpec::StarPlusMatching { t, count } => write!(f, "star-plus-matching(t={t}, count={count})"),
            FamilySpec::PairBook => f.write_str("pair-book"),
            FamilySpec::DisjointCliques { block } => write!(f, "disjoint-cliques(block={block})"),
        }
    }
}

impl FamilySpec {
    fn check(&self, host: &HostGraph) -> Result<()> {
        let (n, s) = (host.n(), host.s());
        let need = |ok: bool, why: &str| if ok { Ok(()) } else { Err(Error::invalid(format!("{self} on {host}: {why}"))) };
        match *self {
            FamilySpec::Star { t } => need(t <= n, "t exceeds n"),
            FamilySpec::StarPlusEdge { t } => need(t + s <= n, "no s-set disjoint from S"),
            FamilySpec::StarPlusBook { t } => need(t + s <= n, "the book needs s vertices outside S"),
            FamilySpec::StarPlusMatching { t, count } => need(t + count * s <= n, "matching does not fit outside S"),
            FamilySpec::PairBook => Ok(()),
            FamilySpec::DisjointCliques { block } => need(block >= s && block <= n, "block must be between s and n"),
        }
    }

    fn contains(&self, n: u32, s: u32, vs: &[u32]) -> bool {
        let meets_star = |t: u32| vs[0] < t;
        match *self {
            FamilySpec::Star { t } => meets_star(t),
            FamilySpec::StarPlusEdge { t } => meets_star(t) || (vs[0] == t && vs[vs.len() - 1] == t + s - 1),
            FamilySpec::StarPlusBook { t } => meets_star(t) || (vs[0] == t && vs[1] == t + 1),
            FamilySpec::StarPlusMatching { t, count } => {
                meets_star(t) || {
                    let first = vs[0] - t;
                    first.is_multiple_of(s)
                        && first / s < count
                        && vs.iter().enumerate().all(|(i, &v)| v == vs[0] + i as u32)
                }
            }
            FamilySpec::PairBook => vs[0] == 0 && vs[1] == 1,
            FamilySpec::DisjointCliques { block } => {
                // Blocks that run past n are incomplete and dropped.
                let b = vs[0] / block;
                vs[vs.len() - 1] / block == b && (b + 1) * block <= n
            }
        }
    }
}

/// The edge set of `spec` on `host`.
pub fn build_family(host: HostGraph, spec: FamilySpec) -> Result<EdgeSet> {
    spec.check(&host)?;
    let s = host.s();
    let ranks = host
        .edges()
        .enumerate()
        .filter(|(_, e)| spec.contains(host.n(), s, e.vertices()))
        .map(|(r, _)| r as u64)
        .collect();
    EdgeSet::from_ranks(host, ranks)
}

/// Distinct colors `0..|base|` on `base` in rank order, one more color on
/// everything else.
pub fn rainbow_plus_one(base: &EdgeSet) -> Result<Coloring> {
    let host = base.host();
    let total = host.materialized_edge_count()?;
    if base.is_empty() || base.len() == total {
        return Err(Error::invalid("base must be a nonempty proper subset of the edges"));
    }
    let rest = base.len() as u32;
    let mut colors = vec![rest; total];
    for (c, &r) in base.ranks().iter().enumerate() {
        colors[r as usize] = c as u32;
    }
    Coloring::new(host, colors)
}

/// The family whose rainbow-plus-one coloring has no rainbow copy of a
/// linear or loose path or cycle with `k` edges.
///
/// With `k = 2t` this is the star on `t-1` vertices. With `k = 2t+1` the
/// star gains a book (linear kinds) or a single edge (loose kinds).
pub fn lower_bound_family(host: HostGraph, kind: MotifKind, k: u32) -> Result<FamilySpec> {
    let loose = match kind {
        MotifKind::LinearPath | MotifKind::LinearCycle => false,
        MotifKind::LoosePath | MotifKind::LooseCycle => true,
        _ => return Err(Error::invalid(format!("no lower-bound family for {kind}"))),
    };
    if k < 3 {
        return Err(Error::invalid("lower-bound families need k >= 3"));
    }
    let t = k / 2;
    let spec = match (k % 2, loose) {
        (0, _) => FamilySpec::Star { t: t - 1 },
        (_, false) => FamilySpec::StarPlusBook { t: t - 1 },
        (_, true) => FamilySpec::StarPlusEdge { t: t - 1 },
    };
    spec.check(&host)?;
    Ok(spec)
}

/// [`rainbow_plus_one`] over [`lower_bound_family`].
pub fn lower_bound_coloring(host: HostGraph, kind: MotifKind, k: u32) -> Result<Coloring> {
    let spec = lower_bound_family(host, kind, k)?;
    rainbow_plus_one(&build_family(host, spec)?)
}

/// How the vertex blocks of a Berge lower-bound coloring are filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "scheme")]
pub enum BergeBlocks {
    /// Every edge inside each block of `block` vertices gets its own color.
    Full { block: u32 },
    /// The `per_block` colex-least edges inside each block get their own
    /// colors.
    Sparse { block: u32, per_block: u32 },
}

impl BergeBlocks {
    /// The scheme for Berge paths with `k` edges: full blocks of `k/2`
    /// vertices when `k > 2s+1`, otherwise blocks of `s+1` vertices holding
    /// `k/2 - 1` edges each.
    pub fn for_path(s: u32, k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::invalid("Berge block colorings need k >= 3"));
        }
        Ok(if k > 2 * s + 1 {
            BergeBlocks::Full { block: k / 2 }
        } else {
            BergeBlocks::Sparse { block: s + 1, per_block: k / 2 - 1 }
        })
    }

    fn block(&self) -> u32 {
        match *self {
            BergeBlocks::Full { block } | BergeBlocks::Sparse { block, .. } => block,
        }
    }
}

/// Block coloring with the scheme chosen by [`BergeBlocks::for_path`].
pub fn berge_block_coloring(host: HostGraph, k: u32) -> Result<Coloring> {
    berge_block_coloring_with(host, BergeBlocks::for_path(host.s(), k)?)
}

/// Splits the vertices into consecutive blocks (a short leftover block is
/// dropped), colors the chosen edges inside each block distinctly, and gives
/// every other edge one shared color.
pub fn berge_block_coloring_with(host: HostGraph, scheme: BergeBlocks) -> Result<Coloring> {
    let block = scheme.block();
    if block < host.s() || block > host.n() {
        return Err(Error::invalid(format!("block size {block} must lie between s and n on {host}")));
    }
    if let BergeBlocks::Sparse { per_block, .. } = scheme {
        let room = crate::binom::checked(block as u64, host.s() as u64).unwrap_or(u64::MAX);
        if per_block as u64 > room {
            return Err(Error::invalid(format!("a block of {block} vertices has only {room} edges")));
        }
    }
    let blocks = host.n() / block;
    let mut taken = vec![0u32; blocks as usize];
    let mut special = Vec::new();
    for (r, e) in host.edges().enumerate() {
        let vs = e.vertices();
        let b = vs[0] / block;
        if b >= blocks || vs[vs.len() - 1] / block != b {
            continue;
        }
        let pick = match scheme {
            BergeBlocks::Full { .. } => true,
            BergeBlocks::Sparse { per_block, .. } => taken[b as usize] < per_block,
        };
        if pick {
            // Colex order visits each block's edges least first.
            taken[b as usize] += 1;
            special.push(r as u64);
        }
    }
    if special.is_empty() {
        return Coloring::monochromatic(host);
    }
    rainbow_plus_one(&EdgeSet::from_ranks(host, special)?)
}

#[cfg(test)]
mod tests;
