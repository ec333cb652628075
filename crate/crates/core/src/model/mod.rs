//! Vertex and edge model for the complete s-uniform hypergraph `K_n^(s)`.
//!
//! Vertices are dense indices `0..n`. Edges are strictly increasing vertex
//! lists; every edge whose vertices are all below 64 also carries a `u64`
//! bitmask mirror, which the set operations use when both operands have one.
//! Edges are identified by their colex rank.

mod arc;
mod coloring;
mod edge_set;

pub use arc::{parse_arc, write_arc, ARC_HEADER};
pub use coloring::Coloring;
pub use edge_set::{EdgeSet, EdgeSetDoc};

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binom;
use crate::error::{Error, Result};

/// Largest edge count the crate is willing to materialize (colorings, pools).
pub const MAX_MATERIALIZED_EDGES: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HostGraph {
    n: u32,
    s: u32,
}

impl HostGraph {
    pub fn new(n: u32, s: u32) -> Result<Self> {
        if s < 2 {
            return Err(Error::invalid(format!("uniformity s={s} must be at least 2")));
        }
        if s > n {
            return Err(Error::invalid(format!("uniformity s={s} exceeds vertex count n={n}")));
        }
        Ok(HostGraph { n, s })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `C(n, s)`, exactly.
    pub fn edge_count(&self) -> BigUint {
        binom::big(self.n as u64, self.s as u64)
    }

    /// Edge count as a machine index, refusing hosts too large to enumerate.
    pub fn materialized_edge_count(&self) -> Result<usize> {
        match binom::checked(self.n as u64, self.s as u64) {
            Some(m) if m <= MAX_MATERIALIZED_EDGES => Ok(m as usize),
            _ => Err(Error::ResourceLimit(format!(
                "K_{}^({}) has {} edges; at most {} can be materialized",
                self.n,
                self.s,
                self.edge_count(),
                MAX_MATERIALIZED_EDGES
            ))),
        }
    }

    /// Builds a validated edge of this host; input order does not matter.
    pub fn edge(&self, vertices: impl Into<Vec<u32>>) -> Result<Edge> {
        let mut vs = vertices.into();
        vs.sort_unstable();
        if vs.len() != self.s as usize {
            return Err(Error::invalid(format!(
                "edge {:?} has {} vertices, expected {}",
                vs,
                vs.len(),
                self.s
            )));
        }
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("edge {vs:?} repeats a vertex")));
        }
        if let Some(&v) = vs.last() {
            if v >= self.n {
                return Err(Error::invalid(format!("vertex {v} out of range for n={}", self.n)));
            }
        }
        Ok(Edge(VertexList::from_sorted(vs)))
    }

    pub fn check_edge(&self, e: &Edge) -> Result<()> {
        if e.len() != self.s as usize {
            return Err(Error::invalid(format!("edge {e} has {} vertices, expected {}", e.len(), self.s)));
        }
        if e.vertices().iter().any(|&v| v >= self.n) {
            return Err(Error::invalid(format!("edge {e} leaves the vertex range 0..{}", self.n)));
        }
        Ok(())
    }

    pub fn vertex_set(&self, members: impl Into<Vec<u32>>) -> Result<VertexSet> {
        let set = VertexSet::new(members)?;
        if let Some(&v) = set.members().last() {
            if v >= self.n {
                return Err(Error::invalid(format!("vertex {v} out of range for n={}", self.n)));
            }
        }
        Ok(set)
    }

    /// All edges in colex order; the i-th item has rank i.
    pub fn edges(&self) -> ColexEdges {
        ColexEdges {
            n: self.n,
            next: Some((0..self.s).collect()),
        }
    }

    /// Colex rank: `sum_i C(v_i, i + 1)` over the sorted vertices.
    pub fn edge_rank(&self, e: &Edge) -> Result<u64> {
        self.check_edge(e)?;
        let total = binom::checked(self.n as u64, self.s as u64)
            .ok_or_else(|| Error::ResourceLimit(format!("C({}, {}) does not fit in 64 bits", self.n, self.s)))?;
        let mut rank = 0u64;
        for (i, &v) in e.vertices().iter().enumerate() {
            // each term is below C(n, s), so it fits as well
            rank += binom::checked(v as u64, i as u64 + 1).expect("term below C(n, s)");
        }
        debug_assert!(rank < total);
        Ok(rank)
    }

    pub fn edge_unrank(&self, rank: u64) -> Result<Edge> {
        let total = binom::checked(self.n as u64, self.s as u64)
            .ok_or_else(|| Error::ResourceLimit(format!("C({}, {}) does not fit in 64 bits", self.n, self.s)))?;
        if rank >= total {
            return Err(Error::invalid(format!("rank {rank} outside 0..{total}")));
        }
        let mut rest = rank;
        let mut vs = vec![0u32; self.s as usize];
        let mut hi = self.n;
        for i in (0..self.s as usize).rev() {
            // largest v < hi with C(v, i + 1) <= rest
            let mut v = hi - 1;
            loop {
                let c = binom::checked(v as u64, i as u64 + 1).expect("below C(n, s)");
                if c <= rest {
                    rest -= c;
                    break;
                }
                v -= 1;
            }
            vs[i] = v;
            hi = v;
        }
        Ok(Edge(VertexList::from_sorted(vs)))
    }

    /// Edges that meet `set`, in colex order.
    pub fn edges_meeting<'a>(&self, set: &'a VertexSet) -> impl Iterator<Item = Edge> + 'a {
        self.edges().filter(move |e| set.meets(e))
    }

    /// Edges lying entirely inside `set`, in colex order.
    pub fn edges_within<'a>(&self, set: &'a VertexSet) -> impl Iterator<Item = Edge> + 'a {
        self.edges().filter(move |e| e.vertices().iter().all(|&v| set.contains(v)))
    }
}

impl fmt::Display for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}^({})", self.n, self.s)
    }
}

/// Colex successor iteration over s-subsets of `0..n`.
pub struct ColexEdges {
    n: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for ColexEdges {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let cur = self.next.take()?;
        if cur.last().is_some_and(|&v| v >= self.n) {
            return None;
        }
        let mut succ = cur.clone();
        let s = succ.len();
        let mut i = 0;
        while i < s {
            let limit = if i + 1 < s { succ[i + 1] } else { self.n };
            if succ[i] + 1 < limit {
                succ[i] += 1;
                for (j, slot) in succ.iter_mut().enumerate().take(i) {
                    *slot = j as u32;
                }
                self.next = Some(succ);
                break;
            }
            i += 1;
        }
        Some(Edge(VertexList::from_sorted(cur)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct VertexList {
    items: Vec<u32>,
    mask: Option<u64>,
}

impl VertexList {
    fn from_sorted(items: Vec<u32>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        let mask = if items.last().is_none_or(|&v| v < 64) {
            Some(items.iter().fold(0u64, |m, &v| m | (1u64 << v)))
        } else {
            None
        };
        VertexList { items, mask }
    }

    fn checked(mut items: Vec<u32>) -> Result<Self> {
        items.sort_unstable();
        if items.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("vertex list {items:?} repeats a vertex")));
        }
        Ok(Self::from_sorted(items))
    }

    fn contains(&self, v: u32) -> bool {
        match self.mask {
            Some(m) => v < 64 && m >> v & 1 == 1,
            None => self.items.binary_search(&v).is_ok(),
        }
    }

    fn intersection_size(&self, other: &VertexList) -> usize {
        if let (Some(a), Some(b)) = (self.mask, other.mask) {
            return (a & b).count_ones() as usize;
        }
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.items.len() && j < other.items.len() {
            match self.items[i].cmp(&other.items[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

/// An edge: a strictly increasing list of vertices.
///
/// The same type holds the (s-1)-sets used by the path-assembly gadgets;
/// uniformity is checked by [`HostGraph::check_edge`] where it matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(VertexList);

impl Edge {
    /// Any nonempty vertex set, without reference to a host.
    pub fn from_vertices(vertices: impl Into<Vec<u32>>) -> Result<Self> {
        let list = VertexList::checked(vertices.into())?;
        if list.items.is_empty() {
            return Err(Error::invalid("edge must be nonempty"));
        }
        Ok(Edge(list))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0.items
    }

    pub fn len(&self) -> usize {
        self.0.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.items.is_empty()
    }

    /// Bitmask mirror, present when every vertex is below 64.
    pub fn mask(&self) -> Option<u64> {
        self.0.mask
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.contains(v)
    }

    pub fn intersection_size(&self, other: &Edge) -> usize {
        self.0.intersection_size(&other.0)
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.intersection_size(other) == 0
    }

    pub fn intersection(&self, other: &Edge) -> Vec<u32> {
        self.vertices().iter().copied().filter(|&v| other.contains(v)).collect()
    }

    /// Union with extra vertices; errors if any of them is already present.
    pub fn extended(&self, extra: &[u32]) -> Result<Edge> {
        let mut vs = self.vertices().to_vec();
        vs.extend_from_slice(extra);
        Edge::from_vertices(vs)
    }

    pub(crate) fn mask128(&self) -> u128 {
        self.vertices().iter().fold(0u128, |m, &v| m | (1u128 << v))
    }
}

/// `|e ∩ f|`.
pub fn intersection_size(e: &Edge, f: &Edge) -> usize {
    e.intersection_size(f)
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<u32>::deserialize(deserializer)?;
        Edge::from_vertices(vs).map_err(serde::de::Error::custom)
    }
}

/// A fixed vertex set (anchor sets, forbidden sets).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(VertexList);

impl Default for VertexList {
    fn default() -> Self {
        VertexList { items: Vec::new(), mask: Some(0) }
    }
}

impl VertexSet {
    pub fn new(members: impl Into<Vec<u32>>) -> Result<Self> {
        Ok(VertexSet(VertexList::checked(members.into())?))
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    /// `{lo, lo+1, ..., hi-1}`.
    pub fn range(lo: u32, hi: u32) -> Self {
        VertexSet(VertexList::from_sorted((lo..hi).collect()))
    }

    pub fn members(&self) -> &[u32] {
        &self.0.items
    }

    pub fn len(&self) -> usize {
        self.0.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.items.is_empty()
    }

    pub fn mask(&self) -> Option<u64> {
        self.0.mask
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.contains(v)
    }

    pub fn meets(&self, e: &Edge) -> bool {
        self.0.intersection_size(&e.0) > 0
    }

    pub fn insert_all(&mut self, vs: &[u32]) {
        let mut items = std::mem::take(&mut self.0.items);
        items.extend_from_slice(vs);
        items.sort_unstable();
        items.dedup();
        self.0 = VertexList::from_sorted(items);
    }
}
