use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Edge, HostGraph};

/// A set of edges of one host, kept as sorted colex ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    host: HostGraph,
    ranks: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(host: HostGraph) -> Self {
        EdgeSet { host, ranks: Vec::new() }
    }

    pub fn from_edges<'a>(host: HostGraph, edges: impl IntoIterator<Item = &'a Edge>) -> Result<Self> {
        let mut ranks = edges
            .into_iter()
            .map(|e| host.edge_rank(e))
            .collect::<Result<Vec<_>>>()?;
        ranks.sort_unstable();
        ranks.dedup();
        Ok(EdgeSet { host, ranks })
    }

    pub fn from_ranks(host: HostGraph, mut ranks: Vec<u64>) -> Result<Self> {
        let m = host.materialized_edge_count()? as u64;
        if let Some(&bad) = ranks.iter().find(|&&r| r >= m) {
            return Err(Error::invalid(format!("rank {bad} outside 0..{m}")));
        }
        ranks.sort_unstable();
        ranks.dedup();
        Ok(EdgeSet { host, ranks })
    }

    /// Every edge of the host.
    pub fn complete(host: HostGraph) -> Result<Self> {
        let m = host.materialized_edge_count()? as u64;
        Ok(EdgeSet { host, ranks: (0..m).collect() })
    }

    pub fn host(&self) -> HostGraph {
        self.host
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn contains_rank(&self, rank: u64) -> bool {
        self.ranks.binary_search(&rank).is_ok()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.host.edge_rank(e).is_ok_and(|r| self.contains_rank(r))
    }

    /// Edges in colex order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.ranks.iter().map(|&r| self.host.edge_unrank(r).expect("rank validated on construction"))
    }

    pub fn insert(&mut self, e: &Edge) -> Result<bool> {
        let r = self.host.edge_rank(e)?;
        match self.ranks.binary_search(&r) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.ranks.insert(pos, r);
                Ok(true)
            }
        }
    }
}

/// JSON form: `{"n": .., "s": .., "edges": [[..], ..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeSetDoc {
    pub n: u32,
    pub s: u32,
    pub edges: Vec<Edge>,
}

impl From<&EdgeSet> for EdgeSetDoc {
    fn from(set: &EdgeSet) -> Self {
        EdgeSetDoc { n: set.host.n(), s: set.host.s(), edges: set.edges().collect() }
    }
}

impl TryFrom<EdgeSetDoc> for EdgeSet {
    type Error = Error;

    fn try_from(doc: EdgeSetDoc) -> Result<Self> {
        let host = HostGraph::new(doc.n, doc.s)?;
        EdgeSet::from_edges(host, &doc.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_keeps_order_and_dedups() {
        let h = HostGraph::new(5, 3).unwrap();
        let mut set = EdgeSet::empty(h);
        assert!(set.insert(&h.edge([2, 3, 4]).unwrap()).unwrap());
        assert!(set.insert(&h.edge([0, 1, 2]).unwrap()).unwrap());
        assert!(!set.insert(&h.edge([0, 1, 2]).unwrap()).unwrap());
        assert_eq!(set.ranks(), &[0, 9]);
        assert!(set.contains(&h.edge([4, 3, 2]).unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let h = HostGraph::new(6, 3).unwrap();
        let set = EdgeSet::from_ranks(h, vec![5, 1, 19]).unwrap();
        let text = serde_json::to_string(&EdgeSetDoc::from(&set)).unwrap();
        let back = EdgeSet::try_from(serde_json::from_str::<EdgeSetDoc>(&text).unwrap()).unwrap();
        assert_eq!(back, set);
        assert!(EdgeSet::from_ranks(h, vec![20]).is_err());
    }
}
