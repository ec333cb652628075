use crate::error::{Error, Result};

use super::{Edge, HostGraph};

/// A surjective edge coloring of `K_n^(s)`, stored by colex rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    host: HostGraph,
    colors: Vec<u32>,
    num_colors: u32,
}

impl Coloring {
    /// Validates length and that the colors used are exactly `0..c`.
    pub fn new(host: HostGraph, colors: Vec<u32>) -> Result<Self> {
        let m = host.materialized_edge_count()?;
        if colors.len() != m {
            return Err(Error::invalid(format!(
                "coloring has {} entries but {host} has {m} edges",
                colors.len()
            )));
        }
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        let mut seen = vec![false; num_colors as usize];
        for &c in &colors {
            seen[c as usize] = true;
        }
        if let Some(missing) = seen.iter().position(|&b| !b) {
            return Err(Error::invalid(format!(
                "color {missing} is unused; colors must be exactly 0..{num_colors}"
            )));
        }
        Ok(Coloring { host, colors, num_colors })
    }

    pub fn monochromatic(host: HostGraph) -> Result<Self> {
        let m = host.materialized_edge_count()?;
        Coloring::new(host, vec![0; m])
    }

    /// Every edge its own color (color = rank).
    pub fn all_distinct(host: HostGraph) -> Result<Self> {
        let m = host.materialized_edge_count()?;
        Coloring::new(host, (0..m as u32).collect())
    }

    pub fn host(&self) -> HostGraph {
        self.host
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn color_of_rank(&self, rank: usize) -> u32 {
        self.colors[rank]
    }

    pub fn color_of(&self, e: &Edge) -> Result<u32> {
        let r = self.host.edge_rank(e)?;
        Ok(self.colors[r as usize])
    }

    /// Renumbers colors so they appear in first-occurrence order along ranks.
    pub fn canonical(&self) -> Coloring {
        let mut map = vec![u32::MAX; self.num_colors as usize];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == u32::MAX {
                    map[c as usize] = next;
                    next += 1;
                }
                map[c as usize]
            })
            .collect();
        Coloring { host: self.host, colors, num_colors: self.num_colors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjectivity_is_enforced() {
        let h = HostGraph::new(4, 3).unwrap();
        assert!(Coloring::new(h, vec![0, 0, 2, 1]).is_ok());
        assert!(Coloring::new(h, vec![0, 0, 2, 2]).is_err());
        assert!(Coloring::new(h, vec![0, 0, 0]).is_err());
        assert_eq!(Coloring::all_distinct(h).unwrap().num_colors(), 4);
    }

    #[test]
    fn canonical_relabels_by_first_occurrence() {
        let h = HostGraph::new(4, 3).unwrap();
        let c = Coloring::new(h, vec![2, 0, 2, 1]).unwrap().canonical();
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
    }
}
