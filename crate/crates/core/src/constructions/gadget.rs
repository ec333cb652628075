//! The path-assembly notation of the linear-path proofs.
//!
//! A path is written as a sequence of `(s-1)`-sets and link vertices, e.g.
//! `a0 + {v1} + a1 + b1 + {v2} + a2`. Every `(s-1)`-set is completed by the
//! one link vertex next to it, so the example realizes the edges
//! `a0+v1, v1+a1, b1+v2, v2+a2`; the consecutive sets `a1, b1` form a cherry
//! and the two middle edges meet in the cherry's shared vertex. Whole edges
//! may be spliced in as they are.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Edge, HostGraph};
use crate::motif::{verify_witness, MotifKind, MotifSpec, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Segment {
    /// An `(s-1)`-set, completed by its adjacent link vertex.
    Part(Edge),
    /// A link vertex shared by the edges on either side.
    Link(u32),
    /// A full `s`-edge used as is.
    Edge(Edge),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetPath {
    pub segments: Vec<Segment>,
    pub realized: Witness,
}

/// Realizes `segments` as a linear path on `host`.
///
/// Fails if a part has no adjacent link or one on both sides, if a link
/// touches no part, or if the realized edges do not form a linear path (the
/// first offending pair of edges is named).
pub fn assemble_linear_path(host: HostGraph, segments: &[Segment]) -> Result<GadgetPath> {
    if segments.is_empty() {
        return Err(Error::invalid("empty segment list"));
    }
    let is_link = |i: usize| matches!(segments.get(i), Some(Segment::Link(_)));
    let mut edges = Vec::new();
    for (i, seg) in segments.iter().enumerate() {
        match seg {
            Segment::Link(v) => {
                let touches = |j: Option<usize>| j.and_then(|j| segments.get(j)).is_some_and(|s| matches!(s, Segment::Part(_)));
                if !touches(i.checked_sub(1)) && !touches(Some(i + 1)) {
                    return Err(Error::invalid(format!("link {v} at segment {i} is not next to any part")));
                }
            }
            Segment::Edge(e) => {
                host.check_edge(e)?;
                edges.push(e.clone());
            }
            Segment::Part(p) => {
                if p.len() + 1 != host.s() as usize {
                    return Err(Error::invalid(format!("part {p} at segment {i} must have s-1 = {} vertices", host.s() - 1)));
                }
                let left = i > 0 && is_link(i - 1);
                let right = is_link(i + 1);
                let link = match (left, right) {
                    (true, false) => i - 1,
                    (false, true) => i + 1,
                    (true, true) => return Err(Error::invalid(format!("part {p} at segment {i} has links on both sides"))),
                    (false, false) => return Err(Error::invalid(format!("part {p} at segment {i} has no adjacent link"))),
                };
                let Segment::Link(v) = segments[link] else { unreachable!() };
                let e = p
                    .extended(&[v])
                    .map_err(|_| Error::invalid(format!("link {v} already lies in part {p} at segment {i}")))?;
                host.check_edge(&e)?;
                edges.push(e);
            }
        }
    }
    check_linear(&edges)?;
    let spec = MotifSpec::new(MotifKind::LinearPath, edges.len() as u32)?;
    let realized = Witness { kind: spec.kind, k: spec.k, edges, defining_vertices: Vec::new(), colors: Vec::new() };
    debug_assert!(verify_witness(&realized, spec, None).unwrap_or(false));
    Ok(GadgetPath { segments: segments.to_vec(), realized })
}

fn check_linear(edges: &[Edge]) -> Result<()> {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let meet = edges[i].intersection_size(&edges[j]);
            let want = if j == i + 1 { 1 } else { 0 };
            if meet != want || edges[i] == edges[j] {
                return Err(Error::invalid(format!(
                    "edges {} (#{i}) and {} (#{j}) share {meet} vertices, expected {want}",
                    edges[i], edges[j]
                )));
            }
        }
    }
    Ok(())
}
