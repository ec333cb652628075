//! Greedy search for disjoint cherries: pairs of `(s-1)`-sets sharing
//! exactly one vertex.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::binom;
use crate::error::{Error, Result};
use crate::formulas;
use crate::model::{Edge, VertexSet};
use crate::motif::MotifSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CherryPair {
    pub a: Edge,
    pub b: Edge,
}

impl CherryPair {
    pub fn union(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.a.vertices().iter().chain(self.b.vertices()).copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

fn colex(a: &Edge, b: &Edge) -> Ordering {
    a.vertices().iter().rev().cmp(b.vertices().iter().rev())
}

/// `max(t-1, 1)` cherries from `gstar`, pairwise vertex-disjoint and avoiding
/// `w`.
///
/// First fit in colex order: the least usable `a`, then the least usable `b`
/// meeting it in one vertex. Running out before the quota is an error that
/// carries the pairs found so far.
pub fn find_cherry_pairs(gstar: &[Edge], w: &VertexSet, t: u32) -> Result<Vec<CherryPair>> {
    let quota = t.saturating_sub(1).max(1) as usize;
    let mut order: Vec<&Edge> = gstar.iter().collect();
    order.sort_by(|a, b| colex(a, b));
    order.dedup();
    let mut blocked: Vec<u32> = w.members().to_vec();
    let free = |e: &Edge, blocked: &[u32]| e.vertices().iter().all(|v| !blocked.contains(v));
    let mut found = Vec::new();
    for (i, a) in order.iter().enumerate() {
        if found.len() == quota {
            break;
        }
        if !free(a, &blocked) {
            continue;
        }
        let partner = order
            .iter()
            .enumerate()
            .find(|&(j, b)| j != i && free(b, &blocked) && a.intersection_size(b) == 1);
        if let Some((_, b)) = partner {
            let pair = CherryPair { a: (*a).clone(), b: (*b).clone() };
            blocked.extend(pair.union());
            found.push(pair);
        }
    }
    if found.len() < quota {
        return Err(Error::CherryShortfall { found, quota });
    }
    Ok(found)
}

/// How far `|G*|` exceeds the density the greedy's counting argument needs:
/// `|G*| - d*C(n-1,s-2) - (t-1)(2s-3)*C(n-1,s-2) - ex(n, s-1, P_2)`.
///
/// `ex(n, s-1, P_2)` comes from [`formulas::ex_value`], so the margin is only
/// as sound as that value's bound type. Positive means the argument goes
/// through.
pub fn cherry_density_margin(n: u32, s: u32, gstar_size: u64, d: u32, t: u32) -> Result<BigRational> {
    if s < 3 {
        return Err(Error::invalid("cherries live in (s-1)-graphs with s >= 3"));
    }
    let link = BigInt::from(binom::big(n as u64 - 1, s as u64 - 2));
    let per_pair = BigInt::from(t.saturating_sub(1)) * BigInt::from(2 * s - 3);
    let spent = (BigInt::from(d) + per_pair) * link;
    let ex = formulas::ex_value(MotifSpec::linear_path(2)?, n, s - 1)?.value;
    Ok(BigRational::from_integer(BigInt::from(gstar_size) - spent) - ex)
}
