use crate::error::Result;
use crate::exec::{self, Execution};
use crate::model::{EdgeSet, HostGraph};
use crate::motif::search::{copy_through, first_copy, BitView, Pool};
use crate::motif::{find_copy, MotifSpec};

use super::{
    check_cap, regime, Budget, Limits, Meter, Problem, SolveConfig, SolveResult, SolveStatus, SolveWitness,
    TURAN_EDGE_CAP,
};

const FRONTIER_DEPTH: u32 = 5;

/// `ex(n, s, motif)`: the largest copy-free edge set of the host.
pub fn turan_exact(host: HostGraph, motif: MotifSpec, budget: Budget) -> Result<SolveResult> {
    turan_exact_with(host, motif, &SolveConfig { budget, ..SolveConfig::default() })
}

pub fn turan_exact_with(host: HostGraph, motif: MotifSpec, config: &SolveConfig) -> Result<SolveResult> {
    motif.validate_for(&host)?;
    let m = check_cap(host, config.edge_cap.unwrap_or(TURAN_EDGE_CAP).min(128))?;
    let pool = Pool::for_host(host)?;
    let all = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let finish = |status, bits: u128, nodes| -> Result<SolveResult> {
        let ranks = (0..m).filter(|&e| bits >> e & 1 == 1).map(|e| pool.rank_of(e)).collect();
        let set = EdgeSet::from_ranks(host, ranks)?;
        if status == SolveStatus::Proven {
            assert!(find_copy(&set, motif)?.is_none(), "Turán witness contains a copy of {motif}");
        }
        Ok(SolveResult {
            problem: Problem::Turan,
            n: host.n(),
            s: host.s(),
            motif,
            status,
            value: Some(set.len() as u64),
            witness: Some(SolveWitness::Family(set)),
            nodes_explored: nodes,
            budget: config.budget,
            regime: regime(Problem::Turan, motif, host),
        })
    };
    if motif.k == 1 {
        return finish(SolveStatus::Proven, 0, 1);
    }
    if first_copy(&pool, &BitView(all), motif, config.exec).is_none() {
        return finish(SolveStatus::Proven, all, 1);
    }

    let bb = Turan::new(&pool, motif, config.exec);
    // Any nonempty family can be relabeled to contain edge 0.
    let root = Node { chosen: 1, cand: bb.filter(1, all & !1), size: 1 };
    let mut frontier = Vec::new();
    let mut nodes = 0;
    bb.expand(root, FRONTIER_DEPTH, &mut frontier, &mut nodes);

    let limits = Limits::new(config.budget);
    let run = |node: Node, seed: Best| {
        let mut meter = Meter::new(&limits);
        let mut best = seed;
        let done = bb.dfs(node, &mut best, &mut meter);
        meter.flush();
        (best, meter.count, done)
    };
    let (first, first_nodes, first_done) = run(frontier[0], Best { size: 1, bits: 1, found: false });
    let seed = Best { found: false, ..first };
    let rest = exec::map_collect(config.exec, 1..frontier.len(), |i| run(frontier[i], seed));

    nodes += first_nodes + rest.iter().map(|r| r.1).sum::<u64>();
    let mut best = first;
    for (b, _, _) in &rest {
        if b.found && b.size > best.size {
            best = *b;
        }
    }
    let done = first_done && rest.iter().all(|r| r.2);
    let status = if done { SolveStatus::Proven } else { SolveStatus::BudgetExceeded };
    finish(status, best.bits, nodes)
}

#[derive(Clone, Copy)]
struct Node {
    chosen: u128,
    /// Undecided edges that can still be added without creating a copy.
    cand: u128,
    size: u32,
}

#[derive(Clone, Copy)]
struct Best {
    size: u32,
    bits: u128,
    /// Whether this task improved on its seed.
    found: bool,
}

struct Turan<'a> {
    pool: &'a Pool,
    motif: MotifSpec,
    /// For two-edge motifs: edges forming a copy together with each edge.
    conflicts: Option<Vec<u128>>,
}

impl<'a> Turan<'a> {
    fn new(pool: &'a Pool, motif: MotifSpec, exec: Execution) -> Self {
        let m = pool.len();
        let conflicts = (motif.k == 2).then(|| {
            exec::map_collect(exec, 0..m, |e| {
                (0..m)
                    .filter(|&f| f != e && copy_through(pool, &BitView(1 << e | 1 << f), motif, e).is_some())
                    .fold(0u128, |acc, f| acc | 1 << f)
            })
        });
        Turan { pool, motif, conflicts }
    }

    /// Candidates that stay addable next to `chosen`.
    fn filter(&self, chosen: u128, cand: u128) -> u128 {
        if let Some(conf) = &self.conflicts {
            let mut out = cand;
            let mut bits = chosen;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                out &= !conf[e];
                bits &= bits - 1;
            }
            return out;
        }
        let mut out = 0;
        let mut bits = cand;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if copy_through(self.pool, &BitView(chosen | 1 << c), self.motif, c).is_none() {
                out |= 1 << c;
            }
        }
        out
    }

    /// Upper bound on how many candidates can join together.
    fn bound(&self, cand: u128) -> u32 {
        let Some(conf) = &self.conflicts else {
            return cand.count_ones();
        };
        // Greedy clique cover of the conflict graph: at most one edge per
        // clique survives.
        let mut rest = cand;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique = 1u128 << v;
            let mut common = conf[v] & rest;
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                clique |= 1 << u;
                common &= conf[u];
            }
            rest &= !clique;
            cliques += 1;
        }
        cliques
    }

    fn children(&self, node: Node) -> (Node, Node) {
        let x = node.cand.trailing_zeros() as usize;
        let rest = node.cand & !(1u128 << x);
        let chosen = node.chosen | 1 << x;
        let take = Node { chosen, cand: self.include(chosen, x, rest), size: node.size + 1 };
        let skip = Node { cand: rest, ..node };
        (take, skip)
    }

    fn include(&self, chosen: u128, x: usize, rest: u128) -> u128 {
        match &self.conflicts {
            Some(conf) => rest & !conf[x],
            None => self.filter(chosen, rest),
        }
    }

    fn expand(&self, node: Node, depth: u32, out: &mut Vec<Node>, nodes: &mut u64) {
        if depth == 0 || node.cand == 0 {
            out.push(node);
            return;
        }
        *nodes += 1;
        let (take, skip) = self.children(node);
        self.expand(take, depth - 1, out, nodes);
        self.expand(skip, depth - 1, out, nodes);
    }

    /// Include-first branch-and-bound; `false` when the budget ran out.
    fn dfs(&self, node: Node, best: &mut Best, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        if node.cand == 0 {
            if node.size > best.size {
                *best = Best { size: node.size, bits: node.chosen, found: true };
            }
            return true;
        }
        if node.size + self.bound(node.cand) <= best.size {
            return true;
        }
        let (take, skip) = self.children(node);
        self.dfs(take, best, meter) && self.dfs(skip, best, meter)
    }
}
