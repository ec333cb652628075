use crate::error::{Error, Result};
use crate::exec;
use crate::model::{Coloring, HostGraph};
use crate::motif::search::{copy_through, first_copy, BitView, Pool, PrefixView};
use crate::motif::{find_rainbow, MotifSpec};

use super::{
    check_cap, regime, Budget, Limits, Meter, Problem, SolveConfig, SolveResult, SolveStatus, SolveWitness,
    AR_EDGE_CAP,
};

const FRONTIER_DEPTH: usize = 5;

/// `ar(n, s, motif)`: one more than the largest number of colors in a
/// rainbow-free surjective coloring.
pub fn ar_exact(host: HostGraph, motif: MotifSpec, budget: Budget) -> Result<SolveResult> {
    ar_exact_with(host, motif, &SolveConfig { budget, ..SolveConfig::default() })
}

pub fn ar_exact_with(host: HostGraph, motif: MotifSpec, config: &SolveConfig) -> Result<SolveResult> {
    motif.validate_for(&host)?;
    let m = check_cap(host, config.edge_cap.unwrap_or(AR_EDGE_CAP).min(128))?;
    let pool = Pool::for_host(host)?;
    let result = |status, value: Option<u64>, colors: Option<Vec<u32>>, nodes| -> Result<SolveResult> {
        let witness = match colors {
            Some(c) => {
                let coloring = Coloring::new(host, c)?;
                if status == SolveStatus::Proven {
                    assert!(find_rainbow(&coloring, motif)?.is_none(), "anti-Ramsey witness has a rainbow {motif}");
                }
                Some(SolveWitness::Coloring(coloring))
            }
            None => None,
        };
        Ok(SolveResult {
            problem: Problem::AntiRamsey,
            n: host.n(),
            s: host.s(),
            motif,
            status,
            value,
            witness,
            nodes_explored: nodes,
            budget: config.budget,
            regime: regime(Problem::AntiRamsey, motif, host),
        })
    };
    let all = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    if first_copy(&pool, &BitView(all), motif, config.exec).is_none() {
        return result(SolveStatus::Unattainable, None, None, 1);
    }
    if motif.k == 1 {
        // A single edge is always rainbow.
        return result(SolveStatus::Proven, Some(1), None, 1);
    }

    let search = Partition { pool: &pool, motif, m };
    let mut frontier = Vec::new();
    let mut nodes = 0;
    search.expand(&mut vec![0; m], 0, 0, FRONTIER_DEPTH.min(m), &mut frontier, &mut nodes);

    let limits = Limits::new(config.budget);
    let run = |task: &Task, seed: &Best| {
        let mut meter = Meter::new(&limits);
        let mut best = seed.clone();
        let mut colors = task.colors.clone();
        let done = search.dfs(&mut colors, task.depth, task.used, &mut best, &mut meter);
        meter.flush();
        (best, meter.count, done)
    };
    let (first, first_nodes, first_done) = run(&frontier[0], &Best { used: 0, colors: Vec::new() });
    let rest = exec::map_collect(config.exec, 1..frontier.len(), |i| run(&frontier[i], &first));

    nodes += first_nodes + rest.iter().map(|r| r.1).sum::<u64>();
    let mut best = first;
    for (b, _, _) in rest.iter() {
        if b.used > best.used {
            best = b.clone();
        }
    }
    let done = first_done && rest.iter().all(|r| r.2);
    let status = if done { SolveStatus::Proven } else { SolveStatus::BudgetExceeded };
    let colors = (!best.colors.is_empty()).then_some(best.colors);
    result(status, Some(best.used as u64 + 1), colors, nodes)
}

/// Certifies `ar >= c + 1` for a rainbow-free coloring with `c` colors.
pub fn ar_lower_certificate(coloring: &Coloring, motif: MotifSpec) -> Result<u32> {
    match find_rainbow(coloring, motif)? {
        Some(w) => Err(Error::CertificateRefuted { witness: Box::new(w) }),
        None => Ok(coloring.num_colors()),
    }
}

struct Task {
    colors: Vec<u32>,
    depth: usize,
    used: u32,
}

#[derive(Clone)]
struct Best {
    used: u32,
    /// Empty until a complete coloring beats the seed.
    colors: Vec<u32>,
}

/// Restricted-growth colorings in rank order with rainbow pruning.
struct Partition<'a> {
    pool: &'a Pool,
    motif: MotifSpec,
    m: usize,
}

impl Partition<'_> {
    /// Colors to try at the next edge: a fresh one first, then old ones.
    fn choices(used: u32) -> impl Iterator<Item = u32> {
        std::iter::once(used).chain(0..used)
    }

    fn rainbow_free(&self, colors: &[u32], i: usize) -> bool {
        copy_through(self.pool, &PrefixView { colors, last: i }, self.motif, i).is_none()
    }

    fn expand(&self, colors: &mut Vec<u32>, i: usize, used: u32, depth: usize, out: &mut Vec<Task>, nodes: &mut u64) {
        if i == depth {
            out.push(Task { colors: colors.clone(), depth: i, used });
            return;
        }
        *nodes += 1;
        for c in Self::choices(used) {
            colors[i] = c;
            if self.rainbow_free(colors, i) {
                self.expand(colors, i + 1, used + u32::from(c == used), depth, out, nodes);
            }
        }
        colors[i] = 0;
    }

    /// `false` when the budget ran out.
    fn dfs(&self, colors: &mut Vec<u32>, i: usize, used: u32, best: &mut Best, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        if i == self.m {
            if used > best.used {
                *best = Best { used, colors: colors.clone() };
            }
            return true;
        }
        if used + (self.m - i) as u32 <= best.used {
            return true;
        }
        for c in Self::choices(used) {
            colors[i] = c;
            if self.rainbow_free(colors, i) && !self.dfs(colors, i + 1, used + u32::from(c == used), best, meter) {
                return false;
            }
        }
        colors[i] = 0;
        true
    }
}
