use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::model::{Coloring, HostGraph};
use crate::motif::{find_rainbow_with, MotifSpec};

/// Largest banded table the sampler will build.
const MAX_TABLE: usize = 20_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub n: u32,
    pub s: u32,
    pub motif: MotifSpec,
    pub colors: u32,
    pub trials: u64,
    pub seed: u64,
    pub hits: u64,
    pub fraction: f64,
}

/// Fraction of uniformly random surjective `c`-colorings that contain a
/// rainbow copy. Trial `i` draws from ChaCha8 seeded with `seed` on stream
/// `i`, so the estimate depends only on `(seed, trials)`.
pub fn rainbow_probability(host: HostGraph, motif: MotifSpec, c: u32, trials: u64, seed: u64) -> Result<Estimate> {
    rainbow_probability_with(host, motif, c, trials, seed, Execution::default())
}

pub fn rainbow_probability_with(
    host: HostGraph,
    motif: MotifSpec,
    c: u32,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Estimate> {
    motif.validate_for(&host)?;
    let m = host.materialized_edge_count()?;
    if c == 0 || trials == 0 {
        return Err(Error::invalid("need c >= 1 and trials >= 1"));
    }
    if c as usize > m {
        return Err(Error::invalid(format!("{c} colors exceed the {m} edges of {host}")));
    }
    let sampler = Surjections::new(m, c as usize)?;
    let trials_usize = usize::try_from(trials).map_err(|_| Error::invalid("too many trials"))?;
    let hits = exec::map_collect(exec, 0..trials_usize, |i| -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let coloring = Coloring::new(host, sampler.draw(&mut rng))?;
        Ok(find_rainbow_with(&coloring, motif, Execution::Sequential)?.is_some())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?
    .into_iter()
    .filter(|&h| h)
    .count() as u64;
    Ok(Estimate {
        n: host.n(),
        s: host.s(),
        motif,
        colors: c,
        trials,
        seed,
        hits,
        fraction: hits as f64 / trials as f64,
    })
}

/// Exact uniform sampler for surjections from `m` items onto `c` colors.
///
/// `ln F(r, j)` counts the ways to color `r` remaining items so that `j`
/// still-missing colors all appear:
/// `F(r, j) = (c - j) F(r-1, j) + j F(r-1, j-1)`. Only the band of states
/// reachable from `(m, c)` is stored.
struct Surjections {
    m: usize,
    c: usize,
    rows: Vec<(usize, Vec<f64>)>,
}

fn log_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let hi = a.max(b);
    hi + ((a - hi).exp() + (b - hi).exp()).ln()
}

impl Surjections {
    fn new(m: usize, c: usize) -> Result<Self> {
        let width = c.min(m - c) + 1;
        if width.saturating_mul(m + 1) > MAX_TABLE {
            return Err(Error::ResourceLimit(format!("sampling {c} of {m} colors needs too large a table")));
        }
        let mut rows: Vec<(usize, Vec<f64>)> = Vec::with_capacity(m + 1);
        for r in 0..=m {
            let lo = c.saturating_sub(m - r);
            let hi = c.min(r);
            let row = (lo..=hi)
                .map(|j| {
                    if r == 0 {
                        return if j == 0 { 0.0 } else { f64::NEG_INFINITY };
                    }
                    let prev = |jj: usize| Self::lookup(&rows[r - 1], jj);
                    let keep = if c > j { ((c - j) as f64).ln() + prev(j) } else { f64::NEG_INFINITY };
                    let fill = if j > 0 { (j as f64).ln() + prev(j - 1) } else { f64::NEG_INFINITY };
                    log_add(keep, fill)
                })
                .collect();
            rows.push((lo, row));
        }
        Ok(Surjections { m, c, rows })
    }

    fn lookup(row: &(usize, Vec<f64>), j: usize) -> f64 {
        j.checked_sub(row.0)
            .and_then(|i| row.1.get(i).copied())
            .unwrap_or(f64::NEG_INFINITY)
    }

    fn draw(&self, rng: &mut impl Rng) -> Vec<u32> {
        let mut missing: Vec<u32> = (0..self.c as u32).collect();
        let mut used: Vec<u32> = Vec::with_capacity(self.c);
        let mut out = Vec::with_capacity(self.m);
        for r in (1..=self.m).rev() {
            let j = missing.len();
            let total = Self::lookup(&self.rows[r], j);
            let keep = if used.is_empty() {
                f64::NEG_INFINITY
            } else {
                (used.len() as f64).ln() + Self::lookup(&self.rows[r - 1], j)
            };
            let p_keep = (keep - total).exp();
            if rng.gen::<f64>() < p_keep {
                out.push(used[rng.gen_range(0..used.len())]);
            } else {
                let fresh = missing.swap_remove(rng.gen_range(0..missing.len()));
                used.push(fresh);
                out.push(fresh);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_surjective() {
        let s = Surjections::new(10, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let d = s.draw(&mut rng);
            let mut seen = [false; 4];
            d.iter().for_each(|&c| seen[c as usize] = true);
            assert!(seen.iter().all(|&b| b));
        }
    }

    #[test]
    fn draws_are_uniform_on_a_small_case() {
        // 36 surjections of 4 items onto 3 colors.
        let s = Surjections::new(4, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut counts = std::collections::HashMap::new();
        let draws = 36_000;
        for _ in 0..draws {
            *counts.entry(s.draw(&mut rng)).or_insert(0u32) += 1;
        }
        assert_eq!(counts.len(), 36);
        for &v in counts.values() {
            assert!((800..1200).contains(&v), "count {v} far from 1000");
        }
    }
}
