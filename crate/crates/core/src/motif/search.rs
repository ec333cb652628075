//! Backtracking engine shared by the detectors and the exact solvers.
//!
//! Edges are addressed by colex rank and stored as `u128` vertex masks, so
//! hosts are limited to 128 vertices. A [`View`] decides which edges may be
//! used and what color each carries; the rainbow rule is enforced by never
//! admitting a second edge of a color already in the partial copy.
//!
//! Scratch searches report the copy whose edge-rank sequence is
//! lexicographically least. Searches through a fixed edge only report
//! existence (plus some witness), which is what the solvers need.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::model::HostGraph;

use super::{MotifKind, MotifSpec};

/// Largest host the engine accepts.
pub(crate) const MAX_VERTICES: u32 = 128;

pub(crate) struct Pool {
    n: u32,
    s: u32,
    masks: Vec<u128>,
    incidence: Vec<Vec<u32>>,
}

impl Pool {
    pub(crate) fn for_host(host: HostGraph) -> Result<Self> {
        if host.n() > MAX_VERTICES {
            return Err(Error::ResourceLimit(format!(
                "motif search supports at most {MAX_VERTICES} vertices, host has {}",
                host.n()
            )));
        }
        let count = host.materialized_edge_count()?;
        let mut masks = Vec::with_capacity(count);
        let mut incidence = vec![Vec::new(); host.n() as usize];
        for (i, e) in host.edges().enumerate() {
            masks.push(e.mask128());
            for &v in e.vertices() {
                incidence[v as usize].push(i as u32);
            }
        }
        Ok(Pool { n: host.n(), s: host.s(), masks, incidence })
    }

    pub(crate) fn len(&self) -> usize {
        self.masks.len()
    }

    pub(crate) fn mask(&self, e: usize) -> u128 {
        self.masks[e]
    }

    pub(crate) fn rank_of(&self, e: usize) -> u64 {
        e as u64
    }

    fn incident(&self, v: u32) -> &[u32] {
        &self.incidence[v as usize]
    }
}

/// Which edges a search may use and how they are colored.
pub(crate) trait View: Sync {
    fn active(&self, e: usize) -> bool;
    /// `None` means the edge takes no part in the rainbow rule.
    fn color(&self, e: usize) -> Option<u32>;
    /// Number of distinct colors in play, when known; used for pruning.
    fn palette(&self) -> Option<usize> {
        None
    }
}

pub(crate) struct SubsetView {
    active: Vec<bool>,
}

impl SubsetView {
    pub(crate) fn from_ranks(len: usize, ranks: &[u64]) -> Self {
        let mut active = vec![false; len];
        for &r in ranks {
            active[r as usize] = true;
        }
        SubsetView { active }
    }
}

impl View for SubsetView {
    fn active(&self, e: usize) -> bool {
        self.active[e]
    }
    fn color(&self, _e: usize) -> Option<u32> {
        None
    }
}

pub(crate) struct ColoringView<'a> {
    colors: &'a [u32],
    palette: usize,
}

impl<'a> ColoringView<'a> {
    pub(crate) fn new(colors: &'a [u32]) -> Self {
        let palette = colors.iter().max().map_or(0, |&c| c as usize + 1);
        ColoringView { colors, palette }
    }
}

impl View for ColoringView<'_> {
    fn active(&self, _e: usize) -> bool {
        true
    }
    fn color(&self, e: usize) -> Option<u32> {
        Some(self.colors[e])
    }
    fn palette(&self) -> Option<usize> {
        Some(self.palette)
    }
}

/// Edges given by a bitset over indices (hosts with at most 128 edges).
pub(crate) struct BitView(pub u128);

impl View for BitView {
    fn active(&self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }
    fn color(&self, _e: usize) -> Option<u32> {
        None
    }
}

/// The colored prefix `0..=last` of a partial coloring in rank order.
pub(crate) struct PrefixView<'a> {
    pub colors: &'a [u32],
    pub last: usize,
}

impl View for PrefixView<'_> {
    fn active(&self, e: usize) -> bool {
        e <= self.last
    }
    fn color(&self, e: usize) -> Option<u32> {
        Some(self.colors[e])
    }
}

/// Edge indices in witness order plus Berge defining vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RawCopy {
    pub edges: Vec<usize>,
    pub defining: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Tail,
    Head,
}

fn bits(mut m: u128) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros();
            m &= m - 1;
            Some(v)
        }
    })
}

/// Fewest fresh vertices a loose extension by `m` edges can add at one end.
fn loose_fresh(m: usize, s: u32) -> u32 {
    (m / 2) as u32 * s + (m % 2) as u32
}

/// The copy with lexicographically least edge-rank sequence, if any.
pub(crate) fn first_copy<V: View>(pool: &Pool, view: &V, spec: MotifSpec, exec: Execution) -> Option<RawCopy> {
    let k = spec.k as usize;
    exec::find_map_first(exec, 0..pool.len(), |e1| {
        if !view.active(e1) {
            return None;
        }
        match spec.kind {
            MotifKind::Matching => Matching::new(pool, view, k).grow_from(e1),
            MotifKind::BergePath | MotifKind::BergeCycle => {
                Berge::new(pool, view, spec.kind == MotifKind::BergeCycle, k, true).grow_from(e1)
            }
            _ => Chain::new(pool, view, spec.kind, k, true).grow_from(e1),
        }
    })
}

/// Some copy that uses edge `x`. `x` itself is taken regardless of
/// `view.active`, but its color counts toward the rainbow rule.
pub(crate) fn copy_through<V: View>(pool: &Pool, view: &V, spec: MotifSpec, x: usize) -> Option<RawCopy> {
    let k = spec.k as usize;
    match spec.kind {
        MotifKind::Matching => Matching::new(pool, view, k).through(x),
        MotifKind::BergePath | MotifKind::BergeCycle => {
            Berge::new(pool, view, spec.kind == MotifKind::BergeCycle, k, false).through(x)
        }
        _ => Chain::new(pool, view, spec.kind, k, false).through(x),
    }
}

/// Positions of a fixed edge worth trying in a path: reversal maps
/// position `i` to `k - 1 - i`.
fn path_plans(k: usize) -> impl Iterator<Item = Vec<Dir>> {
    (0..=(k - 1) / 2).map(move |i| {
        let mut plan = vec![Dir::Tail; k - 1 - i];
        plan.extend(std::iter::repeat_n(Dir::Head, i));
        plan
    })
}

// ---------------------------------------------------------------------------
// Linear and loose paths and cycles.

struct Chain<'a, V: View> {
    pool: &'a Pool,
    view: &'a V,
    linear: bool,
    cycle: bool,
    k: usize,
    /// Scratch mode: sorted candidates, and cycle edges above the first.
    scratch: bool,
    plan: Vec<Dir>,
    edges: VecDeque<usize>,
    colors: Vec<u32>,
}

impl<'a, V: View> Chain<'a, V> {
    fn new(pool: &'a Pool, view: &'a V, kind: MotifKind, k: usize, scratch: bool) -> Self {
        Chain {
            pool,
            view,
            linear: matches!(kind, MotifKind::LinearPath | MotifKind::LinearCycle),
            cycle: kind.is_cycle(),
            k,
            scratch,
            plan: Vec::new(),
            edges: VecDeque::with_capacity(k),
            colors: Vec::with_capacity(k),
        }
    }

    fn grow_from(mut self, e1: usize) -> Option<RawCopy> {
        let steps = if self.cycle { self.k - 2 } else { self.k - 1 };
        self.plan = vec![Dir::Tail; steps];
        self.run(e1)
    }

    fn through(mut self, x: usize) -> Option<RawCopy> {
        if self.cycle {
            self.plan = vec![Dir::Tail; self.k - 2];
            return self.run(x);
        }
        for plan in path_plans(self.k) {
            self.plan = plan;
            if let Some(found) = self.run(x) {
                return Some(found);
            }
        }
        None
    }

    fn run(&mut self, start: usize) -> Option<RawCopy> {
        self.edges.clear();
        self.colors.clear();
        if !self.push(Dir::Tail, start) {
            return None;
        }
        if self.step(0) {
            Some(RawCopy { edges: self.edges.iter().copied().collect(), defining: Vec::new() })
        } else {
            None
        }
    }

    fn proper(&self, meet: u32) -> bool {
        if self.linear {
            meet == 1
        } else {
            meet >= 1 && meet < self.pool.s
        }
    }

    /// Adds `e` unless its color is already used.
    fn push(&mut self, dir: Dir, e: usize) -> bool {
        if let Some(c) = self.view.color(e) {
            if self.colors.contains(&c) {
                return false;
            }
            self.colors.push(c);
        }
        match dir {
            Dir::Tail => self.edges.push_back(e),
            Dir::Head => self.edges.push_front(e),
        }
        true
    }

    fn pop(&mut self, dir: Dir) {
        let e = match dir {
            Dir::Tail => self.edges.pop_back(),
            Dir::Head => self.edges.pop_front(),
        }
        .expect("pop on empty chain");
        if let Some(c) = self.view.color(e) {
            let at = self.colors.iter().rposition(|&x| x == c).expect("color was pushed");
            self.colors.remove(at);
        }
    }

    fn union_except(&self, skip: &[usize]) -> u128 {
        self.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !skip.contains(i))
            .fold(0, |acc, (_, &e)| acc | self.pool.mask(e))
    }

    fn fresh_needed(&self, step: usize) -> u32 {
        let s = self.pool.s;
        let rest = &self.plan[step..];
        let tail = rest.iter().filter(|&&d| d == Dir::Tail).count();
        let head = rest.len() - tail;
        match (self.linear, self.cycle) {
            (true, false) => rest.len() as u32 * (s - 1),
            (true, true) => rest.len() as u32 * (s - 1) + (s - 2),
            (false, _) => loose_fresh(tail, s) + loose_fresh(head, s),
        }
    }

    fn viable(&self, e: usize) -> bool {
        self.view.active(e)
            && !self.edges.contains(&e)
            && !(self.scratch && self.cycle && e <= self.edges[0])
            && self.view.color(e).is_none_or(|c| !self.colors.contains(&c))
    }

    fn step(&mut self, step: usize) -> bool {
        if step == self.plan.len() {
            return !self.cycle || self.close();
        }
        let used = self.union_except(&[]);
        let free = self.pool.n - used.count_ones();
        if free < self.fresh_needed(step) {
            return false;
        }
        let left = self.plan.len() - step + self.cycle as usize;
        if let Some(p) = self.view.palette() {
            if p - self.colors.len() < left {
                return false;
            }
        }
        let dir = self.plan[step];
        let last = self.edges.len() - 1;
        let (end_pos, end) = match dir {
            Dir::Tail => (last, self.edges[last]),
            Dir::Head => (0, self.edges[0]),
        };
        let prev = self.union_except(&[end_pos]);
        let cands = self.candidates(end, prev, None);
        for f in cands {
            if self.push(dir, f) {
                if self.step(step + 1) {
                    return true;
                }
                self.pop(dir);
            }
        }
        false
    }

    /// Edges meeting `end` properly and missing `avoid`; with `front`, they
    /// must also meet `front` properly (cycle closure).
    fn candidates(&self, end: usize, avoid: u128, front: Option<usize>) -> Vec<usize> {
        let em = self.pool.mask(end);
        let mut out = Vec::new();
        for v in bits(em & !avoid) {
            for &f in self.pool.incident(v) {
                let f = f as usize;
                let fm = self.pool.mask(f);
                let common = fm & em;
                if fm & avoid != 0 || common.trailing_zeros() != v || !self.proper(common.count_ones()) {
                    continue;
                }
                if let Some(front) = front {
                    if !self.proper((fm & self.pool.mask(front)).count_ones()) {
                        continue;
                    }
                }
                if self.viable(f) {
                    out.push(f);
                }
            }
        }
        if self.scratch {
            out.sort_unstable();
        }
        out
    }

    fn close(&mut self) -> bool {
        let last = self.edges.len() - 1;
        let (front, end) = (self.edges[0], self.edges[last]);
        let middle = self.union_except(&[0, last]);
        for f in self.candidates(end, middle, Some(front)) {
            if self.k == 3 && !self.triangle_ok(front, end, f) {
                continue;
            }
            if self.push(Dir::Tail, f) {
                return true;
            }
        }
        false
    }

    /// The three pairwise intersections of a 3-cycle need distinct
    /// representatives.
    fn triangle_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let (a, b, c) = (self.pool.mask(a), self.pool.mask(b), self.pool.mask(c));
        let (ab, bc, ca) = (a & b, b & c, c & a);
        bits(ab).any(|x| bits(bc & !(1 << x)).any(|y| ca & !(1 << x) & !(1 << y) != 0))
    }
}

// ---------------------------------------------------------------------------
// Berge paths and cycles: alternating vertex/edge sequences.

struct Berge<'a, V: View> {
    pool: &'a Pool,
    view: &'a V,
    cycle: bool,
    k: usize,
    /// Scratch mode: exact lexicographic minimum via branch and bound.
    scratch: bool,
    plan: Vec<Dir>,
    edges: VecDeque<usize>,
    verts: VecDeque<u32>,
    used: u128,
    colors: Vec<u32>,
    best: Option<RawCopy>,
}

impl<'a, V: View> Berge<'a, V> {
    fn new(pool: &'a Pool, view: &'a V, cycle: bool, k: usize, scratch: bool) -> Self {
        Berge {
            pool,
            view,
            cycle,
            k,
            scratch,
            plan: Vec::new(),
            edges: VecDeque::with_capacity(k),
            verts: VecDeque::with_capacity(k + 1),
            used: 0,
            colors: Vec::with_capacity(k),
            best: None,
        }
    }

    fn grow_from(mut self, e1: usize) -> Option<RawCopy> {
        let steps = if self.cycle { self.k - 2 } else { self.k - 1 };
        self.plan = vec![Dir::Tail; steps];
        self.run(e1);
        self.best
    }

    fn through(mut self, x: usize) -> Option<RawCopy> {
        if self.cycle {
            self.plan = vec![Dir::Tail; self.k - 2];
            self.run(x);
            return self.best;
        }
        for plan in path_plans(self.k) {
            self.plan = plan;
            if self.run(x) {
                break;
            }
        }
        self.best
    }

    /// Tries every ordered pair of defining vertices in `start`.
    fn run(&mut self, start: usize) -> bool {
        let m = self.pool.mask(start);
        let color = self.view.color(start);
        self.edges.clear();
        self.edges.push_back(start);
        self.colors.clear();
        self.colors.extend(color);
        for a in bits(m) {
            for b in bits(m & !(1 << a)) {
                self.verts.clear();
                self.verts.extend([a, b]);
                self.used = (1 << a) | (1 << b);
                if self.step(0) && !self.scratch {
                    return true;
                }
            }
        }
        false
    }

    fn record(&mut self) -> bool {
        let edges: Vec<usize> = self.edges.iter().copied().collect();
        if self.best.as_ref().is_none_or(|b| edges < b.edges) {
            self.best = Some(RawCopy { edges, defining: self.verts.iter().copied().collect() });
        }
        true
    }

    /// In scratch mode: would placing `f` next make the prefix worse than
    /// the incumbent?
    fn beaten(&self, f: usize) -> bool {
        let Some(best) = &self.best else { return false };
        let prefix = self.edges.iter().copied().chain(std::iter::once(f));
        for (p, &b) in prefix.zip(&best.edges) {
            if p != b {
                return p > b;
            }
        }
        false
    }

    fn viable(&self, f: usize) -> bool {
        self.view.active(f)
            && !self.edges.contains(&f)
            && !(self.scratch && self.cycle && f <= self.edges[0])
            && self.view.color(f).is_none_or(|c| !self.colors.contains(&c))
    }

    fn step(&mut self, step: usize) -> bool {
        if step == self.plan.len() {
            return if self.cycle { self.close() } else { self.record() };
        }
        let remaining = self.plan.len() - step;
        if self.pool.n - self.used.count_ones() < remaining as u32 {
            return false;
        }
        if let Some(p) = self.view.palette() {
            if p - self.colors.len() < remaining + self.cycle as usize {
                return false;
            }
        }
        let dir = self.plan[step];
        let w = match dir {
            Dir::Tail => *self.verts.back().expect("nonempty"),
            Dir::Head => *self.verts.front().expect("nonempty"),
        };
        let mut found = false;
        for i in 0..self.pool.incident(w).len() {
            let f = self.pool.incident(w)[i] as usize;
            if !self.viable(f) {
                continue;
            }
            if self.scratch && self.beaten(f) {
                break;
            }
            let fresh = self.pool.mask(f) & !self.used;
            if fresh == 0 {
                continue;
            }
            let color = self.view.color(f);
            self.colors.extend(color);
            for u in bits(fresh) {
                self.used |= 1 << u;
                match dir {
                    Dir::Tail => {
                        self.edges.push_back(f);
                        self.verts.push_back(u);
                    }
                    Dir::Head => {
                        self.edges.push_front(f);
                        self.verts.push_front(u);
                    }
                }
                let hit = self.step(step + 1);
                match dir {
                    Dir::Tail => {
                        self.edges.pop_back();
                        self.verts.pop_back();
                    }
                    Dir::Head => {
                        self.edges.pop_front();
                        self.verts.pop_front();
                    }
                }
                self.used &= !(1 << u);
                if hit {
                    found = true;
                    if !self.scratch {
                        break;
                    }
                }
            }
            if color.is_some() {
                self.colors.pop();
            }
            if found && !self.scratch {
                return true;
            }
        }
        found
    }

    fn close(&mut self) -> bool {
        let first = *self.verts.front().expect("nonempty");
        let last = *self.verts.back().expect("nonempty");
        let need = (1u128 << first) | (1u128 << last);
        let mut found = false;
        for i in 0..self.pool.incident(last).len() {
            let f = self.pool.incident(last)[i] as usize;
            if self.pool.mask(f) & need != need || !self.viable(f) {
                continue;
            }
            if self.scratch && self.beaten(f) {
                break;
            }
            self.edges.push_back(f);
            found = self.record();
            self.edges.pop_back();
            break;
        }
        found
    }
}

// ---------------------------------------------------------------------------
// Matchings.

struct Matching<'a, V: View> {
    pool: &'a Pool,
    view: &'a V,
    k: usize,
    edges: Vec<usize>,
    colors: Vec<u32>,
}

impl<'a, V: View> Matching<'a, V> {
    fn new(pool: &'a Pool, view: &'a V, k: usize) -> Self {
        Matching { pool, view, k, edges: Vec::with_capacity(k), colors: Vec::with_capacity(k) }
    }

    fn grow_from(self, e1: usize) -> Option<RawCopy> {
        self.through_from(e1, e1 + 1)
    }

    fn through(self, x: usize) -> Option<RawCopy> {
        self.through_from(x, 0)
    }

    fn through_from(mut self, x: usize, lo: usize) -> Option<RawCopy> {
        self.edges.push(x);
        self.colors.extend(self.view.color(x));
        let pinned = x;
        if self.grow(lo, self.pool.mask(x), pinned) {
            let mut edges = self.edges;
            edges.sort_unstable();
            Some(RawCopy { edges, defining: Vec::new() })
        } else {
            None
        }
    }

    fn grow(&mut self, lo: usize, used: u128, pinned: usize) -> bool {
        let left = self.k - self.edges.len();
        if left == 0 {
            return true;
        }
        if self.pool.n - used.count_ones() < left as u32 * self.pool.s {
            return false;
        }
        if let Some(p) = self.view.palette() {
            if p - self.colors.len() < left {
                return false;
            }
        }
        for f in lo..self.pool.len() {
            let fm = self.pool.mask(f);
            if f == pinned || fm & used != 0 || !self.view.active(f) {
                continue;
            }
            let color = self.view.color(f);
            if color.is_some_and(|c| self.colors.contains(&c)) {
                continue;
            }
            self.edges.push(f);
            self.colors.extend(color);
            if self.grow(f + 1, used | fm, pinned) {
                return true;
            }
            self.edges.pop();
            if color.is_some() {
                self.colors.pop();
            }
        }
        false
    }
}
