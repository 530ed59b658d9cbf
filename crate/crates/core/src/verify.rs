//! Rainbow path and rainbow geodesic search, and whole-coloring verification.
//!
//! A rainbow walk always contains a rainbow path (drop the closed sub-walks),
//! so the search runs over states `(vertex, used colors)` and prunes a state
//! whenever the same vertex was already reached with a subset of its colors.
//! Strong mode runs the same search restricted to the geodesic DAG of the
//! pair, where every walk is a geodesic.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::{geodesic_arcs, Digraph};
use crate::error::{Error, Result};

/// Color sets are `u64` bitmasks.
pub const MAX_COLORS: usize = 64;

/// Total map from arc index to a color in `1..=c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcColoring {
    colors: Vec<u32>,
    num_colors: usize,
}

impl ArcColoring {
    pub fn new(colors: Vec<u32>, num_colors: usize) -> Result<Self> {
        if let Some((arc, &bad)) = colors
            .iter()
            .enumerate()
            .find(|&(_, &col)| col == 0 || col as usize > num_colors)
        {
            return Err(Error::InvalidColoring(format!(
                "arc {arc} has color {bad}, outside 1..={num_colors}"
            )));
        }
        Ok(ArcColoring { colors, num_colors })
    }

    /// Uses `max(colors)` as the color count.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let c = colors.iter().copied().max().unwrap_or(0) as usize;
        Self::new(colors, c)
    }

    /// Every arc gets its own color.
    pub fn all_distinct(m: usize) -> Self {
        ArcColoring {
            colors: (1..=m as u32).collect(),
            num_colors: m,
        }
    }

    pub fn uniform(m: usize, color: u32) -> Result<Self> {
        Self::new(vec![color; m], color as usize)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, arc: usize) -> u32 {
        self.colors[arc]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn arc_count(&self) -> usize {
        self.colors.len()
    }

    /// Number of distinct colors actually assigned.
    pub fn used_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn check_against(&self, d: &Digraph) -> Result<()> {
        if self.colors.len() != d.arc_count() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} arcs, digraph has {}",
                self.colors.len(),
                d.arc_count()
            )));
        }
        Ok(())
    }

    fn check_capacity(&self) -> Result<()> {
        if self.num_colors > MAX_COLORS {
            return Err(Error::ColorCapacity {
                colors: self.num_colors,
                max: MAX_COLORS,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Rainbow,
    Strong,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rainbow" => Ok(Mode::Rainbow),
            "strong" => Ok(Mode::Strong),
            other => Err(Error::InvalidColoring(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub from: usize,
    pub to: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub verdict: bool,
    /// Ordered pairs without a qualifying rainbow path, lexicographic.
    pub failures: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
}

/// Reusable state for the rainbow search.
///
/// Colors are read from a `u32` slice where `0` marks an uncolored arc.
/// Uncolored arcs add nothing to the used-color set but count against the
/// `max_len` budget, which makes the search an exact relaxation for partial
/// colorings: if it fails, no completion can succeed.
#[derive(Debug, Default)]
pub(crate) struct RainbowSearch {
    states: Vec<State>,
    frontier: Vec<usize>,
    next: Vec<usize>,
    seen: Vec<Vec<(u64, u32)>>,
}

#[derive(Debug, Clone, Copy)]
struct State {
    vertex: usize,
    mask: u64,
    free: u32,
    parent: usize,
    arc: usize,
}

const ROOT: usize = usize::MAX;

impl RainbowSearch {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Searches a `from -> to` walk whose colored arcs are pairwise distinct,
    /// using only arcs accepted by `allowed`, and whose total length (colored
    /// plus uncolored arcs) never exceeds `max_len`. Returns the arc sequence
    /// of a simple path on success.
    pub(crate) fn find(
        &mut self,
        d: &Digraph,
        colors: &[u32],
        from: usize,
        to: usize,
        max_len: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        if from == to {
            return Some(Vec::new());
        }
        let n = d.vertex_count();
        self.states.clear();
        self.frontier.clear();
        self.seen.iter_mut().for_each(Vec::clear);
        if self.seen.len() < n {
            self.seen.resize_with(n, Vec::new);
        }
        self.states.push(State {
            vertex: from,
            mask: 0,
            free: 0,
            parent: ROOT,
            arc: ROOT,
        });
        self.seen[from].push((0, 0));
        self.frontier.push(0);

        let mut depth = 0;
        while !self.frontier.is_empty() && depth < max_len {
            depth += 1;
            self.next.clear();
            for fi in 0..self.frontier.len() {
                let sid = self.frontier[fi];
                let st = self.states[sid];
                for &(head, arc) in d.out_arcs(st.vertex) {
                    if !allowed(arc) {
                        continue;
                    }
                    let col = colors[arc];
                    let (mask, free) = if col == 0 {
                        (st.mask, st.free + 1)
                    } else {
                        let bit = 1u64 << (col - 1);
                        if st.mask & bit != 0 {
                            continue;
                        }
                        (st.mask | bit, st.free)
                    };
                    if head == to {
                        self.states.push(State {
                            vertex: head,
                            mask,
                            free,
                            parent: sid,
                            arc,
                        });
                        return Some(self.extract(self.states.len() - 1, d));
                    }
                    let dominated = self.seen[head]
                        .iter()
                        .any(|&(m, f)| m & mask == m && f <= free);
                    if dominated {
                        continue;
                    }
                    self.seen[head].push((mask, free));
                    self.states.push(State {
                        vertex: head,
                        mask,
                        free,
                        parent: sid,
                        arc,
                    });
                    self.next.push(self.states.len() - 1);
                }
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        None
    }

    fn extract(&self, mut sid: usize, d: &Digraph) -> Vec<usize> {
        let mut arcs = Vec::new();
        while self.states[sid].parent != ROOT {
            arcs.push(self.states[sid].arc);
            sid = self.states[sid].parent;
        }
        arcs.reverse();
        erase_loops(d, arcs)
    }
}

/// Removes closed sub-walks, leaving a simple path with the same endpoints.
fn erase_loops(d: &Digraph, arcs: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(arcs.len());
    for arc in arcs {
        let (_, head) = d.arc(arc);
        // if head was already visited, cut back to that visit
        if let Some(pos) = out.iter().position(|&a| d.arc(a).0 == head) {
            out.truncate(pos);
            continue;
        }
        out.push(arc);
    }
    out
}

pub(crate) fn arcs_to_vertices(d: &Digraph, from: usize, arcs: &[usize]) -> Vec<usize> {
    let mut path = Vec::with_capacity(arcs.len() + 1);
    path.push(from);
    path.extend(arcs.iter().map(|&a| d.arc(a).1));
    path
}

fn check_pair(d: &Digraph, u: usize, v: usize) -> Result<()> {
    d.check_vertex(u)?;
    d.check_vertex(v)
}

fn prepare(d: &Digraph, col: &ArcColoring) -> Result<()> {
    col.check_against(d)?;
    col.check_capacity()
}

/// A rainbow `u -> v` path as a vertex sequence, if one exists.
pub fn exists_rainbow_path(
    d: &Digraph,
    col: &ArcColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    check_pair(d, u, v)?;
    prepare(d, col)?;
    let max_len = col.num_colors().min(d.vertex_count());
    let arcs = RainbowSearch::new().find(d, col.colors(), u, v, max_len, |_| true);
    Ok(arcs.map(|a| arcs_to_vertices(d, u, &a)))
}

/// A rainbow `u -> v` geodesic as a vertex sequence, if one exists.
pub fn exists_rainbow_geodesic(
    d: &Digraph,
    col: &ArcColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    check_pair(d, u, v)?;
    prepare(d, col)?;
    let dag = d.geodesic_dag(u, v)?;
    if dag.length == 1 {
        return Ok(Some(vec![u, v]));
    }
    let arcs =
        RainbowSearch::new().find(d, col.colors(), u, v, dag.length, |a| dag.contains_arc(a));
    Ok(arcs.map(|a| arcs_to_vertices(d, u, &a)))
}

/// Precomputed distances and geodesic DAGs of a strong digraph, shared by
/// repeated verifications of different colorings.
#[derive(Debug, Clone)]
pub struct Verifier<'a> {
    d: &'a Digraph,
    dist: Vec<Vec<usize>>,
    /// `dag_mask[u * n + v]` marks the arcs on some `u -> v` geodesic.
    dag_mask: Vec<Vec<bool>>,
}

impl<'a> Verifier<'a> {
    pub fn new(d: &'a Digraph) -> Result<Self> {
        if !d.is_strongly_connected() {
            return Err(Error::NotStronglyConnected);
        }
        let n = d.vertex_count();
        let raw = d.all_distances();
        let dist: Vec<Vec<usize>> = raw
            .iter()
            .map(|row| row.iter().map(|x| x.expect("strong")).collect())
            .collect();
        let mut dag_mask = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                let mut mask = vec![false; d.arc_count()];
                if u != v {
                    let to_v: Vec<Option<usize>> = (0..n).map(|x| raw[x][v]).collect();
                    for a in geodesic_arcs(d.arcs(), &raw[u], &to_v, dist[u][v]) {
                        mask[a] = true;
                    }
                }
                dag_mask.push(mask);
            }
        }
        Ok(Verifier { d, dist, dag_mask })
    }

    pub fn digraph(&self) -> &Digraph {
        self.d
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    pub(crate) fn on_geodesic(&self, u: usize, v: usize, arc: usize) -> bool {
        self.dag_mask[u * self.d.vertex_count() + v][arc]
    }

    /// Pair check over a raw color slice (`0` = uncolored), with at most
    /// `budget` colors available for the eventual coloring.
    pub(crate) fn pair_feasible(
        &self,
        search: &mut RainbowSearch,
        colors: &[u32],
        budget: usize,
        mode: Mode,
        u: usize,
        v: usize,
    ) -> Option<Vec<usize>> {
        let dist = self.dist[u][v];
        if dist == 1 {
            let arc = self.d.arc_index(u, v).expect("distance-1 pair is an arc");
            return Some(vec![arc]);
        }
        match mode {
            Mode::Rainbow => {
                let max_len = budget.min(self.d.vertex_count() - 1);
                search.find(self.d, colors, u, v, max_len, |_| true)
            }
            Mode::Strong => {
                if dist > budget {
                    return None;
                }
                let mask = &self.dag_mask[u * self.d.vertex_count() + v];
                search.find(self.d, colors, u, v, dist, |a| mask[a])
            }
        }
    }

    /// Stops at the first failing pair.
    pub fn is_connected(&self, col: &ArcColoring, mode: Mode) -> Result<bool> {
        prepare(self.d, col)?;
        let mut search = RainbowSearch::new();
        Ok(self.check_colors(&mut search, col.colors(), col.num_colors(), mode))
    }

    pub(crate) fn check_colors(
        &self,
        search: &mut RainbowSearch,
        colors: &[u32],
        budget: usize,
        mode: Mode,
    ) -> bool {
        let n = self.d.vertex_count();
        (0..n).all(|u| {
            (0..n).all(|v| {
                u == v
                    || self
                        .pair_feasible(search, colors, budget, mode, u, v)
                        .is_some()
            })
        })
    }

    /// Full report over all ordered pairs; sources are processed in
    /// parallel and merged in vertex order.
    pub fn report(
        &self,
        col: &ArcColoring,
        mode: Mode,
        with_witnesses: bool,
    ) -> Result<VerificationReport> {
        prepare(self.d, col)?;
        let n = self.d.vertex_count();
        let rows: Vec<Vec<(usize, Option<Vec<usize>>)>> = (0..n)
            .into_par_iter()
            .map(|u| {
                let mut search = RainbowSearch::new();
                (0..n)
                    .filter(|&v| v != u)
                    .map(|v| {
                        let found = self.pair_feasible(
                            &mut search,
                            col.colors(),
                            col.num_colors(),
                            mode,
                            u,
                            v,
                        );
                        (v, found.map(|arcs| arcs_to_vertices(self.d, u, &arcs)))
                    })
                    .collect()
            })
            .collect();

        let mut failures = Vec::new();
        let mut witnesses = Vec::new();
        for (u, row) in rows.into_iter().enumerate() {
            for (v, path) in row {
                match path {
                    Some(path) => witnesses.push(Witness {
                        from: u,
                        to: v,
                        path,
                    }),
                    None => failures.push((u, v)),
                }
            }
        }
        Ok(VerificationReport {
            mode,
            verdict: failures.is_empty(),
            failures,
            witnesses: with_witnesses.then_some(witnesses),
        })
    }
}

pub fn verify(
    d: &Digraph,
    col: &ArcColoring,
    mode: Mode,
    with_witnesses: bool,
) -> Result<VerificationReport> {
    Verifier::new(d)?.report(col, mode, with_witnesses)
}

pub fn is_rainbow_connected(d: &Digraph, col: &ArcColoring) -> Result<VerificationReport> {
    verify(d, col, Mode::Rainbow, true)
}

pub fn is_strong_rainbow_connected(d: &Digraph, col: &ArcColoring) -> Result<VerificationReport> {
    verify(d, col, Mode::Strong, true)
}

/// Checks that `path` is a directed path in `d` with pairwise distinct arc
/// colors, and in strong mode that its length is `d(from, to)`.
pub fn validate_witness(d: &Digraph, col: &ArcColoring, path: &[usize], mode: Mode) -> bool {
    let Some((&first, _)) = path.split_first() else {
        return false;
    };
    let last = *path.last().unwrap();
    let mut seen_vertices = BTreeSet::new();
    if !path
        .iter()
        .all(|&v| v < d.vertex_count() && seen_vertices.insert(v))
    {
        return false;
    }
    let mut used = BTreeSet::new();
    for w in path.windows(2) {
        match d.arc_index(w[0], w[1]) {
            Some(a) if used.insert(col.color(a)) => {}
            _ => return false,
        }
    }
    match mode {
        Mode::Rainbow => true,
        Mode::Strong => d
            .distances_from(first)
            .map(|dist| dist[last] == Some(path.len() - 1))
            .unwrap_or(false),
    }
}
