//! Exact `rc*` / `src*` by incremental backtracking over arc colorings.
//!
//! For each candidate color count `c`, starting at the diameter, arcs are
//! colored in index order with first-use canonical colors (arc `j` may take
//! at most one more than the largest color among arcs `< j`). After every
//! assignment the pairs whose candidate paths touch the new arc are
//! re-checked against the partial coloring, treating uncolored arcs as fresh
//! colors; a pair that already has no chance prunes the branch. Complete
//! assignments are accepted only by the verifier.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::format::write_coloring;
use crate::verify::{ArcColoring, Mode, RainbowSearch, Verifier, MAX_COLORS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Rc,
    Src,
}

impl Target {
    pub fn mode(self) -> Mode {
        match self {
            Target::Rc => Mode::Rainbow,
            Target::Src => Mode::Strong,
        }
    }
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rc" => Ok(Target::Rc),
            "src" => Ok(Target::Src),
            other => Err(Error::Hypothesis(format!("unknown target {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    /// The color cap stopped the search before a feasible count was found.
    Bounds,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_colors: usize,
    /// Maximum number of color assignments tried, over all color counts.
    pub node_budget: u64,
    pub find_certificate: bool,
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_colors: MAX_COLORS,
            node_budget: DEFAULT_NODE_BUDGET,
            find_certificate: true,
        }
    }
}

impl SolveLimits {
    pub fn with_budget(node_budget: u64) -> Self {
        SolveLimits {
            node_budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub colorings_tested: u64,
    /// Pair searches run, both for pruning and for complete colorings.
    pub pair_checks: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub target: Target,
    pub status: Status,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub stats: SolveStats,
    pub certificate: Option<ArcColoring>,
}

impl SolveResult {
    /// `{target, status, value?, lower, upper, nodes, colorings_tested,
    /// pair_checks, certificate?}` with the certificate as a coloring file.
    pub fn to_json(&self, d: &Digraph) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "target": self.target,
            "status": self.status,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.stats.nodes,
            "colorings_tested": self.stats.colorings_tested,
            "pair_checks": self.stats.pair_checks,
        });
        if let Some(v) = self.value {
            obj["value"] = v.into();
        }
        if let Some(cert) = &self.certificate {
            obj["certificate"] = write_coloring(d, cert).into();
        }
        obj
    }
}

pub fn exact_rc(d: &Digraph, limits: &SolveLimits) -> Result<SolveResult> {
    solve(d, Target::Rc, limits)
}

pub fn exact_src(d: &Digraph, limits: &SolveLimits) -> Result<SolveResult> {
    solve(d, Target::Src, limits)
}

pub fn solve(d: &Digraph, target: Target, limits: &SolveLimits) -> Result<SolveResult> {
    if d.vertex_count() < 2 {
        return Err(Error::InvalidDigraph(
            "trivial digraph has no rainbow number".into(),
        ));
    }
    if limits.node_budget == 0 || limits.max_colors == 0 {
        return Err(Error::Hypothesis("solver limits must be positive".into()));
    }
    let verifier = Verifier::new(d)?;
    let m = d.arc_count();
    let mut lower = verifier.diameter().max(1);
    // every arc distinct is strongly rainbow connected
    let upper = m;
    let cap = limits.max_colors.min(MAX_COLORS).min(upper);

    let mut search = Backtrack::new(&verifier, target.mode(), limits.node_budget);
    let mut c = lower;
    while c <= cap {
        match search.run(c) {
            Outcome::Found(colors) => {
                let certificate = limits
                    .find_certificate
                    .then(|| ArcColoring::new(colors, c).expect("canonical colors"));
                return Ok(SolveResult {
                    target,
                    status: Status::Exact,
                    value: Some(c),
                    lower: c,
                    upper: c,
                    stats: search.stats,
                    certificate,
                });
            }
            Outcome::Infeasible => {
                lower = c + 1;
                c += 1;
            }
            Outcome::Budget => {
                return Ok(SolveResult {
                    target,
                    status: Status::BudgetExceeded,
                    value: None,
                    lower,
                    upper,
                    stats: search.stats,
                    certificate: None,
                });
            }
        }
    }
    if lower == upper {
        // the all-distinct coloring is the answer but exceeds the search cap
        return Ok(SolveResult {
            target,
            status: Status::Exact,
            value: Some(upper),
            lower,
            upper,
            stats: search.stats,
            certificate: (limits.find_certificate && upper <= MAX_COLORS)
                .then(|| ArcColoring::all_distinct(m)),
        });
    }
    Ok(SolveResult {
        target,
        status: Status::Bounds,
        value: None,
        lower,
        upper,
        stats: search.stats,
        certificate: None,
    })
}

enum Outcome {
    Found(Vec<u32>),
    Infeasible,
    Budget,
}

struct Backtrack<'v, 'd> {
    verifier: &'v Verifier<'d>,
    mode: Mode,
    budget: u64,
    stats: SolveStats,
    search: RainbowSearch,
    colors: Vec<u32>,
    /// Pairs to re-check after coloring each arc, for the current `c`.
    affected: Vec<Vec<(usize, usize)>>,
    c: usize,
}

impl<'v, 'd> Backtrack<'v, 'd> {
    fn new(verifier: &'v Verifier<'d>, mode: Mode, budget: u64) -> Self {
        let m = verifier.digraph().arc_count();
        Backtrack {
            verifier,
            mode,
            budget,
            stats: SolveStats::default(),
            search: RainbowSearch::new(),
            colors: vec![0; m],
            affected: Vec::new(),
            c: 0,
        }
    }

    fn prepare(&mut self, c: usize) {
        let d = self.verifier.digraph();
        let n = d.vertex_count();
        let reach = c.min(n - 1);
        self.c = c;
        self.affected = d
            .arcs()
            .iter()
            .enumerate()
            .map(|(arc, &(t, h))| {
                let mut pairs = Vec::new();
                for u in 0..n {
                    for v in 0..n {
                        if u == v || self.verifier.distance(u, v) < 2 {
                            continue;
                        }
                        let relevant = match self.mode {
                            Mode::Strong => self.verifier.on_geodesic(u, v, arc),
                            Mode::Rainbow => {
                                self.verifier.distance(u, t) + 1 + self.verifier.distance(h, v)
                                    <= reach
                            }
                        };
                        if relevant {
                            pairs.push((u, v));
                        }
                    }
                }
                pairs
            })
            .collect();
    }

    fn run(&mut self, c: usize) -> Outcome {
        self.prepare(c);
        self.colors.iter_mut().for_each(|x| *x = 0);
        self.descend(0, 0)
    }

    fn consistent(&mut self, arc: usize) -> bool {
        let pairs = std::mem::take(&mut self.affected[arc]);
        let mut ok = true;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            self.stats.pair_checks += 1;
            let found = self.verifier.pair_feasible(
                &mut self.search,
                &self.colors,
                self.c,
                self.mode,
                u,
                v,
            );
            if found.is_none() {
                ok = false;
                // try this pair first next time
                let mut pairs = pairs;
                pairs[..=i].rotate_right(1);
                self.affected[arc] = pairs;
                return ok;
            }
        }
        self.affected[arc] = pairs;
        ok
    }

    fn descend(&mut self, arc: usize, max_used: u32) -> Outcome {
        let m = self.colors.len();
        if arc == m {
            self.stats.colorings_tested += 1;
            let n = self.verifier.digraph().vertex_count() as u64;
            self.stats.pair_checks += n * (n - 1);
            return if self
                .verifier
                .check_colors(&mut self.search, &self.colors, self.c, self.mode)
            {
                Outcome::Found(self.colors.clone())
            } else {
                Outcome::Infeasible
            };
        }
        let top = (max_used + 1).min(self.c as u32);
        for col in 1..=top {
            if self.stats.nodes >= self.budget {
                return Outcome::Budget;
            }
            self.stats.nodes += 1;
            self.colors[arc] = col;
            if self.consistent(arc) {
                match self.descend(arc + 1, max_used.max(col)) {
                    Outcome::Infeasible => {}
                    other => {
                        self.colors[arc] = 0;
                        return other;
                    }
                }
            }
        }
        self.colors[arc] = 0;
        Outcome::Infeasible
    }
}

/// Every strongly connected digraph on `n` labelled vertices, `2 <= n <= 4`.
///
/// Candidate arcs are the ordered pairs in lexicographic order; subsets are
/// emitted in increasing bitmask order, at most `cap` of them.
pub fn enumerate_strong_digraphs(n: usize, cap: usize) -> Result<StrongDigraphs> {
    if !(2..=4).contains(&n) {
        return Err(Error::Hypothesis(format!(
            "exhaustive enumeration supports 2 <= n <= 4, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    Ok(StrongDigraphs {
        n,
        limit: 1u64 << pairs.len(),
        pairs,
        next_mask: 1,
        remaining: cap,
    })
}

#[derive(Debug, Clone)]
pub struct StrongDigraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    limit: u64,
    remaining: usize,
}

impl Iterator for StrongDigraphs {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        while self.remaining > 0 && self.next_mask < self.limit {
            let mask = self.next_mask;
            self.next_mask += 1;
            // every vertex needs an out-arc and an in-arc
            let arcs: Vec<(usize, usize)> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            if arcs.len() < self.n {
                continue;
            }
            let d = Digraph::new(self.n, arcs).expect("distinct ordered pairs");
            if d.is_strongly_connected() {
                self.remaining -= 1;
                return Some(d);
            }
        }
        None
    }
}
