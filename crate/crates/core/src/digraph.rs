//! Digraph representation, generators and distance primitives.
//!
//! Vertices are `0..n`. Arcs are identified by their position in the arc
//! list, which is what colorings index into.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple digraph: no loops, no parallel arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
    index: HashMap<(usize, usize), usize>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(arcs.len());
        for (idx, &(tail, head)) in arcs.iter().enumerate() {
            if tail >= n || head >= n {
                return Err(Error::InvalidDigraph(format!(
                    "arc {tail}->{head} has an endpoint outside 0..{n}"
                )));
            }
            if tail == head {
                return Err(Error::InvalidDigraph(format!("loop at vertex {tail}")));
            }
            if index.insert((tail, head), idx).is_some() {
                return Err(Error::InvalidDigraph(format!(
                    "duplicate arc {tail}->{head}"
                )));
            }
            out[tail].push((head, idx));
            inc[head].push((tail, idx));
        }
        Ok(Digraph {
            n,
            arcs,
            out,
            inc,
            index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, idx: usize) -> (usize, usize) {
        self.arcs[idx]
    }

    /// Out-neighbours of `v` as `(head, arc index)` pairs.
    pub fn out_arcs(&self, v: usize) -> &[(usize, usize)] {
        &self.out[v]
    }

    /// In-neighbours of `v` as `(tail, arc index)` pairs.
    pub fn in_arcs(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    pub fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        self.index.get(&(tail, head)).copied()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.index.contains_key(&(tail, head))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// BFS distances from `source`; `None` marks an unreachable vertex.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        Ok(bfs(self.n, source, |v| self.out[v].iter().map(|&(h, _)| h)))
    }

    /// BFS distances to `target` along reversed arcs.
    pub fn distances_to(&self, target: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(target)?;
        Ok(bfs(self.n, target, |v| self.inc[v].iter().map(|&(t, _)| t)))
    }

    /// Row `u` holds `distances_from(u)`.
    pub fn all_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n)
            .map(|u| bfs(self.n, u, |v| self.out[v].iter().map(|&(h, _)| h)))
            .collect()
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let forward = bfs(self.n, 0, |v| self.out[v].iter().map(|&(h, _)| h));
        let backward = bfs(self.n, 0, |v| self.inc[v].iter().map(|&(t, _)| t));
        forward.iter().all(Option::is_some) && backward.iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut diam = 0;
        for row in self.all_distances() {
            for d in row {
                diam = diam.max(d.ok_or(Error::NotStronglyConnected)?);
            }
        }
        Ok(diam)
    }

    /// Number of arcs `uv` whose reverse `vu` is absent.
    pub fn count_asymmetric_arcs(&self) -> usize {
        self.arcs
            .iter()
            .filter(|&&(t, h)| !self.has_arc(h, t))
            .count()
    }

    pub fn asymmetric_arcs(&self) -> Vec<usize> {
        (0..self.arcs.len())
            .filter(|&i| {
                let (t, h) = self.arcs[i];
                !self.has_arc(h, t)
            })
            .collect()
    }

    pub fn geodesic_dag(&self, from: usize, to: usize) -> Result<GeodesicDag> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let dist_from = self.distances_from(from)?;
        let dist_to = self.distances_to(to)?;
        let length = dist_from[to].ok_or(Error::Unreachable { from, to })?;
        let arcs = geodesic_arcs(&self.arcs, &dist_from, &dist_to, length);
        Ok(GeodesicDag {
            source: from,
            target: to,
            length,
            arcs,
        })
    }

    /// Spanning subdigraph keeping the arcs whose index satisfies `keep`.
    pub fn spanning_subdigraph(&self, mut keep: impl FnMut(usize) -> bool) -> Digraph {
        let arcs = (0..self.arcs.len())
            .filter(|&i| keep(i))
            .map(|i| self.arcs[i])
            .collect();
        Digraph::new(self.n, arcs).expect("subdigraph of a valid digraph")
    }

    /// Copy of this digraph with `arc` appended.
    pub fn with_arc(&self, tail: usize, head: usize) -> Result<Digraph> {
        let mut arcs = self.arcs.clone();
        arcs.push((tail, head));
        Digraph::new(self.n, arcs)
    }

    /// True if every arc has its reverse and every ordered pair of distinct
    /// vertices is an arc.
    pub fn is_complete_biorientation(&self) -> bool {
        self.n >= 2 && self.arcs.len() == self.n * (self.n - 1)
    }
}

fn bfs<I, F>(n: usize, source: usize, next: F) -> Vec<Option<usize>>
where
    I: Iterator<Item = usize>,
    F: Fn(usize) -> I,
{
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for w in next(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Arcs `(x, y)` with `d(from, x) + 1 + d(y, to) == length`.
pub(crate) fn geodesic_arcs(
    arcs: &[(usize, usize)],
    dist_from: &[Option<usize>],
    dist_to: &[Option<usize>],
    length: usize,
) -> Vec<usize> {
    arcs.iter()
        .enumerate()
        .filter_map(|(i, &(x, y))| match (dist_from[x], dist_to[y]) {
            (Some(a), Some(b)) if a + 1 + b == length => Some(i),
            _ => None,
        })
        .collect()
}

/// The union of all shortest `source -> target` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicDag {
    pub source: usize,
    pub target: usize,
    pub length: usize,
    /// Indices into the parent digraph's arc list, ascending.
    pub arcs: Vec<usize>,
}

impl GeodesicDag {
    pub fn contains_arc(&self, arc: usize) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// The DAG as a standalone digraph on the parent's vertex set.
    pub fn to_digraph(&self, parent: &Digraph) -> Digraph {
        parent.spanning_subdigraph(|i| self.contains_arc(i))
    }
}

/// `C_n(S)`: arcs `i -> i + s (mod n)` for every generator `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    generators: Vec<usize>,
}

impl CirculantSpec {
    /// Generators are kept sorted ascending; duplicates are rejected.
    pub fn new(n: usize, generators: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCirculant(format!("modulus {n} < 2")));
        }
        let mut gens: Vec<usize> = generators.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::InvalidCirculant("empty generator set".into()));
        }
        if let Some(&bad) = gens.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::InvalidCirculant(format!(
                "generator {bad} not in 1..{}",
                n - 1
            )));
        }
        gens.sort_unstable();
        if gens.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCirculant("duplicate generator".into()));
        }
        Ok(CirculantSpec {
            n,
            generators: gens,
        })
    }

    /// `C_n([k])`, generators `1..=k`.
    pub fn interval(n: usize, k: usize) -> Result<Self> {
        Self::new(n, 1..=k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// Arcs ordered by generator, then by tail.
pub fn make_circulant(spec: &CirculantSpec) -> Digraph {
    let n = spec.n;
    let arcs = spec
        .generators
        .iter()
        .flat_map(|&s| (0..n).map(move |i| (i, (i + s) % n)))
        .collect();
    Digraph::new(n, arcs).expect("validated circulant")
}

/// Replaces each undirected edge `{u, v}` by the arcs `uv`, `vu` (in that
/// order).
pub fn biorient(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
    let mut arcs = Vec::with_capacity(2 * edges.len());
    for &(u, v) in edges {
        if u == v {
            return Err(Error::InvalidDigraph(format!("loop edge at {u}")));
        }
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Digraph::new(n, arcs).map_err(|e| match e {
        Error::InvalidDigraph(msg) if msg.starts_with("duplicate") => {
            Error::InvalidDigraph("duplicate edge".into())
        }
        other => other,
    })
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidDigraph(format!(
            "directed cycle needs n >= 2, got {n}"
        )));
    }
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// Edges `{i, i+1 mod n}` for `i` in `0..n`.
pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// `K_{1,leaves}` with centre 0.
pub fn star_edges(leaves: usize) -> Vec<(usize, usize)> {
    (1..=leaves).map(|i| (0, i)).collect()
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Part index of every vertex when vertices are assigned to parts in order.
pub fn multipartite_parts(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(p, &size)| std::iter::repeat_n(p, size))
        .collect()
}

pub fn complete_multipartite_edges(parts: &[usize]) -> Vec<(usize, usize)> {
    let part = multipartite_parts(parts);
    let n = part.len();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v])
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) == 1`.
pub fn mod_inverse(a: usize, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i64, (a % n) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i64) as usize)
}

/// Rewrites `C_n({a1, a2})` as `C_n({1, b*a2})` with `b = a1^-1 mod n`,
/// using the explicitly chosen unit generator `a1`.
pub fn normalize_circulant_pair_with(spec: &CirculantSpec, a1: usize) -> Result<CirculantSpec> {
    let gens = spec.generators();
    if gens.len() != 2 {
        return Err(Error::InvalidCirculant(format!(
            "normalization needs exactly two generators, got {}",
            gens.len()
        )));
    }
    let a2 = match gens {
        [x, y] if *x == a1 => *y,
        [x, y] if *y == a1 => *x,
        _ => return Err(Error::InvalidCirculant(format!("{a1} is not a generator"))),
    };
    let b = mod_inverse(a1, spec.n)
        .ok_or_else(|| Error::InvalidCirculant(format!("gcd({a1}, {}) != 1", spec.n)))?;
    CirculantSpec::new(spec.n, [1, b * a2 % spec.n])
}

/// Normalizes a two-generator circulant to the form `{1, s}`.
///
/// Every unit generator is tried as `a1`; the result with the smallest
/// second generator wins, so `C_{2k+1}({1, k+1})` maps to `C_{2k+1}({1, 2})`.
pub fn normalize_circulant_pair(spec: &CirculantSpec) -> Result<CirculantSpec> {
    if spec.generators().len() != 2 {
        return Err(Error::InvalidCirculant(format!(
            "normalization needs exactly two generators, got {}",
            spec.generators().len()
        )));
    }
    spec.generators()
        .iter()
        .filter(|&&a| gcd(a, spec.n) == 1)
        .filter_map(|&a| normalize_circulant_pair_with(spec, a).ok())
        .min_by_key(|s| s.generators()[1])
        .ok_or_else(|| {
            Error::InvalidCirculant(format!(
                "no generator of {:?} is a unit modulo {}",
                spec.generators(),
                spec.n
            ))
        })
}

/// Vertex `i` written as `<r, s>` with `i = r * base + s`, `0 <= s < base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairIndex {
    pub r: usize,
    pub s: usize,
    pub base: usize,
}

impl PairIndex {
    pub fn of(i: usize, base: usize) -> Self {
        assert!(base >= 1, "pair index base must be positive");
        PairIndex {
            r: i / base,
            s: i % base,
            base,
        }
    }

    pub fn vertex(&self) -> usize {
        self.r * self.base + self.s
    }
}

pub fn pair_index(i: usize, base: usize) -> PairIndex {
    PairIndex::of(i, base)
}
