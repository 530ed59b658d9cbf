//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every line is printed; the process
//! exits non-zero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rcdc::constructions::{
    circulant_diameter_formula, circulant_distance_formula, color_biorientation, color_c2k,
    color_circulant_interval, color_multiple, color_square, color_subcycle, figure1,
    figure1_vertex, BiorientationKind, C2kVariant, SubcycleOutcome,
};
use rcdc::digraph::{biorient, cycle_edges, directed_cycle};
use rcdc::solver::{enumerate_strong_digraphs, solve};
use rcdc::verify::{exists_rainbow_geodesic, exists_rainbow_path, verify, Verifier};
use rcdc::{
    make_circulant, ArcColoring, CirculantSpec, Digraph, Mode, SolveLimits, Status, Target,
};

/// Node budget for every solver call in this suite.
const NODE_BUDGET: u64 = 20_000_000;
/// Random instances for the oracle comparison.
const ORACLE_INSTANCES: usize = 500;
const ORACLE_SEED: u64 = 0x5eed_0010;
/// Lower bound on checked strong digraphs with four vertices.
const MIN_N4_DIGRAPHS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn limits() -> SolveLimits {
    SolveLimits {
        find_certificate: false,
        ..SolveLimits::with_budget(NODE_BUDGET)
    }
}

fn exact(d: &Digraph, target: Target) -> Result<usize, String> {
    let r = solve(d, target, &limits()).map_err(|e| e.to_string())?;
    match r.status {
        Status::Exact => Ok(r.value.expect("exact has a value")),
        other => Err(format!(
            "solver {target:?} ended {other:?} with bounds [{}, {}]",
            r.lower, r.upper
        )),
    }
}

fn both_exact(d: &Digraph, expected: usize, what: &str) -> Result<(), String> {
    for target in [Target::Rc, Target::Src] {
        let v = exact(d, target)?;
        ensure(v == expected, || {
            format!("{what}: solver {target:?} = {v}, expected {expected}")
        })?;
    }
    Ok(())
}

fn strong(d: &Digraph, col: &ArcColoring) -> Result<bool, String> {
    verify(d, col, Mode::Strong, false)
        .map(|r| r.verdict)
        .map_err(|e| e.to_string())
}

fn circulant(n: usize, gens: &[usize]) -> Digraph {
    make_circulant(&CirculantSpec::new(n, gens.iter().copied()).expect("valid circulant"))
}

fn criterion_1() -> Outcome {
    let mut built = 0;
    for n in 3..=14 {
        for k in 1..=n - 2 {
            let c = color_circulant_interval(n, k).map_err(|e| e.to_string())?;
            let want = n.div_ceil(k);
            ensure(c.coloring.num_colors() == want, || {
                format!("C_{n}([{k}]) uses {} colors", c.coloring.num_colors())
            })?;
            ensure(strong(&c.digraph, &c.coloring)?, || {
                format!("C_{n}([{k}]) coloring is not strong")
            })?;
            built += 1;
        }
    }
    let mut solved = 0;
    for n in 3..=8 {
        for k in 1..=3.min(n - 2) {
            let d = make_circulant(&CirculantSpec::interval(n, k).unwrap());
            both_exact(&d, n.div_ceil(k), &format!("C_{n}([{k}])"))?;
            solved += 1;
        }
    }
    Ok(format!(
        "{built} constructions verified, {solved} solver checks"
    ))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for n in 3..=200usize {
        for k in 2..n {
            if n < (k - 1) * n.div_ceil(k) {
                continue;
            }
            let d = circulant(n, &[1, k]);
            let bfs = d.distances_from(0).unwrap();
            for (i, dist) in bfs.iter().enumerate() {
                let f = circulant_distance_formula(n, k, i).map_err(|e| e.to_string())?;
                ensure(Some(f) == *dist, || {
                    format!("C_{n}({{1,{k}}}) vertex {i}: formula {f}, bfs {dist:?}")
                })?;
            }
            let f = circulant_diameter_formula(n, k).map_err(|e| e.to_string())?;
            let bfs_diam = d.diameter().unwrap();
            ensure(f == bfs_diam, || {
                format!("C_{n}({{1,{k}}}): formula diameter {f}, bfs {bfs_diam}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs"))
}

fn criterion_3() -> Outcome {
    for k in 2..=7 {
        for variant in [C2kVariant::OneK, C2kVariant::OneKPlusOne] {
            let c = color_c2k(k, variant).map_err(|e| e.to_string())?;
            let what = format!("C_{}({{1,{}}})", 2 * k, variant.second_generator(k));
            ensure(c.coloring.num_colors() == k, || {
                format!("{what}: color count")
            })?;
            ensure(strong(&c.digraph, &c.coloring)?, || {
                format!("{what}: not strong")
            })?;
            let diam = c.digraph.diameter().unwrap();
            ensure(diam == k, || format!("{what}: diameter {diam}"))?;
            if k <= 3 {
                both_exact(&c.digraph, k, &what)?;
            }
        }
    }
    Ok("k = 2..7, both variants; solver for k <= 3".into())
}

fn criterion_4() -> Outcome {
    for k in 3..=6 {
        let c = color_square(k).map_err(|e| e.to_string())?;
        let what = format!("C_{}({{1,{k}}})", (k - 1) * (k - 1));
        let want = 2 * k - 4;
        ensure(c.coloring.num_colors() == want, || {
            format!("{what}: color count")
        })?;
        ensure(strong(&c.digraph, &c.coloring)?, || {
            format!("{what}: not strong")
        })?;
        let diam = c.digraph.diameter().unwrap();
        ensure(diam == want, || format!("{what}: diameter {diam}"))?;
        if k == 3 {
            both_exact(&c.digraph, 2, &what)?;
        }
    }
    Ok("k = 3..6; solver at k = 3".into())
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for k in 3..=4 {
        for a in k - 1..=5 {
            if a * k > 20 {
                continue;
            }
            let c = color_multiple(k, a).map_err(|e| e.to_string())?;
            let what = format!("C_{}({{1,{k}}})", a * k);
            let want = a + k - 2;
            ensure(c.coloring.num_colors() == want, || {
                format!("{what}: color count")
            })?;
            ensure(strong(&c.digraph, &c.coloring)?, || {
                format!("{what}: not strong")
            })?;
            let diam = c.digraph.diameter().unwrap();
            ensure(diam == want, || format!("{what}: diameter {diam}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (k, a) cases"))
}

/// Partitions of `n` into at least two non-increasing parts, one of size >= 2.
fn multipartite_shapes(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 && cur[0] >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn criterion_6() -> Outcome {
    use BiorientationKind::*;
    for n in 2..=4 {
        both_exact(
            &Path { n }.digraph().unwrap(),
            n - 1,
            &format!("bior P_{n}"),
        )?;
    }
    for n in 4..=5 {
        both_exact(
            &Cycle { n }.digraph().unwrap(),
            n.div_ceil(2),
            &format!("bior C_{n}"),
        )?;
    }
    for leaves in 2..=3 {
        both_exact(
            &Star { leaves }.digraph().unwrap(),
            2,
            &format!("bior K_1,{leaves}"),
        )?;
    }
    both_exact(
        &Multipartite { parts: vec![2, 2] }.digraph().unwrap(),
        2,
        "bior K_2,2",
    )?;

    // odd cycle: two colors do not suffice
    let c5 = Cycle { n: 5 }.digraph().unwrap();
    let r = solve(&c5, Target::Rc, &limits()).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Exact && r.value == Some(3), || {
        format!("bior C_5: {r:?}")
    })?;

    let mut kinds = Vec::new();
    for n in 2..=14 {
        kinds.push(Path { n });
        if n >= 4 {
            kinds.push(Cycle { n });
        }
        if n >= 3 {
            kinds.push(Star { leaves: n - 1 });
        }
        kinds.extend(
            multipartite_shapes(n)
                .into_iter()
                .map(|parts| Multipartite { parts }),
        );
    }
    for kind in &kinds {
        let c = color_biorientation(kind).map_err(|e| e.to_string())?;
        let want = match kind {
            Path { n } => n - 1,
            Cycle { n } => n.div_ceil(2),
            Star { .. } | Multipartite { .. } => 2,
        };
        ensure(c.coloring.num_colors() == want, || {
            format!("{kind:?}: color count")
        })?;
        ensure(strong(&c.digraph, &c.coloring)?, || {
            format!("{kind:?}: not strong")
        })?;
    }
    Ok(format!(
        "solver values match; {} constructions verified",
        kinds.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut subdigraphs = 0;
    for n in 3..=6 {
        let full = biorient(n, &cycle_edges(n)).unwrap();
        let m = full.arc_count();
        for mask in 1u32..(1 << m) {
            let removed: Vec<(usize, usize)> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| full.arc(i))
                .collect();
            let d = full.spanning_subdigraph(|i| mask & (1 << i) == 0);
            if !d.is_strongly_connected() || d.count_asymmetric_arcs() == 0 {
                continue;
            }
            subdigraphs += 1;
            let k = d.count_asymmetric_arcs();
            let what = format!("bior C_{n} minus {removed:?}");
            let rc = exact(&d, Target::Rc)?;
            if k <= 2 {
                ensure(rc == n - 1, || {
                    format!("{what}: rc {rc}, expected {}", n - 1)
                })?;
                match color_subcycle(n, &removed).map_err(|e| e.to_string())? {
                    SubcycleOutcome::Colored(c) => {
                        ensure(c.coloring.num_colors() == n - 1, || {
                            format!("{what}: colors")
                        })?;
                        let ok = verify(&c.digraph, &c.coloring, Mode::Rainbow, false)
                            .map_err(|e| e.to_string())?
                            .verdict;
                        ensure(ok, || format!("{what}: construction not rainbow connected"))?;
                    }
                    SubcycleOutcome::Refused { .. } => return Err(format!("{what}: refused")),
                }
            } else {
                both_exact(&d, n, &what)?;
            }
        }
    }
    for m in 3..=6 {
        both_exact(&directed_cycle(m).unwrap(), m, &format!("directed C_{m}"))?;
    }
    Ok(format!("{subdigraphs} subdigraphs; directed C_3..C_6"))
}

fn check_small_values(d: &Digraph) -> Result<(), String> {
    let rc = exact(d, Target::Rc)?;
    let src = exact(d, Target::Src)?;
    let complete = d.is_complete_biorientation();
    ensure((rc == 1) == complete && (src == 1) == complete, || {
        format!("{:?}: rc {rc}, src {src}, complete {complete}", d.arcs())
    })?;
    ensure((rc == 2) == (src == 2), || {
        format!("{:?}: rc {rc}, src {src}", d.arcs())
    })
}

fn criterion_8() -> Outcome {
    let n3: Vec<Digraph> = enumerate_strong_digraphs(3, usize::MAX).unwrap().collect();
    for d in &n3 {
        check_small_values(d)?;
    }
    let all4: Vec<Digraph> = enumerate_strong_digraphs(4, usize::MAX).unwrap().collect();
    ensure(all4.len() >= MIN_N4_DIGRAPHS, || {
        format!("only {} digraphs on 4 vertices", all4.len())
    })?;
    for d in &all4 {
        check_small_values(d)?;
    }
    Ok(format!(
        "all {} strong digraphs on 3 vertices and all {} on 4",
        n3.len(),
        all4.len()
    ))
}

fn criterion_9() -> Outcome {
    const TARGET_COLORS: usize = 6;
    let h = figure1(false);
    let d = figure1(true);
    let a1a2 = d
        .digraph
        .arc_index(figure1_vertex("a1").unwrap(), figure1_vertex("a2").unwrap())
        .expect("D has a1 -> a2");

    // the fixture must be a strong coloring of H with six colors
    let fixture_ok = h.coloring.num_colors() == TARGET_COLORS && strong(&h.digraph, &h.coloring)?;
    let mut failing_extensions = 0;
    for c in 1..=TARGET_COLORS as u32 {
        let mut colors: Vec<u32> = h.coloring.colors().to_vec();
        colors.insert(a1a2, c);
        let col = ArcColoring::new(colors, h.coloring.num_colors().max(TARGET_COLORS))
            .map_err(|e| e.to_string())?;
        if !strong(&d.digraph, &col)? {
            failing_extensions += 1;
        }
    }
    if fixture_ok && failing_extensions == TARGET_COLORS {
        return Ok("H 6-colored; all 6 extensions to D fail".into());
    }
    // report whether any six-coloring of H exists at all
    let h_src = solve(&h.digraph, Target::Src, &limits()).map_err(|e| e.to_string())?;
    Err(format!(
        "fixture uses {} colors (strong: {}); {failing_extensions}/{TARGET_COLORS} extensions fail; \
         solver on H: {:?} value {:?} ({} nodes)",
        h.coloring.num_colors(),
        strong(&h.digraph, &h.coloring)?,
        h_src.status,
        h_src.value,
        h_src.stats.nodes
    ))
}

struct Oracle<'a> {
    d: &'a Digraph,
    colors: &'a [u32],
    target: usize,
    geo: Option<usize>,
    on_path: Vec<bool>,
    used: Vec<u32>,
    any: bool,
    geodesic: bool,
}

impl Oracle<'_> {
    fn dfs(&mut self, at: usize) {
        if at == self.target {
            self.any = true;
            self.geodesic |= Some(self.used.len()) == self.geo;
            return;
        }
        for &(head, arc) in self.d.out_arcs(at) {
            let color = self.colors[arc];
            if self.on_path[head] || self.used.contains(&color) {
                continue;
            }
            self.on_path[head] = true;
            self.used.push(color);
            self.dfs(head);
            self.used.pop();
            self.on_path[head] = false;
        }
    }
}

/// Enumerates every simple `u -> v` path. Returns whether a rainbow one
/// exists and whether a rainbow one of length `geo` exists.
fn oracle(d: &Digraph, colors: &[u32], u: usize, v: usize, geo: Option<usize>) -> (bool, bool) {
    let mut o = Oracle {
        d,
        colors,
        target: v,
        geo,
        on_path: vec![false; d.vertex_count()],
        used: Vec::new(),
        any: false,
        geodesic: false,
    };
    o.on_path[u] = true;
    o.dfs(u);
    (o.any, o.geodesic)
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut pairs = 0;
    for instance in 0..ORACLE_INSTANCES {
        let n = rng.gen_range(2..=6);
        let density: f64 = rng.gen_range(0.2..0.9);
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .filter(|_| rng.gen_bool(density))
            .collect();
        let d = Digraph::new(n, arcs).unwrap();
        let c = rng.gen_range(1..=4);
        let colors: Vec<u32> = (0..d.arc_count())
            .map(|_| rng.gen_range(1..=c as u32))
            .collect();
        let col = ArcColoring::new(colors.clone(), c).unwrap();
        for u in 0..n {
            let dist = d.distances_from(u).unwrap();
            for v in (0..n).filter(|&v| v != u) {
                let (any, geodesic) = oracle(&d, &colors, u, v, dist[v]);
                let got = exists_rainbow_path(&d, &col, u, v).map_err(|e| e.to_string())?;
                ensure(got.is_some() == any, || {
                    format!(
                        "instance {instance} {:?} {colors:?}: {u}->{v} path {got:?}, oracle {any}",
                        d.arcs()
                    )
                })?;
                if let Some(path) = &got {
                    ensure(
                        rcdc::verify::validate_witness(&d, &col, path, Mode::Rainbow),
                        || format!("instance {instance}: invalid witness {path:?}"),
                    )?;
                }
                if dist[v].is_some() {
                    let g = exists_rainbow_geodesic(&d, &col, u, v).map_err(|e| e.to_string())?;
                    ensure(g.is_some() == geodesic, || {
                        format!("instance {instance}: {u}->{v} geodesic {g:?}, oracle {geodesic}")
                    })?;
                }
                pairs += 1;
            }
        }
        if d.is_strongly_connected() {
            let verifier = Verifier::new(&d).unwrap();
            let rainbow = verifier.is_connected(&col, Mode::Rainbow).unwrap();
            let all = (0..n).all(|u| {
                (0..n)
                    .filter(|&v| v != u)
                    .all(|v| oracle(&d, &colors, u, v, None).0)
            });
            ensure(rainbow == all, || {
                format!("instance {instance}: verdict {rainbow}, oracle {all}")
            })?;
        }
    }
    Ok(format!(
        "{ORACLE_INSTANCES} instances, {pairs} ordered pairs"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("interval circulants", criterion_1),
        ("circulant distance formula", criterion_2),
        ("C_2k circulants", criterion_3),
        ("C_(k-1)^2 circulants", criterion_4),
        ("C_ak circulants", criterion_5),
        ("biorientations", criterion_6),
        ("subdigraphs of bior C_n", criterion_7),
        ("values 1 and 2", criterion_8),
        ("figure 1 digraphs", criterion_9),
        ("rainbow path oracle", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
