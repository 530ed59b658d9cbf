use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rcdc::digraph::{biorient, mod_inverse, normalize_circulant_pair};
use rcdc::format::{parse_coloring, parse_digraph, write_coloring, write_digraph};
use rcdc::solver::{enumerate_strong_digraphs, solve};
use rcdc::verify::{verify, Verifier};
use rcdc::{
    make_circulant, ArcColoring, CirculantSpec, Digraph, Mode, SolveLimits, Status, Target,
};

fn circulant_strategy() -> impl Strategy<Value = CirculantSpec> {
    (3usize..40)
        .prop_flat_map(|n| (Just(n), proptest::collection::btree_set(1..n, 1..4)))
        .prop_map(|(n, gens)| CirculantSpec::new(n, gens).unwrap())
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Digraph {
    let arcs = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(density))
        .collect();
    Digraph::new(n, arcs).unwrap()
}

fn random_strong(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    loop {
        let d = random_digraph(rng, n, 0.45);
        if d.is_strongly_connected() {
            return d;
        }
    }
}

proptest! {
    #[test]
    fn circulants_are_regular(spec in circulant_strategy()) {
        let d = make_circulant(&spec);
        let s = spec.generators().len();
        prop_assert_eq!(d.arc_count(), spec.n() * s);
        for v in 0..spec.n() {
            prop_assert_eq!(d.out_degree(v), s);
            prop_assert_eq!(d.in_degree(v), s);
        }
    }

    #[test]
    fn circulant_distances_are_rotations(spec in circulant_strategy(), shift in 0usize..40) {
        let d = make_circulant(&spec);
        let n = spec.n();
        let shift = shift % n;
        let base = d.distances_from(0).unwrap();
        let moved = d.distances_from(shift).unwrap();
        for i in 0..n {
            prop_assert_eq!(base[i], moved[(i + shift) % n]);
        }
    }

    #[test]
    fn normalization_keeps_diameter(n in 4usize..60, a in 1usize..60, b in 1usize..60) {
        let (a, b) = (a % n, b % n);
        prop_assume!(a != 0 && b != 0 && a != b);
        prop_assume!(mod_inverse(a, n).is_some() || mod_inverse(b, n).is_some());
        let spec = CirculantSpec::new(n, [a, b]).unwrap();
        let norm = normalize_circulant_pair(&spec).unwrap();
        prop_assert_eq!(norm.generators()[0], 1);
        let d1 = make_circulant(&spec);
        let d2 = make_circulant(&norm);
        prop_assert_eq!(d1.diameter().unwrap(), d2.diameter().unwrap());
    }

    #[test]
    fn digraph_text_round_trip(seed in any::<u64>(), n in 2usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_digraph(&mut rng, n, 0.4);
        let back = parse_digraph(&write_digraph(&d)).unwrap();
        prop_assert_eq!(back.arcs(), d.arcs());
        if d.arc_count() > 0 {
            let c = rng.gen_range(1..=5);
            let col = ArcColoring::new(
                (0..d.arc_count()).map(|_| rng.gen_range(1..=c as u32)).collect(),
                c,
            )
            .unwrap();
            prop_assert_eq!(parse_coloring(&write_coloring(&d, &col), &d).unwrap(), col);
        }
    }
}

#[test]
fn geodesic_dags_are_acyclic_and_tight() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=8);
        let d = random_strong(&mut rng, n);
        let dist = d.all_distances();
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                let dag = d.geodesic_dag(u, v).unwrap();
                for &a in &dag.arcs {
                    let (t, h) = d.arc(a);
                    let du = dist[u][t].unwrap();
                    let dh = dist[h][v].unwrap();
                    assert_eq!(du + 1 + dh, dag.length);
                    // distance from u strictly increases along every arc
                    assert_eq!(dist[u][h], Some(du + 1));
                }
                let sub = dag.to_digraph(&d);
                assert_eq!(sub.distances_from(u).unwrap()[v], Some(dag.length));
            }
        }
    }
}

#[test]
fn biorientation_strong_iff_connected() {
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            // union-find connectivity of the undirected graph
            let mut root: Vec<usize> = (0..n).collect();
            fn find(r: &mut Vec<usize>, x: usize) -> usize {
                if r[x] != x {
                    let p = find(r, r[x]);
                    r[x] = p;
                }
                r[x]
            }
            for &(u, v) in &edges {
                let (a, b) = (find(&mut root, u), find(&mut root, v));
                root[a] = b;
            }
            let connected = (0..n).all(|v| find(&mut root, v) == find(&mut root, 0));
            let d = biorient(n, &edges).unwrap();
            assert_eq!(d.is_strongly_connected(), connected, "{edges:?}");
        }
    }
}

#[test]
fn strong_implies_rainbow() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut strong_seen = 0;
    for _ in 0..400 {
        let n = rng.gen_range(2..=7);
        let d = random_strong(&mut rng, n);
        let c = rng.gen_range(1..=6);
        let col = ArcColoring::new(
            (0..d.arc_count())
                .map(|_| rng.gen_range(1..=c as u32))
                .collect(),
            c,
        )
        .unwrap();
        let v = Verifier::new(&d).unwrap();
        let strong = v.is_connected(&col, Mode::Strong).unwrap();
        let rainbow = v.is_connected(&col, Mode::Rainbow).unwrap();
        assert!(!strong || rainbow);
        strong_seen += strong as usize;
        let report = v.report(&col, Mode::Strong, false).unwrap();
        assert_eq!(report.verdict, strong);
        assert_eq!(report.failures.is_empty(), strong);
    }
    assert!(strong_seen > 0);
}

#[test]
fn refining_a_coloring_keeps_it_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.gen_range(3..=6);
        let d = random_strong(&mut rng, n);
        let m = d.arc_count();
        let c = rng.gen_range(2..=5);
        let colors: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=c as u32)).collect();
        let col = ArcColoring::new(colors.clone(), c).unwrap();
        // move one arc to a brand-new color
        let mut refined = colors;
        refined[rng.gen_range(0..m)] = c as u32 + 1;
        let finer = ArcColoring::new(refined, c + 1).unwrap();
        for mode in [Mode::Rainbow, Mode::Strong] {
            let before = verify(&d, &col, mode, false).unwrap().verdict;
            let after = verify(&d, &finer, mode, false).unwrap().verdict;
            assert!(!before || after);
        }
    }
}

#[test]
fn adding_arcs_never_raises_rc() {
    let limits = SolveLimits {
        find_certificate: false,
        ..SolveLimits::default()
    };
    let value = |d: &Digraph| {
        let r = solve(d, Target::Rc, &limits).unwrap();
        assert_eq!(r.status, Status::Exact);
        r.value.unwrap()
    };
    for d in enumerate_strong_digraphs(4, usize::MAX).unwrap().step_by(7) {
        let rc = value(&d);
        for a in 0..d.arc_count() {
            let sub = d.spanning_subdigraph(|i| i != a);
            if sub.is_strongly_connected() {
                assert!(value(&sub) >= rc, "{:?} minus arc {a}", d.arcs());
            }
        }
    }
}

#[test]
fn solver_values_are_ordered_and_certified() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..60 {
        let n = rng.gen_range(2..=5);
        let d = random_strong(&mut rng, n);
        let rc = solve(&d, Target::Rc, &SolveLimits::default()).unwrap();
        let src = solve(&d, Target::Src, &SolveLimits::default()).unwrap();
        let (rc_v, src_v) = (rc.value.unwrap(), src.value.unwrap());
        assert!(d.diameter().unwrap() <= rc_v && rc_v <= src_v && src_v <= d.arc_count());
        let cert = rc.certificate.unwrap();
        assert!(verify(&d, &cert, Mode::Rainbow, false).unwrap().verdict);
        assert_eq!(cert.used_count(), rc_v);
        let cert = src.certificate.unwrap();
        assert!(verify(&d, &cert, Mode::Strong, false).unwrap().verdict);
    }
}

/// Least `c` admitting a coloring that passes `mode`, by trying all `c^m`
/// colorings.
fn brute_force_value(d: &Digraph, mode: Mode) -> usize {
    let m = d.arc_count();
    let v = Verifier::new(d).unwrap();
    for c in 1..=m {
        let total = c.pow(m as u32);
        for code in 0..total {
            let mut x = code;
            let colors: Vec<u32> = (0..m)
                .map(|_| {
                    let digit = x % c;
                    x /= c;
                    digit as u32 + 1
                })
                .collect();
            if v.is_connected(&ArcColoring::new(colors, c).unwrap(), mode)
                .unwrap()
            {
                return c;
            }
        }
    }
    unreachable!("all-distinct coloring always works")
}

#[test]
fn solver_matches_brute_force() {
    let small = enumerate_strong_digraphs(3, usize::MAX).unwrap().chain(
        enumerate_strong_digraphs(4, usize::MAX)
            .unwrap()
            .filter(|d| d.arc_count() <= 6),
    );
    let mut checked = 0;
    for d in small {
        for (target, mode) in [(Target::Rc, Mode::Rainbow), (Target::Src, Mode::Strong)] {
            let r = solve(&d, target, &SolveLimits::default()).unwrap();
            assert_eq!(
                r.value,
                Some(brute_force_value(&d, mode)),
                "{:?} {target:?}",
                d.arcs()
            );
        }
        checked += 1;
    }
    assert!(checked > 18);
}
