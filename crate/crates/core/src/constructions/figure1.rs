use super::ColoredDigraph;
use crate::digraph::Digraph;
use crate::verify::ArcColoring;

/// Vertex labels in index order.
pub const FIGURE1_VERTICES: [&str; 13] = [
    "u1", "v1", "u2", "v2", "u3", "v3", "a1", "b1", "b2", "b3", "a2", "u4", "v4",
];

pub fn figure1_vertex(label: &str) -> Option<usize> {
    FIGURE1_VERTICES.iter().position(|&l| l == label)
}

fn v(label: &str) -> usize {
    figure1_vertex(label).expect("known label")
}

/// Arcs of H in index order.
fn h_arcs() -> Vec<(usize, usize)> {
    let mut arcs = Vec::with_capacity(25);
    for i in 1..=4 {
        arcs.push((v(&format!("u{i}")), v(&format!("v{i}"))));
    }
    for i in 1..=3 {
        arcs.push((v(&format!("v{i}")), v("a1")));
    }
    for i in 1..=3 {
        arcs.push((v("a1"), v(&format!("u{i}"))));
    }
    for j in 1..=3 {
        let b = v(&format!("b{j}"));
        arcs.push((v("a1"), b));
        arcs.push((b, v("a1")));
    }
    for j in 1..=3 {
        let b = v(&format!("b{j}"));
        arcs.push((b, v("a2")));
        arcs.push((v("a2"), b));
    }
    arcs.push((v("a2"), v("u4")));
    arcs.push((v("v4"), v("a2")));
    arcs
}

/// Strong rainbow coloring of H, aligned with [`h_arcs`]: the
/// lexicographically least optimal certificate of the exact solver, which
/// also refutes every 6-coloring. `u_i -> v_i` has color `i`.
pub const H_COLORS: [u32; 24] = [
    1, 2, 3, 4, // u_i v_i
    5, 5, 5, // v_i a1
    6, 6, 6, // a1 u_i
    4, 4, 6, 7, 6, 7, // a1 b_j, b_j a1
    1, 1, 1, 1, 2, 2, // b_j a2, a2 b_j
    7, 5, // a2 u4, v4 a2
];

/// H (13 vertices, 24 arcs) or D = H + `a1 -> a2` (25 arcs).
///
/// H carries [`H_COLORS`]; in D the extra arc gets a fresh color.
pub fn figure1(with_extra_arc: bool) -> ColoredDigraph {
    let mut arcs = h_arcs();
    let mut colors = H_COLORS.to_vec();
    if with_extra_arc {
        arcs.push((v("a1"), v("a2")));
        colors.push(8);
    }
    let digraph = Digraph::new(FIGURE1_VERTICES.len(), arcs).expect("valid construction");
    let coloring = ArcColoring::from_colors(colors).expect("fixture colors are positive");
    ColoredDigraph { digraph, coloring }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_strong_rainbow_connected, verify, Mode};

    #[test]
    fn shape_of_h_and_d() {
        let h = figure1(false);
        assert_eq!(h.digraph.vertex_count(), 13);
        assert_eq!(h.digraph.arc_count(), 24);
        assert!(h.digraph.is_strongly_connected());
        assert_eq!(h.digraph.diameter().unwrap(), 6);
        let d = figure1(true);
        assert_eq!(d.digraph.arc_count(), 25);
        assert_eq!(d.digraph.count_asymmetric_arcs(), 13);
        assert_eq!(h.digraph.count_asymmetric_arcs(), 12);
    }

    #[test]
    fn fixture_colorings_verify() {
        let h = figure1(false);
        assert_eq!(h.coloring.num_colors(), 7);
        for i in 1..=4 {
            let arc = h
                .digraph
                .arc_index(v(&format!("u{i}")), v(&format!("v{i}")))
                .unwrap();
            assert_eq!(h.coloring.color(arc), i as u32);
        }
        assert!(
            is_strong_rainbow_connected(&h.digraph, &h.coloring)
                .unwrap()
                .verdict
        );
        let d = figure1(true);
        assert!(
            is_strong_rainbow_connected(&d.digraph, &d.coloring)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn extensions_to_d() {
        // only color 6 (besides a fresh one) keeps every u_i -> v4 geodesic
        // u_i v_i a1 a2 u4 v4 rainbow
        let d = figure1(true).digraph;
        for c in 1..=7u32 {
            let mut colors = H_COLORS.to_vec();
            colors.push(c);
            let col = ArcColoring::new(colors, 7).unwrap();
            let ok = verify(&d, &col, Mode::Strong, false).unwrap().verdict;
            assert_eq!(ok, c == 6, "a1a2 colored {c}");
        }
    }
}
