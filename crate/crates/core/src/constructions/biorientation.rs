use serde::{Deserialize, Serialize};

use super::{from_zero_based, ColoredDigraph};
use crate::digraph::{
    biorient, complete_multipartite_edges, cycle_edges, multipartite_parts, path_edges, star_edges,
    Digraph,
};
use crate::error::{Error, Result};
use crate::verify::ArcColoring;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum BiorientationKind {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,leaves}`, centre 0.
    Star {
        leaves: usize,
    },
    Multipartite {
        parts: Vec<usize>,
    },
}

impl BiorientationKind {
    pub fn digraph(&self) -> Result<Digraph> {
        match self {
            BiorientationKind::Path { n } => biorient(*n, &path_edges(*n)),
            BiorientationKind::Cycle { n } => biorient(*n, &cycle_edges(*n)),
            BiorientationKind::Star { leaves } => biorient(leaves + 1, &star_edges(*leaves)),
            BiorientationKind::Multipartite { parts } => {
                biorient(parts.iter().sum(), &complete_multipartite_edges(parts))
            }
        }
    }
}

/// Colorings of biorientations:
///
/// * path: the pair `i <-> i+1` gets color `i + 1`;
/// * cycle: the pair `i <-> i+1` gets color `(i mod ceil(n/2)) + 1`;
/// * star: arcs into the centre get 1, arcs out of it get 2;
/// * multipartite: 1 when the tail's part precedes the head's, else 2.
pub fn color_biorientation(kind: &BiorientationKind) -> Result<ColoredDigraph> {
    match kind {
        BiorientationKind::Path { n } if *n < 2 => {
            return Err(Error::Hypothesis(format!("path needs n >= 2, got {n}")))
        }
        BiorientationKind::Cycle { n } if *n < 4 => {
            return Err(Error::Hypothesis(format!("cycle needs n >= 4, got {n}")))
        }
        BiorientationKind::Star { leaves } if *leaves < 2 => {
            return Err(Error::Hypothesis(format!("star needs n >= 2 leaves, got {leaves}")))
        }
        BiorientationKind::Multipartite { parts }
            if parts.len() < 2 || parts.iter().all(|&p| p < 2) || parts.contains(&0) =>
        {
            return Err(Error::Hypothesis(format!(
                "complete multipartite needs >= 2 non-empty parts with one of size >= 2, got {parts:?}"
            )))
        }
        _ => {}
    }
    let digraph = kind.digraph()?;
    let coloring = match kind {
        BiorientationKind::Path { n } => from_zero_based(&digraph, n - 1, |t, h| t.min(h)),
        BiorientationKind::Cycle { n } => {
            let half = n.div_ceil(2);
            from_zero_based(&digraph, half, |t, h| {
                // edge index of {t, h}: the smaller endpoint, or n-1 for {n-1, 0}
                let edge = if (t + 1) % n == h { t } else { h };
                edge % half
            })
        }
        BiorientationKind::Star { .. } => {
            from_zero_based(&digraph, 2, |_, h| if h == 0 { 0 } else { 1 })
        }
        BiorientationKind::Multipartite { parts } => {
            let part = multipartite_parts(parts);
            from_zero_based(&digraph, 2, |t, h| if part[t] < part[h] { 0 } else { 1 })
        }
    };
    Ok(ColoredDigraph { digraph, coloring })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubcycleOutcome {
    /// At most two asymmetric arcs: a rainbow coloring with `n - 1` colors.
    Colored(ColoredDigraph),
    /// Three or more asymmetric arcs: `rc* = src* = n`, no `(n-1)`-coloring.
    Refused {
        digraph: Digraph,
        asymmetric: usize,
        value: usize,
    },
}

/// Spanning subdigraph of the biorientation of `C_n` with the arcs in
/// `missing` removed.
///
/// With one asymmetric arc the symmetric pairs form a spanning biorientation
/// of `P_n` and take colors `1..=n-1`; the asymmetric arc reuses color 1.
/// With two, both asymmetric arcs share color 1 and the `n - 2` symmetric
/// pairs take colors `2..=n-1`.
pub fn color_subcycle(n: usize, missing: &[(usize, usize)]) -> Result<SubcycleOutcome> {
    if n < 3 {
        return Err(Error::Hypothesis(format!("cycle needs n >= 3, got {n}")));
    }
    let full = biorient(n, &cycle_edges(n))?;
    for &(t, h) in missing {
        if !full.has_arc(t, h) {
            return Err(Error::Hypothesis(format!(
                "{t} -> {h} is not an arc of the biorientation of C_{n}"
            )));
        }
    }
    let digraph = full.spanning_subdigraph(|i| !missing.contains(&full.arc(i)));
    if digraph.arc_count() + missing.len() != full.arc_count() {
        return Err(Error::Hypothesis("duplicate arc in removal list".into()));
    }
    if !digraph.is_strongly_connected() {
        return Err(Error::Hypothesis(
            "resulting digraph is not strongly connected".into(),
        ));
    }
    let asymmetric = digraph.count_asymmetric_arcs();
    match asymmetric {
        0 => Err(Error::Hypothesis(
            "needs at least one asymmetric arc; the digraph is symmetric".into(),
        )),
        1 | 2 => {
            let mut pair_color = vec![None; n];
            let mut next = if asymmetric == 1 { 1 } else { 2 };
            for (i, slot) in pair_color.iter_mut().enumerate() {
                let (a, b) = (i, (i + 1) % n);
                if digraph.has_arc(a, b) && digraph.has_arc(b, a) {
                    *slot = Some(next);
                    next += 1;
                }
            }
            let colors = digraph
                .arcs()
                .iter()
                .map(|&(t, h)| {
                    let edge = if (t + 1) % n == h { t } else { h };
                    pair_color[edge].unwrap_or(1)
                })
                .collect();
            let coloring = ArcColoring::new(colors, n - 1)?;
            Ok(SubcycleOutcome::Colored(ColoredDigraph {
                digraph,
                coloring,
            }))
        }
        _ => Ok(SubcycleOutcome::Refused {
            digraph,
            asymmetric,
            value: n,
        }),
    }
}
