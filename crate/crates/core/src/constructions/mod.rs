//! Explicit colorings, closed-form distances and predicted values for the
//! digraph families with known rainbow connection numbers.
//!
//! Internally classes and colors are 0-based; every emitted [`ArcColoring`]
//! uses colors `1..=c`.

mod biorientation;
mod circulant;
mod figure1;
mod predict;

pub use biorientation::{color_biorientation, color_subcycle, BiorientationKind, SubcycleOutcome};
pub use circulant::{
    circulant_diameter_formula, circulant_distance_formula, color_c2k, color_circulant_interval,
    color_multiple, color_square, C2kVariant,
};
pub use figure1::{figure1, figure1_vertex, FIGURE1_VERTICES};
pub use predict::{predict, Family, PredictedValue};

pub use crate::digraph::{pair_index, PairIndex};

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::verify::ArcColoring;

/// A digraph together with a coloring built for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    pub digraph: Digraph,
    pub coloring: ArcColoring,
}

/// Assigns every vertex a class; each arc takes the class of its tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailPartitionColoring {
    /// 0-based class of each vertex.
    pub classes: Vec<usize>,
    pub num_classes: usize,
}

impl TailPartitionColoring {
    pub fn new(classes: Vec<usize>) -> Self {
        let num_classes = classes.iter().max().map_or(0, |&c| c + 1);
        TailPartitionColoring {
            classes,
            num_classes,
        }
    }

    /// Class `r` becomes color `r + 1`.
    pub fn induce(&self, d: &Digraph) -> ArcColoring {
        let colors = d
            .arcs()
            .iter()
            .map(|&(t, _)| self.classes[t] as u32 + 1)
            .collect();
        ArcColoring::new(colors, self.num_classes).expect("class colors are in range")
    }
}

/// Builds an [`ArcColoring`] from 0-based per-arc colors.
pub(crate) fn from_zero_based(
    d: &Digraph,
    num_colors: usize,
    color: impl Fn(usize, usize) -> usize,
) -> ArcColoring {
    let colors = d
        .arcs()
        .iter()
        .map(|&(t, h)| color(t, h) as u32 + 1)
        .collect();
    ArcColoring::new(colors, num_colors).expect("construction colors are in range")
}
