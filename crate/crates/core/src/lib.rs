//! Rainbow connection and strong rainbow connection of digraphs.
//!
//! * [`digraph`]: representation, generators, distances, geodesic DAGs.
//! * [`verify`]: rainbow path / geodesic search and coloring verification.
//! * [`constructions`]: explicit colorings, closed-form distances and
//!   predicted values for circulant digraphs and biorientations.
//! * [`solver`]: exact `rc*` / `src*` by backtracking.
//! * [`report`]: CSV tables comparing predictions, constructions and the
//!   solver.
//!
//! ```
//! use rcdc::constructions::color_circulant_interval;
//! use rcdc::verify::verify;
//! use rcdc::{exact_src, Mode, SolveLimits};
//!
//! let c = color_circulant_interval(7, 3)?;
//! assert_eq!(c.coloring.num_colors(), 3);
//! assert!(verify(&c.digraph, &c.coloring, Mode::Strong, false)?.verdict);
//!
//! let result = exact_src(&c.digraph, &SolveLimits::default())?;
//! assert_eq!(result.value, Some(3));
//! # Ok::<(), rcdc::Error>(())
//! ```

pub mod constructions;
pub mod digraph;
pub mod error;
pub mod format;
pub mod report;
pub mod solver;
pub mod verify;

pub use digraph::{biorient, make_circulant, CirculantSpec, Digraph, GeodesicDag, PairIndex};
pub use error::{Error, Result};
pub use solver::{exact_rc, exact_src, SolveLimits, SolveResult, Status, Target};
pub use verify::{ArcColoring, Mode, VerificationReport};
