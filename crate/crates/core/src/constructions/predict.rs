use serde::{Deserialize, Serialize};

use super::{
    color_biorientation, color_c2k, color_circulant_interval, color_multiple, color_square,
    color_subcycle, BiorientationKind, C2kVariant, ColoredDigraph, SubcycleOutcome,
};
use crate::digraph::{
    biorient, complete_edges, directed_cycle, make_circulant, CirculantSpec, Digraph,
};
use crate::error::{Error, Result};

/// A digraph family with a closed-form rainbow connection number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum Family {
    /// `C_n([k])`.
    Interval { n: usize, k: usize },
    /// `C_{2k}({1,k})` or `C_{2k}({1,k+1})`.
    C2k { k: usize, variant: C2kVariant },
    /// `C_{(k-1)^2}({1,k})`.
    Square { k: usize },
    /// `C_{a k}({1,k})`.
    Multiple { k: usize, a: usize },
    /// `C_{2k+1}({1,k+1})`.
    OddPair { k: usize },
    /// Biorientation of `P_n`.
    Path { n: usize },
    /// Biorientation of `C_n`.
    Cycle { n: usize },
    /// Biorientation of `K_{1,n}`.
    Star { n: usize },
    /// Biorientation of a complete multipartite graph.
    Multipartite { parts: Vec<usize> },
    /// Strong spanning subdigraph of the biorientation of `C_n` with
    /// `asymmetric` asymmetric arcs.
    Subcycle { n: usize, asymmetric: usize },
    /// Directed cycle on `m` vertices.
    DirectedCycle { m: usize },
    /// Biorientation of `K_n`.
    Complete { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedValue {
    pub family: String,
    pub params: serde_json::Value,
    pub rc: Option<usize>,
    /// Left empty where only `rc*` is determined.
    pub src: Option<usize>,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Interval { .. } => "interval",
            Family::C2k { .. } => "c2k",
            Family::Square { .. } => "square",
            Family::Multiple { .. } => "multiple",
            Family::OddPair { .. } => "odd-pair",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::Multipartite { .. } => "multipartite",
            Family::Subcycle { .. } => "subcycle",
            Family::DirectedCycle { .. } => "directed-cycle",
            Family::Complete { .. } => "complete",
        }
    }

    fn params(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("family serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("family");
        }
        v
    }

    /// `(rc, src)` or the violated hypothesis.
    fn values(&self) -> std::result::Result<(usize, Option<usize>), String> {
        match *self {
            Family::Interval { n, k } => {
                if k >= 1 && k + 2 <= n {
                    let v = n.div_ceil(k);
                    Ok((v, Some(v)))
                } else {
                    Err(format!("requires 1 <= k <= n - 2 (n = {n}, k = {k})"))
                }
            }
            Family::C2k { k, .. } => {
                if k >= 2 {
                    Ok((k, Some(k)))
                } else {
                    Err(format!("requires k >= 2 (k = {k})"))
                }
            }
            Family::Square { k } => {
                if k >= 3 {
                    Ok((2 * k - 4, Some(2 * k - 4)))
                } else {
                    Err(format!("requires k >= 3 (k = {k})"))
                }
            }
            Family::Multiple { k, a } => {
                if k >= 3 && a + 1 >= k {
                    Ok((a + k - 2, Some(a + k - 2)))
                } else {
                    Err(format!("requires a >= k - 1 >= 2 (k = {k}, a = {a})"))
                }
            }
            Family::OddPair { k } => {
                // k = 1 gives C_3({1,2}), the complete biorientation of K_3
                if k >= 2 {
                    Ok((k + 1, Some(k + 1)))
                } else {
                    Err(format!("requires k >= 2 (k = {k})"))
                }
            }
            Family::Path { n } => {
                if n >= 2 {
                    Ok((n - 1, Some(n - 1)))
                } else {
                    Err(format!("requires n >= 2 (n = {n})"))
                }
            }
            Family::Cycle { n } => {
                if n >= 4 {
                    Ok((n.div_ceil(2), Some(n.div_ceil(2))))
                } else {
                    Err(format!("requires n >= 4 (n = {n})"))
                }
            }
            Family::Star { n } => {
                if n >= 2 {
                    Ok((2, Some(2)))
                } else {
                    Err(format!("requires n >= 2 (n = {n})"))
                }
            }
            Family::Multipartite { ref parts } => {
                if parts.len() >= 2 && parts.iter().any(|&p| p >= 2) && !parts.contains(&0) {
                    Ok((2, Some(2)))
                } else {
                    Err(format!(
                        "requires >= 2 non-empty parts, one of size >= 2 (parts = {parts:?})"
                    ))
                }
            }
            Family::Subcycle { n, asymmetric } => {
                if n < 3 || asymmetric < 1 || asymmetric > n {
                    Err(format!(
                        "requires n >= 3 and 1 <= asymmetric <= n (n = {n}, asymmetric = {asymmetric})"
                    ))
                } else if asymmetric <= 2 {
                    Ok((n - 1, None))
                } else {
                    Ok((n, Some(n)))
                }
            }
            Family::DirectedCycle { m } => {
                if m >= 3 {
                    Ok((m, Some(m)))
                } else {
                    Err(format!("requires m >= 3 (m = {m})"))
                }
            }
            Family::Complete { n } => {
                if n >= 2 {
                    Ok((1, Some(1)))
                } else {
                    Err(format!("requires n >= 2 (n = {n})"))
                }
            }
        }
    }

    /// The family member as a digraph. Subcycles drop the arcs
    /// `i+1 -> i` for `i < asymmetric`.
    pub fn digraph(&self) -> Result<Digraph> {
        match self {
            Family::Interval { n, k } => Ok(make_circulant(&CirculantSpec::interval(*n, *k)?)),
            Family::C2k { k, variant } => Ok(make_circulant(&CirculantSpec::new(
                2 * k,
                [1, variant.second_generator(*k)],
            )?)),
            Family::Square { k } => Ok(make_circulant(&CirculantSpec::new(
                (k.max(&2) - 1).pow(2),
                [1, *k],
            )?)),
            Family::Multiple { k, a } => Ok(make_circulant(&CirculantSpec::new(a * k, [1, *k])?)),
            Family::OddPair { k } => {
                Ok(make_circulant(&CirculantSpec::new(2 * k + 1, [1, k + 1])?))
            }
            Family::Path { n } => BiorientationKind::Path { n: *n }.digraph(),
            Family::Cycle { n } => BiorientationKind::Cycle { n: *n }.digraph(),
            Family::Star { n } => BiorientationKind::Star { leaves: *n }.digraph(),
            Family::Multipartite { parts } => BiorientationKind::Multipartite {
                parts: parts.clone(),
            }
            .digraph(),
            Family::Subcycle { n, asymmetric } => {
                let full = BiorientationKind::Cycle { n: *n }.digraph()?;
                let missing = subcycle_missing(*n, *asymmetric);
                Ok(full.spanning_subdigraph(|i| !missing.contains(&full.arc(i))))
            }
            Family::DirectedCycle { m } => directed_cycle(*m),
            Family::Complete { n } => biorient(*n, &complete_edges(*n)),
        }
    }

    /// The explicit coloring for this family, when one is known.
    pub fn construct(&self) -> Result<Option<ColoredDigraph>> {
        let colored = match self {
            Family::Interval { n, k } => color_circulant_interval(*n, *k)?,
            Family::C2k { k, variant } => color_c2k(*k, *variant)?,
            Family::Square { k } => color_square(*k)?,
            Family::Multiple { k, a } => color_multiple(*k, *a)?,
            Family::OddPair { .. } => return Ok(None),
            Family::Path { n } => color_biorientation(&BiorientationKind::Path { n: *n })?,
            Family::Cycle { n } => color_biorientation(&BiorientationKind::Cycle { n: *n })?,
            Family::Star { n } => color_biorientation(&BiorientationKind::Star { leaves: *n })?,
            Family::Multipartite { parts } => {
                color_biorientation(&BiorientationKind::Multipartite {
                    parts: parts.clone(),
                })?
            }
            Family::Subcycle { n, asymmetric } => {
                match color_subcycle(*n, &subcycle_missing(*n, *asymmetric))? {
                    SubcycleOutcome::Colored(c) => c,
                    SubcycleOutcome::Refused { .. } => return Ok(None),
                }
            }
            Family::DirectedCycle { .. } | Family::Complete { .. } => {
                let digraph = self.digraph()?;
                let m = digraph.arc_count();
                let coloring = match self {
                    Family::Complete { .. } => crate::verify::ArcColoring::uniform(m, 1)?,
                    _ => crate::verify::ArcColoring::all_distinct(m),
                };
                ColoredDigraph { digraph, coloring }
            }
        };
        Ok(Some(colored))
    }
}

fn subcycle_missing(n: usize, asymmetric: usize) -> Vec<(usize, usize)> {
    (0..asymmetric.min(n)).map(|i| ((i + 1) % n, i)).collect()
}

pub fn predict(family: &Family) -> PredictedValue {
    let (rc, src, reason) = match family.values() {
        Ok((rc, src)) => (Some(rc), src, None),
        Err(reason) => (None, None, Some(reason)),
    };
    PredictedValue {
        family: family.name().to_string(),
        params: family.params(),
        rc,
        src,
        applicable: reason.is_none(),
        reason,
    }
}

impl PredictedValue {
    /// Errors with the hypothesis text when the prediction does not apply.
    pub fn require(&self) -> Result<(usize, Option<usize>)> {
        match (self.applicable, self.rc) {
            (true, Some(rc)) => Ok((rc, self.src)),
            _ => Err(Error::Hypothesis(
                self.reason
                    .clone()
                    .unwrap_or_else(|| "not applicable".into()),
            )),
        }
    }
}
