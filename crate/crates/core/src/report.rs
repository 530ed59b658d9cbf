//! CSV tables comparing predicted values with BFS diameters, verified
//! constructions and (budget permitting) the exact solver.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    circulant_diameter_formula, circulant_distance_formula, predict, C2kVariant, Family,
};
use crate::digraph::{make_circulant, CirculantSpec};
use crate::error::Result;
use crate::solver::{solve, SolveLimits, Status, Target};
use crate::verify::{Mode, Verifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFamily {
    /// `C_n([k])` for `n <= max`.
    Interval,
    /// Distance/diameter formula of `C_n({1,k})` against BFS for `n <= max`.
    Diameter,
    /// Both `C_{2k}` variants for `k <= max`.
    C2k,
    /// `C_{(k-1)^2}({1,k})` for `3 <= k <= max`.
    Square,
    /// `C_{ak}({1,k})` with `n = ak <= max`.
    Multiple,
    Path,
    Cycle,
    Star,
    /// Strong spanning subdigraphs of the biorientation of `C_n`, `n <= max`.
    Subcycle,
}

impl std::str::FromStr for ReportFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "interval" => ReportFamily::Interval,
            "diameter" => ReportFamily::Diameter,
            "c2k" => ReportFamily::C2k,
            "square" => ReportFamily::Square,
            "multiple" => ReportFamily::Multiple,
            "path" => ReportFamily::Path,
            "cycle" => ReportFamily::Cycle,
            "star" => ReportFamily::Star,
            "subcycle" => ReportFamily::Subcycle,
            other => return Err(format!("unknown report family {other:?}")),
        })
    }
}

impl ReportFamily {
    fn members(self, max: usize) -> Vec<Family> {
        match self {
            ReportFamily::Interval => (3..=max)
                .flat_map(|n| (1..=n - 2).map(move |k| Family::Interval { n, k }))
                .collect(),
            ReportFamily::Diameter => Vec::new(),
            ReportFamily::C2k => (2..=max)
                .flat_map(|k| {
                    [C2kVariant::OneK, C2kVariant::OneKPlusOne]
                        .map(|variant| Family::C2k { k, variant })
                })
                .collect(),
            ReportFamily::Square => (3..=max).map(|k| Family::Square { k }).collect(),
            ReportFamily::Multiple => (3..=max)
                .flat_map(|k| (k - 1..=max / k).map(move |a| Family::Multiple { k, a }))
                .collect(),
            ReportFamily::Path => (2..=max).map(|n| Family::Path { n }).collect(),
            ReportFamily::Cycle => (4..=max).map(|n| Family::Cycle { n }).collect(),
            ReportFamily::Star => (2..=max).map(|n| Family::Star { n }).collect(),
            ReportFamily::Subcycle => (3..=max)
                .flat_map(|n| (1..=n).map(move |asymmetric| Family::Subcycle { n, asymmetric }))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub family: String,
    pub params: String,
    pub predicted_rc: Option<usize>,
    pub predicted_src: Option<usize>,
    pub diameter: usize,
    pub colors: Option<usize>,
    pub verified: Option<bool>,
    pub solver_rc: Option<usize>,
    pub solver_src: Option<usize>,
    pub agree: bool,
}

fn params_string(family: &Family) -> String {
    let v = predict(family).params;
    let obj = v.as_object().expect("params are an object");
    obj.iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn solver_value(result: Result<crate::solver::SolveResult>) -> Option<usize> {
    match result {
        Ok(r) if r.status == Status::Exact => r.value,
        _ => None,
    }
}

/// One row per family member. The solver runs with `node_budget` per target;
/// exhausted budgets leave the solver columns empty.
pub fn family_rows(family: ReportFamily, max: usize, node_budget: u64) -> Result<Vec<ReportRow>> {
    let limits = SolveLimits {
        find_certificate: false,
        ..SolveLimits::with_budget(node_budget)
    };
    let mut rows = Vec::new();
    for member in family.members(max) {
        let prediction = predict(&member);
        let digraph = member.digraph()?;
        let verifier = Verifier::new(&digraph)?;
        let diameter = verifier.diameter();
        let (colors, verified) = match member.construct()? {
            Some(c) => {
                // the two-asymmetric-arc coloring is only claimed rainbow
                let mode = match member {
                    Family::Subcycle { .. } if prediction.src.is_none() => Mode::Rainbow,
                    _ => Mode::Strong,
                };
                (
                    Some(c.coloring.num_colors()),
                    Some(verifier.is_connected(&c.coloring, mode)?),
                )
            }
            None => (None, None),
        };
        let solver_rc = solver_value(solve(&digraph, Target::Rc, &limits));
        let solver_src = solver_value(solve(&digraph, Target::Src, &limits));

        let rc = prediction.rc;
        let agree = rc.is_some()
            && rc.is_some_and(|v| diameter <= v)
            && colors.is_none_or(|c| Some(c) == rc)
            && verified.unwrap_or(true)
            && solver_rc.is_none_or(|v| Some(v) == rc)
            && match (solver_src, prediction.src) {
                (Some(s), Some(p)) => s == p,
                _ => true,
            };
        rows.push(ReportRow {
            family: prediction.family.clone(),
            params: params_string(&member),
            predicted_rc: rc,
            predicted_src: prediction.src,
            diameter,
            colors,
            verified,
            solver_rc,
            solver_src,
            agree,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterRow {
    pub n: usize,
    pub k: usize,
    pub formula_diameter: usize,
    pub bfs_diameter: usize,
    pub distances_match: bool,
    pub agree: bool,
}

/// Every `(n, k)` with `n <= max` where the distance formula applies.
pub fn diameter_rows(max: usize) -> Vec<DiameterRow> {
    let mut rows = Vec::new();
    for n in 3..=max {
        for k in 2..n {
            let Ok(formula_diameter) = circulant_diameter_formula(n, k) else {
                continue;
            };
            let d = make_circulant(&CirculantSpec::new(n, [1, k]).expect("1 < k < n"));
            let bfs = d.distances_from(0).expect("vertex 0 exists");
            let distances_match =
                (0..n).all(|i| circulant_distance_formula(n, k, i).ok() == bfs[i]);
            let bfs_diameter = d
                .diameter()
                .expect("circulants with generator 1 are strong");
            rows.push(DiameterRow {
                n,
                k,
                formula_diameter,
                bfs_diameter,
                distances_match,
                agree: distances_match && formula_diameter == bfs_diameter,
            });
        }
    }
    rows
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

pub fn report_csv(family: ReportFamily, max: usize, node_budget: u64) -> Result<String> {
    let mut out = String::new();
    if family == ReportFamily::Diameter {
        out.push_str("n,k,formula_diameter,bfs_diameter,distances_match,agree\n");
        for r in diameter_rows(max) {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.n, r.k, r.formula_diameter, r.bfs_diameter, r.distances_match, r.agree
            )
            .unwrap();
        }
        return Ok(out);
    }
    out.push_str(
        "family,params,predicted_rc,predicted_src,diameter,colors,verified,solver_rc,solver_src,agree\n",
    );
    for r in family_rows(family, max, node_budget)? {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.params,
            opt(&r.predicted_rc),
            opt(&r.predicted_src),
            r.diameter,
            opt(&r.colors),
            opt(&r.verified),
            opt(&r.solver_rc),
            opt(&r.solver_src),
            r.agree
        )
        .unwrap();
    }
    Ok(out)
}
