use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rcdc::constructions::{
    color_biorientation, color_c2k, color_circulant_interval, color_multiple, color_square,
    color_subcycle, figure1, predict, BiorientationKind, C2kVariant, ColoredDigraph, Family,
    SubcycleOutcome,
};
use rcdc::digraph::{biorient, complete_edges, cycle_edges, directed_cycle};
use rcdc::format::{parse_coloring, parse_digraph, write_coloring, write_digraph};
use rcdc::report::{report_csv, ReportFamily};
use rcdc::solver::{solve, DEFAULT_NODE_BUDGET};
use rcdc::verify::{verify, MAX_COLORS};
use rcdc::{make_circulant, CirculantSpec, Digraph, Mode, SolveLimits, Status, Target};

const REPORT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "rcdc", version, about = "Rainbow connection of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a digraph file for a named family.
    Gen {
        /// circulant, biorient-path, biorient-cycle, biorient-star,
        /// biorient-multipartite, biorient-complete, figure1, dircycle, subcycle
        family: String,
        #[command(flatten)]
        params: Params,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write the explicit coloring of a construction.
    Color {
        /// interval, c2k, square, multiple, path, cycle, star, multipartite,
        /// subcycle, figure1
        construction: String,
        #[command(flatten)]
        params: Params,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Also write the colored digraph.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Check a coloring; exit 0 if connected, 1 if not.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, default_value = "strong")]
        mode: Mode,
        #[arg(long)]
        json: bool,
        /// Include one witness path per pair in the JSON report.
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact rc* or src*; exit 3 when the budget or color cap stops the search.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value = "rc")]
        target: Target,
        #[arg(long, default_value_t = MAX_COLORS)]
        max_colors: usize,
        #[arg(long, env = "RCDC_BUDGET_DEFAULT", default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        no_certificate: bool,
    },
    /// Predicted rc* / src* of a family member as JSON.
    Predict {
        /// interval, c2k, square, multiple, odd-pair, path, cycle, star,
        /// multipartite, subcycle, dircycle, complete
        family: String,
        #[command(flatten)]
        params: Params,
    },
    /// Diameter, or the distance and geodesic DAG of one pair.
    Distance {
        graph: PathBuf,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// CSV table of predictions against constructions and the solver.
    Report {
        /// interval, diameter, c2k, square, multiple, path, cycle, star, subcycle
        family: ReportFamily,
        /// Largest n (or k for c2k / square) in the sweep.
        #[arg(long)]
        max: usize,
        /// Node budget per solver call.
        #[arg(long, env = "RCDC_BUDGET_DEFAULT", default_value_t = REPORT_NODE_BUDGET)]
        budget: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    /// Generators of a circulant, or part sizes of a multipartite graph.
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    /// C_2k variant: one-k or one-k-plus-one.
    #[arg(long, default_value = "one-k")]
    variant: String,
    /// Arcs removed from the biorientation of C_n, as `t-h` pairs.
    #[arg(long, value_delimiter = ',')]
    remove: Vec<String>,
    /// Build D = H + a1a2 instead of H.
    #[arg(long)]
    extra_arc: bool,
}

enum Failure {
    /// Exit 1.
    Negative,
    /// Exit 2.
    Input(String),
    /// Exit 3.
    Budget,
}

impl From<rcdc::Error> for Failure {
    fn from(e: rcdc::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => cmd_gen(&family, &params, output.as_deref()),
        Command::Color {
            construction,
            params,
            output,
            graph_out,
        } => cmd_color(
            &construction,
            &params,
            output.as_deref(),
            graph_out.as_deref(),
        ),
        Command::Verify {
            graph,
            coloring,
            mode,
            json,
            witnesses,
        } => cmd_verify(&graph, &coloring, mode, json, witnesses),
        Command::Solve {
            graph,
            target,
            max_colors,
            budget,
            no_certificate,
        } => cmd_solve(&graph, target, max_colors, budget, !no_certificate),
        Command::Predict { family, params } => cmd_predict(&family, &params),
        Command::Distance {
            graph,
            from,
            to,
            json,
        } => cmd_distance(&graph, from, to, json),
        Command::Report {
            family,
            max,
            budget,
            output,
        } => cmd_report(family, max, budget, output.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget) => ExitCode::from(3),
    }
}

fn need(value: Option<usize>, name: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Input(format!("missing --{name}")))
}

fn parse_variant(s: &str) -> Result<C2kVariant, Failure> {
    match s {
        "one-k" => Ok(C2kVariant::OneK),
        "one-k-plus-one" => Ok(C2kVariant::OneKPlusOne),
        other => Err(Failure::Input(format!("unknown variant {other:?}"))),
    }
}

fn parse_removed(items: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    items
        .iter()
        .map(|s| {
            let (t, h) = s
                .split_once('-')
                .ok_or_else(|| Failure::Input(format!("expected t-h, got {s:?}")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Input(format!("bad vertex in {s:?}")))
            };
            Ok((parse(t)?, parse(h)?))
        })
        .collect()
}

fn subcycle_digraph(n: usize, removed: &[(usize, usize)]) -> Result<Digraph, Failure> {
    let full = biorient(n, &cycle_edges(n))?;
    for &(t, h) in removed {
        if !full.has_arc(t, h) {
            return Err(Failure::Input(format!(
                "{t}-{h} is not an arc of the biorientation of C_{n}"
            )));
        }
    }
    Ok(full.spanning_subdigraph(|i| !removed.contains(&full.arc(i))))
}

fn build_digraph(family: &str, p: &Params) -> Result<Digraph, Failure> {
    Ok(match family {
        "circulant" => {
            if p.set.is_empty() {
                return Err(Failure::Input("missing --set".into()));
            }
            make_circulant(&CirculantSpec::new(need(p.n, "n")?, p.set.iter().copied())?)
        }
        "biorient-path" => BiorientationKind::Path { n: need(p.n, "n")? }.digraph()?,
        "biorient-cycle" => BiorientationKind::Cycle { n: need(p.n, "n")? }.digraph()?,
        "biorient-star" => BiorientationKind::Star {
            leaves: need(p.n, "n")?,
        }
        .digraph()?,
        "biorient-multipartite" => BiorientationKind::Multipartite {
            parts: p.set.clone(),
        }
        .digraph()?,
        "biorient-complete" => {
            let n = need(p.n, "n")?;
            biorient(n, &complete_edges(n))?
        }
        "figure1" => figure1(p.extra_arc).digraph,
        "dircycle" => directed_cycle(need(p.n, "n")?)?,
        "subcycle" => subcycle_digraph(need(p.n, "n")?, &parse_removed(&p.remove)?)?,
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    })
}

fn write_output(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph, Failure> {
    Ok(parse_digraph(&read_file(path)?)?)
}

fn cmd_gen(family: &str, params: &Params, output: Option<&Path>) -> CmdResult {
    let d = build_digraph(family, params)?;
    write_output(output, &write_digraph(&d))?;
    eprintln!(
        "n={} m={} strong={}",
        d.vertex_count(),
        d.arc_count(),
        d.is_strongly_connected()
    );
    Ok(())
}

fn build_coloring(
    construction: &str,
    p: &Params,
) -> Result<(ColoredDigraph, Option<usize>), Failure> {
    let family = |f: Family| predict(&f).rc;
    Ok(match construction {
        "interval" => {
            let (n, k) = (need(p.n, "n")?, need(p.k, "k")?);
            (
                color_circulant_interval(n, k)?,
                family(Family::Interval { n, k }),
            )
        }
        "c2k" => {
            let (k, variant) = (need(p.k, "k")?, parse_variant(&p.variant)?);
            (color_c2k(k, variant)?, family(Family::C2k { k, variant }))
        }
        "square" => {
            let k = need(p.k, "k")?;
            (color_square(k)?, family(Family::Square { k }))
        }
        "multiple" => {
            let (k, a) = (need(p.k, "k")?, need(p.a, "a")?);
            (color_multiple(k, a)?, family(Family::Multiple { k, a }))
        }
        "path" => {
            let n = need(p.n, "n")?;
            (
                color_biorientation(&BiorientationKind::Path { n })?,
                family(Family::Path { n }),
            )
        }
        "cycle" => {
            let n = need(p.n, "n")?;
            (
                color_biorientation(&BiorientationKind::Cycle { n })?,
                family(Family::Cycle { n }),
            )
        }
        "star" => {
            let n = need(p.n, "n")?;
            (
                color_biorientation(&BiorientationKind::Star { leaves: n })?,
                family(Family::Star { n }),
            )
        }
        "multipartite" => {
            let parts = p.set.clone();
            (
                color_biorientation(&BiorientationKind::Multipartite {
                    parts: parts.clone(),
                })?,
                family(Family::Multipartite { parts }),
            )
        }
        "subcycle" => {
            let n = need(p.n, "n")?;
            match color_subcycle(n, &parse_removed(&p.remove)?)? {
                SubcycleOutcome::Colored(c) => (c, Some(n - 1)),
                SubcycleOutcome::Refused { asymmetric, value, .. } => {
                    return Err(Failure::Input(format!(
                        "{asymmetric} asymmetric arcs: no coloring with n-1 colors, rc* = src* = {value}"
                    )))
                }
            }
        }
        "figure1" => (figure1(p.extra_arc), None),
        other => return Err(Failure::Input(format!("unknown construction {other:?}"))),
    })
}

fn cmd_color(
    construction: &str,
    params: &Params,
    output: Option<&Path>,
    graph_out: Option<&Path>,
) -> CmdResult {
    let (colored, predicted) = build_coloring(construction, params)?;
    if let Some(path) = graph_out {
        write_output(Some(path), &write_digraph(&colored.digraph))?;
    }
    write_output(output, &write_coloring(&colored.digraph, &colored.coloring))?;
    let predicted = predicted.map_or_else(|| "-".to_string(), |v| v.to_string());
    eprintln!(
        "colors={} predicted={predicted}",
        colored.coloring.num_colors()
    );
    Ok(())
}

fn cmd_verify(graph: &Path, coloring: &Path, mode: Mode, json: bool, witnesses: bool) -> CmdResult {
    let d = load_digraph(graph)?;
    let col = parse_coloring(&read_file(coloring)?, &d)?;
    let report = verify(&d, &col, mode, witnesses)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        println!("{}", if report.verdict { "true" } else { "false" });
        for (u, v) in &report.failures {
            println!(
                "no rainbow {} {u} -> {v}",
                if mode == Mode::Strong {
                    "geodesic"
                } else {
                    "path"
                }
            );
        }
    }
    if report.verdict {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn cmd_solve(
    graph: &Path,
    target: Target,
    max_colors: usize,
    budget: u64,
    certificate: bool,
) -> CmdResult {
    let d = load_digraph(graph)?;
    let limits = SolveLimits {
        max_colors,
        node_budget: budget,
        find_certificate: certificate,
    };
    let result = solve(&d, target, &limits)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&result.to_json(&d)).expect("result serializes")
    );
    match result.status {
        Status::Exact => Ok(()),
        Status::Bounds | Status::BudgetExceeded => Err(Failure::Budget),
    }
}

fn predict_family(name: &str, p: &Params) -> Result<Family, Failure> {
    Ok(match name {
        "interval" => Family::Interval {
            n: need(p.n, "n")?,
            k: need(p.k, "k")?,
        },
        "c2k" => Family::C2k {
            k: need(p.k, "k")?,
            variant: parse_variant(&p.variant)?,
        },
        "square" => Family::Square { k: need(p.k, "k")? },
        "multiple" => Family::Multiple {
            k: need(p.k, "k")?,
            a: need(p.a, "a")?,
        },
        "odd-pair" => Family::OddPair { k: need(p.k, "k")? },
        "path" => Family::Path { n: need(p.n, "n")? },
        "cycle" => Family::Cycle { n: need(p.n, "n")? },
        "star" => Family::Star { n: need(p.n, "n")? },
        "multipartite" => Family::Multipartite {
            parts: p.set.clone(),
        },
        "subcycle" => Family::Subcycle {
            n: need(p.n, "n")?,
            asymmetric: need(p.k, "k")?,
        },
        "dircycle" => Family::DirectedCycle { m: need(p.n, "n")? },
        "complete" => Family::Complete { n: need(p.n, "n")? },
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    })
}

fn cmd_predict(name: &str, params: &Params) -> CmdResult {
    let prediction = predict(&predict_family(name, params)?);
    println!(
        "{}",
        serde_json::to_string_pretty(&prediction).expect("prediction serializes")
    );
    match prediction.reason {
        None => Ok(()),
        Some(reason) => Err(Failure::Input(reason)),
    }
}

fn cmd_distance(graph: &Path, from: Option<usize>, to: Option<usize>, json: bool) -> CmdResult {
    let d = load_digraph(graph)?;
    match (from, to) {
        (Some(u), Some(v)) => {
            let dag = d.geodesic_dag(u, v)?;
            if json {
                let arcs: Vec<_> = dag.arcs.iter().map(|&a| d.arc(a)).collect();
                let value = serde_json::json!({
                    "from": u, "to": v, "distance": dag.length, "geodesic_arcs": arcs,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{}", dag.length);
                for &a in &dag.arcs {
                    let (t, h) = d.arc(a);
                    println!("{t} {h}");
                }
            }
        }
        (None, None) => {
            let diameter = d.diameter()?;
            if json {
                let dist: Vec<Vec<Option<usize>>> = d.all_distances();
                let value = serde_json::json!({ "diameter": diameter, "distances": dist });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{diameter}");
            }
        }
        _ => return Err(Failure::Input("--from and --to go together".into())),
    }
    Ok(())
}

fn cmd_report(family: ReportFamily, max: usize, budget: u64, output: Option<&Path>) -> CmdResult {
    if budget == 0 {
        return Err(Failure::Input("budget must be positive".into()));
    }
    write_output(output, &report_csv(family, max, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removed_arcs_parse() {
        let items = vec!["4-3".to_string(), " 2 - 1".to_string()];
        assert!(matches!(parse_removed(&items), Ok(v) if v == vec![(4, 3), (2, 1)]));
        assert!(parse_removed(&["4:3".to_string()]).is_err());
        assert!(parse_removed(&["a-1".to_string()]).is_err());
    }

    #[test]
    fn variants_parse() {
        assert!(matches!(parse_variant("one-k"), Ok(C2kVariant::OneK)));
        assert!(matches!(
            parse_variant("one-k-plus-one"),
            Ok(C2kVariant::OneKPlusOne)
        ));
        assert!(parse_variant("two").is_err());
    }

    #[test]
    fn subcycle_rejects_foreign_arcs() {
        assert!(subcycle_digraph(5, &[(0, 2)]).is_err());
        let d = subcycle_digraph(5, &[(1, 0)]).ok().unwrap();
        assert_eq!(d.arc_count(), 9);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
