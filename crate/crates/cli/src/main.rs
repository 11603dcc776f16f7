//! `middleman`: find middlemen, contestability and brokerage power in a
//! directed network.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use middleman_core::centrality::{
    beta_measure, betweenness, bonacich, closeness, degree_centrality, pagerank, CentralityVector,
    Measure, DEFAULT_BONACICH_BETA, DEFAULT_DAMPING,
};
use middleman_core::contest::{contestation, minimal_contesting_sets, Contestation};
use middleman_core::dot::to_dot;
use middleman_core::fixtures::{self, FIXTURES};
use middleman_core::middleman::MiddlemanProfile;
use middleman_core::DirectedGraph;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "middleman",
    version,
    about = "Middlemen and brokerage power in directed networks"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-node report: roles, middleman class, power and centralities.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Bonacich attenuation parameter.
        #[arg(long, default_value_t = DEFAULT_BONACICH_BETA, allow_negative_numbers = true)]
        beta: f64,
        /// PageRank damping factor.
        #[arg(long, default_value_t = DEFAULT_DAMPING)]
        damping: f64,
    },
    /// Whether some set of other nodes can take over a node's brokerage.
    Contest {
        /// Node label.
        node: String,
        #[command(flatten)]
        input: Input,
        /// Also list every contesting set of minimum size.
        #[arg(long)]
        minimal: bool,
    },
    /// One centrality measure for every node.
    Centrality {
        /// degree, closeness, betweenness, bonacich, pagerank or beta.
        measure: Measure,
        #[command(flatten)]
        input: Input,
        /// Unnormalized betweenness.
        #[arg(long)]
        raw: bool,
        #[arg(long, default_value_t = DEFAULT_BONACICH_BETA, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = DEFAULT_DAMPING)]
        damping: f64,
    },
    /// Graphviz DOT with middlemen marked.
    ExportDot {
        #[command(flatten)]
        input: Input,
    },
    /// List the built-in example networks.
    Fixtures,
}

#[derive(Args)]
struct Input {
    /// Network file; use --fixture for a built-in network instead.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    path: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Reciprocate every arc before analysis.
    #[arg(long)]
    undirected: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// `source,target` per line.
    Edgelist,
    /// Square 0/1 matrix, whitespace or comma separated.
    Matrix,
}

impl Input {
    fn load(&self) -> anyhow::Result<DirectedGraph> {
        let g = match (&self.fixture, &self.path) {
            (Some(name), _) => fixtures::by_name(name).ok_or_else(|| {
                let known: Vec<&str> = FIXTURES.iter().map(|f| f.name).collect();
                anyhow!("unknown fixture `{name}` (known: {})", known.join(", "))
            })?,
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
                let parsed = match self.format {
                    Format::Edgelist => DirectedGraph::from_edge_list(&text),
                    Format::Matrix => DirectedGraph::parse_adjacency_matrix(&text, None),
                };
                parsed.with_context(|| format!("cannot parse {}", path.display()))?
            }
            (None, None) => bail!("no input network given"),
        };
        Ok(if self.undirected {
            g.underlying_undirected()
        } else {
            g
        })
    }
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn braces(labels: &[&str]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn contest(g: &DirectedGraph, node: &str, minimal: bool, json: bool) -> anyhow::Result<()> {
    let i = g.node(node)?;
    let verdict = contestation(g, i);
    let sets = if minimal {
        Some(minimal_contesting_sets(g, i)?)
    } else {
        None
    };
    let labelled: Option<Vec<Vec<&str>>> = sets
        .as_ref()
        .map(|sets| sets.iter().map(|s| g.set_labels(s)).collect());
    if json {
        let mut out = json!({
            "node": node,
            "verdict": verdict.as_str(),
            "contested": report::contested_value(verdict),
            "middleman": verdict == Contestation::Uncontested,
        });
        if let Some(sets) = &labelled {
            out["min_contesting_sets"] = json!(sets);
        }
        return print_json(&out);
    }
    let mut line = match verdict {
        Contestation::Contested => "contested".to_owned(),
        Contestation::Uncontested => "uncontested (middleman)".to_owned(),
        Contestation::Vacuous => "vacuous (not an intermediary)".to_owned(),
    };
    if let (Some(sets), Contestation::Contested) = (&labelled, verdict) {
        let shown: Vec<String> = sets.iter().map(|s| braces(s)).collect();
        line.push_str(&format!("; minimal: {}", shown.join(", ")));
    }
    println!("{line}");
    Ok(())
}

fn centrality(
    g: &DirectedGraph,
    measure: Measure,
    raw: bool,
    beta: f64,
    damping: f64,
    json: bool,
) -> anyhow::Result<()> {
    let vector: CentralityVector = match measure {
        Measure::Degree => degree_centrality(g).as_vector(),
        Measure::Closeness => closeness(g),
        Measure::Betweenness => betweenness(g, !raw),
        Measure::Bonacich => bonacich(g, beta)?,
        Measure::PageRank => pagerank(g, damping)?,
        Measure::Beta => beta_measure(g),
    };
    if json {
        let parameters: serde_json::Map<String, Value> = vector
            .parameters
            .iter()
            .map(|&(k, v)| (k.to_owned(), json!(v)))
            .collect();
        let scores: Vec<Value> = g
            .nodes()
            .map(|v| json!({ "label": g.label(v), "score": vector.scores[v.index()] }))
            .collect();
        return print_json(&json!({
            "measure": measure.as_str(),
            "normalization": vector.normalization,
            "parameters": parameters,
            "scores": scores,
            "version": env!("CARGO_PKG_VERSION"),
        }));
    }
    let width = g
        .labels()
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0);
    for v in g.nodes() {
        println!("{:<width$}  {:.3}", g.label(v), vector.scores[v.index()]);
    }
    Ok(())
}

fn list_fixtures(json: bool) -> anyhow::Result<()> {
    if json {
        let list: Vec<Value> = FIXTURES
            .iter()
            .map(|f| {
                let g = (f.build)();
                json!({
                    "name": f.name,
                    "description": f.description,
                    "n": g.node_count(),
                    "arcs": g.arc_count(),
                })
            })
            .collect();
        return print_json(&list);
    }
    let width = FIXTURES.iter().map(|f| f.name.len()).max().unwrap_or(0);
    for f in FIXTURES {
        println!("{:<width$}  {}", f.name, f.description);
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let json = cli.json;
    match cli.command {
        Command::Analyze {
            input,
            beta,
            damping,
        } => {
            let g = input.load()?;
            let report = report::analyze(&g, beta, damping, input.undirected)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                print_json(&report)
            } else {
                print!("{}", report.to_text());
                Ok(())
            }
        }
        Command::Contest {
            node,
            input,
            minimal,
        } => contest(&input.load()?, &node, minimal, json),
        Command::Centrality {
            measure,
            input,
            raw,
            beta,
            damping,
        } => centrality(&input.load()?, measure, raw, beta, damping, json),
        Command::ExportDot { input } => {
            let g = input.load()?;
            print!("{}", to_dot(&g, &MiddlemanProfile::compute(&g).class));
            Ok(())
        }
        Command::Fixtures => list_fixtures(json),
    }
}

/// 3 for guard and numerical limits, 2 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    let limit = err
        .chain()
        .filter_map(|e| e.downcast_ref::<middleman_core::Error>())
        .any(middleman_core::Error::is_resource_limit);
    if limit {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
