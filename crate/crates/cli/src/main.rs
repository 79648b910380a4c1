use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nutgraph::catalog;
use nutgraph::constructions::{self, CirculantSpec, ConstructionError, FowlerSite};
use nutgraph::enumeration::{run_census, CensusOptions, Universe};
use nutgraph::kernel::classify;
use nutgraph::synthesis::{construct_regular_nut, SynthesisError};
use nutgraph::Graph;

#[derive(Parser)]
#[command(name = "nutgraph", version, about = "Nut graph verification, construction and census")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
    Dot,
    Certificate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphEmit {
    Graph6,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graphs given in graph6 and print their kernel certificates.
    Verify {
        /// A graph6 string; read from --file or stdin when absent.
        graph6: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Build a certified regular nut graph of the given degree and order.
    Construct {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        order: usize,
        /// Output formats, in order (repeatable).
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Vec<Emit>,
    },
    /// Apply the Fowler construction at one vertex.
    Fowler {
        graph6: Option<String>,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: GraphEmit,
    },
    /// Replace an edge by a path through four new vertices.
    Subdivide {
        graph6: Option<String>,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: GraphEmit,
    },
    /// The antiprism A_n on 2n vertices.
    Antiprism {
        n: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: GraphEmit,
    },
    /// The circulant graph Ci_N(offsets).
    Circulant {
        #[arg(long)]
        order: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        offsets: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: GraphEmit,
    },
    /// Exhaustive nut census over all graphs or connected regular graphs.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Restrict to connected graphs of this degree.
        #[arg(long)]
        regular: Option<usize>,
        /// Allow runs that take hours.
        #[arg(long)]
        long_run: bool,
        /// Write every nut graph found, one graph6 per line.
        #[arg(long)]
        emit_nuts: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Browse the built-in seed graphs.
    Seeds {
        #[command(subcommand)]
        action: SeedsAction,
    },
}

#[derive(Subcommand)]
enum SeedsAction {
    List,
    Show { name: String },
}

/// Exit status: 1 for a well-formed request the mathematics rejects, 2 for
/// input that could not be understood.
enum Failure {
    Domain(String),
    Input(String),
}

type Outcome = Result<String, Failure>;

fn input_text(arg: Option<String>, file: Option<PathBuf>) -> Result<String, Failure> {
    if let Some(s) = arg {
        return Ok(s);
    }
    if let Some(path) = file {
        return fs::read_to_string(&path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())));
    }
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

fn parse_graphs(text: &str) -> Result<Vec<Graph>, Failure> {
    let graphs: Vec<Graph> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| {
            Graph::from_graph6(line)
                .map_err(|e| Failure::Input(format!("graph6 line {}: {e}", i + 1)))
        })
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        return Err(Failure::Input("no graph6 input".into()));
    }
    Ok(graphs)
}

fn single_graph(arg: Option<String>) -> Result<Graph, Failure> {
    let graphs = parse_graphs(&input_text(arg, None)?)?;
    match <[Graph; 1]>::try_from(graphs) {
        Ok([g]) => Ok(g),
        Err(v) => Err(Failure::Input(format!("expected one graph, got {}", v.len()))),
    }
}

fn render(g: &Graph, emit: GraphEmit) -> String {
    match emit {
        GraphEmit::Graph6 => format!("{}\n", g.to_graph6()),
        GraphEmit::Dot => g.to_dot("g"),
    }
}

fn construction_failure(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::VertexOutOfRange { .. }
        | ConstructionError::OffsetOutOfRange { .. }
        | ConstructionError::DuplicateOffset(_)
        | ConstructionError::Dimension { .. } => Failure::Input(e.to_string()),
        ConstructionError::IsolatedVertex(_)
        | ConstructionError::NotAnEdge(..)
        | ConstructionError::OrderTooSmall { .. } => Failure::Domain(e.to_string()),
    }
}

fn verify_block(g: &Graph) -> String {
    let class = classify(g);
    format!("{}, nullity {}\n{}", class.tag, class.nullity(), class.kernel.to_text())
}

fn cmd_verify(graph6: Option<String>, file: Option<PathBuf>) -> Outcome {
    let graphs = parse_graphs(&input_text(graph6, file)?)?;
    Ok(graphs.iter().map(verify_block).collect::<Vec<_>>().join("\n"))
}

fn cmd_construct(degree: usize, order: usize, emit: &[Emit]) -> Outcome {
    let (g, cert, plan) = construct_regular_nut(degree, order).map_err(|e| match e {
        SynthesisError::LiftFailed(_) => Failure::Domain(format!("internal error: {e}")),
        other => Failure::Domain(other.to_string()),
    })?;
    eprintln!(
        "seed {} ({} vertices), {} Fowler step(s) at {}",
        plan.seed_name, plan.seed_order, plan.steps, plan.vertex_rule
    );
    let mut out = String::new();
    for e in emit {
        match e {
            Emit::Graph6 => out.push_str(&render(&g, GraphEmit::Graph6)),
            Emit::Dot => out.push_str(&render(&g, GraphEmit::Dot)),
            Emit::Certificate => {
                out.push_str("nullity 1\n");
                out.push_str(
                    &cert.vector.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                );
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn cmd_fowler(graph6: Option<String>, vertex: usize, emit: GraphEmit) -> Outcome {
    let g = single_graph(graph6)?;
    let site = FowlerSite::new(&g, vertex).map_err(construction_failure)?;
    if site.is_degenerate() {
        eprintln!("warning: vertex {vertex} has degree 1; the result may be disconnected");
    }
    Ok(render(&site.build(), emit))
}

fn cmd_subdivide(graph6: Option<String>, edge: &[usize], emit: GraphEmit) -> Outcome {
    let g = single_graph(graph6)?;
    let h = constructions::subdivide_4fold(&g, (edge[0], edge[1])).map_err(construction_failure)?;
    Ok(render(&h, emit))
}

fn cmd_enumerate(
    order: usize,
    regular: Option<usize>,
    long_run: bool,
    emit_nuts: Option<PathBuf>,
    jobs: usize,
) -> Outcome {
    let universe = regular.map_or(Universe::All, Universe::Regular);
    let options = CensusOptions {
        jobs,
        long_run,
        collect_nuts: emit_nuts.is_some(),
    };
    let report = run_census(order, universe, options).map_err(|e| Failure::Domain(e.to_string()))?;
    eprintln!("elapsed {:.3}s", report.elapsed.as_secs_f64());
    if let Some(path) = emit_nuts {
        let body: String = report.nuts.iter().map(|g| format!("{}\n", g.to_graph6())).collect();
        fs::write(&path, body)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(report.table())
}

fn cmd_seeds(action: SeedsAction) -> Outcome {
    match action {
        SeedsAction::List => Ok(catalog::all_seeds()
            .iter()
            .map(|s| {
                let degree = s.expected_degree.map_or("-".to_string(), |d| d.to_string());
                format!("{} {} {} {}\n", s.name, s.expected_order, degree, s.graph6)
            })
            .collect()),
        SeedsAction::Show { name } => {
            let s = catalog::seed(&name).map_err(|e| Failure::Input(e.to_string()))?;
            eprintln!("{}", s.description);
            Ok(format!("{}\n{}", s.graph6, verify_block(&s.graph)))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify { graph6, file } => cmd_verify(graph6, file),
        Command::Construct { degree, order, emit } => cmd_construct(degree, order, &emit),
        Command::Fowler { graph6, vertex, emit } => cmd_fowler(graph6, vertex, emit),
        Command::Subdivide { graph6, edge, emit } => cmd_subdivide(graph6, &edge, emit),
        Command::Antiprism { n, emit } => {
            let g = constructions::antiprism(n).map_err(construction_failure)?;
            Ok(render(&g, emit))
        }
        Command::Circulant { order, offsets, emit } => {
            let spec = CirculantSpec::new(order, &offsets).map_err(|e| match e {
                ConstructionError::OrderTooSmall { .. } => Failure::Input(e.to_string()),
                other => construction_failure(other),
            })?;
            Ok(render(&constructions::circulant(&spec), emit))
        }
        Command::Enumerate {
            order,
            regular,
            long_run,
            emit_nuts,
            jobs,
        } => cmd_enumerate(order, regular, long_run, emit_nuts, jobs),
        Command::Seeds { action } => cmd_seeds(action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
