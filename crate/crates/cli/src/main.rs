//! `grafotop`: graph topologies, dimension, homotopy and cohomology from the
//! command line. Every subcommand prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 input error, 3 internal
//! invariant violation.

mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grafotop::cohomology::{
    betti_numbers, d_squared_vanishes, dirac_operator, dirac_square_is_laplacian, euler_poincare_check,
    exterior_derivative, hodge_laplacian,
};
use grafotop::fixedpoint::{
    check_automorphism, fixed_invariant_set, lefschetz_number, nerve_automorphisms, permutation_from_labels,
};
use grafotop::graph::{enumerate_cliques, BUILTINS};
use grafotop::homeo::{
    check_homeomorphic, graphs_equivalent, is_one_homeomorphic, product_topology_experiment, subdivide_edge,
    Strategy, TopologicalGraph, DEFAULT_STRATEGIES,
};
use grafotop::homotopy::{Homotopy, MoveTrace};
use grafotop::invariants::{
    curvature, dimension, euler_characteristic, index_expectation, poincare_hopf_check, relative_dimension,
    vertex_dimension, MorseData,
};
use grafotop::random::random_injective;
use grafotop::suite::{run_suite, SuiteConfig};
use grafotop::topology::{
    dimension_predicates, dimension_summary, is_connected_topological, is_path_connected, nerve,
    optimize, validate_with, LIBRARY,
};
use grafotop::{Budget, Error, Graph, Rational, TriState, VertexSet};

use input::{builtin_graph, function_values, graph_spec, label_pairs, topology_spec};

const GRAPH_SPEC_HELP: &str = "a .json/.dot file or builtin:NAME[:P1,P2,...]";
const TOPO_SPEC_HELP: &str = "a sub-basis .json file, library:NAME, or star:G / unit-ball:G / indiscrete:G";

#[derive(Parser)]
#[command(name = "grafotop", version, about = "Graph topologies, dimension, homotopy and cohomology")]
struct Cli {
    /// Search budget for homotopy reductions and the optimizer.
    #[arg(long, global = true, env = "GRAFOTOP_BUDGET", default_value_t = 10_000)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

/// A single graph, from a spec or from `--builtin` with `--params`.
#[derive(Args)]
struct GraphArg {
    #[arg(help = GRAPH_SPEC_HELP)]
    spec: Option<String>,
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Vec<i64>,
}

impl GraphArg {
    fn load(&self) -> grafotop::Result<Graph> {
        match (&self.spec, &self.builtin) {
            (Some(s), None) => graph_spec(s),
            (None, Some(name)) => builtin_graph(name, &self.params),
            _ => Err(Error::Parse("give either a graph spec or --builtin".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Builtin graphs and basic graph data.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Inductive dimension of a graph, a vertex, or a vertex set.
    Dim {
        #[command(flatten)]
        graph: GraphArg,
        /// Local dimension 1 + dim S(x) at this vertex.
        #[arg(long)]
        vertex: Option<i64>,
        /// Relative dimension of this vertex set, plus the homogeneous/maximal predicates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        relative: Option<Vec<i64>>,
    },
    /// Euler characteristic from clique counts.
    Chi {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Curvature at each vertex and its sum.
    Curvature {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        vertex: Option<i64>,
    },
    /// Poincare-Hopf indices of an injective function.
    Morse {
        #[command(flatten)]
        graph: GraphArg,
        /// JSON list of values in label order, or an object label -> value.
        #[arg(long)]
        values: Option<String>,
        /// Random injective function from this seed (used when --values is absent).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Betti numbers and cohomology checks.
    Betti {
        #[command(flatten)]
        graph: GraphArg,
        /// Also check d^2 = 0, Euler-Poincare and the Hodge nullities.
        #[arg(long)]
        check: bool,
        /// Print the exterior derivative d_k.
        #[arg(long)]
        derivative: Option<usize>,
        /// Print the Hodge Laplacian L_k.
        #[arg(long)]
        laplacian: Option<usize>,
        /// Print the Dirac operator.
        #[arg(long)]
        dirac: bool,
    },
    /// Ivashchenko homotopy: reductions, contractibility, equivalence.
    Homotopy {
        #[command(subcommand)]
        action: HomotopyAction,
    },
    /// Graph topologies given by sub-bases.
    Topo {
        #[command(subcommand)]
        action: TopoAction,
    },
    /// Continuity, homeomorphism and equivalence of topological graphs.
    Homeo {
        #[command(subcommand)]
        action: HomeoAction,
    },
    /// Lefschetz numbers and invariant element families.
    Fix {
        #[command(subcommand)]
        action: FixAction,
    },
    /// Runs the property suites and prints a pass/fail table.
    Suite {
        /// Comma-separated keys: 1..8, gauss-bonnet, poincare-hopf, euler-poincare.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random graphs per check.
        #[arg(long, default_value_t = 40)]
        random: usize,
        /// Largest builtin order used by the expensive checks.
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
}

#[derive(Subcommand)]
enum GraphAction {
    /// List builtin graphs and library topologies.
    List,
    /// Print a builtin graph.
    Builtin {
        name: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Order, size, clique counts and connectivity.
    Info {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Convert a graph to JSON or DOT.
    Convert {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum HomotopyAction {
    /// Greedy reduction to an irreducible core.
    Collapse {
        #[command(flatten)]
        graph: GraphArg,
    },
    Contractible {
        #[command(flatten)]
        graph: GraphArg,
    },
    Equivalent {
        #[arg(help = GRAPH_SPEC_HELP)]
        a: String,
        #[arg(help = GRAPH_SPEC_HELP)]
        b: String,
    },
    /// Is the vertex removable (contractible unit sphere)?
    Removable {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, allow_hyphen_values = true)]
        vertex: i64,
    },
    /// Cone a new vertex over a contractible vertex set.
    Pyramid {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        base: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum TopoAction {
    Validate {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
    Nerve {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
    Summary {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
    /// Local search lowering the dimension functional.
    Optimize {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
    /// Print a sub-basis (e.g. star:builtin:cycle:6 or library:NAME).
    Show {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
    /// Topological connectedness against path connectedness.
    Connected {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
}

#[derive(Subcommand)]
enum HomeoAction {
    /// Weight-preserving nerve isomorphism between two valid topologies.
    Check {
        #[arg(help = TOPO_SPEC_HELP)]
        a: String,
        #[arg(help = TOPO_SPEC_HELP)]
        b: String,
    },
    /// Search canonical topologies making two graphs homeomorphic.
    Equivalent {
        #[arg(help = GRAPH_SPEC_HELP)]
        a: String,
        #[arg(help = GRAPH_SPEC_HELP)]
        b: String,
        #[arg(long, value_enum, value_delimiter = ',')]
        strategies: Vec<StrategyArg>,
    },
    /// Element-wise product of two topologies on the product graph.
    Product {
        #[arg(help = TOPO_SPEC_HELP)]
        a: String,
        #[arg(help = TOPO_SPEC_HELP)]
        b: String,
    },
    /// Subdivide an edge.
    Subdivide {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_delimiter = ',', num_args = 2, allow_hyphen_values = true)]
        edge: Vec<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Equivalence under edge subdivision and its inverse.
    OneHomeomorphic {
        #[arg(help = GRAPH_SPEC_HELP)]
        a: String,
        #[arg(help = GRAPH_SPEC_HELP)]
        b: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Star,
    UnitBall,
    Indiscrete,
    OptimizedStar,
    MergedBalls,
    Library,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Star => Strategy::Star,
            StrategyArg::UnitBall => Strategy::UnitBall,
            StrategyArg::Indiscrete => Strategy::Indiscrete,
            StrategyArg::OptimizedStar => Strategy::OptimizedStar,
            StrategyArg::MergedBalls => Strategy::MergedBalls,
            StrategyArg::Library => Strategy::Library,
        }
    }
}

#[derive(Subcommand)]
enum FixAction {
    /// Lefschetz number of a graph automorphism.
    Lefschetz {
        #[command(flatten)]
        graph: GraphArg,
        /// JSON list of [label, image] pairs; the identity when absent.
        #[arg(long)]
        map: Option<String>,
    },
    /// Weight-preserving automorphisms of a topology's nerve.
    Automorphisms {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
    },
    /// Invariant family of linked elements for the i-th nerve automorphism.
    Invariant {
        #[arg(help = TOPO_SPEC_HELP)]
        topology: String,
        #[arg(long, default_value_t = 0)]
        auto: usize,
    },
}

/// Outcome of a subcommand: JSON output and whether the verdict is negative.
struct Output {
    value: Value,
    negative: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, negative: false }
    }

    fn verdict(value: Value, negative: bool) -> Self {
        Output { value, negative }
    }
}

type Run = Result<Output, Error>;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn tristate(t: &TriState) -> Output {
    Output::verdict(to_json(t), t.is_no())
}

fn emit_graph(g: &Graph, format: Format) -> Output {
    match format {
        Format::Json => Output::ok(to_json(g)),
        Format::Dot => Output::ok(Value::String(g.to_dot())),
    }
}

fn valid_topology(spec: &str, budget: Budget) -> Result<TopologicalGraph, Error> {
    TopologicalGraph::with_budget(topology_spec(spec)?, budget)
}

fn run_graph(action: &GraphAction) -> Run {
    match action {
        GraphAction::List => {
            let graphs: Vec<Value> =
                BUILTINS.iter().map(|b| json!({"name": b.name, "params": b.params, "about": b.about})).collect();
            let topologies: Vec<Value> = LIBRARY
                .iter()
                .map(|e| json!({"name": e.name, "graph": e.graph, "params": e.params, "about": e.about}))
                .collect();
            Ok(Output::ok(json!({"graphs": graphs, "topologies": topologies})))
        }
        GraphAction::Builtin { name, params, format } => Ok(emit_graph(&builtin_graph(name, params)?, *format)),
        GraphAction::Info { graph } => {
            let g = graph.load()?;
            let cliques = enumerate_cliques(&g, None);
            Ok(Output::ok(json!({
                "order": g.order(),
                "size": g.size(),
                "clique_counts": cliques.counts(),
                "connected": g.is_connected(),
                "components": g.components().len(),
                "triangle_free": g.is_triangle_free(),
            })))
        }
        GraphAction::Convert { graph, format } => Ok(emit_graph(&graph.load()?, *format)),
    }
}

fn run_homotopy(action: &HomotopyAction, budget: Budget) -> Run {
    let mut h = Homotopy::new(budget);
    match action {
        HomotopyAction::Collapse { graph } => {
            let g = graph.load()?;
            let (core, trace): (Graph, MoveTrace) = h.collapse(&g);
            Ok(Output::ok(json!({"core": to_json(&core), "trace": to_json(&trace)})))
        }
        HomotopyAction::Contractible { graph } => Ok(tristate(&h.contractible(&graph.load()?))),
        HomotopyAction::Equivalent { a, b } => Ok(tristate(&h.equivalent(&graph_spec(a)?, &graph_spec(b)?))),
        HomotopyAction::Removable { graph, vertex } => {
            let g = graph.load()?;
            let removable = h.is_removable(&g, g.index_of(*vertex)?);
            Ok(Output::verdict(json!({"value": removable}), !removable))
        }
        HomotopyAction::Pyramid { graph, base } => {
            let g = graph.load()?;
            let ext = grafotop::homotopy::pyramid_extend(&g, &VertexSet::new(base.iter().copied()))?;
            Ok(Output::ok(to_json(&ext)))
        }
    }
}

fn run_topo(action: &TopoAction, budget: Budget) -> Run {
    match action {
        TopoAction::Validate { topology } => {
            let report = validate_with(&topology_spec(topology)?, budget);
            Ok(Output::verdict(to_json(&report), report.overall.is_no()))
        }
        TopoAction::Nerve { topology } => {
            let n = nerve(&topology_spec(topology)?);
            Ok(Output::ok(json!({
                "graph": to_json(&n.graph),
                "weights": to_json(&n.weights),
                "euler_characteristic": euler_characteristic(&n.graph),
            })))
        }
        TopoAction::Summary { topology } => Ok(Output::ok(to_json(&dimension_summary(&topology_spec(topology)?)))),
        TopoAction::Optimize { topology } => Ok(Output::ok(to_json(&optimize(&topology_spec(topology)?, budget.0)?))),
        TopoAction::Show { topology } => Ok(Output::ok(to_json(&topology_spec(topology)?))),
        TopoAction::Connected { topology } => {
            let b = topology_spec(topology)?;
            Ok(Output::ok(json!({
                "topologically_connected": is_connected_topological(&b),
                "path_connected": is_path_connected(b.host()),
            })))
        }
    }
}

fn run_homeo(action: &HomeoAction, budget: Budget) -> Run {
    match action {
        HomeoAction::Check { a, b } => {
            let (ta, tb) = (valid_topology(a, budget)?, valid_topology(b, budget)?);
            let map = check_homeomorphic(&ta, &tb)?;
            let negative = map.is_none();
            Ok(Output::verdict(json!({"homeomorphic": !negative, "map": to_json(&map)}), negative))
        }
        HomeoAction::Equivalent { a, b, strategies } => {
            let list: Vec<Strategy> = if strategies.is_empty() {
                DEFAULT_STRATEGIES.to_vec()
            } else {
                strategies.iter().map(|&s| s.into()).collect()
            };
            let r = graphs_equivalent(&graph_spec(a)?, &graph_spec(b)?, &list, budget);
            Ok(Output::verdict(to_json(&r), r.verdict.is_no()))
        }
        HomeoAction::Product { a, b } => {
            let (ta, tb) = (valid_topology(a, budget)?, valid_topology(b, budget)?);
            let r = product_topology_experiment(ta.subbasis(), tb.subbasis(), budget)?;
            Ok(Output::verdict(to_json(&r), r.validation.overall.is_no()))
        }
        HomeoAction::Subdivide { graph, edge, format } => {
            Ok(emit_graph(&subdivide_edge(&graph.load()?, edge[0], edge[1])?, *format))
        }
        HomeoAction::OneHomeomorphic { a, b } => {
            Ok(tristate(&is_one_homeomorphic(&graph_spec(a)?, &graph_spec(b)?, budget)))
        }
    }
}

fn run_fix(action: &FixAction, budget: Budget) -> Run {
    match action {
        FixAction::Lefschetz { graph, map } => {
            let g = graph.load()?;
            let perm = match map {
                Some(path) => permutation_from_labels(&g, &label_pairs(path)?)?,
                None => (0..g.order()).collect(),
            };
            check_automorphism(&g, &perm)?;
            Ok(Output::ok(to_json(&lefschetz_number(&g, &perm)?)))
        }
        FixAction::Automorphisms { topology } => {
            let t = valid_topology(topology, budget)?;
            Ok(Output::ok(to_json(&nerve_automorphisms(&t.nerve()))))
        }
        FixAction::Invariant { topology, auto } => {
            let t = valid_topology(topology, budget)?;
            let autos = nerve_automorphisms(&t.nerve());
            let a = autos
                .get(*auto)
                .ok_or_else(|| Error::NotAutomorphism(format!("only {} nerve automorphisms", autos.len())))?;
            let found = fixed_invariant_set(&t, a)?;
            Ok(Output::verdict(json!({"automorphism": to_json(a), "invariant": to_json(&found)}), found.is_none()))
        }
    }
}

fn run_invariant(command: &Command) -> Run {
    match command {
        Command::Dim { graph, vertex, relative } => {
            let g = graph.load()?;
            if let Some(x) = vertex {
                return Ok(Output::ok(json!({"value": vertex_dimension(&g, *x)?})));
            }
            if let Some(w) = relative {
                let w = VertexSet::new(w.iter().copied());
                let predicates = dimension_predicates(&g, &w)?;
                return Ok(Output::ok(json!({
                    "value": relative_dimension(&g, &w)?,
                    "details": to_json(&predicates),
                })));
            }
            let local: serde_json::Map<String, Value> = g
                .labels()
                .iter()
                .map(|&x| (x.to_string(), to_json(&vertex_dimension(&g, x).expect("vertex of g"))))
                .collect();
            Ok(Output::ok(json!({"value": dimension(&g), "details": {"local": local}})))
        }
        Command::Chi { graph } => {
            let g = graph.load()?;
            let counts = enumerate_cliques(&g, None).counts();
            Ok(Output::ok(json!({"value": euler_characteristic(&g), "details": {"clique_counts": counts}})))
        }
        Command::Curvature { graph, vertex } => {
            let g = graph.load()?;
            if let Some(x) = vertex {
                return Ok(Output::ok(json!({
                    "value": curvature(&g, *x)?,
                    "details": {"index_expectation": index_expectation(&g, *x)?},
                })));
            }
            let per: Vec<(i64, Rational)> =
                g.labels().iter().map(|&x| (x, curvature(&g, x).expect("vertex of g"))).collect();
            let total: Rational = per.iter().map(|(_, k)| k.clone()).sum();
            let map: serde_json::Map<String, Value> = per.iter().map(|(x, k)| (x.to_string(), to_json(k))).collect();
            Ok(Output::ok(json!({
                "value": total,
                "details": {"curvature": map, "euler_characteristic": euler_characteristic(&g)},
            })))
        }
        Command::Morse { graph, values, seed } => {
            let g = graph.load()?;
            let f = match values {
                Some(path) => function_values(path, &g)?,
                None => random_injective(g.order(), *seed).into_iter().map(Rational::from_int).collect(),
            };
            let data = MorseData::new(&g, &f)?;
            let report = poincare_hopf_check(&g, &f)?;
            let indices: serde_json::Map<String, Value> =
                g.labels().iter().zip(&data.indices).map(|(x, i)| (x.to_string(), json!(i))).collect();
            Ok(Output::ok(json!({
                "value": report.sum,
                "details": {"chi": report.chi, "equal": report.equal, "indices": indices, "f": to_json(&data.f)},
            })))
        }
        Command::Betti { graph, check, derivative, laplacian, dirac } => {
            let g = graph.load()?;
            let profile = betti_numbers(&g)?;
            let mut details = serde_json::Map::new();
            details.insert("profile".into(), to_json(&profile));
            if *check {
                let nullities: Vec<usize> = (0..profile.counts.len()).map(|k| hodge_laplacian(&g, k).nullity()).collect();
                let hodge_ok = nullities.iter().zip(&profile.betti).all(|(a, b)| a == b)
                    && nullities[profile.betti.len().min(nullities.len())..].iter().all(|&n| n == 0);
                let ep = euler_poincare_check(&g);
                let d2 = d_squared_vanishes(&g);
                let dirac_ok = dirac_square_is_laplacian(&g);
                details.insert(
                    "checks".into(),
                    json!({
                        "d_squared_zero": d2,
                        "euler_poincare": to_json(&ep),
                        "hodge_nullities": nullities,
                        "hodge_matches_betti": hodge_ok,
                        "dirac_squared_is_laplacian": dirac_ok,
                    }),
                );
                if !(d2 && ep.equal && hodge_ok && dirac_ok) {
                    return Err(Error::Internal(format!("cohomology identities fail: {}", Value::Object(details))));
                }
            }
            if let Some(k) = derivative {
                details.insert("derivative".into(), to_json(&exterior_derivative(&g, *k)));
            }
            if let Some(k) = laplacian {
                details.insert("laplacian".into(), to_json(&hodge_laplacian(&g, *k)));
            }
            if *dirac {
                details.insert("dirac".into(), to_json(&dirac_operator(&g)));
            }
            Ok(Output::ok(json!({"value": profile.betti, "details": details})))
        }
        _ => unreachable!("dispatched elsewhere"),
    }
}

fn run_suite_command(keys: &[String], seed: u64, random: usize, max_order: usize, budget: Budget) -> Run {
    let config = SuiteConfig { seed, random_graphs: random, max_order, budget };
    let results = run_suite(keys, &config).map_err(Error::Parse)?;
    for r in &results {
        eprintln!(
            "{:<15} {:<4} {:>6} cases  {}",
            r.key,
            if r.passed() { "PASS" } else { "FAIL" },
            r.cases,
            r.statement
        );
    }
    let all = results.iter().all(|r| r.passed());
    let value = json!({"passed": all, "results": to_json(&results)});
    if !all {
        return Err(Error::Internal(format!("property suite failed: {value}")));
    }
    Ok(Output::ok(value))
}

fn run(cli: &Cli) -> Run {
    let budget = Budget(cli.budget);
    match &cli.command {
        Command::Graph { action } => run_graph(action),
        Command::Homotopy { action } => run_homotopy(action, budget),
        Command::Topo { action } => run_topo(action, budget),
        Command::Homeo { action } => run_homeo(action, budget),
        Command::Fix { action } => run_fix(action, budget),
        Command::Suite { theorems, seed, random, max_order } => {
            run_suite_command(theorems, *seed, *random, *max_order, budget)
        }
        other => run_invariant(other),
    }
}

/// Writes pretty JSON to stdout; a closed pipe is not an error.
fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&out.value);
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(e) => {
            let code = if e.is_input_error() { 2 } else { 3 };
            emit(&json!({"error": e.to_string()}));
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
