//! `boomerang`: command-line front end for the edge-colored graph, Weyl
//! groupoid, frieze, Lie superalgebra, and root-of-unity linkage toolkit.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use boomerang::cartan::{
    build_rb, check_axioms, generate_groupoid, length_and_n, orbits_delta, real_roots,
    simply_connected_cover, CartanError, SemiCartanGraph, SemiCartanJson,
};
use boomerang::ecgraph::{is_rainbow_boomerang, rb_oracle, ColoredGraph, GraphJson};
use boomerang::frieze::{
    cartan_graph_from_quiddity, frieze_from_cartan_graph, frieze_from_quiddity,
    verify_conway_coxeter, FriezeError, QuidditySequence,
};
use boomerang::nichols::{
    build_g, d_lambda, d_lambda_oracle, dichotomy_check, positive_roots_with_orders,
    rb_lambda, verma_character, verma_highest_weight, verma_walk_verdict, Bicharacter,
    BicharacterJson, NicholsError, NicholsGraph,
};
use boomerang::superalg::{d21alpha, exchange_graph_gl, or_graph_gl, SuperError};
use boomerang_cli::report::{Check, RunReport};
use boomerang_cli::suite;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "boomerang", version, about = "Rainbow boomerang graph toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a colored graph (JSON file or stdin) for the rainbow boomerang
    /// property.
    RbCheck {
        /// Graph JSON path; reads stdin when omitted.
        path: Option<PathBuf>,
    },
    /// Analyze a semi Cartan graph (JSON file).  With no flags, everything
    /// runs.
    Cartan {
        path: PathBuf,
        /// Verify the Cartan graph axioms.
        #[arg(long)]
        axioms: bool,
        /// Compute and report the real roots.
        #[arg(long)]
        roots: bool,
        /// Assert word length = inversion number over all morphisms.
        #[arg(long)]
        lwnw: bool,
        /// Build the simply connected cover.
        #[arg(long)]
        sc: bool,
        /// Build the rainbow boomerang graph of the root orbits.
        #[arg(long)]
        rb: bool,
    },
    /// Generate a frieze pattern and its rank-2 Cartan graph from a quiddity
    /// sequence.
    Frieze {
        #[arg(long, value_delimiter = ',', required = true)]
        quiddity: Vec<i64>,
    },
    /// Lie superalgebra examples.
    Superalg {
        #[command(subcommand)]
        which: SuperCmd,
    },
    /// Nichols algebras of diagonal type at roots of unity.
    Nichols {
        #[command(subcommand)]
        which: NicholsCmd,
    },
    /// Run the full verification suite.
    Suite {
        /// Seed for randomized sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the cyclotomic-oracle cross-checks.
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Subcommand)]
enum SuperCmd {
    /// Emit a graph attached to gl(m|n).
    Gl {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Or)]
        emit: Emit,
    },
    /// Verify the stored D(2,1;alpha) data and print its root lists.
    D21a,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    /// The exchange graph on Young diagrams (a semi Cartan graph).
    Exchange,
    /// The odd reflection graph.
    Or,
    /// The rainbow boomerang graph of the root orbits.
    Rb,
}

#[derive(Subcommand)]
enum NicholsCmd {
    /// Build the Cartan graph of a bicharacter (JSON file).
    BuildG { path: PathBuf },
    /// Compute the linkage set D_lambda of a weight.
    Dlambda {
        path: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
    /// Sweep weights and verify linkage, dichotomy, quotient, walk, and
    /// character properties.
    VermaCheck {
        path: PathBuf,
        /// Sweep lambda over {-range..range}^theta.
        #[arg(long, default_value_t = 2)]
        lambda_range: i64,
    },
    /// Print the Verma character at a cover vertex.
    Char {
        path: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        lambda: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
    },
}

#[derive(Debug)]
enum CliError {
    /// Malformed input: bad JSON, bad graph data, out-of-range parameters.
    Parse(String),
    /// A generation budget was exhausted.
    Budget(String),
}

enum Rendered {
    /// A report with checks; the optional string precedes the table in
    /// table mode.
    Checked(RunReport, Option<String>),
    /// A plain artifact (graph JSON, DOT, term listing); always exit 0.
    Artifact(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command_echo: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, &command_echo.join(" ")) {
        Ok(Rendered::Artifact(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Rendered::Checked(report, extra)) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                _ => {
                    if let Some(extra) = extra {
                        println!("{extra}");
                    }
                    print!("{}", report.render_table(started.elapsed()));
                }
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli, echo: &str) -> Result<Rendered, CliError> {
    match &cli.cmd {
        Cmd::RbCheck { path } => cmd_rb_check(path.as_deref(), echo),
        Cmd::Cartan { path, axioms, roots, lwnw, sc, rb } => {
            let none = !(*axioms || *roots || *lwnw || *sc || *rb);
            cmd_cartan(
                path,
                echo,
                CartanFlags {
                    axioms: *axioms || none,
                    roots: *roots || none,
                    lwnw: *lwnw || none,
                    sc: *sc || none,
                    rb: *rb || none,
                },
            )
        }
        Cmd::Frieze { quiddity } => cmd_frieze(quiddity, echo),
        Cmd::Superalg { which } => match which {
            SuperCmd::Gl { m, n, emit } => cmd_superalg_gl(*m, *n, *emit, cli.format),
            SuperCmd::D21a => cmd_superalg_d21a(echo),
        },
        Cmd::Nichols { which } => match which {
            NicholsCmd::BuildG { path } => cmd_nichols_build_g(path, echo, cli.format),
            NicholsCmd::Dlambda { path, lambda } => cmd_nichols_dlambda(path, lambda, echo),
            NicholsCmd::VermaCheck { path, lambda_range } => {
                cmd_nichols_verma_check(path, *lambda_range, echo)
            }
            NicholsCmd::Char { path, lambda, vertex } => {
                cmd_nichols_char(path, lambda, *vertex)
            }
        },
        Cmd::Suite { seed, fast } => {
            let checks = suite::run(&suite::SuiteOptions { seed: *seed, fast: *fast });
            Ok(Rendered::Checked(RunReport::new(echo, checks), None))
        }
    }
}

fn read_input(path: Option<&std::path::Path>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Parse(format!("{}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Parse(format!("JSON error at line {}, column {}: {e}", e.line(), e.column()))
    })
}

fn cartan_budget(e: CartanError) -> CliError {
    match e {
        CartanError::BudgetExceeded(msg) => CliError::Budget(msg),
        other => CliError::Parse(other.to_string()),
    }
}

fn cmd_rb_check(path: Option<&std::path::Path>, echo: &str) -> Result<Rendered, CliError> {
    let json: GraphJson = parse_json(&read_input(path)?)?;
    let g = ColoredGraph::from_json(&json).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut checks = Vec::new();
    checks.push(Check::from_result(
        "proper coloring",
        g.validate_proper().map_err(|e| e.to_string()),
    ));
    checks.push(if g.is_connected() {
        Check::pass("connected")
    } else {
        Check::fail("connected", "graph is disconnected")
    });
    let healthy = checks.iter().all(Check::passed);
    let mut fast_verdict = None;
    if healthy {
        match is_rainbow_boomerang(&g) {
            Ok(Ok(_)) => {
                fast_verdict = Some(true);
                checks.push(Check::pass("rainbow boomerang"));
            }
            Ok(Err(witness)) => {
                fast_verdict = Some(false);
                checks.push(Check::fail("rainbow boomerang", format!("{witness:?}")));
            }
            Err(e) => checks.push(Check::fail("rainbow boomerang", e.to_string())),
        }
    }
    if let (Some(fast), true) = (fast_verdict, g.vertex_count() <= 10) {
        match rb_oracle(&g) {
            Ok(oracle) if oracle == fast => checks.push(Check::pass("walk oracle agreement")),
            Ok(oracle) => checks.push(Check::fail(
                "walk oracle agreement",
                format!("fast test says {fast}, oracle says {oracle}"),
            )),
            Err(e) => checks.push(Check::fail("walk oracle agreement", e.to_string())),
        }
    }
    // The exit code reflects the verdict, but an RB failure is a negative
    // answer, not a malfunction: keep the witness in the report.
    Ok(Rendered::Checked(RunReport::new(echo, checks), None))
}

struct CartanFlags {
    axioms: bool,
    roots: bool,
    lwnw: bool,
    sc: bool,
    rb: bool,
}

fn cmd_cartan(
    path: &std::path::Path,
    echo: &str,
    flags: CartanFlags,
) -> Result<Rendered, CliError> {
    let json: SemiCartanJson = parse_json(&read_input(Some(path))?)?;
    let g = SemiCartanGraph::from_json(&json).map_err(|e| CliError::Parse(e.to_string()))?;
    let morphisms = generate_groupoid(&g).map_err(cartan_budget)?;
    let roots = real_roots(&g, &morphisms).map_err(cartan_budget)?;
    let mut checks = Vec::new();
    let mut artifacts = serde_json::Map::new();
    let mut extra = String::new();
    if flags.axioms {
        match check_axioms(&g, &morphisms, &roots) {
            Ok(rep) if rep.all_pass() => checks.push(Check::pass("axioms CG1-CG4")),
            Ok(rep) => checks.push(Check::fail(
                "axioms CG1-CG4",
                rep.witness.unwrap_or_else(|| "an axiom fails".into()),
            )),
            Err(e) => return Err(cartan_budget(e)),
        }
    }
    if flags.roots {
        let mut table = BTreeMap::new();
        for (x, name) in g.names().iter().enumerate() {
            let pos: Vec<&Vec<i64>> = roots.positive[x].iter().collect();
            extra.push_str(&format!("R+ at {name}: {pos:?}\n"));
            table.insert(name.clone(), pos.into_iter().cloned().collect::<Vec<_>>());
        }
        artifacts.insert("positive_roots".into(), serde_json::json!(table));
        checks.push(Check::pass("real roots computed"));
    }
    if flags.lwnw {
        let mut bad = None;
        for w in &morphisms {
            let (l, n) = length_and_n(&g, &roots, w).map_err(cartan_budget)?;
            if l != n {
                bad = Some(format!("a morphism has length {l} but {n} inversions"));
                break;
            }
        }
        artifacts.insert("morphisms".into(), serde_json::json!(morphisms.len()));
        checks.push(match bad {
            None => Check::pass("length equals inversion number"),
            Some(w) => Check::fail("length equals inversion number", w),
        });
    }
    if flags.sc {
        let cover = simply_connected_cover(&g, 0).map_err(cartan_budget)?;
        artifacts
            .insert("cover_vertices".into(), serde_json::json!(cover.graph.vertex_count()));
        artifacts.insert("cover".into(), serde_json::json!(cover.graph.to_json()));
        checks.push(Check::pass("simply connected cover built"));
    }
    if flags.rb {
        match orbits_delta(&g, &roots) {
            Ok(orbits) => match build_rb(&g, &roots, &orbits) {
                Ok(rb) => {
                    let verdict = is_rainbow_boomerang(&rb)
                        .map_err(|e| CliError::Parse(e.to_string()))?;
                    artifacts.insert("rb".into(), serde_json::json!(rb.to_json()));
                    checks.push(match verdict {
                        Ok(_) => Check::pass("rainbow boomerang graph"),
                        Err(w) => Check::fail("rainbow boomerang graph", format!("{w:?}")),
                    });
                }
                Err(e) => checks.push(Check::fail("rainbow boomerang graph", e.to_string())),
            },
            Err(e @ CartanError::NotPathSimplyConnected(_)) => {
                checks.push(Check::fail("rainbow boomerang graph", e.to_string()));
            }
            Err(e) => return Err(cartan_budget(e)),
        }
    }
    let report = RunReport::new(echo, checks).with_artifacts(serde_json::Value::Object(artifacts));
    let extra = if extra.is_empty() { None } else { Some(extra.trim_end().to_string()) };
    Ok(Rendered::Checked(report, extra))
}

fn cmd_frieze(quiddity: &[i64], echo: &str) -> Result<Rendered, CliError> {
    let q = QuidditySequence::new(quiddity.to_vec())
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let mut checks = Vec::new();
    let mut artifacts = serde_json::Map::new();
    let mut extra = String::new();
    let frieze = match frieze_from_quiddity(&q) {
        Ok(f) => f,
        Err(e @ FriezeError::NotFinite(_)) => {
            checks.push(Check::fail("frieze closes", e.to_string()));
            return Ok(Rendered::Checked(RunReport::new(echo, checks), None));
        }
        Err(e) => return Err(CliError::Parse(e.to_string())),
    };
    checks.push(Check::pass("frieze closes"));
    checks.push(if verify_conway_coxeter(&frieze) {
        Check::pass("unimodular diamond rule")
    } else {
        Check::fail("unimodular diamond rule", "some diamond violates ad - bc = 1")
    });
    extra.push_str(&frieze.render());
    artifacts.insert("rows".into(), serde_json::json!(frieze.rows));
    let g = cartan_graph_from_quiddity(&q).map_err(|e| CliError::Parse(e.to_string()))?;
    let gj = g.to_json();
    extra.push_str(&format!(
        "cartan graph: {}\n",
        serde_json::to_string(&gj).expect("graph JSON serializes")
    ));
    artifacts.insert("cartan_graph".into(), serde_json::json!(gj));
    let morphisms = generate_groupoid(&g).map_err(cartan_budget)?;
    let roots = real_roots(&g, &morphisms).map_err(cartan_budget)?;
    match check_axioms(&g, &morphisms, &roots) {
        Ok(rep) if rep.all_pass() => checks.push(Check::pass("axioms CG1-CG4")),
        Ok(rep) => checks.push(Check::fail(
            "axioms CG1-CG4",
            rep.witness.unwrap_or_else(|| "an axiom fails".into()),
        )),
        Err(e) => return Err(cartan_budget(e)),
    }
    checks.push(Check::from_result(
        "root diagonal correspondence",
        frieze_from_cartan_graph(&g).map(|_| ()).map_err(|e| e.to_string()),
    ));
    let report = RunReport::new(echo, checks).with_artifacts(serde_json::Value::Object(artifacts));
    Ok(Rendered::Checked(report, Some(extra.trim_end().to_string())))
}

fn super_parse(e: SuperError) -> CliError {
    match e {
        SuperError::Cartan(CartanError::BudgetExceeded(msg)) => CliError::Budget(msg),
        other => CliError::Parse(other.to_string()),
    }
}

fn colored_graph_artifact(g: &ColoredGraph, name: &str, format: Format) -> String {
    match format {
        Format::Json => {
            serde_json::to_string_pretty(&g.to_json()).expect("graph JSON serializes")
        }
        Format::Dot => g.to_dot(name),
        Format::Table => {
            let mut out = format!(
                "{name}: {} vertices, {} edges, {} colors\n",
                g.vertex_count(),
                g.edge_count(),
                g.color_count()
            );
            for &(u, v, c) in g.edges() {
                out.push_str(&format!(
                    "  {} -- {}  [{}]\n",
                    g.vertex_names()[u],
                    g.vertex_names()[v],
                    g.color_names()[c]
                ));
            }
            out.trim_end().to_string()
        }
    }
}

fn cmd_superalg_gl(m: usize, n: usize, emit: Emit, format: Format) -> Result<Rendered, CliError> {
    let name = format!("gl_{m}_{n}");
    let text = match emit {
        Emit::Exchange => {
            let g = exchange_graph_gl(m, n).map_err(super_parse)?;
            match format {
                Format::Json => serde_json::to_string_pretty(&g.to_json())
                    .expect("graph JSON serializes"),
                Format::Dot => g.to_dot(&name),
                Format::Table => {
                    let mut out = format!(
                        "exchange graph of gl({m}|{n}): {} vertices, rank {}\n",
                        g.vertex_count(),
                        g.theta()
                    );
                    for i in 0..g.theta() {
                        for x in 0..g.vertex_count() {
                            let y = g.reflect_vertex(i, x);
                            if y > x {
                                out.push_str(&format!(
                                    "  {} -- {}  [{}]\n",
                                    g.names()[x],
                                    g.names()[y],
                                    i + 1
                                ));
                            }
                        }
                    }
                    out.trim_end().to_string()
                }
            }
        }
        Emit::Or => {
            let g = or_graph_gl(m, n).map_err(super_parse)?;
            colored_graph_artifact(&g, &name, format)
        }
        Emit::Rb => {
            let g = exchange_graph_gl(m, n).map_err(super_parse)?;
            let morphisms = generate_groupoid(&g).map_err(cartan_budget)?;
            let roots = real_roots(&g, &morphisms).map_err(cartan_budget)?;
            let orbits = orbits_delta(&g, &roots).map_err(cartan_budget)?;
            let rb = build_rb(&g, &roots, &orbits).map_err(cartan_budget)?;
            colored_graph_artifact(&rb, &name, format)
        }
    };
    Ok(Rendered::Artifact(text))
}

fn cmd_superalg_d21a(echo: &str) -> Result<Rendered, CliError> {
    let checks = vec![Check::from_result(
        "D(2,1;a) root system",
        boomerang_cli::suite::d21a_root_system(),
    )];
    let d = d21alpha();
    let mut extra = String::new();
    let mut lists = BTreeMap::new();
    for (x, pos) in d.expected_positive.iter().enumerate() {
        let named: Vec<String> = pos
            .iter()
            .map(|r| d.root_names.get(r).cloned().unwrap_or_else(|| format!("{r:?}")))
            .collect();
        extra.push_str(&format!("R+ at b{}: {}\n", x + 1, named.join(", ")));
        lists.insert(format!("b{}", x + 1), pos.clone());
    }
    let artifacts = serde_json::json!({
        "positive_roots": lists,
        "or_graph": d.expected_or.to_json(),
    });
    let report = RunReport::new(echo, checks).with_artifacts(artifacts);
    Ok(Rendered::Checked(report, Some(extra.trim_end().to_string())))
}

/// Loads a bicharacter and builds its Cartan graph; structural failures
/// (not of finite Cartan type) become a failed check rather than an error.
fn load_nichols(
    path: &std::path::Path,
) -> Result<Result<NicholsGraph, Check>, CliError> {
    let json: BicharacterJson = parse_json(&read_input(Some(path))?)?;
    let q = Bicharacter::from_json(&json).map_err(|e| CliError::Parse(e.to_string()))?;
    match build_g(&q) {
        Ok(ng) => Ok(Ok(ng)),
        Err(e @ (NicholsError::NotArithmetic(_, _) | NicholsError::OrderOne(_))) => {
            Ok(Err(Check::fail("finite Cartan type", e.to_string())))
        }
        Err(NicholsError::BudgetExceeded(msg))
        | Err(NicholsError::Cartan(CartanError::BudgetExceeded(msg))) => {
            Err(CliError::Budget(msg))
        }
        Err(e) => Err(CliError::Parse(e.to_string())),
    }
}

fn nichols_budget(e: NicholsError) -> CliError {
    match e {
        NicholsError::BudgetExceeded(msg)
        | NicholsError::Cartan(CartanError::BudgetExceeded(msg)) => CliError::Budget(msg),
        other => CliError::Parse(other.to_string()),
    }
}

fn cmd_nichols_build_g(
    path: &std::path::Path,
    echo: &str,
    format: Format,
) -> Result<Rendered, CliError> {
    let ng = match load_nichols(path)? {
        Ok(ng) => ng,
        Err(check) => return Ok(Rendered::Checked(RunReport::new(echo, vec![check]), None)),
    };
    if format == Format::Dot {
        return Ok(Rendered::Artifact(ng.cover.graph.to_dot("cover")));
    }
    let mut checks = vec![Check::pass("finite Cartan type")];
    match check_axioms(&ng.cover.graph, &ng.cover_morphisms, &ng.roots) {
        Ok(rep) if rep.all_pass() => checks.push(Check::pass("cover axioms CG1-CG4")),
        Ok(rep) => checks.push(Check::fail(
            "cover axioms CG1-CG4",
            rep.witness.unwrap_or_else(|| "an axiom fails".into()),
        )),
        Err(e) => return Err(cartan_budget(e)),
    }
    let rw = positive_roots_with_orders(&ng, 0).map_err(nichols_budget)?;
    let artifacts = serde_json::json!({
        "base_vertices": ng.base.vertex_count(),
        "cover_vertices": ng.vertex_count(),
        "positive_roots_with_orders": rw,
        "cover": ng.cover.graph.to_json(),
    });
    let extra = format!(
        "base vertices: {}\ncover vertices: {}\npositive roots at the base: {:?}",
        ng.base.vertex_count(),
        ng.vertex_count(),
        rw
    );
    let report = RunReport::new(echo, checks).with_artifacts(artifacts);
    Ok(Rendered::Checked(report, Some(extra)))
}

fn check_lambda_len(lambda: &[i64], theta: usize) -> Result<(), CliError> {
    if lambda.len() != theta {
        return Err(CliError::Parse(format!(
            "lambda has {} entries, bicharacter rank is {theta}",
            lambda.len()
        )));
    }
    Ok(())
}

fn cmd_nichols_dlambda(
    path: &std::path::Path,
    lambda: &[i64],
    echo: &str,
) -> Result<Rendered, CliError> {
    let ng = match load_nichols(path)? {
        Ok(ng) => ng,
        Err(check) => return Ok(Rendered::Checked(RunReport::new(echo, vec![check]), None)),
    };
    check_lambda_len(lambda, ng.cover.graph.theta())?;
    let fast = d_lambda(&ng, lambda).map_err(nichols_budget)?;
    let mut checks = vec![Check::pass("linkage set computed")];
    match d_lambda_oracle(&ng, lambda) {
        Ok(oracle) if oracle == fast => checks.push(Check::pass("oracle agreement")),
        Ok(oracle) => checks.push(Check::fail(
            "oracle agreement",
            format!("fast {fast:?} != oracle {oracle:?}"),
        )),
        Err(e) => return Err(nichols_budget(e)),
    }
    let roots: Vec<&Vec<i64>> = fast.iter().collect();
    let extra = format!("D_lambda = {roots:?}");
    let artifacts = serde_json::json!({ "lambda": lambda, "d_lambda": fast });
    let report = RunReport::new(echo, checks).with_artifacts(artifacts);
    Ok(Rendered::Checked(report, Some(extra)))
}

fn cmd_nichols_verma_check(
    path: &std::path::Path,
    range: i64,
    echo: &str,
) -> Result<Rendered, CliError> {
    let ng = match load_nichols(path)? {
        Ok(ng) => ng,
        Err(check) => return Ok(Rendered::Checked(RunReport::new(echo, vec![check]), None)),
    };
    let theta = ng.cover.graph.theta();
    let sweep = suite::lambda_sweep(theta, range);
    let mut dual = Ok(());
    let mut dichotomy = Ok(());
    let mut quotients = Ok(());
    let mut walks = Ok(());
    let mut characters = Ok(());
    for lambda in &sweep {
        if dual.is_ok() {
            let fast = d_lambda(&ng, lambda).map_err(nichols_budget)?;
            let oracle = d_lambda_oracle(&ng, lambda).map_err(nichols_budget)?;
            if fast != oracle {
                dual = Err(format!("lambda {lambda:?}: fast {fast:?} != oracle {oracle:?}"));
            }
        }
        if dichotomy.is_ok() && !dichotomy_check(&ng, lambda).map_err(nichols_budget)? {
            dichotomy = Err(format!("lambda {lambda:?}"));
        }
        let (rbq, _) = rb_lambda(&ng, lambda).map_err(nichols_budget)?;
        if quotients.is_ok() {
            if let Err(w) = is_rainbow_boomerang(&rbq)
                .map_err(|e| CliError::Parse(e.to_string()))?
            {
                quotients = Err(format!("lambda {lambda:?}: {w:?}"));
            }
        }
        if walks.is_ok() {
            for w in suite::walks_up_to(&rbq, 6) {
                let v = verma_walk_verdict(&rbq, &w).map_err(nichols_budget)?;
                if v.nonzero != v.rainbow || v.rainbow != v.shortest {
                    walks = Err(format!("lambda {lambda:?}, walk {:?}: {v:?}", w.vertex_seq));
                    break;
                }
            }
        }
        if characters.is_ok() {
            let ch0 = verma_character(&ng, 0, lambda).map_err(nichols_budget)?;
            let hw = verma_highest_weight(&ng, 0, lambda).map_err(nichols_budget)?;
            if ch0.coefficient(&hw) != 1 {
                characters = Err(format!("lambda {lambda:?}: highest weight coefficient != 1"));
            } else if let Some(x) = (1..ng.vertex_count()).find(|&x| {
                verma_character(&ng, x, lambda).map(|c| c != ch0).unwrap_or(true)
            }) {
                characters = Err(format!("lambda {lambda:?}: character differs at vertex {x}"));
            }
        }
    }
    let checks = vec![
        Check::from_result("linkage dual path", dual),
        Check::from_result("dichotomy", dichotomy),
        Check::from_result("quotients stay rainbow boomerang", quotients),
        Check::from_result("walk verdicts coincide", walks),
        Check::from_result("character invariance", characters),
    ];
    let artifacts = serde_json::json!({ "lambda_range": range, "weights": sweep.len() });
    let report = RunReport::new(echo, checks).with_artifacts(artifacts);
    Ok(Rendered::Checked(report, None))
}

fn cmd_nichols_char(
    path: &std::path::Path,
    lambda: &[i64],
    vertex: usize,
) -> Result<Rendered, CliError> {
    let ng = match load_nichols(path)? {
        Ok(ng) => ng,
        Err(check) => {
            return Err(CliError::Parse(
                check.witness.unwrap_or_else(|| "not of finite Cartan type".into()),
            ))
        }
    };
    check_lambda_len(lambda, ng.cover.graph.theta())?;
    if vertex >= ng.vertex_count() {
        return Err(CliError::Parse(format!(
            "vertex {vertex} out of range; the cover has {} vertices",
            ng.vertex_count()
        )));
    }
    let ch = verma_character(&ng, vertex, lambda).map_err(nichols_budget)?;
    let hw = verma_highest_weight(&ng, vertex, lambda).map_err(nichols_budget)?;
    let terms: Vec<(Vec<i64>, i64)> =
        ch.terms().map(|(e, c)| (e.clone(), *c)).collect();
    let artifact = serde_json::json!({
        "vertex": vertex,
        "lambda": lambda,
        "highest_weight_doubled": hw,
        // Exponents are doubled so that half-integer weights stay integral.
        "terms_doubled": terms,
        "dimension": ch.coefficient_sum(),
    });
    Ok(Rendered::Artifact(
        serde_json::to_string_pretty(&artifact).expect("character serializes"),
    ))
}
