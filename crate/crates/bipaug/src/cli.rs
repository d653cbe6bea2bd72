//! The `bipaug` command line.

use std::fmt::Write as _;
use std::io::{Read, Write};

use bipaug_core::verify::verify_edges;
use bipaug_core::{
    augment, brute_force_optimal, generate_instance, AugmentError, BipartiteGraph, InstanceKind,
    OracleError, VerifyReport, WitnessKind,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, Family};
use crate::{dot, format, json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NO_BICONNECTOR: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "bipaug", version, about = "Minimum bipartite biconnectivity augmentation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a minimum set of edges that biconnects every component.
    Augment(AugmentArgs),
    /// Check an edge list against a graph.
    Verify(VerifyArgs),
    /// Exhaustive minimum for a small graph.
    Oracle(OracleArgs),
    /// Write a generated graph in the input format.
    Gen(GenArgs),
    /// Write the block trees as Graphviz.
    Tree(TreeArgs),
    /// Time the solver over a ladder of sizes.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct AugmentArgs {
    /// Graph files; `-` reads standard input.
    #[arg(default_value = "-")]
    files: Vec<String>,
    /// Annotate each edge with its case and rule.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
    /// Re-check the output with the deletion-based checker.
    #[arg(long)]
    verify: bool,
    /// Include census, matching profile and criticality (JSON output).
    #[arg(long)]
    stats: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: String,
    /// `ADD <a-id> <b-id>` lines, as printed by `augment`.
    edges: String,
    /// Also compare the size with the exhaustive minimum.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(default_value = "-")]
    input: String,
    /// Largest edge count to try.
    #[arg(long, default_value_t = bipaug_core::verify::MAX_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Path,
    Cycle,
    Spider,
    Broom,
    Caterpillar,
    Random,
}

#[derive(Args, Debug)]
struct GenArgs {
    kind: GenKind,
    /// Vertex count of a path or cycle.
    #[arg(long, default_value_t = 4)]
    length: usize,
    /// Chain lengths of a spider.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 1, 2, 2])]
    chains: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    bristles: usize,
    #[arg(long, default_value_t = 3)]
    spine: usize,
    #[arg(long, default_value_t = 1)]
    legs: usize,
    /// Side sizes and edge probability of a random graph.
    #[arg(long, default_value_t = 3)]
    a: usize,
    #[arg(long, default_value_t = 3)]
    b: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// The benchmark member of a spider, broom or caterpillar with about
    /// this many vertices; overrides the shape options.
    #[arg(long, value_parser = bench::parse_size)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct TreeArgs {
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', value_parser = bench::parse_size, default_value = "1e4,2e4,4e4,8e4")]
    sizes: Vec<usize>,
    #[arg(long, default_value = "spider")]
    kind: Family,
    /// Runs per size; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    repeat: usize,
    /// Leave out wall times, so the output is reproducible.
    #[arg(long)]
    no_time: bool,
    #[arg(long)]
    json: bool,
}

/// Standard streams of one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<AugmentError> for Failure {
    fn from(e: AugmentError) -> Self {
        let code = match e {
            AugmentError::NoBiconnector { .. } => EXIT_NO_BICONNECTOR,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs one command line and returns the exit status.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = io.stderr.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = io.stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut stdin_text: Option<String> = None;
    let mut read = |path: &str| -> Result<String, Failure> {
        if path == "-" {
            let text = stdin_text.get_or_insert_with(|| {
                let mut s = String::new();
                let _ = io.stdin.read_to_string(&mut s);
                s
            });
            Ok(text.clone())
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
        }
    };
    let outcome = match cli.command {
        Command::Augment(a) => cmd_augment(&a, &mut read),
        Command::Verify(a) => cmd_verify(&a, &mut read),
        Command::Oracle(a) => cmd_oracle(&a, &mut read),
        Command::Gen(a) => cmd_gen(&a),
        Command::Tree(a) => read_graph(&a.input, &mut read).map(|g| (dot::block_tree_dot(&g), Vec::new())),
        Command::Bench(a) => cmd_bench(&a),
    };
    match outcome {
        Ok((out, failures)) => {
            let _ = io.stdout.write_all(out.as_bytes());
            let mut code = EXIT_OK;
            for f in failures {
                let _ = writeln!(io.stderr, "error: {}", f.message);
                code = code.max(f.code);
            }
            code
        }
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

type Output = (String, Vec<Failure>);

fn read_graph(path: &str, read: &mut dyn FnMut(&str) -> Result<String, Failure>) -> Result<BipartiteGraph, Failure> {
    let text = read(path)?;
    format::parse_graph(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

fn witness_text(g: &BipartiteGraph, report: &VerifyReport) -> String {
    match report.witness.map(|w| w.kind) {
        None if !report.legal => "illegal edge".to_string(),
        None => "ok".to_string(),
        Some(WitnessKind::TwoVertexComponent(e)) => format!("two-vertex component {} {}", g.label(e.a), g.label(e.b)),
        Some(WitnessKind::CutVertex(v)) => format!("cut vertex {}", g.label(v)),
        Some(WitnessKind::CutEdge(e)) => format!("cut edge {} {}", g.label(e.a), g.label(e.b)),
    }
}

fn cmd_augment(a: &AugmentArgs, read: &mut dyn FnMut(&str) -> Result<String, Failure>) -> Result<Output, Failure> {
    let mut out = String::new();
    let mut failures = Vec::new();
    for path in &a.files {
        let mut one = |out: &mut String| -> Result<(), Failure> {
            let g = read_graph(path, read)?;
            let result = augment(&g)?;
            let report = a.verify.then(|| bipaug_core::verify_result(&g, &result, false));
            if a.json || a.stats {
                let doc = json::augment_document(&g, &result, report.as_ref(), a.stats);
                out.push_str(&serde_json::to_string_pretty(&doc).expect("json values serialize"));
                out.push('\n');
            } else {
                for t in &result.trace {
                    let _ = write!(out, "ADD {} {}", g.label(t.edge.a), g.label(t.edge.b));
                    if a.trace {
                        let _ = write!(out, " # {} {}", t.label, t.rule);
                        if let Some(p) = t.pivot {
                            let _ = write!(out, " pivot={}", g.label(p));
                        }
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "SIZE {}", result.size());
                if let Some(r) = &report {
                    let _ = writeln!(out, "VERIFY {}", if r.agreement { "ok" } else { "fail" });
                }
            }
            match report {
                Some(r) if !r.agreement => Err(Failure {
                    code: EXIT_VERIFY,
                    message: format!("{path}: verification failed: {}", witness_text(&g, &r)),
                }),
                _ => Ok(()),
            }
        };
        let mut text = String::new();
        if a.files.len() > 1 {
            let _ = writeln!(text, "# {path}");
        }
        match one(&mut text) {
            Ok(()) => out.push_str(&text),
            Err(mut f) => {
                if f.code == EXIT_VERIFY {
                    out.push_str(&text);
                } else if !f.message.starts_with(path.as_str()) {
                    f.message = format!("{path}: {}", f.message);
                }
                failures.push(f);
            }
        }
    }
    Ok((out, failures))
}

fn cmd_verify(a: &VerifyArgs, read: &mut dyn FnMut(&str) -> Result<String, Failure>) -> Result<Output, Failure> {
    let g = read_graph(&a.graph, read)?;
    let text = read(&a.edges)?;
    let edges = format::parse_edges(&g, &text).map_err(|e| Failure::input(format!("{}: {e}", a.edges)))?;
    let report = verify_edges(&g, &edges, a.oracle);
    let mut out = String::new();
    if a.json {
        let mut doc = json::verify_report(&g, &report);
        doc["schema"] = json::SCHEMA.into();
        out = serde_json::to_string_pretty(&doc).expect("json values serialize");
        out.push('\n');
    } else {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "LEGAL {}", yes(report.legal));
        let _ = writeln!(out, "BICONNECTED {}", yes(report.componentwise_biconnected));
        if report.legal && !report.componentwise_biconnected {
            let _ = writeln!(out, "WITNESS {}", witness_text(&g, &report));
        }
        let _ = writeln!(out, "SIZE {}", report.size);
        if a.oracle {
            match report.oracle_size {
                Some(k) => {
                    let _ = writeln!(out, "ORACLE {k}");
                }
                None => out.push_str("ORACLE unavailable\n"),
            }
        }
        let _ = writeln!(out, "RESULT {}", if report.agreement { "ok" } else { "fail" });
    }
    let failures = if report.agreement {
        Vec::new()
    } else {
        vec![Failure {
            code: EXIT_VERIFY,
            message: format!("verification failed: {}", witness_text(&g, &report)),
        }]
    };
    Ok((out, failures))
}

fn cmd_oracle(a: &OracleArgs, read: &mut dyn FnMut(&str) -> Result<String, Failure>) -> Result<Output, Failure> {
    let g = read_graph(&a.input, read)?;
    let (k, edges) = match brute_force_optimal(&g, a.cap) {
        Ok(found) => found,
        Err(OracleError::CapExceeded { .. }) if g.count_a() == 1 || g.count_b() == 1 => {
            let side = if g.count_a() == 1 { "A" } else { "B" };
            return Err(Failure {
                code: EXIT_NO_BICONNECTOR,
                message: format!("side {side} has a single vertex: no biconnector exists"),
            });
        }
        Err(e) => return Err(Failure::input(e.to_string())),
    };
    let mut out = String::new();
    for e in edges {
        let _ = writeln!(out, "ADD {} {}", g.label(e.a), g.label(e.b));
    }
    let _ = writeln!(out, "SIZE {k}");
    Ok((out, Vec::new()))
}

fn cmd_gen(a: &GenArgs) -> Result<Output, Failure> {
    let family = match a.kind {
        GenKind::Spider => Some(Family::Spider),
        GenKind::Broom => Some(Family::Broom),
        GenKind::Caterpillar => Some(Family::Caterpillar),
        _ => None,
    };
    let g = match (a.n, family) {
        (Some(n), Some(f)) => f.instance(n),
        (Some(_), None) => return Err(Failure::input("--n applies to spider, broom and caterpillar")),
        (None, _) => {
            let kind = match a.kind {
                GenKind::Path => InstanceKind::Path { length: a.length },
                GenKind::Cycle => InstanceKind::Cycle { length: a.length },
                GenKind::Spider => InstanceKind::Spider {
                    chains: a.chains.clone(),
                },
                GenKind::Broom => InstanceKind::Broom { bristles: a.bristles },
                GenKind::Caterpillar => InstanceKind::Caterpillar {
                    spine: a.spine,
                    legs: a.legs,
                },
                GenKind::Random => InstanceKind::Random { a: a.a, b: a.b, p: a.p },
            };
            generate_instance(&kind, a.seed).map_err(|e| Failure::input(e.to_string()))?
        }
    };
    Ok((format::serialize(&g), Vec::new()))
}

fn cmd_bench(a: &BenchArgs) -> Result<Output, Failure> {
    let rows = bench::run_ladder(a.kind, &a.sizes, a.repeat)?;
    let mut out = String::new();
    if a.json {
        let rows: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                let mut v = serde_json::json!({
                    "family": r.family.name(),
                    "n": r.n,
                    "vertices": r.vertices,
                    "edges": r.edges,
                    "size": r.size,
                    "counters": json::counters(&r.counters),
                });
                if !a.no_time {
                    v["time_ns"] = (r.time.as_nanos() as u64).into();
                    v["ns_per_element"] = r.nanos_per_element().into();
                }
                v
            })
            .collect();
        let doc = serde_json::json!({"schema": json::SCHEMA, "rows": rows});
        out = serde_json::to_string_pretty(&doc).expect("json values serialize");
        out.push('\n');
        return Ok((out, Vec::new()));
    }
    out.push_str("family\tn\tvertices\tedges\tsize");
    if !a.no_time {
        out.push_str("\ttime_ms\tns_per_element");
    }
    out.push_str("\ttree_edge_traversals\tlist_links\tlist_unlinks\tdfs_steps\tfull_rebuilds\ttotal_ops\n");
    for r in &rows {
        let _ = write!(out, "{}\t{}\t{}\t{}\t{}", r.family.name(), r.n, r.vertices, r.edges, r.size);
        if !a.no_time {
            let _ = write!(out, "\t{:.3}\t{:.1}", r.time.as_secs_f64() * 1e3, r.nanos_per_element());
        }
        let c = &r.counters;
        let _ = writeln!(
            out,
            "\t{}\t{}\t{}\t{}\t{}\t{}",
            c.tree_edge_traversals,
            c.list_links,
            c.list_unlinks,
            c.dfs_steps,
            c.full_rebuilds,
            c.total()
        );
    }
    Ok((out, Vec::new()))
}
