//! `tokenfan`: build token and multiset graphs, construct and verify
//! Hamiltonian cycles of `M_2` over fans and joins, and scan small graphs.
//!
//! Exit codes: 0 success, 1 rejected input or failed verification,
//! 2 usage error, 3 inconclusive search.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tokenfan_core::explorer::{
    dedup_approx, enumerate_labeled_graphs_capped, scan_parallel, write_jsonl, ScanOptions,
    DEFAULT_MAX_ORDER,
};
use tokenfan_core::fan::{cut_certificate, decide_fan, fan_cycle, join_cycle, CycleSeq, Decision};
use tokenfan_core::format::{
    parse_cycle_file, parse_edge_list, resolve_cycle_ids, write_certificate_file,
    write_cycle_file, write_dot, write_edge_list, write_fan_dot, write_labeled, CycleHeader,
};
use tokenfan_core::graph::{fan_graph, join, make_base_graph, BaseKind, FanLabeling, Graph};
use tokenfan_core::graph6::{emit_graph6, parse_graph6};
use tokenfan_core::multiset::{build_big_graph, LabeledBigGraph, TokenKind};
use tokenfan_core::oracle::{
    check_cut_certificate, find_hamiltonian_cycle_with_budget, find_hamiltonian_path_with_budget,
    is_hamiltonian_cycle, SearchOutcome, DEFAULT_BUDGET,
};
use tokenfan_core::{Error, Vertex};

#[derive(Parser)]
#[command(name = "tokenfan", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    El,
    G6,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BuildKind {
    Path,
    Cycle,
    Empty,
    Complete,
    Fan,
    Join,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file; `-` or absent reads stdin.
    input: Option<PathBuf>,

    /// Format of the input graph.
    #[arg(long, value_enum, default_value_t = Format::El)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Build a base graph, a fan F_{m,n} or a join.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        /// Size of a base graph, or the path part of a fan.
        #[arg(long)]
        n: Option<usize>,
        /// Empty part of a fan.
        #[arg(long)]
        m: Option<usize>,
        /// First operand of a join (edge list).
        #[arg(long)]
        left: Option<PathBuf>,
        /// Second operand of a join (edge list).
        #[arg(long)]
        right: Option<PathBuf>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
    },
    /// Build the k-multiset graph M_k(G).
    Mk {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::El)]
        to: Format,
    },
    /// Build the k-token graph F_k(G).
    Tk {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::El)]
        to: Format,
    },
    /// Construct a Hamiltonian cycle of M_2(F_{m,n}).
    FanCycle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Decide Hamiltonicity of M_2(F_{m,n}) with a cycle or a certificate.
    DecideFan {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Construct a Hamiltonian cycle of M_2(G1 + G2).
    JoinCycle {
        /// G1 (edge list).
        #[arg(long)]
        left: PathBuf,
        /// G2 (edge list).
        #[arg(long)]
        right: PathBuf,
        /// Hamiltonian path of G2, comma separated; searched for when absent.
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<Vertex>>,
    },
    /// Check a cycle file against a graph file.
    Verify {
        /// Graph file (edge list, with a vertex table for M_k graphs).
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
        /// Cycle file; `-` or absent reads stdin.
        cycle: Option<PathBuf>,
    },
    /// Cut-set certificate for M_2(F_{m,n}), or a check of a given cut.
    Certify {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Check `--cut` against this graph instead.
        #[arg(long, conflicts_with_all = ["m", "n"], requires = "cut")]
        graph: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        cut: Option<Vec<Vertex>>,
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
    },
    /// Exhaustive Hamiltonian cycle (or path) search.
    Brute {
        #[command(flatten)]
        graph: GraphInput,
        /// Search for a path instead of a cycle.
        #[arg(long)]
        path: bool,
    },
    /// Scan small graphs for Hamiltonicity of G and M_k(G); JSON lines.
    Scan {
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Enumerate every labeled graph of this order.
        #[arg(long, conflicts_with = "input")]
        order: Option<usize>,
        #[arg(long)]
        connected: bool,
        /// Raise the enumeration cap on the order.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// File of graph6 lines instead of an enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Keep one graph per degree-based key (approximate iso reduction).
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record wall-clock time per graph (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        /// Exit 0 even if some record is inconclusive.
        #[arg(long)]
        allow_inconclusive: bool,
    },
    /// Convert between edge list, graph6 and DOT.
    Convert {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        to: Format,
    },
}

enum Failure {
    /// Rejected input or a failed check: exit 1.
    Domain(String),
    /// The search budget ran out: exit 3.
    Inconclusive(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn read_source(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Failure::Domain(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_graph(text: &str, format: Format) -> CliResult<Graph> {
    match format {
        Format::El => Ok(parse_edge_list(text)?.graph),
        Format::G6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Failure::Domain("empty graph6 input".into()))?;
            Ok(parse_graph6(line)?)
        }
        Format::Dot => Err(Failure::Domain("DOT is an output-only format".into())),
    }
}

fn read_graph(path: Option<&Path>, format: Format) -> CliResult<Graph> {
    parse_graph(&read_source(path)?, format)
}

struct Output {
    out: Option<PathBuf>,
    json: bool,
}

impl Output {
    fn emit(&self, text: &str) -> CliResult {
        match &self.out {
            Some(p) => fs::write(p, text)
                .map_err(|e| Failure::Domain(format!("{}: {e}", p.display()))),
            None => {
                io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }

    fn emit_json(&self, v: &Value) -> CliResult {
        self.emit(&format!("{v}\n"))
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "order": g.order(), "edges": g.edges() })
}

fn render_graph(g: &Graph, to: Format, fan: Option<FanLabeling>) -> CliResult<String> {
    Ok(match (to, fan) {
        (Format::El, _) => write_edge_list(g),
        (Format::G6, _) => emit_graph6(g)? + "\n",
        (Format::Dot, Some(lab)) => write_fan_dot(g, lab),
        (Format::Dot, None) => write_dot(g, None),
    })
}

fn render_big(big: &LabeledBigGraph, to: Format, json: bool) -> CliResult<String> {
    if json {
        let vertices: Vec<&[Vertex]> = big.vertices().iter().map(|v| v.elems()).collect();
        let mut v = graph_json(&big.graph);
        v["vertices"] = json!(vertices);
        return Ok(format!("{v}\n"));
    }
    match to {
        Format::El => Ok(write_labeled(big)),
        Format::Dot => {
            let f = |id: Vertex| big.vertex(id).to_string();
            Ok(write_dot(&big.graph, Some(&f)))
        }
        Format::G6 => render_graph(&big.graph, Format::G6, None),
    }
}

fn cycle_json(header: CycleHeader, cycle: &CycleSeq) -> Value {
    let text = write_cycle_file(header, cycle);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    json!(lines)
}

fn outcome_or_inconclusive(out: SearchOutcome, what: &str) -> CliResult<Option<Vec<Vertex>>> {
    match out {
        SearchOutcome::Found(seq) => Ok(Some(seq)),
        SearchOutcome::NoneExists => Ok(None),
        SearchOutcome::Inconclusive => Err(Failure::Inconclusive(format!(
            "{what}: search budget exhausted"
        ))),
    }
}

fn run(cli: Cli) -> CliResult {
    let out = Output {
        out: cli.out,
        json: cli.json,
    };
    match cli.command {
        Command::Build {
            kind,
            n,
            m,
            left,
            right,
            format,
        } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| Failure::Domain(format!("`build` needs --{flag} for this kind")))
            };
            let (g, fan) = match kind {
                BuildKind::Fan => {
                    let (g, lab) = fan_graph(need(m, "m")?, need(n, "n")?)?;
                    (g, Some(lab))
                }
                BuildKind::Join => {
                    let (Some(l), Some(r)) = (left, right) else {
                        return Err(Failure::Domain("`build join` needs --left and --right".into()));
                    };
                    let g1 = read_graph(Some(&l), Format::El)?;
                    let g2 = read_graph(Some(&r), Format::El)?;
                    (join(&g1, &g2)?, None)
                }
                base => {
                    let kind = match base {
                        BuildKind::Path => BaseKind::Path,
                        BuildKind::Cycle => BaseKind::Cycle,
                        BuildKind::Empty => BaseKind::Empty,
                        _ => BaseKind::Complete,
                    };
                    (make_base_graph(kind, need(n, "n")?)?, None)
                }
            };
            if out.json {
                out.emit_json(&graph_json(&g))
            } else {
                out.emit(&render_graph(&g, format, fan)?)
            }
        }

        Command::Mk { k, graph, to } => {
            let g = read_graph(graph.input.as_deref(), graph.format)?;
            let big = build_big_graph(&g, k, TokenKind::Multiset)?;
            out.emit(&render_big(&big, to, out.json)?)
        }
        Command::Tk { k, graph, to } => {
            let g = read_graph(graph.input.as_deref(), graph.format)?;
            let big = build_big_graph(&g, k, TokenKind::Subset)?;
            out.emit(&render_big(&big, to, out.json)?)
        }

        Command::FanCycle { m, n } => {
            let cycle = fan_cycle(m, n)?;
            let header = CycleHeader::Fan { m, n };
            if out.json {
                out.emit_json(&json!({
                    "m": m,
                    "n": n,
                    "length": cycle.len(),
                    "cycle": cycle_json(header, &cycle),
                }))
            } else {
                out.emit(&write_cycle_file(header, &cycle))
            }
        }

        Command::DecideFan { m, n } => match decide_fan(m, n)? {
            Decision::Hamiltonian(cycle) => {
                let header = CycleHeader::Fan { m, n };
                if out.json {
                    out.emit_json(&json!({
                        "verdict": "hamiltonian",
                        "length": cycle.len(),
                        "cycle": cycle_json(header, &cycle),
                    }))
                } else {
                    out.emit(&write_cycle_file(header, &cycle))
                }
            }
            Decision::NotHamiltonianDegreeOne { witness } => {
                let lab = FanLabeling::new(m, n);
                let name: Vec<String> = witness
                    .elems()
                    .iter()
                    .map(|&x| lab.label(x).map_or(x.to_string(), |l| l.to_string()))
                    .collect();
                let name = name.join(",");
                if out.json {
                    out.emit_json(&json!({
                        "verdict": "not_hamiltonian_degree_one",
                        "witness": name,
                    }))
                } else {
                    out.emit(&format!(
                        "# M2 fan m={m} n={n}\nnot Hamiltonian: {{{name}}} has degree 1\n"
                    ))
                }
            }
            Decision::NotHamiltonianCutSet { cut, components } => {
                if out.json {
                    out.emit_json(&json!({
                        "verdict": "not_hamiltonian_cutset",
                        "cut_size": cut.len(),
                        "components": components,
                    }))
                } else {
                    out.emit(&write_certificate_file(m, n, &cut, components))
                }
            }
        },

        Command::JoinCycle { left, right, path } => {
            let g1 = read_graph(Some(&left), Format::El)?;
            let g2 = read_graph(Some(&right), Format::El)?;
            let path = match path {
                Some(p) => p,
                None => outcome_or_inconclusive(
                    find_hamiltonian_path_with_budget(&g2, cli.budget),
                    "Hamiltonian path of the second graph",
                )?
                .ok_or_else(|| Failure::Domain("the second graph has no Hamiltonian path".into()))?,
            };
            let cycle = join_cycle(&g1, &g2, &path)?;
            let header = CycleHeader::Join {
                m: g1.order(),
                n: g2.order(),
            };
            if out.json {
                out.emit_json(&json!({
                    "m": g1.order(),
                    "n": g2.order(),
                    "path": path,
                    "length": cycle.len(),
                    "cycle": cycle_json(header, &cycle),
                }))
            } else {
                out.emit(&write_cycle_file(header, &cycle))
            }
        }

        Command::Verify {
            graph,
            format,
            cycle,
        } => {
            let text = read_source(Some(&graph))?;
            let doc = match format {
                Format::El => parse_edge_list(&text)?,
                other => tokenfan_core::format::EdgeListDocument {
                    graph: parse_graph(&text, other)?,
                    vertex_table: None,
                },
            };
            let file = parse_cycle_file(&read_source(cycle.as_deref())?)?;
            let verdict = resolve_cycle_ids(&doc, &file)
                .map_err(|e| e.to_string())
                .and_then(|ids| is_hamiltonian_cycle(&doc.graph, &ids).map_err(|r| r.to_string()));
            let report = match &verdict {
                Ok(()) if out.json => json!({ "accepted": true }).to_string() + "\n",
                Ok(()) => "accept\n".to_string(),
                Err(why) if out.json => {
                    json!({ "accepted": false, "reason": why }).to_string() + "\n"
                }
                Err(why) => format!("reject: {why}\n"),
            };
            out.emit(&report)?;
            verdict.map_err(|why| Failure::Domain(format!("rejected: {why}")))
        }

        Command::Certify {
            m,
            n,
            graph,
            cut,
            format,
        } => {
            if let Some(path) = graph {
                let g = read_graph(Some(&path), format)?;
                let check = check_cut_certificate(&g, &cut.unwrap_or_default())?;
                return if out.json {
                    out.emit_json(&json!(check))
                } else {
                    out.emit(&format!(
                        "components={} |S|={} refutes={}\n",
                        check.components, check.cut_size, check.refutes_hamiltonicity
                    ))
                };
            }
            let (Some(m), Some(n)) = (m, n) else {
                return Err(Failure::Domain("`certify` needs --m and --n, or --graph and --cut".into()));
            };
            let cert = cut_certificate(m, n)?;
            let (g, _) = fan_graph(m, n)?;
            let big = build_big_graph(&g, 2, TokenKind::Multiset)?;
            let check = check_cut_certificate(&big.graph, &big.ids_of(&cert.cut)?)?;
            if out.json {
                out.emit_json(&json!({
                    "m": m,
                    "n": n,
                    "cut_size": check.cut_size,
                    "components": check.components,
                    "predicted_components": cert.predicted_components,
                    "refutes_hamiltonicity": check.refutes_hamiltonicity,
                }))
            } else {
                out.emit(&write_certificate_file(m, n, &cert.cut, check.components))
            }
        }

        Command::Brute { graph, path } => {
            let g = read_graph(graph.input.as_deref(), graph.format)?;
            let what = if path { "path" } else { "cycle" };
            let outcome = if path {
                find_hamiltonian_path_with_budget(&g, cli.budget)
            } else {
                find_hamiltonian_cycle_with_budget(&g, cli.budget)
            };
            let report = match &outcome {
                SearchOutcome::Found(seq) if out.json => {
                    json!({ "result": "found", "kind": what, "sequence": seq }).to_string()
                }
                SearchOutcome::Found(seq) => seq
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                SearchOutcome::NoneExists if out.json => {
                    json!({ "result": "none", "kind": what }).to_string()
                }
                SearchOutcome::NoneExists => format!("no Hamiltonian {what}"),
                SearchOutcome::Inconclusive if out.json => {
                    json!({ "result": "inconclusive", "kind": what }).to_string()
                }
                SearchOutcome::Inconclusive => "inconclusive".to_string(),
            };
            out.emit(&(report + "\n"))?;
            outcome_or_inconclusive(outcome, what).map(|_| ())
        }

        Command::Scan {
            k,
            order,
            connected,
            max_order,
            input,
            dedup,
            jobs,
            timing,
            allow_inconclusive,
        } => {
            let mut graphs: Vec<Graph> = match (order, input) {
                (Some(order), None) => {
                    enumerate_labeled_graphs_capped(order, connected, max_order)?.collect()
                }
                (None, Some(path)) => read_source(Some(&path))?
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(parse_graph6)
                    .collect::<Result<_, _>>()?,
                _ => return Err(Failure::Domain("`scan` needs --order or --input".into())),
            };
            if dedup {
                graphs = dedup_approx(graphs);
            }
            let opts = ScanOptions {
                budget: cli.budget,
                timing,
            };
            let records = scan_parallel(graphs, k, opts, jobs)?;
            out.emit(&write_jsonl(&records))?;
            let hits = records.iter().filter(|r| r.budget_hit).count();
            if hits > 0 && !allow_inconclusive {
                return Err(Failure::Inconclusive(format!("{hits} inconclusive records")));
            }
            Ok(())
        }

        Command::Convert { graph, to } => {
            let g = read_graph(graph.input.as_deref(), graph.format)?;
            if out.json {
                out.emit_json(&graph_json(&g))
            } else {
                out.emit(&render_graph(&g, to, None)?)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("tokenfan: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconclusive(msg)) => {
            eprintln!("tokenfan: {msg}");
            ExitCode::from(3)
        }
    }
}
