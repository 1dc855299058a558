use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coverlab::family::{make_family, FamilySpec};
use coverlab::homology::Field;
use coverlab::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use coverlab::resolution::{ClCertificate, ClMethod, Verdict, DEFAULT_BUDGET};
use coverlab::Graph;
use coverlab_lab::analyze::{analyze, build_ideal, check_cl, construct_bg, construct_gk, ideal_report, IdealKind};
use coverlab_lab::named;
use coverlab_lab::suites::{run_suite, Limits, SUITES};

#[derive(Parser)]
#[command(name = "lab", version, about = "Cover ideals, symbolic powers and vertex decomposability of small graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Coefficient field for homology.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[arg(long, global = true)]
    max_k: Option<usize>,
    /// Also write the result as JSON to this file (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Node budget for the linear-quotient search.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse()
}

/// Where the graph comes from: an edge-list file, `--g6`, `--named`, or
/// standard input (graph6 lines or an edge list).
#[derive(Args, Clone)]
struct Input {
    file: Option<PathBuf>,
    #[arg(long)]
    g6: Option<String>,
    #[arg(long)]
    named: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathKind {
    Symbolic,
    Power,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Betti,
    Quotients,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural summary: simplicial vertices, VD, W-graph, B_G.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Print an ideal of the graph and optionally its Betti table.
    Ideal {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with_all = ["edge", "symbolic", "power"])]
        cover: bool,
        #[arg(long, conflicts_with_all = ["symbolic", "power"])]
        edge: bool,
        #[arg(long, value_name = "K", conflicts_with = "power")]
        symbolic: Option<usize>,
        #[arg(long, value_name = "K")]
        power: Option<usize>,
        #[arg(long)]
        betti: bool,
    },
    /// Is J(G)^(k) (or J(G)^k) componentwise linear?
    CheckCl {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value = "symbolic")]
        path: PathKind,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Emit G_k or B_G as an edge list.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify { suite: String },
    /// Generate a family member as an edge list (or graph6 with --as-g6).
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        as_g6: bool,
    },
}

#[derive(Subcommand)]
enum Construct {
    Gk {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    Bg {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Core K_c plus one vertex per attachment list of 0-based core
    /// indices, e.g. `--attach 0+1 --attach 2`.
    Star {
        core: usize,
        #[arg(long)]
        attach: Vec<String>,
    },
    Nclique {
        p: usize,
        #[arg(num_args = 1..)]
        sizes: Vec<usize>,
    },
    Tree {
        n: usize,
    },
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

fn read_graphs(input: &Input) -> anyhow::Result<Vec<Graph>> {
    if let Some(name) = &input.named {
        return named::by_name(name).map(|g| vec![g]).with_context(|| format!("unknown named graph `{name}`"));
    }
    if let Some(s) = &input.g6 {
        return Ok(vec![parse_graph6(s)?]);
    }
    let text = match &input.file {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    if !lines.is_empty() {
        if let Ok(gs) = lines.iter().map(|l| parse_graph6(l)).collect::<Result<Vec<_>, _>>() {
            return Ok(gs);
        }
    }
    Ok(vec![parse_edge_list(&text)?])
}

fn one_graph(input: &Input) -> anyhow::Result<Graph> {
    let mut gs = read_graphs(input)?;
    match gs.len() {
        1 => Ok(gs.remove(0)),
        0 => bail!("no graph given"),
        n => bail!("expected one graph, got {n}"),
    }
}

fn emit_json(global: &Global, value: &serde_json::Value) -> anyhow::Result<()> {
    if let Some(path) = &global.json {
        let text = serde_json::to_string_pretty(value)? + "\n";
        if path.as_os_str() == "-" {
            print!("{text}");
        } else {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let g = &cli.global;
    let field = g.field.unwrap_or_default();
    let budget = g.budget.unwrap_or(DEFAULT_BUDGET);
    let quiet = g.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    match &cli.cmd {
        Cmd::Analyze { input } => {
            let reports = read_graphs(input)?.iter().map(analyze).collect::<Result<Vec<_>, _>>()?;
            if !quiet {
                let texts: Vec<String> = reports.iter().map(|r| r.to_text()).collect();
                print!("{}", texts.join("\n"));
            }
            let value =
                if reports.len() == 1 { serde_json::to_value(&reports[0])? } else { serde_json::to_value(&reports)? };
            emit_json(g, &value)?;
            Ok(0)
        }
        Cmd::Ideal { input, edge, symbolic, power, betti, .. } => {
            let graph = one_graph(input)?;
            let kind = match (edge, symbolic, power) {
                (true, _, _) => IdealKind::Edge,
                (_, Some(k), _) => IdealKind::Symbolic(*k),
                (_, _, Some(k)) => IdealKind::Power(*k),
                _ => IdealKind::Cover,
            };
            let r = ideal_report(&build_ideal(&graph, kind)?, betti.then_some(field))?;
            if !quiet {
                print!("{}", r.to_text());
            }
            emit_json(g, &serde_json::to_value(&r)?)?;
            Ok(0)
        }
        Cmd::CheckCl { input, k, path, method } => {
            let graph = one_graph(input)?;
            let kind = match path {
                PathKind::Symbolic => IdealKind::Symbolic(*k),
                PathKind::Power => IdealKind::Power(*k),
            };
            let method = match method {
                MethodArg::Auto => ClMethod::Auto,
                MethodArg::Betti => ClMethod::Betti,
                MethodArg::Quotients => ClMethod::Quotients,
            };
            let r = check_cl(&graph, kind, field, method, budget)?;
            if !quiet {
                let how = match &r.certificate {
                    ClCertificate::LinearQuotients { order } => {
                        format!("linear quotients ({} generators)", order.len())
                    }
                    ClCertificate::RegularityTrace { levels } => {
                        let parts: Vec<String> =
                            levels.iter().map(|l| format!("reg(I<={})={}", l.ell, l.regularity)).collect();
                        format!("regularity trace over {field}: {}", parts.join(", "))
                    }
                    ClCertificate::None => "no certificate within the budget".into(),
                };
                let verdict = match r.verdict {
                    Verdict::True => "componentwise linear",
                    Verdict::False => "not componentwise linear",
                    Verdict::Unknown => "unknown",
                };
                println!("{verdict}: {how}");
            }
            emit_json(g, &serde_json::to_value(&r)?)?;
            Ok(match r.verdict {
                Verdict::True => 0,
                Verdict::False => 1,
                Verdict::Unknown => 3,
            })
        }
        Cmd::Construct { what } => {
            let text = match what {
                Construct::Gk { input, k } => construct_gk(&one_graph(input)?, *k)?,
                Construct::Bg { input } => construct_bg(&one_graph(input)?)?,
            };
            print!("{text}");
            Ok(0)
        }
        Cmd::Verify { suite } => {
            let limits = Limits {
                max_n: g.max_n,
                max_k: g.max_k,
                field: g.field,
                seed: g.seed,
                budget: g.budget,
                max_generators: None,
            };
            let ids: Vec<&str> =
                if suite == "all" { SUITES.iter().map(|s| s.0).collect() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for id in ids {
                let names: Vec<&str> = SUITES.iter().map(|s| s.0).collect();
                let r = run_suite(id, &limits)
                    .with_context(|| format!("unknown suite `{id}`; known: {}", names.join(", ")))?;
                if !quiet {
                    println!("{}", r.summary_line());
                    for f in &r.failures {
                        println!("  {} [{}]: expected {}, got {}", f.instance, f.params, f.expected, f.got);
                    }
                }
                reports.push(r);
            }
            let passed = reports.iter().all(|r| r.passed());
            let value =
                if reports.len() == 1 { serde_json::to_value(&reports[0])? } else { serde_json::to_value(&reports)? };
            emit_json(g, &value)?;
            Ok(if passed { 0 } else { 1 })
        }
        Cmd::Gen { family, as_g6 } => {
            let spec = match family {
                Family::Path { n } => FamilySpec::Path { n: *n },
                Family::Cycle { n } => FamilySpec::Cycle { n: *n },
                Family::Complete { n } => FamilySpec::Complete { n: *n },
                Family::Star { core, attach } => {
                    let attachments = attach
                        .iter()
                        .map(|a| a.split(['+', ' ']).filter(|t| !t.is_empty()).map(str::parse).collect())
                        .collect::<Result<Vec<Vec<usize>>, _>>()
                        .context("attachment lists are core indices joined by `+`")?;
                    FamilySpec::StarComplete { core: *core, attachments }
                }
                Family::Nclique { p, sizes } => FamilySpec::NClique { p: *p, sizes: sizes.clone() },
                Family::Tree { n } => FamilySpec::RandomTree { n: *n, seed: g.seed },
                Family::Random { n, p } => FamilySpec::RandomGraph { n: *n, p: *p, seed: g.seed },
            };
            let graph = make_family(&spec)?;
            if *as_g6 {
                println!("{}", write_graph6(&graph));
            } else {
                print!("{}", write_edge_list(&graph));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
