use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use fivecycle::batch::{batch_run, inputs_from_file, inputs_from_generator, BatchConfig};
use fivecycle::families::generate;
use fivecycle::graph::enumerate_circuits_up_to;
use fivecycle::io::{parse_graphs, to_cubicmg, to_graph6, GraphRecord};
use fivecycle::oracle::{oracle_exact, DEFAULT_CAP};
use fivecycle::patterns::{classify_unchecked, equip, CensusMode, RawOccurrences};
use fivecycle::reductions::full_reduce;
use fivecycle::solver::{solve_5cyc, solve_oddness, verify_certificate, Certificate, SolveOptions};
use fivecycle::{CubicGraph, EdgeId, TwoFactor};

#[derive(Parser)]
#[command(name = "fivecycle", version, about = "2-factors with few 5-circuits and few odd circuits")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format for graphs.
    #[arg(long, value_enum, global = true, default_value = "graph6")]
    format: Format,
    /// Write the full JSON result here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Include the reduction trace in the JSON result.
    #[arg(long, global = true)]
    emit_trace: bool,
    /// Cap on perfect matchings enumerated by the oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    oracle_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Cubicmg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Five,
    Odd,
    Both,
    Oracle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Triangle-free 2-factor with few 5-circuits, for every graph in INPUT.
    Solve5 { input: String },
    /// 2-factor with few odd circuits.
    Oddness { input: String },
    /// Exact minima by enumerating all perfect matchings.
    Oracle { input: String },
    /// Reduce and print the reduced graph.
    Reduce { input: String },
    /// Pattern census of the reduced graph.
    Patterns { input: String },
    /// Print a generated graph: petersen, k4, k33, prism, cube, theta,
    /// chain K, p3ring COPIES, flower K.
    Gen { family: String, param: Option<usize> },
    /// Re-check a JSON result written by solve5 or oddness.
    Verify { input: String, result: PathBuf },
    /// Run a graph file or a generator expression such as chain:1..3.
    Batch {
        input: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        /// Also run the oracle.
        #[arg(long)]
        oracle: bool,
    },
}

/// What `solve5` and `oddness` write per graph.
#[derive(Serialize, Deserialize)]
struct Solved {
    graph_id: String,
    factor: Vec<EdgeId>,
    certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<serde_json::Value>,
}

fn read_records(input: &str) -> Result<Vec<GraphRecord>> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    Ok(parse_graphs(&text))
}

fn graphs(input: &str) -> Result<Vec<(String, CubicGraph)>> {
    read_records(input)?
        .into_iter()
        .map(|r| {
            let id = format!("line{}", r.line);
            r.result.map(|g| (id.clone(), g)).with_context(|| format!("{id}: {}", r.text.trim()))
        })
        .collect()
}

fn write_graph(g: &CubicGraph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g).unwrap_or_else(|| to_cubicmg(g)),
        Format::Cubicmg => to_cubicmg(g),
    }
}

fn write_json(path: &Option<PathBuf>, value: &impl Serialize) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, serde_json::to_string_pretty(value)?).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn solve_all(cli: &Cli, input: &str, odd: bool) -> Result<bool> {
    let mut out = Vec::new();
    let mut ok = true;
    for (id, g) in graphs(input)? {
        let opts = SolveOptions { graph_id: id.clone(), ..Default::default() };
        let (f, cert) = if odd { solve_oddness(&g, &opts) } else { solve_5cyc(&g, &opts) }.with_context(|| id.clone())?;
        let bad = verify_certificate(&g, &f, &cert);
        ok &= bad.is_empty();
        println!(
            "{id} n={} achieved={} bound={} odd={} five={} path={:?}{}",
            g.n(),
            cert.achieved,
            cert.bound_value,
            f.stats().odd,
            f.stats().count5,
            cert.terminal,
            if bad.is_empty() { String::new() } else { format!(" VIOLATION {bad:?}") }
        );
        let trace = if cli.emit_trace { Some(serde_json::to_value(full_reduce(&g)?)?) } else { None };
        out.push(Solved { graph_id: id, factor: f.edges(), certificate: cert, trace });
    }
    write_json(&cli.json, &out)?;
    Ok(ok)
}

fn verify(input: &str, result: &Path) -> Result<bool> {
    let gs = graphs(input)?;
    let solved: Vec<Solved> = serde_json::from_str(&std::fs::read_to_string(result)?)?;
    let mut ok = true;
    for s in &solved {
        let Some((_, g)) = gs.iter().find(|(id, _)| *id == s.graph_id) else {
            bail!("{} not in {input}", s.graph_id);
        };
        let bad = match TwoFactor::from_edges(g, &s.factor) {
            Ok(f) => verify_certificate(g, &f, &s.certificate),
            Err(e) => vec![e.to_string()],
        };
        println!("{} {}", s.graph_id, if bad.is_empty() { "ok".to_string() } else { format!("{bad:?}") });
        ok &= bad.is_empty();
    }
    Ok(ok)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Solve5 { input } => solve_all(cli, input, false),
        Cmd::Oddness { input } => solve_all(cli, input, true),
        Cmd::Oracle { input } => {
            let mut rows = Vec::new();
            for (id, g) in graphs(input)? {
                let r = oracle_exact(&g, cli.oracle_cap).with_context(|| id.clone())?;
                println!("{id} n={} omega5={} omega={} matchings={}", g.n(), r.omega5, r.omega, r.matchings);
                rows.push((id, r));
            }
            write_json(&cli.json, &rows)?;
            Ok(true)
        }
        Cmd::Reduce { input } => {
            let mut traces = Vec::new();
            for (id, g) in graphs(input)? {
                let t = full_reduce(&g).with_context(|| id.clone())?;
                let kinds: Vec<_> = t.steps.iter().map(|s| s.kind).collect();
                println!("{id} n={} -> {} {:?} {:?}", g.n(), t.reduced.n(), t.terminal, kinds);
                println!("{}", write_graph(&t.reduced, cli.format).trim_end());
                traces.push(t);
            }
            write_json(&cli.json, &traces)?;
            Ok(true)
        }
        Cmd::Patterns { input } => {
            let mut all = Vec::new();
            for (id, g) in graphs(input)? {
                let t = full_reduce(&g).with_context(|| id.clone())?;
                let r = &t.reduced;
                for mode in [CensusMode::FiveCycle, CensusMode::Oddness] {
                    let cls = classify_unchecked(r, &RawOccurrences::find(r, mode), mode);
                    let cls = equip(r, &cls, &enumerate_circuits_up_to(r, 9), false)?;
                    println!(
                        "{id} {mode:?} n={} P1={} P2={} P3={} P3a={} P3b={} overlaps={} exception22={}",
                        r.n(),
                        cls.p1.len(),
                        cls.p2.len(),
                        cls.p3.len(),
                        cls.p3a(),
                        cls.p3b(),
                        cls.overlaps.len(),
                        cls.exception22
                    );
                    all.push((id.clone(), cls));
                }
            }
            write_json(&cli.json, &all)?;
            Ok(true)
        }
        Cmd::Gen { family, param } => {
            let g = generate(family, *param)?;
            print!("{}", write_graph(&g, cli.format));
            Ok(true)
        }
        Cmd::Verify { input, result } => verify(input, result),
        Cmd::Batch { input, mode, oracle } => {
            let inputs = if Path::new(input).exists() { inputs_from_file(Path::new(input))? } else { inputs_from_generator(input)? };
            let cfg = BatchConfig {
                five: matches!(mode, Mode::Five | Mode::Both),
                odd: matches!(mode, Mode::Odd | Mode::Both),
                oracle: *oracle || matches!(mode, Mode::Oracle),
                oracle_cap: cli.oracle_cap,
                timings: false,
            };
            let report = batch_run(&inputs, &cfg);
            for r in &report.rows {
                if let Some(s) = &r.skipped {
                    println!("{} skipped: {s}", r.graph_id);
                    continue;
                }
                println!(
                    "{} n={} five={:?}/{:?} odd={:?}/{:?} oracle={:?}{}",
                    r.graph_id,
                    r.n,
                    r.achieved5,
                    r.bound5,
                    r.k_reduced,
                    r.bound_odd,
                    r.oracle.map(|o| (o.omega5, o.omega)),
                    if r.violations.is_empty() { String::new() } else { format!(" VIOLATION {:?}", r.violations) }
                );
            }
            println!("{:?}", report.summary);
            write_json(&cli.json, &report)?;
            Ok(!report.has_violations())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
