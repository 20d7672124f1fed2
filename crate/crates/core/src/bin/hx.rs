use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use helix::chromatics::{
    chromatic_number, circular_chromatic, fractional_chromatic, local_chromatic, vertex_critical,
    ChromaticResult,
};
use helix::families::{while_reduce, Family, HelicalKind};
use helix::graph::{cycle_stats, power, subdivide};
use helix::harness::{
    load_graph, pentagon_probe, serialize_graph, subdivision_power_scan, verify, Config, Report,
    RunOptions, Verdict,
};
use helix::hom::{find_homomorphism, HomOutcome, Mode};
use helix::{Caps, Error, Graph};

#[derive(Parser)]
#[command(
    name = "hx",
    version,
    about = "Helical graphs, homomorphisms and chromatic parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Records,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph and write it as HGF.
    Family {
        desc: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// k-th power: vertices joined by a walk of odd length at most k.
    Power {
        #[arg(short)]
        k: usize,
        graph: String,
    },
    /// Replace every edge by a path with t inner vertices.
    Subdivide {
        #[arg(short)]
        t: usize,
        graph: String,
    },
    OddGirth {
        graph: String,
    },
    /// Decide, construct or count homomorphisms G -> H.
    Hom {
        g: String,
        h: String,
        #[arg(long, conflicts_with = "count")]
        witness: bool,
        #[arg(long, value_name = "N")]
        count: Option<u64>,
    },
    Chromatic {
        graph: String,
    },
    Circular {
        graph: String,
        /// Largest denominator tried; the answer is exact once it reaches |V|.
        #[arg(long, value_name = "N")]
        qcap: Option<usize>,
    },
    Fractional {
        graph: String,
    },
    Local {
        graph: String,
    },
    Critical {
        graph: String,
    },
    /// Dominated-vertex reduction of a family graph.
    ReduceSh {
        desc: String,
    },
    /// Run a verification suite; extra words are key=value parameters.
    Verify {
        suite: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_enum, default_value = "both")]
        format: Format,
    },
    Probe {
        #[command(subcommand)]
        probe: Probe,
    },
    /// Chromatic numbers of S_2t(G)^(2k+1) over a grid.
    Scan {
        graph: String,
        #[arg(long, value_name = "A..B")]
        k: String,
        #[arg(long, value_name = "C..D")]
        t: String,
    },
}

#[derive(Subcommand)]
enum Probe {
    Pentagon { graph: String },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Parse { .. }
        | Error::Descriptor(_)
        | Error::InvalidParameter(_)
        | Error::Labels(_)
        | Error::Io(_) => 2,
        _ => 1,
    }
}

fn range(s: &str) -> helix::Result<RangeInclusive<usize>> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| Error::param(format!("`{s}` is not a range a..b")))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
        None => num(s).map(|a| a..=a),
    }
}

fn show_result(what: &str, r: &ChromaticResult) {
    println!("{what} = {}{}", r, if r.exact { "" } else { " (bounds)" });
    for refutation in &r.refutations {
        println!(
            "  refuted: {} [{}, {} nodes]",
            refutation.claim, refutation.method, refutation.nodes
        );
    }
}

fn emit(report: &Report, format: Format) -> u8 {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Records => print!("{}", report.to_records()),
        Format::Both => print!("{}\n{}", report.to_text(), report.to_records()),
    }
    match report.verdict() {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Indeterminate => 3,
    }
}

fn run(cli: Cli) -> helix::Result<u8> {
    let caps = Caps::from_env()?;
    match cli.command {
        Command::Family { desc, output } => {
            let text = serialize_graph(&desc.parse::<Family>()?.build()?);
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Power { k, graph } => {
            print!("{}", serialize_graph(&power(&load_graph(&graph)?, k)?))
        }
        Command::Subdivide { t, graph } => {
            print!("{}", serialize_graph(&subdivide(&load_graph(&graph)?, t)?))
        }
        Command::OddGirth { graph } => println!("{}", cycle_stats(&load_graph(&graph)?)),
        Command::Hom {
            g,
            h,
            witness,
            count,
        } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            match count {
                Some(limit) => match find_homomorphism(&g, &h, Mode::Count { limit }) {
                    HomOutcome::Count {
                        count,
                        saturated: true,
                    } => println!("at least {count}"),
                    HomOutcome::Count { count, .. } => println!("{count}"),
                    _ => unreachable!("count mode returns a count"),
                },
                None => match find_homomorphism(&g, &h, Mode::First) {
                    HomOutcome::Witness(f) => {
                        println!("yes");
                        if witness {
                            for (v, &x) in f.as_slice().iter().enumerate() {
                                println!("{} -> {}", vertex_name(&g, v), vertex_name(&h, x));
                            }
                        }
                    }
                    _ => println!("no"),
                },
            }
        }
        Command::Chromatic { graph } => {
            let g = load_graph(&graph)?;
            show_result("chi", &chromatic_number(&g, &caps)?);
        }
        Command::Circular { graph, qcap } => {
            let g = load_graph(&graph)?;
            show_result(
                "chi_c",
                &circular_chromatic(&g, qcap.unwrap_or(g.order()), &caps)?,
            );
        }
        Command::Fractional { graph } => {
            show_result("chi_f", &fractional_chromatic(&load_graph(&graph)?, &caps)?)
        }
        Command::Local { graph } => {
            show_result("psi", &local_chromatic(&load_graph(&graph)?, &caps)?)
        }
        Command::Critical { graph } => {
            let g = load_graph(&graph)?;
            let r = vertex_critical(&g, &caps)?;
            println!("chi = {}", r.chromatic);
            println!("vertex-critical: {}", if r.critical { "yes" } else { "no" });
            for v in r.non_critical_vertices() {
                println!("  chi unchanged without {}", vertex_name(&g, v));
            }
        }
        Command::ReduceSh { desc } => {
            let family: Family = desc.parse()?;
            let g = family.build()?;
            let (reduced, trace) = while_reduce(&g);
            for &(u, v) in &trace.removed {
                println!(
                    "remove {} (dominated by {})",
                    vertex_name(&g, u),
                    vertex_name(&g, v)
                );
            }
            println!("{} of {} vertices survive", reduced.order(), g.order());
            if let Family::Helical(HelicalKind::Schrijver, m, n, k) = family {
                let sh = Family::Helical(HelicalKind::Stable, m, n, k).build()?;
                let mut a: Vec<_> = reduced.labels().unwrap_or_default().to_vec();
                let mut b: Vec<_> = sh.labels().unwrap_or_default().to_vec();
                a.sort();
                b.sort();
                println!(
                    "survivors equal SH:{m},{n},{k}: {}",
                    if a == b { "yes" } else { "no" }
                );
                if a != b {
                    return Ok(1);
                }
            }
        }
        Command::Verify {
            suite,
            params,
            seed,
            trials,
            format,
        } => {
            let opts = RunOptions {
                seed,
                trials,
                ..RunOptions::default()
            }
            .with_params(params.iter().map(String::as_str))?;
            let report = verify(&suite, &opts, &Config::defaults(), &caps)?;
            return Ok(emit(&report, format));
        }
        Command::Probe {
            probe: Probe::Pentagon { graph },
        } => {
            let g = load_graph(&graph)?;
            if (0..g.order()).any(|v| g.degree(v) != 3) {
                eprintln!("warning: {} is not cubic", graph);
            }
            return Ok(emit(&pentagon_probe(&g, &caps)?, Format::Both));
        }
        Command::Scan { graph, k, t } => {
            let g = load_graph(&graph)?;
            return Ok(emit(
                &subdivision_power_scan(&g, range(&k)?, range(&t)?, &caps)?,
                Format::Both,
            ));
        }
    }
    Ok(0)
}

fn vertex_name(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), |l| l.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("hx: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
