use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use graph_burning::decomp::Decomposition;
use graph_burning::dense::burn_dense;
use graph_burning::generators as gen;
use graph_burning::graph::Graph;
use graph_burning::io::{
    parse_decomposition, parse_graph, parse_schedule, serialize_decomposition, serialize_graph,
    RunReport,
};
use graph_burning::pathlen::burn_pathlen;
use graph_burning::process::{
    exact_burning_number, lower_bound_diameter, simulate, verify, ExactOutcome,
};
use graph_burning::treelen::{search_g_star, SearchMode};
use graph_burning::{ceil_sqrt, Error};

const EXIT_CODES: &str = "Exit codes:\n  0  success\n  2  input error (unreadable or malformed files, bad parameters)\n  3  precondition violation (disconnected graph, missing or unsuitable decomposition)";

#[derive(Parser)]
#[command(
    name = "burn",
    about = "Graph-burning algorithms: exact solver, minimum-degree burner, decomposition burners",
    after_help = EXIT_CODES
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonBurnArgs {
    /// Graph file (`p burn <n> <m>` header, `e <u> <v>` lines)
    #[arg(long)]
    graph: String,
    /// Decomposition file (`bag`, `tedge`, `root` lines)
    #[arg(long)]
    decomp: Option<String>,
    /// Print per-vertex burn rounds (and per-iteration records for treelen)
    #[arg(long)]
    trace: bool,
    /// Emit the report as a single JSON line
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive optimal burning (desk-scale graphs)
    Exact {
        #[command(flatten)]
        common: CommonBurnArgs,
        /// Give up once the candidate round count exceeds this
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Minimum-degree burner with the ⌈√(24n/(δ+1))⌉ guarantee
    Dense {
        #[command(flatten)]
        common: CommonBurnArgs,
    },
    /// Path-decomposition burner with the ⌈√(d−1)⌉ + pl guarantee
    Pathlen {
        #[command(flatten)]
        common: CommonBurnArgs,
    },
    /// Tree-decomposition burner with the [g*, 2g* + 4tl + 1] certificate
    Treelen {
        #[command(flatten)]
        common: CommonBurnArgs,
        /// Guess search strategy
        #[arg(long, default_value = "linear")]
        mode: String,
        /// Re-root the decomposition at this 1-based bag before running
        #[arg(long)]
        root: Option<usize>,
    },
    /// Write a generated instance to PREFIX.burn (+ PREFIX.tdec)
    Gen {
        /// Family: path, cycle, star, spider, grid, random-min-degree, interval, ktree
        family: String,
        /// Family parameters, e.g. `grid 3 4` or `ktree 20 2`
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
    },
    /// Check a schedule against a round budget
    Verify {
        #[arg(long)]
        graph: String,
        /// Whitespace-separated activator ids
        #[arg(long)]
        schedule: String,
        #[arg(long)]
        rounds: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Print the known lower/upper bounds for a graph
    Bounds {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        decomp: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Io(_) | Error::InvalidInput(_) => 2,
        Error::Disconnected | Error::InvalidDecomposition(_) => 3,
    }
}

fn load_graph(path: &str) -> Result<Graph, Error> {
    parse_graph(&fs::read_to_string(path)?)
}

fn load_decomp(path: &str) -> Result<Decomposition, Error> {
    parse_decomposition(&fs::read_to_string(path)?)
}

fn require_decomp(common: &CommonBurnArgs, algo: &str) -> Result<Decomposition, Error> {
    match &common.decomp {
        Some(path) => load_decomp(path),
        None => Err(Error::InvalidDecomposition(format!(
            "`{algo}` requires --decomp with a decomposition file"
        ))),
    }
}

fn print_report(report: &RunReport, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
}

fn print_burn_rounds(g: &Graph, schedule: &[usize]) -> Result<(), Error> {
    let report = simulate(g, &graph_burning::BurningSchedule::new(schedule.to_vec()))?;
    for (v, round) in report.burn_round.iter().enumerate() {
        match round {
            Some(r) => println!("vertex {v}: round {r}"),
            None => println!("vertex {v}: never"),
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Exact { common, budget } => {
            let g = load_graph(&common.graph)?;
            let started = Instant::now();
            let outcome = exact_burning_number(&g, budget)?;
            let elapsed = started.elapsed();
            match outcome {
                ExactOutcome::Solved { rounds, schedule } => {
                    let lower = lower_bound_diameter(g.metrics()?.diameter);
                    let report = RunReport {
                        algorithm: "exact".into(),
                        schedule: schedule.activators.clone(),
                        completion_round: rounds,
                        certified_bound: rounds,
                        lower_bound: lower,
                        ratio: rounds as f64 / lower as f64,
                    };
                    print_report(&report, common.json);
                    if common.trace {
                        print_burn_rounds(&g, &schedule.activators)?;
                    }
                }
                ExactOutcome::BudgetExceeded { budget } => {
                    println!("outcome: budget-exceeded (budget {budget})");
                }
            }
            eprintln!("wall time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dense { common } => {
            let g = load_graph(&common.graph)?;
            let started = Instant::now();
            let plan = burn_dense(&g)?;
            let elapsed = started.elapsed();
            let lower = lower_bound_diameter(g.metrics()?.diameter);
            let report = RunReport {
                algorithm: "dense".into(),
                schedule: plan.schedule.activators.clone(),
                completion_round: plan.completion,
                certified_bound: plan.bound,
                lower_bound: lower,
                ratio: plan.completion as f64 / lower as f64,
            };
            print_report(&report, common.json);
            if common.trace {
                print_burn_rounds(&g, &plan.schedule.activators)?;
            }
            eprintln!("wall time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            Ok(ExitCode::SUCCESS)
        }
        Command::Pathlen { common } => {
            let g = load_graph(&common.graph)?;
            let t = require_decomp(&common, "pathlen")?;
            let started = Instant::now();
            let result = burn_pathlen(&g, &t)?;
            let elapsed = started.elapsed();
            let lower = lower_bound_diameter(g.metrics()?.diameter);
            let report = RunReport {
                algorithm: "pathlen".into(),
                schedule: result.schedule.activators.clone(),
                completion_round: result.completion,
                certified_bound: result.bound,
                lower_bound: lower,
                ratio: result.completion as f64 / lower as f64,
            };
            print_report(&report, common.json);
            if common.trace {
                print_burn_rounds(&g, &result.schedule.activators)?;
            }
            eprintln!("wall time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            Ok(ExitCode::SUCCESS)
        }
        Command::Treelen { common, mode, root } => {
            let g = load_graph(&common.graph)?;
            let mut t = require_decomp(&common, "treelen")?;
            if let Some(r) = root {
                if r == 0 {
                    return Err(Error::InvalidInput("bag ids are 1-based".into()));
                }
                t = t.rerooted(r - 1)?;
            }
            let mode = match mode.as_str() {
                "linear" => SearchMode::Linear,
                "binary" => SearchMode::Binary,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown mode `{other}` (use linear or binary)"
                    )))
                }
            };
            let started = Instant::now();
            let result = search_g_star(&g, &t, mode)?;
            let elapsed = started.elapsed();
            let sim = simulate(&g, &result.schedule)?;
            let completion = sim.rounds_used(result.schedule.len()).unwrap();
            let report = RunReport {
                algorithm: "treelen".into(),
                schedule: result.schedule.activators.clone(),
                completion_round: completion,
                certified_bound: result.upper,
                lower_bound: result.lower,
                ratio: completion as f64 / result.lower as f64,
            };
            print_report(&report, common.json);
            if common.trace {
                // re-run the winning guess to recover its trace
                let tl = result.tl;
                if let graph_burning::treelen::GuessOutcome::Schedule { trace, .. } =
                    graph_burning::treelen::burn_guess(&g, &t, tl, result.g_star)?
                {
                    for rec in trace {
                        println!(
                            "iter {}: terminal {} bag {} -> bag {} activator {} radius {} marked {}",
                            rec.iteration,
                            rec.terminal,
                            rec.terminal_bag + 1,
                            rec.chosen_bag + 1,
                            rec.activator,
                            rec.mark_radius,
                            rec.marked_count
                        );
                    }
                }
            }
            eprintln!("wall time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => {
            let instance = match (family.as_str(), params.as_slice()) {
                ("path", [n]) => gen::gen_path(*n)?,
                ("cycle", [n]) => gen::gen_cycle(*n)?,
                ("star", [leaves]) => gen::gen_star(*leaves)?,
                ("spider", [legs, leg_len]) => gen::gen_spider(*legs, *leg_len)?,
                ("grid", [n1, n2]) => gen::gen_grid(*n1, *n2)?,
                ("random-min-degree", [n, delta]) => gen::gen_random_min_degree(*n, *delta, seed)?,
                ("interval", [n, max_coord]) => gen::gen_interval(*n, *max_coord, seed)?,
                ("ktree", [n, k]) => gen::gen_ktree_chordal(*n, *k, seed)?,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "unknown family `{family}` or wrong parameter count"
                    )))
                }
            };
            let graph_path = format!("{out}.burn");
            fs::write(&graph_path, serialize_graph(&instance.graph))?;
            println!("wrote {graph_path}");
            if let Some(t) = &instance.decomposition {
                let decomp_path = format!("{out}.tdec");
                fs::write(&decomp_path, serialize_decomposition(t))?;
                println!("wrote {decomp_path}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            graph,
            schedule,
            rounds,
            trace,
        } => {
            let g = load_graph(&graph)?;
            let s = parse_schedule(&schedule, g.vertex_count())?;
            let ok = verify(&g, &s, rounds)?;
            if trace {
                print_burn_rounds(&g, &s.activators)?;
            }
            if ok {
                println!("ok");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("fail");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Bounds { graph, decomp } => {
            let g = load_graph(&graph)?;
            let metrics = g.metrics()?;
            let n = g.vertex_count();
            let d = metrics.diameter;
            println!("n: {n}");
            println!("diameter: {d}");
            println!("min_degree: {}", metrics.min_degree);
            println!("lower: {}", lower_bound_diameter(d));
            println!(
                "dense_bound: {}",
                ceil_sqrt((24 * n as u64).div_ceil(metrics.min_degree as u64 + 1))
            );
            if let Some(path) = decomp {
                let t = load_decomp(&path)?;
                t.validate(&g)?;
                let len = t.length_of(&g)?.length;
                if d >= 2 {
                    println!("pathlen_bound: {}", ceil_sqrt(d as u64 - 1) as usize + len);
                }
                println!("decomposition_length: {len}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
