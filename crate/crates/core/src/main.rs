use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jps4::bench::{
    generate_empty_problems, parse_scen, read_records_csv, run_benchmark, speedup_report,
    verify_map, write_records_csv, write_scen, write_speedup_csv, BenchError, BenchOptions,
    MapStore, Solver,
};
use jps4::grid::{generate_empty, generate_rooms, parse_map, write_map, GridMap};
use jps4::{Algorithm, Coord, SearchProblem};

/// Optimal 4-connected grid pathfinding with JPS4, A* and a BFS oracle.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one problem and print its metrics.
    Solve {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        start: Coord,
        #[arg(long)]
        goal: Coord,
        #[arg(long, default_value = "jps4")]
        algo: Algorithm,
        #[arg(long)]
        print_path: bool,
    },
    /// Time algorithms on a scenario file and write raw per-run records.
    Bench {
        #[arg(long)]
        scen: PathBuf,
        #[arg(long)]
        map_dir: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "astar,jps4")]
        algos: Vec<Algorithm>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long)]
        out: PathBuf,
        /// Run scenarios on all cores (timings then share memory bandwidth).
        #[arg(long)]
        parallel: bool,
    },
    /// Generate maps or problem sets.
    #[command(subcommand)]
    Gen(Gen),
    /// Cross-check A*, JPS4 and BFS on random problems.
    Verify {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Turn raw records into a speedup-by-path-length table.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Dims {
    #[arg(long)]
    width: usize,
    #[arg(long)]
    height: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum Gen {
    /// An obstacle-free map.
    Empty(Dims),
    /// A map divided into square rooms joined by one-cell doors.
    Rooms {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 16)]
        room_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Start/goal pairs at every exact distance on an empty square map.
    Problems {
        #[arg(long)]
        side: usize,
        #[arg(long, default_value_t = 100)]
        per_length: usize,
        #[arg(long)]
        max_length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn bench_failure(e: BenchError) -> Failure {
    if e.is_verification_failure() {
        Failure::Verification(e.to_string())
    } else {
        Failure::Input(e.to_string())
    }
}

fn read_map(path: &PathBuf) -> Result<GridMap, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_map(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            map,
            start,
            goal,
            algo,
            print_path,
        } => {
            let map = read_map(&map)?;
            let problem = SearchProblem::new(&map, start, goal)?;
            let result = algo.run(&problem)?;
            let m = result.metrics;
            match result.length() {
                Some(l) => println!("length {l}"),
                None => println!("unreachable"),
            }
            println!(
                "expanded {} pushes {} pops {} max_open {} visited {} time_ns {}",
                m.expanded, m.open_pushes, m.open_pops, m.max_open, m.visited, m.wall_time_ns
            );
            if let (true, Some(path)) = (print_path, result.path()) {
                let steps: Vec<String> = path.nodes().iter().map(Coord::to_string).collect();
                println!("{}", steps.join(" "));
            }
        }
        Command::Bench {
            scen,
            map_dir,
            algos,
            reps,
            out,
            parallel,
        } => {
            let scenarios = parse_scen(&fs::read_to_string(&scen)?)?;
            let mut store = MapStore::from_dir(map_dir);
            store.load_for(&scenarios)?;
            let solvers: Vec<&dyn Solver> = algos.iter().map(|a| a as &dyn Solver).collect();
            let options = BenchOptions {
                repetitions: reps,
                parallel,
                ..BenchOptions::default()
            };
            let records =
                run_benchmark(&scenarios, &store, &solvers, &options).map_err(bench_failure)?;
            write_records_csv(&records, BufWriter::new(File::create(&out)?))?;
            eprintln!("{} records written to {}", records.len(), out.display());
        }
        Command::Gen(g) => match g {
            Gen::Empty(d) => fs::write(&d.out, write_map(&generate_empty(d.width, d.height)?))?,
            Gen::Rooms {
                dims,
                room_size,
                seed,
            } => {
                let map = generate_rooms(dims.width, dims.height, room_size, seed)?;
                fs::write(&dims.out, write_map(&map))?;
            }
            Gen::Problems {
                side,
                per_length,
                max_length,
                seed,
                out,
            } => {
                let s = generate_empty_problems(side, per_length, max_length, seed)?;
                fs::write(&out, write_scen(&s))?;
            }
        },
        Command::Verify { map, trials, seed } => {
            let map = read_map(&map)?;
            let report = verify_map(&map, trials, seed)?;
            println!(
                "{} trials: {} solvable, {} unreachable, {} mismatches",
                report.trials,
                report.solvable,
                report.unreachable,
                report.mismatches.len()
            );
            if !report.passed() {
                return Err(Failure::Verification(report.mismatches.join("\n")));
            }
        }
        Command::Report { input, out } => {
            let records = read_records_csv(BufReader::new(File::open(&input)?))?;
            let rows = speedup_report(&records)?;
            write_speedup_csv(&rows, BufWriter::new(File::create(&out)?))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
