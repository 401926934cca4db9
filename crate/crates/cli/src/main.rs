use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use polycode::codegen::{self, commuting_coloring, is_css, predict_k_from_twists};
use polycode::decoder::{classify_residual, syndrome_of, DecoderTable, Syndrome};
use polycode::noisesim::{self, loglog_slope, NoiseModel};
use polycode::polyhedron::{Polyhedron, BUILTIN_NAMES};
use polycode::reference::{RD_LOGICAL_X, RD_LOGICAL_Z};
use polycode::stabcode::{self, verify_golden_logicals, DistanceBound};
use polycode::{Exec, PauliOperator, StabilizerCode};

/// Stabilizer codes on face-3-colored polyhedra.
#[derive(Parser)]
#[command(name = "polycode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Builtin name (cube, rhombic_dodecahedron, tetrahedron) or path to a
    /// polyhedron file.
    input: String,
}

#[derive(Args)]
struct ExecArgs {
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

impl ExecArgs {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check sphere topology and print counts.
    Validate(Input),
    /// Find a 3-coloring whose checks commute.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Glue a pyramid on every face and merge coplanar triangles.
    Rhombify {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print one check per face.
    Checks(Input),
    /// Print a canonical logical basis.
    Logicals {
        #[command(flatten)]
        input: Input,
        /// Verify the reference rhombic-dodecahedron logicals instead.
        #[arg(long)]
        golden: bool,
    },
    /// Print [[n,k,d]], the CSS flag and the twist-predicted k.
    Params {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_weight: Option<usize>,
        #[command(flatten)]
        exec: ExecArgs,
    },
    /// Exhaustive minimum-distance scan.
    Distance {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_weight: Option<usize>,
        #[command(flatten)]
        exec: ExecArgs,
    },
    /// Look up the correction for a syndrome or an error.
    Decode {
        #[command(flatten)]
        input: Input,
        /// Syndrome bits, bit 0 first.
        #[arg(long, conflicts_with = "error", required_unless_present = "error")]
        syndrome: Option<String>,
        /// Error as a Pauli string.
        #[arg(long)]
        error: Option<String>,
    },
    /// Write the full decoder table.
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Monte Carlo logical error rate under depolarizing noise.
    Simulate {
        #[command(flatten)]
        input: Input,
        /// Depolarizing probability; repeat for a sweep.
        #[arg(long = "p", required = true)]
        p: Vec<f64>,
        #[arg(long, default_value_t = 100_000)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        exec: ExecArgs,
    },
}

fn load(input: &Input) -> Result<Polyhedron> {
    let name = input.input.as_str();
    let poly = if BUILTIN_NAMES.contains(&name) || name == "rd" {
        Polyhedron::builtin(name)?
    } else {
        let text = fs::read_to_string(name).with_context(|| format!("reading {name}"))?;
        text.parse()?
    };
    poly.validate()?;
    Ok(poly)
}

/// Colors `poly` if needed, reporting the chosen coloring on stderr.
fn colored(poly: &Polyhedron) -> Result<Polyhedron> {
    if poly.is_colored() {
        return Ok(poly.clone());
    }
    let out = commuting_coloring(poly)?;
    let colors: String = out
        .faces()
        .iter()
        .map(|f| f.color.map_or('?', |c| c.as_char()))
        .collect();
    eprintln!("# auto-colored faces: {colors}");
    Ok(out)
}

fn build_code(poly: &Polyhedron) -> Result<StabilizerCode> {
    let checks = codegen::checks_from_polyhedron(poly)?;
    if let Some((a, b)) = codegen::first_anticommuting_pair(&checks, Exec::Sequential) {
        bail!("checks on faces {} and {} anticommute", a + 1, b + 1);
    }
    Ok(StabilizerCode::from_checks(checks)?)
}

fn write_or_print(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn max_weight(code: &StabilizerCode, requested: Option<usize>) -> usize {
    let w = requested.unwrap_or(code.n());
    let cost = stabcode::scan_cost(code.n(), w);
    if cost > 1e9 {
        eprintln!("warning: distance scan may examine up to {cost:.2e} operators");
    }
    w
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate(input) => {
            let stats = load(&input)?.validate()?;
            println!("{stats}");
            let hist: Vec<String> = stats
                .degree_histogram
                .iter()
                .map(|(d, c)| format!("{d}:{c}"))
                .collect();
            println!("degrees {}", hist.join(" "));
            println!("euler {}", stats.euler_characteristic());
        }
        Command::Color { input, output } => {
            let poly = load(&input)?;
            let out = if poly.is_colored() {
                poly
            } else {
                commuting_coloring(&poly)?
            };
            write_or_print(&out.to_text(), output.as_deref())?;
        }
        Command::Rhombify { input, output } => {
            let out = load(&input)?.rhombify()?;
            write_or_print(&out.to_text(), output.as_deref())?;
        }
        Command::Checks(input) => {
            let poly = colored(&load(&input)?)?;
            for c in codegen::checks_from_polyhedron(&poly)? {
                println!("{c}");
            }
        }
        Command::Logicals { input, golden } => {
            let poly = colored(&load(&input)?)?;
            let code = build_code(&poly)?;
            if golden {
                let xs = parse_all(&RD_LOGICAL_X)?;
                let zs = parse_all(&RD_LOGICAL_Z)?;
                if code.n() != xs[0].n() {
                    bail!("reference logicals act on {} qubits, code has {}", xs[0].n(), code.n());
                }
                for (i, (x, z)) in xs.iter().zip(&zs).enumerate() {
                    println!("X{} {x}", i + 1);
                    println!("Z{} {z}", i + 1);
                }
                let report = verify_golden_logicals(&code, &xs, &zs);
                println!("{report}");
                if !report.passed() {
                    bail!("reference logicals failed verification");
                }
            } else {
                for (i, pair) in code.logicals().iter().enumerate() {
                    println!("X{} {}", i + 1, pair.x);
                    println!("Z{} {}", i + 1, pair.z);
                }
            }
        }
        Command::Params {
            input,
            max_weight: requested,
            exec,
        } => {
            let poly = load(&input)?;
            let twists = poly.validate()?.twist_count;
            let poly = colored(&poly)?;
            let code = build_code(&poly)?;
            let w = max_weight(&code, requested);
            let params = code.params(w, exec.exec())?;
            let css = if is_css(code.checks()) { "CSS" } else { "non-CSS" };
            let predicted = match predict_k_from_twists(twists) {
                Ok(k) => k.to_string(),
                Err(_) => "undefined".to_string(),
            };
            println!("{params} {css}, twist-predicted k={predicted}");
        }
        Command::Distance {
            input,
            max_weight: requested,
            exec,
        } => {
            let code = build_code(&colored(&load(&input)?)?)?;
            let w = max_weight(&code, requested);
            match code.distance(w, exec.exec())? {
                DistanceBound::Exact { d, witness } => println!("d={d} witness={witness}"),
                DistanceBound::Exceeds(w) => println!("d>{w}"),
            }
        }
        Command::Decode {
            input,
            syndrome,
            error,
        } => {
            let code = build_code(&colored(&load(&input)?)?)?;
            let table = DecoderTable::build(&code)?;
            match (syndrome, error) {
                (Some(s), _) => {
                    let s = Syndrome::parse(&s)?;
                    println!("correction {}", table.decode(&s)?);
                }
                (None, Some(e)) => {
                    let e: PauliOperator = e.parse()?;
                    let s = syndrome_of(&code, &e)?;
                    let c = table.decode(&s)?;
                    println!("syndrome {s}");
                    println!("correction {c}");
                    println!("residual {}", classify_residual(&code, &e, c)?);
                }
                (None, None) => unreachable!("clap requires one"),
            }
        }
        Command::Table { input, output } => {
            let code = build_code(&colored(&load(&input)?)?)?;
            let table = DecoderTable::build(&code)?;
            write_or_print(&table.to_text(), output.as_deref())?;
        }
        Command::Simulate {
            input,
            p,
            shots,
            seed,
            exec,
        } => {
            let code = build_code(&colored(&load(&input)?)?)?;
            let table = DecoderTable::build(&code)?;
            let mut reports = Vec::new();
            for &rate in &p {
                let model = NoiseModel::depolarizing(rate)?;
                reports.push(noisesim::run(&code, &table, &model, shots, seed, exec.exec())?);
            }
            println!(
                "# {:>10} {:>10} {:>9} {:>12} {:>26}",
                "p", "shots", "failures", "ler", "95% wilson"
            );
            for r in &reports {
                println!(
                    "# {:>10} {:>10} {:>9} {:>12.4e} [{:.4e}, {:.4e}]",
                    r.p, r.shots, r.failures, r.ler, r.wilson_interval.0, r.wilson_interval.1
                );
            }
            println!("# p shots failures ler lo hi seed");
            for r in &reports {
                println!("{}", r.to_line());
            }
            let points: Vec<(f64, f64)> = reports.iter().map(|r| (r.p, r.ler)).collect();
            if let Some(slope) = loglog_slope(&points) {
                println!("# loglog_slope {slope:.4}");
            }
        }
    }
    Ok(())
}

fn parse_all(rows: &[&str]) -> Result<Vec<PauliOperator>> {
    rows.iter()
        .map(|r| r.parse::<PauliOperator>().map_err(Into::into))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
