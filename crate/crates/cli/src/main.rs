use clap::{Args, Parser, Subcommand};
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use trirealize::geom::fmt9;
use trirealize::theorems::{DEFAULT_TOL, ROUND_TRIP_TOL, STRESS_TOL};
use trirealize::{
    enumerate_patterns, realizability_verdict, realize, run_verification, to_svg, AngleAssignment, Figure,
    FigureDocument, ScenarioName, Tolerances,
};

/// Check, draw and explore angle assignments on triangulated figures.
#[derive(Parser)]
#[command(name = "trirealize", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the realizability conditions on a figure document.
    Check {
        path: PathBuf,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        json: bool,
    },
    /// Construct coordinates for a realizable document.
    Realize {
        path: PathBuf,
        /// Write an SVG drawing to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Closure and angle tolerance in degrees.
        #[arg(long, default_value_t = ROUND_TRIP_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// List the pairing-pattern classes for fans of `n` triangles.
    Patterns {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        signatures_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run randomized theorem campaigns.
    Theorems {
        /// Scenario name or `all`.
        #[arg(long)]
        run: String,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Oracle tolerance; defaults to 1e-9, or 1e-6 with --stress.
        #[arg(long)]
        tol: Option<f64>,
        /// Sample close to the domain boundaries.
        #[arg(long)]
        stress: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct TolArgs {
    /// Start from the tolerances for measured maps.
    #[arg(long)]
    measured: bool,
    #[arg(long)]
    tol_pi: Option<f64>,
    #[arg(long)]
    tol_two_pi: Option<f64>,
    #[arg(long)]
    tol_sine: Option<f64>,
    #[arg(long)]
    tol_pairing: Option<f64>,
}

impl TolArgs {
    fn resolve(&self) -> Tolerances {
        let base = if self.measured { Tolerances::MEASURED } else { Tolerances::AUTHORED };
        Tolerances {
            pi: self.tol_pi.unwrap_or(base.pi),
            two_pi: self.tol_two_pi.unwrap_or(base.two_pi),
            sine: self.tol_sine.unwrap_or(base.sine),
            pairing: self.tol_pairing.unwrap_or(base.pairing),
        }
    }
}

const OK: u8 = 0;
const FAILED: u8 = 1;
const INPUT: u8 = 2;

/// Failure carrying its exit code.
struct Exit(u8, String);

fn input(e: impl Display) -> Exit {
    Exit(INPUT, e.to_string())
}

fn load(path: &Path) -> Result<(Figure, AngleAssignment), Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let doc = FigureDocument::parse(&text).map_err(input)?;
    let figure = doc.figure().map_err(input)?;
    let angles = doc
        .assignment(&figure)
        .ok_or_else(|| input(format!("{}: no assignment present", path.display())))?
        .map_err(input)?;
    Ok((figure, angles))
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn check(path: &Path, tol: Tolerances, as_json: bool) -> Result<u8, Exit> {
    let (figure, angles) = load(path)?;
    let verdict = realizability_verdict(&figure, &angles, &tol).map_err(input)?;
    if as_json {
        println!("{}", json(&verdict));
    } else {
        println!("{}: {} triangles, {} vertices", figure.name(), figure.triangles().len(), figure.vertex_count());
        println!("{verdict}");
    }
    Ok(if verdict.realizable { OK } else { FAILED })
}

fn realize_cmd(path: &Path, svg: Option<&Path>, tol: f64, as_json: bool) -> Result<u8, Exit> {
    let (figure, angles) = load(path)?;
    let verdict = realizability_verdict(&figure, &angles, &Tolerances::default()).map_err(input)?;
    if !verdict.realizable {
        return Err(Exit(FAILED, format!("assignment is not realizable\n{verdict}")));
    }
    let real = realize(&figure, &angles, tol).map_err(|e| Exit(FAILED, e.to_string()))?;
    for w in &real.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(out) = svg {
        std::fs::write(out, to_svg(&real, &figure, Some(&angles)))
            .map_err(|e| input(format!("{}: {e}", out.display())))?;
    }
    if as_json {
        println!("{}", json(&real));
    } else {
        print!("{real}");
        for c in &real.closures {
            eprintln!(
                "closure at {} (triangle {}): r {} s {}",
                c.vertex,
                c.triangle,
                fmt9(c.residual_r),
                fmt9(c.residual_s)
            );
        }
    }
    Ok(OK)
}

fn patterns(n: usize, signatures_only: bool, as_json: bool) -> Result<u8, Exit> {
    let classes = enumerate_patterns(n).map_err(input)?;
    if as_json {
        println!("{}", json(&classes));
    } else {
        for c in &classes {
            if signatures_only {
                println!("{}", c.signature);
            } else {
                println!("{c}");
            }
        }
    }
    Ok(OK)
}

fn theorems(run: &str, trials: usize, seed: u64, tol: Option<f64>, stress: bool, as_json: bool) -> Result<u8, Exit> {
    let names: Vec<ScenarioName> =
        if run == "all" { ScenarioName::ALL.to_vec() } else { vec![run.parse().map_err(input)?] };
    if trials == 0 {
        return Err(input("--trials must be positive"));
    }
    let tol = tol.unwrap_or(if stress { STRESS_TOL } else { DEFAULT_TOL });
    let reports: Vec<_> = names.iter().map(|&n| run_verification(n, trials, seed, tol, stress)).collect();
    if as_json {
        println!("{}", json(&reports));
    } else {
        for r in &reports {
            print!("{r}");
        }
        if reports.len() > 1 {
            println!();
            println!("{:<24} {:>7}", "scenario", "passed");
            for r in &reports {
                println!("{:<24} {:>7}", r.scenario.as_str(), format!("{}/{}", r.passed, r.trials));
            }
        }
    }
    Ok(if reports.iter().all(|r| r.all_passed()) { OK } else { FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { path, tol, json } => check(&path, tol.resolve(), json),
        Command::Realize { path, svg, tol, json } => realize_cmd(&path, svg.as_deref(), tol, json),
        Command::Patterns { n, signatures_only, json } => patterns(n, signatures_only, json),
        Command::Theorems { run, trials, seed, tol, stress, json } => theorems(&run, trials, seed, tol, stress, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
