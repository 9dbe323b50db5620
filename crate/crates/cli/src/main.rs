use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use rbcenter::feasibility::{candidate_centers, compute_faces};
use rbcenter::geometry::{intervals_at, Center};
use rbcenter::oracle::{brute_force_feasible, brute_force_optimal};
use rbcenter::{
    approx_general_solve, check_solution, constrained_4_approx, feasible, refine_eps, solve_constrained, Error,
    Instance, Solution, Tolerance,
};

mod format;

use format::{read_instance, read_solution, CenterValue, CsvParams, InstanceFile, SolutionFile};

#[derive(Parser)]
#[command(name = "rbcenter", version, about = "Separated red-blue k-center solvers")]
struct Cli {
    /// Comparison tolerance.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_TAU)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CsvArgs {
    /// Red center count, for CSV input.
    #[arg(long)]
    p: Option<usize>,
    /// Blue center count, for CSV input.
    #[arg(long)]
    q: Option<usize>,
    /// Minimum red-blue separation, for CSV input.
    #[arg(long)]
    alpha: Option<f64>,
}

impl From<CsvArgs> for CsvParams {
    fn from(a: CsvArgs) -> Self {
        CsvParams {
            p: a.p,
            q: a.q,
            alpha: a.alpha,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Optimal radius with centers on the x-axis.
    Exact,
    /// Approximation with centers anywhere in space.
    Approx,
    /// Factor-4 approximation with centers on the x-axis.
    ApproxLine,
    /// Feasibility of `--radius` with centers on the x-axis.
    Feasible,
    /// `1 + eps` approximation with centers on the x-axis.
    Refine,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance with coordinates uniform in [0, spread].
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 10.0)]
        spread: f64,
        /// Output file; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Solve an instance and print the solution as JSON.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Radius to test in `feasible` mode, or the starting radius in `refine` mode.
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Cross-check against exhaustive search (tiny instances only).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        csv: CsvArgs,
    },
    /// Check a solution file against an instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        #[command(flatten)]
        csv: CsvArgs,
    },
    /// Print intervals, faces and candidate centers at a radius as CSV.
    Plotdata {
        instance: PathBuf,
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        csv: CsvArgs,
    },
}

/// A query answered negatively; exits with status 2.
#[derive(Debug)]
struct Infeasible(String);

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Infeasible {}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn generate(seed: u64, n: usize, dim: usize, p: usize, q: usize, alpha: f64, spread: f64) -> Result<InstanceFile> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if dim == 0 {
        bail!("--dim must be at least 1");
    }
    if p == 0 || q == 0 {
        bail!("--p and --q must be at least 1");
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        bail!("--alpha must be positive and finite");
    }
    if !(spread >= 0.0 && spread.is_finite()) {
        bail!("--spread must be non-negative and finite");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| (0..dim).map(|_| rng.gen_range(0.0..=spread)).collect())
        .collect();
    Ok(InstanceFile {
        dim,
        alpha,
        p,
        q,
        points,
    })
}

fn solution_file<C>(mode: Mode, inst: &Instance, sol: &Solution<C>, tol: Tolerance, start: Instant) -> SolutionFile
where
    C: Center,
    for<'a> &'a C: Into<CenterValue>,
{
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    SolutionFile {
        mode: mode.to_string(),
        radius: sol.radius,
        red: sol.red.iter().map(Into::into).collect(),
        blue: sol.blue.iter().map(Into::into).collect(),
        valid: check_solution(inst, sol, tol).valid,
        elapsed_ms,
        candidates: None,
        oracle_radius: None,
    }
}

fn solve(
    inst: &Instance,
    mode: Mode,
    radius: Option<f64>,
    eps: f64,
    oracle: bool,
    tol: Tolerance,
) -> Result<SolutionFile> {
    let start = Instant::now();
    let out = match mode {
        Mode::Exact => {
            let exact = solve_constrained(inst, tol)?;
            let mut out = solution_file(mode, inst, &exact.solution, tol, start);
            out.radius = exact.radius;
            out.candidates = Some(exact.candidates);
            if oracle {
                let r = brute_force_optimal(inst, tol)?;
                if (r - exact.radius).abs() > 1e-9 * r.max(exact.radius) {
                    bail!("exhaustive search found radius {r}, solver found {}", exact.radius);
                }
                out.oracle_radius = Some(r);
            }
            out
        }
        Mode::Approx => solution_file(mode, inst, &approx_general_solve(inst), tol, start),
        Mode::ApproxLine => solution_file(mode, inst, &constrained_4_approx(inst, tol).solution, tol, start),
        Mode::Feasible => {
            let r = radius.context("feasible mode needs --radius")?;
            let found = feasible(inst, r, tol);
            if oracle {
                let bf = brute_force_feasible(inst, r, tol)?;
                if bf.is_some() != found.is_some() {
                    bail!("exhaustive search disagrees on radius {r}");
                }
            }
            match found {
                Some(sol) => solution_file(mode, inst, &sol, tol, start),
                None => return Err(Infeasible(format!("radius {r} is infeasible")).into()),
            }
        }
        Mode::Refine => {
            let r = match radius {
                Some(r) => r,
                None => constrained_4_approx(inst, tol).solution.radius,
            };
            match refine_eps(inst, r, eps, tol) {
                Ok((_, sol)) => solution_file(mode, inst, &sol, tol, start),
                Err(Error::InfeasibleRadius(r)) => {
                    return Err(Infeasible(format!("starting radius {r} is infeasible")).into())
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    Ok(out)
}

#[derive(Serialize)]
struct VerifyReport {
    covers_red: bool,
    covers_blue: bool,
    min_separation: f64,
    valid: bool,
}

fn verify(inst: &Instance, solution: &Path, tol: Tolerance) -> Result<VerifyReport> {
    let sol = read_solution(solution)?.to_solution(inst.dim())?;
    let rep = check_solution(inst, &sol, tol);
    Ok(VerifyReport {
        covers_red: rep.covers_red,
        covers_blue: rep.covers_blue,
        min_separation: rep.min_separation,
        valid: rep.valid,
    })
}

fn plotdata(inst: &Instance, r: f64, tol: Tolerance, out: &mut impl Write) -> Result<()> {
    let eps = tol.slack(inst.scale(r));
    let Some(intervals) = intervals_at(&inst.points, r, eps) else {
        bail!(
            "radius {r} is below the largest axis distance {}",
            inst.max_line_distance()
        );
    };
    let faces = compute_faces(&intervals, eps)?;
    let centers = candidate_centers(&faces, inst.alpha, eps);

    writeln!(out, "# intervals")?;
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["index", "left", "right"])?;
    for iv in &intervals {
        w.write_record([iv.source.to_string(), iv.left.to_string(), iv.right.to_string()])?;
    }
    w.flush()?;
    drop(w);

    writeln!(out, "\n# faces")?;
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["left", "right"])?;
    for f in &faces {
        w.write_record([f.left.to_string(), f.right.to_string()])?;
    }
    w.flush()?;
    drop(w);

    writeln!(out, "\n# candidates")?;
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["position"])?;
    for c in centers.positions() {
        w.write_record([c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if !(cli.tol >= 0.0 && cli.tol.is_finite()) {
        bail!("--tol must be non-negative and finite");
    }
    let tol = Tolerance::new(cli.tol);
    match cli.command {
        Command::Gen {
            seed,
            n,
            dim,
            p,
            q,
            alpha,
            spread,
            out,
        } => {
            let file = generate(seed, n, dim, p, q, alpha, spread)?;
            match out {
                Some(path) => {
                    let mut text = serde_json::to_string_pretty(&file)?;
                    text.push('\n');
                    std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                }
                None => print_json(&file)?,
            }
        }
        Command::Solve {
            instance,
            mode,
            radius,
            eps,
            oracle,
            csv,
        } => {
            let inst = read_instance(&instance, csv.into())?;
            print_json(&solve(&inst, mode, radius, eps, oracle, tol)?)?;
        }
        Command::Verify {
            instance,
            solution,
            csv,
        } => {
            let inst = read_instance(&instance, csv.into())?;
            print_json(&verify(&inst, &solution, tol)?)?;
        }
        Command::Plotdata { instance, radius, csv } => {
            let inst = read_instance(&instance, csv.into())?;
            plotdata(&inst, radius, tol, &mut io::stdout().lock())?;
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
        Err(e) if e.is::<Infeasible>() => {
            eprintln!("infeasible: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let a = generate(7, 5, 3, 1, 2, 0.5, 4.0).unwrap();
        let b = generate(7, 5, 3, 1, 2, 0.5, 4.0).unwrap();
        assert_eq!(a.points, b.points);
        assert!(a.points.iter().flatten().all(|&c| (0.0..=4.0).contains(&c)));
        assert!(generate(7, 0, 3, 1, 2, 0.5, 4.0).is_err());
        assert!(generate(7, 5, 3, 1, 2, -1.0, 4.0).is_err());
    }

    #[test]
    fn plotdata_sections() {
        let inst = InstanceFile {
            dim: 2,
            alpha: 2.0,
            p: 1,
            q: 1,
            points: vec![vec![0.0, 0.0], vec![10.0, 0.0]],
        }
        .to_instance()
        .unwrap();
        let mut buf = Vec::new();
        plotdata(&inst, 6.0, Tolerance::default(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("0,-6,6\n1,4,16\n"), "{text}");
        assert!(plotdata(&inst, -1.0, Tolerance::default(), &mut Vec::new()).is_err());
    }
}
