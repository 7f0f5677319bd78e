//! Command-line front end: `verify` the closed-form solutions exactly,
//! `track` vortex lines over time to JSON/CSV, `render` one frame to SVG.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or configuration error.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ehvort_core::solutions::{
    classical_ring_locus, mutate_correction, quantum_correction, verify_report_classical,
    verify_report_for, AnalyticSolution, SolutionCase, SolutionParams,
};
use ehvort_core::vortex::{frames_to_csv, frames_to_json, track, GridSpec};

#[derive(Parser)]
#[command(name = "ehvort", version, about = "Nonlinear-electrodynamics vortex toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    /// Swinging vortex ring
    RingA,
    /// Vortex-antivortex pair
    PairB,
}

impl From<Case> for SolutionCase {
    fn from(c: Case) -> Self {
        match c {
            Case::RingA => SolutionCase::RingA,
            Case::PairB => SolutionCase::PairB,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SolutionArgs {
    /// Which closed-form configuration to use
    #[arg(long, value_enum)]
    case: Case,
    /// Drop the first quantum correction (pure Maxwell seed)
    #[arg(long)]
    classical: bool,
    /// Fine-structure constant (defaults to the physical value)
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Extra multiplier on the quartic coupling, for demonstration runs
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    coupling_scale: f64,
}

impl SolutionArgs {
    fn params(&self) -> SolutionParams {
        let mut p = SolutionParams::new(self.case.into()).with_coupling_scale(self.coupling_scale);
        if let Some(a) = self.alpha {
            p = p.with_alpha(a);
        }
        p
    }

    fn solution(&self) -> AnalyticSolution {
        if self.classical {
            AnalyticSolution::classical(self.params())
        } else {
            AnalyticSolution::quantum(self.params())
        }
    }
}

#[derive(Args)]
struct GridArgs {
    /// Cells per axis
    #[arg(long, default_value_t = 64)]
    grid: usize,
    /// Lower corner of the cubic domain
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    lo: f64,
    /// Upper corner of the cubic domain
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    hi: f64,
    /// Shorthand for a symmetric domain [-B, B]^3 (overrides --lo/--hi)
    #[arg(long, name = "box")]
    box_half: Option<f64>,
}

impl GridArgs {
    fn spec(&self) -> Result<GridSpec, String> {
        let (lo, hi) = match self.box_half {
            Some(b) if b > 0.0 => (-b, b),
            Some(b) => return Err(format!("--box must be positive, got {b}")),
            None => (self.lo, self.hi),
        };
        if hi <= lo {
            return Err(format!("empty domain: lo={lo} hi={hi}"));
        }
        if self.grid < 8 {
            return Err("need at least 8 grid cells per axis".into());
        }
        Ok(GridSpec::cube(lo, hi, self.grid))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact symbolic verification of a closed-form solution
    Verify {
        #[command(flatten)]
        sol: SolutionArgs,
        /// Perturb one correction block before checking, e.g. `beta.x=1/1000`
        #[arg(long)]
        mutate: Option<String>,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Track vortex lines of F+.F+ over a time window
    Track {
        #[command(flatten)]
        sol: SolutionArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t_start: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t_end: f64,
        /// Number of frames, evenly spaced over [t_start, t_end]
        #[arg(long, default_value_t = 11)]
        frames: usize,
        /// Shorthand start:end:frames (overrides --t-start/--t-end/--frames)
        #[arg(long, allow_negative_numbers = true)]
        t: Option<String>,
        /// Refine crossings to true zeros (slower)
        #[arg(long)]
        refine: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Render the vortex lines of one frame as an SVG projection
    Render {
        #[command(flatten)]
        sol: SolutionArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        time: f64,
        /// Projection plane: xy, xz or yz
        #[arg(long, default_value = "xz")]
        axes: String,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print the analytic ring locus (sphere and plane) at one time
    Locus {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        time: f64,
    },
}

fn parse_rational(s: &str) -> Result<ehvort_core::poly::Rat, String> {
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| format!("bad numerator in '{s}'"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("bad denominator in '{s}'"))?;
        if q == 0 {
            return Err("zero denominator".into());
        }
        return Ok(ehvort_core::poly::rat(p, q));
    }
    if let Some((m, e)) = s.split_once(['e', 'E']) {
        let m: i64 = m.trim().parse().map_err(|_| format!("bad mantissa in '{s}'"))?;
        let e: i32 = e.trim().parse().map_err(|_| format!("bad exponent in '{s}'"))?;
        let pow = 10i64.checked_pow(e.unsigned_abs()).ok_or("exponent too large")?;
        return Ok(if e >= 0 {
            ehvort_core::poly::rat(m * pow, 1)
        } else {
            ehvort_core::poly::rat(m, pow)
        });
    }
    let n: i64 = s.trim().parse().map_err(|_| format!("not a rational: '{s}'"))?;
    Ok(ehvort_core::poly::rat(n, 1))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Ok(true) = all checks passed, Ok(false) = a check failed, Err = usage.
fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify {
            sol,
            mutate,
            output,
        } => {
            if sol.classical && mutate.is_some() {
                return Err("--mutate perturbs the quantum correction; drop --classical".into());
            }
            let params = sol.params();
            let (report, ok) = if sol.classical {
                verify_report_classical(&params).map_err(|e| e.to_string())?
            } else {
                let mut correction = quantum_correction(&params);
                if let Some(spec) = &mutate {
                    let (target, eps) = spec
                        .split_once(['=', ':'])
                        .ok_or_else(|| format!("bad --mutate '{spec}', want block.comp=rational"))?;
                    correction = mutate_correction(&correction, target, parse_rational(eps)?)?;
                }
                verify_report_for(&params, &correction).map_err(|e| e.to_string())?
            };
            emit(output.as_ref(), &report)?;
            Ok(ok)
        }
        Command::Track {
            sol,
            grid,
            mut t_start,
            mut t_end,
            mut frames,
            t,
            refine,
            format,
            output,
        } => {
            if let Some(spec) = t {
                let parts: Vec<&str> = spec.split(':').collect();
                if parts.len() != 3 {
                    return Err(format!("bad --t '{spec}', want start:end:frames"));
                }
                t_start = parts[0].parse().map_err(|_| "bad --t start")?;
                t_end = parts[1].parse().map_err(|_| "bad --t end")?;
                frames = parts[2].parse().map_err(|_| "bad --t frames")?;
            }
            if frames == 0 {
                return Err("need at least one frame".into());
            }
            if t_end < t_start {
                return Err("t_end before t_start".into());
            }
            let spec = grid.spec()?;
            let numeric = sol.solution().compile();
            let times = linspace(t_start, t_end, frames);
            let reports = track(spec, &times, |p, t| numeric.f2(p, t), refine);
            let config = serde_json::json!({
                "case": sol.case.to_possible_value().unwrap().get_name(),
                "classical": sol.classical,
                "alpha": sol.alpha,
                "coupling_scale": sol.coupling_scale,
                "grid": spec,
                "t_start": t_start,
                "t_end": t_end,
                "frames": frames,
                "refine": refine,
            });
            let text = match format {
                Format::Json => frames_to_json(&reports, &config),
                Format::Csv => frames_to_csv(&reports, &config.to_string()),
            };
            emit(output.as_ref(), &text)?;
            Ok(true)
        }
        Command::Render {
            sol,
            grid,
            time,
            axes,
            output,
        } => {
            let spec = grid.spec()?;
            let numeric = sol.solution().compile();
            let report =
                ehvort_core::vortex::track_frame(spec, time, &|p| numeric.f2(p, time), true);
            let svg = render::curves_to_svg(&report, &spec, &axes)?;
            emit(Some(&output), &svg)?;
            eprintln!(
                "rendered {} curve(s) at t={} to {}",
                report.curves.len(),
                time,
                output.display()
            );
            Ok(true)
        }
        Command::Locus { a, time } => {
            if a <= 0.0 {
                return Err("ring parameter a must be positive".into());
            }
            let l = classical_ring_locus(a, time);
            println!(
                "time={time}\nsphere_center=({},{},{})\nsphere_radius={}\nplane_normal=({},{},{})\nplane_offset={}\ncircle_radius={}",
                l.sphere_center[0],
                l.sphere_center[1],
                l.sphere_center[2],
                l.sphere_radius,
                l.plane_normal[0],
                l.plane_normal[1],
                l.plane_normal[2],
                l.plane_offset,
                l.circle_radius
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
