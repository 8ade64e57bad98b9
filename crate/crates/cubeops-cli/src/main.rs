//! `cubeops`: exact little-cubes computations, law suites, and SVG rendering.
//!
//! All rational I/O uses the `"p/q"` string convention. Reports and SVG
//! output are deterministic; timings go to stderr only.

use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use cubeops_core::approximation::{center, csupp_with_fallback, cube_st, expansion, homotopy_h};
use cubeops_core::comonad::CnElem;
use cubeops_core::geometry::Rect;
use cubeops_core::operad::{Configuration, LittleCube};
use cubeops_core::spaces::{LoopMap, UnitInterval};
use cubeops_core::Rational;
use cubeops_harness::{
    default_suite_names, render_json, render_svg, run_suites, Mode, RenderInput, SuiteConfig,
};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "cubeops", version, about = "Exact little-cubes computations and law suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose configurations given as JSON on stdin.
    ///
    /// Accepts either {"outer", "slot", "inner"} for a partial composite
    /// or {"outer", "args"} for a full composite.
    Compose,
    /// Print the cubical support of the element described as JSON on stdin.
    Csupp(ElemArgs),
    /// Print the center of the cubical support of the element on stdin.
    Center(ElemArgs),
    /// Print the little cube carrying the point s to the point t.
    #[command(name = "cube-st")]
    CubeSt(CubeStArgs),
    /// Print one frame of the expansion path of a cube away from a point.
    Expand(ExpandArgs),
    /// Run law suites and print a deterministic JSON report.
    Check(CheckArgs),
    /// Render a JSON drawing description to an SVG file.
    Render(RenderArgs),
}

#[derive(Args)]
struct ElemArgs {
    /// Oracle budget when the support cannot be resolved symbolically.
    #[arg(long, default_value_t = 10_000)]
    budget: usize,
}

#[derive(Args)]
struct CubeStArgs {
    /// Source point, comma-separated rationals such as "1/4,1/2".
    #[arg(long)]
    s: String,
    /// Target point, comma-separated rationals.
    #[arg(long)]
    t: String,
}

#[derive(Args)]
struct ExpandArgs {
    /// The cube to expand, as JSON such as '[["1/4","1/2"]]'.
    #[arg(long)]
    c: String,
    /// The point to expand away from, comma-separated rationals.
    #[arg(long)]
    p: String,
    /// The time in [0, 1] at which to take the frame.
    #[arg(long)]
    time: String,
}

#[derive(Args)]
struct CheckArgs {
    /// Ambient dimension for the suites.
    #[arg(long)]
    n: Option<usize>,
    /// Root seed; overrides CUBEOPS_SEED, which overrides the default 42.
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count per law.
    #[arg(long)]
    samples: Option<u64>,
    /// Suite to run (repeatable); defaults to every non-fixture suite.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// Run cases sequentially even when parallel execution is available.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// JSON drawing description file.
    #[arg(long)]
    input: String,
    /// Output SVG path.
    #[arg(long)]
    out: String,
}

/// Composition request, read from stdin as JSON.
#[derive(Deserialize)]
#[serde(untagged)]
enum ComposeRequest {
    Partial { outer: Configuration, slot: usize, inner: Configuration },
    Full { outer: Configuration, args: Vec<Configuration> },
}

/// Element description for `csupp` and `center`, built over the unit
/// interval (the spaces only matter up to their basepoint here; supports
/// are determined by the constructor data).
#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum ElemDesc {
    Trivial { n: usize },
    Peaked { t: Vec<Rational> },
    Threshold { a: Rational },
    Precomposed { base: Box<ElemDesc>, cube: LittleCube },
    Expanded { base: Box<ElemDesc>, time: Rational },
}

#[derive(Serialize)]
struct SupportOut {
    support: Option<Rect>,
    used_oracle: bool,
}

#[derive(Serialize)]
struct CenterOut {
    center: Option<Vec<Rational>>,
}

fn read_stdin() -> Result<String, String> {
    let mut buffer = String::new();
    std::io::stdin()
        .read_to_string(&mut buffer)
        .map_err(|e| format!("failed to read stdin: {e}"))?;
    Ok(buffer)
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid {what} JSON: {e}"))
}

fn parse_coords(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|part| {
            Rational::from_str(part.trim()).map_err(|e| format!("bad rational `{part}`: {e}"))
        })
        .collect()
}

fn print_json<T: Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}

/// A loop supported everywhere in the open cube, so peaked elements built
/// from a descriptor are genuinely non-trivial away from the peak.
fn bump_loop(n: usize) -> LoopMap<UnitInterval> {
    LoopMap::from_fn(n, UnitInterval, "bump", |coords: &[Rational]| {
        let mut height = Rational::one();
        for c in coords {
            let edge = Rational::min(c, &(Rational::one() - c));
            height = Rational::min(&height, &edge);
        }
        Rational::new(2, 1) * height
    })
}

fn build_elem(desc: &ElemDesc) -> Result<CnElem<UnitInterval>, String> {
    match desc {
        ElemDesc::Trivial { n } => {
            if *n == 0 {
                return Err("dimension must be at least 1".to_string());
            }
            Ok(CnElem::trivial(*n, UnitInterval))
        }
        ElemDesc::Peaked { t } => {
            let l = bump_loop(t.len());
            CnElem::peaked(t.clone(), l).map_err(|e| e.to_string())
        }
        ElemDesc::Threshold { a } => CnElem::threshold(a.clone()).map_err(|e| e.to_string()),
        ElemDesc::Precomposed { base, cube } => {
            build_elem(base)?.precompose(cube).map_err(|e| e.to_string())
        }
        ElemDesc::Expanded { base, time } => {
            if !time.in_unit() {
                return Err(format!("expansion time {time} lies outside [0, 1]"));
            }
            Ok(homotopy_h(&build_elem(base)?, time.clone()))
        }
    }
}

fn cmd_compose() -> Result<ExitCode, String> {
    let text = read_stdin()?;
    let request: ComposeRequest = parse_json(&text, "composition request")?;
    let result = match request {
        ComposeRequest::Partial { outer, slot, inner } => {
            outer.partial_compose(slot, &inner).map_err(|e| e.to_string())?
        }
        ComposeRequest::Full { outer, args } => {
            outer.full_compose(&args).map_err(|e| e.to_string())?
        }
    };
    print_json(&result)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_csupp(args: &ElemArgs) -> Result<ExitCode, String> {
    let text = read_stdin()?;
    let desc: ElemDesc = parse_json(&text, "element description")?;
    let elem = build_elem(&desc)?;
    let answer = csupp_with_fallback(&elem, args.budget);
    print_json(&SupportOut { support: answer.rect, used_oracle: answer.used_oracle })?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_center(args: &ElemArgs) -> Result<ExitCode, String> {
    let text = read_stdin()?;
    let desc: ElemDesc = parse_json(&text, "element description")?;
    let elem = build_elem(&desc)?;
    let midpoint = match center(&elem) {
        Ok(mid) => mid,
        // Symbolically unresolvable support: fall back to the oracle's
        // bracketing rect, whose center is still a sound representative.
        Err(_) => csupp_with_fallback(&elem, args.budget).rect.map(|r| r.center()),
    };
    print_json(&CenterOut { center: midpoint })?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_cube_st(args: &CubeStArgs) -> Result<ExitCode, String> {
    let s = parse_coords(&args.s)?;
    let t = parse_coords(&args.t)?;
    let cube = cube_st(&s, &t).map_err(|e| e.to_string())?;
    print_json(&cube)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(args: &ExpandArgs) -> Result<ExitCode, String> {
    let cube: LittleCube = parse_json(&args.c, "cube")?;
    let p = parse_coords(&args.p)?;
    let time = Rational::from_str(&args.time)
        .map_err(|e| format!("bad rational `{}`: {e}", args.time))?;
    if !time.in_unit() {
        return Err(format!("expansion time {time} lies outside [0, 1]"));
    }
    let frame = expansion(&cube, &p).map_err(|e| e.to_string())?.at(&time);
    print_json(&frame)?;
    Ok(ExitCode::SUCCESS)
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("CUBEOPS_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("CUBEOPS_SEED must be an unsigned integer, got `{text}`")),
        Err(_) => Ok(42),
    }
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode, String> {
    let mut cfg = SuiteConfig::default();
    if let Some(n) = args.n {
        if n == 0 {
            return Err("dimension must be at least 1".to_string());
        }
        cfg.n = n;
    }
    cfg.seed = resolve_seed(args.seed)?;
    if let Some(samples) = args.samples {
        cfg.samples = samples;
    }
    let defaults = default_suite_names();
    let names: Vec<&str> = if args.suites.is_empty() {
        defaults
    } else {
        args.suites.iter().map(String::as_str).collect()
    };
    let mode = if args.sequential { Mode::Sequential } else { Mode::Parallel };
    let outcome = run_suites(&cfg, &names, mode)?;
    print!("{}", render_json(&outcome.report));
    for timing in &outcome.timings {
        eprintln!("{}: {} ms", timing.suite, timing.millis);
    }
    Ok(if outcome.report.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_render(args: &RenderArgs) -> Result<ExitCode, String> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| format!("failed to read {}: {e}", args.input))?;
    let input: RenderInput = parse_json(&text, "drawing description")?;
    let svg = render_svg(&input)?;
    fs::write(&args.out, svg).map_err(|e| format!("failed to write {}: {e}", args.out))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compose => cmd_compose(),
        Command::Csupp(args) => cmd_csupp(args),
        Command::Center(args) => cmd_center(args),
        Command::CubeSt(args) => cmd_cube_st(args),
        Command::Expand(args) => cmd_expand(args),
        Command::Check(args) => cmd_check(args),
        Command::Render(args) => cmd_render(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
