use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use rectcross::bounds::{binomial, decimal};
use rectcross::kite::configuration_between;
use rectcross::search::respects_lower_bound;
use rectcross::{
    color_by_hulls, count_non_concentric_crossings, crossing_count, grid_exhaustive, jensen_upper, k11_candidates,
    local_search, nu_star_bracket, parse_bytes, peel_hulls, recursive_lower_bound, render_svg, run_suite,
    tally_by_label, verify_drawing, Colour, Drawing, DrawingFile, RenderSpec, SearchParams, Suite,
};

/// Thread count for the worker pool; unset or 0 means one per core.
const THREADS_ENV: &str = "RECTCROSS_THREADS";

#[derive(Parser)]
#[command(name = "rectcross", version, about = "Crossing counts and lemma checks for rectilinear drawings of K_n")]
#[command(after_help = "Set RECTCROSS_THREADS to fix the worker-thread count (default: one per core).")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the crossings of a drawing.
    Count { file: PathBuf },
    /// Peel profile, colouring, label tally and kite configurations.
    Classify { file: PathBuf },
    /// Run a lemma suite on seeded instances, or on one drawing.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["k6", "k9", "k10", "appendix", "all"])]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        file: Option<PathBuf>,
    },
    /// Seeded local search for a low-crossing drawing.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        moves: Option<usize>,
        #[arg(long = "box")]
        box_size: Option<i64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the best drawing here instead of standard output.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Exact minimum over a small integer grid.
    GridMin {
        #[arg(long)]
        n: usize,
        /// Grid size as WxH.
        #[arg(long, value_parser = parse_grid)]
        grid: (i64, i64),
    },
    /// Recursive lower bounds with Jensen upper bounds.
    Bounds {
        #[arg(long)]
        max_n: u64,
        #[arg(long, default_value_t = 10)]
        base_n: u64,
        #[arg(long, default_value_t = 62)]
        base_cr: u64,
    },
    /// Render a drawing as SVG.
    Render {
        file: PathBuf,
        #[arg(short)]
        o: PathBuf,
        #[arg(long)]
        no_crossings: bool,
    },
}

fn parse_grid(s: &str) -> Result<(i64, i64), String> {
    let (w, h) = s.split_once('x').ok_or("expected WxH, e.g. 4x4")?;
    let parse = |t: &str| t.parse::<i64>().map_err(|e| format!("{t}: {e}"));
    Ok((parse(w)?, parse(h)?))
}

/// Failed commands either hit bad input or found a failing rule.
enum Failure {
    Input(anyhow::Error),
    Rule,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<rectcross::Error> for Failure {
    fn from(e: rectcross::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn read_drawing(path: &Path) -> anyhow::Result<Drawing> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let file = parse_bytes(&bytes).with_context(|| format!("parsing {}", path.display()))?;
    Ok(file.drawing)
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn classify(d: &Drawing) -> String {
    let mut out = String::new();
    let hulls = peel_hulls(d);
    let _ = writeln!(out, "n: {}", d.n());
    let _ = writeln!(out, "crossings: {}", crossing_count(d.points()));
    let _ = writeln!(out, "profile: {:?}", hulls.profile());
    let cd = match color_by_hulls(d) {
        Ok(cd) => cd,
        Err(e) => {
            let _ = writeln!(out, "colouring: none ({e})");
            return out;
        }
    };
    let letters: String = cd.colours().iter().map(|c| c.letter()).collect();
    let _ = writeln!(out, "colouring: {letters}");
    for (label, count) in tally_by_label(&cd).iter().filter(|&(_, c)| c > 0) {
        let _ = writeln!(out, "  {label}: {count}");
    }
    let present = |c: Colour| !cd.class(c).is_empty();
    for (outer, inner) in [(Colour::Red, Colour::Green), (Colour::Red, Colour::Blue), (Colour::Green, Colour::Blue)] {
        if !(present(outer) && present(inner)) {
            continue;
        }
        if let Ok(cfg) = configuration_between(&cd, outer, inner) {
            let _ = writeln!(out, "configuration {}{}: {}", outer.letter(), inner.letter(), cfg.class);
        }
    }
    if let Ok(k) = count_non_concentric_crossings(&cd) {
        let _ = writeln!(out, "non-concentric: {k}");
    }
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { file } => {
            let d = read_drawing(&file)?;
            println!("crossings: {}", crossing_count(d.points()));
        }
        Command::Classify { file } => {
            print!("{}", classify(&read_drawing(&file)?));
        }
        Command::Verify { suite, instances, seed, file } => {
            let rules = suite.parse::<Suite>()?.rules();
            let failures = match file {
                Some(path) => {
                    let d = read_drawing(&path)?;
                    let reports = verify_drawing(&d, &rules, seed);
                    for r in &reports {
                        println!("{}", r.line(seed));
                    }
                    let failures = reports.iter().filter(|r| r.failed()).count();
                    println!("failures: {failures}");
                    failures
                }
                None => {
                    let summary = run_suite(&rules, instances, seed);
                    print!("{}", summary.to_text());
                    summary.failures()
                }
            };
            if failures > 0 {
                return Err(Failure::Rule);
            }
        }
        Command::Search { n, restarts, moves, box_size, seed, o } => {
            let defaults = SearchParams::for_n(n, seed);
            let params = SearchParams {
                restarts: restarts.unwrap_or(defaults.restarts),
                moves_per_restart: moves.unwrap_or(defaults.moves_per_restart),
                box_size: box_size.unwrap_or(defaults.box_size),
                ..defaults
            };
            let r = local_search(&params)?;
            println!("n: {n}");
            println!("crossings: {}", r.count);
            println!("{}", r.seed_trace);
            let history: Vec<String> =
                r.history.iter().map(|h| h.map_or_else(|| "-".to_string(), |c| c.to_string())).collect();
            println!("history: {}", history.join(" "));
            if !respects_lower_bound(n, r.count) {
                // would contradict a proven bound: a bug, not a discovery
                eprintln!("error: count {} is below the known lower bound", r.count);
                return Err(Failure::Rule);
            }
            let text = DrawingFile::new(r.best)
                .with_comment(format!(" n={n} crossings={} {}", r.count, r.seed_trace))
                .to_text();
            match o {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Command::GridMin { n, grid: (w, h) } => {
            let r = grid_exhaustive(n, w, h)?;
            println!("n: {n}");
            println!("grid: {w}x{h}");
            println!("minimum: {}", r.count);
            print!("{}", DrawingFile::new(r.best).to_text());
        }
        Command::Bounds { max_n, base_n, base_cr } => {
            let table = recursive_lower_bound(max_n, base_n, base_cr)?;
            print!("{}", table.to_delimited());
            let last = table.last();
            println!("final: n={} lower={} choose4={} ratio={} ~ {}", last.n, last.lower, binomial(last.n, 4),
                last.ratio_fraction(), decimal(&last.ratio_lower, 10));
            let (lo, hi) = nu_star_bracket();
            println!("nu_star: lower={lo} ~ {} upper={hi} ~ {}", decimal(&lo, 10), decimal(&hi, 10));
            let js: Vec<String> = (10..=12).map(|n| format!("j({n})={}", jensen_upper(n).expect("n >= 3"))).collect();
            println!("jensen: {}", js.join(" "));
            let k11: Vec<String> = k11_candidates().iter().map(u64::to_string).collect();
            println!("k11_candidates: {}", k11.join(" "));
        }
        Command::Render { file, o, no_crossings } => {
            let d = read_drawing(&file)?;
            let spec = RenderSpec { crossings: !no_crossings, ..RenderSpec::default() };
            write_file(&o, &render_svg(&d, &spec))?;
        }
    }
    Ok(())
}

fn init_threads() -> anyhow::Result<()> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse::<usize>().with_context(|| format!("{THREADS_ENV}={v}"))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = init_threads().map_err(Failure::Input).and_then(|()| run(cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rule) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
