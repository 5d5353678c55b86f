//! Command-line front end: decide, solve, verify, table, render, closure,
//! and figures subcommands.
//!
//! Exit codes: 0 tileable/valid, 1 not tileable/invalid, 2 usage error,
//! 3 inconclusive (node limit reached).

mod render;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use render::RenderStyle;
use sqrect::closure::{find_exceptions, SeedSet};
use sqrect::construct;
use sqrect::search::{self, SearchConfig, SearchOutcome};
use sqrect::theory;
use sqrect::tiling::{verify, Rect, Tiling};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "sqrect", version, about = "Tile integer rectangles with integer squares of side length at least 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide tileability in closed form and report the rule that applied.
    Decide { m: u32, n: u32 },
    /// Produce a witness tiling in the canonical text format.
    Solve(SolveArgs),
    /// Check a tiling file and report VALID or the first failure.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        min_side: u32,
    },
    /// Print the tileability grid for 2 <= m, n <= MAX.
    Table {
        #[arg(long, default_value_t = 19)]
        max: u32,
    },
    /// Render a tiling file as SVG (default) or ASCII art.
    Render {
        file: PathBuf,
        /// Output SVG path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Emit ASCII art instead of SVG.
        #[arg(long)]
        ascii: bool,
        #[arg(long, default_value_t = 20)]
        cell_px: u32,
    },
    /// Report tileable rectangles that guillotine joins cannot reach.
    Closure {
        #[arg(long, default_value_t = 19)]
        max: u32,
        /// Comma-separated seed square sides (default 2,3,5,7).
        #[arg(long, value_delimiter = ',', conflicts_with = "all_squares")]
        seeds: Option<Vec<u32>>,
        /// Seed every square side from 2 up to MAX.
        #[arg(long)]
        all_squares: bool,
    },
    /// Emit SVG figures for every tileable coprime pair m < n <= 19.
    Figures {
        #[arg(long)]
        outdir: PathBuf,
    },
}

#[derive(Args)]
struct SolveArgs {
    m: u32,
    n: u32,
    #[arg(long, default_value_t = 2)]
    min_side: u32,
    #[arg(long, value_enum, default_value_t = Engine::Search)]
    engine: Engine,
    /// Abort the search after this many placement attempts.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Search,
    Construct,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

/// Write via a temp file in the same directory so readers never observe a
/// partial file.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp~");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

fn emit(output: Option<&Path>, contents: &str) -> std::io::Result<()> {
    match output {
        Some(path) => write_atomic(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Decide { m, n } => cmd_decide(m, n),
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify { file, min_side } => cmd_verify(&file, min_side),
        Command::Table { max } => cmd_table(max),
        Command::Render {
            file,
            output,
            ascii,
            cell_px,
        } => cmd_render(&file, output.as_deref(), ascii, cell_px),
        Command::Closure {
            max,
            seeds,
            all_squares,
        } => cmd_closure(max, seeds, all_squares),
        Command::Figures { outdir } => cmd_figures(&outdir),
    }
}

fn cmd_decide(m: u32, n: u32) -> ExitCode {
    match theory::decide_tileable(m, n) {
        Ok(v) => {
            if v.tileable {
                println!("tileable ({})", v.rule);
                ExitCode::SUCCESS
            } else {
                println!("not tileable ({})", v.rule);
                ExitCode::from(EXIT_NEGATIVE)
            }
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_solve(args: &SolveArgs) -> ExitCode {
    if args.m < 1 || args.n < 1 {
        return usage_error("rectangle dimensions must be at least 1");
    }
    if args.min_side < 2 {
        return usage_error("--min-side must be at least 2");
    }
    let tiling = match args.engine {
        Engine::Search => {
            let cfg = SearchConfig {
                min_side: args.min_side,
                node_limit: args.node_limit,
                ..SearchConfig::default()
            };
            match search::find_tiling(Rect::new(args.m, args.n), &cfg) {
                SearchOutcome::Found(t) => t,
                SearchOutcome::NoTiling => {
                    println!("no tiling");
                    return ExitCode::from(EXIT_NEGATIVE);
                }
                SearchOutcome::Inconclusive => {
                    println!("inconclusive (node limit reached)");
                    return ExitCode::from(EXIT_INCONCLUSIVE);
                }
            }
        }
        Engine::Construct => {
            if args.min_side != 2 {
                return usage_error("--engine construct only supports --min-side 2");
            }
            match construct::construct(args.m, args.n) {
                Ok(Some(t)) => t,
                Ok(None) => {
                    println!("no tiling");
                    return ExitCode::from(EXIT_NEGATIVE);
                }
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    };
    debug_assert!(verify(&tiling, args.min_side).valid);
    match emit(args.output.as_deref(), &tiling.to_text()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(&format!("cannot write output: {e}")),
    }
}

fn cmd_verify(file: &Path, min_side: u32) -> ExitCode {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", file.display())),
    };
    let tiling = match Tiling::from_text(&text) {
        Ok(t) => t,
        Err(e) => {
            println!("INVALID: {e}");
            return ExitCode::from(EXIT_NEGATIVE);
        }
    };
    let report = verify(&tiling, min_side);
    match report.failure {
        None => {
            println!("VALID");
            ExitCode::SUCCESS
        }
        Some(f) => {
            println!("{f}");
            ExitCode::from(EXIT_NEGATIVE)
        }
    }
}

/// Header row of n values, one row per m, a check mark per tileable cell.
fn format_table(table: &search::TileTable) -> String {
    let max = table.max_dim();
    let mut out = String::from("m\\n");
    for n in 2..=max {
        let _ = write!(out, "{n:>3}");
    }
    out.push('\n');
    for m in 2..=max {
        let _ = write!(out, "{m:>3}");
        for n in 2..=max {
            out.push_str(if table.get(m, n) { "  \u{2713}" } else { "   " });
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

fn cmd_table(max: u32) -> ExitCode {
    if max < 2 {
        return usage_error("--max must be at least 2");
    }
    let table = search::build_table(max, &SearchConfig::default());
    print!("{}", format_table(&table));
    ExitCode::SUCCESS
}

fn cmd_render(file: &Path, output: Option<&Path>, ascii: bool, cell_px: u32) -> ExitCode {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", file.display())),
    };
    let tiling = match Tiling::from_text(&text) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("bad tiling file: {e}")),
    };
    if cell_px < 1 {
        return usage_error("--cell-px must be at least 1");
    }
    let rendered = if ascii {
        render::to_ascii(&tiling)
    } else {
        let style = RenderStyle {
            cell_px,
            ..RenderStyle::default()
        };
        render::to_svg(&tiling, &style)
    };
    match emit(output, &rendered) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(&format!("cannot write output: {e}")),
    }
}

fn cmd_closure(max: u32, seeds: Option<Vec<u32>>, all_squares: bool) -> ExitCode {
    if max < 2 {
        return usage_error("--max must be at least 2");
    }
    let seed_set = if all_squares {
        SeedSet::all_up_to(max)
    } else {
        match seeds {
            None => SeedSet::default(),
            Some(list) => match SeedSet::new(list) {
                Some(s) => s,
                None => return usage_error("--seeds entries must be at least 2"),
            },
        }
    };
    let exceptions = find_exceptions(max, &seed_set);
    if exceptions.is_empty() {
        println!("exceptions: none");
    } else {
        let list: Vec<String> = exceptions.iter().map(|(m, n)| format!("{m}x{n}")).collect();
        println!("exceptions: {}", list.join(", "));
    }
    ExitCode::SUCCESS
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The canonical figure set: tileable pairs m < n <= 19 with coprime sides
/// (pairs with a common divisor have a trivial grid tiling and are skipped).
fn cmd_figures(outdir: &Path) -> ExitCode {
    if let Err(e) = fs::create_dir_all(outdir) {
        return usage_error(&format!("cannot create {}: {e}", outdir.display()));
    }
    let cfg = SearchConfig::default();
    let table = search::build_table(19, &cfg);
    let style = RenderStyle::default();
    let mut count = 0;
    for m in 2..=19 {
        for n in m + 1..=19 {
            if !table.get(m, n) || gcd(m, n) != 1 {
                continue;
            }
            let tiling = search::find_tiling(Rect::new(m, n), &cfg)
                .into_tiling()
                .expect("table says tileable");
            let path = outdir.join(format!("{m}x{n}.svg"));
            if let Err(e) = write_atomic(&path, &render::to_svg(&tiling, &style)) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
            count += 1;
        }
    }
    println!("wrote {count} figures to {}", outdir.display());
    ExitCode::SUCCESS
}
