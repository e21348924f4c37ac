//! Command line explorer for the nu-Tamari lattice: enumerate objects in any
//! guise, export Hasse diagrams, convert single objects between guises, and
//! run the invariant battery.
//!
//! Exit codes: 0 on success, 2 when a flag or the base path fails to parse,
//! 3 when a listing exceeds the configured limit, 4 when a value handed to
//! `map` is not a valid object, 1 when `check` finds a broken invariant.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Value, json};

use nu_tamari::bracket::{Brackets, bracket_label};
use nu_tamari::checks::{componentwise_poset, run_checks};
use nu_tamari::flush::{duality_map, left_flush, right_flush};
use nu_tamari::path::enumerate_nu_paths;
use nu_tamari::pipedream::{facet_label, increasing_flip_poset, pi_nu, q_position, q_word};
use nu_tamari::tree::{enumerate_nu_trees, rotation_poset};
use nu_tamari::{LatticePath, NuTree, Point, Region};

#[derive(Parser)]
#[command(name = "nu-tamari", version, about = "Explore nu-Tamari lattices")]
struct Cli {
    /// Reserved for future sampling commands; every current algorithm is
    /// deterministic and ignores it.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all objects of one kind over a base path.
    Enumerate(EnumerateArgs),
    /// Print the Hasse diagram of the lattice in one of its guises.
    Hasse(HasseArgs),
    /// Convert one object between guises.
    Map(MapArgs),
    /// Run the invariant battery over every base path up to a length.
    Check(CheckArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Base path nu, a word over E and N.
    #[arg(long)]
    nu: String,
    /// Kind of object to list.
    #[arg(long, value_enum)]
    object: ObjectKind,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
    format: ListFormat,
    /// Largest listing to print before giving up.
    #[arg(long, default_value_t = 10_000)]
    limit: usize,
}

#[derive(Args)]
struct HasseArgs {
    /// Base path nu, a word over E and N.
    #[arg(long)]
    nu: String,
    /// Guise whose labels the diagram carries.
    #[arg(long, value_enum)]
    guise: Guise,
    /// Output format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
    /// Largest node count to print before giving up.
    #[arg(long, default_value_t = 10_000)]
    limit: usize,
}

#[derive(Args)]
struct MapArgs {
    /// Base path nu, a word over E and N.
    #[arg(long)]
    nu: String,
    /// Guise the value is written in.
    #[arg(long, value_enum)]
    from: Guise,
    /// Guise to convert to.
    #[arg(long, value_enum)]
    to: MapTarget,
    /// The object itself: a path word, a point list, a bracket vector, or a
    /// facet position set.
    #[arg(long)]
    value: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
    format: ListFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Check every base path of length at most this.
    #[arg(long, default_value_t = 5)]
    max_len: usize,
    /// Largest clique bound for the higher associahedra checks.
    #[arg(long, default_value_t = 2)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectKind {
    Paths,
    Trees,
    Brackets,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Guise {
    Path,
    Tree,
    Bracket,
    Subword,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapTarget {
    Path,
    Tree,
    Bracket,
    Subword,
    /// Image under the duality onto the reversed base path.
    PathDual,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Hasse(args) => cmd_hasse(&args),
        Command::Map(args) => cmd_map(&args),
        Command::Check(args) => cmd_check(&args),
    }
}

fn parse_nu(word: &str) -> Result<LatticePath, ExitCode> {
    word.trim().parse().map_err(|e| {
        eprintln!("error: --nu {word:?}: {e}");
        ExitCode::from(2)
    })
}

/// Write the payload in one go. A closed pipe downstream is not our error.
fn emit(payload: &str) -> ExitCode {
    match io::stdout().write_all(payload.as_bytes()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
    }
}

fn cmd_enumerate(args: &EnumerateArgs) -> ExitCode {
    let nu = match parse_nu(&args.nu) {
        Ok(nu) => nu,
        Err(code) => return code,
    };
    let region = Region::new(&nu);
    let (lines, values): (Vec<String>, Vec<Value>) = match args.object {
        ObjectKind::Paths => {
            enumerate_nu_paths(&nu).iter().map(|mu| (mu.to_string(), json!(mu.to_string()))).unzip()
        }
        ObjectKind::Trees => {
            let mut trees = enumerate_nu_trees(&region);
            trees.sort_by_key(|tree| tree.to_string());
            trees.iter().map(|tree| (tree.to_string(), points_json(tree.nodes()))).unzip()
        }
        ObjectKind::Brackets => Brackets::new(&region)
            .enumerate_valid()
            .iter()
            .map(|entries| (bracket_label(entries), json!(entries)))
            .unzip(),
    };
    if lines.len() > args.limit {
        eprintln!("error: {} objects exceed the limit of {}", lines.len(), args.limit);
        return ExitCode::from(3);
    }
    match args.format {
        ListFormat::Plain => {
            let mut payload = lines.join("\n");
            if !payload.is_empty() {
                payload.push('\n');
            }
            emit(&payload)
        }
        ListFormat::Json => emit(&format!("{}\n", Value::Array(values))),
    }
}

fn cmd_hasse(args: &HasseArgs) -> ExitCode {
    let nu = match parse_nu(&args.nu) {
        Ok(nu) => nu,
        Err(code) => return code,
    };
    let region = Region::new(&nu);
    let poset = match args.guise {
        Guise::Path => nu_tamari::path::nu_tamari_poset(&nu),
        Guise::Tree => rotation_poset(&region),
        Guise::Bracket => componentwise_poset(&Brackets::new(&region).enumerate_valid()),
        Guise::Subword => increasing_flip_poset(&q_word(&region), &pi_nu(&region)),
    };
    if poset.len() > args.limit {
        eprintln!("error: {} nodes exceed the limit of {}", poset.len(), args.limit);
        return ExitCode::from(3);
    }
    match args.format {
        GraphFormat::Dot => emit(&poset.hasse_dot()),
        GraphFormat::Json => {
            let covers: Vec<Value> =
                poset.cover_pairs().into_iter().map(|(a, b)| json!([a, b])).collect();
            emit(&format!("{}\n", json!({ "nodes": poset.labels(), "covers": covers })))
        }
    }
}

fn cmd_map(args: &MapArgs) -> ExitCode {
    let nu = match parse_nu(&args.nu) {
        Ok(nu) => nu,
        Err(code) => return code,
    };
    let region = Region::new(&nu);
    let tree = match tree_of_value(&region, args.from, &args.value) {
        Ok(tree) => tree,
        Err(reason) => {
            eprintln!("error: --value is not a valid object: {reason}");
            return ExitCode::from(4);
        }
    };
    let brackets = Brackets::new(&region);
    let (line, value) = match args.to {
        MapTarget::Path => {
            let mu = left_flush(&tree);
            (mu.to_string(), json!(mu.to_string()))
        }
        MapTarget::PathDual => {
            let image = duality_map(&region, &left_flush(&tree));
            (image.to_string(), json!(image.to_string()))
        }
        MapTarget::Tree => (tree.to_string(), points_json(tree.nodes())),
        MapTarget::Bracket => {
            let entries = brackets.of_tree(&tree);
            (bracket_label(&entries), json!(entries))
        }
        MapTarget::Subword => {
            let facet: BTreeSet<usize> =
                tree.nodes().iter().map(|&p| q_position(&region, p)).collect();
            (facet_label(&facet), json!(facet.iter().collect::<Vec<_>>()))
        }
    };
    match args.format {
        ListFormat::Plain => emit(&format!("{line}\n")),
        ListFormat::Json => emit(&format!("{value}\n")),
    }
}

fn cmd_check(args: &CheckArgs) -> ExitCode {
    let mut report = String::new();
    let mut failures = 0;
    for outcome in run_checks(args.max_len, args.k) {
        if outcome.passed {
            let _ = writeln!(report, "PASS {} ({})", outcome.tag, outcome.detail);
        } else {
            failures += 1;
            let _ = writeln!(report, "FAIL {}: {}", outcome.tag, outcome.detail);
        }
    }
    let written = emit(&report);
    if failures > 0 {
        eprintln!("error: {failures} invariant(s) failed");
        return ExitCode::from(1);
    }
    written
}

/// Parse a value in the given guise and normalize it to a tree.
fn tree_of_value(region: &Region, from: Guise, value: &str) -> Result<NuTree, String> {
    match from {
        Guise::Path => {
            let mu: LatticePath = value.trim().parse().map_err(|e| format!("{e}"))?;
            if !region.is_above(&mu) {
                return Err(format!("{mu} does not stay weakly above the base path"));
            }
            Ok(right_flush(region, &mu))
        }
        Guise::Tree => {
            let points = point_list(value)?;
            NuTree::try_new(region, points).map_err(|e| e.to_string())
        }
        Guise::Bracket => {
            let entries = bracket_entries(value)?;
            Brackets::new(region).tree_of(&entries).map_err(|e| e.to_string())
        }
        Guise::Subword => {
            let all = region.points();
            let mut nodes = Vec::new();
            for position in unsigned_integers(value)? {
                if position == 0 || position > all.len() {
                    return Err(format!("facet position {position} is out of range"));
                }
                nodes.push(all[position - 1]);
            }
            NuTree::try_new(region, nodes).map_err(|e| e.to_string())
        }
    }
}

fn points_json(points: &[Point]) -> Value {
    Value::Array(points.iter().map(|p| json!([p.x, p.y])).collect())
}

/// Read a point list from either the braced display form `{(0,0),(1,0)}` or
/// a JSON array of pairs; only the digit pairs matter.
fn point_list(value: &str) -> Result<Vec<Point>, String> {
    let numbers = unsigned_integers(value)?;
    if numbers.len() % 2 != 0 {
        return Err(format!("expected coordinate pairs, got {} numbers", numbers.len()));
    }
    Ok(numbers.chunks(2).map(|pair| Point::new(pair[0], pair[1])).collect())
}

/// Read a bracket vector: a bare digit string is one entry per digit, any
/// other form is read as its embedded integers.
fn bracket_entries(value: &str) -> Result<Vec<usize>, String> {
    let trimmed = value.trim();
    if !trimmed.is_empty() && trimmed.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(trimmed.bytes().map(|b| (b - b'0') as usize).collect());
    }
    unsigned_integers(trimmed)
}

/// The maximal runs of digits in the input, as numbers. Everything else is
/// treated as punctuation, so display forms and JSON parse alike.
fn unsigned_integers(value: &str) -> Result<Vec<usize>, String> {
    let mut numbers = Vec::new();
    let mut current: Option<usize> = None;
    for c in value.chars() {
        match c.to_digit(10) {
            Some(d) => {
                let so_far = current.unwrap_or(0);
                current = Some(
                    so_far
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as usize))
                        .ok_or_else(|| "number too large".to_string())?,
                );
            }
            None => {
                if let Some(n) = current.take() {
                    numbers.push(n);
                }
            }
        }
    }
    if let Some(n) = current {
        numbers.push(n);
    }
    if numbers.is_empty() {
        return Err("no numbers found in value".to_string());
    }
    Ok(numbers)
}
