use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pcube::complex::{build_from_crossing_structure, build_from_lines};
use pcube::duals::{affine_dual, spherical_dual};
use pcube::families::FamilySpec;
use pcube::graph::GraphJson;
use pcube::io::{add_infinity, parse_arrangement};
use pcube::partialcube::{is_cubic, is_partial_cube, is_planar, DEFAULT_SIZE_LIMIT};
use pcube::pseudoline::parse_wiring;
use pcube::reproduce::{run_all, run_criterion, DEFAULT_SEED};
use pcube::tiling::{emit_svg, glue, Transform, ZonotopalTiling};
use pcube::zonohedron::{emit_off, zonohedron_skeleton};
use pcube::{CrossingStructure, Error, HomCoord, LabeledGraph, Result, SphereComplex};

/// Cubic partial cubes from simplicial line and pseudoline arrangements.
///
/// Arrangement inputs are text files with one `a b c` line per projective
/// line `ax + by + cz = 0`, wiring diagrams, or crossing-structure JSON as
/// written by `gen`. A missing path or `-` reads standard input.
#[derive(Parser)]
#[command(name = "pcube", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Refuse graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_LIMIT)]
    limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family member (near-pencil:n or R:m) as crossing-structure JSON.
    Gen { family: String },
    /// Emit the dual graph: C_A on the sphere, or G_A with --affine.
    Dual {
        input: Option<PathBuf>,
        /// Close the arrangement with the line at infinity first.
        #[arg(long)]
        add_infinity: bool,
        /// Dual of the affine arrangement (cells of the plane).
        #[arg(long, conflicts_with = "add_infinity")]
        affine: bool,
    },
    /// Report whether a graph is a partial cube, cubic and planar.
    Check { input: Option<PathBuf> },
    /// Vertex, edge, class and triangle counts of a graph.
    Stats { input: Option<PathBuf> },
    /// Zonotopal tiling of an affine arrangement.
    Draw {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
    /// Glue the tilings of two affine arrangements along their outlines.
    Glue {
        t1: PathBuf,
        t2: PathBuf,
        #[arg(long, default_value = "reflect")]
        transform: String,
    },
    /// Zonohedron skeleton of a line arrangement.
    Zono {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Off)]
        format: Format,
    },
    /// Run the acceptance table; exits with 1 when any criterion fails.
    Reproduce {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Off,
    Text,
}

#[derive(Serialize)]
struct CheckReport {
    vertices: usize,
    edges: usize,
    partial_cube: bool,
    classes: Option<usize>,
    cubic: bool,
    planar: bool,
}

#[derive(Serialize)]
struct Stats {
    vertices: usize,
    edges: usize,
    classes: Option<usize>,
    triangles: usize,
}

#[derive(Serialize)]
struct GlueReport {
    graph: GraphJson,
    overlay_zonotopal: bool,
    partial_cube: bool,
    cubic: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pcube: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        None => io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) if p.as_os_str() == "-" => io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
    }
    .map_err(|e| Error::Io(format!("{}: {e}", path.map_or("<stdin>".into(), |p| p.display().to_string()))))?;
    Ok(text)
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
}

enum Arrangement {
    Lines(Vec<HomCoord>),
    Combinatorial(CrossingStructure),
}

/// Crossing-structure JSON, a wiring diagram, or a line file, tried in
/// that order.
fn read_arrangement(path: Option<&Path>, add_inf: bool) -> Result<Arrangement> {
    let text = read_input(path)?;
    if text.trim_start().starts_with('{') {
        if add_inf {
            return Err(Error::BadParameter("--add-infinity needs a line or wiring input".into()));
        }
        return parse_json(&text).map(Arrangement::Combinatorial);
    }
    match parse_arrangement(&text) {
        Ok(mut lines) => {
            if add_inf {
                add_infinity(&mut lines);
            }
            Ok(Arrangement::Lines(lines))
        }
        Err(line_err) => match parse_wiring(&text) {
            Ok(w) => Ok(Arrangement::Combinatorial(w.to_crossing_structure(add_inf))),
            // a lone wire count on the first line marks a wiring diagram
            Err(wire_err) if looks_like_wiring(&text) => Err(wire_err),
            Err(_) => Err(line_err),
        },
    }
}

fn looks_like_wiring(text: &str) -> bool {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    first.is_some_and(|l| l.split('/').next().is_some_and(|t| t.trim().parse::<usize>().is_ok()))
}

fn read_lines(path: Option<&Path>) -> Result<Vec<HomCoord>> {
    parse_arrangement(&read_input(path)?)
}

fn complex_of(a: &Arrangement) -> Result<SphereComplex> {
    match a {
        Arrangement::Lines(lines) => build_from_lines(lines),
        Arrangement::Combinatorial(cs) => build_from_crossing_structure(cs),
    }
}

fn read_graph(path: Option<&Path>, limit: usize) -> Result<LabeledGraph> {
    let g = LabeledGraph::from_json(&parse_json::<GraphJson>(&read_input(path)?)?)?;
    if g.vertex_count() > limit {
        return Err(Error::SizeLimit(g.vertex_count(), limit));
    }
    Ok(g)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let s = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
    emit(&s)
}

fn emit(s: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{}", s.trim_end()) {
        // a closed downstream pipe is not an error of ours
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Error::Io(e.to_string())),
        _ => Ok(()),
    }
}

fn wrong_format(command: &str, allowed: &str) -> Error {
    Error::BadParameter(format!("{command} supports --format {allowed}"))
}

fn run(cli: Cli) -> Result<u8> {
    let limit = cli.limit;
    match cli.command {
        Command::Gen { family } => {
            let c = family.parse::<FamilySpec>()?.build()?;
            print_json(&CrossingStructure::from_complex(&c))?;
        }
        Command::Dual { input, add_infinity, affine } => {
            let g = if affine {
                affine_dual(&read_lines(input.as_deref())?)?
            } else {
                spherical_dual(&complex_of(&read_arrangement(input.as_deref(), add_infinity)?)?)
            };
            if g.vertex_count() > limit {
                return Err(Error::SizeLimit(g.vertex_count(), limit));
            }
            print_json(&g.to_json())?;
        }
        Command::Check { input } => {
            let g = read_graph(input.as_deref(), limit)?;
            let r = is_partial_cube(&g)?;
            print_json(&CheckReport {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                partial_cube: r.is_partial_cube(),
                classes: r.class_count(),
                cubic: is_cubic(&g),
                planar: is_planar(&g),
            })?;
        }
        Command::Stats { input } => {
            let g = read_graph(input.as_deref(), limit)?;
            // a degree-3 vertex of a sphere dual is a triangle; antipodes pair them
            let degree3 = (0..g.vertex_count()).filter(|&v| g.degree(v) == 3).count();
            print_json(&Stats {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                classes: is_partial_cube(&g)?.class_count(),
                triangles: degree3 / 2,
            })?;
        }
        Command::Draw { input, format } => {
            let t = ZonotopalTiling::from_affine_arrangement(&read_lines(input.as_deref())?)?;
            match format {
                Format::Svg => emit(&emit_svg(&t.subdivision))?,
                Format::Json => print_json(&t.to_json())?,
                _ => return Err(wrong_format("draw", "svg or json")),
            }
        }
        Command::Glue { t1, t2, transform } => {
            let transform: Transform = transform.parse()?;
            let a = ZonotopalTiling::from_affine_arrangement(&read_lines(Some(&t1))?)?;
            let b = ZonotopalTiling::from_affine_arrangement(&read_lines(Some(&t2))?)?;
            let r = glue(&a, &b, transform)?;
            print_json(&GlueReport {
                graph: r.graph.to_json(),
                overlay_zonotopal: r.overlay_zonotopal,
                partial_cube: is_partial_cube(&r.graph)?.is_partial_cube(),
                cubic: is_cubic(&r.graph),
            })?;
        }
        Command::Zono { input, format } => {
            let z = zonohedron_skeleton(&read_lines(input.as_deref())?)?;
            match format {
                Format::Off => emit(&emit_off(&z))?,
                Format::Json => print_json(&z.to_json())?,
                _ => return Err(wrong_format("zono", "off or json")),
            }
        }
        Command::Reproduce { seed, criterion, format } => {
            let results = match criterion {
                Some(id) => vec![run_criterion(id, seed)
                    .ok_or_else(|| Error::BadParameter(format!("no criterion {id}; expected 1..=11")))?],
                None => run_all(seed),
            };
            match format {
                Format::Text => {
                    for r in &results {
                        emit(&r.to_string())?;
                    }
                }
                Format::Json => print_json(&results)?,
                _ => return Err(wrong_format("reproduce", "text or json")),
            }
            if results.iter().any(|r| !r.passed) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
