//! `plumbtop`: plumbing graphs and first homology for boundaries of Milnor
//! fibers of `z^m - g(x, y)`.

mod repro;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use plumbtop::assembly::{boundary_graph_example_family, glue_with_bamboo, lens_family_graph, BoundedPiece, GluingData, Section};
use plumbtop::germ::{is_lens_boundary, singular_branches, vanishing_zone, GermData, VanishingZoneData};
use plumbtop::homology::h1_of_plumbed;
use plumbtop::PlumbingGraph;

#[derive(Parser)]
#[command(name = "plumbtop", version, about = "Plumbing graphs and H1 for boundaries of Milnor fibers of z^m - g(x,y)")]
struct Cli {
    /// Output format. Each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// z^2 - (x^2 - y^3) y^l
    Example,
    /// z^2 - x y^l
    Lens,
}

#[derive(Subcommand)]
enum Command {
    /// Plumbing graph of a built-in family.
    Graph {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        l: i64,
    },
    /// Glue two bounded graphs along one leg each.
    Glue {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        #[arg(long, default_value_t = 0)]
        leg_a: usize,
        #[arg(long, default_value_t = 0)]
        leg_b: usize,
    },
    /// Vanishing zones and lens verdict of a germ file (JSON or TOML).
    Germ { file: PathBuf },
    /// First homology of a closed graph file.
    H1 { file: PathBuf },
    /// Generalized lens space recognition for a closed graph file.
    Recognize { file: PathBuf },
    /// Recompute the reference claims; exit code 1 if any fails.
    Repro,
}

enum Failure {
    Input(String),
    Claims,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<PlumbingGraph, Failure> {
    PlumbingGraph::from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn graph_text(g: &PlumbingGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let legs = g.legs_at(v.id);
        let nbrs: Vec<String> = g.neighbors(v.id).iter().map(|n| n.to_string()).collect();
        out.push_str(&format!("v{}: g={} e={} -> [{}]", v.id, v.genus, v.euler_weight, nbrs.join(", ")));
        if legs > 0 {
            out.push_str(&format!(" legs={legs}"));
        }
        out.push('\n');
    }
    if g.is_closed() {
        if let Ok(h) = h1_of_plumbed(g) {
            out.push_str(&format!("H1 = {h}\n"));
        }
    }
    out
}

fn render_graph(g: &PlumbingGraph, format: Format) -> String {
    match format {
        Format::Json => g.to_json() + "\n",
        Format::Dot => g.to_dot(),
        Format::Text => graph_text(g),
    }
}

fn cmd_graph(family: Family, l: i64, format: Format) -> Outcome {
    let g = match family {
        Family::Example => boundary_graph_example_family(l)?,
        Family::Lens => lens_family_graph(l)?,
    };
    Ok(render_graph(&g, format))
}

fn cmd_glue(a: &Path, b: &Path, leg_a: usize, leg_b: usize, gluing: GluingData, format: Format) -> Outcome {
    let piece = |path: &Path| -> Result<BoundedPiece, Failure> {
        let g = read_graph(path)?;
        let sections = vec![Section::Product; g.legs().len()];
        Ok(BoundedPiece::new(g, sections)?)
    };
    let glued = glue_with_bamboo(&piece(a)?, leg_a, &piece(b)?, leg_b, gluing)?;
    Ok(render_graph(&glued.graph, format))
}

#[derive(Serialize)]
struct GermReport {
    zones: Vec<VanishingZoneData>,
    lens: bool,
    lens_space: Option<String>,
    obstruction: Option<String>,
    unverified_boundary_orbits: Vec<usize>,
}

fn parse_germ(path: &Path) -> Result<GermData, Failure> {
    let text = read(path)?;
    let parsed = if path.extension().is_some_and(|e| e == "toml") {
        toml::from_str::<GermData>(&text).map_err(|e| e.to_string())
    } else {
        serde_json::from_str::<GermData>(&text).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_germ(path: &Path, format: Format) -> Outcome {
    let germ = parse_germ(path)?;
    let zones = singular_branches(&germ).into_iter().map(|i| vanishing_zone(&germ, i)).collect::<Result<Vec<_>, _>>()?;
    let verdict = is_lens_boundary(&germ);
    let report = GermReport {
        unverified_boundary_orbits: zones.iter().filter(|z| !z.boundary_orbits_verified).map(|z| z.branch_index).collect(),
        lens: verdict.is_ok(),
        lens_space: verdict.ok().map(|l| format!("L({}, 1)", 2 * l)),
        obstruction: verdict.err().map(|o| o.to_string()),
        zones,
    };
    if format == Format::Json {
        return Ok(json(&report) + "\n");
    }
    let mut out = String::new();
    for z in &report.zones {
        let h = &z.monodromy;
        out.push_str(&format!("branch {}: k = {}, d = {}\n", z.branch_index, z.k, z.d));
        out.push_str(&format!(
            "  fiber: chi = {}, genus = {}, boundary circles = {}\n",
            z.fiber.euler_char, z.fiber.genus, z.fiber.boundary
        ));
        out.push_str(&format!("  monodromy order {}\n", h.order));
        if h.order > 1 {
            let c = h.fixed_points[0];
            let angle = if c > h.order / 2 { c - h.order } else { c };
            out.push_str(&format!("  {} fixed points, rotation {}/{} turn\n", h.fixed_points.len(), angle, h.order));
        }
        let orbits: Vec<String> = h.boundary_orbits.iter().map(|o| o.size.to_string()).collect();
        out.push_str(&format!("  boundary orbits of sizes [{}]", orbits.join(", ")));
        out.push_str(if z.boundary_orbits_verified { "\n" } else { " (derived, unverified)\n" });
        out.push_str(&format!("  Seifert invariants: {}\n", serde_json::to_string(&z.seifert).expect("serializable")));
    }
    match (&report.lens_space, &report.obstruction) {
        (Some(l), _) => out.push_str(&format!("lens space: {l}\n")),
        (_, Some(o)) => out.push_str(&format!("not a lens space: {o}\n")),
        _ => {}
    }
    Ok(out)
}

fn cmd_h1(path: &Path, format: Format) -> Outcome {
    let h = h1_of_plumbed(&read_graph(path)?)?;
    Ok(match format {
        Format::Json => json(&h) + "\n",
        _ => format!("{h}\n"),
    })
}

fn cmd_recognize(path: &Path, format: Format) -> Outcome {
    let lens = read_graph(path)?.recognize_generalized_lens()?;
    Ok(match (format, lens) {
        (Format::Json, lens) => json(&lens) + "\n",
        (_, Some(l)) => format!("{l}\n"),
        (_, None) => "not a generalized lens space\n".into(),
    })
}

fn cmd_repro(format: Format) -> Outcome {
    let report = repro::run();
    let out = if format == Format::Json {
        json(&report) + "\n"
    } else {
        report
            .claims
            .iter()
            .map(|c| {
                let status = if c.pass { "PASS" } else { "FAIL" };
                format!("{status} {}\n  expected: {}\n  computed: {}\n", c.claim, c.expected, c.computed)
            })
            .collect()
    };
    print!("{out}");
    if report.all_pass() {
        Ok(String::new())
    } else {
        Err(Failure::Claims)
    }
}

fn run(cli: Cli) -> Outcome {
    let fmt = |default| cli.format.unwrap_or(default);
    match cli.command {
        Command::Graph { family, l } => cmd_graph(family, l, fmt(Format::Json)),
        Command::Glue { ref a, ref b, alpha, beta, leg_a, leg_b } => {
            cmd_glue(a, b, leg_a, leg_b, GluingData::new(alpha, beta)?, fmt(Format::Json))
        }
        Command::Germ { ref file } => cmd_germ(file, fmt(Format::Text)),
        Command::H1 { ref file } => cmd_h1(file, fmt(Format::Text)),
        Command::Recognize { ref file } => cmd_recognize(file, fmt(Format::Text)),
        Command::Repro => cmd_repro(fmt(Format::Text)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Claims) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
