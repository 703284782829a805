use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sefe_core::cycle_breaker::Color;
use sefe_core::plane_graph::triangulate;
use sefe_core::verification::{
    brute_force_max, check_lemma1, gen_nested_cycles, gen_random_maximal, gen_random_planar,
    independent_set_baseline, is_outerplane, is_strongly_outerplane, OracleMode,
    DEFAULT_ORACLE_CAP,
};
use sefe_core::{
    build_sefe, embed_on_points, extract_outerplane_set, peel, render_drawing_svg, render_svg,
    verify_certificate, PlaneGraph, PointSet, StraightLineDrawing,
};

#[derive(Parser)]
#[command(name = "sefe", version, about = "Strongly outerplane extraction and SEFE construction for plane graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Peel a plane graph into outerplane levels (triangulating it first if needed).
    Peel {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-color a plane graph; the white vertices induce a strongly outerplane graph.
    Color {
        graph: PathBuf,
        /// Report only what refers to the input graph: drop added edges and use labels.
        #[arg(long)]
        strip_augmentation: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring (`{"white": [...]}`) against a graph. Exit code 2 unless the white
    /// vertices induce a strongly outerplane graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Exact maximum (strongly) outerplane induced subgraph by exhaustive search.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Strong)]
        mode: Mode,
    },
    /// Generate a plane graph.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 3)]
        shells: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fraction of edges kept for `random-planar`.
        #[arg(long, default_value_t = 0.7)]
        keep: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an outerplane graph on a point set (`{"points": [[x, y], ...]}`).
    Embed {
        graph: PathBuf,
        points: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify a SEFE certificate. Exit code 0 only if it verifies.
    Sefe {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strong,
    Outerplane,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Nested3,
    Nested4,
    Random,
    RandomPlanar,
}

#[derive(Deserialize)]
struct ColoringFile {
    white: Vec<usize>,
}

#[derive(Serialize)]
struct PlacementFile {
    placement: Vec<sefe_core::Point>,
}

fn read_graph(path: &Path) -> Result<PlaneGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    PlaneGraph::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        },
    }
}

fn pretty(v: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

/// Labels of the input graph when present, otherwise plain ids.
fn labeled(g: &PlaneGraph, vs: &[usize]) -> Value {
    match g.labels() {
        Some(l) => json!(vs.iter().map(|&v| l[v].clone()).collect::<Vec<_>>()),
        None => json!(vs),
    }
}

fn color(g: &PlaneGraph, strip: bool) -> Result<Value> {
    let ex = extract_outerplane_set(g)?;
    let black: Vec<usize> = (0..g.vertex_count()).filter(|v| ex.v_prime.binary_search(v).is_err()).collect();
    let mut per_face_black = BTreeMap::new();
    let mut conditions = BTreeMap::new();
    if let Some(c) = &ex.coloring {
        for f in &c.faces {
            per_face_black.insert(format!("{}->{}", f.face.0, f.face.1), labeled(g, &f.black));
        }
        for b in &c.nodes {
            conditions.insert(
                format!("{}.{}.{}", b.level, b.component, b.node),
                json!({ "condition": b.condition, "surplus": b.surplus, "vertices": labeled(g, &b.vertices) }),
            );
        }
    }
    let mut v = json!({
        "white": labeled(g, &ex.v_prime),
        "black": labeled(g, &black),
        "per_face_black": per_face_black,
        "conditions": conditions,
    });
    if !strip {
        let added = ex.augmentation.map(|a| a.added_edges).unwrap_or_default();
        v["added_edges"] = json!(added);
    }
    Ok(v)
}

fn verify(g: &PlaneGraph, white: &[usize]) -> Result<(bool, Value)> {
    let n = g.vertex_count();
    if let Some(&v) = white.iter().find(|&&v| v >= n) {
        bail!("vertex {v} out of range");
    }
    let mut colors = vec![Color::Black; n];
    for &v in white {
        colors[v] = Color::White;
    }
    let outer = is_outerplane(g, white)?;
    let strong = is_strongly_outerplane(g, &colors)?;
    let lemma = if n >= 3 {
        let (t, _) = triangulate(g)?;
        let d = peel(&t)?;
        Some(check_lemma1(&t, &d, &colors)?)
    } else {
        None
    };
    let half = 2 * white.len() >= n;
    // The counting conditions are reported but only hold for colorings built level by level.
    let ok = outer && strong;
    Ok((
        ok,
        json!({
            "size": white.len(),
            "n": n,
            "at_least_half": half,
            "outerplane": outer,
            "strongly_outerplane": strong,
            "conditions": lemma,
        }),
    ))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Peel { graph, out } => {
            let g = read_graph(&graph)?;
            let maximal = g.is_maximal();
            let t = if maximal { g } else { triangulate(&g)?.0 };
            let d = peel(&t)?;
            emit(&pretty(&json!({ "triangulated": !maximal, "decomposition": d }))?, out.as_deref())?;
        }
        Cmd::Color { graph, strip_augmentation, out } => {
            let g = read_graph(&graph)?;
            emit(&pretty(&color(&g, strip_augmentation)?)?, out.as_deref())?;
        }
        Cmd::Verify { graph, coloring } => {
            let g = read_graph(&graph)?;
            let c: ColoringFile = serde_json::from_str(&fs::read_to_string(&coloring)?)
                .with_context(|| format!("parsing {}", coloring.display()))?;
            let (ok, report) = verify(&g, &c.white)?;
            emit(&pretty(&report)?, None)?;
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) });
        }
        Cmd::Oracle { graph, max_n, mode } => {
            let g = read_graph(&graph)?;
            let mode = match mode {
                Mode::Strong => OracleMode::StronglyOuterplane,
                Mode::Outerplane => OracleMode::Outerplane,
            };
            let r = brute_force_max(&g, mode, max_n)?;
            let mis = independent_set_baseline(&g, max_n);
            emit(&pretty(&json!({ "oracle": r, "independent_set": mis.len() }))?, None)?;
        }
        Cmd::Gen { kind, shells, n, seed, keep, out } => {
            let g = match kind {
                Kind::Nested3 => gen_nested_cycles(shells, 3)?,
                Kind::Nested4 => gen_nested_cycles(shells, 4)?,
                Kind::Random => gen_random_maximal(n, seed)?,
                Kind::RandomPlanar => gen_random_planar(n, keep, seed)?,
            };
            emit(&g.to_json_string(), out.as_deref())?;
        }
        Cmd::Embed { graph, points, svg, out } => {
            let g = read_graph(&graph)?;
            let p: PointSet = serde_json::from_str(&fs::read_to_string(&points)?)
                .with_context(|| format!("parsing {}", points.display()))?;
            let d: StraightLineDrawing = embed_on_points(&g, &p)?;
            if let Some(path) = svg {
                fs::write(&path, render_drawing_svg(&d)).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&pretty(&PlacementFile { placement: d.placement })?, out.as_deref())?;
        }
        Cmd::Sefe { g1, g2, out, svg } => {
            let (a, b) = (read_graph(&g1)?, read_graph(&g2)?);
            let cert = build_sefe(&a, &b)?;
            let report = verify_certificate(&cert);
            fs::write(&out, cert.to_json_string()).with_context(|| format!("writing {}", out.display()))?;
            if let Some(path) = svg {
                fs::write(&path, render_svg(&cert)).with_context(|| format!("writing {}", path.display()))?;
            }
            for (name, ok) in &report.checks {
                eprintln!("{} {name}", if *ok { "ok  " } else { "FAIL" });
            }
            if !report.is_valid() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
