use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use signed_corona::balance::{edge_class_counts, edge_stats, triad_census};
use signed_corona::verify::{run_all, VerifyConfig};
use signed_corona::{coronal, corona_poly, cospectral, Balance, CoronaSpec, CoronalKind, SignedGraph};
use signed_corona_cli::format::{parse_graph, write_graph};
use signed_corona_cli::report;

#[derive(Parser)]
#[command(
    name = "signed-corona",
    version,
    about = "Signed-graph corona products: balance statistics and exact spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    /// Adjacency matrix
    Adj,
    /// Laplacian matrix D - A
    Lap,
    /// Signless Laplacian matrix D + A
    Qlap,
}

impl MatrixKind {
    fn kind(self) -> CoronalKind {
        match self {
            MatrixKind::Adj => CoronalKind::Adjacency,
            MatrixKind::Lap => CoronalKind::Laplacian,
            MatrixKind::Qlap => CoronalKind::SignlessLaplacian,
        }
    }

    fn label(self) -> &'static str {
        match self {
            MatrixKind::Adj => "adj",
            MatrixKind::Lap => "lap",
            MatrixKind::Qlap => "qlap",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Factored,
}

#[derive(Subcommand)]
enum Command {
    /// Edge statistics, marking, triad census, and balance verdict
    Stats {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a generalized corona product and write it to a file
    Corona {
        base: PathBuf,
        /// One satellite file per base vertex (or a single file with --uniform)
        satellites: Vec<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
        /// Reuse one satellite file for every base vertex
        #[arg(long)]
        uniform: bool,
        #[arg(long)]
        json: bool,
    },
    /// Characteristic, Laplacian, or signless-Laplacian polynomial
    Poly {
        /// A flat graph file (for --method direct)
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MatrixKind::Adj)]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Corona spec: base graph file
        #[arg(long)]
        base: Option<PathBuf>,
        /// Corona spec: one satellite file per base vertex
        #[arg(long, num_args = 1..)]
        satellites: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Coronal of a signed graph as a rational function
    Coronal {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixKind::Adj)]
        kind: MatrixKind,
        #[arg(long)]
        json: bool,
    },
    /// Exact cospectrality verdict for two graphs (exit 1 when different)
    Cospectral {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixKind::Adj)]
        matrix: MatrixKind,
        #[arg(long)]
        json: bool,
    },
    /// Run the randomized theorem-verification suites (exit 1 on failure)
    Verify {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_base: usize,
        #[arg(long, default_value_t = 4)]
        max_sat: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_spec(base: &Path, satellites: &[PathBuf], uniform: bool) -> Result<CoronaSpec, String> {
    let base_graph = load_graph(base)?;
    let sats = if uniform {
        if satellites.len() != 1 {
            return Err("--uniform takes exactly one satellite file".to_owned());
        }
        vec![load_graph(&satellites[0])?; base_graph.order()]
    } else {
        if satellites.len() != base_graph.order() {
            return Err(format!(
                "base has {} vertices but {} satellite files were given",
                base_graph.order(),
                satellites.len()
            ));
        }
        satellites
            .iter()
            .map(|p| load_graph(p))
            .collect::<Result<Vec<_>, _>>()?
    };
    CoronaSpec::new(base_graph, sats).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Stats { file, json } => cmd_stats(&file, json),
        Command::Corona {
            base,
            satellites,
            out,
            uniform,
            json,
        } => cmd_corona(&base, &satellites, &out, uniform, json),
        Command::Poly {
            file,
            matrix,
            method,
            base,
            satellites,
            json,
        } => cmd_poly(file.as_deref(), matrix, method, base.as_deref(), &satellites, json),
        Command::Coronal { file, kind, json } => cmd_coronal(&file, kind, json),
        Command::Cospectral {
            file1,
            file2,
            matrix,
            json,
        } => cmd_cospectral(&file1, &file2, matrix, json),
        Command::Verify {
            seed,
            trials,
            max_base,
            max_sat,
            json,
        } => cmd_verify(seed, trials, max_base, max_sat, json),
    }
}

fn cmd_stats(file: &Path, json: bool) -> Result<u8, String> {
    let g = load_graph(file)?;
    let stats = edge_stats(&g);
    let classes = edge_class_counts(&g);
    let census = triad_census(&g);
    let marking = g.marking();
    let balance = g.balance();

    if json {
        let witness = match &balance {
            Balance::Balanced { parts } => json!({ "parts": [parts.0, parts.1] }),
            Balance::Unbalanced { cycle } => json!({ "cycle": cycle }),
        };
        let payload = report::envelope(
            "stats",
            json!({ "file": file.display().to_string() }),
            json!({
                "vertices": g.order(),
                "edges": { "total": stats.total, "positive": stats.positive, "negative": stats.negative },
                "marking": marking.signs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "edge_classes": report::edge_classes_json(&classes),
                "triads": report::triads_json(&census),
                "balanced": balance.is_balanced(),
                "witness": witness,
            }),
        );
        println!("{payload}");
        return Ok(0);
    }

    println!("vertices: {}", g.order());
    println!(
        "edges: {} ({} positive, {} negative)",
        stats.total, stats.positive, stats.negative
    );
    let marks: Vec<String> = marking.signs().iter().map(ToString::to_string).collect();
    println!("marking: {}", marks.join(" "));
    println!(
        "edge classes: +({},{},{}) -({},{},{})  [by endpoint marks ++, +-, --]",
        classes.positive.both_plus,
        classes.positive.mixed,
        classes.positive.both_minus,
        classes.negative.both_plus,
        classes.negative.mixed,
        classes.negative.both_minus
    );
    println!(
        "triads: T0={} T1={} T2={} T3={} (total {})",
        census.t0,
        census.t1,
        census.t2,
        census.t3,
        census.total()
    );
    match balance {
        Balance::Balanced { parts } => {
            println!("balance: BALANCED (parts {:?} / {:?})", parts.0, parts.1);
        }
        Balance::Unbalanced { cycle } => {
            println!("balance: UNBALANCED (odd cycle {cycle:?})");
        }
    }
    Ok(0)
}

fn cmd_corona(
    base: &Path,
    satellites: &[PathBuf],
    out: &Path,
    uniform: bool,
    json: bool,
) -> Result<u8, String> {
    let spec = load_spec(base, satellites, uniform)?;
    let (product, layout) = spec.product();
    std::fs::write(out, write_graph(&product))
        .map_err(|e| format!("{}: {e}", out.display()))?;
    let stats = edge_stats(&product);

    if json {
        let payload = report::envelope(
            "corona",
            json!({
                "base": base.display().to_string(),
                "satellites": satellites.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
                "uniform": uniform,
                "out": out.display().to_string(),
            }),
            json!({
                "vertices": product.order(),
                "edges": { "total": stats.total, "positive": stats.positive, "negative": stats.negative },
                "layout": {
                    "base": [layout.base.start, layout.base.end],
                    "satellites": layout.satellites.iter().map(|r| [r.start, r.end]).collect::<Vec<_>>(),
                },
            }),
        );
        println!("{payload}");
        return Ok(0);
    }

    println!("base: {}..{}", layout.base.start, layout.base.end);
    for (l, range) in layout.satellites.iter().enumerate() {
        println!("satellite {}: {}..{}", l + 1, range.start, range.end);
    }
    println!(
        "wrote product with {} vertices and {} edges ({} positive, {} negative) to {}",
        product.order(),
        stats.total,
        stats.positive,
        stats.negative,
        out.display()
    );
    Ok(0)
}

fn poly_inputs(
    matrix: MatrixKind,
    method: &str,
    file: Option<&Path>,
    base: Option<&Path>,
    satellites: &[PathBuf],
) -> serde_json::Value {
    json!({
        "matrix": matrix.label(),
        "method": method,
        "file": file.map(|p| p.display().to_string()),
        "base": base.map(|p| p.display().to_string()),
        "satellites": satellites.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    })
}

fn cmd_poly(
    file: Option<&Path>,
    matrix: MatrixKind,
    method: Method,
    base: Option<&Path>,
    satellites: &[PathBuf],
    json: bool,
) -> Result<u8, String> {
    let kind = matrix.kind();
    let spec = match (base, satellites.is_empty()) {
        (Some(base), false) => Some(load_spec(base, satellites, false)?),
        (Some(_), true) => return Err("--base requires --satellites".to_owned()),
        (None, false) => return Err("--satellites requires --base".to_owned()),
        (None, true) => None,
    };

    match method {
        Method::Direct => {
            let graph = match (&spec, file) {
                (Some(spec), None) => spec.product().0,
                (None, Some(file)) => load_graph(file)?,
                _ => return Err("give either a graph file or a corona spec".to_owned()),
            };
            let poly = kind.char_poly_of(&graph);
            if json {
                let payload = report::envelope(
                    "poly",
                    poly_inputs(matrix, "direct", file, base, satellites),
                    report::poly_json(&poly),
                );
                println!("{payload}");
            } else {
                println!("{poly}");
                println!("coefficients (ascending): {:?}", poly.coeff_strings());
            }
            Ok(0)
        }
        Method::Factored => {
            let Some(spec) = spec else {
                return Err("--method factored needs a corona spec (--base, --satellites)".to_owned());
            };
            if file.is_some() {
                return Err("--method factored takes a corona spec, not a flat file".to_owned());
            }
            let fp = corona_poly(&spec, kind).map_err(|e| e.to_string())?;
            let direct = kind.char_poly_of(&spec.product().0);
            let agree = fp.expanded == direct;
            if json {
                let payload = report::envelope(
                    "poly",
                    poly_inputs(matrix, "factored", file, base, satellites),
                    json!({
                        "factored": report::factored_json(&fp),
                        "agrees_with_direct": agree,
                    }),
                );
                println!("{payload}");
            } else {
                println!("factors: {}", report::factors_pretty(&fp));
                println!("expanded: {}", fp.expanded);
                println!(
                    "direct check: {}",
                    if agree { "agrees" } else { "MISMATCH" }
                );
            }
            Ok(if agree { 0 } else { 1 })
        }
    }
}

fn cmd_coronal(file: &Path, kind: MatrixKind, json: bool) -> Result<u8, String> {
    let g = load_graph(file)?;
    let chi = coronal(&g, kind.kind());
    if json {
        let payload = report::envelope(
            "coronal",
            json!({ "file": file.display().to_string(), "kind": kind.label() }),
            report::ratfun_json(&chi),
        );
        println!("{payload}");
    } else {
        println!("{chi}");
    }
    Ok(0)
}

fn cmd_cospectral(file1: &Path, file2: &Path, matrix: MatrixKind, json: bool) -> Result<u8, String> {
    let g1 = load_graph(file1)?;
    let g2 = load_graph(file2)?;
    let kind = matrix.kind();
    let verdict = cospectral(&g1, &g2, kind);
    if json {
        let payload = report::envelope(
            "cospectral",
            json!({
                "file1": file1.display().to_string(),
                "file2": file2.display().to_string(),
                "matrix": matrix.label(),
            }),
            json!({
                "cospectral": verdict,
                "poly1": report::poly_json(&kind.char_poly_of(&g1)),
                "poly2": report::poly_json(&kind.char_poly_of(&g2)),
            }),
        );
        println!("{payload}");
    } else if verdict {
        println!("COSPECTRAL");
    } else {
        println!("NOT COSPECTRAL");
    }
    Ok(if verdict { 0 } else { 1 })
}

fn cmd_verify(
    seed: u64,
    trials: usize,
    max_base: usize,
    max_sat: usize,
    json: bool,
) -> Result<u8, String> {
    let cfg = VerifyConfig {
        seed,
        trials,
        max_base: max_base.max(1),
        max_sat,
    };
    let reports = run_all(&cfg);
    let all_passed = reports.iter().all(|r| r.passed());
    if json {
        let payload = report::envelope(
            "verify",
            json!({
                "seed": seed, "trials": trials,
                "max_base": cfg.max_base, "max_sat": cfg.max_sat,
            }),
            json!({
                "passed": all_passed,
                "suites": reports.iter().map(|r| json!({
                    "name": r.name,
                    "checks": r.checks,
                    "passed": r.passed(),
                    "failure": r.failure,
                })).collect::<Vec<_>>(),
            }),
        );
        println!("{payload}");
    } else {
        for r in &reports {
            match &r.failure {
                None => println!("PASS {} ({} checks)", r.name, r.checks),
                Some(repro) => println!("FAIL {} after {} checks: {}", r.name, r.checks, repro),
            }
        }
        println!(
            "verify: {}",
            if all_passed { "all suites passed" } else { "FAILED" }
        );
    }
    Ok(if all_passed { 0 } else { 1 })
}
