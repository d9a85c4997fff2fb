//! Command-line front end: counting tables, enumeration dumps, slice
//! reports, lattice exports, and the theorem verification harness.
//!
//! Exit codes: 0 all good, 1 verification failure (report still emitted),
//! 2 usage or argument error.

use clap::{Parser, Subcommand, ValueEnum};
use rectlat::counts::closed_form_counts;
use rectlat::cube::{enumerate_all_faces, enumerate_chords, mask_text, parse_mask, CubeDim, Vertex};
use rectlat::geometry::{affine_frame, slice_polygon, touches_interior, PolygonKind};
use rectlat::rect::{enumerate_rectangles, rect_anatomy, Rect};
use rectlat::vcr::{build_cubical_lattice, build_vcr, quotient_and_iso};
use rectlat::verify::{check_theorem, Bounds, CheckStatus, Fault, VerifyOptions};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "rectlat",
    version,
    about = "Cubical rectangles of the n-cube, their incidence counts, exact slices, and the rectangular/cubical lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every closed-form count for one n (arbitrary precision)
    Count {
        /// Ambient dimension, 2..=200
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
    },
    /// Dump rectangles, chords, or faces in canonical order
    Enumerate {
        /// Ambient dimension, 2..=10 for object-level enumeration
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = What::Rects)]
        what: What,
        #[arg(long, value_enum, default_value_t = DumpFormat::Csv)]
        format: DumpFormat,
    },
    /// Exact rational slice aff(T) ∩ C^n for one rectangle or all of them
    Slice {
        /// Ambient dimension (2..=6 without --rect, 2..=62 with it)
        #[arg(long)]
        n: u32,
        /// One rectangle as BASE,MASKA,MASKB in the x1..xn string form,
        /// e.g. 000,100,011
        #[arg(long)]
        rect: Option<String>,
    },
    /// Build and export the rectangular, cubical, or quotient lattice
    Lattice {
        /// Ambient dimension (vcr/quotient 2..=5, cubical 2..=6)
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Export::Json)]
        export: Export,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the paper's theorems at dimension n with CI-friendly exit codes
    Verify {
        /// Ambient dimension, 2..=62 (per-theorem bounds may skip checks)
        #[arg(long)]
        n: u32,
        /// 1..=6 or "all"
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Raise the per-theorem exhaustiveness bounds to this n (never
        /// lowers them)
        #[arg(long)]
        max_effort: Option<u32>,
        /// Testing hook: inject a deliberate defect and expect exit code 1
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Rects,
    Chords,
    Faces,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Vcr,
    Cubical,
    Quotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    /// Drop one chord-rectangle cover before building R_n (theorem 4 fails)
    Cover,
    /// Skew the expected rectangle total by one (theorem 1 fails)
    Count,
}

struct UsageError(String);

/// Writes to stdout, ignoring broken pipes so `rectlat ... | head` stays
/// quiet.
fn emit(payload: &str) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = writeln!(out, "{payload}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Count { n, format } => run_count(n, format),
        Command::Enumerate { n, what, format } => run_enumerate(n, what, format),
        Command::Slice { n, rect } => run_slice(n, rect),
        Command::Lattice { n, which, export, out } => run_lattice(n, which, export, out),
        Command::Verify { n, theorem, max_effort, inject_fault } => {
            run_verify(n, &theorem, max_effort, inject_fault)
        }
    }
}

fn dim_for(n: u32, purpose: &str, max: u32) -> Result<CubeDim, UsageError> {
    if n > max {
        return Err(UsageError(format!("{purpose} supports n <= {max}, got {n}")));
    }
    CubeDim::new(n).map_err(|e| UsageError(e.to_string()))
}

fn run_count(n: u32, format: CountFormat) -> Result<ExitCode, UsageError> {
    if !(2..=200).contains(&n) {
        return Err(UsageError(format!("count supports 2 <= n <= 200, got {n}")));
    }
    let report = closed_form_counts(n);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        CountFormat::Json => {
            let value = serde_json::to_value(&report).expect("report serializes");
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("pretty json")).ok();
        }
        CountFormat::Csv => {
            writeln!(out, "field,i,value").ok();
            writeln!(out, "n,,{n}").ok();
            writeln!(out, "r_n,,{}", report.r_n).ok();
            writeln!(out, "r_n_vertex,,{}", report.r_n_vertex).ok();
            writeln!(out, "central_count,,{}", report.central_count).ok();
            writeln!(out, "vcr_poset_size,,{}", report.vcr_poset_size).ok();
            for (name, rows) in [
                ("per_type_raw", &report.per_type_raw),
                ("per_dim", &report.per_dim),
                ("chord_count", &report.chord_count),
                ("d_inclusion", &report.d_inclusion),
                ("s_inclusion", &report.s_inclusion),
            ] {
                for (i, value) in rows {
                    writeln!(out, "{name},{i},{value}").ok();
                }
            }
        }
        CountFormat::Text => {
            writeln!(out, "n = {n}").ok();
            writeln!(out, "cubical rectangles r_n         {}", report.r_n).ok();
            writeln!(out, "through a fixed vertex r_n(x)  {}", report.r_n_vertex).ok();
            writeln!(out, "central rectangles             {}", report.central_count).ok();
            writeln!(out, "VCR poset size                 {}", report.vcr_poset_size).ok();
            let row = |label: &str, rows: &Vec<(u32, num_bigint::BigUint)>| {
                let cells: Vec<String> = rows.iter().map(|(i, v)| format!("i={i}: {v}")).collect();
                format!("{label:<31}{}", cells.join("  "))
            };
            writeln!(out, "{}", row("type totals (double-counted)", &report.per_type_raw)).ok();
            writeln!(out, "{}", row("by diagonal dimension", &report.per_dim)).ok();
            writeln!(out, "{}", row("i-chords", &report.chord_count)).ok();
            writeln!(out, "{}", row("d-inclusions per i-chord", &report.d_inclusion)).ok();
            writeln!(out, "{}", row("s-inclusions per i-chord", &report.s_inclusion)).ok();
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn rect_json(dim: CubeDim, r: Rect) -> serde_json::Value {
    let a = rect_anatomy(dim, r);
    let [v0, v1, v2, v3] = r.vertices();
    serde_json::json!({
        "n": dim.n(),
        "base": r.base().text(dim),
        "mask_a": mask_text(dim, r.mask_a()),
        "mask_b": mask_text(dim, r.mask_b()),
        "vertices": [v0.text(dim), v1.text(dim), v2.text(dim), v3.text(dim)],
        "type": [a.type_pair.0, a.type_pair.1],
        "dimension": a.dimension,
        "central": a.central,
    })
}

fn run_enumerate(n: u32, what: What, format: DumpFormat) -> Result<ExitCode, UsageError> {
    let dim = dim_for(n, "enumerate (object-level)", 10)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match (what, format) {
        (What::Rects, DumpFormat::Csv) => {
            writeln!(out, "n,base,mask_a,mask_b,v_base,v_a,v_b,v_ab,type_a,type_b,dimension,central")
                .ok();
            for r in enumerate_rectangles(dim) {
                let a = rect_anatomy(dim, r);
                let [v0, v1, v2, v3] = r.vertices();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    n,
                    r.base().text(dim),
                    mask_text(dim, r.mask_a()),
                    mask_text(dim, r.mask_b()),
                    v0.text(dim),
                    v1.text(dim),
                    v2.text(dim),
                    v3.text(dim),
                    a.type_pair.0,
                    a.type_pair.1,
                    a.dimension,
                    a.central
                )
                .ok();
            }
        }
        (What::Rects, DumpFormat::Json) => {
            let rows: Vec<serde_json::Value> =
                enumerate_rectangles(dim).map(|r| rect_json(dim, r)).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json")).ok();
        }
        (What::Chords, DumpFormat::Csv) => {
            writeln!(out, "n,lo,hi,length").ok();
            for c in enumerate_chords(dim) {
                writeln!(out, "{},{},{},{}", n, c.lo().text(dim), c.hi().text(dim), c.length())
                    .ok();
            }
        }
        (What::Chords, DumpFormat::Json) => {
            let rows: Vec<serde_json::Value> = enumerate_chords(dim)
                .into_iter()
                .map(|c| {
                    serde_json::json!({
                        "n": n,
                        "lo": c.lo().text(dim),
                        "hi": c.hi().text(dim),
                        "length": c.length(),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json")).ok();
        }
        (What::Faces, DumpFormat::Csv) => {
            writeln!(out, "n,face,dim,anchor,free").ok();
            for f in enumerate_all_faces(dim) {
                let (anchor, free) = f.anchor_free().expect("proper face");
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    n,
                    f.text(dim),
                    f.dim().expect("proper face"),
                    anchor.text(dim),
                    mask_text(dim, free)
                )
                .ok();
            }
        }
        (What::Faces, DumpFormat::Json) => {
            let rows: Vec<serde_json::Value> = enumerate_all_faces(dim)
                .into_iter()
                .map(|f| {
                    let (anchor, free) = f.anchor_free().expect("proper face");
                    serde_json::json!({
                        "n": n,
                        "face": f.text(dim),
                        "dim": f.dim().expect("proper face"),
                        "anchor": anchor.text(dim),
                        "free": mask_text(dim, free),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json")).ok();
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_rect_arg(dim: CubeDim, arg: &str) -> Result<Rect, UsageError> {
    let parts: Vec<&str> = arg.split(',').collect();
    if parts.len() != 3 {
        return Err(UsageError(format!(
            "--rect wants BASE,MASKA,MASKB (three {}-character strings)",
            dim.n()
        )));
    }
    let base = Vertex::parse(dim, parts[0]).map_err(|e| UsageError(e.to_string()))?;
    let mask_a = parse_mask(dim, parts[1]).map_err(|e| UsageError(e.to_string()))?;
    let mask_b = parse_mask(dim, parts[2]).map_err(|e| UsageError(e.to_string()))?;
    Rect::from_corner(dim, base, mask_a, mask_b).map_err(|e| UsageError(e.to_string()))
}

fn run_slice(n: u32, rect: Option<String>) -> Result<ExitCode, UsageError> {
    let dim = if rect.is_some() {
        dim_for(n, "slice of one rectangle", rectlat::MAX_DIM)?
    } else {
        dim_for(n, "slice of every rectangle", 6)?
    };
    let rects: Vec<Rect> = match &rect {
        Some(arg) => vec![parse_rect_arg(dim, arg)?],
        None => enumerate_rectangles(dim).collect(),
    };
    let mut reports = Vec::with_capacity(rects.len());
    for r in rects {
        let poly = slice_polygon(&affine_frame(dim, r));
        let kind = match poly.kind() {
            PolygonKind::Empty => "empty",
            PolygonKind::Point => "point",
            PolygonKind::Segment => "segment",
            PolygonKind::Polygon => "polygon",
        };
        let mut ambient_sorted = poly.ambient_vertices.clone();
        ambient_sorted.sort();
        let mut rect_points: Vec<Vec<rectlat::geometry::Rational>> = r
            .vertices()
            .iter()
            .map(|v| {
                (0..dim.n())
                    .map(|j| {
                        rectlat::geometry::Rational::from_integer(
                            (((v.bits() >> j) & 1) as i64).into(),
                        )
                    })
                    .collect()
            })
            .collect();
        rect_points.sort();
        let vertex_match = ambient_sorted == rect_points;
        reports.push(serde_json::json!({
            "rect": rect_json(dim, r),
            "kind": kind,
            "touches_interior": touches_interior(dim, r),
            "vertex_match": vertex_match,
            "param_vertices": poly
                .param_vertices
                .iter()
                .map(|(s, t)| vec![s.to_string(), t.to_string()])
                .collect::<Vec<_>>(),
            "ambient_vertices": poly
                .ambient_vertices
                .iter()
                .map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }));
    }
    emit(&serde_json::to_string_pretty(&reports).expect("json"));
    Ok(ExitCode::SUCCESS)
}

fn run_lattice(
    n: u32,
    which: Which,
    export: Export,
    out: Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let payload = match which {
        Which::Vcr => {
            let dim = dim_for(n, "the rectangular lattice R_n", 5)?;
            let rn = build_vcr(dim).map_err(|e| UsageError(e.to_string()))?;
            match export {
                Export::Dot => rn.lattice.to_dot(),
                Export::Json => {
                    let mut value = rn.lattice.to_json();
                    let sets: Vec<serde_json::Value> = rn
                        .elements
                        .iter()
                        .map(|e| match e.small_vertex_list() {
                            Some(vs) => serde_json::json!(
                                vs.iter().map(|v| v.text(dim)).collect::<Vec<_>>()
                            ),
                            None => serde_json::json!("all"),
                        })
                        .collect();
                    let tags: Vec<&str> = rn
                        .elements
                        .iter()
                        .map(|e| match e {
                            rectlat::vcr::VcrElement::Bottom => "bottom",
                            rectlat::vcr::VcrElement::Vertex(_) => "vertex",
                            rectlat::vcr::VcrElement::Chord(_) => "chord",
                            rectlat::vcr::VcrElement::Rect(_) => "rectangle",
                            rectlat::vcr::VcrElement::Top => "top",
                        })
                        .collect();
                    value["vertex_sets"] = serde_json::json!(sets);
                    value["tags"] = serde_json::json!(tags);
                    serde_json::to_string_pretty(&value).expect("json")
                }
            }
        }
        Which::Cubical => {
            let dim = dim_for(n, "the cubical lattice C_n", 6)?;
            let cn = build_cubical_lattice(dim).map_err(|e| UsageError(e.to_string()))?;
            match export {
                Export::Dot => cn.lattice.to_dot(),
                Export::Json => serde_json::to_string_pretty(&cn.lattice.to_json()).expect("json"),
            }
        }
        Which::Quotient => {
            let dim = dim_for(n, "the quotient lattice R_n/~", 5)?;
            let rn = build_vcr(dim).map_err(|e| UsageError(e.to_string()))?;
            let cn = build_cubical_lattice(dim).map_err(|e| UsageError(e.to_string()))?;
            let q = quotient_and_iso(&rn, &cn).map_err(|e| UsageError(e.to_string()))?;
            match export {
                Export::Dot => q.lattice.to_dot(),
                Export::Json => {
                    let classes: Vec<serde_json::Value> = q
                        .classes
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "face": c.face.text(dim),
                                "member_count": c.members.len(),
                                "members": c
                                    .members
                                    .iter()
                                    .map(|&i| rn.elements[i].label(dim))
                                    .collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let value = serde_json::json!({
                        "lattice": q.lattice.to_json(),
                        "classes": classes,
                        "iso_verified": q.iso_verified,
                        "failures": q.failures,
                    });
                    serde_json::to_string_pretty(&value).expect("json")
                }
            }
        }
    };
    match out {
        Some(path) => std::fs::write(&path, payload + "\n")
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?,
        None => emit(&payload),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    n: u32,
    theorem: &str,
    max_effort: Option<u32>,
    inject_fault: Option<FaultArg>,
) -> Result<ExitCode, UsageError> {
    let dim = dim_for(n, "verify (object-level)", rectlat::MAX_DIM)?;
    let theorems: Vec<u8> = match theorem {
        "all" => (1..=6).collect(),
        t => match t.parse::<u8>() {
            Ok(k) if (1..=6).contains(&k) => vec![k],
            _ => return Err(UsageError(format!("--theorem wants 1..=6 or \"all\", got {t:?}"))),
        },
    };
    let bounds = match max_effort {
        Some(e) => Bounds::with_effort(e),
        None => Bounds::standard(),
    };
    let fault = inject_fault.map(|f| match f {
        FaultArg::Cover => Fault::CorruptCover,
        FaultArg::Count => Fault::SkewCount,
    });
    let opts = VerifyOptions { bounds, fault };

    let mut per_theorem = serde_json::Map::new();
    let mut overall_pass = true;
    for t in theorems {
        let start = Instant::now();
        let report = check_theorem(dim, t, &opts);
        let elapsed = start.elapsed().as_millis() as u64;
        if report.status == CheckStatus::Fail {
            overall_pass = false;
        }
        let status = match report.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        };
        per_theorem.insert(
            t.to_string(),
            serde_json::json!({
                "status": status,
                "details": report.details,
                "witness": report.witness,
                "elapsed_millis": elapsed,
            }),
        );
    }
    let report = serde_json::json!({
        "n": n,
        "per_theorem": serde_json::Value::Object(per_theorem),
        "overall": if overall_pass { "pass" } else { "fail" },
    });
    emit(&serde_json::to_string_pretty(&report).expect("json"));
    Ok(if overall_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
