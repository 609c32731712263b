//! volprod: polar bodies, volume products, Santalo points, and numerical
//! verification of the sharp planar stability estimates.

mod io;
mod par;
mod suites;
mod svg;
mod sweep;

use clap::{Parser, Subcommand, ValueEnum};
use io::{read_document, write_output, BodyDocument, CliError};
use std::path::PathBuf;
use std::process::ExitCode;
use volprod_core::polarity::{polar, CenteredBody};
use volprod_core::santalo::{centroid_of_polar_check, default_tolerance, santalo_point};
use volprod_core::stability::Suite;

#[derive(Parser)]
#[command(
    name = "volprod",
    about = "Planar convex bodies: polars, volume products, Santalo points, and stability suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    T1,
    T2,
    T3,
    T5,
    T6,
    L7,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::T1 => Suite::T1,
            SuiteArg::T2 => Suite::T2,
            SuiteArg::T3 => Suite::T3,
            SuiteArg::T5 => Suite::T5,
            SuiteArg::T6 => Suite::T6,
            SuiteArg::L7 => Suite::L7,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Polar polygon of a body about its centre.
    Polar {
        /// Body JSON (defaults to stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output path (defaults to stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Santalo point, minimal polar area, and optimality diagnostics.
    Santalo {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Gradient-norm tolerance (defaults to 1e-9 / diam^3).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run a verification suite over canonical, near-extremal, and seeded
    /// random bodies; exits 0 only if every row passes.
    Verify {
        #[arg(long, value_enum)]
        theorem: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of seeded random bodies on top of the fixed rows.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Bumped-n-gon grid against its closed form plus the centre-offset
    /// scan; optional SVG figures next to the report.
    Sweep {
        /// Restrict to one n (default: 3..=12, offset scan at n = 6).
        #[arg(long)]
        n: Option<u32>,
        /// Restrict to one bump eps (default grid: 1e-4..1e-1).
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// `svg` additionally writes the figures.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Export a body as an SVG figure or a CSV vertex dump.
    Export {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Overlay the polar body (needs a centre in the document).
        #[arg(long, default_value_t = false)]
        with_polar: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("volprod: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Polar { input, out } => cmd_polar(input.as_deref(), out.as_deref()),
        Cmd::Santalo { input, out, tol } => cmd_santalo(input.as_deref(), out.as_deref(), tol),
        Cmd::Verify {
            theorem,
            seed,
            count,
            out,
            format,
        } => cmd_verify(theorem.into(), seed, count, out.as_deref(), format),
        Cmd::Sweep { n, eps, out, format } => cmd_sweep(n, eps, out.as_deref(), format),
        Cmd::Export {
            input,
            out,
            format,
            with_polar,
        } => cmd_export(input.as_deref(), out.as_deref(), format, with_polar),
    }
}

fn cmd_polar(
    input: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let doc = read_document(input)?;
    let k = doc.polygon()?;
    let centre = doc
        .centre_point()
        .ok_or_else(|| CliError::usage("body document has no centre"))?;
    let body = CenteredBody::new(k, centre)?;
    let dual = polar(&body);
    let result = BodyDocument::from_polygon(
        &format!("{}_polar", doc.name),
        &dual,
        Some(volprod_core::geometry::Point2::ORIGIN),
    );
    let mut text = serde_json::to_string_pretty(&result)
        .map_err(|e| CliError::usage(format!("serialisation failed: {e}")))?;
    text.push('\n');
    write_output(out, &text)
}

fn cmd_santalo(
    input: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
    tol: Option<f64>,
) -> Result<(), CliError> {
    let doc = read_document(input)?;
    let k = doc.polygon()?;
    let tol = tol.unwrap_or_else(|| default_tolerance(&k));
    let s = santalo_point(&k, tol)?;
    let centroid_norm = centroid_of_polar_check(&k)?;
    let report = serde_json::json!({
        "name": doc.name,
        "point": [s.point.x, s.point.y],
        "polar_area": s.polar_area_at_min,
        "gradient_norm": s.gradient_norm,
        "iterations": s.iterations,
        "centroid_of_polar_norm": centroid_norm,
    });
    let mut text = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::usage(format!("serialisation failed: {e}")))?;
    text.push('\n');
    write_output(out, &text)
}

fn cmd_verify(
    suite: Suite,
    seed: u64,
    count: usize,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<(), CliError> {
    if format == Format::Svg {
        return Err(CliError::usage("verify reports are csv or json"));
    }
    let rows = suites::run_suite(suite, seed, count)?;
    let text = match format {
        Format::Csv => suites::rows_to_csv(suite, &rows),
        Format::Json => {
            let mut t = serde_json::to_string_pretty(&rows)
                .map_err(|e| CliError::usage(format!("serialisation failed: {e}")))?;
            t.push('\n');
            t
        }
        Format::Svg => unreachable!(),
    };
    write_output(out, &text)?;
    let failures = rows.iter().filter(|r| !r.pass).count();
    if failures > 0 {
        return Err(CliError::verdict(format!(
            "{failures} of {} rows failed suite {}",
            rows.len(),
            suite.as_str()
        )));
    }
    Ok(())
}

fn cmd_sweep(
    n: Option<u32>,
    eps: Option<f64>,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<(), CliError> {
    let outcome = sweep::run_sweep(n, eps, format == Format::Svg)?;
    write_output(out, &outcome.csv)?;
    for (suffix, contents) in &outcome.figures {
        let path = match out {
            Some(p) => {
                let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("sweep");
                p.with_file_name(format!("{stem}_{suffix}"))
            }
            None => PathBuf::from(format!("sweep_{suffix}")),
        };
        std::fs::write(&path, contents)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    eprintln!(
        "sweep: max closed-form deviation {:.3e}; slopes {:?}; offset exponent {:.4}",
        outcome.max_deviation,
        outcome
            .slopes
            .iter()
            .map(|(n, s)| format!("n={n}:{s:.4}"))
            .collect::<Vec<_>>(),
        outcome.exponent
    );
    if !outcome.ok {
        return Err(CliError::verdict("sweep checks failed"));
    }
    Ok(())
}

fn cmd_export(
    input: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
    format: Format,
    with_polar: bool,
) -> Result<(), CliError> {
    let doc = read_document(input)?;
    let k = doc.polygon()?;
    match format {
        Format::Svg => {
            let mut bodies: Vec<(&volprod_core::ConvexPolygon, &str)> = vec![(&k, "body")];
            let dual;
            if with_polar {
                let centre = doc
                    .centre_point()
                    .ok_or_else(|| CliError::usage("polar overlay needs a centre"))?;
                dual = polar(&CenteredBody::new(k.clone(), centre)?);
                bodies.push((&dual, "polar"));
            }
            let figure = svg::body_figure(&bodies, false, doc.centre_point());
            write_output(out, &figure)
        }
        Format::Csv => {
            let mut text = String::from("x,y\n");
            for v in k.vertices() {
                text.push_str(&format!("{},{}\n", io::fmt_f64(v.x), io::fmt_f64(v.y)));
            }
            write_output(out, &text)
        }
        Format::Json => {
            let result = BodyDocument::from_polygon(&doc.name, &k, doc.centre_point());
            let mut text = serde_json::to_string_pretty(&result)
                .map_err(|e| CliError::usage(format!("serialisation failed: {e}")))?;
            text.push('\n');
            write_output(out, &text)
        }
    }
}
