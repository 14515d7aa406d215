//! `orbit-h2`: nilpotent-orbit catalog queries, H^2 computations, oracle
//! verification sweeps, and Kostant-Kirillov exactness verdicts.
//!
//! Exit codes: 0 success; 1 verification mismatch; 2 unknown algebra tag or
//! orbit label; 3 malformed input (labels, partitions, matrix files);
//! 4 matrix not in the requested algebra.

mod matrix_file;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde_json::json;

use orbit_core::catalog::{
    classical_orbits, exceptional_orbits, springer_steinberg, AlgebraType, ClassicalFamily,
    LabelParseError, OrbitKey, OrbitLabel,
};
use orbit_core::cohomology::h2;
use orbit_core::jordan::complete_decomposition;
use orbit_core::lie::LieAlgebraSpec;
use orbit_core::oracle::VerifyReport;

const EXIT_MISMATCH: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_NOT_IN_ALGEBRA: u8 = 4;

#[derive(Parser)]
#[command(
    name = "orbit-h2",
    version,
    about = "Second cohomology of nilpotent adjoint orbits, with exact verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all nilpotent orbits of an algebra with centralizer and H^2.
    Orbits {
        /// Algebra tag: A4, B3, C2, D5, G2, F4, E6, E7, E8.
        algebra: String,
        /// Aligned table instead of JSON lines.
        #[arg(long)]
        pretty: bool,
    },
    /// H^2 of a single orbit label, as JSON.
    H2 {
        /// Orbit label such as "A4:[1,2,2]" or "E6:r07".
        label: String,
    },
    /// Verify the centralizer-center and H^2 formulas against the exact
    /// linear-algebra oracle over a whole classical family.
    Verify {
        /// Classical family letter: A, B, C or D.
        family: String,
        /// Highest rank to sweep (defaults to the acceptance cutoffs).
        #[arg(long)]
        max_rank: Option<usize>,
        /// Soft time budget; the sweep stops cleanly once exceeded.
        #[arg(long)]
        max_seconds: Option<u64>,
        /// Aligned table instead of JSON lines.
        #[arg(long)]
        pretty: bool,
    },
    /// Exactness verdict for the Kostant-Kirillov form on the orbit of a
    /// matrix read from a JSON file.
    Kk {
        /// Path to a matrix file: {"rows": n, "cols": n, "entries": [[..]]}.
        file: PathBuf,
        /// Classical algebra tag the matrix lives in (e.g. "A1" for sl_2).
        #[arg(long)]
        algebra: String,
    },
    /// Catalog dump as JSON lines: algebra, key, centralizer, component
    /// group, h2.
    Dump {
        /// Algebra tag.
        algebra: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Orbits { algebra, pretty } => cmd_orbits(&algebra, pretty),
        Command::H2 { label } => cmd_h2(&label),
        Command::Verify {
            family,
            max_rank,
            max_seconds,
            pretty,
        } => cmd_verify(&family, max_rank, max_seconds, pretty),
        Command::Kk { file, algebra } => cmd_kk(&file, &algebra),
        Command::Dump { algebra } => cmd_dump(&algebra),
    }
}

fn parse_algebra(tag: &str) -> Result<AlgebraType, ExitCode> {
    tag.parse::<AlgebraType>().map_err(|e| {
        eprintln!("{e}");
        ExitCode::from(EXIT_UNKNOWN)
    })
}

/// Rows shared by `orbits` and `dump`.
struct CatalogRow {
    label: OrbitLabel,
    centralizer: String,
    component_group: String,
    h2: usize,
}

fn catalog_rows(algebra: AlgebraType) -> Vec<CatalogRow> {
    match algebra {
        AlgebraType::Classical(..) => {
            let labels = classical_orbits(algebra).expect("classical");
            let mut rows = Vec::with_capacity(labels.len());
            for label in labels {
                let result = h2(&label).expect("catalog labels are valid");
                let OrbitKey::Partition(d) = &label.key else { unreachable!() };
                let group = springer_steinberg(algebra, d)
                    .expect("valid")
                    .component_group();
                rows.push(CatalogRow {
                    centralizer: result.centralizer.to_string(),
                    component_group: group.description.to_string(),
                    h2: result.dim,
                    label,
                });
            }
            rows
        }
        AlgebraType::Exceptional(_) => exceptional_orbits(algebra)
            .expect("exceptional")
            .into_iter()
            .map(|r| CatalogRow {
                label: r.label,
                centralizer: r.centralizer.to_string(),
                component_group: r.component_group.description.to_string(),
                h2: r.h2,
            })
            .collect(),
    }
}

fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{cell:<w$}"));
        }
        println!("{}", out.trim_end());
    };
    line(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        line(row);
    }
}

fn cmd_orbits(tag: &str, pretty: bool) -> ExitCode {
    let algebra = match parse_algebra(tag) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let rows = catalog_rows(algebra);
    if pretty {
        let table: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.label.to_string(),
                    r.centralizer.clone(),
                    r.h2.to_string(),
                ]
            })
            .collect();
        print_table(&["label", "centralizer", "h2"], &table);
    } else {
        for r in &rows {
            let obj = json!({
                "label": r.label.to_string(),
                "centralizer": r.centralizer,
                "h2": r.h2,
            });
            println!("{obj}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_dump(tag: &str) -> ExitCode {
    let algebra = match parse_algebra(tag) {
        Ok(a) => a,
        Err(code) => return code,
    };
    for r in catalog_rows(algebra) {
        let obj = json!({
            "algebra": r.label.algebra.to_string(),
            "key": r.label.key.to_string(),
            "centralizer": r.centralizer,
            "component_group": r.component_group,
            "h2": r.h2,
        });
        println!("{obj}");
    }
    ExitCode::SUCCESS
}

fn cmd_h2(label_text: &str) -> ExitCode {
    let label: OrbitLabel = match label_text.parse() {
        Ok(l) => l,
        Err(LabelParseError::Syntax(s)) => {
            eprintln!("malformed orbit label: `{s}`");
            return ExitCode::from(EXIT_PARSE);
        }
        Err(LabelParseError::Unknown(s)) => {
            eprintln!("no such orbit: `{s}`");
            return ExitCode::from(EXIT_UNKNOWN);
        }
    };
    match h2(&label) {
        Ok(result) => {
            let obj = json!({
                "label": label.to_string(),
                "h2": result.dim,
                "route": result.route.as_str(),
                "centralizer": result.centralizer.to_string(),
            });
            println!("{obj}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_UNKNOWN)
        }
    }
}

fn parse_family(text: &str) -> Result<ClassicalFamily, ExitCode> {
    match text.trim() {
        "A" | "a" => Ok(ClassicalFamily::A),
        "B" | "b" => Ok(ClassicalFamily::B),
        "C" | "c" => Ok(ClassicalFamily::C),
        "D" | "d" => Ok(ClassicalFamily::D),
        other => {
            eprintln!("unknown classical family `{other}` (expected A, B, C or D)");
            Err(ExitCode::from(EXIT_UNKNOWN))
        }
    }
}

fn report_json(r: &VerifyReport) -> serde_json::Value {
    json!({
        "label": r.label.to_string(),
        "predicted_center": r.predicted_center,
        "oracle_center": r.oracle_center,
        "predicted_h2": r.predicted_h2,
        "oracle_invariant": r.oracle_invariant,
        "pass": r.pass,
    })
}

fn cmd_verify(
    family_text: &str,
    max_rank: Option<usize>,
    max_seconds: Option<u64>,
    pretty: bool,
) -> ExitCode {
    let family = match parse_family(family_text) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let max_rank = max_rank.unwrap_or_else(|| sweep::default_max_rank(family));
    if max_rank < family.min_rank() {
        eprintln!(
            "max rank {max_rank} is below the smallest rank {} of family {}",
            family.min_rank(),
            family.letter()
        );
        return ExitCode::from(EXIT_UNKNOWN);
    }
    let deadline = max_seconds.map(|s| Instant::now() + Duration::from_secs(s));
    let outcome = match sweep::run_sweep(family, max_rank, deadline) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("verification failed to run: {e}");
            return ExitCode::from(EXIT_MISMATCH);
        }
    };
    if pretty {
        let table: Vec<Vec<String>> = outcome
            .reports
            .iter()
            .map(|r| {
                vec![
                    r.label.to_string(),
                    r.predicted_center.to_string(),
                    r.oracle_center.to_string(),
                    r.predicted_h2.to_string(),
                    r.oracle_invariant.to_string(),
                    if r.pass { "pass".into() } else { "FAIL".into() },
                ]
            })
            .collect();
        print_table(
            &["label", "center", "oracle", "h2", "invariant", "status"],
            &table,
        );
    } else {
        for r in &outcome.reports {
            println!("{}", report_json(r));
        }
    }
    let failures = outcome.reports.iter().filter(|r| !r.pass).count();
    eprintln!(
        "verified {} labels: {} pass, {} fail{}",
        outcome.reports.len(),
        outcome.reports.len() - failures,
        failures,
        if outcome.skipped > 0 {
            format!(" ({} skipped at --max-seconds deadline)", outcome.skipped)
        } else {
            String::new()
        }
    );
    if failures > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_kk(path: &PathBuf, tag: &str) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let matrix = match matrix_file::matrix_from_json(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let algebra = match parse_algebra(tag) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let AlgebraType::Classical(family, rank) = algebra else {
        eprintln!("kk needs a classical algebra (matrix realization)");
        return ExitCode::from(EXIT_UNKNOWN);
    };
    let n = family.matrix_size(rank);
    let spec = LieAlgebraSpec::standard(family, n).expect("catalog rank");
    if matrix.rows() != n || matrix.cols() != n || !spec.contains(&matrix) {
        eprintln!(
            "matrix is not in {algebra} (expected {n}x{n} satisfying the defining equations)"
        );
        return ExitCode::from(EXIT_NOT_IN_ALGEBRA);
    }
    let verdict = orbit_core::jordan::kk_verdict(&spec, &matrix).expect("membership checked");
    let mut obj = json!({
        "re_exact": verdict.re_exact,
        "im_exact": verdict.im_exact,
        "class": verdict.spectrum_class.as_str(),
    });
    if let Ok(dec) = complete_decomposition(&matrix) {
        obj["decomposition"] = json!({
            "nilpotent": matrix_file::matrix_to_json(&dec.nilpotent),
            "compact": matrix_file::matrix_to_json(&dec.compact),
            "hyperbolic": matrix_file::matrix_to_json(&dec.hyperbolic),
        });
    }
    println!("{obj}");
    ExitCode::SUCCESS
}
