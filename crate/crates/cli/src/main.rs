//! `htg` — classify honeycomb toroidal graphs, sweep parameter ranges into
//! census files, cross-check the classifier against the automorphism
//! engine, and export graphs.
//!
//! Exit codes: 0 success, 2 invalid parameters or usage, 3 verification
//! mismatch.

use clap::{Parser, Subcommand, ValueEnum};
use htg_core::census::{self, census, verify_range, verify_triple, CensusRow, GraphExport};
use htg_core::classify::classify;
use htg_core::{HtgParams, ParamError};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_INVALID: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "htg", version, about = "Honeycomb toroidal graph census tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the automorphism group of HTG(m, n, l)
    Classify {
        m: u32,
        n: u32,
        ell: u32,
        /// Cross-check the classification with the automorphism engine
        #[arg(long)]
        verify: bool,
        /// Emit a machine-readable record instead of the report
        #[arg(long)]
        json: bool,
    },
    /// Classify every normal-form triple with mn <= MAX_ORDER
    Census {
        #[arg(long, value_name = "N")]
        max_order: u32,
        /// Output file (stdout when omitted)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CensusFormat::Csv)]
        format: CensusFormat,
        /// Also run the oracle on every row (fills the `verified` column)
        #[arg(long)]
        verify: bool,
        /// Worker threads for --verify (default: available parallelism)
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
    },
    /// Rebuild every graph up to MAX_ORDER and compare the classifier
    /// against the automorphism engine
    Verify {
        #[arg(long, value_name = "N", default_value_t = 120)]
        max_order: u32,
        /// Worker threads (default: available parallelism)
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
        /// Override the max-order runtime guard
        #[arg(long)]
        force: bool,
    },
    /// Export the graph of HTG(m, n, l)
    Export {
        m: u32,
        n: u32,
        ell: u32,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Output file (stdout when omitted)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Graph6,
    Dot,
    Json,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Classify {
            m,
            n,
            ell,
            verify,
            json,
        } => run_classify(m, n, ell, verify, json),
        Command::Census {
            max_order,
            out,
            format,
            verify,
            jobs,
        } => run_census(max_order, out, format, verify, jobs),
        Command::Verify {
            max_order,
            jobs,
            force,
        } => run_verify(max_order, jobs, force),
        Command::Export {
            m,
            n,
            ell,
            format,
            out,
        } => run_export(m, n, ell, format, out),
    }
}

fn parse_params(m: u32, n: u32, ell: u32) -> Result<HtgParams, ParamError> {
    HtgParams::new(m, n, ell)
}

fn run_classify(m: u32, n: u32, ell: u32, verify: bool, json: bool) -> ExitCode {
    let p = match parse_params(m, n, ell) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    if !p.is_normal_form() && !json {
        println!(
            "note: l = {} exceeds n/2; classifying the normal form {}",
            p.ell(),
            p.normal_form()
        );
    }
    let result = classify(&p);

    if verify {
        let verified = verify_triple(&p);
        if json {
            println!("{}", serde_json::to_string(&verified.row).unwrap());
        } else {
            print_report(&p, &verified.row);
            if verified.mismatches.is_empty() {
                println!("  oracle:          agrees (|Aut|, stabilizer, arc structure)");
            }
        }
        if !verified.mismatches.is_empty() {
            for msg in &verified.mismatches {
                eprintln!("mismatch: {msg}");
            }
            return ExitCode::from(EXIT_MISMATCH);
        }
        return ExitCode::SUCCESS;
    }

    let row = CensusRow::from_classification(&p, &result, None);
    if json {
        println!("{}", serde_json::to_string(&row).unwrap());
    } else {
        print_report(&p, &row);
    }
    ExitCode::SUCCESS
}

fn print_report(p: &HtgParams, row: &CensusRow) {
    println!("{p}");
    if !p.is_normal_form() {
        println!("  normal form:     HTG({}, {}, {})", row.m, row.n, row.ell_normal);
    }
    println!("  order:           {}", row.order);
    println!("  girth:           {}", row.girth);
    match &row.named_iso {
        Some(name) => println!("  category:        {} ({name})", row.category),
        None => println!("  category:        {}", row.category),
    }
    println!(
        "  conditions:      c1={} c2={} c3={} c4={}",
        row.c1, row.c2, row.c3, row.c4
    );
    println!(
        "  |Aut|:           {} (vertex stabilizer {})",
        row.aut_order, row.stabilizer
    );
    println!(
        "  normal Cayley:   {}",
        if row.category == "exceptional" { "no" } else { "yes" }
    );
    if let Some(v) = row.verified {
        println!("  verified:        {v}");
    }
}

fn with_thread_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn write_output(out: Option<PathBuf>, content: &str) -> ExitCode {
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, content) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INVALID);
            }
            ExitCode::SUCCESS
        }
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            ExitCode::SUCCESS
        }
    }
}

fn run_census(
    max_order: u32,
    out: Option<PathBuf>,
    format: CensusFormat,
    verify: bool,
    jobs: Option<usize>,
) -> ExitCode {
    if max_order < 4 {
        eprintln!("error: --max-order must be at least 4");
        return ExitCode::from(EXIT_INVALID);
    }
    let rows: Vec<CensusRow> = if verify {
        with_thread_pool(jobs, || {
            verify_range(max_order)
                .triples
                .into_iter()
                .map(|t| t.row)
                .collect()
        })
    } else {
        census(max_order)
    };
    let content = match format {
        CensusFormat::Csv => census::to_csv(&rows),
        CensusFormat::Jsonl => {
            let mut s = String::new();
            for row in &rows {
                s.push_str(&serde_json::to_string(row).unwrap());
                s.push('\n');
            }
            s
        }
    };
    write_output(out, &content)
}

fn run_verify(max_order: u32, jobs: Option<usize>, force: bool) -> ExitCode {
    if max_order > 200 && !force {
        eprintln!(
            "error: --max-order {max_order} exceeds the runtime guard of 200; pass --force to override"
        );
        return ExitCode::from(EXIT_INVALID);
    }
    let report = with_thread_pool(jobs, || verify_range(max_order));
    let total = report.triples.len();
    let mismatch_count = report.mismatches().count();
    println!(
        "verified {total} normal-form triples with mn <= {}",
        report.max_order
    );
    for (category, count) in &report.category_counts {
        println!("  {category:<16} {count:>6}");
    }
    if mismatch_count == 0 {
        println!("classifier and oracle agree on every triple");
        ExitCode::SUCCESS
    } else {
        for (row, msg) in report.mismatches() {
            eprintln!("mismatch at HTG({}, {}, {}): {msg}", row.m, row.n, row.ell);
        }
        eprintln!("{mismatch_count} mismatches");
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn run_export(m: u32, n: u32, ell: u32, format: ExportFormat, out: Option<PathBuf>) -> ExitCode {
    let p = match parse_params(m, n, ell) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let content = match format {
        ExportFormat::Graph6 => {
            let mut s = census::export_graph6(&p);
            s.push('\n');
            s
        }
        ExportFormat::Dot => census::export_dot(&p),
        ExportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&GraphExport::from_params(&p)).unwrap();
            s.push('\n');
            s
        }
    };
    write_output(out, &content)
}
