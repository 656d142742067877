//! `graded-lie`: exact reports on cyclically graded simple Lie algebras.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure
//! (golden-file or oracle mismatch).

use anyhow::{anyhow, bail, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use graded_lie_cli::{
    check_tables, cuspidal_table, diagram, emit, oracle, parse_i64_list, render_all_tables,
    table_for, DIAGRAMS,
};
use graded_lie_core::quiver::{DimVector, Family, FamilyLabel};
use graded_lie_core::rootsys::{build_finite, CartanType};
use graded_lie_core::{classify_classical, classify_exceptional, kac};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "graded-lie",
    about = "Exact combinatorics of cyclically graded simple Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print basic data of a finite root system (e.g. `E6`, `B4`).
    Roots {
        /// Cartan type, e.g. `A3`, `F4`.
        r#type: String,
    },
    /// Graded dimensions of one grading.
    Grading {
        #[command(subcommand)]
        which: GradingCmd,
    },
    /// Existence/support classification of one grading.
    Classify {
        #[command(subcommand)]
        which: ClassifyCmd,
    },
    /// Emit the bi-orbital table of one diagram.
    Enumerate {
        /// Diagram name: G2, 3D4, F4, 2E6, E6, E7 or E8.
        #[arg(long)]
        diagram: String,
        /// Expand arithmetic families explicitly up to this k (Markdown only).
        #[arg(long, default_value_t = 0)]
        kmax: i64,
        /// Output format.
        #[arg(long, default_value = "md")]
        format: String,
        /// Golden file to compare against (with --check).
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Compare against the golden file instead of printing.
        #[arg(long)]
        check: bool,
    },
    /// Emit or verify the bi-orbital tables of all seven diagrams.
    Tables {
        /// Process all seven diagrams (required).
        #[arg(long)]
        all: bool,
        /// Verify against the embedded golden files.
        #[arg(long)]
        check: bool,
        /// Write per-diagram Markdown files into this directory.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Brute-force validation oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
}

#[derive(Args)]
struct KacArgs {
    /// Diagram name: G2, 3D4, F4, 2E6, E6, E7 or E8.
    #[arg(long)]
    diagram: String,
    /// Comma-separated label vector in display node order.
    #[arg(long)]
    coords: String,
}

#[derive(Args)]
struct ClassicalArgs {
    /// Family label: A, 2AI, 2AII, 2AIII-i, 2AIII-ii, BDI, BDII, BDIII, CI, CII or CIII.
    #[arg(long)]
    family: String,
    /// Index-set modulus.
    #[arg(long)]
    m0: i64,
    /// Comma-separated dimension vector (one entry per position).
    #[arg(long)]
    dims: String,
}

#[derive(Subcommand)]
enum GradingCmd {
    /// From Kac coordinates on an affine diagram.
    Kac(KacArgs),
    /// From a classical family and dimension vector.
    Classical(ClassicalArgs),
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Classify an exceptional grading given by Kac coordinates.
    Kac {
        #[command(flatten)]
        args: KacArgs,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Classify a classical grading given by a dimension vector.
    Classical {
        #[command(flatten)]
        args: ClassicalArgs,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Graded Jordan types realized by random/exhaustive matrix samples.
    Jordan {
        #[command(flatten)]
        args: ClassicalArgs,
        /// Number of random samples (on top of any exhaustive pass).
        #[arg(long)]
        samples: u64,
        /// RNG seed (required for determinism).
        #[arg(long)]
        seed: u64,
        /// Compare the observed set against the admissibility predicate.
        #[arg(long)]
        compare: bool,
    },
}

fn parse_family(args: &ClassicalArgs) -> Result<(Family, DimVector)> {
    let label = FamilyLabel::parse(&args.family)
        .ok_or_else(|| anyhow!("unknown family {:?}", args.family))?;
    let f = Family::new(label, args.m0).map_err(|e| anyhow!(e))?;
    let dims = parse_i64_list(&args.dims)?;
    let d = DimVector::new(&f, dims).map_err(|e| anyhow!(e))?;
    Ok((f, d))
}

fn require_supported(name: &str) -> Result<()> {
    if DIAGRAMS.contains(&name) {
        Ok(())
    } else {
        bail!("diagram {name:?} is not supported; expected one of {DIAGRAMS:?}")
    }
}

/// `Ok(true)` = success, `Ok(false)` = verification failure (exit 2).
fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Roots { r#type } => {
            let ct = CartanType::parse(&r#type).map_err(|e| anyhow!(e))?;
            let rs = build_finite(ct).map_err(|e| anyhow!("{e:?}"))?;
            println!("type: {}", ct);
            println!("rank: {}", rs.rank());
            println!("roots: {}", rs.num_roots());
            println!("positive roots: {}", rs.positive_roots.len());
            println!("dimension: {}", ct.dim());
            println!("highest root: {}", emit::fmt_vec(&rs.highest_root));
            Ok(true)
        }
        Cmd::Grading { which } => {
            match which {
                GradingCmd::Kac(args) => {
                    require_supported(&args.diagram)?;
                    let diag = diagram(&args.diagram)?;
                    let coords = parse_i64_list(&args.coords)?;
                    if coords.len() != diag.num_nodes() {
                        bail!(
                            "expected {} coordinates for {}, got {}",
                            diag.num_nodes(),
                            args.diagram,
                            coords.len()
                        );
                    }
                    let norm = kac::normalize(&diag, &coords);
                    let gd = kac::graded_dims(&diag, &norm);
                    println!("diagram: {}", args.diagram);
                    println!("normalized coordinates: {}", emit::fmt_vec(&norm));
                    println!("order m: {}", gd.order);
                    for (k, d) in gd.dims.iter().enumerate() {
                        println!("dim g_{k}: {d}");
                    }
                    println!("r (dim g1 - dim g0): {}", gd.r_value());
                    println!("biorbital: {}", gd.is_biorbital());
                }
                GradingCmd::Classical(args) => {
                    let (f, d) = parse_family(&args)?;
                    let (g0, g1) = graded_lie_core::quiver::group_dims(&f, &d);
                    println!("family: {} (m0 = {})", f.label.as_str(), f.m0);
                    println!("theta order: {}", f.theta_order());
                    println!("dim G0: {g0}");
                    println!("dim g1: {g1}");
                    println!("r (dim g1 - dim G0): {}", g1 - g0);
                }
            }
            Ok(true)
        }
        Cmd::Classify { which } => {
            let (report, format) = match which {
                ClassifyCmd::Kac { args, format } => {
                    require_supported(&args.diagram)?;
                    let diag = diagram(&args.diagram)?;
                    let coords = parse_i64_list(&args.coords)?;
                    if coords.len() != diag.num_nodes() {
                        bail!(
                            "expected {} coordinates for {}, got {}",
                            diag.num_nodes(),
                            args.diagram,
                            coords.len()
                        );
                    }
                    (classify_exceptional(&diag, &coords), format)
                }
                ClassifyCmd::Classical { args, format } => {
                    let (f, d) = parse_family(&args)?;
                    (classify_classical(&f, &d), format)
                }
            };
            match format.as_str() {
                "text" => print!("{}", emit::report_text(&report)),
                "json" => print!("{}", emit::report_json(&report)),
                other => bail!("unknown format {other:?}; expected text or json"),
            }
            Ok(true)
        }
        Cmd::Enumerate { diagram: name, kmax, format, golden, check } => {
            require_supported(&name)?;
            let cusp = cuspidal_table()?;
            let table = table_for(&name, &cusp)?;
            let rendered = match format.as_str() {
                "md" => {
                    let mut s = emit::table_md(&table);
                    s.push_str(&emit::expansion_md(&diagram(&name)?, &table, kmax));
                    s
                }
                "json" => emit::table_json(&table),
                "csv" => emit::table_csv(&table),
                other => bail!("unknown format {other:?}; expected md, json or csv"),
            };
            if check {
                let path = golden
                    .ok_or_else(|| anyhow!("--check requires --golden PATH"))?;
                let expected = std::fs::read_to_string(&path)
                    .map_err(|e| anyhow!("reading {}: {e}", path.display()))?;
                if expected == rendered {
                    println!("{name}: OK");
                    Ok(true)
                } else {
                    eprintln!("{name}: output differs from {}", path.display());
                    Ok(false)
                }
            } else {
                print!("{rendered}");
                Ok(true)
            }
        }
        Cmd::Tables { all, check, write } => {
            if !all {
                bail!("tables requires --all");
            }
            let cusp = cuspidal_table()?;
            if let Some(dir) = &write {
                std::fs::create_dir_all(dir)?;
                for (name, text) in render_all_tables(&cusp)? {
                    std::fs::write(dir.join(format!("{name}.md")), text)?;
                }
                println!("wrote {} tables to {}", DIAGRAMS.len(), dir.display());
                return Ok(true);
            }
            if check {
                let mismatches = check_tables(&cusp)?;
                if mismatches.is_empty() {
                    println!("all {} tables match the golden files", DIAGRAMS.len());
                    Ok(true)
                } else {
                    for m in &mismatches {
                        eprintln!("{m}");
                    }
                    Ok(false)
                }
            } else {
                for (_, text) in render_all_tables(&cusp)? {
                    print!("{text}\n");
                }
                Ok(true)
            }
        }
        Cmd::Oracle { which } => match which {
            OracleCmd::Jordan { args, samples, seed, compare } => {
                let (f, d) = parse_family(&args)?;
                let run = oracle::run_oracle(&f, &d, samples, seed)
                    .ok_or_else(|| anyhow!("no grading with this dimension vector exists"))?;
                println!(
                    "parameters: {} ({}; {} random samples, seed {seed})",
                    run.params,
                    if run.exhaustive { "exhaustive 0/1 pass" } else { "random only" },
                    run.random_samples,
                );
                for s in &run.observed {
                    println!("observed: {}", emit::fmt_multisegment(s));
                }
                if compare {
                    let adm = oracle::admissible_set(&f, &d);
                    let missing: Vec<_> = adm.difference(&run.observed).collect();
                    let extra: Vec<_> = run.observed.difference(&adm).collect();
                    for s in &missing {
                        eprintln!("admissible but not observed: {}", emit::fmt_multisegment(s));
                    }
                    for s in &extra {
                        eprintln!("observed but not admissible: {}", emit::fmt_multisegment(s));
                    }
                    if missing.is_empty() && extra.is_empty() {
                        println!("observed set matches the admissible set ({} types)", adm.len());
                    } else {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
