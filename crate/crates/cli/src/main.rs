//! `qtensor` command-line tool.
//!
//! Exit status: 0 on success, 1 when an input is well-formed but fails a
//! mathematical check, 2 on parse or usage errors.

mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qtensor::report::parse_quotient_selector;
use qtensor::{
    cross_check_sweep, enumerate_homs, handle_invariant_in, handle_report, symmetric_double, tensor_product,
    tensor_product_parallel, tensor_report, write_qdl, InvariantMode, InvolutionKind, DEFAULT_SEARCH_CAP,
};

use input::{load_presentation, load_quandle, parse_rho_flag, Failure, Loaded};

#[derive(Parser)]
#[command(
    name = "qtensor",
    version,
    about = "Finite quandles and their canonical tensor products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strong,
    Weak,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the quandle axioms and, if present, the involution.
    Check {
        file: PathBuf,
        /// Involution as an inline array, e.g. "[0,2,1]".
        #[arg(long)]
        rho: Option<String>,
    },
    /// Compute X ⊗ X with optional quotients.
    Tensor {
        file: PathBuf,
        /// Quotient to include: tau, rho or tau,rho. Repeatable.
        #[arg(long = "quotient", value_parser = parse_selector)]
        quotients: Vec<Vec<InvolutionKind>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        rho: Option<String>,
        /// Worker threads for the orbit sweep.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
        threads: u32,
    },
    /// Emit the symmetric double as a .qdl file with its involution.
    Double { file: PathBuf },
    /// List the connected components.
    Components {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the engine with the dihedral closed forms for n = 1..=max.
    DihedralVerify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=200))]
        max: u64,
        /// Skip the symmetric doubles.
        #[arg(long)]
        no_double: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate homomorphisms from a presented quandle into a finite one.
    Homs {
        presentation: PathBuf,
        target: PathBuf,
        /// Largest number of assignments to try.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP, value_parser = parse_cap)]
        cap: u128,
        /// Print only the number of homomorphisms.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the 1-handle invariant of a designated pair of words.
    Invariant {
        presentation: PathBuf,
        target: PathBuf,
        /// Generator images, e.g. a=0,b=1.
        #[arg(long)]
        assign: String,
        /// The two words of the designated pair.
        #[arg(long, num_args = 2, value_names = ["EXPR1", "EXPR2"])]
        pair: Vec<String>,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
        #[arg(long)]
        rho: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count 1-handle classes. `file` plays the knot quandle; with an
    /// involution it also plays the knot symmetric quandle.
    Handles {
        file: PathBuf,
        /// Use the symmetric double of `file` as the knot symmetric quandle.
        #[arg(long, conflicts_with = "rho")]
        double: bool,
        #[arg(long)]
        rho: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_selector(s: &str) -> Result<Vec<InvolutionKind>, String> {
    parse_quotient_selector(s).ok_or_else(|| format!("expected tau, rho or tau,rho, found `{s}`"))
}

fn parse_cap(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("the cap must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Check { file, rho } => {
            let mut out = format!("{}\n", file.display());
            let doc = input::load_qdl(&file)?;
            let q = match doc.quandle() {
                Ok(q) => q,
                Err(e) if e.is_input_error() => return Err(Failure::usage(&file, e)),
                Err(e) => {
                    let _ = writeln!(out, "order: {}\naxioms: FAIL\n  {e}", doc.n);
                    return Err(Failure::Report(out, format!("{}: {e}", file.display())));
                }
            };
            let _ = writeln!(out, "order: {}\naxioms: ok", q.len());
            let _ = writeln!(out, "components: {}", q.connected_components().len());
            let rho = match rho {
                Some(text) => Some(parse_rho_flag(&text)?),
                None => doc.involution.clone(),
            };
            if let Some(rho) = rho {
                match qtensor::validate_good_involution(&q, &rho) {
                    Ok(_) => out.push_str("involution: ok\n"),
                    Err(e) if e.is_input_error() => return Err(Failure::usage(&file, e)),
                    Err(e) => {
                        let _ = writeln!(out, "involution: FAIL\n  {e}");
                        return Err(Failure::Report(out, format!("{}: {e}", file.display())));
                    }
                }
            }
            Ok(out)
        }
        Command::Tensor {
            file,
            quotients,
            format,
            rho,
            threads,
        } => {
            let Loaded { q, rho } = load_quandle(&file, rho.as_deref())?;
            let wants_rho = quotients.iter().flatten().any(|k| *k == InvolutionKind::Rho);
            if wants_rho && rho.is_none() {
                return Err(Failure::Usage(format!(
                    "{}: quotients by rho need an involution line or --rho",
                    file.display()
                )));
            }
            let t = if threads > 1 {
                tensor_product_parallel(&q, threads as usize)
            } else {
                tensor_product(&q)
            };
            let report = tensor_report(&t, rho.as_ref(), &quotients).map_err(|e| Failure::from_core(&file, e))?;
            Ok(match format {
                Format::Json => json(&report),
                Format::Text => report.to_text(&t.labels()),
            })
        }
        Command::Double { file } => {
            let Loaded { q, .. } = load_quandle(&file, None)?;
            let (d, rho) = symmetric_double(&q);
            Ok(write_qdl(&d, Some(&rho)))
        }
        Command::Components { file, format } => {
            let Loaded { q, .. } = load_quandle(&file, None)?;
            let comps = q.connected_components();
            Ok(match format {
                Format::Json => json(&comps),
                Format::Text => {
                    let mut out = format!("{} components\n", comps.len());
                    for c in &comps {
                        let items: Vec<String> = c.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "  {{{}}}", items.join(", "));
                    }
                    out
                }
            })
        }
        Command::DihedralVerify { max, no_double, format } => {
            let reports =
                cross_check_sweep(max as usize, !no_double).map_err(|e| Failure::Validation(e.to_string()))?;
            let out = match format {
                Format::Json => json(&reports),
                Format::Text => reports.iter().map(|r| r.to_text()).collect(),
            };
            let failed: Vec<String> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.n.to_string())
                .collect();
            if failed.is_empty() {
                Ok(out)
            } else {
                Err(Failure::Report(
                    out,
                    format!("closed forms disagree with the engine for n = {}", failed.join(", ")),
                ))
            }
        }
        Command::Homs {
            presentation,
            target,
            cap,
            count,
            format,
        } => {
            let p = load_presentation(&presentation)?;
            let Loaded { q, .. } = load_quandle(&target, None)?;
            let homs = enumerate_homs(&p, &q, cap).map_err(|e| Failure::from_core(&presentation, e))?;
            let images: Vec<&[usize]> = homs.iter().map(|h| h.images.as_slice()).collect();
            Ok(match (format, count) {
                (Format::Json, _) => json(&serde_json::json!({
                    "generators": p.generators(),
                    "count": homs.len(),
                    "homs": if count { None } else { Some(images) },
                })),
                (Format::Text, true) => format!("{}\n", homs.len()),
                (Format::Text, false) => {
                    let mut out = format!("{} homomorphisms\n", homs.len());
                    for h in &homs {
                        let parts: Vec<String> = p
                            .generators()
                            .iter()
                            .zip(&h.images)
                            .map(|(g, v)| format!("{g}={v}"))
                            .collect();
                        let _ = writeln!(out, "  {}", parts.join(" "));
                    }
                    out
                }
            })
        }
        Command::Invariant {
            presentation,
            target,
            assign,
            pair,
            mode,
            rho,
            format,
        } => {
            let p = load_presentation(&presentation)?;
            let Loaded { q, rho } = load_quandle(&target, rho.as_deref())?;
            let flag = |name: &str, e: qtensor::Error| Failure::Usage(format!("{name}: {e}"));
            let asg = p.parse_assignment(&assign).map_err(|e| flag("--assign", e))?;
            let w1 = p.parse_expr(&pair[0]).map_err(|e| flag("--pair", e))?;
            let w2 = p.parse_expr(&pair[1]).map_err(|e| flag("--pair", e))?;
            let mode = match mode {
                Mode::Strong => InvariantMode::Strong,
                Mode::Weak => InvariantMode::Weak,
            };
            let t = tensor_product(&q);
            let inv = handle_invariant_in(&t, &p, &asg, &w1, &w2, mode, rho.as_ref())
                .map_err(|e| Failure::from_core(&presentation, e))?;
            Ok(match format {
                Format::Json => json(&serde_json::json!({
                    "pair": [inv.pair.0, inv.pair.1],
                    "class": inv.class,
                    "class_label": inv.class_label,
                    "block": inv.block.as_ref().map(|(b, members)| serde_json::json!({"index": b, "classes": members})),
                    "value": inv.label,
                })),
                Format::Text => format!(
                    "pair ({}, {}) -> class {} {}\nvalue: {}\n",
                    inv.pair.0, inv.pair.1, inv.class, inv.class_label, inv.label
                ),
            })
        }
        Command::Handles {
            file,
            double,
            rho,
            format,
        } => {
            let Loaded { q, rho } = load_quandle(&file, rho.as_deref())?;
            let core = |e| Failure::from_core(&file, e);
            let mut report = handle_report(&q, None).map_err(core)?;
            if double {
                let (d, drho) = symmetric_double(&q);
                report = report.merge(handle_report(&d, Some(&drho)).map_err(core)?);
            } else if let Some(rho) = &rho {
                report = report.merge(handle_report(&q, Some(rho)).map_err(core)?);
            }
            Ok(match format {
                Format::Json => json(&report),
                Format::Text => report.to_text(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Failure::Report(out, _) = &failure {
                print!("{out}");
            }
            eprintln!("qtensor: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
