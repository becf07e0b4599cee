//! Command-line front end: thin wrappers over the library operations.
//!
//! Every run writes its primary output (exact JSON or a figure) plus a
//! `<output>.manifest.json` describing the invocation. All numeric output is
//! exact; floating values appear only inside figure files at the declared
//! precision. Exit codes: 0 success, 1 verification failure or runtime
//! error, 2 usage/parse error.

use anyhow::Result as AnyResult;
use arrangeops::arrangement::{Arrangement, Mode};
use arrangeops::error::Error;
use arrangeops::export::{export_figure, ExportFormat, ExportOptions, MarkFilter};
use arrangeops::io::{
    self, arrangement_to_json, moduli_to_json, orbit_report_to_json, parse_arrangement_spec,
    parse_field_name, RunManifest,
};
use arrangeops::{catalog, dynamics, table1, unassuming};
use clap::{Parser, Subcommand};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "arrangeops",
    version,
    about = "Exact operators and dynamics on projective line arrangements"
)]
struct Cli {
    /// Worker threads for parallel searches (env ARRANGEOPS_THREADS overrides).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Precision in bits for figure coordinates.
    #[arg(long, global = true, default_value_t = 64)]
    precision_bits: u32,

    /// Ambient field for literals: rational, quadratic:D, cyclotomic:N.
    #[arg(long, global = true)]
    field: Option<String>,

    /// Primary output path (each command has a default).
    #[arg(long, global = true)]
    out: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an arrangement from an address and write it as exact JSON.
    ///
    /// Addresses: c0:t=<lit>, cabc:<lit>,<lit>,<lit>, ceva:<n>, hesse,
    /// quadrilateral, hesse-union, g26, limit-dual9, limit-l2p9, and the
    /// prefixes dual15:<addr>, lambda:<addr>, @<file.json>.
    Gen { spec: String },

    /// Iterate the operator from a seed, recording the orbit.
    Iterate {
        spec: String,
        #[arg(long, default_value_t = 12)]
        steps: usize,
        /// Report the detected period (iteration always stops on repetition).
        #[arg(long)]
        detect_period: bool,
    },

    /// Recompute the periodic-configuration table and verify it.
    Table1 {
        /// Comma-separated root orders; the default is the fast subset 3,5,7,9,11.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<u32>>,
    },

    /// Draw an arrangement (svg, tikz) or dump exact JSON geometry.
    Export {
        spec: String,
        #[arg(long, default_value = "svg")]
        format: String,
        /// Window x0,y0,x1,y1 in chart coordinates (default: auto).
        #[arg(long, value_delimiter = ',', num_args = 4)]
        window: Option<Vec<f64>>,
        /// Which singular points to mark: "all" or multiplicities like "3,5".
        #[arg(long, default_value = "all")]
        mark: String,
    },

    /// Enumerate sub-arrangements of a given size with a property.
    Search {
        spec: String,
        #[arg(long, default_value_t = 6)]
        size: usize,
        /// Property: unassuming | nodal.
        #[arg(long, default_value = "unassuming")]
        predicate: String,
    },

    /// Moduli classification of a six-line arrangement.
    Moduli { spec: String },

    /// Antecedents of a diagonal-form arrangement under the operator.
    Preimage {
        spec: String,
        /// Only the real antecedent.
        #[arg(long)]
        real: bool,
    },

    /// Report invariants of an arrangement and verify internal identities.
    Check { spec: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(&cli);
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let usage = err
                .downcast_ref::<Error>()
                .map(|e| matches!(e, Error::Parse(_) | Error::InvalidArgument(_)))
                .unwrap_or(false);
            if usage {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn configure_threads(cli: &Cli) {
    let from_env = std::env::var("ARRANGEOPS_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = from_env.or(cli.threads) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn run(cli: Cli) -> AnyResult<ExitCode> {
    let start = Instant::now();
    let hint = cli.field.as_deref().map(parse_field_name).transpose()?;
    let mut manifest = RunManifest::new(command_name(&cli.command));
    if let Some(f) = &cli.field {
        manifest.inputs.insert("field".into(), f.clone());
    }
    manifest
        .inputs
        .insert("precision_bits".into(), cli.precision_bits.to_string());

    let code = match &cli.command {
        Command::Gen { spec } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            let out = cli.out.clone().unwrap_or_else(|| "arrangement.json".into());
            io::save_arrangement(&a, &out)?;
            manifest.outputs.push(out.clone());
            println!("wrote {} ({} lines, profile {})", out, a.len(), a.profile());
            ExitCode::SUCCESS
        }
        Command::Iterate {
            spec,
            steps,
            detect_period,
        } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            manifest.inputs.insert("steps".into(), steps.to_string());
            let report = dynamics::iterate_lambda(&a, *steps)?;
            let out = cli.out.clone().unwrap_or_else(|| "orbit.json".into());
            std::fs::write(
                &out,
                serde_json::to_string_pretty(&orbit_report_to_json(&report)?)?,
            )?;
            manifest.outputs.push(out.clone());
            print!(
                "{} terms, union profile {}",
                report.terms.len(),
                report.union_profile
            );
            if report.terminated {
                print!(", terminated at the empty arrangement");
            }
            if *detect_period {
                match (report.period, report.preperiod) {
                    (Some(p), Some(q)) => print!(", period {p} after preperiod {q}"),
                    _ => print!(", no period within {steps} steps"),
                }
            }
            println!(" -> {out}");
            ExitCode::SUCCESS
        }
        Command::Table1 { rows } => {
            let results = table1::run_rows(rows.as_deref())?;
            manifest.inputs.insert(
                "rows".into(),
                results
                    .iter()
                    .map(|r| r.n.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let out = cli
                .out
                .clone()
                .unwrap_or_else(|| "table1-report.json".into());
            std::fs::write(&out, serde_json::to_string_pretty(&results)?)?;
            manifest.outputs.push(out.clone());
            let mut all_pass = true;
            for r in &results {
                println!("{}", r.summary_line());
                all_pass &= r.pass;
            }
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Export {
            spec,
            format,
            window,
            mark,
        } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            manifest.inputs.insert("format".into(), format.clone());
            let fmt = match format.as_str() {
                "svg" => ExportFormat::Svg,
                "tikz" => ExportFormat::Tikz,
                "json" => ExportFormat::Json,
                other => {
                    return Err(Error::Parse(format!("unknown format {other:?}")).into());
                }
            };
            let mark = match mark.as_str() {
                "all" => MarkFilter::All,
                list => MarkFilter::Multiplicities(
                    list.split(',')
                        .map(|s| {
                            s.trim().parse::<usize>().map_err(|_| {
                                Error::Parse(format!("bad multiplicity {s:?} in --mark"))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            let opts = ExportOptions {
                format: fmt,
                window: window.as_ref().map(|w| [w[0], w[1], w[2], w[3]]),
                precision_bits: cli.precision_bits,
                mark,
            };
            let body = export_figure(&a, &opts)?;
            let default_name = match fmt {
                ExportFormat::Svg => "figure.svg",
                ExportFormat::Tikz => "figure.tex",
                ExportFormat::Json => "figure.json",
            };
            let out = cli.out.clone().unwrap_or_else(|| default_name.into());
            std::fs::write(&out, body)?;
            manifest.outputs.push(out.clone());
            println!("wrote {out}");
            ExitCode::SUCCESS
        }
        Command::Search {
            spec,
            size,
            predicate,
        } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            manifest.inputs.insert("size".into(), size.to_string());
            manifest
                .inputs
                .insert("predicate".into(), predicate.clone());
            let results = match predicate.as_str() {
                "unassuming" => a.subsets_with_property(*size, unassuming::is_unassuming),
                "nodal" => a.subsets_with_property(*size, is_nodal),
                other => {
                    return Err(Error::Parse(format!("unknown predicate {other:?}")).into());
                }
            };
            let out = cli.out.clone().unwrap_or_else(|| "search.json".into());
            let payload: Vec<_> = results
                .iter()
                .map(arrangement_to_json)
                .collect::<Result<Vec<_>, _>>()?;
            std::fs::write(&out, serde_json::to_string_pretty(&payload)?)?;
            manifest.outputs.push(out.clone());
            println!(
                "{} sub-arrangements of size {size} satisfy {predicate} -> {out}",
                results.len()
            );
            ExitCode::SUCCESS
        }
        Command::Moduli { spec } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            let m = unassuming::moduli_invariant(&a)?;
            let out = cli.out.clone().unwrap_or_else(|| "moduli.json".into());
            std::fs::write(&out, serde_json::to_string_pretty(&moduli_to_json(&m)?)?)?;
            manifest.outputs.push(out.clone());
            match (&m.class, &m.value) {
                (unassuming::ModuliClass::Family, Some(v)) => {
                    println!("family component, invariant {v}")
                }
                (unassuming::ModuliClass::Rigid, _) => println!("rigid component"),
                _ => println!("degenerate"),
            }
            ExitCode::SUCCESS
        }
        Command::Preimage { spec, real } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            manifest.inputs.insert("real".into(), real.to_string());
            let ants = if *real {
                vec![dynamics::real_preimage(&a)?]
            } else {
                dynamics::preimages(&a)?
            };
            let out = cli.out.clone().unwrap_or_else(|| "preimage.json".into());
            let payload: Vec<_> = ants
                .iter()
                .map(arrangement_to_json)
                .collect::<Result<Vec<_>, _>>()?;
            std::fs::write(&out, serde_json::to_string_pretty(&payload)?)?;
            manifest.outputs.push(out.clone());
            println!("{} antecedent(s) -> {out}", ants.len());
            ExitCode::SUCCESS
        }
        Command::Check { spec } => {
            let a = parse_arrangement_spec(spec, hint.as_ref())?;
            manifest.inputs.insert("spec".into(), spec.clone());
            let profile = a.profile();
            println!("lines: {}", a.len());
            println!("profile: {profile}");
            let pair_ok = profile.satisfies_pair_count(a.len());
            println!(
                "pair-count identity: {}",
                if pair_ok { "ok" } else { "VIOLATED" }
            );
            if a.len() == 6 {
                println!("unassuming: {}", unassuming::is_unassuming(&a));
                let m = unassuming::moduli_invariant(&a)?;
                match (&m.class, &m.value) {
                    (unassuming::ModuliClass::Family, Some(v)) => {
                        println!("moduli: family, invariant {v}")
                    }
                    (unassuming::ModuliClass::Rigid, _) => println!("moduli: rigid"),
                    _ => println!("moduli: degenerate"),
                }
            }
            let rec = catalog::recognize_ceva(&a);
            match (rec.name, rec.relation) {
                (Some(catalog::CatalogName::Ceva(n)), catalog::Relation::Equal) => {
                    println!("recognized: Ceva({n})")
                }
                (Some(catalog::CatalogName::Ceva(n)), catalog::Relation::Subset) => {
                    println!("recognized: subset of Ceva({n})")
                }
                _ => println!("recognized: no Ceva identification"),
            }
            if pair_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    };

    manifest
        .timings_ms
        .insert("total".into(), start.elapsed().as_millis());
    let manifest_path = manifest
        .outputs
        .first()
        .map(|p| format!("{p}.manifest.json"))
        .unwrap_or_else(|| format!("{}.manifest.json", manifest.command));
    std::fs::write(&manifest_path, serde_json::to_string_pretty(&manifest)?)?;
    Ok(code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen { .. } => "gen",
        Command::Iterate { .. } => "iterate",
        Command::Table1 { .. } => "table1",
        Command::Export { .. } => "export",
        Command::Search { .. } => "search",
        Command::Moduli { .. } => "moduli",
        Command::Preimage { .. } => "preimage",
        Command::Check { .. } => "check",
    }
}

fn is_nodal(a: &Arrangement) -> bool {
    !a.is_empty() && a.points_with_multiplicity(3, Mode::AtLeast).is_empty()
}
