//! Command-line surface for the orbitfun library: structural info, grid and
//! weight enumeration, exact counting, stabilizers, orbit and function
//! evaluation, discrete transforms, interpolation and orthogonality
//! verification.
//!
//! All outputs are deterministic: enumerations come in the canonical
//! descending order and exact integers print as integers. Errors exit
//! nonzero with a one-line `error[CODE]: message` on stderr.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orbitfun::grids;
use orbitfun::transform;
use orbitfun::weyl;
use orbitfun::{
    formats, AlgebraData, GridPoint, LieType, RealPoint, SampleSet, Series, TransformKind,
    WeightPoint, DEFAULT_ORBIT_CAP,
};

#[derive(Parser)]
#[command(
    name = "orbitfun",
    version,
    about = "Discrete C- and S-orbit-function transforms on Lie-group fundamental domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "upper")]
enum KindArg {
    C,
    S,
}

impl From<KindArg> for TransformKind {
    fn from(k: KindArg) -> TransformKind {
        match k {
            KindArg::C => TransformKind::C,
            KindArg::S => TransformKind::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Weight,
    Coweight,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Series letter: A, B, C, D, E, F or G
    series: String,
    /// Rank of the algebra
    rank: usize,
}

impl AlgebraArgs {
    fn data(&self) -> Result<AlgebraData> {
        let series = self
            .series
            .trim()
            .chars()
            .next()
            .filter(|_| self.series.trim().len() == 1)
            .and_then(Series::from_letter)
            .ok_or_else(|| anyhow!("unknown series `{}`; expected one of A B C D E F G", self.series))?;
        Ok(AlgebraData::build(LieType::new(series, self.rank)?))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print structural constants: |W|, vol(F), c, m, L, N, marks, dual marks
    Info {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the points of F_M (or its interior)
    Grid {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        /// Restrict to strictly positive coordinates
        #[arg(long)]
        interior: bool,
        /// Write the listing to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the dominant weights of Λ_M (or its interior)
    Weights {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long)]
        interior: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact counts |F_M|, |F̃_M|, |Λ_M|, |Λ̃_M|, ν(M) and the gcd strata
    Count {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stabilizer order of a grid point (or of a weight with --dual)
    Stab {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        /// Barycentric coordinates s_0,...,s_n (t_0,...,t_n with --dual)
        #[arg(long)]
        point: String,
        /// Use the weight side: h^∨_λ on the extended dual diagram
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Weyl orbit of an integer coordinate vector, with determinant signs
    Orbit {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Seed coordinates v_1,...,v_n
        #[arg(long)]
        seed: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Weight)]
        basis: BasisArg,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: u64,
    },
    /// Evaluate Φ_λ or φ_λ at a grid point (--point) or real point (--at)
    Eval {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Weight coordinates t_0,...,t_n of λ ∈ Λ_M
        #[arg(long)]
        lambda: String,
        /// Grid point s_0,...,s_n for the exact-phase path
        #[arg(long)]
        point: Option<String>,
        /// Real point y_1,...,y_n in ω^∨ coordinates
        #[arg(long)]
        at: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Read a sample CSV on F_M, write the C-transform coefficient CSV
    Ctransform {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: u64,
    },
    /// Read a sample CSV on F̃_M, write the S-transform coefficient CSV
    Stransform {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: u64,
    },
    /// Evaluate the interpolating function at a list of real points
    Interpolate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Coefficient CSV produced by ctransform/stransform
        #[arg(long)]
        coeffs: PathBuf,
        /// CSV of real points with header y_1,...,y_n
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: u64,
    },
    /// Run the discrete-orthogonality Gram check; exits nonzero on failure
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long = "M")]
        m: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regenerate the matrix R and diff it against the stored appendix table
    Rmatrix {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error[{}]: {:#}", error_code(&err), err);
            ExitCode::FAILURE
        }
    }
}

fn error_code(err: &anyhow::Error) -> &'static str {
    if let Some(e) = err.downcast_ref::<orbitfun::Error>() {
        e.code()
    } else if err
        .chain()
        .any(|c| c.downcast_ref::<std::io::Error>().is_some())
    {
        "E_IO"
    } else {
        "E_USAGE"
    }
}

fn parse_list<T: std::str::FromStr>(what: &str, text: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.parse::<T>()
                .map_err(|_| anyhow!("bad {what} entry `{f}` in `{text}`"))
        })
        .collect()
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct InfoJson {
    algebra: String,
    rank: usize,
    weyl_order: String,
    center_order: u64,
    coxeter_number: u64,
    l: u64,
    n: u64,
    volume_of_f: f64,
    marks: Vec<u64>,
    dual_marks: Vec<u64>,
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Info { algebra, format } => {
            let d = algebra.data()?;
            match format {
                Format::Json => {
                    let info = InfoJson {
                        algebra: d.lie_type().to_string(),
                        rank: d.rank(),
                        weyl_order: d.weyl_order().to_string(),
                        center_order: d.center_order(),
                        coxeter_number: d.coxeter(),
                        l: d.big_l(),
                        n: d.big_n(),
                        volume_of_f: d.volume_of_f(),
                        marks: d.marks().to_vec(),
                        dual_marks: d.dual_marks().to_vec(),
                    };
                    println!("{}", serde_json::to_string_pretty(&info)?);
                }
                _ => {
                    println!("algebra {}", d.lie_type());
                    println!("rank {}", d.rank());
                    println!("weyl_order {}", d.weyl_order());
                    println!("center_order {}", d.center_order());
                    println!("coxeter_number {}", d.coxeter());
                    println!("L {}", d.big_l());
                    println!("N {}", d.big_n());
                    println!("volume_of_f {}", d.volume_of_f());
                    println!("marks {}", join(d.marks()));
                    println!("dual_marks {}", join(d.dual_marks()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Grid {
            algebra,
            m,
            interior,
            output,
            format,
        } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let points = grids::enumerate_f(&d, m, interior);
            let text = match format {
                Format::Text => formats::write_grid_listing(&d, m, &points),
                Format::Csv => coords_csv("s", d.rank(), points.iter().map(GridPoint::coords)),
                Format::Json => coords_json(&d, m, points.iter().map(GridPoint::coords))?,
            };
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Weights {
            algebra,
            m,
            interior,
            output,
            format,
        } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let points = grids::enumerate_lambda(&d, m, interior);
            let text = match format {
                Format::Text => formats::write_weight_listing(&d, m, &points),
                Format::Csv => coords_csv("t", d.rank(), points.iter().map(WeightPoint::coords)),
                Format::Json => coords_json(&d, m, points.iter().map(WeightPoint::coords))?,
            };
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { algebra, m, format } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let strata = grids::stratify_gcd(&d, m);
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Stratum {
                        k: u64,
                        count: String,
                    }
                    #[derive(Serialize)]
                    struct CountJson {
                        algebra: String,
                        m: u64,
                        f: String,
                        f_interior: String,
                        lambda: String,
                        lambda_interior: String,
                        nu: String,
                        gcd_strata: Vec<Stratum>,
                    }
                    let out = CountJson {
                        algebra: d.lie_type().to_string(),
                        m,
                        f: grids::count_f(&d, m).to_string(),
                        f_interior: grids::count_f_interior(&d, m).to_string(),
                        lambda: grids::count_lambda(&d, m).to_string(),
                        lambda_interior: grids::count_f_interior(&d, m).to_string(),
                        nu: grids::nu(&d, m).to_string(),
                        gcd_strata: strata
                            .iter()
                            .map(|(&k, v)| Stratum {
                                k,
                                count: v.to_string(),
                            })
                            .collect(),
                    };
                    println!("{}", serde_json::to_string_pretty(&out)?);
                }
                _ => {
                    println!("algebra {} M {}", d.lie_type(), m);
                    println!("|F_M| {}", grids::count_f(&d, m));
                    println!("|F~_M| {}", grids::count_f_interior(&d, m));
                    println!("|Lambda_M| {}", grids::count_lambda(&d, m));
                    println!("|Lambda~_M| {}", grids::count_f_interior(&d, m));
                    println!("nu {}", grids::nu(&d, m));
                    println!("gcd_strata");
                    for (k, v) in &strata {
                        println!("  K={k} {v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stab {
            algebra,
            m,
            point,
            dual,
            format,
        } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let coords: Vec<u64> = parse_list("coordinate", &point)?;
            let (report, eps) = if dual {
                let w = WeightPoint::new(&d, m, coords)?;
                (weyl::stabilizer_order_lambda(&d, &w), None)
            } else {
                let p = GridPoint::new(&d, m, coords)?;
                let eps = weyl::epsilon(&d, &p);
                (weyl::stabilizer_order_x(&d, &p), Some(eps))
            };
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct StabJson {
                        order: String,
                        zero_nodes: Vec<usize>,
                        component_weyl_orders: Vec<String>,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        epsilon: Option<String>,
                    }
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&StabJson {
                            order: report.order.to_string(),
                            zero_nodes: report.zero_nodes.clone(),
                            component_weyl_orders: report
                                .component_weyl_orders
                                .iter()
                                .map(|o| o.to_string())
                                .collect(),
                            epsilon: eps.map(|e| e.to_string()),
                        })?
                    );
                }
                _ => {
                    println!("{} {}", if dual { "h_vee" } else { "h" }, report.order);
                    println!("zero_nodes {}", join(&report.zero_nodes));
                    println!("component_weyl_orders {}", join(&report.component_weyl_orders));
                    if let Some(e) = eps {
                        println!("epsilon {e}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit {
            algebra,
            seed,
            basis,
            cap,
        } => {
            let d = algebra.data()?;
            let seed: Vec<i64> = parse_list("coordinate", &seed)?;
            if seed.len() != d.rank() {
                return Err(anyhow!(
                    "seed needs {} coordinates, got {}",
                    d.rank(),
                    seed.len()
                ));
            }
            let basis = match basis {
                BasisArg::Weight => weyl::CoordBasis::Weight,
                BasisArg::Coweight => weyl::CoordBasis::Coweight,
            };
            let orbit = weyl::orbit(&d, &seed, basis, cap)?;
            println!("orbit_size {}", orbit.len());
            for el in &orbit {
                println!("{} {}", if el.sign > 0 { "+" } else { "-" }, join(&el.coords));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            algebra,
            m,
            kind,
            lambda,
            point,
            at,
            cap,
            format,
        } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let kind = TransformKind::from(kind);
            let lambda = WeightPoint::new(&d, m, parse_list("coordinate", &lambda)?)?;
            let value = match (&point, &at) {
                (Some(p), None) => {
                    let x = GridPoint::new(&d, m, parse_list("coordinate", p)?)?;
                    match kind {
                        TransformKind::C => orbitfun::orbitfn::eval_c_grid(&d, &lambda, &x, cap)?,
                        TransformKind::S => orbitfun::orbitfn::eval_s_grid(&d, &lambda, &x, cap)?,
                    }
                }
                (None, Some(y)) => {
                    let y = RealPoint::new(&d, parse_list("coordinate", y)?)?;
                    match kind {
                        TransformKind::C => orbitfun::orbitfn::eval_c_real(&d, &lambda, &y, cap)?,
                        TransformKind::S => orbitfun::orbitfn::eval_s_real(&d, &lambda, &y, cap)?,
                    }
                }
                _ => return Err(anyhow!("exactly one of --point or --at is required")),
            };
            match format {
                Format::Json => println!("{{\"re\":{},\"im\":{}}}", value.re, value.im),
                _ => println!("{} {}", value.re, value.im),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ctransform {
            algebra,
            m,
            input,
            output,
            cap,
        } => transform_cmd(algebra, m, TransformKind::C, &input, &output, cap),
        Command::Stransform {
            algebra,
            m,
            input,
            output,
            cap,
        } => transform_cmd(algebra, m, TransformKind::S, &input, &output, cap),
        Command::Interpolate {
            algebra,
            m,
            kind,
            coeffs,
            points,
            output,
            cap,
        } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let kind = TransformKind::from(kind);
            let coeffs_text = std::fs::read_to_string(&coeffs)
                .with_context(|| format!("reading {}", coeffs.display()))?;
            let coeffs = formats::read_coeffs(&d, m, kind, &coeffs_text)?;
            let points_text = std::fs::read_to_string(&points)
                .with_context(|| format!("reading {}", points.display()))?;
            let points = formats::read_real_points(&d, &points_text)?;
            let values = transform::interpolate_many(&d, &coeffs, &points, cap)?;
            emit(Some(&output), &formats::write_values(&points, &values))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            algebra,
            m,
            kind,
            tol,
            cap,
            format,
        } => {
            require_positive_m(m)?;
            let d = algebra.data()?;
            let report = transform::verify_orthogonality(&d, m, kind.into(), tol, cap)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct VerifyJson {
                        kind: String,
                        m: u64,
                        size: usize,
                        max_offdiag: f64,
                        max_diag_rel_err: f64,
                        tolerance: f64,
                        passed: bool,
                    }
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&VerifyJson {
                            kind: report.kind.name().into(),
                            m: report.m,
                            size: report.size,
                            max_offdiag: report.max_offdiag,
                            max_diag_rel_err: report.max_diag_rel_err,
                            tolerance: report.tolerance,
                            passed: report.passed,
                        })?
                    );
                }
                _ => println!("{report}"),
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Rmatrix { algebra } => {
            let d = algebra.data()?;
            let generated = grids::generate_r(&d);
            let stored = grids::stored_r(&d);
            println!(
                "R({}) L={} N={}",
                d.lie_type(),
                d.big_l(),
                d.big_n()
            );
            for row in &generated.rows {
                println!("{}", join(row));
            }
            let mut mismatches = Vec::new();
            for (l, (gr, sr)) in generated.rows.iter().zip(&stored.rows).enumerate() {
                for (i, (g, s)) in gr.iter().zip(sr).enumerate() {
                    if g != s {
                        mismatches.push(format!("entry ({l},{i}): generated {g}, stored {s}"));
                    }
                }
            }
            if generated.rows.len() != stored.rows.len() {
                mismatches.push(format!(
                    "row count: generated {}, stored {}",
                    generated.rows.len(),
                    stored.rows.len()
                ));
            }
            if mismatches.is_empty() {
                println!("diff: identical to the stored appendix table");
                Ok(ExitCode::SUCCESS)
            } else {
                for line in &mismatches {
                    println!("diff: {line}");
                }
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn transform_cmd(
    algebra: AlgebraArgs,
    m: u64,
    kind: TransformKind,
    input: &Path,
    output: &Path,
    cap: u64,
) -> Result<ExitCode> {
    require_positive_m(m)?;
    let d = algebra.data()?;
    let text =
        std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let samples: SampleSet = formats::read_samples(&d, m, kind, &text)?;
    if kind == TransformKind::S && m < d.coxeter() {
        eprintln!(
            "warning[W_EMPTY_GRID]: F~_M is empty for M = {m} < coxeter number {}; writing an empty coefficient set",
            d.coxeter()
        );
    }
    let coeffs = match kind {
        TransformKind::C => transform::ctransform(&d, &samples, cap)?,
        TransformKind::S => transform::stransform(&d, &samples, cap)?,
    };
    emit(Some(output), &formats::write_coeffs(&d, &coeffs))?;
    Ok(ExitCode::SUCCESS)
}

fn require_positive_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(anyhow!("M must be a positive integer"));
    }
    Ok(())
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    let mut out = String::new();
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{item}");
    }
    out
}

fn coords_csv<'a>(
    prefix: &str,
    rank: usize,
    rows: impl Iterator<Item = &'a [u64]>,
) -> String {
    let mut out = (0..=rank)
        .map(|i| format!("{prefix}_{i}"))
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn coords_json<'a>(
    data: &AlgebraData,
    m: u64,
    rows: impl Iterator<Item = &'a [u64]>,
) -> Result<String> {
    #[derive(Serialize)]
    struct Listing {
        algebra: String,
        m: u64,
        count: usize,
        points: Vec<Vec<u64>>,
    }
    let points: Vec<Vec<u64>> = rows.map(<[u64]>::to_vec).collect();
    let mut text = serde_json::to_string_pretty(&Listing {
        algebra: data.lie_type().to_string(),
        m,
        count: points.len(),
        points,
    })?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn series_parsing() {
        let args = AlgebraArgs {
            series: "C".into(),
            rank: 2,
        };
        assert_eq!(args.data().unwrap().lie_type().to_string(), "C2");
        let bad = AlgebraArgs {
            series: "X".into(),
            rank: 2,
        };
        assert!(bad.data().is_err());
        let out_of_range = AlgebraArgs {
            series: "B".into(),
            rank: 2,
        };
        assert!(out_of_range.data().is_err());
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list::<u64>("c", "1, 0,2").unwrap(), vec![1, 0, 2]);
        assert!(parse_list::<u64>("c", "1,x").is_err());
        assert_eq!(parse_list::<f64>("c", "0.5,-1").unwrap(), vec![0.5, -1.0]);
    }
}
