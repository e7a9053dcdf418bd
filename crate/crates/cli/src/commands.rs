use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use pearcey::asymptotics::{saddle_contribution, AUTO_THRESHOLD};
use pearcey::branch::polar_pi;
use pearcey::tables::{preset, reproduce_row, TableCell};
use pearcey::{
    classify_region, pearcey_asymptotic, pearcey_quadrature, stokes_classification, CoefficientTable, Complex64,
    EvalPoint, QuadratureConfig, Saddle,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::format_complex;
use crate::{CliError, CoeffsArgs, EvalArgs, Format, MapArgs, Method, Oracle, TableArgs};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pair {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Pair {
    fn from(z: Complex64) -> Self {
        Pair { re: z.re, im: z.im }
    }
}

#[derive(Debug, Serialize)]
pub struct EvalReport {
    pub x: Pair,
    pub y: Pair,
    pub method: String,
    pub order: Option<usize>,
    pub region: Option<String>,
    pub value: Pair,
    pub first_omitted_magnitude: Option<f64>,
    pub warnings: Vec<String>,
}

fn oracle_config(oracle: Oracle) -> QuadratureConfig {
    match oracle {
        Oracle::Contour => QuadratureConfig::contour(),
        Oracle::RealAxis => QuadratureConfig::real_axis(),
    }
}

fn oracle_name(oracle: Oracle) -> &'static str {
    match oracle {
        Oracle::Contour => "contour",
        Oracle::RealAxis => "real-axis",
    }
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to standard output: {e}"))),
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let io_err = |e: csv::Error| CliError::Io(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(&row).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

fn json_text<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn eval(args: &EvalArgs) -> Result<(), CliError> {
    let y = match (args.y, args.y_mod, args.y_arg_pi) {
        (Some(y), _, _) => y,
        (None, Some(m), Some(q)) => polar_pi(m, q),
        _ => unreachable!("clap enforces one form of y"),
    };
    let x = args.x;
    let method = match args.method {
        Method::Auto if y.norm() >= AUTO_THRESHOLD => Method::Asymptotic,
        Method::Auto => Method::Quadrature,
        m => m,
    };
    let report = match method {
        Method::Asymptotic => {
            let r = pearcey_asymptotic(x, y, args.order)?;
            EvalReport {
                x: x.into(),
                y: y.into(),
                method: "asymptotic".into(),
                order: Some(r.order),
                region: Some(r.region.label().into()),
                value: r.value.into(),
                first_omitted_magnitude: Some(r.first_omitted_magnitude),
                warnings: r.warnings,
            }
        }
        _ => {
            let value = pearcey_quadrature(x, y, &oracle_config(args.oracle))?;
            EvalReport {
                x: x.into(),
                y: y.into(),
                method: "quadrature".into(),
                order: None,
                region: EvalPoint::new(x, y).ok().map(|p| p.region().label().into()),
                value: value.into(),
                first_omitted_magnitude: None,
                warnings: Vec::new(),
            }
        }
    };

    if args.json {
        return emit(None, &json_text(&report)?);
    }
    let mut text = format!(
        "P({}, {}) = {}\nmethod: {}",
        format_complex(x),
        format_complex(y),
        format_complex(Complex64::new(report.value.re, report.value.im)),
        report.method
    );
    if let Some(n) = report.order {
        text.push_str(&format!(" (N = {n})"));
    }
    if method == Method::Quadrature {
        text.push_str(&format!(" ({})", oracle_name(args.oracle)));
    }
    if let Some(region) = &report.region {
        text.push_str(&format!("\nregion: {region}"));
    }
    if let Some(g) = report.first_omitted_magnitude {
        text.push_str(&format!("\nfirst omitted term: {g:e}"));
    }
    for w in &report.warnings {
        text.push_str(&format!("\nwarning: {w}"));
    }
    text.push('\n');
    emit(None, &text)
}

#[derive(Serialize)]
struct CellRecord<'a> {
    y_label: &'a str,
    n: usize,
    rel_error: f64,
}

#[derive(Serialize)]
struct TableReport<'a> {
    table: u8,
    x: Pair,
    oracle: &'static str,
    cells: Vec<CellRecord<'a>>,
}

pub fn table(args: &TableArgs) -> Result<(), CliError> {
    let spec = preset(args.paper_table)
        .ok_or_else(|| CliError::Domain(format!("no preset table {}", args.paper_table)))?;
    let cfg = oracle_config(args.oracle);
    let rows = spec
        .rows
        .par_iter()
        .map(|row| reproduce_row(&spec, row, &cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let cells: Vec<TableCell> = rows.into_iter().flatten().collect();

    let body = match args.format {
        Format::Csv => csv_text(
            &["y_label", "n", "rel_error"],
            cells
                .iter()
                .map(|c| vec![c.y_label.clone(), c.n.to_string(), c.rel_error.to_string()]),
        )?,
        Format::Json => json_text(&TableReport {
            table: args.paper_table,
            x: spec.x.into(),
            oracle: oracle_name(args.oracle),
            cells: cells
                .iter()
                .map(|c| CellRecord {
                    y_label: &c.y_label,
                    n: c.n,
                    rel_error: c.rel_error,
                })
                .collect(),
        })?,
    };
    emit(args.out.as_deref(), &body)
}

#[derive(Serialize)]
struct CoefficientRow {
    n: usize,
    c: Pair,
    a: Pair,
}

#[derive(Serialize)]
struct CoefficientReport {
    x: Pair,
    max_order: usize,
    coefficients: Vec<CoefficientRow>,
}

pub fn coeffs(args: &CoeffsArgs) -> Result<(), CliError> {
    let table = CoefficientTable::build(args.x, args.max_order)?;
    let rows: Vec<CoefficientRow> = (0..=args.max_order)
        .map(|n| CoefficientRow {
            n,
            c: table.moments()[n].into(),
            a: table.series()[n].into(),
        })
        .collect();
    let body = match args.format {
        Format::Csv => csv_text(
            &["n", "c_re", "c_im", "a_re", "a_im"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.c.re.to_string(),
                    r.c.im.to_string(),
                    r.a.re.to_string(),
                    r.a.im.to_string(),
                ]
            }),
        )?,
        Format::Json => json_text(&CoefficientReport {
            x: args.x.into(),
            max_order: args.max_order,
            coefficients: rows,
        })?,
    };
    emit(None, &body)
}

pub fn map(args: &MapArgs) -> Result<(), CliError> {
    let steps = args.grid_arg_steps as usize;
    let rows = (0..steps)
        .into_par_iter()
        .map(|j| {
            let theta = -PI / 2.0 + PI * j as f64 / (steps - 1) as f64;
            let y = Complex64::from_polar(args.y_mod, theta);
            let dominance = stokes_classification(y)?;
            let p1 = saddle_contribution(Saddle::T1, args.x, y, args.order)?;
            let p2 = saddle_contribution(Saddle::T2, args.x, y, args.order)?;
            Ok(vec![
                theta.to_string(),
                (theta / PI).to_string(),
                classify_region(theta).label().to_string(),
                dominance.dominant.label().to_string(),
                p1.norm().to_string(),
                p2.norm().to_string(),
                dominance.on_anti_stokes.to_string(),
            ])
        })
        .collect::<Result<Vec<_>, pearcey::PearceyError>>()?;
    let body = csv_text(
        &["theta", "theta_over_pi", "region", "dominant_term", "abs_p1", "abs_p2", "anti_stokes"],
        rows,
    )?;
    emit(args.out.as_deref(), &body)
}
