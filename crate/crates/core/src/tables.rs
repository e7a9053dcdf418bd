//! Relative-error benchmark grids: the expansion truncated after `A_n`,
//! `n = 0..=5`, against a quadrature reference, for a fixed `x` and a list
//! of `y` values given as `modulus · e^{iπ·arg_pi}`.

use num_complex::Complex64;

use crate::asymptotics::pearcey_asymptotic;
use crate::branch::polar_pi;
use crate::error::Result;
use crate::oracle::{pearcey_quadrature, relative_error, QuadratureConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub label: &'static str,
    pub modulus: f64,
    /// Argument of `y` in units of `π`.
    pub arg_pi: f64,
}

impl TableRow {
    pub fn y(&self) -> Complex64 {
        polar_pi(self.modulus, self.arg_pi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub name: &'static str,
    pub x: Complex64,
    pub rows: Vec<TableRow>,
    pub orders: Vec<usize>,
    /// Expected relative errors, `reference[row][order]`.
    pub reference: Vec<[f64; 6]>,
}

const fn row(label: &'static str, modulus: f64, arg_pi: f64) -> TableRow {
    TableRow { label, modulus, arg_pi }
}

/// `x = 1`.
pub fn table1() -> TableSpec {
    TableSpec {
        name: "table1",
        x: Complex64::new(1.0, 0.0),
        rows: vec![
            row("5", 5.0, 0.0),
            row("10", 10.0, 0.0),
            row("20e^{ipi/4}", 20.0, 0.25),
            row("20e^{-3ipi/8}", 20.0, -0.375),
            row("30", 30.0, 0.0),
            row("40", 40.0, 0.0),
            row("50", 50.0, 0.0),
        ],
        orders: (0..=5).collect(),
        reference: vec![
            [0.222317, 0.101075, 0.0000918203, 0.00372178, 0.000876593, 0.00302324],
            [0.0316421, 0.00261898, 0.00112219, 0.000403251, 0.0000783942, 0.0000639694],
            [0.0292638, 0.00517274, 0.000228056, 0.0000486543, 0.0000154281, 4.73317e-6],
            [0.0296318, 0.00517473, 0.000223576, 0.0000434364, 0.0000166979, 5.11767e-6],
            [0.00299077, 0.00224863, 0.0000906066, 8.36063e-6, 2.84074e-6, 5.29933e-7],
            [0.0413675, 0.00287761, 0.0000658777, 0.0000213951, 1.41449e-6, 3.58447e-7],
            [0.0291708, 0.00152467, 0.0000388369, 0.0000100058, 4.79637e-7, 1.23074e-7],
        ],
    }
}

/// `x = -2`.
///
/// The third row is evaluated at `20e^{iπ/8}`: the reference errors for that
/// row agree with this point to all six printed digits, while `y = 20` gives
/// different values (0.33152 at `n = 0`). Cell `(40, n = 1)` is recorded as
/// `7.5983e-6`; it was printed with the same digits two decades too large.
pub fn table2() -> TableSpec {
    TableSpec {
        name: "table2",
        x: Complex64::new(-2.0, 0.0),
        rows: vec![
            row("5", 5.0, 0.0),
            row("10", 10.0, 0.0),
            row("20e^{ipi/8}", 20.0, 0.125),
            row("30e^{ipi/4}", 30.0, 0.25),
            row("30e^{-3ipi/8}", 30.0, -0.375),
            row("40", 40.0, 0.0),
            row("50", 50.0, 0.0),
        ],
        orders: (0..=5).collect(),
        reference: vec![
            [0.137947, 0.0410408, 0.0115823, 0.00357474, 0.0159012, 0.00749881],
            [0.0443761, 0.0102376, 0.00254929, 0.000330121, 0.00115553, 0.000371235],
            [0.0312556, 0.00192754, 0.00045748, 0.000173494, 0.00006291, 0.0000168014],
            [0.0237833, 0.00108374, 0.000209653, 0.0000599538, 0.0000165985, 3.36842e-6],
            [0.023678, 0.00109324, 0.000206658, 0.0000588055, 0.0000164115, 3.3194e-6],
            [0.023888, 7.5983e-6, 0.000110305, 0.0000383009, 2.30021e-6, 1.02546e-6],
            [0.00206123, 0.000599664, 0.0000920699, 6.27624e-7, 3.52299e-6, 5.09017e-7],
        ],
    }
}

pub fn preset(index: u8) -> Option<TableSpec> {
    match index {
        1 => Some(table1()),
        2 => Some(table2()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableCell {
    pub y_label: String,
    pub n: usize,
    pub rel_error: f64,
}

/// Relative errors of one row against a single quadrature reference.
pub fn reproduce_row(spec: &TableSpec, row: &TableRow, cfg: &QuadratureConfig) -> Result<Vec<TableCell>> {
    let y = row.y();
    let reference = pearcey_quadrature(spec.x, y, cfg)?;
    let top = spec.orders.iter().copied().max().unwrap_or(0);
    let expansion = pearcey_asymptotic(spec.x, y, top)?;
    spec.orders
        .iter()
        .map(|&n| {
            Ok(TableCell {
                y_label: row.label.to_string(),
                n,
                rel_error: relative_error(expansion.partial_sums[n], reference)?,
            })
        })
        .collect()
}

/// All cells in row-major order (rows as listed, orders ascending).
pub fn reproduce(spec: &TableSpec, cfg: &QuadratureConfig) -> Result<Vec<TableCell>> {
    let mut cells = Vec::with_capacity(spec.rows.len() * spec.orders.len());
    for row in &spec.rows {
        cells.extend(reproduce_row(spec, row, cfg)?);
    }
    Ok(cells)
}
