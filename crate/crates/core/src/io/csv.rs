//! CSV tables. Floating-point values are written in Rust's shortest
//! round-trip form, so parsing a field gives back the identical `f64`;
//! complex values take two columns, `re` and `im`.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::experiments::{BasinGrid, DiscriminationReport, ResourceEstimate, StabilityRow};
use crate::quantum::{ExactStepOperator, Mat4};
use crate::sphere::ExtendedComplex;

/// Header plus rows of already formatted fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn write_to<W: Write>(&self, out: W) -> std::result::Result<(), csv::Error> {
        let mut w = csv::WriterBuilder::new().flexible(false).from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("fields are UTF-8")
    }
}

pub fn num(x: f64) -> String {
    format!("{x}")
}

/// `(re, im)`; the point at infinity is written as `inf,inf`.
pub fn point(z: ExtendedComplex) -> [String; 2] {
    match z {
        ExtendedComplex::Finite(w) => [num(w.re), num(w.im)],
        ExtendedComplex::Infinity => [num(f64::INFINITY), num(f64::INFINITY)],
    }
}

pub fn write_csv(table: &Table, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    table.write_to(file).map_err(|e| Error::csv(path, e))
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Table> {
    let path = path.as_ref();
    let mut r = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    let header = r
        .headers()
        .map_err(|e| Error::csv(path, e))?
        .iter()
        .map(str::to_string)
        .collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|r| r.iter().map(str::to_string).collect()))
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::csv(path, e))?;
    Ok(Table { header, rows })
}

/// One line per attracting cycle; angles without one get empty fields.
pub fn stability_table(rows: &[StabilityRow]) -> Table {
    let mut t = Table::new(&[
        "varphi",
        "abs_lambda_0",
        "abs_lambda_plus1",
        "abs_lambda_minus1",
        "detected_period",
        "detected_abs_lambda",
    ]);
    for r in rows {
        let head = [r.varphi, r.abs_lambda_zero, r.abs_lambda_plus, r.abs_lambda_minus].map(num);
        if r.cycles.is_empty() {
            let mut line = head.to_vec();
            line.extend([String::new(), String::new()]);
            t.push(line);
        }
        for &(period, lambda) in &r.cycles {
            let mut line = head.to_vec();
            line.extend([period.to_string(), num(lambda)]);
            t.push(line);
        }
    }
    t
}

pub fn discrimination_table(report: &DiscriminationReport) -> Table {
    let mut t = Table::new(&["step", "mean_overlap", "rms", "failures"]);
    for s in &report.steps {
        t.push(vec![
            s.step.to_string(),
            num(s.mean_overlap),
            num(s.rms),
            s.failures.to_string(),
        ]);
    }
    t
}

/// Cell midpoints with attractor index (empty when unresolved).
pub fn basin_table(grid: &BasinGrid) -> Table {
    let mut t = Table::new(&["x", "y", "attractor_id", "iterations"]);
    for row in 0..grid.height {
        for col in 0..grid.width {
            let z = grid.center(col, row);
            let c = grid.cell(col, row);
            t.push(vec![
                num(z.re),
                num(z.im),
                c.attractor.map(|a| a.to_string()).unwrap_or_default(),
                c.iterations.to_string(),
            ]);
        }
    }
    t
}

pub fn resource_table(rows: &[ResourceEstimate]) -> Table {
    let mut t = Table::new(&["iterations", "varphi", "pairs"]);
    for r in rows {
        t.push(vec![r.iterations.to_string(), num(r.varphi), r.pairs.to_string()]);
    }
    t
}

pub fn points_table(points: &[ExtendedComplex]) -> Table {
    let mut t = Table::new(&["index", "re", "im"]);
    for (i, z) in points.iter().enumerate() {
        let [re, im] = point(*z);
        t.push(vec![i.to_string(), re, im]);
    }
    t
}

/// The 16 matrix entries, row-major, as `re,im` lines.
pub fn operator_table(m: &Mat4) -> Table {
    let mut t = Table::new(&["re", "im"]);
    for x in m.iter().flatten() {
        t.push(vec![num(x.re), num(x.im)]);
    }
    t
}

pub fn write_operator_csv(op: &ExactStepOperator, path: impl AsRef<Path>) -> Result<()> {
    write_csv(&operator_table(&op.m), path)
}

/// Reads a matrix written by [`write_operator_csv`].
pub fn read_operator_csv(path: impl AsRef<Path>) -> Result<Mat4> {
    let path = path.as_ref();
    let bad = |reason: String| Error::Format {
        path: path.to_path_buf(),
        reason,
    };
    let t = read_csv(path)?;
    if t.header != ["re", "im"] {
        return Err(bad(format!("header {:?} is not re,im", t.header)));
    }
    if t.rows.len() != 16 {
        return Err(bad(format!("expected 16 entries, found {}", t.rows.len())));
    }
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (k, row) in t.rows.iter().enumerate() {
        let parse = |s: &String| {
            s.parse::<f64>()
                .map_err(|e| bad(format!("entry {k}: {s:?}: {e}")))
        };
        m[k / 4][k % 4] = Complex64::new(parse(&row[0])?, parse(&row[1])?);
    }
    Ok(m)
}
