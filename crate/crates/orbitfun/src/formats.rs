//! Plain-text exchange formats: sample/coefficient CSV files validated
//! against the exact grid enumerations, grid listings, and real-point lists.
//!
//! Sample files carry the header `s_0,...,s_n,re,im`; coefficient files
//! `t_0,...,t_n,re,im`. Rows may come in any order but must cover the grid
//! (resp. weight set) exactly, with no duplicates, missing or extra points.
//! Writers emit rows in the canonical descending enumeration order, so
//! identical inputs produce byte-identical files.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::grids::{enumerate_f, enumerate_lambda, GridPoint, WeightPoint};
use crate::orbitfn::RealPoint;
use crate::transform::{CoefficientSet, SampleSet, TransformKind};

fn coord_header(prefix: &str, n: usize) -> String {
    (0..=n)
        .map(|i| format!("{prefix}_{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_samples(data: &AlgebraData, samples: &SampleSet) -> String {
    let grid = enumerate_f(data, samples.m(), samples.kind().interior());
    let mut out = String::new();
    out.push_str(&coord_header("s", data.rank()));
    out.push_str(",re,im\n");
    for (p, v) in grid.iter().zip(samples.values()) {
        push_row(&mut out, p.coords(), *v);
    }
    out
}

pub fn write_coeffs(data: &AlgebraData, coeffs: &CoefficientSet) -> String {
    let weights = enumerate_lambda(data, coeffs.m(), coeffs.kind().interior());
    let mut out = String::new();
    out.push_str(&coord_header("t", data.rank()));
    out.push_str(",re,im\n");
    for (w, v) in weights.iter().zip(coeffs.coeffs()) {
        push_row(&mut out, w.coords(), *v);
    }
    out
}

fn push_row(out: &mut String, coords: &[u64], v: Complex64) {
    for c in coords {
        out.push_str(&c.to_string());
        out.push(',');
    }
    out.push_str(&format!("{},{}\n", v.re, v.im));
}

fn parse_table(
    text: &str,
    prefix: &str,
    n: usize,
) -> Result<Vec<(Vec<u64>, Complex64)>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty file".into()))?;
    let expected = format!("{},re,im", coord_header(prefix, n));
    let normalized: String = header.split(',').map(str::trim).collect::<Vec<_>>().join(",");
    if normalized != expected {
        return Err(Error::Format(format!(
            "bad header: expected `{expected}`, got `{header}`"
        )));
    }
    let mut rows = Vec::new();
    for (ln, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != n + 3 {
            return Err(Error::Format(format!(
                "line {}: expected {} fields, got {}",
                ln + 2,
                n + 3,
                fields.len()
            )));
        }
        let coords: Vec<u64> = fields[..=n]
            .iter()
            .map(|f| {
                f.parse::<u64>().map_err(|_| {
                    Error::Format(format!("line {}: bad coordinate `{f}`", ln + 2))
                })
            })
            .collect::<Result<_>>()?;
        let re: f64 = fields[n + 1]
            .parse()
            .map_err(|_| Error::Format(format!("line {}: bad re value", ln + 2)))?;
        let im: f64 = fields[n + 2]
            .parse()
            .map_err(|_| Error::Format(format!("line {}: bad im value", ln + 2)))?;
        rows.push((coords, Complex64::new(re, im)));
    }
    Ok(rows)
}

/// Validates row coordinates against the canonical enumeration and returns
/// the values in canonical order.
fn align<T: PointCoords>(
    rows: Vec<(Vec<u64>, Complex64)>,
    enumeration: &[T],
    what: &str,
) -> Result<Vec<Complex64>> {
    let mut map: HashMap<Vec<u64>, Complex64> = HashMap::with_capacity(rows.len());
    for (coords, v) in rows {
        if map.insert(coords.clone(), v).is_some() {
            return Err(Error::IncompleteSampleSet(format!(
                "duplicate {what} {coords:?}"
            )));
        }
    }
    let mut out = Vec::with_capacity(enumeration.len());
    for p in enumeration {
        match map.remove(p.coords()) {
            Some(v) => out.push(v),
            None => {
                return Err(Error::IncompleteSampleSet(format!(
                    "missing {what} {:?}",
                    p.coords()
                )))
            }
        }
    }
    if let Some(extra) = map.keys().next() {
        return Err(Error::IncompleteSampleSet(format!(
            "{what} {extra:?} is not on the grid"
        )));
    }
    Ok(out)
}

trait PointCoords {
    fn coords(&self) -> &[u64];
}

impl PointCoords for GridPoint {
    fn coords(&self) -> &[u64] {
        GridPoint::coords(self)
    }
}

impl PointCoords for WeightPoint {
    fn coords(&self) -> &[u64] {
        WeightPoint::coords(self)
    }
}

pub fn read_samples(
    data: &AlgebraData,
    m: u64,
    kind: TransformKind,
    text: &str,
) -> Result<SampleSet> {
    let rows = parse_table(text, "s", data.rank())?;
    let grid = enumerate_f(data, m, kind.interior());
    let values = align(rows, &grid, "sample point")?;
    SampleSet::new(data, m, kind, values)
}

pub fn read_coeffs(
    data: &AlgebraData,
    m: u64,
    kind: TransformKind,
    text: &str,
) -> Result<CoefficientSet> {
    let rows = parse_table(text, "t", data.rank())?;
    let weights = enumerate_lambda(data, m, kind.interior());
    let values = align(rows, &weights, "weight")?;
    CoefficientSet::new(data, m, kind, values)
}

/// Grid listing: `# type rank M count` header, one point per line,
/// coordinates space-separated.
pub fn write_grid_listing(data: &AlgebraData, m: u64, points: &[GridPoint]) -> String {
    let mut out = format!(
        "# {} {} {} {}\n",
        data.lie_type().series().letter(),
        data.rank(),
        m,
        points.len()
    );
    for p in points {
        let row: Vec<String> = p.coords().iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_weight_listing(data: &AlgebraData, m: u64, points: &[WeightPoint]) -> String {
    let mut out = format!(
        "# {} {} {} {}\n",
        data.lie_type().series().letter(),
        data.rank(),
        m,
        points.len()
    );
    for p in points {
        let row: Vec<String> = p.coords().iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Real-point list: header `y_1,...,y_n`, one point per line.
pub fn read_real_points(data: &AlgebraData, text: &str) -> Result<Vec<RealPoint>> {
    let n = data.rank();
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty points file".into()))?;
    let expected = (1..=n)
        .map(|i| format!("y_{i}"))
        .collect::<Vec<_>>()
        .join(",");
    let normalized: String = header.split(',').map(str::trim).collect::<Vec<_>>().join(",");
    if normalized != expected {
        return Err(Error::Format(format!(
            "bad header: expected `{expected}`, got `{header}`"
        )));
    }
    let mut out = Vec::new();
    for (ln, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != n {
            return Err(Error::Format(format!(
                "line {}: expected {n} coordinates, got {}",
                ln + 2,
                fields.len()
            )));
        }
        let y: Vec<f64> = fields
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| Error::Format(format!("line {}: bad coordinate `{f}`", ln + 2)))
            })
            .collect::<Result<_>>()?;
        out.push(RealPoint::new(data, y)?);
    }
    Ok(out)
}

/// Values at real points: `y_1,...,y_n,re,im`.
pub fn write_values(points: &[RealPoint], values: &[Complex64]) -> String {
    let n = points.first().map_or(0, |p| p.coords().len());
    let mut out = (1..=n)
        .map(|i| format!("y_{i}"))
        .collect::<Vec<_>>()
        .join(",");
    out.push_str(",re,im\n");
    for (p, v) in points.iter().zip(values) {
        for c in p.coords() {
            out.push_str(&format!("{c},"));
        }
        out.push_str(&format!("{},{}\n", v.re, v.im));
    }
    out
}
