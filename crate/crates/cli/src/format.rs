//! Instance and solution file formats.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use rbcenter::{Instance, Point, PointSet, Solution};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub dim: usize,
    pub alpha: f64,
    pub p: usize,
    pub q: usize,
    pub points: Vec<Vec<f64>>,
}

impl InstanceFile {
    pub fn to_instance(&self) -> Result<Instance> {
        if let Some(bad) = self.points.iter().find(|c| c.len() != self.dim) {
            bail!(
                "point {bad:?} has {} coordinates, expected dim = {}",
                bad.len(),
                self.dim
            );
        }
        let points = PointSet::from_coords(self.points.clone())?;
        Ok(Instance::new(points, self.p, self.q, self.alpha)?)
    }
}

/// Counts and separation for CSV input, which carries only coordinates.
#[derive(Debug, Clone, Copy, Default)]
pub struct CsvParams {
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub alpha: Option<f64>,
}

fn parse_csv(text: &str, params: CsvParams) -> Result<InstanceFile> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record?;
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(coords) => points.push(coords),
            // a non-numeric first row is a header
            Err(_) if row == 0 => continue,
            Err(e) => bail!("row {}: {e}", row + 1),
        }
    }
    let dim = points.first().map_or(0, Vec::len);
    let missing = |flag: &str| anyhow!("CSV input needs --{flag}");
    Ok(InstanceFile {
        dim,
        alpha: params.alpha.ok_or_else(|| missing("alpha"))?,
        p: params.p.ok_or_else(|| missing("p"))?,
        q: params.q.ok_or_else(|| missing("q"))?,
        points,
    })
}

/// Reads a JSON instance, or a CSV of points when the file has a `.csv`
/// extension or does not start with `{`.
pub fn read_instance(path: &Path, params: CsvParams) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) || !text.trim_start().starts_with('{');
    let file = if is_csv {
        parse_csv(&text, params)
    } else {
        serde_json::from_str(&text).map_err(anyhow::Error::from)
    }
    .with_context(|| format!("parsing {}", path.display()))?;
    file.to_instance()
        .with_context(|| format!("invalid instance in {}", path.display()))
}

/// A center as written in a solution file: a bare number is a position on
/// the x-axis, an array is a point in space.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CenterValue {
    Line(f64),
    Space(Vec<f64>),
}

impl CenterValue {
    fn to_point(&self, dim: usize) -> Result<Point> {
        match self {
            CenterValue::Line(x) => Ok(Point::on_line(*x, dim)),
            CenterValue::Space(c) if c.len() == dim => Ok(Point::new(c.clone())?),
            CenterValue::Space(c) => bail!("center {c:?} has {} coordinates, expected {dim}", c.len()),
        }
    }
}

impl From<&f64> for CenterValue {
    fn from(x: &f64) -> Self {
        CenterValue::Line(*x)
    }
}

impl From<&Point> for CenterValue {
    fn from(p: &Point) -> Self {
        CenterValue::Space(p.coords().to_vec())
    }
}

/// Solver output. Field order is the serialized key order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionFile {
    pub mode: String,
    pub radius: f64,
    pub red: Vec<CenterValue>,
    pub blue: Vec<CenterValue>,
    pub valid: bool,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_radius: Option<f64>,
}

impl SolutionFile {
    pub fn to_solution(&self, dim: usize) -> Result<Solution<Point>> {
        let convert = |cs: &[CenterValue]| cs.iter().map(|c| c.to_point(dim)).collect::<Result<Vec<_>>>();
        Ok(Solution {
            red: convert(&self.red)?,
            blue: convert(&self.blue)?,
            radius: self.radius,
        })
    }
}

pub fn read_solution(path: &Path) -> Result<SolutionFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
