//! Point-cloud loading and per-coordinate standardization.
//!
//! Files are plain comma-separated text with an optional header row. One
//! column may hold class labels (textual or numeric); every other retained
//! column must parse as a finite real number. Labels are remapped to dense
//! ids `0..m` in order of first appearance.

use std::collections::HashMap;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use crate::{Error, Result};

/// `n` points in `R^d` with optional integer class labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DataCloud {
    points: Vec<f64>,
    n: usize,
    d: usize,
    labels: Option<Vec<usize>>,
    label_names: Vec<String>,
}

impl DataCloud {
    /// Builds a cloud from row-major coordinates.
    pub fn new(points: Vec<f64>, d: usize, labels: Option<Vec<usize>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::NoFeatures);
        }
        if points.len() % d != 0 {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: points.len() % d,
            });
        }
        let n = points.len() / d;
        if n < 2 {
            return Err(Error::TooFewPoints(n));
        }
        if let Some(k) = points.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonNumeric {
                row: k / d,
                column: k % d,
                value: points[k].to_string(),
            });
        }
        let label_names = match &labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: l.len(),
                    });
                }
                let classes = l.iter().max().map_or(0, |m| m + 1);
                (0..classes).map(|c| c.to_string()).collect()
            }
            None => Vec::new(),
        };
        Ok(Self {
            points,
            n,
            d,
            labels,
            label_names,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>], labels: Option<Vec<usize>>) -> Result<Self> {
        let d = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != d) {
            return Err(Error::RaggedRow {
                row: bad,
                expected: d,
                found: rows[bad].len(),
            });
        }
        Self::new(rows.concat(), d, labels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.d..(i + 1) * self.d]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.points.chunks_exact(self.d)
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Original label text for each dense id.
    pub fn label_names(&self) -> &[String] {
        &self.label_names
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.points().map(|p| p[j]).collect()
    }
}

/// Options for [`load_csv_with`].
#[derive(Debug, Clone, Default)]
pub struct CsvOptions {
    pub label_column: Option<usize>,
    pub has_header: bool,
    /// Columns dropped entirely (record ids and the like).
    pub skip_columns: Vec<usize>,
}

pub fn load_csv(path: &Path, label_column: Option<usize>, has_header: bool) -> Result<DataCloud> {
    let options = CsvOptions {
        label_column,
        has_header,
        skip_columns: Vec::new(),
    };
    load_csv_path(path, &options)
}

pub fn load_csv_path(path: &Path, options: &CsvOptions) -> Result<DataCloud> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    load_csv_with(file, options)
}

pub fn load_csv_with<R: Read>(reader: R, options: &CsvOptions) -> Result<DataCloud> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(options.has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut width = None;
    let mut points = Vec::new();
    let mut raw_labels = Vec::new();
    let mut d = 0;
    let mut rows = 0;

    for (row, record) in rdr.records().enumerate() {
        let record = record?;
        // Blank trailing lines come through as a single empty field.
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        let expected = *width.get_or_insert(record.len());
        if record.len() != expected {
            return Err(Error::RaggedRow {
                row,
                expected,
                found: record.len(),
            });
        }
        for &c in options.label_column.iter().chain(&options.skip_columns) {
            if c >= expected {
                return Err(Error::ColumnOutOfRange {
                    index: c,
                    columns: expected,
                });
            }
        }
        d = 0;
        for (column, cell) in record.iter().enumerate() {
            if Some(column) == options.label_column {
                raw_labels.push(cell.to_owned());
                continue;
            }
            if options.skip_columns.contains(&column) {
                continue;
            }
            if cell.is_empty() {
                return Err(Error::MissingValue { row, column });
            }
            let value: f64 = cell
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| Error::NonNumeric {
                    row,
                    column,
                    value: cell.to_owned(),
                })?;
            points.push(value);
            d += 1;
        }
        rows += 1;
    }

    if rows < 2 {
        return Err(Error::TooFewPoints(rows));
    }
    if d == 0 {
        return Err(Error::NoFeatures);
    }

    let (labels, label_names) = if options.label_column.is_some() {
        let (ids, names) = dense_labels(&raw_labels);
        (Some(ids), names)
    } else {
        (None, Vec::new())
    };

    Ok(DataCloud {
        points,
        n: rows,
        d,
        labels,
        label_names,
    })
}

fn dense_labels(raw: &[String]) -> (Vec<usize>, Vec<String>) {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut names = Vec::new();
    let labels = raw
        .iter()
        .map(|s| {
            *ids.entry(s.as_str()).or_insert_with(|| {
                names.push(s.clone());
                names.len() - 1
            })
        })
        .collect();
    (labels, names)
}

/// Sample standard deviation (denominator `n - 1`).
pub fn sample_std(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (ss / (n - 1) as f64).sqrt()
}

/// Divides every coordinate by its sample standard deviation.
///
/// Columns with zero spread are left as they are.
pub fn standardize(cloud: &DataCloud) -> DataCloud {
    let scales: Vec<f64> = (0..cloud.d)
        .map(|j| {
            let s = sample_std(&cloud.column(j));
            if s > 0.0 {
                s
            } else {
                1.0
            }
        })
        .collect();
    let points = cloud
        .points()
        .flat_map(|p| p.iter().zip(&scales).map(|(x, s)| x / s))
        .collect();
    DataCloud {
        points,
        ..cloud.clone()
    }
}
