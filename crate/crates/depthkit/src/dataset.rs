//! The observation matrix.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{DepthError, Result};
use crate::order;

/// An immutable n×d matrix of observations with column labels.
///
/// Entries are validated to be finite at construction; nothing downstream
/// has to re-check. Rows are observations, columns are coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    values: Vec<f64>, // row-major, n * d
    n: usize,
    d: usize,
    labels: Vec<String>,
}

impl Dataset {
    /// Builds a dataset from observation rows, labeling columns `x1..xd`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let d = match rows.first() {
            Some(r) if !r.is_empty() => r.len(),
            _ => return Err(DepthError::EmptySample),
        };
        let labels = (1..=d).map(|j| format!("x{j}")).collect();
        Self::with_labels(rows, labels)
    }

    /// Builds a dataset from rows and explicit column labels.
    pub fn with_labels(rows: Vec<Vec<f64>>, labels: Vec<String>) -> Result<Self> {
        if rows.is_empty() {
            return Err(DepthError::EmptySample);
        }
        let d = labels.len();
        if d == 0 {
            return Err(DepthError::EmptySample);
        }
        let n = rows.len();
        let mut values = Vec::with_capacity(n * d);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(DepthError::DimensionMismatch { expected: d, got: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(DepthError::NonFiniteInput(format!("row {i}, column {j}")));
                }
                values.push(v);
            }
        }
        Ok(Self { values, n, d, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks_exact(self.d)
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.values[i * self.d + j]).collect()
    }

    /// Coordinatewise lower median, the default center for boundary probes.
    pub fn coordinatewise_median(&self) -> Vec<f64> {
        (0..self.d)
            .map(|j| {
                let mut col = self.column(j);
                order::lower_median(&mut col)
            })
            .collect()
    }

    /// Reads a dataset from CSV. A non-numeric first row is taken as the
    /// header; otherwise columns are labeled `x1..xd`.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut rows: Vec<Vec<f64>> = Vec::new();
        let mut labels: Option<Vec<String>> = None;
        for (i, record) in rdr.records().enumerate() {
            let record = record?;
            let parsed: std::result::Result<Vec<f64>, _> =
                record.iter().map(str::parse::<f64>).collect();
            match parsed {
                Ok(row) => {
                    for (j, v) in row.iter().enumerate() {
                        if !v.is_finite() {
                            return Err(DepthError::NonFiniteInput(format!(
                                "CSV row {}, column {}",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                    rows.push(row);
                }
                Err(_) if i == 0 => {
                    labels = Some(record.iter().map(str::to_owned).collect());
                }
                Err(e) => {
                    return Err(DepthError::InvalidParameter(format!(
                        "CSV row {} is not numeric: {e}",
                        i + 1
                    )));
                }
            }
        }
        match labels {
            Some(labels) => Self::with_labels(rows, labels),
            None => Self::from_rows(rows),
        }
    }

    pub fn from_csv_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::from_csv(std::fs::File::open(path)?)
    }

    /// Writes the dataset as CSV with a label header. Values are formatted
    /// with round-trip precision.
    pub fn to_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", self.labels.join(","))?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_ragged_and_nonfinite() {
        assert!(Dataset::from_rows(vec![]).is_err());
        assert!(Dataset::from_rows(vec![vec![1.0, 2.0], vec![3.0]]).is_err());
        assert!(Dataset::from_rows(vec![vec![1.0, f64::NAN]]).is_err());
        assert!(Dataset::from_rows(vec![vec![f64::INFINITY]]).is_err());
    }

    #[test]
    fn row_and_column_access() {
        let ds = Dataset::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]]).unwrap();
        assert_eq!(ds.n(), 3);
        assert_eq!(ds.d(), 2);
        assert_eq!(ds.row(1), &[3.0, 4.0]);
        assert_eq!(ds.column(1), vec![2.0, 4.0, 6.0]);
        assert_eq!(ds.labels(), &["x1".to_string(), "x2".to_string()]);
    }

    #[test]
    fn coordinatewise_median_uses_lower_convention() {
        let ds = Dataset::from_rows(vec![
            vec![1.0, 10.0],
            vec![2.0, 20.0],
            vec![3.0, 30.0],
            vec![4.0, 40.0],
        ])
        .unwrap();
        assert_eq!(ds.coordinatewise_median(), vec![2.0, 20.0]);
    }

    #[test]
    fn csv_roundtrip_with_header_detection() {
        let csv_text = "a,b\n1.5,2\n-3,4e-1\n";
        let ds = Dataset::from_csv(csv_text.as_bytes()).unwrap();
        assert_eq!(ds.labels(), &["a".to_string(), "b".to_string()]);
        assert_eq!(ds.row(1), &[-3.0, 0.4]);

        let mut out = Vec::new();
        ds.to_csv(&mut out).unwrap();
        let back = Dataset::from_csv(out.as_slice()).unwrap();
        assert_eq!(back, ds);
    }

    #[test]
    fn csv_without_header_gets_default_labels() {
        let ds = Dataset::from_csv("1,2\n3,4\n".as_bytes()).unwrap();
        assert_eq!(ds.labels(), &["x1".to_string(), "x2".to_string()]);
        assert_eq!(ds.n(), 2);
    }

    #[test]
    fn csv_rejects_nan_rows() {
        assert!(Dataset::from_csv("1,2\nNaN,4\n".as_bytes()).is_err());
        assert!(Dataset::from_csv("x,y\n1,2\nfoo,4\n".as_bytes()).is_err());
    }
}
