//! 2-D point samples: data model, CSV ingestion, validation.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// A single observation in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// An ordered, immutable collection of observed (x, y) pairs.
///
/// Duplicate points are allowed; the quadrant-counting tie rules handle them.
#[derive(Debug, Clone)]
pub struct Sample2D {
    points: Vec<Point2D>,
    label: String,
}

impl Sample2D {
    /// Builds a sample and validates it (non-empty, all coordinates finite).
    pub fn new(points: Vec<Point2D>, label: impl Into<String>) -> Result<Self> {
        let s = Sample2D {
            points,
            label: label.into(),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn points(&self) -> &[Point2D] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.x)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.y)
    }

    /// Checks the sample invariants: length >= 1 and every point finite.
    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::EmptySample {
                label: self.label.clone(),
            });
        }
        for (i, p) in self.points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite {
                    label: self.label.clone(),
                    index: i,
                });
            }
        }
        Ok(())
    }

    /// Loads a sample from a CSV file: one point per row, columns x then y.
    ///
    /// Extra columns are ignored (a warning is emitted once on stderr).
    /// Blank lines are skipped. Numbers may use scientific notation; the
    /// decimal separator is always the period.
    pub fn load_csv(path: impl AsRef<Path>, has_header: bool) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());

        let mut points = Vec::new();
        let mut warned_extra = false;
        for (i, line) in text.lines().enumerate() {
            let row = i + 1;
            if i == 0 && has_header {
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() < 2 {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    row,
                    message: format!("expected at least 2 fields, found {}", fields.len()),
                });
            }
            if fields.len() > 2 && !warned_extra {
                eprintln!(
                    "warning: {}: rows have more than 2 columns; extra columns are ignored",
                    path.display()
                );
                warned_extra = true;
            }
            let parse = |field: &str, name: &str| -> Result<f64> {
                field.trim().parse::<f64>().map_err(|_| Error::Parse {
                    path: path.to_path_buf(),
                    row,
                    message: format!("cannot parse {name} value '{}'", field.trim()),
                })
            };
            let x = parse(fields[0], "x")?;
            let y = parse(fields[1], "y")?;
            points.push(Point2D::new(x, y));
        }

        if points.is_empty() {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                row: if has_header { 2 } else { 1 },
                message: "no data rows".to_string(),
            });
        }
        Sample2D::new(points, label)
    }

    /// Serializes the point sequence back to CSV text (17 significant digits,
    /// enough to round-trip any f64 exactly).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            out.push_str(&format!("{:.17e},{:.17e}\n", p.x, p.y));
        }
        out
    }
}
