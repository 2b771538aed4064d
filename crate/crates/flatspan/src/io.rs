//! Configuration files: versioned JSON with exact rational coordinates.
//!
//! The on-disk shape is `{schema, ambient_dim, projective, points}` where
//! each point carries string coordinates ("a" or "a/b", lowest terms) and an
//! optional multiplicity. Affine files (`projective: false`) list
//! `ambient_dim` coordinates per point and are embedded by prepending 1;
//! projective files list `ambient_dim + 1`. Saving always emits canonical
//! homogeneous coordinates, so save -> load -> save is byte-stable.

use crate::point::Point;
use crate::pointset::{Configuration, MultiPointSet, PointSet};
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use thiserror::Error;

pub const CONFIG_SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("point {point_index}, coordinate {coord_index}: {message}")]
    Rational {
        point_index: usize,
        coord_index: usize,
        message: String,
    },
    #[error("{0}")]
    Config(String),
}

#[derive(Serialize, Deserialize)]
struct PointRecord {
    coords: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct ConfigRecord {
    schema: u32,
    ambient_dim: usize,
    projective: bool,
    points: Vec<PointRecord>,
}

/// A configuration loaded from a file: a plain point set when no entry
/// carries a multiplicity, a multiset otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadedConfig {
    Points(PointSet),
    Multi(MultiPointSet),
}

impl Configuration for LoadedConfig {
    fn ambient_dim(&self) -> usize {
        match self {
            LoadedConfig::Points(s) => s.ambient_dim(),
            LoadedConfig::Multi(m) => m.ambient_dim(),
        }
    }

    fn support(&self) -> &[Point] {
        match self {
            LoadedConfig::Points(s) => s.support(),
            LoadedConfig::Multi(m) => m.support(),
        }
    }

    fn multiplicity(&self, index: usize) -> u64 {
        match self {
            LoadedConfig::Points(s) => s.multiplicity(index),
            LoadedConfig::Multi(m) => m.multiplicity(index),
        }
    }

    fn total_weight(&self) -> u64 {
        match self {
            LoadedConfig::Points(s) => s.total_weight(),
            LoadedConfig::Multi(m) => m.total_weight(),
        }
    }
}

impl From<PointSet> for LoadedConfig {
    fn from(s: PointSet) -> Self {
        LoadedConfig::Points(s)
    }
}

impl From<MultiPointSet> for LoadedConfig {
    fn from(m: MultiPointSet) -> Self {
        LoadedConfig::Multi(m)
    }
}

fn parse_coords(
    point_index: usize,
    raw: &[String],
    ambient: usize,
    projective: bool,
) -> Result<Point, ParseError> {
    let expected = if projective { ambient + 1 } else { ambient };
    if raw.len() != expected {
        return Err(ParseError::Config(format!(
            "point {point_index} has {} coordinates, expected {expected}",
            raw.len()
        )));
    }
    let mut coords = Vec::with_capacity(raw.len());
    for (coord_index, text) in raw.iter().enumerate() {
        let value: Scalar = parse_scalar(text).map_err(|e| ParseError::Rational {
            point_index,
            coord_index,
            message: e.to_string(),
        })?;
        coords.push(value);
    }
    let point = if projective {
        Point::new(coords)
    } else {
        Ok(Point::embed_affine(&coords))
    };
    point.map_err(|e| ParseError::Config(format!("point {point_index}: {e}")))
}

pub fn parse_config(text: &str) -> Result<LoadedConfig, ParseError> {
    let record: ConfigRecord = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if record.schema != CONFIG_SCHEMA {
        return Err(ParseError::Config(format!(
            "unsupported schema {}, expected {CONFIG_SCHEMA}",
            record.schema
        )));
    }
    let weighted = record.points.iter().any(|p| p.multiplicity.is_some());
    let mut occurrences = Vec::with_capacity(record.points.len());
    for (i, p) in record.points.iter().enumerate() {
        let point = parse_coords(i, &p.coords, record.ambient_dim, record.projective)?;
        let multiplicity = p.multiplicity.unwrap_or(1);
        if multiplicity == 0 {
            return Err(ParseError::Config(format!(
                "point {i} has multiplicity 0"
            )));
        }
        occurrences.push((point, multiplicity));
    }
    if weighted {
        let multi = MultiPointSet::from_occurrences(record.ambient_dim, occurrences)
            .map_err(|e| ParseError::Config(e.to_string()))?;
        Ok(LoadedConfig::Multi(multi))
    } else {
        let points = occurrences.into_iter().map(|(p, _)| p).collect();
        let set = PointSet::new(record.ambient_dim, points)
            .map_err(|e| ParseError::Config(e.to_string()))?;
        Ok(LoadedConfig::Points(set))
    }
}

pub fn load_config(path: &Path) -> Result<LoadedConfig, ParseError> {
    parse_config(&fs::read_to_string(path)?)
}

fn point_record(point: &Point, multiplicity: Option<u64>) -> PointRecord {
    PointRecord {
        coords: point.coords().iter().map(format_scalar).collect(),
        multiplicity,
    }
}

/// Canonical serialization: homogeneous coordinates, declaration key order,
/// trailing newline. Byte-identical for equal configurations.
pub fn config_to_string(config: &LoadedConfig) -> String {
    let points = match config {
        LoadedConfig::Points(s) => s.support().iter().map(|p| point_record(p, None)).collect(),
        LoadedConfig::Multi(m) => m
            .entries()
            .map(|(p, mult)| point_record(p, Some(mult)))
            .collect(),
    };
    let record = ConfigRecord {
        schema: CONFIG_SCHEMA,
        ambient_dim: config.ambient_dim(),
        projective: true,
        points,
    };
    let mut text = serde_json::to_string_pretty(&record).expect("config serialization");
    text.push('\n');
    text
}

pub fn save_config(config: &LoadedConfig, path: &Path) -> Result<(), ParseError> {
    fs::write(path, config_to_string(config))?;
    Ok(())
}
