//! Body documents and file plumbing.

use serde::{Deserialize, Serialize};
use std::io::{Read, Write};
use std::path::Path;
use volprod_core::geometry::{make_polygon, pt, ConvexPolygon, Point2};

/// The on-disk body format: a name, a vertex list, and an optional
/// polarity centre. Vertices round-trip through construction unchanged
/// because documents are always written in canonical order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BodyDocument {
    pub name: String,
    pub vertices: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centre: Option<[f64; 2]>,
}

impl BodyDocument {
    pub fn from_polygon(name: &str, k: &ConvexPolygon, centre: Option<Point2>) -> BodyDocument {
        BodyDocument {
            name: name.to_string(),
            vertices: k.vertices().iter().map(|v| [v.x, v.y]).collect(),
            centre: centre.map(|c| [c.x, c.y]),
        }
    }

    pub fn polygon(&self) -> Result<ConvexPolygon, volprod_core::Error> {
        let pts: Vec<Point2> = self.vertices.iter().map(|v| pt(v[0], v[1])).collect();
        make_polygon(&pts)
    }

    pub fn centre_point(&self) -> Option<Point2> {
        self.centre.map(|c| pt(c[0], c[1]))
    }
}

/// A failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn verdict(message: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<volprod_core::Error> for CliError {
    fn from(e: volprod_core::Error) -> CliError {
        let code = match e {
            volprod_core::Error::NoConvergence { .. } => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::usage(format!("i/o error: {e}"))
    }
}

pub fn read_document(input: Option<&Path>) -> Result<BodyDocument, CliError> {
    let mut text = String::new();
    match input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("malformed body JSON: {e}")))
}

pub fn write_output(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, contents)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout().write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

/// Fixed-width scientific notation with 17 significant digits, so repeated
/// runs diff bit for bit.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Optional float column.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}
