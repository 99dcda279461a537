// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Report envelope and serialization.

use std::fmt;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

/// Bumped whenever a field changes meaning or disappears.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Rows for the CSV form of a report.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }
}

/// Output of one subcommand. `passed` is false when a verification failed.
pub struct Report {
    pub config: Value,
    pub results: Value,
    pub table: Table,
    pub passed: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    config: &'a Value,
    results: &'a Value,
    version: u32,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl Report {
    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Json => {
                let env = Envelope {
                    config: &self.config,
                    results: &self.results,
                    version: FORMAT_VERSION,
                };
                let mut out =
                    serde_json::to_vec_pretty(&env).map_err(|e| CliError::Io(e.to_string()))?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.header)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                for row in &self.table.rows {
                    w.write_record(row)
                        .map_err(|e| CliError::Io(e.to_string()))?;
                }
                w.into_inner().map_err(|e| CliError::Io(e.to_string()))
            }
        }
    }

    pub fn emit(&self, format: Format, path: Option<&Path>) -> Result<(), CliError> {
        let bytes = self.render(format)?;
        match path {
            Some(p) => {
                std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
            }
            None => std::io::stdout()
                .lock()
                .write_all(&bytes)
                .map_err(|e| CliError::Io(e.to_string())),
        }
    }
}
