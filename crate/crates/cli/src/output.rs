//! Rendering of command results in the three output formats.

use std::fs;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use crate::Global;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// A command result rendered ahead of time in every format.
#[derive(Debug)]
pub struct Output {
    json: String,
    csv: Vec<Vec<String>>,
    plain: Vec<String>,
    /// Set when a verification found a disagreement.
    pub mismatch: bool,
}

impl Output {
    pub fn new<T: Serialize>(value: &T, csv: Vec<Vec<String>>, plain: Vec<String>) -> Result<Self, String> {
        let json = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        Ok(Self {
            json,
            csv,
            plain,
            mismatch: false,
        })
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = match format {
            Format::Json => self.json.clone(),
            Format::Csv => self
                .csv
                .iter()
                .map(|row| row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Plain => self.plain.join("\n"),
        };
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }

    pub fn write(&self, global: &Global) -> io::Result<()> {
        let text = self.render(global.format);
        match &global.output {
            Some(path) => fs::write(path, text),
            None => io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn row<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
