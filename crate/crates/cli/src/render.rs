use std::fmt::Write as _;

use cxj_core::rational::{format_rational, to_decimal};
use cxj_core::Rational;
use serde_json::{Map, Value};

pub const DECIMAL_PLACES: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Rational(Rational),
    Int(i64),
    Bool(bool),
    Str(String),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Rational(r) => format_rational(r),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Str(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Rational(r) => Value::String(format_rational(r)),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Str(s) => Value::String(s.clone()),
        }
    }
}

/// One command result: a human-readable text block plus ordered fields
/// for the structured formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub text: String,
    pub fields: Vec<(&'static str, Cell)>,
}

impl Record {
    pub fn new(text: impl Into<String>) -> Self {
        Record { text: text.into(), fields: Vec::new() }
    }

    pub fn field(mut self, key: &'static str, cell: Cell) -> Self {
        self.fields.push((key, cell));
        self
    }

    pub fn rational(self, key: &'static str, r: &Rational) -> Self {
        self.field(key, Cell::Rational(r.clone()))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => ensure_newline(self.text.clone()),
            Format::Csv => {
                let header: Vec<&str> = self.fields.iter().map(|(k, _)| *k).collect();
                let row: Vec<String> = self.fields.iter().map(|(_, v)| csv_escape(&v.plain())).collect();
                format!("{}\n{}\n", header.join(","), row.join(","))
            }
            Format::Json => {
                let map: Map<String, Value> = self.fields.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
                ensure_newline(serde_json::to_string_pretty(&Value::Object(map)).expect("json map serializes"))
            }
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub(crate) fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `p/q (d.dddddd)`; the decimal is a display-only annotation.
pub fn annotated(r: &Rational) -> String {
    let mut s = format_rational(r);
    let _ = write!(s, " ({})", to_decimal(r, DECIMAL_PLACES));
    s
}
