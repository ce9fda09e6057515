use cxj_core::rational::{format_rational, to_decimal};
use cxj_core::{standard_polarization, zhang_audit, Genus};
use serde::Serialize;

use crate::render::{csv_escape, Format, DECIMAL_PLACES};
use crate::CliError;

pub const DEFAULT_G_MIN: i64 = 2;
pub const DEFAULT_G_MAX: i64 = 12;

pub const CSV_HEADER: &str = "g,e1,e2,h,mean,margin,e1_dec,h_dec";

/// Successive minima and curve height of `ℒ` in one genus. Rational
/// cells are exact; `*_dec` cells are display-only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub g: u32,
    pub e1: String,
    pub e2: String,
    pub h: String,
    pub mean: String,
    pub margin: String,
    pub e1_dec: String,
    pub h_dec: String,
}

impl TableRow {
    pub fn for_genus(g: Genus) -> Result<Self, CliError> {
        let audit = zhang_audit(&standard_polarization(g))?;
        let mean = (&audit.e1 + &audit.e2) / cxj_core::rational::int(2);
        Ok(TableRow {
            g: g.get(),
            e1: format_rational(&audit.e1),
            e2: format_rational(&audit.e2),
            h: format_rational(&audit.h_curve),
            mean: format_rational(&mean),
            margin: format_rational(&audit.violation_margin),
            e1_dec: to_decimal(&audit.e1, DECIMAL_PLACES),
            h_dec: to_decimal(&audit.h_curve, DECIMAL_PLACES),
        })
    }

    fn cells(&self) -> [String; 8] {
        [
            self.g.to_string(),
            self.e1.clone(),
            self.e2.clone(),
            self.h.clone(),
            self.mean.clone(),
            self.margin.clone(),
            self.e1_dec.clone(),
            self.h_dec.clone(),
        ]
    }
}

pub fn build_table(g_min: i64, g_max: i64) -> Result<Vec<TableRow>, CliError> {
    if g_min < 2 {
        return Err(CliError::Usage(format!("table: g_min must be at least 2, got {g_min}")));
    }
    if g_min > g_max {
        return Err(CliError::Usage(format!("table: g_min = {g_min} exceeds g_max = {g_max}")));
    }
    (g_min..=g_max).map(|g| TableRow::for_genus(Genus::new(g)?)).collect()
}

pub fn render_table(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row.cells().iter().map(|c| csv_escape(c)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let header: Vec<String> = CSV_HEADER.split(',').map(str::to_string).collect();
            let body: Vec<[String; 8]> = rows.iter().map(TableRow::cells).collect();
            let widths: Vec<usize> =
                (0..8).map(|i| body.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0)).collect();
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(&header);
            for r in &body {
                out.push_str(&line(r));
            }
            out
        }
    }
}
