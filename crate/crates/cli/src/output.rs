//! Output rendering: pretty text for humans, CSV and JSON for machines.
//!
//! Encoding rules shared by csv and json: exact integers are decimal
//! strings (they outgrow 64-bit JSON numbers around n = 31), reals carry
//! 12 significant digits. Every numeric field is emitted as a string so
//! that parsing an output and re-serializing it is byte-identical.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Csv,
    Json,
}

/// 12 significant digits, scientific notation.
pub fn format_real(x: f64) -> String {
    format!("{x:.11e}")
}

/// One rendered command result: a flat table for csv/json plus a
/// command-specific pretty rendering.
pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Pretty => self.pretty.clone(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        use serde_json::{Map, Value};
        let mut root = Map::new();
        root.insert(
            "command".to_string(),
            Value::String(self.command.to_string()),
        );
        let mut params = Map::new();
        for (key, value) in &self.params {
            params.insert(key.to_string(), Value::String(value.clone()));
        }
        root.insert("params".to_string(), Value::Object(params));
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut object = Map::new();
                for (column, cell) in self.columns.iter().zip(row) {
                    object.insert(column.clone(), Value::String(cell.clone()));
                }
                Value::Object(object)
            })
            .collect();
        root.insert("rows".to_string(), Value::Array(rows));
        let mut out = serde_json::to_string(&Value::Object(root)).expect("valid JSON value");
        out.push('\n');
        out
    }
}

/// Right-aligns a grid of cells into two-space-separated columns.
pub fn align_columns(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            for _ in 0..widths[i].saturating_sub(cell.len()) {
                line.push(' ');
            }
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
