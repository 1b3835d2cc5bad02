//! Reports as ordered JSON records, rendered as a text table, JSON or CSV.

use std::io::Write;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// One record, rendered as `key  value` lines or a JSON object.
    Record,
    /// Rows sharing the same keys.
    Rows,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub title: String,
    pub shape: Shape,
    pub rows: Vec<Map<String, Value>>,
    /// Extra fields shown after a table and wrapped around the rows in JSON.
    pub summary: Map<String, Value>,
}

impl Report {
    pub fn record(title: impl Into<String>, record: Map<String, Value>) -> Self {
        Self { title: title.into(), shape: Shape::Record, rows: vec![record], summary: Map::new() }
    }

    pub fn rows(title: impl Into<String>, rows: Vec<Map<String, Value>>) -> Self {
        Self { title: title.into(), shape: Shape::Rows, rows, summary: Map::new() }
    }

    pub fn with_summary(mut self, summary: Map<String, Value>) -> Self {
        self.summary = summary;
        self
    }

    pub fn render(&self, format: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            OutputFormat::Json => self.render_json(out),
            OutputFormat::Csv => self.render_csv(out),
            OutputFormat::Table => self.render_table(out),
        }
    }

    fn render_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let value = match self.shape {
            Shape::Record => Value::Object(self.rows[0].clone()),
            Shape::Rows if self.summary.is_empty() => {
                Value::Array(self.rows.iter().cloned().map(Value::Object).collect())
            }
            Shape::Rows => {
                let mut top = self.summary.clone();
                top.insert("rows".into(), Value::Array(self.rows.iter().cloned().map(Value::Object).collect()));
                Value::Object(top)
            }
        };
        serde_json::to_writer_pretty(&mut *out, &value)?;
        writeln!(out)
    }

    fn render_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let flat: Vec<Vec<(String, String)>> = self.rows.iter().map(flatten).collect();
        let mut writer = csv::Writer::from_writer(out);
        if let Some(first) = flat.first() {
            writer.write_record(first.iter().map(|(k, _)| k))?;
        }
        for row in &flat {
            writer.write_record(row.iter().map(|(_, v)| v))?;
        }
        writer.flush()
    }

    fn render_table(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "{}", self.title)?;
        match self.shape {
            Shape::Record => {
                let entries = flatten(&self.rows[0]);
                key_values(out, &entries)?;
            }
            Shape::Rows => {
                let flat: Vec<Vec<(String, String)>> = self.rows.iter().map(flatten).collect();
                if let Some(first) = flat.first() {
                    let header: Vec<&str> = first.iter().map(|(k, _)| k.as_str()).collect();
                    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
                    for row in &flat {
                        for (w, (_, v)) in widths.iter_mut().zip(row) {
                            *w = (*w).max(v.chars().count());
                        }
                    }
                    let line = |cells: Vec<&str>| {
                        cells
                            .iter()
                            .zip(&widths)
                            .map(|(c, w)| format!("{c:<w$}"))
                            .collect::<Vec<_>>()
                            .join("  ")
                            .trim_end()
                            .to_string()
                    };
                    writeln!(out, "{}", line(header.clone()))?;
                    for row in &flat {
                        writeln!(out, "{}", line(row.iter().map(|(_, v)| v.as_str()).collect()))?;
                    }
                }
                if !self.summary.is_empty() {
                    writeln!(out)?;
                    key_values(out, &flatten(&self.summary))?;
                }
            }
        }
        Ok(())
    }
}

fn key_values(out: &mut dyn Write, entries: &[(String, String)]) -> std::io::Result<()> {
    let width = entries.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in entries {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

/// Nested objects become dotted keys; `null` becomes an empty cell.
fn flatten(record: &Map<String, Value>) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten_into(&mut out, "", record);
    out
}

fn flatten_into(out: &mut Vec<(String, String)>, prefix: &str, record: &Map<String, Value>) {
    for (key, value) in record {
        let name = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
        match value {
            Value::Object(inner) => flatten_into(out, &name, inner),
            Value::Null => out.push((name, String::new())),
            Value::String(s) => out.push((name, s.clone())),
            other => out.push((name, other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn obj(v: Value) -> Map<String, Value> {
        v.as_object().unwrap().clone()
    }

    #[test]
    fn csv_flattens_nested_records() {
        let r = Report::rows(
            "t",
            vec![obj(json!({"a": 1, "p": {"re": 0.5, "im": 0}, "x": null})), obj(json!({"a": 2, "p": {"re": 1, "im": 2}, "x": "s"}))],
        );
        let mut buf = Vec::new();
        r.render(OutputFormat::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,p.re,p.im,x\n1,0.5,0,\n2,1,2,s\n");
    }

    #[test]
    fn table_aligns_columns() {
        let r = Report::rows("sweep", vec![obj(json!({"a": 0.5, "mode": "exact"})), obj(json!({"a": 0.25, "mode": "x"}))]);
        let mut buf = Vec::new();
        r.render(OutputFormat::Table, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "sweep\na     mode\n0.5   exact\n0.25  x\n");
    }

    #[test]
    fn json_wraps_rows_with_a_summary() {
        let r = Report::rows("v", vec![obj(json!({"a": 1}))]).with_summary(obj(json!({"status": "pass"})));
        let mut buf = Vec::new();
        r.render(OutputFormat::Json, &mut buf).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v, json!({"status": "pass", "rows": [{"a": 1}]}));
    }
}
