//! Tables rendered as csv (with a `# meta:` header line) or json.

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde_json::{Map, Value};

use crate::config::Format;

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Self::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Self::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Self::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Self::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Self::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Self::Text(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Self::Missing, Self::Float)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Self::Int(v) => v.to_string(),
            Self::Float(v) => format_float(*v),
            Self::Bool(v) => v.to_string(),
            Self::Missing => String::new(),
            Self::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Self::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Self::Int(v) => Value::from(*v),
            Self::Float(v) if v.is_finite() => Value::from(*v),
            Self::Float(v) => Value::from(v.to_string()),
            Self::Bool(v) => Value::from(*v),
            Self::Text(s) => Value::from(s.as_str()),
            Self::Missing => Value::Null,
        }
    }
}

/// 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: AsRef<str>>(name: &'static str, columns: &[S]) -> Self {
        Self {
            name,
            columns: columns.iter().map(|c| c.as_ref().to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub meta: Value,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn new(meta: Value) -> Self {
        Self {
            meta,
            tables: Vec::new(),
        }
    }

    pub fn table(mut self, t: Table) -> Self {
        self.tables.push(t);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn csv(&self) -> String {
        let mut out = format!("# meta: {}\n", self.meta);
        let multi = self.tables.len() > 1;
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if multi {
                out.push_str(&format!("# table: {}\n", t.name));
            }
            out.push_str(&t.columns.join(","));
            out.push('\n');
            for row in &t.rows {
                let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn json(&self) -> String {
        let mut root = Map::new();
        root.insert("meta".into(), self.meta.clone());
        for t in &self.tables {
            let rows = t
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = t
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.clone(), v.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            root.insert(t.name.into(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("json value");
        s.push('\n');
        s
    }

    pub fn write_to(&self, path: &Path, format: Format) -> anyhow::Result<()> {
        let mut f = std::fs::File::create(path)
            .with_context(|| format!("creating {}", path.display()))?;
        f.write_all(self.render(format).as_bytes())
            .with_context(|| format!("writing {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_layout() {
        let mut t = Table::new("levels", &["n", "e"]);
        t.push(vec![0usize.into(), 0.75.into()]);
        let s = Report::new(json!({"a": 1})).table(t).render(Format::Csv);
        assert_eq!(s, "# meta: {\"a\":1}\nn,e\n0,7.5000000000000000e-1\n");
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new("levels", &["n", "e", "rel"]);
        t.push(vec![1usize.into(), 0.5.into(), None.into()]);
        let s = Report::new(json!({})).table(t).render(Format::Json);
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["levels"][0]["e"], 0.5);
        assert!(v["levels"][0]["rel"].is_null());
    }

    #[test]
    fn text_quoting() {
        assert_eq!(Cell::from("a,b").csv(), "\"a,b\"");
        assert_eq!(Cell::from("plain").csv(), "plain");
    }
}
