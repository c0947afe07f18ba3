//! Documents and their three renderings.
//!
//! Every command builds a [`Document`]; nothing is printed directly. Reals are
//! always rounded to 12 significant digits before they reach any renderer, so
//! all three formats agree and stay byte-stable.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Number, Value as Json};
use spectrum_core::Ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Text(String),
    Int(i64),
    Real(f64),
    Bool(bool),
    Null,
}

impl From<&Ratio> for Value {
    fn from(r: &Ratio) -> Self {
        Value::Text(r.to_string())
    }
}

impl From<Ratio> for Value {
    fn from(r: Ratio) -> Self {
        Value::from(&r)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Null, Value::Real)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(n: $t) -> Self {
                Value::Int(n as i64)
            }
        }
    )*};
}
int_value!(i64, u64, u32, usize);

/// 12 significant digits; fixed notation for exponents in `[-5, 12)`,
/// scientific otherwise.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        sci
    }
}

impl Value {
    fn text(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Int(n) => n.to_string(),
            Value::Real(x) => format_real(*x),
            Value::Bool(b) => b.to_string(),
            Value::Null => "-".into(),
        }
    }

    fn csv_text(&self) -> String {
        match self {
            Value::Null => String::new(),
            other => other.text(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Text(s) => Json::String(s.clone()),
            Value::Int(n) => Json::from(*n),
            Value::Real(x) => format_real(*x)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Json::Null, Json::Number),
            Value::Bool(b) => Json::Bool(*b),
            Value::Null => Json::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub title: String,
    pub fields: Vec<(String, Value)>,
    pub tables: Vec<Table>,
}

impl Document {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.into(), value.into()));
        self
    }

    pub fn table(&mut self, table: Table) -> &mut Self {
        self.tables.push(table);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human(),
            Format::Json => self.json(),
            Format::Csv => self.csv(),
        }
    }

    fn human(&self) -> String {
        let mut out = format!("{}\n", self.title);
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in &self.fields {
            let _ = writeln!(out, "  {key:<width$}  {}", value.text());
        }
        for table in &self.tables {
            out.push('\n');
            let _ = writeln!(out, "[{}]", table.name);
            let cells: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| r.iter().map(Value::text).collect())
                .collect();
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r[c].chars().count())
                        .chain([table.columns[c].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &w)| format!("{cell:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&table.columns));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        out
    }

    fn json(&self) -> String {
        let fields: Map<String, Json> = self
            .fields
            .iter()
            .map(|(k, v)| (k.clone(), v.json()))
            .collect();
        let tables: Vec<Json> = self
            .tables
            .iter()
            .map(|t| {
                let rows: Vec<Json> = t
                    .rows
                    .iter()
                    .map(|r| {
                        Json::Object(
                            t.columns
                                .iter()
                                .cloned()
                                .zip(r.iter().map(Value::json))
                                .collect(),
                        )
                    })
                    .collect();
                serde_json::json!({ "name": t.name, "columns": t.columns, "rows": rows })
            })
            .collect();
        let doc = serde_json::json!({ "title": self.title, "fields": fields, "tables": tables });
        let mut text = serde_json::to_string_pretty(&doc).expect("document serialises");
        text.push('\n');
        text
    }

    /// One CSV block for the fields (if any) and one per table, separated by
    /// blank lines.
    fn csv(&self) -> String {
        let mut blocks = Vec::new();
        if !self.fields.is_empty() {
            let rows = self
                .fields
                .iter()
                .map(|(k, v)| vec![k.clone(), v.csv_text()]);
            blocks.push(csv_block(&["field".to_string(), "value".to_string()], rows));
        }
        for t in &self.tables {
            let rows = t
                .rows
                .iter()
                .map(|r| r.iter().map(Value::csv_text).collect());
            blocks.push(csv_block(&t.columns, rows));
        }
        blocks.join("\n")
    }
}

fn csv_block(header: &[String], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.5), "0.500000000000");
        assert_eq!(format_real(1.0), "1.00000000000");
        assert_eq!(format_real(-std::f64::consts::LN_2), "-0.693147180560");
        assert_eq!(format_real(123456.0), "123456.000000");
        assert_eq!(format_real(1e-7), "1.00000000000e-7");
        assert_eq!(format_real(2.5e15), "2.50000000000e15");
        assert_eq!(format_real(9.9999999999996), "10.0000000000");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(f64::NAN), "nan");
    }

    fn sample() -> Document {
        let mut doc = Document::new("sample");
        doc.field("h", Ratio::new(3, 2)).field("ok", true);
        let mut t = Table::new("points", &["x", "note"]);
        t.push(vec![Value::Real(0.1), Value::from("a, b")]);
        t.push(vec![Value::Real(2.0 / 3.0), Value::Null]);
        doc.table(t);
        doc
    }

    #[test]
    fn human_rendering_aligns_columns() {
        let text = sample().render(Format::Human);
        assert!(text.contains("  h   3/2\n"), "{text}");
        assert!(
            text.contains(
                "[points]\nx               note\n0.100000000000  a, b\n0.666666666667  -\n"
            ),
            "{text}"
        );
    }

    #[test]
    fn csv_quotes_and_separates_blocks() {
        let text = sample().render(Format::Csv);
        assert_eq!(
            text,
            "field,value\nh,3/2\nok,true\n\nx,note\n0.100000000000,\"a, b\"\n0.666666666667,\n"
        );
    }

    #[test]
    fn json_rounds_reals() {
        let v: Json = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["fields"]["h"], "3/2");
        assert_eq!(v["tables"][0]["rows"][1]["x"], 0.666666666667);
        assert!(v["tables"][0]["rows"][1]["note"].is_null());
    }
}
