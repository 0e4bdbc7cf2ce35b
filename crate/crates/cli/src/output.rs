//! Tabular command results and their table, CSV and JSON renderings.

use linkage_betti_core::BigRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};
use serde_json::{Map, Value};

use crate::CliError;

/// Significant digits carried by decimal columns.
pub const SIGNIFICANT_DIGITS: u32 = 12;

/// Output flavor selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Aligned columns for terminals.
    Table,
    /// Comma-separated values with a header row.
    Csv,
    /// `{"meta": {...}, "rows": [...]}`.
    Json,
}

/// One field of a row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    /// Free text, including `a/b` rationals.
    Text(String),
    /// A numeric literal kept verbatim (integers and formatted decimals).
    Number(String),
    Bool(bool),
    /// Missing value: empty in CSV, `null` in JSON.
    Null,
}

impl Cell {
    pub fn int(v: impl Into<i128>) -> Self {
        Cell::Number(v.into().to_string())
    }

    /// `a/b`, always with an explicit denominator.
    pub fn rational(v: &BigRational) -> Self {
        Cell::Text(format!("{}/{}", v.numer(), v.denom()))
    }

    pub fn decimal(v: &BigRational) -> Self {
        Cell::Number(format_decimal(v, SIGNIFICANT_DIGITS))
    }

    fn plain(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Number(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Number(s) => Value::Number(s.parse().expect("formatted numbers are valid JSON")),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Null => Value::Null,
        }
    }

    fn from_json(v: &Value) -> Result<Self, CliError> {
        Ok(match v {
            Value::String(s) => Cell::Text(s.clone()),
            Value::Number(n) => Cell::Number(n.to_string()),
            Value::Bool(b) => Cell::Bool(*b),
            Value::Null => Cell::Null,
            other => return Err(CliError::Parse(format!("unexpected JSON field {other}"))),
        })
    }
}

/// Result of one command: fixed columns, rows, and run metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: String,
    pub version: String,
    pub seed: Option<u64>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputRecord {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            seed: None,
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::plain))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_json(&self) -> String {
        let mut meta = Map::new();
        meta.insert("command".into(), self.command.clone().into());
        meta.insert("version".into(), self.version.clone().into());
        if let Some(seed) = self.seed {
            meta.insert("seed".into(), seed.into());
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let fields = self.columns.iter().cloned().zip(row.iter().map(Cell::json));
                Value::Object(fields.collect())
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("meta".into(), Value::Object(meta));
        doc.insert("rows".into(), Value::Array(rows));
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
        text.push('\n');
        text
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::plain).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].chars().count())
                    .chain([self.columns[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |fields: &mut dyn Iterator<Item = &str>| {
            let padded: Vec<String> = fields
                .zip(&widths)
                .map(|(f, &w)| format!("{f:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned() + "\n"
        };
        let mut out = line(&mut self.columns.iter().map(String::as_str));
        for row in &cells {
            out += &line(&mut row.iter().map(String::as_str));
        }
        out
    }

    /// Reads back a document produced by [`OutputRecord::to_json`].
    ///
    /// Column order comes from the command's fixed schema, so documents with
    /// no rows still recover their header.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let bad = |what: &str| CliError::Parse(format!("malformed output document: {what}"));
        let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let meta = doc
            .get("meta")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("meta"))?;
        let command = meta
            .get("command")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("command"))?;
        let columns = crate::commands::columns(command).ok_or_else(|| bad("unknown command"))?;
        let mut record = OutputRecord::new(command, columns);
        record.version = meta
            .get("version")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("version"))?
            .to_owned();
        record.seed = match meta.get("seed") {
            Some(v) => Some(v.as_u64().ok_or_else(|| bad("seed"))?),
            None => None,
        };
        let rows = doc
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("rows"))?;
        for row in rows {
            let row = row.as_object().ok_or_else(|| bad("row"))?;
            if row.len() != columns.len() {
                return Err(bad("row width"));
            }
            let cells = columns
                .iter()
                .map(|c| Cell::from_json(row.get(*c).ok_or_else(|| bad(c))?))
                .collect::<Result<_, _>>()?;
            record.rows.push(cells);
        }
        Ok(record)
    }
}

/// Rounds `v` to `digits` significant digits (half away from zero).
///
/// Plain notation is used for exponents in `-5..digits`, scientific otherwise;
/// trailing zeros are dropped.
pub fn format_decimal(v: &BigRational, digits: u32) -> String {
    assert!(digits >= 1);
    if v.is_zero() {
        return "0".into();
    }
    let x = v.abs();
    let ten = BigInt::from(10u8);
    let pow10 = |e: i64| -> BigRational {
        let p = ten.clone().pow(e.unsigned_abs());
        if e >= 0 {
            BigRational::from_integer(p)
        } else {
            BigRational::new(1.into(), p)
        }
    };
    // 10^e <= x < 10^(e+1)
    let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    while pow10(e) > x {
        e -= 1;
    }
    while pow10(e + 1) <= x {
        e += 1;
    }
    let scaled = x * pow10(digits as i64 - 1 - e);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = q;
    if rem * 2u8 >= *scaled.denom() {
        m += 1u8;
    }
    if m == ten.clone().pow(digits) {
        m /= 10u8;
        e += 1;
    }
    let mantissa = m.to_string();
    let sign = if v.is_negative() { "-" } else { "" };
    let body = if (-5..digits as i64).contains(&e) {
        if e >= 0 {
            let (int, frac) = mantissa.split_at(e as usize + 1);
            join_point(int, frac)
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            join_point("0", &format!("{zeros}{mantissa}"))
        }
    } else {
        let (lead, rest) = mantissa.split_at(1);
        format!("{}e{e}", join_point(lead, rest))
    };
    format!("{sign}{body}")
}

fn join_point(int: &str, frac: &str) -> String {
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        int.to_owned()
    } else {
        format!("{int}.{frac}")
    }
}
