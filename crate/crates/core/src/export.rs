//! JSON and CSV output. Output is UTF-8 with LF line endings and a fixed
//! field order, so identical inputs give identical bytes.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::classify::{ClassificationRecord, Table1Entry};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::to_text;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    #[serde(rename = "G/K")]
    space: &'a str,
    #[serde(rename = "N_S")]
    n_s: usize,
    condition: &'a str,
}

fn nonempty<T>(items: &[T]) -> Result<()> {
    if items.is_empty() {
        Err(Error::Usage("nothing to export: the record list is empty".into()))
    } else {
        Ok(())
    }
}

fn json_text<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_text(rows: &[CsvRow<'_>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// JSON array of records.
pub fn records_to_json(records: &[ClassificationRecord]) -> Result<String> {
    nonempty(records)?;
    json_text(records)
}

pub fn records_from_json(text: &str) -> Result<Vec<ClassificationRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parameters of a record as `p=2 q=3`, used as the CSV condition column.
pub fn param_condition(r: &ClassificationRecord) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

pub fn records_to_csv(records: &[ClassificationRecord]) -> Result<String> {
    nonempty(records)?;
    let conds: Vec<String> = records.iter().map(param_condition).collect();
    let rows: Vec<CsvRow> = records
        .iter()
        .zip(&conds)
        .map(|(r, c)| CsvRow { space: &r.descriptor, n_s: r.n_s, condition: c })
        .collect();
    csv_text(&rows)
}

pub fn table1_to_csv(entries: &[Table1Entry]) -> Result<String> {
    nonempty(entries)?;
    let rows: Vec<CsvRow> =
        entries.iter().map(|e| CsvRow { space: &e.space, n_s: e.closed, condition: &e.condition }).collect();
    csv_text(&rows)
}

pub fn table1_to_json(entries: &[Table1Entry]) -> Result<String> {
    nonempty(entries)?;
    json_text(entries)
}

pub fn render(records: &[ClassificationRecord], format: Format) -> Result<String> {
    match format {
        Format::Json => records_to_json(records),
        Format::Csv => records_to_csv(records),
    }
}

pub fn export(records: &[ClassificationRecord], format: Format, path: &Path) -> Result<()> {
    let text = render(records, format)?;
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// A matrix as a JSON array of rows of `a/b` strings.
pub fn matrix_to_json(m: &Matrix) -> String {
    let mut s = String::from("[");
    for r in 0..m.rows() {
        if r > 0 {
            s.push(',');
        }
        s.push('[');
        for (c, v) in m.row(r).iter().enumerate() {
            if c > 0 {
                s.push(',');
            }
            let _ = write!(s, "\"{}\"", to_text(v));
        }
        s.push(']');
    }
    s.push(']');
    s
}
