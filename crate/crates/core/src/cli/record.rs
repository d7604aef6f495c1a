//! Output records and their JSON / CSV / plain encodings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(BigInt),
    Bool(bool),
    Text(String),
    Null,
}

impl Cell {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Cell::Int(v.into())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => {
                Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
            }
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Null => Value::Null,
        }
    }
}

impl From<Option<Cell>> for Cell {
    fn from(cell: Option<Cell>) -> Self {
        cell.unwrap_or(Cell::Null)
    }
}

/// Plain decimal for integers, `true`/`false`, and empty for null.
impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Bool(b) => write!(f, "{b}"),
            Cell::Text(s) => f.write_str(s),
            Cell::Null => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Skipped,
    HypothesisViolation,
    CrossCheckFailed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Skipped => "skipped",
            Status::HypothesisViolation => "hypothesis_violation",
            Status::CrossCheckFailed => "cross_check_failed",
        }
    }
}

/// One output row. `inputs` and `result` keep their column order; every
/// record of a given command has the same column names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub inputs: Vec<(&'static str, Cell)>,
    pub result: Vec<(&'static str, Cell)>,
    pub paths: Vec<&'static str>,
    pub cross_check_delta: Option<BigInt>,
    pub status: Status,
    /// Replaces the key=value rendering in plain output when set.
    pub summary: Option<String>,
}

impl Record {
    pub fn get(&self, key: &str) -> Option<&Cell> {
        self.inputs
            .iter()
            .chain(&self.result)
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let object = |cells: &[(&'static str, Cell)]| {
            Value::Object(
                cells
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_json()))
                    .collect::<Map<_, _>>(),
            )
        };
        let mut map = Map::new();
        map.insert("inputs".into(), object(&self.inputs));
        map.insert("result".into(), object(&self.result));
        map.insert(
            "paths".into(),
            Value::Array(
                self.paths
                    .iter()
                    .map(|p| Value::String(p.to_string()))
                    .collect(),
            ),
        );
        map.insert(
            "cross_check_delta".into(),
            self.cross_check_delta
                .clone()
                .map(Cell::Int)
                .unwrap_or(Cell::Null)
                .to_json(),
        );
        map.insert("status".into(), Value::String(self.status.as_str().into()));
        Value::Object(map)
    }

    pub fn csv_header(&self) -> Vec<String> {
        self.inputs
            .iter()
            .chain(&self.result)
            .map(|(k, _)| k.to_string())
            .chain(["paths", "cross_check_delta", "status"].map(String::from))
            .collect()
    }

    pub fn csv_fields(&self) -> Vec<String> {
        self.inputs
            .iter()
            .chain(&self.result)
            .map(|(_, v)| v.to_string())
            .chain([
                self.paths.join(";"),
                self.cross_check_delta
                    .as_ref()
                    .map(BigInt::to_string)
                    .unwrap_or_default(),
                self.status.as_str().to_string(),
            ])
            .collect()
    }

    pub fn plain_line(&self) -> String {
        if let Some(summary) = &self.summary {
            return summary.clone();
        }
        let pairs = |cells: &[(&'static str, Cell)]| {
            cells
                .iter()
                .filter(|(_, v)| *v != Cell::Null)
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut line = format!("{} | {}", pairs(&self.inputs), pairs(&self.result));
        if !self.paths.is_empty() {
            line.push_str(&format!(" | paths={}", self.paths.join(",")));
        }
        if let Some(delta) = &self.cross_check_delta {
            line.push_str(&format!(" delta={delta}"));
        }
        line.push_str(&format!(" status={}", self.status.as_str()));
        line
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Renders records; `as_array` forces a top-level JSON array even for a
/// single record.
pub fn render(records: &[Record], format: Format, as_array: bool) -> String {
    match format {
        Format::Json => {
            let value = if as_array || records.len() != 1 {
                Value::Array(records.iter().map(Record::to_json).collect())
            } else {
                records[0].to_json()
            };
            let mut out = serde_json::to_string_pretty(&value).expect("json values serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            if let Some(first) = records.first() {
                writer
                    .write_record(first.csv_header())
                    .expect("in-memory write");
            }
            for record in records {
                writer
                    .write_record(record.csv_fields())
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        Format::Plain => records.iter().map(|r| r.plain_line() + "\n").collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        Record {
            inputs: vec![("g", Cell::int(3)), ("mu", Cell::text("2,2"))],
            result: vec![
                ("value", Cell::Int(BigInt::from(10).pow(30))),
                ("empty", Cell::Bool(false)),
                ("note", Cell::Null),
            ],
            paths: vec!["bracket", "coefficient"],
            cross_check_delta: Some(BigInt::from(0)),
            status: Status::Ok,
            summary: None,
        }
    }

    #[test]
    fn json_keeps_big_integers_exact() {
        let json = render(&[sample()], Format::Json, false);
        assert!(json.contains("\"value\": 1000000000000000000000000000000"));
        let value: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["status"], "ok");
        assert_eq!(value["paths"][1], "coefficient");
        assert!(value["result"]["note"].is_null());
        assert!(render(&[sample()], Format::Json, true).starts_with('['));
    }

    #[test]
    fn csv_layout() {
        let csv = render(&[sample(), sample()], Format::Csv, true);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "g,mu,value,empty,note,paths,cross_check_delta,status"
        );
        assert_eq!(
            lines[1],
            "3,\"2,2\",1000000000000000000000000000000,false,,bracket;coefficient,0,ok"
        );
        assert_eq!(lines.len(), 3);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn plain_layout() {
        assert_eq!(
            sample().plain_line(),
            "g=3 mu=2,2 | value=1000000000000000000000000000000 empty=false | paths=bracket,coefficient delta=0 status=ok"
        );
    }
}
