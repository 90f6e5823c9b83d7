//! Record emission in TSV and JSON-lines form, and parsers for both.
//!
//! A TSV stream is a sequence of sections: a `# `-prefixed header naming the
//! columns, then tab-separated rows. A new header is written whenever the
//! column set changes. JSON-lines writes one object per record; exact
//! integers that can outgrow a machine word are written as strings.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{Map, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Tsv,
    JsonLines,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            other => Err(format!(
                "unknown format `{other}` (expected tsv or json-lines)"
            )),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Tsv => "tsv",
            Format::JsonLines => "json-lines",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Int(u64),
    Big(BigUint),
    Text(String),
    Bool(bool),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Int(v) => write!(f, "{v}"),
            Field::Big(v) => write!(f, "{v}"),
            Field::Text(v) => f.write_str(v),
            Field::Bool(v) => write!(f, "{v}"),
        }
    }
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::Int(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as u64)
    }
}

impl From<u32> for Field {
    fn from(v: u32) -> Self {
        Field::Int(v.into())
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<BigUint> for Field {
    fn from(v: BigUint) -> Self {
        Field::Big(v)
    }
}

impl From<&BigUint> for Field {
    fn from(v: &BigUint) -> Self {
        Field::Big(v.clone())
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_owned())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

/// An ordered list of named fields.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Record(Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    /// A record whose first column is `kind`, used by commands that mix
    /// record shapes.
    pub fn kind(kind: &str) -> Self {
        Record::new().with("kind", kind)
    }

    pub fn with(mut self, name: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    pub fn fields(&self) -> &[(&'static str, Field)] {
        &self.0
    }
}

pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    header: Vec<&'static str>,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format) -> Self {
        Emitter {
            out,
            format,
            header: Vec::new(),
        }
    }

    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::Tsv => self.emit_tsv(record),
            Format::JsonLines => self.emit_json(record),
        }
    }

    fn emit_tsv(&mut self, record: &Record) -> io::Result<()> {
        let names: Vec<&'static str> = record.0.iter().map(|(n, _)| *n).collect();
        if names != self.header {
            writeln!(self.out, "# {}", names.join("\t"))?;
            self.header = names;
        }
        let mut first = true;
        for (_, value) in &record.0 {
            if !first {
                self.out.write_all(b"\t")?;
            }
            first = false;
            write!(self.out, "{value}")?;
        }
        self.out.write_all(b"\n")
    }

    fn emit_json(&mut self, record: &Record) -> io::Result<()> {
        let mut obj = Map::new();
        for (name, value) in &record.0 {
            let v = match value {
                Field::Int(v) => Json::from(*v),
                Field::Big(v) => Json::String(v.to_string()),
                Field::Text(v) => Json::String(v.clone()),
                Field::Bool(v) => Json::Bool(*v),
            };
            obj.insert((*name).to_owned(), v);
        }
        serde_json::to_writer(&mut self.out, &Json::Object(obj))?;
        self.out.write_all(b"\n")
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

/// A parsed record: column names paired with their textual values.
pub type ParsedRecord = Vec<(String, String)>;

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_tsv(text: &str) -> Result<Vec<ParsedRecord>, ParseError> {
    let mut header: Option<Vec<String>> = None;
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(h) = line.strip_prefix('#') {
            header = Some(h.trim_start().split('\t').map(str::to_owned).collect());
            continue;
        }
        let names = header.as_ref().ok_or_else(|| ParseError {
            line: i + 1,
            message: "row before any header".into(),
        })?;
        let values: Vec<&str> = line.split('\t').collect();
        if values.len() != names.len() {
            return Err(ParseError {
                line: i + 1,
                message: format!("expected {} fields, found {}", names.len(), values.len()),
            });
        }
        records.push(
            names
                .iter()
                .cloned()
                .zip(values.into_iter().map(str::to_owned))
                .collect(),
        );
    }
    Ok(records)
}

pub fn parse_json_lines(text: &str) -> Result<Vec<ParsedRecord>, ParseError> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let err = |message: String| ParseError {
                line: i + 1,
                message,
            };
            let value: Json = serde_json::from_str(line).map_err(|e| err(e.to_string()))?;
            let Json::Object(obj) = value else {
                return Err(err("not a JSON object".into()));
            };
            obj.into_iter()
                .map(|(k, v)| {
                    let text = match v {
                        Json::String(s) => s,
                        Json::Number(n) => n.to_string(),
                        Json::Bool(b) => b.to_string(),
                        other => return Err(err(format!("unexpected value {other}"))),
                    };
                    Ok((k, text))
                })
                .collect()
        })
        .collect()
}
