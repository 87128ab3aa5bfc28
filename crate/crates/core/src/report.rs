//! Report envelope and its text, CSV and JSON renderings.
//!
//! Every report is a list of string tables plus a list of named checks, so
//! the three renderings carry the same values and each can be parsed back.
//! Cells hold canonical scalar and quaternion text.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupExport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::parse(0, format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Table {
        Table {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in {}", self.title);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Value of column `name` in the first row whose first cell is `key`.
    pub fn lookup(&self, key: &str, name: &str) -> Option<&str> {
        let c = self.column(name)?;
        self.rows
            .iter()
            .find(|r| r.first().map(String::as_str) == Some(key))
            .map(|r| r[c].as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Payload {
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: u32,
    pub command: String,
    pub format: Format,
    pub pass_count: usize,
    pub fail_count: usize,
    pub payload: Payload,
}

impl ReportEnvelope {
    pub fn new(command: impl Into<String>, payload: Payload) -> ReportEnvelope {
        let pass_count = payload.checks.iter().filter(|c| c.pass).count();
        ReportEnvelope {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            format: Format::Text,
            pass_count,
            fail_count: payload.checks.len() - pass_count,
            payload,
        }
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    pub fn table(&self, title_prefix: &str) -> Option<&Table> {
        self.payload
            .tables
            .iter()
            .find(|t| t.title.starts_with(title_prefix))
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.payload.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> Result<String> {
        match self.format {
            Format::Text => Ok(render_text(self)),
            Format::Csv => render_csv(self),
            Format::Json => render_json(self),
        }
    }
}

/// Quaternion cells `w, x, y, z` collapse into one `lambda` cell in text
/// output.
fn quaternion_span(columns: &[String]) -> Option<usize> {
    columns.windows(4).position(|w| w == ["w", "x", "y", "z"])
}

/// Empty cells print as `-`; cells with spaces or quotes are quoted, with
/// inner quotes doubled.
fn text_cell(c: &str) -> String {
    if c.is_empty() {
        "-".into()
    } else if c == "-" || c.contains([' ', '"']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn split_text_row(row: &str) -> Result<Vec<String>> {
    let mut cells = Vec::new();
    let mut chars = row.chars().peekable();
    while chars.peek().is_some() {
        let mut cell = String::new();
        if chars.next_if_eq(&'"').is_some() {
            loop {
                match chars.next() {
                    Some('"') if chars.next_if_eq(&'"').is_some() => cell.push('"'),
                    Some('"') => break,
                    Some(c) => cell.push(c),
                    None => return Err(Error::Encoding(format!("unterminated quote in {row}"))),
                }
            }
            cells.push(cell);
        } else {
            while let Some(c) = chars.next_if(|&c| c != ' ') {
                cell.push(c);
            }
            cells.push(if cell == "-" { String::new() } else { cell });
        }
        if chars.next_if_eq(&' ').is_none() && chars.peek().is_some() {
            return Err(Error::Encoding(format!("bad text row {row}")));
        }
    }
    Ok(cells)
}

pub fn render_text(r: &ReportEnvelope) -> String {
    let mut out = String::new();
    for t in &r.payload.tables {
        let span = quaternion_span(&t.columns);
        let _ = writeln!(out, "# {}", t.title);
        let mut header = t.columns.clone();
        if let Some(s) = span {
            header.splice(s..s + 4, ["lambda".to_string()]);
        }
        let _ = writeln!(out, "{}", header.join(" "));
        for row in &t.rows {
            let mut cells: Vec<String> = row.iter().map(|c| text_cell(c)).collect();
            if let Some(s) = span {
                let q = format!("({})", cells[s..s + 4].join(","));
                cells.splice(s..s + 4, [q]);
            }
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out.push('\n');
    }
    for c in &r.payload.checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{tag}] {}: {}", c.name, c.detail);
    }
    let _ = writeln!(
        out,
        "{}: {} passed, {} failed",
        r.command, r.pass_count, r.fail_count
    );
    out
}

pub fn render_json(r: &ReportEnvelope) -> Result<String> {
    let mut s = serde_json::to_string_pretty(r).map_err(|e| Error::Encoding(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_block(columns: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let enc = |e: csv::Error| Error::Encoding(e.to_string());
    w.write_record(columns).map_err(enc)?;
    for row in rows {
        w.write_record(row).map_err(enc)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Encoding(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Encoding(e.to_string()))
}

/// A single table without checks is plain CSV. Anything else is a series of
/// blocks, each introduced by a `# title` line and separated by blank lines.
pub fn render_csv(r: &ReportEnvelope) -> Result<String> {
    let p = &r.payload;
    if p.checks.is_empty() && p.tables.len() == 1 {
        let t = &p.tables[0];
        return csv_block(&t.columns, &t.rows);
    }
    let mut out = String::new();
    if !p.checks.is_empty() {
        out.push_str("# checks\n");
        let rows: Vec<Vec<String>> = p
            .checks
            .iter()
            .map(|c| vec![c.name.clone(), c.pass.to_string(), c.detail.clone()])
            .collect();
        out.push_str(&csv_block(
            &["name".into(), "pass".into(), "detail".into()],
            &rows,
        )?);
    }
    for t in &p.tables {
        if !out.is_empty() {
            out.push('\n');
        }
        let _ = writeln!(out, "# {}", t.title);
        out.push_str(&csv_block(&t.columns, &t.rows)?);
    }
    Ok(out)
}

fn read_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut rdr = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let enc = |e: csv::Error| Error::Encoding(e.to_string());
    let columns = rdr
        .headers()
        .map_err(enc)?
        .iter()
        .map(String::from)
        .collect();
    let rows = rdr
        .records()
        .map(|r| r.map(|r| r.iter().map(String::from).collect()))
        .collect::<std::result::Result<Vec<Vec<String>>, _>>()
        .map_err(enc)?;
    Ok((columns, rows))
}

/// Parses CSV output back into tables and checks. A bare single table gets
/// `default_title`.
pub fn parse_csv(text: &str, default_title: &str) -> Result<Payload> {
    let mut payload = Payload::default();
    if !text.starts_with("# ") {
        let (columns, rows) = read_csv(text)?;
        payload.tables.push(Table {
            title: default_title.to_string(),
            columns,
            rows,
        });
        return Ok(payload);
    }
    for block in text.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let (title, body) = block
            .split_once('\n')
            .ok_or_else(|| Error::Encoding("empty CSV block".into()))?;
        let title = title
            .strip_prefix("# ")
            .ok_or_else(|| Error::Encoding(format!("CSV block without title: {title}")))?;
        let (columns, rows) = read_csv(body)?;
        if title == "checks" {
            for r in rows {
                let pass = r[1]
                    .parse()
                    .map_err(|_| Error::Encoding(format!("bad pass flag {}", r[1])))?;
                payload.checks.push(Check::new(&r[0], pass, &r[2]));
            }
        } else {
            payload.tables.push(Table {
                title: title.to_string(),
                columns,
                rows,
            });
        }
    }
    Ok(payload)
}

pub fn parse_json(text: &str) -> Result<ReportEnvelope> {
    serde_json::from_str(text).map_err(|e| Error::Encoding(e.to_string()))
}

/// Parses text output. Compact quaternion cells in a `lambda` column are
/// split back into `w, x, y, z`.
pub fn parse_text(text: &str) -> Result<Payload> {
    let mut payload = Payload::default();
    let mut lines = text.lines().peekable();
    while let Some(line) = lines.next() {
        if let Some(title) = line.strip_prefix("# ") {
            let header = lines
                .next()
                .ok_or_else(|| Error::Encoding(format!("table `{title}` has no header")))?;
            let mut columns: Vec<String> = header.split(' ').map(String::from).collect();
            let span = columns.iter().position(|c| c == "lambda");
            if let Some(s) = span {
                columns.splice(s..s + 1, ["w", "x", "y", "z"].map(String::from));
            }
            let mut rows = Vec::new();
            while let Some(row) = lines.next_if(|l| !l.is_empty()) {
                let mut cells = split_text_row(row)?;
                if let Some(s) = span {
                    let q = cells[s]
                        .strip_prefix('(')
                        .and_then(|c| c.strip_suffix(')'))
                        .ok_or_else(|| {
                            Error::Encoding(format!("bad quaternion cell {}", cells[s]))
                        })?
                        .split(',')
                        .map(String::from)
                        .collect::<Vec<_>>();
                    cells.splice(s..s + 1, q);
                }
                rows.push(cells);
            }
            payload.tables.push(Table {
                title: title.to_string(),
                columns,
                rows,
            });
        } else if let Some(rest) = line.strip_prefix('[') {
            let (tag, rest) = rest
                .split_once("] ")
                .ok_or_else(|| Error::Encoding(format!("bad check line {line}")))?;
            let (name, detail) = rest.split_once(": ").unwrap_or((rest, ""));
            payload.checks.push(Check::new(name, tag == "PASS", detail));
        }
    }
    Ok(payload)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportEnvelope {
        let mut t = Table::new("units", &["name", "w", "x", "y", "z", "F_nb"]);
        t.push(
            ["h2", "1/2", "1/2", "1/2", "-1/2", "+1/2"]
                .map(String::from)
                .to_vec(),
        );
        t.push(["one", "1", "0", "0", "0", "+1"].map(String::from).to_vec());
        let mut u = Table::new("pairs", &["a", "b", "note"]);
        u.push(vec!["h1".into(), "h8".into(), String::new()]);
        u.push(vec!["-".into(), "a \"b\" c".into(), "x y".into()]);
        ReportEnvelope::new(
            "sample",
            Payload {
                tables: vec![t, u],
                checks: vec![
                    Check::new("first", true, "all good, really"),
                    Check::new("second", false, "x: y"),
                ],
                group: None,
            },
        )
    }

    #[test]
    fn counts() {
        let r = sample();
        assert_eq!((r.pass_count, r.fail_count), (1, 1));
    }

    #[test]
    fn text_round_trip() {
        let r = sample();
        let text = r.render().unwrap();
        assert!(text.contains("h2 (1/2,1/2,1/2,-1/2) +1/2"));
        assert_eq!(parse_text(&text).unwrap(), r.payload);
    }

    #[test]
    fn csv_round_trip() {
        let r = sample().with_format(Format::Csv);
        let csv = r.render().unwrap();
        assert_eq!(parse_csv(&csv, "unused").unwrap(), r.payload);
    }

    #[test]
    fn single_table_csv_is_plain() {
        let mut r = sample();
        r.payload.checks.clear();
        r.payload.tables.truncate(1);
        let csv = r.with_format(Format::Csv).render().unwrap();
        assert!(csv.starts_with("name,w,x,y,z,F_nb\n"));
        let back = parse_csv(&csv, "units").unwrap();
        assert_eq!(back.tables[0].rows.len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let r = sample().with_format(Format::Json);
        let s = r.render().unwrap();
        assert!(s.contains("\"schema_version\": 1"));
        assert_eq!(parse_json(&s).unwrap(), r);
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
