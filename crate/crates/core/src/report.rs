//! Tables and verification reports, rendered as JSON, CSV or markdown.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Invalid(format!(
                "unknown format {s:?} (expected json, csv or md)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "md",
        })
    }
}

/// A titled grid of strings. The first header cell labels the row labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, header: Vec<String>) -> Self {
        Table {
            title: title.into(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// Integer grid with labelled rows and columns.
    pub fn grid<T: fmt::Display>(
        title: impl Into<String>,
        corner: &str,
        row_labels: &[String],
        col_labels: &[String],
        values: &[Vec<T>],
    ) -> Self {
        let mut header = vec![corner.to_string()];
        header.extend(col_labels.iter().cloned());
        let mut t = Table::new(title, header);
        for (label, row) in row_labels.iter().zip(values) {
            let mut r = vec![label.clone()];
            r.extend(row.iter().map(|v| v.to_string()));
            t.push(r);
        }
        t
    }
}

/// Deterministic rendering of a table.
pub fn render_table(table: &Table, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(table).expect("tables serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .flexible(true)
                .from_writer(Vec::new());
            w.write_record(&table.header).expect("in-memory write");
            for r in &table.rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
        Format::Markdown => {
            let mut s = String::new();
            if !table.title.is_empty() {
                s.push_str(&format!("### {}\n\n", table.title));
            }
            s.push_str(&md_row(&table.header));
            s.push_str(&md_row(&vec!["---".to_string(); table.header.len().max(1)]));
            for r in &table.rows {
                s.push_str(&md_row(r));
            }
            s
        }
    }
}

fn md_row(cells: &[String]) -> String {
    let cells: Vec<String> = cells
        .iter()
        .map(|c| c.replace('|', "\\|").replace('\n', " "))
        .collect();
    format!("| {} |\n", cells.join(" | "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    /// Finite evidence for a statement that cannot be settled at finite depth,
    /// or a computed value with nothing printed to compare against.
    EvidenceOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::EvidenceOnly => "evidence-only",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportItem {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<Value>,
    pub computed: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub parameters: BTreeMap<String, String>,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn parameter(&mut self, key: &str, value: impl fmt::Display) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    /// Adds an item compared against an expected value.
    pub fn check(
        &mut self,
        name: &str,
        expected: impl Serialize,
        computed: impl Serialize,
    ) -> Status {
        let expected = serde_json::to_value(expected).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        let status = if expected == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        self.items.push(ReportItem {
            name: name.to_string(),
            expected: Some(expected),
            computed,
            status,
            note: None,
        });
        status
    }

    /// Adds an item that is only compared when an expectation exists.
    pub fn check_opt<E: Serialize>(
        &mut self,
        name: &str,
        expected: Option<E>,
        computed: impl Serialize,
    ) -> Status {
        match expected {
            Some(e) => self.check(name, e, computed),
            None => self.evidence(name, computed, None),
        }
    }

    pub fn evidence(&mut self, name: &str, computed: impl Serialize, note: Option<&str>) -> Status {
        self.items.push(ReportItem {
            name: name.to_string(),
            expected: None,
            computed: serde_json::to_value(computed).expect("serializable"),
            status: Status::EvidenceOnly,
            note: note.map(str::to_string),
        });
        Status::EvidenceOnly
    }

    /// Attaches a note to the most recent item.
    pub fn note(&mut self, note: impl Into<String>) {
        if let Some(i) = self.items.last_mut() {
            i.note = Some(note.into());
        }
    }

    pub fn has_mismatch(&self) -> bool {
        self.items.iter().any(|i| i.status == Status::Mismatch)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("## {}\n\n", self.title);
        for (k, v) in &self.parameters {
            s.push_str(&format!("- {k}: `{v}`\n"));
        }
        if !self.parameters.is_empty() {
            s.push('\n');
        }
        s.push_str(&render_table(&self.summary_table(), Format::Markdown));
        let notes: Vec<_> = self
            .items
            .iter()
            .filter_map(|i| i.note.as_ref().map(|n| (&i.name, n)))
            .collect();
        if !notes.is_empty() {
            s.push('\n');
            for (name, n) in notes {
                s.push_str(&format!("- {name}: {n}\n"));
            }
        }
        s
    }

    /// One row per item with compact JSON cells.
    pub fn summary_table(&self) -> Table {
        let mut t = Table::new(
            "",
            ["item", "expected", "computed", "status"]
                .map(String::from)
                .to_vec(),
        );
        for i in &self.items {
            t.push(vec![
                i.name.clone(),
                i.expected.as_ref().map(compact).unwrap_or_default(),
                compact(&i.computed),
                i.status.to_string(),
            ]);
        }
        t
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Markdown => self.to_markdown(),
            Format::Csv => render_table(&self.summary_table(), Format::Csv),
        }
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        Table::grid(
            "Ext^1",
            "j\\i",
            &["0".into(), "1".into()],
            &["0".into(), "1".into()],
            &[vec![1, 1], vec![0, 1]],
        )
    }

    #[test]
    fn single_cell() {
        let t = Table {
            title: String::new(),
            header: vec!["x".into()],
            rows: vec![],
        };
        assert_eq!(render_table(&t, Format::Csv), "x\n");
        assert_eq!(render_table(&t, Format::Markdown), "| x |\n| --- |\n");
    }

    #[test]
    fn csv_quotes() {
        let mut t = Table::new("", vec!["a".into(), "b".into()]);
        t.push(vec!["1,2".into(), "say \"hi\"".into()]);
        assert_eq!(
            render_table(&t, Format::Csv),
            "a,b\n\"1,2\",\"say \"\"hi\"\"\"\n"
        );
    }

    #[test]
    fn markdown_and_json() {
        let t = sample();
        let md = render_table(&t, Format::Markdown);
        assert!(
            md.starts_with("### Ext^1\n\n| j\\i | 0 | 1 |\n| --- | --- | --- |\n| 0 | 1 | 1 |\n")
        );
        let back: Table = serde_json::from_str(&render_table(&t, Format::Json)).unwrap();
        assert_eq!(back, t);
        assert_eq!(
            render_table(&t, Format::Json),
            render_table(&back, Format::Json)
        );
    }

    #[test]
    fn report_statuses() {
        let mut r = Report::new("r");
        assert_eq!(r.check("a", 2, 2), Status::Match);
        assert!(!r.has_mismatch());
        assert_eq!(
            r.check_opt::<usize>("b", None, vec![1]),
            Status::EvidenceOnly
        );
        assert_eq!(r.check("c", [[1, 0]], [[1, 1]]), Status::Mismatch);
        assert!(r.has_mismatch());
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r
            .to_markdown()
            .contains("| c | [[1,0]] | [[1,1]] | mismatch |"));
    }
}
