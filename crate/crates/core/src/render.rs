//! Human-readable tables. Every table carries its labels in the header row
//! and first column; cells are the canonical polynomial / rational function
//! strings with exponents ascending.

use std::fmt::Display;

use crate::lsalgo::GradedMatrix;
use crate::springer::Label;

/// A labelled table of display strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Table {
    /// Square table with rows and columns indexed by `labels`.
    pub fn square<T: Display>(corner: &str, labels: &[Label], cells: &[Vec<T>]) -> Self {
        Self {
            corner: corner.to_string(),
            columns: labels.iter().map(ToString::to_string).collect(),
            rows: labels
                .iter()
                .zip(cells)
                .map(|(l, r)| (l.to_string(), r.iter().map(ToString::to_string).collect()))
                .collect(),
        }
    }

    /// One row per label with a single value column.
    pub fn column<T: Display>(corner: &str, header: &str, labels: &[Label], values: &[T]) -> Self {
        Self {
            corner: corner.to_string(),
            columns: vec![header.to_string()],
            rows: labels.iter().zip(values).map(|(l, v)| (l.to_string(), vec![v.to_string()])).collect(),
        }
    }

    pub fn from_matrix(corner: &str, m: &GradedMatrix) -> Self {
        Self::square(corner, m.labels(), m.rows())
    }

    /// RFC 4180 CSV, `\n` line endings.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let header = std::iter::once(self.corner.as_str()).chain(self.columns.iter().map(String::as_str));
        w.write_record(header).expect("in-memory write");
        for (label, cells) in &self.rows {
            let rec = std::iter::once(label.as_str()).chain(cells.iter().map(String::as_str));
            w.write_record(rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    /// GitHub-flavoured markdown table.
    pub fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = String::new();
        let header: Vec<String> = std::iter::once(&self.corner).chain(&self.columns).map(|s| esc(s)).collect();
        out.push_str(&format!("| {} |\n", header.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
        for (label, cells) in &self.rows {
            let row: Vec<String> = std::iter::once(label).chain(cells).map(|s| esc(s)).collect();
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }
}
