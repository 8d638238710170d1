//! Text, JSON and CSV renderings.

use std::fmt::Write;

use serde::Serialize;

use crate::commands::{CoefficientDocument, TableDocument, VerifyDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A document that can be written in every [`Format`].
pub trait Document: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> Result<String, csv::Error>;

    fn render(&self, format: Format) -> Result<String, RenderError> {
        match format {
            Format::Text => Ok(self.text()),
            Format::Json => json(self),
            Format::Csv => Ok(self.csv()?),
        }
    }
}

#[derive(Debug)]
pub enum RenderError {
    Json(serde_json::Error),
    Csv(csv::Error),
}

impl std::fmt::Display for RenderError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RenderError::Json(e) => write!(f, "JSON output: {e}"),
            RenderError::Csv(e) => write!(f, "CSV output: {e}"),
        }
    }
}

impl std::error::Error for RenderError {}

impl From<csv::Error> for RenderError {
    fn from(e: csv::Error) -> Self {
        RenderError::Csv(e)
    }
}

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize + ?Sized>(doc: &T) -> Result<String, RenderError> {
    let mut s = serde_json::to_string_pretty(doc).map_err(RenderError::Json)?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

/// Left-aligned columns separated by two spaces.
fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let mut l = String::new();
        for (i, (c, w)) in cells.iter().zip(&width).enumerate() {
            if i + 1 == cells.len() {
                l.push_str(c);
            } else {
                let _ = write!(l, "{c:<w$}  ");
            }
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(header.to_vec(), &mut out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

impl Document for TableDocument {
    fn text(&self) -> String {
        let mut out = format!("Table {}\n", self.table);
        let _ = writeln!(out, "<Delta,Delta> = {}", self.petersson.delta_delta);
        let _ = writeln!(out, "<g20,g20>     = {}", self.petersson.g20_g20);
        let _ = writeln!(out, "precision     = {} digits\n", self.precision_digits);
        let with_label = self.rows.iter().any(|r| r.coefficient.is_some());
        let mut header = vec!["s"];
        if with_label {
            header.push("coeff");
        }
        header.extend(["value", "pi", "numeric"]);
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![r.s.to_string()];
                if with_label {
                    v.push(r.coefficient.clone().unwrap_or_default());
                }
                v.extend([r.factored.clone(), format!("pi^{}", r.pi_exponent), r.numeric.clone()]);
                v
            })
            .collect();
        out + &columns(&header, &rows)
    }

    fn csv(&self) -> Result<String, csv::Error> {
        // the optional column would make rows of different length
        #[derive(Serialize)]
        struct Row<'a> {
            s: i64,
            coefficient: &'a str,
            numerator: &'a str,
            denominator: &'a str,
            factored: &'a str,
            pi_exponent: i64,
            numeric: &'a str,
        }
        let rows: Vec<Row<'_>> = self
            .rows
            .iter()
            .map(|r| Row {
                s: r.s,
                coefficient: r.coefficient.as_deref().unwrap_or(""),
                numerator: &r.numerator,
                denominator: &r.denominator,
                factored: &r.factored,
                pi_exponent: r.pi_exponent,
                numeric: &r.numeric,
            })
            .collect();
        csv_rows(&rows)
    }
}

impl Document for CoefficientDocument {
    fn text(&self) -> String {
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| vec![r.n.to_string(), r.value.clone()]).collect();
        columns(&["n", &self.form], &rows)
    }

    fn csv(&self) -> Result<String, csv::Error> {
        csv_rows(&self.rows)
    }
}

impl Document for VerifyDocument {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "precision {} digits, {} coefficients, {} norms, against {} values, tolerance {}",
            self.precision_digits, self.coefficients_used, self.norms, self.against, self.tolerance
        );
        let _ = writeln!(out, "<Delta,Delta> = {}", self.petersson.delta_delta);
        let _ = writeln!(out, "<g20,g20>     = {}\n", self.petersson.g20_g20);
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.s.to_string(),
                    r.branch.clone(),
                    r.direct.clone(),
                    r.reference.clone(),
                    r.rel_diff.clone(),
                    if r.pass { "ok" } else { "FAIL" }.to_owned(),
                ]
            })
            .collect();
        out += &columns(&["s", "branch", "direct", "reference", "rel diff", ""], &rows);
        let _ = writeln!(
            out,
            "\nmax relative difference {}: {}",
            self.max_rel_diff,
            if self.passed { "passed" } else { "FAILED" }
        );
        out
    }

    fn csv(&self) -> Result<String, csv::Error> {
        csv_rows(&self.rows)
    }
}
