use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{EXIT_FAILURE, EXIT_OK};

/// One table cell.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:.16e}"),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn pretty(&self) -> String {
        match self {
            Cell::Num(x) if *x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e6) => format!("{x:.4e}"),
            Cell::Num(x) => format!("{x:.10}"),
            other => other.csv(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

/// Rows that render into a fixed-column table.
pub trait Tabular {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<Cell>;
}

/// Summaries that carry a verdict.
pub trait Outcome {
    fn passed(&self) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "pretty" => Ok(Self::Pretty),
            other => Err(format!("unknown output format {other:?} (csv|json|pretty)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report<S, R, M> {
    pub spec: S,
    pub rows: Vec<R>,
    pub summary: M,
}

impl<S, R, M> Report<S, R, M>
where
    S: Serialize,
    R: Serialize + Tabular,
    M: Serialize + Outcome,
{
    pub fn passed(&self) -> bool {
        self.summary.passed()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(R::header()).expect("in-memory csv write");
        for row in &self.rows {
            let fields: Vec<String> = row.cells().iter().map(Cell::csv).collect();
            w.write_record(&fields).expect("in-memory csv write");
        }
        let bytes = w.into_inner().expect("in-memory csv flush");
        String::from_utf8(bytes).expect("csv output is utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        write_object(&mut out, "spec", &self.spec);

        let header = R::header();
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.cells().iter().map(Cell::pretty).collect())
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                body.iter()
                    .map(|r| r[c].len())
                    .chain(std::iter::once(header[c].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cols: Vec<&str>| {
            cols.iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(out, "{}", line(header.to_vec()));
        for r in &body {
            let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
        }
        write_object(&mut out, "summary", &self.summary);
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Pretty => self.to_pretty(),
        }
    }
}

fn write_object<T: Serialize>(out: &mut String, title: &str, value: &T) {
    let _ = writeln!(out, "{title}:");
    match serde_json::to_value(value) {
        Ok(serde_json::Value::Object(map)) => {
            for (k, v) in map {
                let _ = writeln!(out, "  {k}: {v}");
            }
        }
        Ok(other) => {
            let _ = writeln!(out, "  {other}");
        }
        Err(e) => {
            let _ = writeln!(out, "  <unserializable: {e}>");
        }
    }
}
