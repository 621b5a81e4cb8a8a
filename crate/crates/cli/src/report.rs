//! Flat report rows and their CSV and JSON encodings.
//!
//! Columns, in order: `scenario,variant,metric,mean,stderr,replications,master_seed`.
//! Reals are written in scientific notation with 17 significant digits;
//! non-finite values are `NaN`/`inf` in CSV and `null` in JSON.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use repeatvote::{AggregateReport, Comparison};
use thiserror::Error;

pub const CSV_HEADER: [&str; 7] = [
    "scenario",
    "variant",
    "metric",
    "mean",
    "stderr",
    "replications",
    "master_seed",
];

pub const JSON_SCHEMA_VERSION: u32 = 1;

/// Prefix of paired-difference metrics in `compare` output.
pub const DELTA_PREFIX: &str = "delta_vs_single_round.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub scenario: String,
    pub variant: String,
    pub metric: String,
    pub mean: f64,
    pub stderr: f64,
    pub replications: u32,
    pub master_seed: u64,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("report has no variants")]
    Empty,
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

/// One row per (variant, metric) in report order.
pub fn records(report: &AggregateReport) -> Vec<OutputRecord> {
    records_labelled(report, &report.scenario)
}

/// As [`records`], with the scenario column overridden.
pub fn records_labelled(report: &AggregateReport, scenario: &str) -> Vec<OutputRecord> {
    report
        .variants
        .iter()
        .flat_map(|v| {
            let variant = v.variant.name();
            v.metrics.iter().map(move |m| OutputRecord {
                scenario: scenario.to_string(),
                variant: variant.clone(),
                metric: m.name.to_string(),
                mean: m.mean,
                stderr: m.stderr,
                replications: report.replications,
                master_seed: report.master_seed,
            })
        })
        .collect()
}

/// Per-variant rows followed by the paired deltas against the baseline.
pub fn comparison_records(cmp: &Comparison) -> Vec<OutputRecord> {
    let r = &cmp.report;
    let mut rows = records(r);
    rows.extend(cmp.deltas.iter().map(|d| OutputRecord {
        scenario: r.scenario.clone(),
        variant: d.variant.name(),
        metric: format!("{DELTA_PREFIX}{}", d.metric),
        mean: d.mean,
        stderr: d.stderr,
        replications: r.replications,
        master_seed: r.master_seed,
    }));
    rows
}

fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_real(x: f64) -> String {
    if x.is_finite() {
        real(x)
    } else {
        "null".into()
    }
}

pub fn to_csv(rows: &[OutputRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = "writing to memory cannot fail";
    w.write_record(CSV_HEADER).expect(io);
    for r in rows {
        w.write_record([
            r.scenario.as_str(),
            r.variant.as_str(),
            r.metric.as_str(),
            &real(r.mean),
            &real(r.stderr),
            &r.replications.to_string(),
            &r.master_seed.to_string(),
        ])
        .expect(io);
    }
    String::from_utf8(w.into_inner().expect(io)).expect("fields are UTF-8")
}

pub fn to_json(rows: &[OutputRecord]) -> String {
    let q = |s: &str| serde_json::to_string(s).expect("strings always serialize");
    let mut out = format!("{{\n  \"schema_version\": {JSON_SCHEMA_VERSION},\n  \"records\": [");
    for (i, r) in rows.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let _ = write!(
            out,
            "    {{\"scenario\": {}, \"variant\": {}, \"metric\": {}, \"mean\": {}, \"stderr\": {}, \"replications\": {}, \"master_seed\": {}}}",
            q(&r.scenario),
            q(&r.variant),
            q(&r.metric),
            json_real(r.mean),
            json_real(r.stderr),
            r.replications,
            r.master_seed,
        );
    }
    out.push_str(if rows.is_empty() {
        "]\n}\n"
    } else {
        "\n  ]\n}\n"
    });
    out
}

pub fn render(rows: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => to_json(rows),
    }
}

/// Writes rows to `dest`, or to stdout when `dest` is `None`.
pub fn write_records(
    rows: &[OutputRecord],
    format: Format,
    dest: Option<&Path>,
) -> Result<(), ReportError> {
    let text = render(rows, format);
    match dest {
        Some(path) => std::fs::write(path, text).map_err(|source| ReportError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            use io::Write;
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|source| ReportError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Encodes one aggregate report.
pub fn emit_report(
    report: &AggregateReport,
    format: Format,
    dest: Option<&Path>,
) -> Result<(), ReportError> {
    if report.variants.is_empty() {
        return Err(ReportError::Empty);
    }
    write_records(&records(report), format, dest)
}
