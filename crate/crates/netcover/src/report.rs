//! CSV output for sweep results.
//!
//! Summary columns: `n,algorithm,mean_recruits,sd_recruits,runs,exhausted_runs`.
//! Detail columns: `graph_id,seed,algorithm,initial_node,final_recruits,termination,illegal_queries`.
//! Floats carry six significant digits.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::experiment::{RunRecord, SummaryRow};

pub const SUMMARY_HEADER: &str = "n,algorithm,mean_recruits,sd_recruits,runs,exhausted_runs";
pub const DETAIL_HEADER: &str =
    "graph_id,seed,algorithm,initial_node,final_recruits,termination,illegal_queries";

/// Formats like C's `%.6g`: six significant digits, trailing zeros dropped,
/// exponent form outside `[1e-4, 1e6)`.
pub fn fmt_sig6(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        return format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (5 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Serialize, Deserialize)]
struct SummaryCsv {
    n: usize,
    algorithm: String,
    mean_recruits: String,
    sd_recruits: String,
    runs: usize,
    exhausted_runs: usize,
}

#[derive(Serialize)]
struct DetailCsv<'a> {
    graph_id: &'a str,
    seed: u64,
    algorithm: &'a str,
    initial_node: Option<usize>,
    final_recruits: usize,
    termination: &'static str,
    illegal_queries: usize,
}

pub fn write_summary<W: Write>(rows: &[SummaryRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(SUMMARY_HEADER.split(','))?;
    for r in rows {
        w.serialize(SummaryCsv {
            n: r.n,
            algorithm: r.algorithm.clone(),
            mean_recruits: fmt_sig6(r.mean_recruits),
            sd_recruits: fmt_sig6(r.sd_recruits),
            runs: r.runs,
            exhausted_runs: r.exhausted_runs,
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_summary<R: Read>(input: R) -> csv::Result<Vec<SummaryRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    rdr.deserialize::<SummaryCsv>()
        .map(|row| {
            let row = row?;
            let num = |s: &str| s.parse::<f64>().unwrap_or(f64::NAN);
            Ok(SummaryRow {
                n: row.n,
                algorithm: row.algorithm,
                mean_recruits: num(&row.mean_recruits),
                sd_recruits: num(&row.sd_recruits),
                runs: row.runs,
                exhausted_runs: row.exhausted_runs,
            })
        })
        .collect()
}

pub fn write_detail<W: Write>(records: &[RunRecord], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(DETAIL_HEADER.split(','))?;
    for r in records {
        w.serialize(DetailCsv {
            graph_id: &r.graph_id,
            seed: r.seed,
            algorithm: &r.algorithm,
            initial_node: r.initial_node,
            final_recruits: r.final_recruits,
            termination: r.termination.name(),
            illegal_queries: r.audit.illegal(),
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn summary_csv_string(rows: &[SummaryRow]) -> String {
    let mut buf = Vec::new();
    write_summary(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

pub fn detail_csv_string(records: &[RunRecord]) -> String {
    let mut buf = Vec::new();
    write_detail(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

pub fn emit_csv(rows: &[SummaryRow], path: &Path) -> std::io::Result<()> {
    std::fs::write(path, summary_csv_string(rows))
}

pub fn emit_detail_csv(records: &[RunRecord], path: &Path) -> std::io::Result<()> {
    std::fs::write(path, detail_csv_string(records))
}
