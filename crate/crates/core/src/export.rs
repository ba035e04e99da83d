//! CSV and JSON artifacts.
//!
//! CSV floats are written with 17 significant digits (`{:.16e}`), enough to
//! round-trip any double. JSON uses serde's shortest round-trip form.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::averaging::AverageTrace;
use crate::chaos::{TupleChaosReport, TupleSummary, Verification};
use crate::error::Result;
use crate::pinsker::FiberReport;
use crate::seqgen::ConditionStarReport;

/// A double with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A CSV table buffered in memory.
pub struct Csv {
    writer: csv::Writer<Vec<u8>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).expect("writing to memory");
        Csv { writer }
    }

    pub fn row(&mut self, cells: &[String]) {
        self.writer.write_record(cells).expect("writing to memory");
    }

    pub fn into_string(self) -> String {
        let bytes = self.writer.into_inner().expect("flushing to memory");
        String::from_utf8(bytes).expect("cells are UTF-8")
    }

    pub fn write(self, path: &Path) -> Result<()> {
        fs::write(path, self.into_string())?;
        Ok(())
    }
}

pub fn condition_star_csv(report: &ConditionStarReport) -> Csv {
    let mut csv = Csv::new(&["n", "count", "density"]);
    for p in &report.checkpoints {
        csv.row(&[p.n.to_string(), p.count.to_string(), fmt_f64(p.density)]);
    }
    csv
}

pub fn trace_csv(trace: &AverageTrace) -> Csv {
    let mut csv = Csv::new(&["n", "value", "running_min", "running_max", "err_bound"]);
    for c in &trace.checkpoints {
        csv.row(&[
            c.n.to_string(),
            fmt_f64(c.value),
            fmt_f64(c.running_min),
            fmt_f64(c.running_max),
            fmt_f64(trace.err_bound),
        ]);
    }
    csv
}

pub fn tuple_report_csv(report: &TupleChaosReport) -> Csv {
    let mut csv = Csv::new(&["n", "max_average", "min_average", "err_bound"]);
    for c in &report.checkpoints {
        csv.row(&[
            c.n.to_string(),
            fmt_f64(c.max_average),
            fmt_f64(c.min_average),
            fmt_f64(report.err_bound),
        ]);
    }
    csv
}

pub fn tuple_scan_csv(n: u64, tuples: &[TupleSummary]) -> Csv {
    let mut csv = Csv::new(&["tuple", "n", "max_average", "min_average"]);
    for t in tuples {
        csv.row(&[
            t.index.to_string(),
            n.to_string(),
            fmt_f64(t.max_average),
            fmt_f64(t.min_average),
        ]);
    }
    csv
}

pub fn phase_checks_csv(v: &Verification) -> Csv {
    let mut csv = Csv::new(&[
        "phase",
        "kind",
        "checkpoint",
        "bound",
        "bound_value",
        "measured",
        "slack",
        "passed",
    ]);
    for c in &v.checks {
        csv.row(&[
            c.phase.to_string(),
            c.kind.to_string(),
            c.checkpoint.to_string(),
            c.bound.to_string(),
            fmt_f64(c.bound.to_f64()),
            fmt_f64(c.measured),
            fmt_f64(c.slack),
            c.passed.to_string(),
        ]);
    }
    csv
}

pub fn fiber_csv(report: &FiberReport) -> Csv {
    let mut csv = Csv::new(&["theta", "sample", "value"]);
    for f in &report.fibers {
        for (j, v) in f.averages.iter().enumerate() {
            csv.row(&[fmt_f64(f.theta.to_f64()), j.to_string(), fmt_f64(*v)]);
        }
    }
    csv
}

/// `sample, seed, value` rows.
pub fn samples_csv(seeds: &[u64], values: &[f64]) -> Csv {
    let mut csv = Csv::new(&["sample", "seed", "value"]);
    for (j, (s, v)) in seeds.iter().zip(values).enumerate() {
        csv.row(&[j.to_string(), s.to_string(), fmt_f64(*v)]);
    }
    csv
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 123456789.0, 0.0] {
            let s = fmt_f64(x);
            let mantissa = s
                .split('e')
                .next()
                .unwrap()
                .trim_start_matches('-')
                .replace('.', "");
            assert_eq!(mantissa.len(), 17, "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn csv_layout() {
        let csv = samples_csv(&[7, 8], &[0.5, 0.25]);
        assert_eq!(
            csv.into_string(),
            "sample,seed,value\n0,7,5.0000000000000000e-1\n1,8,2.5000000000000000e-1\n"
        );
    }
}
