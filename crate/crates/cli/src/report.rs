//! Report rendering. The JSON layout is fixed: `suite`, `seed`, `config`,
//! `results` (each `name`, `verdict`, `residual`, `tolerance`, `witnesses`
//! as `point`/`value` pairs of `[re, im]`), then `summary`. CSV flattens one
//! row per result with the first witness inlined. Both renderings are pure
//! functions of the report, so identical reports produce identical bytes;
//! non-finite numbers render as JSON `null` and empty CSV fields.

use std::io;

use gutzmer::verify::ConfigValue;
use gutzmer::{CheckResult, Report, Witness};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

struct ConfigMap<'a>(&'a [(String, ConfigValue)]);

impl Serialize for ConfigMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (key, value) in self.0 {
            match value {
                ConfigValue::Unsigned(u) => map.serialize_entry(key, u)?,
                ConfigValue::Real(x) => map.serialize_entry(key, x)?,
                ConfigValue::Text(s) => map.serialize_entry(key, s)?,
                ConfigValue::RealList(xs) => map.serialize_entry(key, xs)?,
            }
        }
        map.end()
    }
}

struct WitnessList<'a>(&'a [Witness]);

impl Serialize for WitnessList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            point: [f64; 2],
            value: [f64; 2],
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for w in self.0 {
            seq.serialize_element(&Entry {
                point: [w.point.re, w.point.im],
                value: [w.value.re, w.value.im],
            })?;
        }
        seq.end()
    }
}

#[derive(Serialize)]
struct ResultBody<'a> {
    name: &'a str,
    verdict: &'a str,
    residual: f64,
    tolerance: f64,
    witnesses: WitnessList<'a>,
}

impl<'a> ResultBody<'a> {
    fn new(r: &'a CheckResult) -> Self {
        Self {
            name: &r.name,
            verdict: r.verdict.as_str(),
            residual: r.residual,
            tolerance: r.tolerance,
            witnesses: WitnessList(&r.witnesses),
        }
    }
}

#[derive(Serialize)]
struct Summary {
    pass: usize,
    fail: usize,
    inconclusive: usize,
}

#[derive(Serialize)]
struct ReportBody<'a> {
    suite: &'a str,
    seed: u64,
    config: ConfigMap<'a>,
    results: Vec<ResultBody<'a>>,
    summary: Summary,
}

pub fn render_json(report: &Report) -> String {
    let (pass, fail, inconclusive) = report.summary();
    let body = ReportBody {
        suite: &report.suite,
        seed: report.seed,
        config: ConfigMap(&report.config),
        results: report.results.iter().map(ResultBody::new).collect(),
        summary: Summary { pass, fail, inconclusive },
    };
    let mut text = serde_json::to_string_pretty(&body).expect("report serialization is total");
    text.push('\n');
    text
}

fn csv_number(x: f64) -> String {
    if x.is_finite() {
        x.to_string()
    } else {
        String::new()
    }
}

pub fn render_csv(report: &Report) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "name",
            "verdict",
            "residual",
            "tolerance",
            "witness_point_re",
            "witness_point_im",
            "witness_value_re",
            "witness_value_im",
        ])
        .expect("header fits in memory");
    for r in &report.results {
        let witness = r.witnesses.first();
        let cells = [
            r.name.clone(),
            r.verdict.as_str().to_string(),
            csv_number(r.residual),
            csv_number(r.tolerance),
            witness.map(|w| csv_number(w.point.re)).unwrap_or_default(),
            witness.map(|w| csv_number(w.point.im)).unwrap_or_default(),
            witness.map(|w| csv_number(w.value.re)).unwrap_or_default(),
            witness.map(|w| csv_number(w.value.im)).unwrap_or_default(),
        ];
        writer.write_record(&cells).expect("row fits in memory");
    }
    let bytes = writer.into_inner().expect("csv buffer flushes");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    }
}

/// Writes the rendered report to the path, or to stdout when none is given.
pub fn emit_report(
    report: &Report,
    format: Format,
    path: Option<&std::path::Path>,
) -> io::Result<()> {
    let text = render(report, format);
    match path {
        Some(path) => std::fs::write(path, text),
        None => {
            use io::Write;
            io::stdout().write_all(text.as_bytes())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gutzmer::{CheckResult, ComplexScalar};

    fn sample_report() -> Report {
        Report {
            suite: "schwarz".into(),
            seed: 42,
            config: vec![
                ("order".into(), ConfigValue::Unsigned(32)),
                ("radii".into(), ConfigValue::RealList(vec![1.0, 2.0])),
                ("definitions".into(), ConfigValue::Text("bundled".into())),
            ],
            results: vec![CheckResult::from_slack("schwarz/identity", -1e-12, 1e-6)
                .with_witness(gutzmer::Witness::new(
                    ComplexScalar::new(1.0, 0.0),
                    ComplexScalar::new(0.5, -0.25),
                ))],
        }
    }

    #[test]
    fn empty_report_has_zero_summary_and_no_results() {
        let report = Report { suite: "parseval".into(), seed: 7, config: vec![], results: vec![] };
        let json = render_json(&report);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["results"].as_array().unwrap().len(), 0);
        assert_eq!(parsed["summary"]["pass"], 0);
        assert_eq!(parsed["summary"]["fail"], 0);
        assert_eq!(parsed["summary"]["inconclusive"], 0);
    }

    #[test]
    fn json_fields_appear_in_schema_order() {
        let json = render_json(&sample_report());
        let suite_at = json.find("\"suite\"").unwrap();
        let seed_at = json.find("\"seed\"").unwrap();
        let config_at = json.find("\"config\"").unwrap();
        let results_at = json.find("\"results\"").unwrap();
        let summary_at = json.find("\"summary\"").unwrap();
        assert!(suite_at < seed_at && seed_at < config_at);
        assert!(config_at < results_at && results_at < summary_at);
        // Config keys keep their insertion order, not alphabetical order.
        assert!(json.find("\"order\"").unwrap() < json.find("\"radii\"").unwrap());
        assert!(json.find("\"radii\"").unwrap() < json.find("\"definitions\"").unwrap());
    }

    #[test]
    fn witnesses_serialize_as_point_value_pairs() {
        let json = render_json(&sample_report());
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let w = &parsed["results"][0]["witnesses"][0];
        assert_eq!(w["point"][0], 1.0);
        assert_eq!(w["value"][1], -0.25);
        assert_eq!(parsed["results"][0]["verdict"], "pass");
    }

    #[test]
    fn single_pass_check_yields_one_csv_row() {
        let csv = render_csv(&sample_report());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("name,verdict"));
        assert!(lines[1].contains("schwarz/identity,pass"));
    }

    #[test]
    fn rendering_twice_is_byte_identical() {
        let report = sample_report();
        assert_eq!(render_json(&report), render_json(&report));
        assert_eq!(render_csv(&report), render_csv(&report));
    }

    #[test]
    fn non_finite_numbers_degrade_to_null_and_blank() {
        let mut report = sample_report();
        report.results[0].residual = f64::INFINITY;
        let json = render_json(&report);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(parsed["results"][0]["residual"].is_null());
        let csv = render_csv(&report);
        assert!(csv.lines().nth(1).unwrap().contains("pass,,"));
    }

    #[test]
    fn notes_stay_out_of_the_serialized_schema() {
        let mut report = sample_report();
        report.results[0].notes.push("grid guard 1e-3".into());
        let parsed: serde_json::Value = serde_json::from_str(&render_json(&report)).unwrap();
        assert!(parsed["results"][0].get("notes").is_none());
    }
}
