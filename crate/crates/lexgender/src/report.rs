//! JSON, aligned-table and TSV renderings of results.

use std::fmt::Write;

use lexgender_core::corpus::CompositionReport;
use lexgender_core::eval::{EvalReport, Metrics};
use lexgender_core::grid::GridReport;
use lexgender_core::ClassificationResult;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
    Tsv,
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn verdict_summary(result: &ClassificationResult, sep: &str) -> String {
    result
        .verdicts
        .iter()
        .map(|v| {
            format!(
                "{}={}({}/{})",
                v.provider_id, v.label, v.masc_count, v.fem_count
            )
        })
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn classification(results: &[ClassificationResult], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(results),
        OutputFormat::Tsv => {
            let mut out = String::from("word\tcombined\troute\tverdicts\n");
            for r in results {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.word,
                    r.combined,
                    r.route,
                    verdict_summary(r, ",")
                );
            }
            out
        }
        OutputFormat::Table => {
            let width = results
                .iter()
                .map(|r| r.word.chars().count())
                .max()
                .unwrap_or(4)
                .max(4);
            let mut out = format!(
                "{:<width$}  {:<9}  {:<16}  verdicts (masc/fem)\n",
                "word", "combined", "route"
            );
            for r in results {
                let _ = writeln!(
                    out,
                    "{:<width$}  {:<9}  {:<16}  {}",
                    r.word,
                    r.combined,
                    r.route,
                    verdict_summary(r, "  ")
                );
            }
            out
        }
    }
}

fn metric_rows(report: &EvalReport) -> Vec<(&str, &Metrics)> {
    report
        .per_provider
        .iter()
        .map(|(k, m)| (k.as_str(), m))
        .chain(std::iter::once(("combined", &report.combined)))
        .collect()
}

pub fn evaluation(report: &EvalReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Tsv => {
            let mut out = String::from("provider\tn\tprecision\trecall\tf1\taccuracy\n");
            for (name, m) in metric_rows(report) {
                let _ = writeln!(
                    out,
                    "{name}\t{}\t{:.4}\t{:.4}\t{:.4}\t{:.4}",
                    m.n, m.weighted_precision, m.weighted_recall, m.weighted_f1, m.accuracy
                );
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:<12} {:>5} {:>6} {:>6} {:>6} {:>6}\n",
                "", "n", "P", "R", "F1", "Acc"
            );
            for (name, m) in metric_rows(report) {
                let _ = writeln!(
                    out,
                    "{name:<12} {:>5} {:>6.2} {:>6.2} {:>6.2} {:>6.2}",
                    m.n, m.weighted_precision, m.weighted_recall, m.weighted_f1, m.accuracy
                );
            }
            for (name, m) in metric_rows(report) {
                let _ = write!(out, "\nconfusion ({name}):\n{}", m.confusion);
            }
            out
        }
    }
}

pub fn grid(report: &GridReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Tsv | OutputFormat::Table => {
            let mut out = String::from("d\tt\tw\tcorrect\taccuracy\n");
            for cell in &report.cells {
                let (d, t, w) = cell.params.as_tuple();
                let _ = writeln!(out, "{d}\t{t}\t{w}\t{}\t{:.4}", cell.correct, cell.accuracy);
            }
            let (d, t, w) = report.best.as_tuple();
            let _ = writeln!(
                out,
                "# best\td={d}\tt={t}\tw={w}\taccuracy={:.4}\tn={}",
                report.best_accuracy, report.n
            );
            out
        }
    }
}

#[derive(Serialize)]
struct CorpusOutput<'a> {
    composition: &'a CompositionReport,
    gendered_sample: &'a [String],
}

pub fn corpus(composition: &CompositionReport, sample: &[String], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(&CorpusOutput {
            composition,
            gendered_sample: sample,
        }),
        OutputFormat::Table => {
            let mut out = composition.to_string();
            let _ = writeln!(
                out,
                "\ngendered sample ({}): {}",
                sample.len(),
                sample.join(", ")
            );
            out
        }
        OutputFormat::Tsv => {
            let mut out = String::from("label\tNN\tNNS\tall\n");
            let rows = [
                ("masc", &composition.masc),
                ("fem", &composition.fem),
                ("neut", &composition.neut),
                ("not_found", &composition.not_found),
                ("all", &composition.total),
            ];
            for (name, c) in rows {
                let _ = writeln!(out, "{name}\t{}\t{}\t{}", c.singular, c.plural, c.all);
            }
            out
        }
    }
}
