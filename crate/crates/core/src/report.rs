//! JSON-lines and plain-text verdict reports.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

use crate::engine::{Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Text,
    #[default]
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportOptions {
    pub format: Format,
    /// Report measured times. Off by default so that identical runs produce
    /// identical bytes; `elapsed_ms` is then 0.
    pub timing: bool,
}

#[derive(Serialize)]
struct Line<'a> {
    statement: &'a str,
    params: &'a BTreeMap<String, i64>,
    pass: bool,
    witness: Option<&'a str>,
    elapsed_ms: u128,
    status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(verdicts: &[Verdict]) -> Self {
        let passed = verdicts.iter().filter(|v| v.pass).count();
        Self {
            total: verdicts.len(),
            passed,
            failed: verdicts.len() - passed,
        }
    }
}

#[derive(Serialize)]
struct SummaryLine {
    summary: Summary,
}

/// Writes one line per verdict followed by a summary line.
pub fn emit_report(
    verdicts: &[Verdict],
    sink: &mut impl Write,
    options: ReportOptions,
) -> io::Result<()> {
    for v in verdicts {
        let elapsed_ms = if options.timing {
            v.elapsed.as_millis()
        } else {
            0
        };
        match options.format {
            Format::Jsonl => {
                let line = Line {
                    statement: &v.statement,
                    params: &v.params,
                    pass: v.pass,
                    witness: v.witness.as_deref(),
                    elapsed_ms,
                    status: v.status,
                };
                serde_json::to_writer(&mut *sink, &line)?;
                sink.write_all(b"\n")?;
            }
            Format::Text if options.timing => writeln!(sink, "{v} ({elapsed_ms} ms)")?,
            Format::Text => writeln!(sink, "{v}")?,
        }
    }
    let summary = Summary::of(verdicts);
    match options.format {
        Format::Jsonl => {
            serde_json::to_writer(&mut *sink, &SummaryLine { summary })?;
            sink.write_all(b"\n")?;
        }
        Format::Text => writeln!(
            sink,
            "total {} passed {} failed {}",
            summary.total, summary.passed, summary.failed
        )?,
    }
    sink.flush()
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use super::*;

    fn render(verdicts: &[Verdict], options: ReportOptions) -> String {
        let mut out = Vec::new();
        emit_report(verdicts, &mut out, options).unwrap();
        String::from_utf8(out).unwrap()
    }

    fn sample() -> Vec<Verdict> {
        vec![
            Verdict::new(
                "thm-qsum-plain",
                &[("n", 2), ("alpha", 1)],
                None,
                Duration::from_millis(7),
            ),
            Verdict::new(
                "thm-qsum-plain",
                &[("n", 3), ("alpha", 1)],
                Some("1 + q".into()),
                Duration::ZERO,
            ),
        ]
    }

    #[test]
    fn empty_report_is_only_the_summary() {
        assert_eq!(
            render(&[], ReportOptions::default()),
            "{\"summary\":{\"total\":0,\"passed\":0,\"failed\":0}}\n"
        );
    }

    #[test]
    fn jsonl_lines() {
        let out = render(&sample()[..1], ReportOptions::default());
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[0],
            r#"{"statement":"thm-qsum-plain","params":{"alpha":1,"n":2},"pass":true,"witness":null,"elapsed_ms":0,"status":"proved"}"#
        );
        let timed = render(
            &sample()[..1],
            ReportOptions {
                timing: true,
                ..Default::default()
            },
        );
        assert!(timed.contains("\"elapsed_ms\":7"));
    }

    #[test]
    fn failed_count_matches_failing_lines() {
        let out = render(&sample(), ReportOptions::default());
        let values: Vec<serde_json::Value> = out
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        let failing = values.iter().filter(|v| v["pass"] == false).count();
        assert_eq!(failing, 1);
        assert_eq!(values[2]["summary"]["failed"], 1);
        assert_eq!(values[1]["witness"], "1 + q");
    }

    #[test]
    fn text_lines() {
        let out = render(
            &sample(),
            ReportOptions {
                format: Format::Text,
                timing: false,
            },
        );
        assert_eq!(
            out,
            "PASS thm-qsum-plain alpha=1 n=2\nFAIL thm-qsum-plain alpha=1 n=3 witness: 1 + q\ntotal 2 passed 1 failed 1\n"
        );
    }
}
