use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Version of the JSON layout written by [`Report::to_json`].
pub const SCHEMA_VERSION: u32 = 1;

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub claim: String,
    pub inputs: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    pub fn new(claim: impl Into<String>, inputs: Value, expected: Value, computed: Value, pass: bool) -> Self {
        Record { claim: claim.into(), inputs, expected, computed, pass, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A check that could not run to completion.
    pub fn error(claim: impl Into<String>, inputs: Value, err: &anyhow::Error) -> Self {
        Record::new(claim, inputs, Value::Null, serde_json::json!({ "error": format!("{err:#}") }), false)
    }
}

/// Wall time of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckTime {
    pub check: String,
    pub millis: u64,
}

/// Everything that varies between identical runs.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub started_unix_ms: u64,
    pub total_millis: u64,
    pub checks: Vec<CheckTime>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub seed: u64,
    pub suites: Vec<String>,
    pub records: Vec<Record>,
    pub timing: Timing,
}

#[derive(Serialize)]
struct Stable<'a> {
    schema_version: u32,
    seed: u64,
    suites: &'a [String],
    records: &'a [Record],
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without the `timing` field; identical for identical configurations.
    pub fn to_stable_json(&self) -> String {
        let s = Stable { schema_version: self.schema_version, seed: self.seed, suites: &self.suites, records: &self.records };
        serde_json::to_string_pretty(&s).expect("report serializes")
    }

    /// Fixed-width table: one row per claim group, then the failing claims.
    pub fn summary_table(&self) -> String {
        let mut groups: Vec<(String, usize, usize)> = Vec::new();
        for r in &self.records {
            let key = group_of(&r.claim);
            match groups.iter_mut().find(|g| g.0 == key) {
                Some(g) => {
                    g.1 += 1;
                    g.2 += usize::from(r.pass);
                }
                None => groups.push((key, 1, usize::from(r.pass))),
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "{:<36} {:>7} {:>7} {:>7}", "claim group", "checks", "passed", "status");
        let _ = writeln!(out, "{}", "-".repeat(60));
        for (g, total, passed) in &groups {
            let status = if passed == total { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{:<36} {:>7} {:>7} {:>7}", truncate(g, 36), total, passed, status);
        }
        let _ = writeln!(out, "{}", "-".repeat(60));
        let passed = self.records.iter().filter(|r| r.pass).count();
        let _ = writeln!(out, "{:<36} {:>7} {:>7} {:>7}", "total", self.records.len(), passed, if self.all_pass() { "PASS" } else { "FAIL" });
        let failing: Vec<&Record> = self.failures().collect();
        if !failing.is_empty() {
            let _ = writeln!(out, "\nfailing claims:");
            for r in failing {
                let _ = writeln!(out, "  {}", r.claim);
            }
        }
        out
    }
}

/// First two path segments of a claim id.
fn group_of(claim: &str) -> String {
    claim.splitn(3, '/').take(2).collect::<Vec<_>>().join("/")
}

fn truncate(s: &str, w: usize) -> String {
    if s.chars().count() <= w {
        s.to_string()
    } else {
        s.chars().take(w - 1).chain(std::iter::once('~')).collect()
    }
}
