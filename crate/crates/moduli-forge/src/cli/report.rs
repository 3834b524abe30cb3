//! Deterministic JSON reports.
//!
//! Identical inputs produce byte-identical JSON except for the timing,
//! which is isolated in the final `elapsed_ms` key: maps are ordered,
//! lists are sorted or constructed deterministically, and every number is
//! a string holding a canonical exact form.

use crate::evidence::{Certificate, EvidenceRecord};
use serde::Serialize;
use std::collections::BTreeMap;

/// Process exit codes of the command-line front end.
pub mod exit_code {
    /// Everything certified / affirmative verdict.
    pub const OK: i32 = 0;
    /// A sound mathematical verdict in the negative
    /// (not equivalent, unclassified, empty census).
    pub const NEGATIVE: i32 = 1;
    /// Bad input: syntax errors, domain errors, unknown commands.
    pub const INPUT: i32 = 2;
    /// A certificate that must hold failed to verify.
    pub const CERT_FAIL: i32 = 3;
}

/// The verdict object every subcommand emits on standard output.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdicts: BTreeMap<String, String>,
    pub listings: BTreeMap<String, Vec<String>>,
    pub certificates: Vec<Certificate>,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
    pub error: Option<String>,
    pub exit_code: i32,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            schema: 1,
            command: command.into(),
            inputs: BTreeMap::new(),
            verdicts: BTreeMap::new(),
            listings: BTreeMap::new(),
            certificates: Vec::new(),
            citations: Vec::new(),
            notes: Vec::new(),
            error: None,
            exit_code: exit_code::OK,
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.verdicts.insert(key.into(), value.into());
        self
    }

    pub fn listing(&mut self, key: &str, values: Vec<String>) -> &mut Self {
        self.listings.insert(key.into(), values);
        self
    }

    pub fn cite(&mut self, text: impl Into<String>) -> &mut Self {
        self.citations.push(text.into());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    /// Absorbs an evidence record; a failed certificate flips the exit code
    /// to [`exit_code::CERT_FAIL`].
    pub fn absorb(&mut self, record: EvidenceRecord) -> &mut Self {
        if !record.all_passed() && self.exit_code == exit_code::OK {
            self.exit_code = exit_code::CERT_FAIL;
        }
        for mut cert in record.certificates {
            cert.name = format!("{}: {}", record.title, cert.name);
            self.certificates.push(cert);
        }
        self
    }

    /// Builds the input-error report for a failed command.
    pub fn input_error(command: &str, err: &crate::Error) -> Report {
        let mut r = Report::new(command);
        r.error = Some(err.to_string());
        r.exit_code = exit_code::INPUT;
        r
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One-line-per-item human summary (written to stderr with --verbose).
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} (exit {})\n", self.command, self.exit_code));
        for (k, v) in &self.verdicts {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for (k, vs) in &self.listings {
            out.push_str(&format!("  {k}: {}\n", vs.join("; ")));
        }
        for c in &self.certificates {
            let tag = if c.status.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{tag}] {}\n", c.name));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("  error: {e}\n"));
        }
        out
    }
}
