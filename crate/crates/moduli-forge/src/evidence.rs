//! Certificate records returned by the analyzers.
//!
//! Every nontrivial verdict is backed by a bundle of named certificates with
//! a status and a witness string, so reports can show exactly what was
//! checked and at which level an identity held.

use serde::Serialize;
use std::fmt;

/// Outcome of one certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertStatus {
    /// Identity holds on the nose.
    Pass,
    /// Projective identity holds strictly (all cross-products vanish).
    PassStrict,
    /// Projective identity holds modulo the curve form.
    PassOnCurve,
    /// The check failed; the witness explains how.
    Fail,
}

impl CertStatus {
    pub fn passed(self) -> bool {
        !matches!(self, CertStatus::Fail)
    }
}

/// A single named check with its outcome and a human-readable witness.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub name: String,
    pub status: CertStatus,
    pub witness: String,
}

impl Certificate {
    pub fn new(name: impl Into<String>, status: CertStatus, witness: impl Into<String>) -> Self {
        Certificate {
            name: name.into(),
            status,
            witness: witness.into(),
        }
    }

    pub fn pass(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(name, CertStatus::Pass, witness)
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(name, CertStatus::Fail, witness)
    }
}

/// A titled bundle of certificates.
#[derive(Clone, Debug, Serialize)]
pub struct EvidenceRecord {
    pub title: String,
    pub certificates: Vec<Certificate>,
}

impl EvidenceRecord {
    pub fn new(title: impl Into<String>) -> Self {
        EvidenceRecord {
            title: title.into(),
            certificates: Vec::new(),
        }
    }

    pub fn push(&mut self, cert: Certificate) {
        self.certificates.push(cert);
    }

    /// True when every certificate passed.
    pub fn all_passed(&self) -> bool {
        self.certificates.iter().all(|c| c.status.passed())
    }

    /// Names of failed certificates, for error messages.
    pub fn failures(&self) -> Vec<&str> {
        self.certificates
            .iter()
            .filter(|c| !c.status.passed())
            .map(|c| c.name.as_str())
            .collect()
    }
}

impl fmt::Display for EvidenceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.certificates {
            let tag = match c.status {
                CertStatus::Pass => "pass",
                CertStatus::PassStrict => "pass (strict)",
                CertStatus::PassOnCurve => "pass (on curve)",
                CertStatus::Fail => "FAIL",
            };
            writeln!(f, "  [{tag}] {}: {}", c.name, c.witness)?;
        }
        Ok(())
    }
}
