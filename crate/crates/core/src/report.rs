//! Per-identity verdicts with violating basis tuples and exact residuals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::vec_is_zero;
use crate::scalar::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tuple: Vec<String>,
    #[serde(with = "crate::scalar::serde_str_vec")]
    pub residual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub identity: String,
    pub tuples_checked: usize,
    pub violations: Vec<Violation>,
}

impl IdentityVerdict {
    pub fn new(identity: impl Into<String>) -> Self {
        IdentityVerdict {
            identity: identity.into(),
            tuples_checked: 0,
            violations: Vec::new(),
        }
    }

    /// Records one evaluated tuple; nonzero residuals become violations.
    pub fn record(&mut self, tuple: Vec<String>, residual: Vec<Rational>) {
        self.tuples_checked += 1;
        if !vec_is_zero(&residual) {
            self.violations.push(Violation { tuple, residual });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identities: Vec<IdentityVerdict>,
}

impl IdentityReport {
    pub fn new(identities: Vec<IdentityVerdict>) -> Self {
        IdentityReport { identities }
    }

    pub fn passed(&self) -> bool {
        self.identities.iter().all(IdentityVerdict::passed)
    }

    pub fn verdict(&self, identity: &str) -> Option<&IdentityVerdict> {
        self.identities.iter().find(|v| v.identity == identity)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.identities
            .iter()
            .filter(|v| !v.passed())
            .map(|v| v.identity.as_str())
            .collect()
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.identities.extend(other.identities);
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.identities {
            if v.passed() {
                writeln!(f, "pass  {:<28} {} tuples", v.identity, v.tuples_checked)?;
            } else {
                writeln!(
                    f,
                    "FAIL  {:<28} {} of {} tuples",
                    v.identity,
                    v.violations.len(),
                    v.tuples_checked
                )?;
                for viol in &v.violations {
                    let res: Vec<String> = viol.residual.iter().map(format_rational).collect();
                    writeln!(f, "      ({}) residual [{}]", viol.tuple.join(","), res.join(", "))?;
                }
            }
        }
        Ok(())
    }
}

pub fn even_label(i: usize) -> String {
    format!("e{i}")
}

pub fn odd_label(j: usize) -> String {
    format!("f{j}")
}

pub fn module_even_label(u: usize) -> String {
    format!("u{u}")
}

pub fn module_odd_label(w: usize) -> String {
    format!("w{w}")
}
