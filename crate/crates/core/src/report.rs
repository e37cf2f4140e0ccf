//! Machine-readable verification reports.
//!
//! Rationals and polynomials are always serialized as strings (`"p/q"`,
//! `"(1/2)*x^2 + x"`) so JSON consumers never see floating point.

use std::fmt::Display;

use serde::Serialize;

use crate::matrix::Mismatch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The relation fails, as the theory predicts for this case.
    ExpectedFail,
    /// The relation holds where a failure was predicted.
    UnexpectedPass,
}

impl Status {
    pub fn from_outcome(holds: bool, expected_to_hold: bool) -> Self {
        match (holds, expected_to_hold) {
            (true, true) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::ExpectedFail,
            (true, false) => Status::UnexpectedPass,
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::ExpectedFail)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "expected-fail",
            Status::UnexpectedPass => "unexpected-pass",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Entry {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },
    Case {
        case: String,
        lhs: String,
        rhs: String,
    },
}

impl Witness {
    pub fn entry<T: Display>(m: &Mismatch<T>) -> Self {
        Witness::Entry {
            row: m.row,
            col: m.col,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }
    }

    pub fn case(case: impl Into<String>, lhs: impl Display, rhs: impl Display) -> Self {
        Witness::Case {
            case: case.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub b: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckRecord {
    pub fn new(name: &str, b: u32, n: u32, status: Status, witness: Option<Witness>) -> Self {
        CheckRecord {
            name: name.to_string(),
            b,
            n,
            status,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub base: u32,
    pub depth: u32,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: &str, base: u32, depth: u32, checks: Vec<CheckRecord>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            base,
            depth,
            passed: checks.iter().all(|c| c.status.is_ok()),
            checks,
        }
    }
}
