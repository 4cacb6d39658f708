//! Outcome records produced by the verification suites.

use std::collections::BTreeMap;

use serde::Serialize;

/// Status of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
    Error,
}

/// The first failing case of a suite, with canonical polynomial text for the
/// expected and actual values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstFailure {
    pub params: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

/// Outcome record of one verification suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    pub cases_checked: u64,
    pub first_failure: Option<FirstFailure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            params: BTreeMap::new(),
            status: Status::Verified,
            cases_checked: 0,
            first_failure: None,
            elapsed_ms: 0,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Count one passing case.
    pub fn pass(&mut self) {
        self.cases_checked += 1;
    }

    /// Count one failing case, keeping only the first failure.
    pub fn fail(&mut self, params: BTreeMap<String, String>, expected: String, actual: String) {
        self.cases_checked += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(FirstFailure {
                params,
                expected,
                actual,
            });
        }
        self.status = Status::Counterexample;
    }

    /// Record one case outcome.
    pub fn case(
        &mut self,
        ok: bool,
        params: impl Fn() -> BTreeMap<String, String>,
        expected: impl Fn() -> String,
        actual: impl Fn() -> String,
    ) {
        if ok {
            self.pass();
        } else {
            self.fail(params(), expected(), actual());
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Copy with the timing field cleared, for byte-reproducible output.
    pub fn without_timing(&self) -> Self {
        let mut out = self.clone();
        out.elapsed_ms = 0;
        out
    }
}

/// Compact helper to build failure parameter maps:
/// `fail_params(&[("m", 1), ("n", 2)])`.
pub fn fail_params<T: ToString>(pairs: &[(&str, T)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}
