// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub words_checked: u64,
    /// Wall-clock time; only filled in when timings are requested, so that
    /// reports are reproducible byte for byte by default.
    pub seconds: Option<f64>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, u64>,
}

/// Outcome of one batch check. `status` is `Pass` iff `counterexamples` is
/// empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, u64>,
    pub status: Status,
    pub counterexamples: Vec<String>,
    pub stats: Stats,
}

impl VerificationReport {
    pub fn new(claim_id: &str) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            counterexamples: Vec::new(),
            stats: Stats::default(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<u64>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn fail(&mut self, counterexample: impl Into<String>) {
        self.counterexamples.push(counterexample.into());
        self.status = Status::Fail;
    }

    /// Records a failure unless `ok`.
    pub fn expect(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if !ok {
            self.fail(counterexample());
        }
    }

    pub fn bump(&mut self, key: &str) {
        *self.stats.extra.entry(key.to_string()).or_insert(0) += 1;
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Sorts and deduplicates counterexamples and re-derives the status.
    pub fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.status = if self.counterexamples.is_empty() { Status::Pass } else { Status::Fail };
        self
    }

    /// One human readable line.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let verdict = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut line = format!(
            "{verdict} {} [{}] words_checked={} counterexamples={}",
            self.claim_id,
            params.join(", "),
            self.stats.words_checked,
            self.counterexamples.len()
        );
        if let Some(s) = self.stats.seconds {
            line.push_str(&format!(" seconds={s:.3}"));
        }
        line
    }
}
