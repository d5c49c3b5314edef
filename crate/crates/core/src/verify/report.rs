use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::modp::Prime;

/// Outcome of one identity check, either per prime or symbolic.
///
/// Serialises to
/// `{"identity", "params", "floor", "results", "summary"}` where `results`
/// is a list of `{"p", "lhs", "rhs", "pass"}` rows for numeric checks and an
/// `{"equal", "lhs"?, "rhs"?}` object for symbolic ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub params: Map<String, Value>,
    pub floor: u64,
    pub results: Results,
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Results {
    Numeric(Vec<PrimeResult>),
    Symbolic(SymbolicResult),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeResult {
    pub p: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicResult {
    pub equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: bool,
    pub checked: usize,
    pub failed_above_floor: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Numeric,
    Symbolic,
}

impl CheckReport {
    pub(crate) fn numeric(
        identity: &str,
        params: Map<String, Value>,
        floor: u64,
        mut rows: Vec<PrimeResult>,
    ) -> Self {
        rows.sort_by_key(|r| r.p);
        let failed_above_floor = rows.iter().filter(|r| !r.pass && r.p >= floor).count();
        let summary = Summary {
            pass: failed_above_floor == 0,
            checked: rows.len(),
            failed_above_floor,
        };
        Self {
            identity: identity.to_string(),
            params,
            floor,
            results: Results::Numeric(rows),
            summary,
        }
    }

    pub(crate) fn symbolic(
        identity: &str,
        params: Map<String, Value>,
        lhs: &impl ToString,
        rhs: &impl ToString,
        equal: bool,
    ) -> Self {
        let (l, r) = if equal {
            (None, None)
        } else {
            (Some(lhs.to_string()), Some(rhs.to_string()))
        };
        Self {
            identity: identity.to_string(),
            params,
            floor: 0,
            results: Results::Symbolic(SymbolicResult {
                equal,
                lhs: l,
                rhs: r,
            }),
            summary: Summary {
                pass: equal,
                checked: 1,
                failed_above_floor: usize::from(!equal),
            },
        }
    }

    pub fn mode(&self) -> Mode {
        match self.results {
            Results::Numeric(_) => Mode::Numeric,
            Results::Symbolic(_) => Mode::Symbolic,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.pass
    }

    /// Per-prime rows; empty for symbolic reports.
    pub fn rows(&self) -> &[PrimeResult] {
        match &self.results {
            Results::Numeric(rows) => rows,
            Results::Symbolic(_) => &[],
        }
    }

    pub fn rows_above_floor(&self) -> impl Iterator<Item = &PrimeResult> {
        self.rows().iter().filter(move |r| r.p >= self.floor)
    }

    pub fn rows_below_floor(&self) -> impl Iterator<Item = &PrimeResult> {
        self.rows().iter().filter(move |r| r.p < self.floor)
    }

    pub fn failures_above_floor(&self) -> Vec<u64> {
        self.rows_above_floor()
            .filter(|r| !r.pass)
            .map(|r| r.p)
            .collect()
    }

    pub fn row(&self, p: Prime) -> Option<&PrimeResult> {
        self.rows().iter().find(|r| r.p == p.get())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
