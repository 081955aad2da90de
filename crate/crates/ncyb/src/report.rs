//! Check records and suite reports.

use serde::Serialize;
use serde_json::{json, Value};

use crate::matrix::LabeledMat;
use crate::ring::{DualNum, QRat, QTorus, RatFun, Ring, StarDual, StarJet};

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Hash, Debug)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedSingular,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedSingular => "skipped-singular",
        }
    }
}

/// One verified identity instance.
#[derive(Serialize, Clone, PartialEq, Debug)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub detail: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, detail: Value) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            detail: Some(detail),
        }
    }

    pub fn singular(name: impl Into<String>, anchor: impl Into<String>, minor: impl ToString) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::SkippedSingular,
            detail: Some(json!({ "minor": minor.to_string() })),
        }
    }

    /// Pass when `ok`, otherwise fail with `detail`.
    pub fn from_bool(name: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: Value) -> Self {
        if ok {
            Self::pass(name, anchor)
        } else {
            Self::fail(name, anchor, detail)
        }
    }

    /// Exact comparison; a failure records the first differing entry.
    pub fn equal<T: Compare>(name: impl Into<String>, anchor: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        match lhs.diff(rhs) {
            None => Self::pass(name, anchor),
            Some(d) => Self::fail(name, anchor, d),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Exact equality that explains the first disagreement.
pub trait Compare {
    fn diff(&self, o: &Self) -> Option<Value>;
}

fn scalar_diff<T: PartialEq + std::fmt::Display>(a: &T, b: &T) -> Option<Value> {
    (a != b).then(|| json!({ "lhs": a.to_string(), "rhs": b.to_string() }))
}

impl Compare for QRat {
    fn diff(&self, o: &Self) -> Option<Value> {
        scalar_diff(self, o)
    }
}

impl<const N: usize> Compare for RatFun<N>
where
    RatFun<N>: std::fmt::Display,
{
    fn diff(&self, o: &Self) -> Option<Value> {
        scalar_diff(self, o)
    }
}

impl Compare for DualNum {
    fn diff(&self, o: &Self) -> Option<Value> {
        scalar_diff(self, o)
    }
}

impl Compare for StarDual {
    fn diff(&self, o: &Self) -> Option<Value> {
        scalar_diff(self, o)
    }
}

impl Compare for StarJet {
    fn diff(&self, o: &Self) -> Option<Value> {
        scalar_diff(self, o)
    }
}

impl Compare for QTorus {
    fn diff(&self, o: &Self) -> Option<Value> {
        scalar_diff(self, o)
    }
}

impl<T: Ring + Compare> Compare for LabeledMat<T> {
    fn diff(&self, o: &Self) -> Option<Value> {
        if (self.nrows(), self.ncols()) != (o.nrows(), o.ncols()) {
            return Some(json!({
                "shape": format!("{}x{} vs {}x{}", self.nrows(), self.ncols(), o.nrows(), o.ncols())
            }));
        }
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                if let Some(d) = self.at(i, j).diff(o.at(i, j)) {
                    return Some(json!({
                        "row": self.row_labels()[i].to_string(),
                        "col": self.col_labels()[j].to_string(),
                        "entry": d,
                    }));
                }
            }
        }
        None
    }
}

impl<T: Compare> Compare for Vec<T> {
    fn diff(&self, o: &Self) -> Option<Value> {
        if self.len() != o.len() {
            return Some(json!({ "length": format!("{} vs {}", self.len(), o.len()) }));
        }
        self.iter()
            .zip(o)
            .enumerate()
            .find_map(|(k, (a, b))| a.diff(b).map(|d| json!({ "index": k, "entry": d })))
    }
}

/// Echo of the configuration a suite ran with.
#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
///
/// `n` and `samples` are `null` when the suite chose its own defaults.
pub struct ConfigEcho {
    pub n: Option<usize>,
    pub mode: String,
    pub seed: u64,
    pub trunc_order: usize,
    pub samples: Option<usize>,
}

#[derive(Serialize, Clone, PartialEq, Debug)]
pub struct Report {
    pub suite: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
    pub status: Status,
}

impl Report {
    pub fn new(suite: impl Into<String>, config: ConfigEcho, checks: Vec<Check>, elapsed_ms: u64) -> Self {
        let status = overall(&checks);
        Report {
            suite: suite.into(),
            config,
            checks,
            elapsed_ms,
            status,
        }
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("[{}] {} ({})\n", c.status.as_str(), c.name, c.anchor));
            if c.status == Status::Fail {
                if let Some(d) = &c.detail {
                    out.push_str(&format!("    {d}\n"));
                }
            }
        }
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        out.push_str(&format!(
            "{}: {} ({} pass, {} fail, {} skipped-singular) in {} ms\n",
            self.suite,
            self.status.as_str(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::SkippedSingular),
            self.elapsed_ms
        ));
        out
    }
}

/// Pass unless some check failed.
pub fn overall(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qrat;

    #[test]
    fn matrix_diff_names_entry() {
        let a = LabeledMat::from_rows(vec![vec![qrat(1, 1), qrat(2, 1)]]);
        let b = LabeledMat::from_rows(vec![vec![qrat(1, 1), qrat(3, 1)]]);
        let d = a.diff(&b).unwrap();
        assert_eq!(d["row"], "1");
        assert_eq!(d["col"], "2");
        assert_eq!(d["entry"]["rhs"], "3");
        assert!(a.diff(&a).is_none());
    }

    #[test]
    fn overall_ignores_skips() {
        let checks = vec![Check::pass("a", "x"), Check::singular("b", "x", "rows 1,2")];
        assert_eq!(overall(&checks), Status::Pass);
        let r = Report::new(
            "s",
            ConfigEcho {
                n: Some(2),
                mode: "symbolic".into(),
                seed: 0,
                trunc_order: 12,
                samples: None,
            },
            checks,
            5,
        );
        let js = r.to_json();
        assert!(js.ends_with('\n'));
        let order: Vec<usize> = ["\"suite\"", "\"config\"", "\"checks\"", "\"elapsed_ms\"", "\"status\""]
            .iter()
            .map(|k| js.rfind(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        assert!(js.contains("skipped-singular"));
    }
}
