//! Structured outcomes of identity checks.

use serde::{Deserialize, Serialize};

use crate::kernel::rational::{serde_str, Rational};
use crate::kernel::{HahnParameterSet, ParameterSet};

/// Parameters a report was produced for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportParams {
    Biorthogonal(ParameterSet),
    Hahn(HahnParameterSet),
    Q {
        #[serde(with = "serde_str")]
        a: Rational,
        #[serde(with = "serde_str")]
        d: Rational,
        #[serde(rename = "N")]
        big_n: u64,
        q: String,
    },
    None {},
}

impl From<&ParameterSet> for ReportParams {
    fn from(p: &ParameterSet) -> Self {
        ReportParams::Biorthogonal(p.clone())
    }
}

impl From<&HahnParameterSet> for ReportParams {
    fn from(hp: &HahnParameterSet) -> Self {
        ReportParams::Hahn(hp.clone())
    }
}

/// One place where the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub location: String,
    #[serde(with = "serde_str")]
    pub lhs: Rational,
    #[serde(with = "serde_str")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub params: ReportParams,
    /// Number of individual equalities evaluated.
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn new(identity_name: impl Into<String>, params: ReportParams) -> Self {
        Self {
            identity_name: identity_name.into(),
            params,
            checks: 0,
            failures: Vec::new(),
        }
    }

    /// Records `lhs == rhs` at `location`.
    pub fn compare(&mut self, location: impl FnOnce() -> String, lhs: Rational, rhs: Rational) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                location: location(),
                lhs,
                rhs,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Appends another report's checks, prefixing its locations.
    pub fn absorb(&mut self, other: IdentityReport) {
        self.checks += other.checks;
        let name = other.identity_name;
        self.failures
            .extend(other.failures.into_iter().map(|f| Failure {
                location: format!("{name}: {}", f.location),
                ..f
            }));
    }
}

/// An off-diagonal entry that is not zero, or a diagonal entry that differs
/// from the expected norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramViolation {
    pub row: usize,
    pub col: usize,
    #[serde(with = "serde_str")]
    pub expected: Rational,
    #[serde(with = "serde_str")]
    pub actual: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub params: ReportParams,
    #[serde(with = "serde_str::matrix")]
    pub gram: Vec<Vec<Rational>>,
    #[serde(with = "serde_str::vec")]
    pub expected_diag: Vec<Rational>,
    pub violations: Vec<GramViolation>,
    /// Degrees whose expected norm is zero, i.e. a degenerate pairing.
    pub zero_norms: Vec<usize>,
}

impl GramReport {
    /// Compares `gram` against `diag(expected_diag)` entry by entry.
    pub fn assemble(
        params: ReportParams,
        gram: Vec<Vec<Rational>>,
        expected_diag: Vec<Rational>,
    ) -> Self {
        use num::Zero;
        let mut violations = Vec::new();
        for (r, row) in gram.iter().enumerate() {
            for (c, actual) in row.iter().enumerate() {
                let expected = if r == c {
                    expected_diag[r].clone()
                } else {
                    Rational::zero()
                };
                if *actual != expected {
                    violations.push(GramViolation {
                        row: r,
                        col: c,
                        expected,
                        actual: actual.clone(),
                    });
                }
            }
        }
        let zero_norms = expected_diag
            .iter()
            .enumerate()
            .filter(|(_, h)| h.is_zero())
            .map(|(n, _)| n)
            .collect();
        Self {
            params,
            gram,
            expected_diag,
            violations,
            zero_norms,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    #[test]
    fn gram_report_flags_entries() {
        let g = vec![vec![int(1), int(0)], vec![int(2), int(3)]];
        let r = GramReport::assemble(ReportParams::None {}, g, vec![int(1), int(4)]);
        assert_eq!(r.violations.len(), 2);
        assert!(r.zero_norms.is_empty());
        let g = vec![vec![int(0)]];
        let r = GramReport::assemble(ReportParams::None {}, g, vec![int(0)]);
        assert!(r.passed());
        assert_eq!(r.zero_norms, vec![0]);
    }

    #[test]
    fn identity_report_counts() {
        let mut r = IdentityReport::new("demo", ReportParams::None {});
        r.compare(|| "a".into(), int(1), int(1));
        r.compare(|| "b".into(), int(1), int(2));
        assert_eq!(r.checks, 2);
        assert!(!r.passed());
        let mut outer = IdentityReport::new("outer", ReportParams::None {});
        outer.absorb(r);
        assert_eq!(outer.failures[0].location, "demo: b");
    }
}
