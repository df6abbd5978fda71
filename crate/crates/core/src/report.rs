//! Violation reports shared by every checker.

use std::fmt;

use serde::Serialize;

use crate::exactlin::{format_rational, vector_text, Lin, MultiMap, Vector};
use crate::error::Result;

/// Keep at most this many concrete counterexamples per identity.
const MAX_SAMPLES: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Basis indices of the arguments, one per slot.
    pub args: Vec<usize>,
    #[serde(serialize_with = "ser_vector")]
    pub lhs: Vector,
    #[serde(serialize_with = "ser_vector")]
    pub rhs: Vector,
}

fn ser_vector<S: serde::Serializer>(v: &Vector, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub tag: String,
    /// Number of basis tuples on which the identity fails.
    pub failures: usize,
    pub samples: Vec<Violation>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Per-identity verdicts for one structure.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<IdentityCheck>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failed_tags(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.tag.clone())
            .collect()
    }

    pub fn check(&self, tag: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.tag == tag)
    }

    /// Records whether two multilinear maps agree on every basis tuple.
    pub fn expect_equal(&mut self, tag: &str, lhs: &MultiMap, rhs: &MultiMap) -> Result<()> {
        if !lhs.same_shape(rhs) {
            return Err(crate::Error::shape(format!(
                "{tag}: sides have shapes {:?}->{} and {:?}->{}",
                lhs.src_dims(),
                lhs.dst().dim,
                rhs.src_dims(),
                rhs.dst().dim
            )));
        }
        let bad = lhs.differing_tuples(rhs);
        let samples = bad
            .iter()
            .take(MAX_SAMPLES)
            .map(|args| Violation {
                args: args.clone(),
                lhs: lhs.column(args),
                rhs: rhs.column(args),
            })
            .collect();
        self.checks.push(IdentityCheck {
            tag: tag.to_string(),
            failures: bad.len(),
            samples,
        });
        Ok(())
    }

    pub fn expect_equal_lin(&mut self, tag: &str, lhs: &Lin, rhs: &Lin) -> Result<()> {
        self.expect_equal(tag, lhs.as_multi(), rhs.as_multi())
    }

    pub fn expect_zero(&mut self, tag: &str, m: &MultiMap) -> Result<()> {
        let zero = MultiMap::zeros(m.srcs().to_vec(), m.dst().clone());
        self.expect_equal(tag, m, &zero)
    }

    /// Records a check whose failures were counted by hand.
    pub fn record(&mut self, tag: &str, failures: usize, samples: Vec<Violation>) {
        self.checks.push(IdentityCheck {
            tag: tag.to_string(),
            failures,
            samples,
        });
    }

    /// Appends another report's checks, prefixing their tags.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.tag = format!("{prefix}{}", c.tag);
            }
            self.checks.push(c);
        }
    }

    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(crate::Error::invalid(self.subject.clone(), self))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "  {:<24} ok", c.tag)?;
                continue;
            }
            writeln!(f, "  {:<24} violated on {} basis tuple(s)", c.tag, c.failures)?;
            for v in &c.samples {
                writeln!(
                    f,
                    "    at {:?}: lhs = {}, rhs = {}",
                    v.args,
                    vector_text(&v.lhs),
                    vector_text(&v.rhs)
                )?;
            }
        }
        Ok(())
    }
}
