//! Structured verdicts with reproducible witnesses.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::exactnum::Scalar;
use crate::multilinear::{LinMap, TensorElement};

/// Where two sides of an identity first differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis tuple of the inputs the identity was evaluated on.
    pub input: Vec<usize>,
    /// Basis tuple of the first differing component (lexicographic order).
    pub component: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(input: Vec<usize>, component: Vec<usize>, lhs: &Scalar, rhs: &Scalar) -> Self {
        Witness {
            input,
            component,
            lhs: lhs.to_literal(),
            rhs: rhs.to_literal(),
        }
    }

    /// Compare two tensors; `None` if they agree.
    pub fn compare(input: &[usize], lhs: &TensorElement, rhs: &TensorElement) -> Option<Witness> {
        lhs.first_difference(rhs)
            .map(|(component, a, b)| Witness::new(input.to_vec(), component, &a, &b))
    }

    /// Compare two linear maps; the input is the first source basis tuple
    /// whose images differ.
    pub fn compare_maps(lhs: &LinMap, rhs: &LinMap) -> Option<Witness> {
        lhs.first_difference(rhs)
            .map(|(row, col, a, b)| Witness::new(col, row, &a, &b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A named list of pass/fail verdicts plus derived facts.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub facts: BTreeMap<String, Value>,
    pub conventions: BTreeMap<String, String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        self.checks.push(Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
            note: None,
        });
    }

    pub fn push_verdict(&mut self, name: impl Into<String>, passed: bool, note: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: None,
            note,
        });
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.facts.insert(key.into(), value.into());
    }

    pub fn convention(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.conventions.insert(key.into(), value.into());
    }

    /// Append another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.facts {
            self.facts.insert(format!("{prefix}.{k}"), v);
        }
        self.conventions.extend(other.conventions);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the named check exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
