//! Pass/fail reports produced by the verifiers.

use std::fmt;
use std::time::Duration;

use serde_json::{json, Value};

use crate::linalg::{format_rational, is_zero_vec, Rational};

/// A failing basis tuple (1-based indices) and the nonzero residual there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl Witness {
    /// Builds a witness from 0-based indices.
    pub fn new(indices: &[usize], residual: Vec<Rational>) -> Self {
        Witness { args: indices.iter().map(|i| i + 1).collect(), residual }
    }

    fn to_json(&self) -> Value {
        json!({
            "args": self.args,
            "residual": self.residual.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

impl Condition {
    pub fn passed(name: &str) -> Self {
        Condition { name: name.into(), pass: true, witness: None, detail: None }
    }

    pub fn failed(name: &str, witness: Option<Witness>) -> Self {
        Condition { name: name.into(), pass: false, witness, detail: None }
    }

    pub fn from_bool(name: &str, pass: bool) -> Self {
        Condition { name: name.into(), pass, witness: None, detail: None }
    }

    /// Passes unless a witness is given.
    pub fn from_witness(name: &str, witness: Option<Witness>) -> Self {
        Condition { name: name.into(), pass: witness.is_none(), witness, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "name": self.name, "pass": self.pass });
        if let Some(w) = &self.witness {
            v["witness"] = w.to_json();
        }
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub conditions: Vec<Condition>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    /// Wall-clock time; shown in text output only so JSON stays reproducible.
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report { check: check.into(), conditions: Vec::new(), seed: None, samples: None, elapsed: None }
    }

    pub fn with_conditions(check: impl Into<String>, conditions: Vec<Condition>) -> Self {
        Report { conditions, ..Report::new(check) }
    }

    pub fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    /// Appends another report's conditions, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: &Report) {
        for c in &other.conditions {
            let mut c = c.clone();
            c.name = format!("{prefix}{}", c.name);
            self.conditions.push(c);
        }
    }

    pub fn pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "check": self.check,
            "pass": self.pass(),
            "conditions": self.conditions.iter().map(Condition::to_json).collect::<Vec<_>>(),
        });
        if let Some(s) = self.seed {
            v["seed"] = json!(s);
        }
        if let Some(n) = self.samples {
            v["samples"] = json!(n);
        }
        v
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, if self.pass() { "PASS" } else { "FAIL" })?;
        if let Some(n) = self.samples {
            write!(f, " ({n} samples")?;
            if let Some(s) = self.seed {
                write!(f, ", seed {s}")?;
            }
            write!(f, ")")?;
        }
        if let Some(t) = self.elapsed {
            write!(f, " [{:.3}s]", t.as_secs_f64())?;
        }
        for c in &self.conditions {
            write!(f, "\n  {} {}", if c.pass { "ok  " } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                let res: Vec<String> = w.residual.iter().map(format_rational).collect();
                write!(f, " at {:?}: residual [{}]", w.args, res.join(", "))?;
            }
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
        }
        Ok(())
    }
}

/// Scans basis tuples in order and returns the first with a nonzero residual.
pub fn first_witness<I, F>(tuples: I, mut residual: F) -> Option<Witness>
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> Vec<Rational>,
{
    for t in tuples {
        let r = residual(&t);
        if !is_zero_vec(&r) {
            return Some(Witness::new(&t, r));
        }
    }
    None
}

/// All strictly increasing `k`-tuples from `0..n`, lexicographically.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All `k`-tuples from `0..n` (repetition allowed), lexicographically.
pub fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}
