//! Operation-table representation of finite commutative semirings.
//!
//! A value of [`FiniteSemiring`] is structurally valid (square tables, entries
//! in range) but not necessarily a semiring; [`FiniteSemiring::verify_axioms`]
//! decides that and reports each violation with a replayable witness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default ceiling on constructed orders (products, dual numbers, ...).
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Default ceiling on violations collected by a single axiom scan.
pub const DEFAULT_VIOLATION_CAP: usize = 16;

/// Elements are indices `0..order`; `zero` and `one` are explicit so that
/// constructions keep their natural labelings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSemiring {
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddIdentity,
    MulIdentity,
    ZeroAbsorbing,
    AddCommutative,
    MulCommutative,
    AddAssociative,
    MulAssociative,
    Distributive,
    ZeroNeOne,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Axiom::AddIdentity => "add-identity",
            Axiom::MulIdentity => "mul-identity",
            Axiom::ZeroAbsorbing => "zero-absorbing",
            Axiom::AddCommutative => "add-commutative",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::Distributive => "distributive",
            Axiom::ZeroNeOne => "zero-ne-one",
        };
        f.write_str(name)
    }
}

/// One axiom failure together with the element tuple that exhibits it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl Violation {
    /// Re-evaluates the witness against the tables. Reports are only trusted
    /// after this returns true.
    pub fn reproduces(&self, s: &FiniteSemiring) -> bool {
        let w = &self.witness;
        match self.axiom {
            Axiom::AddIdentity => w.len() == 1 && s.add(w[0], s.zero) != w[0],
            Axiom::MulIdentity => w.len() == 1 && s.mul(w[0], s.one) != w[0],
            Axiom::ZeroAbsorbing => w.len() == 1 && s.mul(w[0], s.zero) != s.zero,
            Axiom::AddCommutative => w.len() == 2 && s.add(w[0], w[1]) != s.add(w[1], w[0]),
            Axiom::MulCommutative => w.len() == 2 && s.mul(w[0], w[1]) != s.mul(w[1], w[0]),
            Axiom::AddAssociative => {
                w.len() == 3 && s.add(s.add(w[0], w[1]), w[2]) != s.add(w[0], s.add(w[1], w[2]))
            }
            Axiom::MulAssociative => {
                w.len() == 3 && s.mul(s.mul(w[0], w[1]), w[2]) != s.mul(w[0], s.mul(w[1], w[2]))
            }
            Axiom::Distributive => {
                w.len() == 3
                    && s.mul(w[0], s.add(w[1], w[2])) != s.add(s.mul(w[0], w[1]), s.mul(w[0], w[2]))
            }
            Axiom::ZeroNeOne => w.is_empty() && s.order >= 2 && s.zero == s.one,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl FiniteSemiring {
    pub fn new(
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let s = FiniteSemiring { order, zero, one, add, mul, labels };
        s.validate_shape()?;
        Ok(s)
    }

    /// Builds tables by evaluating the operations on every index pair.
    pub fn from_fns(
        order: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..order).map(|i| (0..order).map(|j| f(i, j)).collect()).collect()
        };
        Self::new(order, zero, one, table(&add), table(&mul), labels)
    }

    /// Structural validity only: square in-range tables, designated elements
    /// in range, label count matching. Says nothing about the axioms.
    pub fn validate_shape(&self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::Shape("order must be positive".into()));
        }
        if self.zero >= n || self.one >= n {
            return Err(Error::Shape(format!(
                "zero={} one={} out of range for order {}",
                self.zero, self.one, n
            )));
        }
        for (name, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n {
                return Err(Error::Shape(format!(
                    "{name} has {} rows, expected {n}",
                    table.len()
                )));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Shape(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= n {
                        return Err(Error::Shape(format!(
                            "{name}[{i}][{j}] = {v} out of range for order {n}"
                        )));
                    }
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Error::Shape(format!(
                    "{} labels for order {n}",
                    labels.len()
                )));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i][j]
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `e` raised to `k`; `k = 0` gives `one`.
    pub fn pow(&self, e: usize, k: usize) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, e);
        }
        acc
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        self.verify_axioms_capped(DEFAULT_VIOLATION_CAP)
    }

    /// Collects up to `cap` violations; scan order is fixed, so reports are
    /// deterministic and the first violation is the minimal one per axiom
    /// ordering.
    pub fn verify_axioms_capped(&self, cap: usize) -> AxiomReport {
        let n = self.order;
        let mut violations = Vec::new();
        let push = |violations: &mut Vec<Violation>, axiom: Axiom, witness: Vec<usize>| {
            if violations.len() < cap {
                violations.push(Violation { axiom, witness });
            }
        };

        for i in 0..n {
            if self.add(i, self.zero) != i {
                push(&mut violations, Axiom::AddIdentity, vec![i]);
            }
            if self.mul(i, self.one) != i {
                push(&mut violations, Axiom::MulIdentity, vec![i]);
            }
            if self.mul(i, self.zero) != self.zero {
                push(&mut violations, Axiom::ZeroAbsorbing, vec![i]);
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.add(i, j) != self.add(j, i) {
                    push(&mut violations, Axiom::AddCommutative, vec![i, j]);
                }
                if self.mul(i, j) != self.mul(j, i) {
                    push(&mut violations, Axiom::MulCommutative, vec![i, j]);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.add(self.add(i, j), k) != self.add(i, self.add(j, k)) {
                        push(&mut violations, Axiom::AddAssociative, vec![i, j, k]);
                    }
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        push(&mut violations, Axiom::MulAssociative, vec![i, j, k]);
                    }
                    if self.mul(i, self.add(j, k)) != self.add(self.mul(i, j), self.mul(i, k)) {
                        push(&mut violations, Axiom::Distributive, vec![i, j, k]);
                    }
                }
            }
        }
        if n >= 2 && self.zero == self.one {
            push(&mut violations, Axiom::ZeroNeOne, vec![]);
        }

        AxiomReport { ok: violations.is_empty(), violations }
    }

    pub fn is_valid(&self) -> bool {
        self.verify_axioms_capped(1).ok
    }

    /// Canonical text form: compact JSON, fixed key order
    /// `order, zero, one, add, mul[, labels]`.
    pub fn encode(&self) -> String {
        serde_json::to_string(self).expect("semiring serialization cannot fail")
    }

    pub fn decode(text: &str) -> Result<Self> {
        let s: FiniteSemiring =
            serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
        s.validate_shape()?;
        Ok(s)
    }
}
