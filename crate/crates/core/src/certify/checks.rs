//! Named inequalities with exact operands.

use std::fmt;

use crate::rational::{render, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

/// One comparison `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub label: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Fact {
    pub fn holds(&self) -> bool {
        self.relation.holds(&self.lhs, &self.rhs)
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.label,
            render(&self.lhs),
            self.relation.symbol(),
            render(&self.rhs),
            if self.holds() { "ok" } else { "FAILED" }
        )
    }
}

/// A numbered step of a proof; it holds when every fact does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub index: usize,
    pub name: String,
    pub facts: Vec<Fact>,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.facts.iter().all(Fact::holds)
    }

    /// The fact carrying the headline inequality (the last one recorded).
    pub fn headline(&self) -> Option<&Fact> {
        self.facts.last()
    }

    pub fn failed_facts(&self) -> impl Iterator<Item = &Fact> {
        self.facts.iter().filter(|f| !f.holds())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "({}) {} [{}]",
            self.index,
            self.name,
            if self.holds() { "holds" } else { "FAILS" }
        )?;
        for fact in &self.facts {
            writeln!(f, "    {fact}")?;
        }
        Ok(())
    }
}

/// Accumulates checks in order.
#[derive(Debug, Default)]
pub(crate) struct Checklist {
    checks: Vec<Check>,
}

impl Checklist {
    pub fn check(&mut self, name: &str) -> &mut Check {
        let index = self.checks.len() + 1;
        self.checks.push(Check {
            index,
            name: name.to_string(),
            facts: Vec::new(),
        });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn finish(self) -> Vec<Check> {
        self.checks
    }
}

impl Check {
    pub(crate) fn fact(&mut self, label: &str, lhs: Rational, relation: Relation, rhs: Rational) -> &mut Self {
        self.facts.push(Fact {
            label: label.to_string(),
            lhs,
            relation,
            rhs,
        });
        self
    }

    pub(crate) fn le(&mut self, label: &str, lhs: Rational, rhs: Rational) -> &mut Self {
        self.fact(label, lhs, Relation::Le, rhs)
    }

    pub(crate) fn ge(&mut self, label: &str, lhs: Rational, rhs: Rational) -> &mut Self {
        self.fact(label, lhs, Relation::Ge, rhs)
    }

    pub(crate) fn eq(&mut self, label: &str, lhs: Rational, rhs: Rational) -> &mut Self {
        self.fact(label, lhs, Relation::Eq, rhs)
    }
}
