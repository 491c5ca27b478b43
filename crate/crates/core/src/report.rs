//! Command reports: exact values as `num/den` with a decimal rendering for
//! reading, plus verdict strings and free-form payload lines.

use serde::Serialize;

use crate::rational::{decimal, exact, Rational};

pub const DECIMAL_DIGITS: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Value {
    pub name: String,
    /// Authoritative `num/den` text.
    pub exact: String,
    /// 15 significant digits, for display only.
    pub decimal: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Entry>,
    pub values: Vec<Value>,
    pub results: Vec<Entry>,
    pub payload: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            ..Report::default()
        }
    }

    pub fn input(&mut self, name: impl Into<String>, value: impl ToString) -> &mut Self {
        self.inputs.push(Entry {
            name: name.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn value(&mut self, name: impl Into<String>, r: &Rational) -> &mut Self {
        self.values.push(Value {
            name: name.into(),
            exact: exact(r),
            decimal: decimal(r, DECIMAL_DIGITS),
        });
        self
    }

    /// Adds `r` when present, or an `undefined` result line when not.
    pub fn maybe_value(&mut self, name: impl Into<String>, r: Option<&Rational>) -> &mut Self {
        match r {
            Some(r) => self.value(name, r),
            None => self.result(name, "undefined"),
        }
    }

    pub fn result(&mut self, name: impl Into<String>, value: impl ToString) -> &mut Self {
        self.results.push(Entry {
            name: name.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.payload.push(line.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for e in &self.inputs {
            out.push_str(&format!("  {}: {}\n", e.name, e.value));
        }
        for v in &self.values {
            out.push_str(&format!("{} = {} ({})\n", v.name, v.exact, v.decimal));
        }
        for e in &self.results {
            out.push_str(&format!("{}: {}\n", e.name, e.value));
        }
        for line in &self.payload {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}
