use std::fmt;

use serde::{Deserialize, Serialize};

/// An opaque vertex or element label.
///
/// Integers order numerically and before every named label, so that
/// `[10, 2, "a"]` normalizes to `[2, 10, "a"]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Name(String),
}

impl Label {
    /// Reads command-line text: an integer when it parses as one, a name otherwise.
    pub fn parse(s: &str) -> Label {
        s.parse().map(Label::Int).unwrap_or_else(|_| Label::Name(s.to_string()))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Label {
    fn from(i: i64) -> Self {
        Label::Int(i)
    }
}

impl From<i32> for Label {
    fn from(i: i32) -> Self {
        Label::Int(i.into())
    }
}

impl From<u32> for Label {
    fn from(i: u32) -> Self {
        Label::Int(i.into())
    }
}

impl From<usize> for Label {
    fn from(i: usize) -> Self {
        Label::Int(i as i64)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Name(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Name(s)
    }
}

pub(crate) fn format_labels<'a>(labels: impl IntoIterator<Item = &'a Label>) -> String {
    let parts: Vec<String> = labels.into_iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}
