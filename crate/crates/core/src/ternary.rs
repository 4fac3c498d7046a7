use std::fmt;

use serde::Serialize;

/// Three-valued verdict for checks that may give up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ternary {
    True,
    False,
    Unknown,
}

impl Ternary {
    pub fn is_definite(self) -> bool {
        self != Ternary::Unknown
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Ternary::True => Some(true),
            Ternary::False => Some(false),
            Ternary::Unknown => None,
        }
    }

    /// Kleene conjunction: any `False` wins, then any `Unknown`.
    pub fn and(self, other: Ternary) -> Ternary {
        match (self, other) {
            (Ternary::False, _) | (_, Ternary::False) => Ternary::False,
            (Ternary::True, Ternary::True) => Ternary::True,
            _ => Ternary::Unknown,
        }
    }

    pub fn all(items: impl IntoIterator<Item = Ternary>) -> Ternary {
        items.into_iter().fold(Ternary::True, Ternary::and)
    }
}

impl From<bool> for Ternary {
    fn from(b: bool) -> Self {
        if b {
            Ternary::True
        } else {
            Ternary::False
        }
    }
}

impl fmt::Display for Ternary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ternary::True => "true",
            Ternary::False => "false",
            Ternary::Unknown => "unknown",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::Ternary::*;
    use super::*;

    #[test]
    fn kleene_and() {
        assert_eq!(True.and(Unknown), Unknown);
        assert_eq!(Unknown.and(False), False);
        assert_eq!(Ternary::all([True, True]), True);
        assert_eq!(Ternary::all([]), True);
    }
}
