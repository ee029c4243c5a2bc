use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Pipeline behaviour profile shared by every stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Keeps hyphenated words and short tokens so the Doc1 tables come out exactly.
    #[default]
    PaperGolden,
    /// Splits hyphens and apostrophes, splits clitic prefixes, drops tokens shorter than 3.
    Strict,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::PaperGolden => "paper",
            Mode::Strict => "strict",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown mode {0:?} (expected \"paper\" or \"strict\")")]
pub struct ParseModeError(String);

impl FromStr for Mode {
    type Err = ParseModeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" | "paper_golden" | "paper-golden" => Ok(Mode::PaperGolden),
            "strict" => Ok(Mode::Strict),
            other => Err(ParseModeError(other.to_string())),
        }
    }
}
