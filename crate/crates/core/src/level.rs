use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the doubling level (dimension 256).
pub const DEFAULT_MAX_LEVEL: u32 = 8;

/// Hard ceiling: indices are stored as `u16` and tables are `dim * dim`.
pub const ABSOLUTE_MAX_LEVEL: u32 = 12;

/// Doubling level `n` of a Cayley-Dickson algebra; the dimension is `2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlgebraLevel(u32);

impl AlgebraLevel {
    /// Validates `n` against the default cap.
    pub fn new(n: u32) -> Result<Self> {
        Self::with_max(n, DEFAULT_MAX_LEVEL)
    }

    /// Validates `n` against an explicit cap.
    pub fn with_max(n: u32, max: u32) -> Result<Self> {
        let max = max.min(ABSOLUTE_MAX_LEVEL);
        if n > max {
            return Err(Error::ResourceLimit { level: n, max });
        }
        Ok(AlgebraLevel(n))
    }

    pub(crate) fn unchecked(n: u32) -> Self {
        AlgebraLevel(n)
    }

    pub fn n(self) -> u32 {
        self.0
    }

    pub fn dim(self) -> usize {
        1usize << self.0
    }

    /// Conventional symbol for the low levels.
    pub fn name(self) -> &'static str {
        match self.0 {
            0 => "R",
            1 => "C",
            2 => "H",
            3 => "O",
            4 => "X",
            _ => "F^n",
        }
    }

    /// The level one doubling below, if any.
    pub fn previous(self) -> Option<Self> {
        self.0.checked_sub(1).map(AlgebraLevel)
    }
}

impl fmt::Display for AlgebraLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={}, dim={})", self.name(), self.0, self.dim())
    }
}
