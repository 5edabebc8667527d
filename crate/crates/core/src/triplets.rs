//! Oriented triplets `(i, j, k)` with `e_i e_j = e_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::level::AlgebraLevel;

/// A positive cycle, stored as the rotation whose first index is smallest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u16; 3]", into = "[u16; 3]")]
pub struct Triplet([u16; 3]);

impl Triplet {
    /// Canonicalizes by rotation only; orientation is preserved.
    pub fn new(i: u16, j: u16, k: u16) -> Self {
        let rotations = [[i, j, k], [j, k, i], [k, i, j]];
        let best = rotations.into_iter().min().unwrap();
        Triplet(best)
    }

    pub fn indices(self) -> [u16; 3] {
        self.0
    }

    /// The same three indices with the opposite orientation.
    pub fn reversed(self) -> Self {
        let [i, j, k] = self.0;
        Triplet::new(i, k, j)
    }

    /// Indices in ascending order, forgetting orientation.
    pub fn support(self) -> [u16; 3] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }

    /// The three unordered pairs the cycle covers.
    pub fn pairs(self) -> [(u16, u16); 3] {
        let [i, j, k] = self.0;
        [(i.min(j), i.max(j)), (j.min(k), j.max(k)), (i.min(k), i.max(k))]
    }

    /// Printed-table notation: uppercase hex digits, e.g. `(1BA)`. Indices of
    /// more than one hex digit are separated by spaces.
    pub fn to_hex_string(self) -> String {
        let [i, j, k] = self.0;
        if k.max(j) < 16 {
            format!("({i:X}{j:X}{k:X})")
        } else {
            format!("({i:X} {j:X} {k:X})")
        }
    }
}

impl From<[u16; 3]> for Triplet {
    fn from([i, j, k]: [u16; 3]) -> Self {
        Triplet::new(i, j, k)
    }
}

impl From<Triplet> for [u16; 3] {
    fn from(t: Triplet) -> Self {
        t.0
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.0;
        write!(f, "({i},{j},{k})")
    }
}

/// Canonically ordered list of the positive cycles of one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripletTable {
    pub level: AlgebraLevel,
    pub triplets: Vec<Triplet>,
}

impl TripletTable {
    pub fn len(&self) -> usize {
        self.triplets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triplets.is_empty()
    }

    pub fn contains(&self, t: Triplet) -> bool {
        self.triplets.binary_search(&t).is_ok()
    }
}

/// Lists every positive cycle of the table, sorted.
pub fn enumerate_triplets(table: &StructureConstants) -> TripletTable {
    let dim = table.dim();
    let mut triplets = Vec::new();
    for i in 1..dim {
        for j in i + 1..dim {
            let p = table.product(i, j);
            let k = usize::from(p.index);
            // each cycle is visited from its three pairs; keep the one where
            // i is the smallest index
            if k > i {
                let t = if p.sign > 0 {
                    Triplet::new(i as u16, j as u16, p.index)
                } else {
                    Triplet::new(j as u16, i as u16, p.index)
                };
                triplets.push(t);
            }
        }
    }
    triplets.sort_unstable();
    triplets.dedup();
    TripletTable { level: table.level(), triplets }
}

/// Number of triplets at level `n`: `(2^n - 1)(2^n - 2) / 6`.
pub fn count_triplets_formula(n: u32) -> Result<u128> {
    if n < 2 {
        return Err(Error::Domain(format!("triplet count needs n >= 2, got {n}")));
    }
    let overflow = || Error::Domain(format!("triplet count overflows at n = {n}"));
    let dim = 1u128.checked_shl(n).filter(|_| n < 64).ok_or_else(overflow)?;
    let count = (dim - 1).checked_mul(dim - 2).ok_or_else(overflow)?;
    Ok(count / 6)
}
