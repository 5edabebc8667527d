//! Structure constants of Cayley-Dickson algebras built by repeated doubling.
//!
//! A level-`n` algebra has basis `e_0 .. e_{2^n - 1}` with `e_0` the unit.
//! Every product of two basis units is again a signed basis unit, so the
//! whole table is stored as a dense `dim x dim` array of [`SignedIndex`].

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level::{AlgebraLevel, ABSOLUTE_MAX_LEVEL};
use crate::triplets::Triplet;

/// The seven oriented octonion cycles the doubling rule has to reproduce.
pub const OCTONION_CYCLES: [[u16; 3]; 7] =
    [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

/// `sign * e_index`, the value of a basis product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedIndex {
    pub sign: i8,
    pub index: u16,
}

impl SignedIndex {
    pub const fn new(sign: i8, index: u16) -> Self {
        SignedIndex { sign, index }
    }

    pub const fn pos(index: u16) -> Self {
        SignedIndex { sign: 1, index }
    }

    pub const fn neg(index: u16) -> Self {
        SignedIndex { sign: -1, index }
    }

    pub fn times(self, sign: i8) -> Self {
        SignedIndex { sign: self.sign * sign, index: self.index }
    }
}

impl Neg for SignedIndex {
    type Output = SignedIndex;

    fn neg(self) -> SignedIndex {
        self.times(-1)
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{s}e{}", self.index)
    }
}

/// Full basis multiplication table of one Cayley-Dickson level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    level: AlgebraLevel,
    products: Vec<SignedIndex>,
}

/// Builds the level-`n` table by doubling from the reals.
///
/// Panics if the generated octonion subtable deviates from
/// [`OCTONION_CYCLES`]; that would mean the doubling rule itself is broken.
pub fn build_algebra(level: AlgebraLevel) -> StructureConstants {
    let mut table = StructureConstants::reals();
    while table.level < level {
        table = table.doubling_step().expect("validated level is below the absolute cap");
    }
    if level.n() >= 3 {
        for cycle in OCTONION_CYCLES {
            let [i, j, k] = cycle.map(usize::from);
            assert_eq!(
                table.product(i, j),
                SignedIndex::pos(k as u16),
                "doubling rule no longer reproduces octonion cycle {cycle:?}"
            );
        }
    }
    table
}

/// Convenience wrapper validating `n` against the default level cap.
pub fn build_level(n: u32) -> Result<StructureConstants> {
    Ok(build_algebra(AlgebraLevel::new(n)?))
}

impl StructureConstants {
    /// Level 0: the real numbers, `e_0 e_0 = e_0`.
    pub fn reals() -> Self {
        StructureConstants { level: AlgebraLevel::unchecked(0), products: vec![SignedIndex::pos(0)] }
    }

    pub fn level(&self) -> AlgebraLevel {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.level.dim()
    }

    /// `e_i e_j` as a signed basis unit.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> SignedIndex {
        self.products[i * self.dim() + j]
    }

    /// `C_{ijk}` for imaginary indices; zero whenever `e_i e_j` is not `±e_k`,
    /// including the diagonal and any index 0.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> i8 {
        if i == 0 || j == 0 || k == 0 || i == j {
            return 0;
        }
        let p = self.product(i, j);
        if usize::from(p.index) == k {
            p.sign
        } else {
            0
        }
    }

    /// One doubling: pairs `(a, b)` with product
    /// `(a, b)(c, d) = (ac - d* b, da + b c*)`.
    ///
    /// The new unit is `e_h = (0, 1)` with `h` the old dimension, and
    /// `e_{i+h} = (0, e_i)`, so `e_i e_h = e_{i+h}` for `0 < i < h`.
    pub fn doubling_step(&self) -> Result<StructureConstants> {
        let next = self.level.n() + 1;
        if next > ABSOLUTE_MAX_LEVEL {
            return Err(Error::ResourceLimit { level: next, max: ABSOLUTE_MAX_LEVEL });
        }
        let half = self.dim();
        let dim = half * 2;
        // conj(e_0) = e_0, conj(e_i) = -e_i
        let conj = |i: usize| if i == 0 { 1 } else { -1 };
        let mut products = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            let (a_hi, a_lo) = (a >= half, a % half);
            for b in 0..dim {
                let (b_hi, b_lo) = (b >= half, b % half);
                let p = match (a_hi, b_hi) {
                    // (x, 0)(y, 0) = (xy, 0)
                    (false, false) => self.product(a_lo, b_lo),
                    // (x, 0)(0, y) = (0, yx)
                    (false, true) => shift(self.product(b_lo, a_lo), half),
                    // (0, x)(y, 0) = (0, x y*)
                    (true, false) => shift(self.product(a_lo, b_lo).times(conj(b_lo)), half),
                    // (0, x)(0, y) = (-y* x, 0)
                    (true, true) => self.product(b_lo, a_lo).times(-conj(b_lo)),
                };
                products.push(p);
            }
        }
        Ok(StructureConstants { level: AlgebraLevel::unchecked(next), products })
    }

    /// The subtable on indices `< 2^m`.
    pub fn restrict(&self, m: u32) -> Result<StructureConstants> {
        if m > self.level.n() {
            return Err(Error::Usage(format!("cannot restrict level {} to level {m}", self.level.n())));
        }
        let level = AlgebraLevel::unchecked(m);
        let d = level.dim();
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                products.push(self.product(i, j));
            }
        }
        Ok(StructureConstants { level, products })
    }

    /// Rebuilds a table from its positive cycles. Every unordered pair of
    /// distinct imaginary indices has to be covered exactly once.
    pub fn from_triplets(level: AlgebraLevel, triplets: &[Triplet]) -> Result<StructureConstants> {
        let dim = level.dim();
        let mut products: Vec<Option<SignedIndex>> = vec![None; dim * dim];
        for i in 0..dim {
            products[i] = Some(SignedIndex::pos(i as u16));
            products[i * dim] = Some(SignedIndex::pos(i as u16));
            if i > 0 {
                products[i * dim + i] = Some(SignedIndex::neg(0));
            }
        }
        for t in triplets {
            let [i, j, k] = t.indices().map(usize::from);
            if [i, j, k].iter().any(|&x| x == 0 || x >= dim) || i == j || j == k || i == k {
                return Err(Error::InvalidTable(format!("triplet {t} out of range for dim {dim}")));
            }
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                for (x, y, s) in [(a, b, 1), (b, a, -1)] {
                    let slot = &mut products[x * dim + y];
                    if slot.is_some() {
                        return Err(Error::InvalidTable(format!("pair ({x},{y}) covered twice (again by {t})")));
                    }
                    *slot = Some(SignedIndex::new(s, c as u16));
                }
            }
        }
        let products = products
            .into_iter()
            .enumerate()
            .map(|(n, p)| p.ok_or_else(|| Error::InvalidTable(format!("pair ({},{}) not covered", n / dim, n % dim))))
            .collect::<Result<Vec<_>>>()?;
        let table = StructureConstants { level, products };
        table.validate()?;
        Ok(table)
    }

    /// Checks the structural invariants: unit laws, `e_i^2 = -1`,
    /// antisymmetry and the quasigroup property.
    pub fn validate(&self) -> Result<()> {
        let dim = self.dim();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        for i in 0..dim {
            if self.product(0, i) != SignedIndex::pos(i as u16) || self.product(i, 0) != SignedIndex::pos(i as u16) {
                return bad(format!("e0 is not a unit on e{i}"));
            }
            if i > 0 && self.product(i, i) != SignedIndex::neg(0) {
                return bad(format!("e{i}^2 != -e0"));
            }
        }
        for i in 1..dim {
            let mut seen = vec![false; dim];
            for j in 1..dim {
                if i == j {
                    continue;
                }
                let p = self.product(i, j);
                let k = usize::from(p.index);
                if k == 0 || k == i || k == j || k >= dim || p.sign.abs() != 1 {
                    return bad(format!("e{i} e{j} = {p} is not a third imaginary unit"));
                }
                if self.product(j, i) != -p {
                    return bad(format!("e{i} e{j} and e{j} e{i} are not antisymmetric"));
                }
                // cyclic: e_j e_k = s e_i
                if self.product(j, k) != SignedIndex::new(p.sign, i as u16) {
                    return bad(format!("C is not cyclic on ({i},{j},{k})"));
                }
                if std::mem::replace(&mut seen[k], true) {
                    return bad(format!("row e{i} maps two units onto e{k}"));
                }
            }
        }
        Ok(())
    }
}

fn shift(p: SignedIndex, by: usize) -> SignedIndex {
    SignedIndex::new(p.sign, p.index + by as u16)
}
