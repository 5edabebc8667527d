//! Multiplication matrices over `R^dim`.
//!
//! All matrices act on coefficient columns: column `b` of the matrix of
//! `x -> e_i x` holds the coefficients of `e_i e_b`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{SignedIndex, StructureConstants};
use crate::element::Element;
use crate::error::{Error, Result};

/// Which side the basis unit multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Square monomial matrix with entries in {-1, 0, 1}.
///
/// Stored by columns: column `b` has its single nonzero entry `sign` at row
/// `index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermMatrix {
    cols: Vec<SignedIndex>,
}

impl SignedPermMatrix {
    pub fn identity(dim: usize) -> Self {
        SignedPermMatrix { cols: (0..dim).map(|b| SignedIndex::pos(b as u16)).collect() }
    }

    /// Builds from column images; each row must be hit exactly once.
    pub fn from_columns(cols: Vec<SignedIndex>) -> Result<Self> {
        let dim = cols.len();
        let mut hit = vec![false; dim];
        for (b, c) in cols.iter().enumerate() {
            let r = usize::from(c.index);
            if r >= dim || c.sign.abs() != 1 {
                return Err(Error::Domain(format!("column {b} image {c} is not a signed unit of R^{dim}")));
            }
            if std::mem::replace(&mut hit[r], true) {
                return Err(Error::Domain(format!("row {r} has two nonzero entries")));
            }
        }
        Ok(SignedPermMatrix { cols })
    }

    /// Builds from a dense row-major matrix.
    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut cols = vec![None; dim];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Domain(format!("row {r} has length {}, expected {dim}", row.len())));
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 | -1 => {
                        if cols[c].replace(SignedIndex::new(v as i8, r as u16)).is_some() {
                            return Err(Error::Domain(format!("column {c} has two nonzero entries")));
                        }
                    }
                    _ => return Err(Error::Domain(format!("entry ({r},{c}) = {v} is not in {{-1,0,1}}"))),
                }
            }
        }
        let cols = cols
            .into_iter()
            .enumerate()
            .map(|(c, x)| x.ok_or_else(|| Error::Domain(format!("column {c} is zero"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(cols)
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, b: usize) -> SignedIndex {
        self.cols[b]
    }

    pub fn columns(&self) -> &[SignedIndex] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> i8 {
        let col = self.cols[c];
        if usize::from(col.index) == r {
            col.sign
        } else {
            0
        }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let dim = self.dim();
        let mut m = IntMatrix::zeros(dim);
        for (c, col) in self.cols.iter().enumerate() {
            m.set(usize::from(col.index), c, i64::from(col.sign));
        }
        m
    }

    /// Row-major `i8` rows, the export form.
    pub fn rows(&self) -> Vec<Vec<i8>> {
        let dim = self.dim();
        (0..dim).map(|r| (0..dim).map(|c| self.entry(r, c)).collect()).collect()
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SignedPermMatrix) -> Result<SignedPermMatrix> {
        check_dims(self.dim(), rhs.dim())?;
        let cols = rhs.cols.iter().map(|c| self.cols[usize::from(c.index)].times(c.sign)).collect();
        Ok(SignedPermMatrix { cols })
    }

    pub fn transpose(&self) -> SignedPermMatrix {
        let mut cols = vec![SignedIndex::pos(0); self.dim()];
        for (c, col) in self.cols.iter().enumerate() {
            cols[usize::from(col.index)] = SignedIndex::new(col.sign, c as u16);
        }
        SignedPermMatrix { cols }
    }

    pub fn negated(&self) -> SignedPermMatrix {
        SignedPermMatrix { cols: self.cols.iter().map(|&c| -c).collect() }
    }

    /// `Some(s)` if the matrix equals `s * I`.
    pub fn scalar_sign(&self) -> Option<i8> {
        let s = self.cols.first()?.sign;
        self.cols.iter().enumerate().all(|(b, c)| usize::from(c.index) == b && c.sign == s).then_some(s)
    }

    /// `Some(s)` if `self == s * other`.
    pub fn sign_relative_to(&self, other: &SignedPermMatrix) -> Option<i8> {
        if self.dim() != other.dim() {
            return None;
        }
        [1i8, -1].into_iter().find(|&s| self.cols.iter().zip(&other.cols).all(|(a, b)| *a == b.times(s)))
    }

    /// `A B + B A == 0`, checked column by column.
    pub fn anticommutes_with(&self, other: &SignedPermMatrix) -> bool {
        self.dim() == other.dim()
            && (0..self.dim()).all(|b| {
                let ab = self.cols[usize::from(other.cols[b].index)].times(other.cols[b].sign);
                let ba = other.cols[usize::from(self.cols[b].index)].times(self.cols[b].sign);
                ab == -ba
            })
    }

    /// `A B == B A`.
    pub fn commutes_with(&self, other: &SignedPermMatrix) -> bool {
        self.dim() == other.dim()
            && (0..self.dim()).all(|b| {
                let ab = self.cols[usize::from(other.cols[b].index)].times(other.cols[b].sign);
                let ba = other.cols[usize::from(self.cols[b].index)].times(self.cols[b].sign);
                ab == ba
            })
    }

    /// Applies the matrix to a coefficient column.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (b, col) in self.cols.iter().enumerate() {
            let slot = &mut out[usize::from(col.index)];
            if col.sign > 0 {
                *slot += &x[b];
            } else {
                *slot -= &x[b];
            }
        }
        out
    }

    pub fn apply_element(&self, x: &Element) -> Vec<BigRational> {
        self.apply(x.coeffs())
    }
}

impl Serialize for SignedPermMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Usage(format!("dimension mismatch: {a} vs {b}")));
    }
    Ok(())
}

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, data: vec![0; dim * dim] }
    }

    pub fn scalar(dim: usize, s: i64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, s);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn matmul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        check_dims(self.dim, rhs.dim)?;
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        check_dims(self.dim, rhs.dim)?;
        Ok(IntMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() })
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim.max(1)).map(<[i64]>::to_vec).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.dim.max(1)) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for SignedPermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_dense().fmt(f)
    }
}

fn check_imaginary(table: &StructureConstants, i: usize) -> Result<()> {
    if i == 0 || i >= table.dim() {
        return Err(Error::Domain(format!("basis index {i} is not an imaginary unit of dimension {}", table.dim())));
    }
    Ok(())
}

/// Matrix of `x -> e_i x`, built column by column from the table.
pub fn left_mult_matrix(table: &StructureConstants, i: usize) -> Result<SignedPermMatrix> {
    check_imaginary(table, i)?;
    SignedPermMatrix::from_columns((0..table.dim()).map(|b| table.product(i, b)).collect())
}

/// Matrix of `x -> x e_i`, built column by column from the table.
pub fn right_mult_matrix(table: &StructureConstants, i: usize) -> Result<SignedPermMatrix> {
    check_imaginary(table, i)?;
    SignedPermMatrix::from_columns((0..table.dim()).map(|b| table.product(b, i)).collect())
}

pub fn mult_matrix(table: &StructureConstants, i: usize, side: Side) -> Result<SignedPermMatrix> {
    match side {
        Side::Left => left_mult_matrix(table, i),
        Side::Right => right_mult_matrix(table, i),
    }
}

/// Entry-wise closed form
/// `(E_i)_{ab} = d_{ia} d_{b0} - d_{ib} d_{a0} + C_{i a b}`.
///
/// With the structure constant indexed `C_{iab}` as written, the result is
/// the matrix of `x -> x e_i`; the left action needs `C_{iba}`. `side`
/// picks between the two index orders.
pub fn closed_form_matrix(table: &StructureConstants, i: usize, side: Side) -> Result<SignedPermMatrix> {
    check_imaginary(table, i)?;
    let dim = table.dim();
    let delta = |a: usize, b: usize| i64::from(a == b);
    let rows: Vec<Vec<i64>> = (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| {
                    let c = match side {
                        Side::Right => table.structure_constant(i, a, b),
                        Side::Left => table.structure_constant(i, b, a),
                    };
                    delta(i, a) * delta(b, 0) - delta(i, b) * delta(a, 0) + i64::from(c)
                })
                .collect()
        })
        .collect();
    SignedPermMatrix::from_dense(&rows)
}

/// `A B + B A`, exactly.
pub fn anticommutator(a: &SignedPermMatrix, b: &SignedPermMatrix) -> Result<IntMatrix> {
    check_dims(a.dim(), b.dim())?;
    let ab = a.mul(b)?.to_dense();
    let ba = b.mul(a)?.to_dense();
    ab.add(&ba)
}

/// `{E_i, E_j}` for one index pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticommutatorReport {
    pub pair: (usize, usize),
    pub matrix: IntMatrix,
}

impl AnticommutatorReport {
    pub fn new(table: &StructureConstants, i: usize, j: usize, side: Side) -> Result<Self> {
        let a = mult_matrix(table, i, side)?;
        let b = mult_matrix(table, j, side)?;
        Ok(AnticommutatorReport { pair: (i, j), matrix: anticommutator(&a, &b)? })
    }

    /// `{E_i, E_j} == -2 delta_ij I`, read off the stored matrix.
    pub fn is_clifford(&self) -> bool {
        let expected = if self.pair.0 == self.pair.1 { -2 } else { 0 };
        self.matrix == IntMatrix::scalar(self.matrix.dim(), expected)
    }
}

impl Serialize for AnticommutatorReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AnticommutatorReport", 2)?;
        s.serialize_field("pair", &[self.pair.0, self.pair.1])?;
        s.serialize_field("is_clifford", &self.is_clifford())?;
        s.end()
    }
}

/// Darboux form `[[0, -I], [I, 0]]`.
pub fn symplectic_form(dim: usize) -> Result<SignedPermMatrix> {
    if dim < 2 || !dim.is_multiple_of(2) {
        return Err(Error::Domain(format!("symplectic form needs an even dimension >= 2, got {dim}")));
    }
    let h = dim / 2;
    let cols = (0..dim)
        .map(|b| if b < h { SignedIndex::pos((b + h) as u16) } else { SignedIndex::neg((b - h) as u16) })
        .collect();
    SignedPermMatrix::from_columns(cols)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymplecticReport {
    pub level: u32,
    pub half: usize,
    /// `(k, C_{h, k, h+k})` for `k = 1 .. h-1`.
    pub constants: Vec<(usize, i8)>,
    pub constants_hold: bool,
    /// `s` with `right_mult_matrix(h) == s * J`, if any.
    pub right_mult_sign: Option<i8>,
    /// `s` with the closed form
    /// `d_{0a} d_{bh} - d_{0b} d_{ah} - C_{abh}` equal to `s * J`, if any.
    pub closed_form_sign: Option<i8>,
}

impl SymplecticReport {
    pub fn holds(&self) -> bool {
        self.constants_hold && self.right_mult_sign.is_some() && self.closed_form_sign.is_some()
    }
}

/// Checks that `e_{dim/2}` carries the Darboux structure.
pub fn check_symplectic(table: &StructureConstants) -> Result<SymplecticReport> {
    let dim = table.dim();
    let j = symplectic_form(dim)?;
    let h = dim / 2;
    let constants: Vec<(usize, i8)> = (1..h).map(|k| (k, table.structure_constant(h, k, h + k))).collect();
    let constants_hold = constants.iter().all(|&(_, c)| c == -1);
    let right_mult_sign = right_mult_matrix(table, h)?.sign_relative_to(&j);

    let delta = |a: usize, b: usize| i64::from(a == b);
    let rows: Vec<Vec<i64>> = (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| {
                    delta(0, a) * delta(b, h) - delta(0, b) * delta(a, h) - i64::from(table.structure_constant(a, b, h))
                })
                .collect()
        })
        .collect();
    let closed_form_sign = SignedPermMatrix::from_dense(&rows).ok().and_then(|m| m.sign_relative_to(&j));

    Ok(SymplecticReport {
        level: table.level().n(),
        half: h,
        constants,
        constants_hold,
        right_mult_sign,
        closed_form_sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_level;

    #[test]
    fn quaternion_e1_left() {
        let t = build_level(2).unwrap();
        let m = left_mult_matrix(&t, 1).unwrap();
        assert_eq!(m.entry(1, 0), 1);
        assert_eq!(m.entry(0, 1), -1);
        assert_eq!(m.mul(&m).unwrap().scalar_sign(), Some(-1));
    }

    #[test]
    fn octonion_e4_left_column_e1() {
        let t = build_level(3).unwrap();
        let m = left_mult_matrix(&t, 4).unwrap();
        // e4 e1 = -e5
        assert_eq!(m.entry(5, 1), -1);
        assert_eq!(m.column(1), SignedIndex::neg(5));
    }

    #[test]
    fn octonion_e4_right_action() {
        let t = build_level(3).unwrap();
        let m = right_mult_matrix(&t, 4).unwrap();
        for k in 0..4u16 {
            assert_eq!(m.column(k as usize), SignedIndex::pos(k + 4));
            assert_eq!(m.column(k as usize + 4), SignedIndex::neg(k));
        }
    }

    #[test]
    fn quaternion_left_right_differ_only_on_e2_e3() {
        let t = build_level(2).unwrap();
        let l = left_mult_matrix(&t, 1).unwrap();
        let r = right_mult_matrix(&t, 1).unwrap();
        let mut differing = Vec::new();
        for row in 0..4 {
            for col in 0..4 {
                if l.entry(row, col) != r.entry(row, col) {
                    differing.push((row, col));
                }
            }
        }
        assert_eq!(differing, vec![(2, 3), (3, 2)]);
    }

    #[test]
    fn index_errors() {
        let t = build_level(2).unwrap();
        assert!(matches!(left_mult_matrix(&t, 0), Err(Error::Domain(_))));
        assert!(matches!(right_mult_matrix(&t, 4), Err(Error::Domain(_))));
        assert!(closed_form_matrix(&t, 0, Side::Left).is_err());
    }

    #[test]
    fn anticommutator_basics() {
        let t = build_level(3).unwrap();
        let e = |i| left_mult_matrix(&t, i).unwrap();
        assert_eq!(anticommutator(&e(3), &e(3)).unwrap(), IntMatrix::scalar(8, -2));
        for i in 1..8 {
            for j in i + 1..8 {
                assert!(anticommutator(&e(i), &e(j)).unwrap().is_zero());
                assert!(e(i).anticommutes_with(&e(j)));
            }
        }
        let small = left_mult_matrix(&build_level(2).unwrap(), 1).unwrap();
        assert!(matches!(anticommutator(&e(1), &small), Err(Error::Usage(_))));
        assert!(!e(1).anticommutes_with(&small));
    }

    #[test]
    fn anticommutator_report_recomputes() {
        let t = build_level(4).unwrap();
        let ok = AnticommutatorReport::new(&t, 2, 7, Side::Left).unwrap();
        assert!(ok.is_clifford());
        let diag = AnticommutatorReport::new(&t, 5, 5, Side::Left).unwrap();
        assert!(diag.is_clifford());
        let bad = (1..16)
            .flat_map(|i| (i + 1..16).map(move |j| (i, j)))
            .map(|(i, j)| AnticommutatorReport::new(&t, i, j, Side::Left).unwrap())
            .find(|r| !r.is_clifford());
        let bad = bad.expect("some pair fails at level 4");
        assert!(bad.pair.1 >= 9);
    }

    #[test]
    fn symplectic_form_shapes() {
        let j2 = symplectic_form(2).unwrap();
        assert_eq!(j2.rows(), vec![vec![0, -1], vec![1, 0]]);
        assert!(symplectic_form(3).is_err());
        assert!(symplectic_form(0).is_err());
        let j8 = symplectic_form(8).unwrap();
        assert_eq!(j8.entry(0, 4), -1);
        assert_eq!(j8.entry(4, 0), 1);
        assert_eq!(j8.entry(3, 7), -1);
        assert_eq!(j8.entry(7, 3), 1);
        for dim in (2..=256).step_by(2) {
            let j = symplectic_form(dim).unwrap();
            assert_eq!(j.mul(&j).unwrap().scalar_sign(), Some(-1));
            assert_eq!(j.transpose(), j.negated());
        }
    }

    #[test]
    fn symplectic_constants() {
        let r = check_symplectic(&build_level(3).unwrap()).unwrap();
        assert_eq!(r.constants, vec![(1, -1), (2, -1), (3, -1)]);
        assert!(r.holds());
        let r = check_symplectic(&build_level(2).unwrap()).unwrap();
        assert_eq!(r.constants, vec![(1, -1)]);
        assert!(check_symplectic(&build_level(0).unwrap()).is_err());
    }

    #[test]
    fn dense_round_trip_and_rejects() {
        let t = build_level(3).unwrap();
        let m = left_mult_matrix(&t, 6).unwrap();
        let rows: Vec<Vec<i64>> = m.to_dense().rows();
        assert_eq!(SignedPermMatrix::from_dense(&rows).unwrap(), m);
        assert!(SignedPermMatrix::from_dense(&[vec![1, 1], vec![0, 0]]).is_err());
        assert!(SignedPermMatrix::from_dense(&[vec![2, 0], vec![0, 1]]).is_err());
        assert!(SignedPermMatrix::from_dense(&[vec![1, 0]]).is_err());
    }
}
