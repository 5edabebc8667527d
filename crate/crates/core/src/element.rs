//! Exact elements `y_0 e_0 + ... + y_{dim-1} e_{dim-1}` with rational coefficients.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::level::AlgebraLevel;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    level: AlgebraLevel,
    coeffs: Vec<BigRational>,
}

impl Element {
    pub fn zero(level: AlgebraLevel) -> Self {
        Element { level, coeffs: vec![BigRational::zero(); level.dim()] }
    }

    pub fn one(level: AlgebraLevel) -> Self {
        Self::basis(level, 0)
    }

    /// The basis unit `e_i`. Panics if `i` is out of range.
    pub fn basis(level: AlgebraLevel, i: usize) -> Self {
        let mut e = Self::zero(level);
        e.coeffs[i] = BigRational::one();
        e
    }

    pub fn from_coeffs(level: AlgebraLevel, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != level.dim() {
            return Err(Error::Usage(format!("expected {} coefficients, got {}", level.dim(), coeffs.len())));
        }
        Ok(Element { level, coeffs })
    }

    pub fn from_ints(level: AlgebraLevel, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(level, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Sparse integer constructor: `sum of c * e_i` over `(i, c)`.
    pub fn from_terms(level: AlgebraLevel, terms: &[(usize, i64)]) -> Result<Self> {
        let mut e = Self::zero(level);
        for &(i, c) in terms {
            let slot = e.coeffs.get_mut(i).ok_or_else(|| Error::Usage(format!("basis index {i} out of range")))?;
            *slot += BigRational::from_integer(c.into());
        }
        Ok(e)
    }

    pub fn level(&self) -> AlgebraLevel {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &BigRational) -> Element {
        Element { level: self.level, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Sum of squared coefficients.
    pub fn quadratic_norm(&self) -> BigRational {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Moves the element into a higher level (coefficients padded with zeros).
    pub fn embed(&self, level: AlgebraLevel) -> Result<Element> {
        if level < self.level {
            return Err(Error::Usage(format!("cannot embed level {} into {}", self.level.n(), level.n())));
        }
        let mut e = Element::zero(level);
        e.coeffs[..self.coeffs.len()].clone_from_slice(&self.coeffs);
        Ok(e)
    }

    /// Coefficients as reduced `p/q` strings, integers without a denominator.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Draws coefficients `p/q` with `|p| <= max_num`, `1 <= q <= max_den`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, level: AlgebraLevel, max_num: i64, max_den: i64) -> Element {
        let coeffs = (0..level.dim())
            .map(|_| {
                let p = rng.random_range(-max_num..=max_num);
                let q = rng.random_range(1..=max_den);
                BigRational::new(BigInt::from(p), BigInt::from(q))
            })
            .collect();
        Element { level, coeffs }
    }

    /// Like [`Element::random`] but never zero.
    pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, level: AlgebraLevel, max_num: i64, max_den: i64) -> Element {
        loop {
            let e = Self::random(rng, level, max_num, max_den);
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn check_same_level(&self, other: &Element) -> Result<()> {
        if self.level != other.level {
            return Err(Error::Usage(format!("level mismatch: {} vs {}", self.level.n(), other.level.n())));
        }
        Ok(())
    }
}

fn check_table(table: &StructureConstants, x: &Element) -> Result<()> {
    if table.level() != x.level {
        return Err(Error::Usage(format!(
            "element of level {} used with a level {} table",
            x.level.n(),
            table.level().n()
        )));
    }
    Ok(())
}

/// Bilinear extension of the basis products.
///
/// Both factors are brought to integer numerators over a common
/// denominator, so the inner loop runs on integers and each output
/// coefficient is reduced once.
pub fn multiply(table: &StructureConstants, x: &Element, y: &Element) -> Result<Element> {
    check_table(table, x)?;
    x.check_same_level(y)?;
    let (xn, xd) = integer_form(x);
    let (yn, yd) = integer_form(y);
    let mut acc = vec![BigInt::zero(); x.coeffs.len()];
    for (i, a) in &xn {
        for (j, b) in &yn {
            let p = table.product(*i, *j);
            let slot = &mut acc[usize::from(p.index)];
            if p.sign > 0 {
                *slot += a * b;
            } else {
                *slot -= a * b;
            }
        }
    }
    let denom = xd * yd;
    let coeffs = acc.into_iter().map(|n| BigRational::new(n, denom.clone())).collect();
    Ok(Element { level: x.level, coeffs })
}

/// Nonzero coefficients as `(index, numerator)` over one common denominator.
fn integer_form(x: &Element) -> (Vec<(usize, BigInt)>, BigInt) {
    let denom = x.coeffs.iter().filter(|c| !c.is_zero()).fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let terms = x
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.numer() * (&denom / c.denom())))
        .collect();
    (terms, denom)
}

/// `y_0 e_0 - y_i e_i`.
pub fn conjugate(x: &Element) -> Element {
    let mut out = x.clone();
    for c in &mut out.coeffs[1..] {
        *c = -c.clone();
    }
    out
}

/// `Y Y*`, which must be a real scalar.
pub fn norm(table: &StructureConstants, x: &Element) -> Result<BigRational> {
    scalar_part(multiply(table, x, &conjugate(x))?)
}

/// `Y* Y`, the other evaluation order.
pub fn norm_reversed(table: &StructureConstants, x: &Element) -> Result<BigRational> {
    scalar_part(multiply(table, &conjugate(x), x)?)
}

fn scalar_part(e: Element) -> Result<BigRational> {
    if e.coeffs[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::Domain(format!("Y Y* = {e} is not real")));
    }
    Ok(e.coeffs.into_iter().next().unwrap())
}

/// Result of [`inverse`]: `Y* / |Y|` plus whether it really inverts `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inverse {
    pub value: Element,
    /// `Y (Y*/|Y|) = e_0`.
    pub right_inverse: bool,
    /// `(Y*/|Y|) Y = e_0`.
    pub left_inverse: bool,
}

impl Inverse {
    pub fn is_two_sided(&self) -> bool {
        self.right_inverse && self.left_inverse
    }
}

pub fn inverse(table: &StructureConstants, x: &Element) -> Result<Inverse> {
    check_table(table, x)?;
    if x.is_zero() {
        return Err(Error::Domain("the zero element has no inverse".into()));
    }
    let n = norm(table, x)?;
    let value = conjugate(x).scale(&n.recip());
    let right_inverse = multiply(table, x, &value)?.is_one();
    let left_inverse = multiply(table, &value, x)?.is_one();
    Ok(Inverse { value, right_inverse, left_inverse })
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.level, rhs.level, "level mismatch in addition");
        Element { level: self.level, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.level, rhs.level, "level mismatch in subtraction");
        Element { level: self.level, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "e{i}")?,
                (_, false) => write!(f, "{mag}e{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Element", 2)?;
        s.serialize_field("level", &self.level)?;
        s.serialize_field("coeffs", &self.coeff_strings())?;
        s.end()
    }
}
