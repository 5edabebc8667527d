//! Division-algebra properties and where they break down.
//!
//! "Holds" results are always scoped to the window that was scanned: a
//! documented exhaustive family of small integer elements plus seeded random
//! rational samples. Failures carry a witness that can be re-checked.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::StructureConstants;
use crate::element::{conjugate, inverse, multiply, Element};
use crate::error::{Error, Result};
use crate::level::AlgebraLevel;
use crate::scan::DEFAULT_SEARCH_BUDGET;
use crate::triplets::{count_triplets_formula, enumerate_triplets, Triplet};

pub const DEFAULT_SEED: u64 = 42;

/// Work limits for the sampled and windowed checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Random rational pairs for norm composition and inverses.
    pub random_pairs: usize,
    /// Random rational samples per algebraic identity.
    pub identity_samples: usize,
    /// Cap on individual checks inside an exhaustive window.
    pub window_checks: u64,
    /// Cap on two-term products in the zero-divisor scan.
    pub zero_divisor_products: u64,
    /// Node cap for the clique search.
    pub search_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            random_pairs: 10_000,
            identity_samples: 200,
            window_checks: 5_000_000,
            zero_divisor_products: 5_000_000,
            search_nodes: DEFAULT_SEARCH_BUDGET,
        }
    }
}

// Sparse integer elements for the exhaustive windows.
type Sparse = Vec<(usize, i64)>;

fn normalize(mut v: Sparse) -> Sparse {
    v.sort_unstable_by_key(|&(i, _)| i);
    let mut out: Sparse = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

fn smul(table: &StructureConstants, x: &[(usize, i64)], y: &[(usize, i64)]) -> Sparse {
    let mut terms = Vec::with_capacity(x.len() * y.len());
    for &(i, a) in x {
        for &(j, b) in y {
            let p = table.product(i, j);
            terms.push((usize::from(p.index), a * b * i64::from(p.sign)));
        }
    }
    normalize(terms)
}

fn snorm(x: &[(usize, i64)]) -> i64 {
    x.iter().map(|&(_, c)| c * c).sum()
}

fn max_index(x: &[(usize, i64)]) -> usize {
    x.iter().map(|&(i, _)| i).max().unwrap_or(0)
}

fn to_element(level: AlgebraLevel, x: &[(usize, i64)]) -> Element {
    Element::from_terms(level, x).expect("window indices are in range")
}

/// Nonzero elements with coefficients in {-1, 0, 1} on at most two units,
/// ordered by their largest index.
fn two_term_window(dim: usize) -> Vec<Sparse> {
    let mut out = Vec::new();
    for j in 0..dim {
        for s in [1, -1] {
            out.push(vec![(j, s)]);
        }
        for i in 0..j {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(vec![(i, a), (j, b)]);
            }
        }
    }
    out
}

/// Pairs from `items` (sorted by `key`) visited by subalgebra layer: all
/// pairs inside level `m` before any pair reaching into level `m + 1`.
/// Returns the first pair accepted by `f`, the number of pairs tried and
/// whether `limit` cut the scan short.
fn find_layered<T, F>(
    items: &[T],
    key: impl Fn(&T) -> usize,
    dim: usize,
    limit: u64,
    mut f: F,
) -> (Option<(usize, usize)>, u64, bool)
where
    F: FnMut(&T, &T) -> bool,
{
    debug_assert!(items.windows(2).all(|w| key(&w[0]) <= key(&w[1])));
    let prefix = |bound: usize| items.partition_point(|x| key(x) < bound);
    let mut tried = 0u64;
    let mut bound = 1;
    let mut inner = 0;
    loop {
        let outer = prefix(bound);
        for a in 0..outer {
            let ys = if a < inner { inner..outer } else { 0..outer };
            for b in ys {
                if tried >= limit {
                    return (None, tried, true);
                }
                tried += 1;
                if f(&items[a], &items[b]) {
                    return (Some((a, b)), tried, false);
                }
            }
        }
        if bound >= dim {
            return (None, tried, false);
        }
        inner = outer;
        bound *= 2;
    }
}

fn random_element<R: Rng>(rng: &mut R, level: AlgebraLevel) -> Element {
    let dim = level.dim();
    if dim <= 16 {
        return Element::random_nonzero(rng, level, 9, 9);
    }
    // sparse support keeps high-dimensional samples cheap
    let mut coeffs = vec![BigRational::zero(); dim];
    for i in sample(rng, dim, 8).into_iter() {
        coeffs[i] = BigRational::new(rng.random_range(-9i64..=9).into(), rng.random_range(1i64..=9).into());
    }
    if coeffs.iter().all(Zero::is_zero) {
        coeffs[0] = BigRational::from_integer(1.into());
    }
    Element::from_coeffs(level, coeffs).unwrap()
}

/// Outcome of one checked property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<W> {
    Holds { scope: String },
    Fails { witness: W },
}

impl<W> Outcome<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds { .. })
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::Fails { witness } => Some(witness),
            Outcome::Holds { .. } => None,
        }
    }
}

impl<W: Serialize> Serialize for Outcome<W> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Outcome", 2)?;
        match self {
            Outcome::Holds { scope } => {
                s.serialize_field("status", "holds")?;
                s.serialize_field("scope", scope)?;
            }
            Outcome::Fails { witness } => {
                s.serialize_field("status", "fails")?;
                s.serialize_field("witness", witness)?;
            }
        }
        s.end()
    }
}

/// `|XY| != |X||Y|` for a concrete pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormWitness {
    pub x: Element,
    pub y: Element,
}

impl NormWitness {
    /// `(|X|, |Y|, |XY|)` as sums of squares.
    pub fn norms(&self, table: &StructureConstants) -> Result<(BigRational, BigRational, BigRational)> {
        let xy = multiply(table, &self.x, &self.y)?;
        Ok((self.x.quadratic_norm(), self.y.quadratic_norm(), xy.quadratic_norm()))
    }

    pub fn reverify(&self, table: &StructureConstants) -> Result<bool> {
        let (nx, ny, nxy) = self.norms(table)?;
        Ok(nxy != nx * ny)
    }
}

impl Serialize for NormWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("NormWitness", 2)?;
        s.serialize_field("x", &self.x)?;
        s.serialize_field("y", &self.y)?;
        s.end()
    }
}

/// Checks `|XY| = |X| |Y|` over the two-term window, then over seeded
/// random rational pairs.
pub fn check_norm_composition(table: &StructureConstants, budget: &Budget, seed: u64) -> Outcome<NormWitness> {
    let level = table.level();
    let window = two_term_window(table.dim());
    let (hit, tried, truncated) = find_layered(
        &window,
        |x| max_index(x),
        table.dim(),
        budget.window_checks,
        |x, y| snorm(&smul(table, x, y)) != snorm(x) * snorm(y),
    );
    if let Some((a, b)) = hit {
        return Outcome::Fails {
            witness: NormWitness { x: to_element(level, &window[a]), y: to_element(level, &window[b]) },
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget.random_pairs {
        let x = random_element(&mut rng, level);
        let y = random_element(&mut rng, level);
        let w = NormWitness { x, y };
        if w.reverify(table).expect("same level") {
            return Outcome::Fails { witness: w };
        }
    }
    Outcome::Holds {
        scope: format!(
            "{tried} two-term pairs{} + {} random rational pairs (seed {seed})",
            if truncated { " (window truncated)" } else { "" },
            budget.random_pairs
        ),
    }
}

/// Nonzero `x`, `y` with `x y = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorWitness {
    pub level: u32,
    pub x: Element,
    pub y: Element,
}

impl ZeroDivisorWitness {
    pub fn reverify(&self, table: &StructureConstants) -> Result<bool> {
        Ok(!self.x.is_zero() && !self.y.is_zero() && multiply(table, &self.x, &self.y)?.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorScan {
    pub witnesses: Vec<ZeroDivisorWitness>,
    pub products_scanned: u64,
    /// The scan stopped at the budget; `witnesses` is then partial.
    pub exhausted: bool,
}

/// Every zero product `(e_i + s e_j)(e_k + t e_l)`, `0 < i < j`, `0 < k < l`.
pub fn find_zero_divisors(table: &StructureConstants) -> Vec<ZeroDivisorWitness> {
    find_zero_divisors_bounded(table, u64::MAX).witnesses
}

/// As [`find_zero_divisors`], stopping after `max_products` products.
/// Candidates are visited subalgebra by subalgebra, so a truncated scan
/// still covers every lower level completely.
pub fn find_zero_divisors_bounded(table: &StructureConstants, max_products: u64) -> ZeroDivisorScan {
    let dim = table.dim();
    let level = table.level();
    // (i, j, s), ordered by j so lower subalgebras come first
    let mut family = Vec::new();
    for j in 1..dim {
        for i in 1..j {
            for s in [1i64, -1] {
                family.push((i, j, s));
            }
        }
    }
    let mut found = Vec::new();
    let mut scanned = 0u64;
    let mut exhausted = false;
    let mut bound = 2;
    let mut inner = 0;
    'layers: while bound <= dim {
        let outer = family.partition_point(|f| f.1 < bound);
        for a in 0..outer {
            let (i, j, s) = family[a];
            let ys = if a < inner { inner..outer } else { 0..outer };
            for &(k, l, t) in &family[ys] {
                if scanned >= max_products {
                    exhausted = true;
                    break 'layers;
                }
                scanned += 1;
                let x = [(i, 1), (j, s)];
                let y = [(k, 1), (l, t)];
                if smul(table, &x, &y).is_empty() {
                    found.push(ZeroDivisorWitness {
                        level: level.n(),
                        x: to_element(level, &x),
                        y: to_element(level, &y),
                    });
                }
            }
        }
        inner = outer;
        bound *= 2;
    }
    found.sort_by_key(|w| (family_key(&w.x), family_key(&w.y)));
    ZeroDivisorScan { witnesses: found, products_scanned: scanned, exhausted }
}

fn family_key(e: &Element) -> (usize, usize, bool) {
    let support: Vec<usize> = (0..e.coeffs().len()).filter(|&i| !e.coeff(i).is_zero()).collect();
    let neg = e.coeff(support[1]) < &BigRational::zero();
    (support[0], support[1], neg)
}

/// Identities tested by [`check_identities`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `(xy)z = x(yz)`
    Associativity,
    /// `(xx)y = x(xy)`
    LeftAlternativity,
    /// `(yx)x = y(xx)`
    RightAlternativity,
    /// `(xy)x = x(yx)`
    Flexibility,
}

impl Identity {
    pub const ALL: [Identity; 4] =
        [Identity::Associativity, Identity::LeftAlternativity, Identity::RightAlternativity, Identity::Flexibility];

    /// Both sides for `x`, `y` (and `z` for associativity).
    pub fn sides(
        self,
        table: &StructureConstants,
        x: &Element,
        y: &Element,
        z: &Element,
    ) -> Result<(Element, Element)> {
        let m = |a: &Element, b: &Element| multiply(table, a, b);
        Ok(match self {
            Identity::Associativity => (m(&m(x, y)?, z)?, m(x, &m(y, z)?)?),
            Identity::LeftAlternativity => (m(&m(x, x)?, y)?, m(x, &m(x, y)?)?),
            Identity::RightAlternativity => (m(&m(y, x)?, x)?, m(y, &m(x, x)?)?),
            Identity::Flexibility => (m(&m(x, y)?, x)?, m(x, &m(y, x)?)?),
        })
    }

    fn sparse_sides(self, table: &StructureConstants, x: &Sparse, y: &Sparse, z: &Sparse) -> (Sparse, Sparse) {
        let m = |a: &Sparse, b: &Sparse| smul(table, a, b);
        match self {
            Identity::Associativity => (m(&m(x, y), z), m(x, &m(y, z))),
            Identity::LeftAlternativity => (m(&m(x, x), y), m(x, &m(x, y))),
            Identity::RightAlternativity => (m(&m(y, x), x), m(y, &m(x, x))),
            Identity::Flexibility => (m(&m(x, y), x), m(x, &m(y, x))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityWitness {
    pub x: Element,
    pub y: Element,
    /// Only used by associativity.
    pub z: Option<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub outcome: Outcome<IdentityWitness>,
}

impl IdentityCheck {
    /// For a failing check, recomputes both sides and confirms they differ.
    pub fn reverify(&self, table: &StructureConstants) -> Result<bool> {
        let Some(w) = self.outcome.witness() else {
            return Ok(true);
        };
        let z = w.z.clone().unwrap_or_else(|| Element::zero(w.x.level()));
        let (lhs, rhs) = self.identity.sides(table, &w.x, &w.y, &z)?;
        Ok(lhs != rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub level: u32,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
    pub norm_composition: Outcome<NormWitness>,
}

impl IdentityReport {
    pub fn get(&self, identity: Identity) -> &IdentityCheck {
        self.checks.iter().find(|c| c.identity == identity).expect("all identities are checked")
    }

    pub fn holds(&self, identity: Identity) -> bool {
        self.get(identity).outcome.holds()
    }
}

/// Associativity over all basis triples; the alternative laws and
/// flexibility over basis units and two-term elements; then each over
/// seeded random rational elements.
pub fn check_identities(table: &StructureConstants, budget: &Budget, seed: u64) -> IdentityReport {
    let checks = Identity::ALL
        .into_iter()
        .map(|identity| IdentityCheck { identity, outcome: check_identity(table, identity, budget, seed) })
        .collect();
    IdentityReport {
        level: table.level().n(),
        seed,
        checks,
        norm_composition: check_norm_composition(table, budget, seed),
    }
}

fn check_identity(
    table: &StructureConstants,
    identity: Identity,
    budget: &Budget,
    seed: u64,
) -> Outcome<IdentityWitness> {
    let level = table.level();
    let dim = table.dim();
    let units: Vec<Sparse> = (0..dim).map(|i| vec![(i, 1)]).collect();
    let fails = |x: &Sparse, y: &Sparse, z: &Sparse| {
        let (l, r) = identity.sparse_sides(table, x, y, z);
        l != r
    };
    let witness = |x: &Sparse, y: &Sparse, z: Option<&Sparse>| IdentityWitness {
        x: to_element(level, x),
        y: to_element(level, y),
        z: z.map(|z| to_element(level, z)),
    };

    let mut scope = Vec::new();
    if identity == Identity::Associativity {
        // basis triples, lower subalgebras first
        let mut tried = 0u64;
        let mut truncated = false;
        'outer: for k_max in 0..dim {
            for x in 0..=k_max {
                for y in 0..=k_max {
                    for z in 0..=k_max {
                        if x.max(y).max(z) != k_max {
                            continue;
                        }
                        if tried >= budget.window_checks {
                            truncated = true;
                            break 'outer;
                        }
                        tried += 1;
                        if fails(&units[x], &units[y], &units[z]) {
                            return Outcome::Fails { witness: witness(&units[x], &units[y], Some(&units[z])) };
                        }
                    }
                }
            }
        }
        scope.push(format!("{tried} basis triples{}", if truncated { " (truncated)" } else { "" }));
    } else {
        // x over the two-term window, y over basis units
        let window = two_term_window(dim);
        let zero: Sparse = Vec::new();
        let mut tried = 0u64;
        let mut truncated = false;
        let mut bound = 1;
        let mut inner = 0;
        'layers: loop {
            let outer = window.partition_point(|x| max_index(x) < bound);
            for (a, x) in window[..outer].iter().enumerate() {
                let ys = if a < inner { bound / 2..bound } else { 0..bound };
                for y in ys {
                    if tried >= budget.window_checks {
                        truncated = true;
                        break 'layers;
                    }
                    tried += 1;
                    if fails(x, &units[y], &zero) {
                        return Outcome::Fails { witness: witness(x, &units[y], None) };
                    }
                }
            }
            if bound >= dim {
                break;
            }
            inner = outer;
            bound *= 2;
        }
        scope.push(format!("{tried} two-term x / basis y pairs{}", if truncated { " (truncated)" } else { "" }));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ identity as u64);
    for _ in 0..budget.identity_samples {
        let x = random_element(&mut rng, level);
        let y = random_element(&mut rng, level);
        let z = random_element(&mut rng, level);
        let (l, r) = identity.sides(table, &x, &y, &z).expect("same level");
        if l != r {
            let z = (identity == Identity::Associativity).then_some(z);
            return Outcome::Fails { witness: IdentityWitness { x, y, z } };
        }
    }
    scope.push(format!("{} random rational samples (seed {seed})", budget.identity_samples));
    Outcome::Holds { scope: scope.join(" + ") }
}

/// `Y (Y*/|Y|) = e_0` on random elements, plus left cancellation
/// `Y^{-1} (Y X) = X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseCheck {
    pub level: u32,
    pub samples: usize,
    pub seed: u64,
    pub inverse: Outcome<Element>,
    pub cancellation: Outcome<CancellationWitness>,
}

/// `Y^{-1} (Y X) != X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CancellationWitness {
    pub y: Element,
    pub x: Element,
}

impl CancellationWitness {
    pub fn reverify(&self, table: &StructureConstants) -> Result<bool> {
        let inv = inverse(table, &self.y)?;
        let back = multiply(table, &inv.value, &multiply(table, &self.y, &self.x)?)?;
        Ok(back != self.x)
    }
}

pub fn check_inverses(table: &StructureConstants, samples: usize, seed: u64) -> InverseCheck {
    let level = table.level();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut bad_inverse = None;
    for _ in 0..samples {
        let y = random_element(&mut rng, level);
        let inv = inverse(table, &y).expect("nonzero element");
        if !inv.right_inverse {
            bad_inverse = Some(y);
            break;
        }
    }
    let inverse_outcome = match bad_inverse {
        Some(witness) => Outcome::Fails { witness },
        None => Outcome::Holds { scope: format!("{samples} random rational elements (seed {seed})") },
    };

    // cancellation breaks as soon as there are zero divisors
    let window = two_term_window(table.dim());
    let (hit, tried, _) = find_layered(
        &window,
        |x| max_index(x),
        table.dim(),
        1_000_000,
        |y, x| {
            // Y* (Y X) = |Y| X, kept integral
            let yx = smul(table, y, x);
            let ystar: Sparse = y.iter().map(|&(i, c)| (i, if i == 0 { c } else { -c })).collect();
            let back = smul(table, &ystar, &yx);
            let scaled: Sparse = x.iter().map(|&(i, c)| (i, c * snorm(y))).collect();
            back != normalize(scaled)
        },
    );
    let cancellation = match hit {
        Some((a, b)) => Outcome::Fails {
            witness: CancellationWitness { y: to_element(level, &window[a]), x: to_element(level, &window[b]) },
        },
        None => Outcome::Holds { scope: format!("{tried} two-term pairs") },
    };
    InverseCheck { level: level.n(), samples, seed, inverse: inverse_outcome, cancellation }
}

/// Reads the golden triplet format: three decimal integers per line,
/// `#` starts a comment line, blank lines ignored.
pub fn parse_golden(text: &str) -> Result<Vec<Triplet>> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(n, l)| {
            let nums = l
                .split_whitespace()
                .map(|t| t.parse::<u16>().map_err(|e| Error::Usage(format!("line {n}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            match nums[..] {
                [i, j, k] => Ok(Triplet::new(i, j, k)),
                _ => Err(Error::Usage(format!("line {n}: expected three indices, got {}", nums.len()))),
            }
        })
        .collect()
}

pub const QUATERNION_GOLDEN: &str = include_str!("../data/quaternion.txt");
pub const OCTONION_GOLDEN: &str = include_str!("../data/octonion.txt");
pub const HEXAGONION_GOLDEN: &str = include_str!("../data/hexagonion.txt");

/// The printed triplet list for a level, in printed order.
pub fn golden_triplets(level: u32) -> Result<Vec<Triplet>> {
    match level {
        2 => parse_golden(QUATERNION_GOLDEN),
        3 => parse_golden(OCTONION_GOLDEN),
        4 => parse_golden(HEXAGONION_GOLDEN),
        _ => Err(Error::Domain(format!("no printed triplet table for level {level}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryMatch {
    Exact,
    /// Same three indices, opposite orientation.
    Reversed,
    /// No generated triplet has these indices.
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenEntry {
    pub printed: Triplet,
    pub status: EntryMatch,
    /// The generated cycle on the same indices, if any.
    pub generated: Option<Triplet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableMatch {
    ExactMatch,
    OrientationOnly,
    StructuralMismatch,
}

/// Problems internal to the printed list, independent of any generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrintedDefects {
    /// Index pairs that appear in more than one printed triplet.
    pub duplicated_pairs: Vec<((u16, u16), Vec<Triplet>)>,
    /// Index pairs no printed triplet covers.
    pub uncovered_pairs: Vec<(u16, u16)>,
}

impl PrintedDefects {
    pub fn is_empty(&self) -> bool {
        self.duplicated_pairs.is_empty() && self.uncovered_pairs.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableDiff {
    pub level: u32,
    pub status: TableMatch,
    pub printed_count: usize,
    pub generated_count: usize,
    pub exact: usize,
    pub reversed: usize,
    pub missing: usize,
    pub entries: Vec<GoldenEntry>,
    /// Generated cycles whose index set is absent from the printed list.
    pub unmatched_generated: Vec<Triplet>,
    pub printed_defects: PrintedDefects,
}

impl TableDiff {
    /// Every missing printed entry touches a pair the printed list covers
    /// twice, and every unmatched generated cycle covers a pair the printed
    /// list leaves out: the disagreement is a printing error.
    pub fn mismatches_are_printing_errors(&self) -> bool {
        let dup: Vec<(u16, u16)> = self.printed_defects.duplicated_pairs.iter().map(|(p, _)| *p).collect();
        let missing_ok = self
            .entries
            .iter()
            .filter(|e| e.status == EntryMatch::Missing)
            .all(|e| e.printed.pairs().iter().any(|p| dup.contains(p)));
        let extra_ok = self
            .unmatched_generated
            .iter()
            .all(|t| t.pairs().iter().any(|p| self.printed_defects.uncovered_pairs.contains(p)));
        missing_ok && extra_ok
    }
}

/// Compares the generated cycles with the printed list, orientation-aware.
pub fn verify_against_paper_tables(table: &StructureConstants) -> Result<TableDiff> {
    let level = table.level().n();
    let printed = golden_triplets(level)?;
    compare_triplets(table, &printed)
}

/// [`verify_against_paper_tables`] against an arbitrary printed list.
pub fn compare_triplets(table: &StructureConstants, printed: &[Triplet]) -> Result<TableDiff> {
    let generated = enumerate_triplets(table);
    let by_support: BTreeMap<[u16; 3], Triplet> = generated.triplets.iter().map(|t| (t.support(), *t)).collect();

    let entries: Vec<GoldenEntry> = printed
        .iter()
        .map(|&p| {
            let g = by_support.get(&p.support()).copied();
            let status = match g {
                Some(g) if g == p => EntryMatch::Exact,
                Some(_) => EntryMatch::Reversed,
                None => EntryMatch::Missing,
            };
            GoldenEntry { printed: p, status, generated: g }
        })
        .collect();
    let printed_supports: Vec<[u16; 3]> = printed.iter().map(|t| t.support()).collect();
    let unmatched_generated: Vec<Triplet> =
        generated.triplets.iter().filter(|t| !printed_supports.contains(&t.support())).copied().collect();

    let mut cover: BTreeMap<(u16, u16), Vec<Triplet>> = BTreeMap::new();
    for t in printed {
        for p in t.pairs() {
            cover.entry(p).or_default().push(*t);
        }
    }
    let dim = table.dim() as u16;
    let uncovered_pairs =
        (1..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).filter(|p| !cover.contains_key(p)).collect();
    let duplicated_pairs = cover.into_iter().filter(|(_, ts)| ts.len() > 1).collect();

    let count = |s| entries.iter().filter(|e| e.status == s).count();
    let (exact, reversed, missing) =
        (count(EntryMatch::Exact), count(EntryMatch::Reversed), count(EntryMatch::Missing));
    let status = if missing > 0 || !unmatched_generated.is_empty() || printed.len() != generated.len() {
        TableMatch::StructuralMismatch
    } else if reversed > 0 {
        TableMatch::OrientationOnly
    } else {
        TableMatch::ExactMatch
    };
    Ok(TableDiff {
        level: table.level().n(),
        status,
        printed_count: printed.len(),
        generated_count: generated.len(),
        exact,
        reversed,
        missing,
        entries,
        unmatched_generated,
        printed_defects: PrintedDefects { duplicated_pairs, uncovered_pairs },
    })
}

/// Triplet count against dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NVsDim {
    pub n: u32,
    pub triplets: u128,
    pub dim: u128,
    pub exceeds: bool,
}

impl NVsDim {
    /// `N > dim` exactly for the levels beyond the octonions.
    pub fn matches_remark(&self) -> bool {
        self.exceeds == (self.n > 3)
    }
}

pub fn n_vs_dim(n: u32) -> Result<NVsDim> {
    let triplets = count_triplets_formula(n)?;
    let dim = 1u128 << n;
    Ok(NVsDim { n, triplets, dim, exceeds: triplets > dim })
}

/// Conjugation reverses basis products: `(e_i e_j)* = e_j* e_i*`.
/// Returns the first pair where it does not.
pub fn conjugation_antihomomorphism_failure(table: &StructureConstants) -> Option<(usize, usize)> {
    let level = table.level();
    let dim = table.dim();
    for i in 0..dim {
        for j in 0..dim {
            let (ei, ej) = (Element::basis(level, i), Element::basis(level, j));
            let lhs = conjugate(&multiply(table, &ei, &ej).unwrap());
            let rhs = multiply(table, &conjugate(&ej), &conjugate(&ei)).unwrap();
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}
