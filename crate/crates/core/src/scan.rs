//! Anticommuting families among the multiplication matrices.
//!
//! Vertices are imaginary basis indices; `i ~ j` when `{E_i, E_j} = 0`.
//! Maximum cliques are the largest Clifford generator families built from
//! single basis units.

use serde::Serialize;

use crate::algebra::StructureConstants;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::matrix::{mult_matrix, AnticommutatorReport, Side, SignedPermMatrix};

/// Default node budget for the clique search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Clique search is guaranteed exact up to this many vertices.
pub const EXACT_VERTEX_LIMIT: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticommutationGraph {
    level: u32,
    side: Side,
    dim: usize,
    // indexed by basis index; row 0 unused
    adj: Vec<Bits>,
}

/// Graph over left-multiplication matrices.
pub fn anticommutation_graph(table: &StructureConstants) -> Result<AnticommutationGraph> {
    anticommutation_graph_for(table, Side::Left)
}

pub fn anticommutation_graph_for(table: &StructureConstants, side: Side) -> Result<AnticommutationGraph> {
    if table.level().n() < 1 {
        return Err(Error::Domain("anticommutation graph needs level >= 1".into()));
    }
    let dim = table.dim();
    let mats = (1..dim).map(|i| mult_matrix(table, i, side)).collect::<Result<Vec<_>>>()?;
    let mut adj = vec![Bits::new(dim); dim];
    for i in 1..dim {
        for j in i + 1..dim {
            if mats[i - 1].anticommutes_with(&mats[j - 1]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(AnticommutationGraph { level: table.level().n(), side, dim, adj })
}

impl AnticommutationGraph {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Vertices are `1 ..= vertex_count()`.
    pub fn vertex_count(&self) -> usize {
        self.dim - 1
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.dim && j < self.dim && self.adj[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.dim).flat_map(|i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j))).collect()
    }

    /// Pairs of distinct vertices that do not anticommute.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (1..self.dim)
            .flat_map(|i| (i + 1..self.dim).filter(move |&j| !self.has_edge(i, j)).map(move |j| (i, j)))
            .collect()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(n, &a)| vertices[n + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_complete(&self) -> bool {
        self.edges().len() == self.vertex_count() * self.vertex_count().saturating_sub(1) / 2
    }

    /// No vertex outside `clique` is adjacent to all of it.
    pub fn is_maximal_clique(&self, clique: &[usize]) -> bool {
        (1..self.dim).filter(|v| !clique.contains(v)).all(|v| clique.iter().any(|&c| !self.has_edge(v, c)))
    }

    /// Graphviz export.
    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "graph anticommutation_level{} {{\n  // edge i -- j: {{E_i, E_j}} = 0 ({} multiplication)\n",
            self.level,
            match self.side {
                Side::Left => "left",
                Side::Right => "right",
            }
        );
        for v in 1..self.dim {
            out.push_str(&format!("  {v};\n"));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A verified family of pairwise anticommuting generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliffordSet {
    pub level: u32,
    pub side: Side,
    pub indices: Vec<usize>,
    /// `{E_i, E_j}` for every `i <= j` in the set.
    pub witness: Vec<AnticommutatorReport>,
    pub maximal: bool,
}

impl CliffordSet {
    /// Recomputes every anticommutator; fails if one is not `-2 delta_ij I`.
    pub fn verify(table: &StructureConstants, indices: &[usize], side: Side) -> Result<CliffordSet> {
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        indices.dedup();
        let mut witness = Vec::new();
        for (n, &i) in indices.iter().enumerate() {
            for &j in &indices[n..] {
                let report = AnticommutatorReport::new(table, i, j, side)?;
                if !report.is_clifford() {
                    return Err(Error::Domain(format!("{{E_{i}, E_{j}}} != -2 delta_ij I")));
                }
                witness.push(report);
            }
        }
        let graph = anticommutation_graph_for(table, side)?;
        let maximal = graph.is_maximal_clique(&indices);
        Ok(CliffordSet { level: table.level().n(), side, indices, witness, maximal })
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

/// Result of [`max_anticommuting_sets`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueSearch {
    /// Largest clique size found.
    pub max_size: usize,
    /// All maximum cliques found, each ascending, list sorted.
    pub cliques: Vec<Vec<usize>>,
    /// True when the search finished, so `cliques` is the complete list.
    pub exact: bool,
    /// Certified upper bound on the clique number (greedy colouring).
    pub upper_bound: usize,
    pub nodes: u64,
    pub budget_exhausted: bool,
}

/// Exact branch and bound with colouring bounds, enumerating every maximum
/// clique. Stops after `budget` search nodes.
pub fn max_anticommuting_sets(graph: &AnticommutationGraph, budget: u64) -> CliqueSearch {
    let order = degeneracy_order(graph);
    let n = order.len();
    // relabel so bit order follows the degeneracy order
    let mut label = vec![usize::MAX; graph.dim];
    for (pos, &v) in order.iter().enumerate() {
        label[v] = pos;
    }
    let adj: Vec<Bits> = order
        .iter()
        .map(|&v| {
            let mut b = Bits::new(n);
            for u in graph.adj[v].iter() {
                b.insert(label[u]);
            }
            b
        })
        .collect();

    let mut search = Search { adj: &adj, best: 0, found: Vec::new(), nodes: 0, budget, exhausted: false };
    let all = Bits::full(n);
    let upper_bound = color_sort(&adj, &all).1.last().copied().unwrap_or(0);
    search.expand(&mut Vec::new(), all);

    let mut cliques: Vec<Vec<usize>> = search
        .found
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|p| order[p]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    cliques.dedup();
    CliqueSearch {
        max_size: search.best,
        cliques,
        exact: !search.exhausted,
        upper_bound: if search.exhausted { upper_bound } else { search.best },
        nodes: search.nodes,
        budget_exhausted: search.exhausted,
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: usize,
    found: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut candidates: Bits) {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if candidates.is_empty() {
            if clique.len() > self.best {
                self.best = clique.len();
                self.found.clear();
            }
            if clique.len() == self.best && self.best > 0 {
                self.found.push(clique.clone());
            }
            return;
        }
        let (verts, colors) = color_sort(self.adj, &candidates);
        for idx in (0..verts.len()).rev() {
            // ties are still explored so every maximum clique is reported
            if clique.len() + colors[idx] < self.best || self.exhausted {
                return;
            }
            let v = verts[idx];
            clique.push(v);
            self.expand(clique, candidates.intersect(&self.adj[v]));
            clique.pop();
            candidates.remove(v);
        }
    }
}

/// Greedy sequential colouring; returns vertices in colour order with the
/// running colour count, so `colors[i]` bounds any clique within `verts[..=i]`.
fn color_sort(adj: &[Bits], candidates: &Bits) -> (Vec<usize>, Vec<usize>) {
    let mut verts = Vec::with_capacity(candidates.count());
    let mut colors = Vec::with_capacity(verts.capacity());
    let mut uncolored = candidates.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_in_place(&adj[v]);
            uncolored.remove(v);
            verts.push(v);
            colors.push(color);
        }
    }
    (verts, colors)
}

/// Vertices ordered so that the highest cores come first.
fn degeneracy_order(graph: &AnticommutationGraph) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..graph.dim).map(|v| if v == 0 { 0 } else { graph.degree(v) }).collect();
    let mut removed = vec![false; graph.dim];
    removed[0] = true;
    let mut peel = Vec::with_capacity(graph.dim - 1);
    for _ in 1..graph.dim {
        let v = (1..graph.dim).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).unwrap();
        removed[v] = true;
        peel.push(v);
        for u in graph.adj[v].iter() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    peel.reverse();
    peel
}

/// The ordered product of a generator family and how it sits against it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub base: Vec<usize>,
    pub side: Side,
    pub omega: SignedPermMatrix,
    /// `s` with `omega^2 = s I`; `None` means the report is invalid.
    pub square_sign: Option<i8>,
    pub anticommutes_with_all: bool,
    pub commutes_with_all: bool,
}

impl ExtensionReport {
    pub fn is_valid(&self) -> bool {
        self.square_sign.is_some()
    }

    /// A further Clifford generator of square `-I`.
    pub fn extends_negative(&self) -> bool {
        self.anticommutes_with_all && self.square_sign == Some(-1)
    }
}

/// Builds `omega = E_{i1} E_{i2} ... E_{ik}` in index order.
pub fn extend_with_volume_element(table: &StructureConstants, set: &CliffordSet) -> Result<ExtensionReport> {
    volume_element(table, &set.indices, set.side)
}

/// Same as [`extend_with_volume_element`] for raw indices.
pub fn volume_element(table: &StructureConstants, indices: &[usize], side: Side) -> Result<ExtensionReport> {
    let mut base = indices.to_vec();
    base.sort_unstable();
    let mats = base.iter().map(|&i| mult_matrix(table, i, side)).collect::<Result<Vec<_>>>()?;
    let mut omega = SignedPermMatrix::identity(table.dim());
    for m in &mats {
        omega = omega.mul(m)?;
    }
    let square_sign = omega.mul(&omega)?.scalar_sign();
    let anticommutes_with_all = mats.iter().all(|m| omega.anticommutes_with(m));
    let commutes_with_all = mats.iter().all(|m| omega.commutes_with(m));
    Ok(ExtensionReport { base, side, omega, square_sign, anticommutes_with_all, commutes_with_all })
}

/// Hurwitz-Radon number: for `dim = odd * 2^(c + 4d)`, `0 <= c <= 3`,
/// `rho = 2^c + 8d`.
pub fn hurwitz_radon(dim: u64) -> Result<u64> {
    if dim == 0 {
        return Err(Error::Domain("Hurwitz-Radon number needs dim >= 1".into()));
    }
    let b = u64::from(dim.trailing_zeros());
    let (c, d) = (b % 4, b / 4);
    Ok((1 << c) + 8 * d)
}

/// Checks that the imaginary units of the 16-dimensional algebra do not
/// give a Clifford family of 15 generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cliff15Report {
    pub level: u32,
    /// The claim is about level 4 only.
    pub applies: bool,
    pub failing_pairs: Vec<(usize, usize)>,
    pub failing_count: usize,
    pub max_clique: usize,
    pub confirmed: bool,
}

pub fn no_sixteen_dim_cliff15(table: &StructureConstants) -> Result<Cliff15Report> {
    let graph = anticommutation_graph(table)?;
    let failing_pairs = graph.non_edges();
    let search = max_anticommuting_sets(&graph, DEFAULT_SEARCH_BUDGET);
    let applies = table.level().n() == 4;
    let confirmed = applies && search.exact && !failing_pairs.is_empty() && search.max_size < 15;
    Ok(Cliff15Report {
        level: table.level().n(),
        applies,
        failing_count: failing_pairs.len(),
        failing_pairs,
        max_clique: search.max_size,
        confirmed,
    })
}

/// Counts over the bounded monomial-matrix search for further generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialSearchReport {
    pub base: Vec<usize>,
    /// Basis indices whose matrix supports (permutation patterns) were tried.
    pub supports: Vec<usize>,
    pub candidates: u64,
    /// Sign choices anticommuting with the whole base and squaring to `-I`.
    pub square_minus_one: u64,
    /// Sign choices anticommuting with the whole base and squaring to `+I`.
    pub square_plus_one: u64,
}

/// Tries every sign assignment on the permutation pattern of each
/// `E_s`, `s` in `supports`, looking for matrices that anticommute with
/// every `E_b`, `b` in `base`.
pub fn search_monomial_extensions(
    table: &StructureConstants,
    base: &[usize],
    supports: &[usize],
) -> Result<MonomialSearchReport> {
    let dim = table.dim();
    if dim > 20 {
        return Err(Error::Domain(format!("monomial sign search over 2^{dim} patterns is too large")));
    }
    let base_mats = base.iter().map(|&i| mult_matrix(table, i, Side::Left)).collect::<Result<Vec<_>>>()?;
    let mut report = MonomialSearchReport {
        base: base.to_vec(),
        supports: supports.to_vec(),
        candidates: 0,
        square_minus_one: 0,
        square_plus_one: 0,
    };
    for &s in supports {
        let pattern = mult_matrix(table, s, Side::Left)?;
        for signs in 0u32..(1 << dim) {
            report.candidates += 1;
            let cols = pattern
                .columns()
                .iter()
                .enumerate()
                .map(|(b, c)| c.times(if signs >> b & 1 == 1 { -1 } else { 1 }))
                .collect();
            let m = SignedPermMatrix::from_columns(cols)?;
            let Some(sq) = m.mul(&m)?.scalar_sign() else { continue };
            if base_mats.iter().all(|e| m.anticommutes_with(e)) {
                if sq < 0 {
                    report.square_minus_one += 1;
                } else {
                    report.square_plus_one += 1;
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_level;

    fn graph(n: u32) -> AnticommutationGraph {
        anticommutation_graph(&build_level(n).unwrap()).unwrap()
    }

    #[test]
    fn small_graphs_are_complete() {
        assert!(graph(1).is_complete());
        assert!(graph(2).is_complete());
        assert!(graph(3).is_complete());
        assert!(!graph(4).is_complete());
        assert!(anticommutation_graph(&build_level(0).unwrap()).is_err());
    }

    #[test]
    fn level4_graph_contains_k8() {
        let g = graph(4);
        let first_eight: Vec<usize> = (1..=8).collect();
        assert!(g.is_clique(&first_eight));
        assert!(!g.is_clique(&(1..=15).collect::<Vec<_>>()));
        assert!(!g.has_edge(3, 3));
        assert_eq!(g.has_edge(2, 9), g.has_edge(9, 2));
    }

    #[test]
    fn clique_search_small_levels() {
        let s = max_anticommuting_sets(&graph(2), DEFAULT_SEARCH_BUDGET);
        assert_eq!(s.cliques, vec![vec![1, 2, 3]]);
        assert!(s.exact);
        let s = max_anticommuting_sets(&graph(3), DEFAULT_SEARCH_BUDGET);
        assert_eq!(s.cliques, vec![(1..=7).collect::<Vec<_>>()]);
        let s = max_anticommuting_sets(&graph(4), DEFAULT_SEARCH_BUDGET);
        assert_eq!(s.max_size, 8);
        assert!(s.cliques.contains(&(1..=8).collect()));
        assert_eq!(s.upper_bound, 8);
    }

    #[test]
    fn clique_search_reports_budget_exhaustion() {
        let s = max_anticommuting_sets(&graph(5), 3);
        assert!(s.budget_exhausted);
        assert!(!s.exact);
        assert!(s.upper_bound >= s.max_size);
    }

    #[test]
    fn hurwitz_radon_values() {
        let expected =
            [(1, 1), (2, 2), (4, 4), (8, 8), (16, 9), (32, 10), (64, 12), (128, 16), (256, 17), (3, 1), (24, 8)];
        for (dim, rho) in expected {
            assert_eq!(hurwitz_radon(dim).unwrap(), rho, "rho({dim})");
        }
        assert!(hurwitz_radon(0).is_err());
    }

    #[test]
    fn quaternion_volume_element() {
        let t = build_level(2).unwrap();
        let r = volume_element(&t, &[1, 2], Side::Left).unwrap();
        assert_eq!(r.square_sign, Some(-1));
        assert!(r.anticommutes_with_all);
        let e3 = mult_matrix(&t, 3, Side::Left).unwrap();
        assert!(r.omega.sign_relative_to(&e3).is_some());
    }

    #[test]
    fn odd_family_volume_element_commutes() {
        let t = build_level(3).unwrap();
        let set = CliffordSet::verify(&t, &(1..=7).collect::<Vec<_>>(), Side::Left).unwrap();
        assert!(set.maximal);
        let r = extend_with_volume_element(&t, &set).unwrap();
        assert!(!r.anticommutes_with_all);
        assert!(r.commutes_with_all);
        assert!(r.is_valid());
    }

    #[test]
    fn clifford_set_rejects_non_family() {
        let t = build_level(4).unwrap();
        let g = anticommutation_graph(&t).unwrap();
        let (i, j) = g.non_edges()[0];
        assert!(CliffordSet::verify(&t, &[i, j], Side::Left).is_err());
        let s = CliffordSet::verify(&t, &[3, 1, 2], Side::Left).unwrap();
        assert_eq!(s.indices, vec![1, 2, 3]);
        assert_eq!(s.witness.len(), 6);
        assert!(!s.maximal);
    }

    #[test]
    fn cliff15_vacuous_below_level4() {
        let r = no_sixteen_dim_cliff15(&build_level(3).unwrap()).unwrap();
        assert!(!r.applies);
        assert!(r.failing_pairs.is_empty());
        assert!(!r.confirmed);
    }

    #[test]
    fn dot_export() {
        let dot = graph(2).to_dot();
        assert!(dot.starts_with("graph anticommutation_level2 {"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(dot.contains("  2 -- 3;"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
