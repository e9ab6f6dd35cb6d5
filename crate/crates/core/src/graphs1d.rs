//! One-dimensional complexes (graphs): the three-condition test for `T² = 0`,
//! chordless cycles, and the exhaustive classification up to isomorphism.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{CanonicalForm, ComplexError, SimplicialComplex, VertexSet};
use crate::matroids::is_matroid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("expected a one-dimensional complex, got dimension {0:?}")]
    Dimension(Option<isize>),
    #[error("vertex {0} is a loop")]
    Loop(usize),
    #[error("classification is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A loop-free complex of dimension exactly one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph1D {
    complex: SimplicialComplex,
    adjacency: Vec<VertexSet>,
}

impl Graph1D {
    pub fn new(complex: SimplicialComplex) -> Result<Self, GraphError> {
        if complex.dim() != Some(1) {
            return Err(GraphError::Dimension(complex.dim()));
        }
        if let Some(v) = complex.loops().min_element() {
            return Err(GraphError::Loop(v));
        }
        let mut adjacency = vec![VertexSet::EMPTY; complex.n()];
        for e in complex.facets().iter().filter(|f| f.len() == 2) {
            let (u, v) = (e.min_element().unwrap(), e.max_element().unwrap());
            adjacency[u] = adjacency[u].with(v);
            adjacency[v] = adjacency[v].with(u);
        }
        Ok(Graph1D { complex, adjacency })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(SimplicialComplex::graph(n, edges)?)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn n(&self) -> usize {
        self.complex.n()
    }

    /// Open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Closed neighbourhood `ν(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adjacency[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            (0..self.n()).flat_map(|u| self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect();
        out.sort_unstable();
        out
    }

    /// Non-adjacent pairs of distinct vertices, i.e. the 2-element minimal nonfaces.
    pub fn non_edges(&self) -> Vec<VertexSet> {
        let n = self.n();
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adjacent(u, v))
            .map(|(u, v)| VertexSet::singleton(u).with(v))
            .collect()
    }

    fn is_forest(c: &SimplicialComplex) -> bool {
        let vertices = c.vertices().len();
        let edges = c.facets().iter().filter(|f| f.len() == 2).count();
        edges + c.components().len() == vertices
    }
}

/// Every vertex has degree at most three.
pub fn condition_i(g: &Graph1D) -> bool {
    (0..g.n()).all(|v| g.degree(v) <= 3)
}

/// Every cycle is dominating; equivalently, no `G ∖ ν(i)` contains a cycle.
pub fn condition_ii(g: &Graph1D) -> bool {
    (0..g.n()).all(|i| Graph1D::is_forest(&g.complex.deletion(g.closed_neighborhood(i))))
}

/// `G ∖ b̂` is connected for every non-adjacent pair `b`.
pub fn condition_iii(g: &Graph1D) -> bool {
    g.non_edges().into_iter().all(|b| {
        let hat = g.complex.b_hat(b).expect("graphs have neighbourhoods");
        g.complex.deletion(hat).is_connected()
    })
}

pub fn unobstructed_1d(g: &Graph1D) -> bool {
    condition_i(g) && condition_ii(g) && condition_iii(g)
}

/// Induced cycles of length at least three, each listed once, starting at
/// its smallest vertex and continuing towards the smaller neighbour.
pub fn chordless_cycles(g: &Graph1D) -> Vec<Vec<usize>> {
    fn extend(g: &Graph1D, path: &mut Vec<usize>, interior: VertexSet, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for w in g.neighbors(last).iter() {
            if w <= s || path.contains(&w) || !g.neighbors(w).is_disjoint(interior) {
                continue;
            }
            if g.adjacent(w, s) {
                if path.len() >= 2 && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push(cycle);
                }
                continue;
            }
            path.push(w);
            // interior: every path vertex except the start and the new end
            extend(g, path, if path.len() > 2 { interior.with(last) } else { interior }, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        for v in g.neighbors(s).iter().filter(|&v| v > s) {
            let mut path = vec![s, v];
            extend(g, &mut path, VertexSet::EMPTY, &mut out);
        }
    }
    out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn max_chordless_len(g: &Graph1D) -> usize {
    chordless_cycles(g).iter().map(Vec::len).max().unwrap_or(0)
}

/// Largest vertex count accepted by [`classify_1d`].
pub const MAX_CLASSIFY_VERTICES: usize = 8;

/// All loop-free graphs on exactly `n` vertices up to isomorphism (the edgeless
/// one included), as canonical representatives, grouped by edge count.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Vec<SimplicialComplex>>, GraphError> {
    if n > crate::complex::MAX_CANONICAL_VERTICES {
        return Err(GraphError::TooLarge { n, max: crate::complex::MAX_CANONICAL_VERTICES });
    }
    let empty = SimplicialComplex::points(n);
    let mut levels = vec![vec![empty]];
    let max_edges = n * n.saturating_sub(1) / 2;
    for _ in 0..max_edges {
        let prev = levels.last().unwrap();
        let children: Vec<(CanonicalForm, SimplicialComplex)> = prev
            .par_iter()
            .flat_map_iter(|g| {
                let g = g.clone();
                (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v))).filter_map(move |(u, v)| {
                    let e = VertexSet::singleton(u).with(v);
                    if g.is_face(e) {
                        return None;
                    }
                    let child = SimplicialComplex::new(n, g.facets().iter().copied().chain([e])).expect("in range");
                    let (form, perm) = child.canonical_labeling().expect("small");
                    Some((form, child.relabel(&perm)))
                })
            })
            .collect();
        let mut unique: HashMap<CanonicalForm, SimplicialComplex> = HashMap::with_capacity(children.len());
        for (form, c) in children {
            unique.entry(form).or_insert(c);
        }
        let mut next: Vec<(CanonicalForm, SimplicialComplex)> = unique.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(next.into_iter().map(|(_, c)| c).collect());
    }
    Ok(levels)
}

/// One isomorphism class of a classified graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_matroid: bool,
    #[serde(skip)]
    pub canonical: CanonicalForm,
}

impl ClassifiedGraph {
    pub fn graph(&self) -> Graph1D {
        Graph1D::from_edges(self.n, &self.edges).expect("classified graphs are valid")
    }

    /// `<n> <#edges> <matroid|-> <u-v,...>`
    pub fn golden_line(&self) -> String {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{} {} {} {}", self.n, self.edges.len(), if self.is_matroid { "matroid" } else { "-" }, edges.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub max_n: usize,
    pub entries: Vec<ClassifiedGraph>,
}

impl ClassificationResult {
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    pub fn golden_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# one-dimensional complexes with T2 = 0, up to isomorphism, n <= {}", self.max_n).unwrap();
        writeln!(out, "# n edges matroid edge-list").unwrap();
        for e in &self.entries {
            writeln!(out, "{}", e.golden_line()).unwrap();
        }
        out
    }

    /// Lines of `text` (ignoring comments) missing from the result, and result
    /// lines missing from `text`.
    pub fn compare_golden(&self, text: &str) -> GoldenDiff {
        let stored: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        let ours: Vec<String> = self.entries.iter().map(ClassifiedGraph::golden_line).collect();
        GoldenDiff {
            only_in_golden: stored.iter().filter(|l| !ours.iter().any(|o| o == *l)).map(|l| l.to_string()).collect(),
            only_in_result: ours.iter().filter(|o| !stored.contains(&o.as_str())).cloned().collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoldenDiff {
    pub only_in_golden: Vec<String>,
    pub only_in_result: Vec<String>,
}

impl GoldenDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_golden.is_empty() && self.only_in_result.is_empty()
    }
}

/// One-dimensional loop-free complexes on at most `max_n` vertices with
/// `T² = 0`, one per isomorphism class, ordered by (n, #edges, edge list).
pub fn classify_1d(max_n: usize) -> Result<ClassificationResult, GraphError> {
    if max_n > MAX_CLASSIFY_VERTICES {
        return Err(GraphError::TooLarge { n: max_n, max: MAX_CLASSIFY_VERTICES });
    }
    let mut entries = Vec::new();
    for n in 2..=max_n {
        let graphs: Vec<SimplicialComplex> = enumerate_graphs(n)?.into_iter().skip(1).flatten().collect();
        let found: Vec<ClassifiedGraph> = graphs
            .par_iter()
            .filter_map(|c| {
                let g = Graph1D::new(c.clone()).expect("at least one edge, no loops");
                unobstructed_1d(&g).then(|| ClassifiedGraph {
                    n,
                    edges: g.edges(),
                    is_matroid: is_matroid(c),
                    canonical: c.canonical_form().expect("small"),
                })
            })
            .collect();
        entries.extend(found);
    }
    entries.sort_by(|a, b| (a.n, a.edges.len(), &a.edges).cmp(&(b.n, b.edges.len(), &b.edges)));
    Ok(ClassificationResult { max_n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph1D {
        Graph1D::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph1D {
        Graph1D::new(SimplicialComplex::cycle(n)).unwrap()
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert!(matches!(Graph1D::new(SimplicialComplex::points(3)), Err(GraphError::Dimension(Some(0)))));
        let with_loop = SimplicialComplex::from_facet_lists(3, &[[0, 1]]).unwrap();
        assert_eq!(Graph1D::new(with_loop), Err(GraphError::Loop(2)));
        assert!(Graph1D::new(SimplicialComplex::full_simplex(3)).is_err());
    }

    #[test]
    fn condition_i_examples() {
        assert!(!condition_i(&g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])));
        assert!(condition_i(&cycle(5)));
        assert!(condition_i(&g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])));
    }

    #[test]
    fn condition_ii_examples() {
        assert!(!condition_ii(&g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])));
        assert!(condition_ii(&cycle(3)));
        assert!(condition_ii(&cycle(7)));
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 6));
        // the leaf's neighbourhood meets the hexagon, so (ii) holds; (iii) fails
        let hexagon_with_leaf = g(7, &edges);
        assert!(condition_ii(&hexagon_with_leaf));
        assert!(!condition_iii(&hexagon_with_leaf));
    }

    #[test]
    fn condition_iii_examples() {
        assert!(condition_iii(&Graph1D::new(SimplicialComplex::path(4)).unwrap()));
        assert!(!condition_iii(&g(4, &[(0, 1), (2, 3)])));
        assert!(condition_iii(&g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])));
    }

    #[test]
    fn trees_and_leaves() {
        assert!(unobstructed_1d(&Graph1D::new(SimplicialComplex::path(4)).unwrap()));
        assert!(unobstructed_1d(&g(4, &[(0, 1), (0, 2), (0, 3)])));
        assert!(!unobstructed_1d(&Graph1D::new(SimplicialComplex::path(5)).unwrap()));
        assert!(unobstructed_1d(&g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])));
    }

    #[test]
    fn chordless_cycle_examples() {
        assert_eq!(chordless_cycles(&cycle(4)), vec![vec![0, 1, 2, 3]]);
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let cycles = chordless_cycles(&k4);
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
        assert_eq!(max_chordless_len(&cycle(7)), 7);
        assert_eq!(max_chordless_len(&Graph1D::new(SimplicialComplex::path(4)).unwrap()), 0);
        // a square with one diagonal splits into two triangles
        let diag = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(chordless_cycles(&diag), vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).unwrap().iter().map(Vec::len).sum()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn golden_roundtrip() {
        let result = classify_1d(5).unwrap();
        let text = result.golden_text();
        assert!(result.compare_golden(&text).is_empty());
        let diff = result.compare_golden("# nothing\n2 1 matroid 0-1\n");
        assert_eq!(diff.only_in_golden.len(), 0);
        assert_eq!(diff.only_in_result.len(), result.count() - 1);
        assert!(classify_1d(9).is_err());
    }
}
