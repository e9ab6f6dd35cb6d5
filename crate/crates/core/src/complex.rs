//! Abstract simplicial complexes on a ground set `{0, .., n-1}`.
//!
//! A complex is stored by its facets. The void complex (no faces at all) is
//! the complex with an empty facet list; the irrelevant complex `{∅}` has the
//! single facet `∅`. Ground-set elements that lie in no facet are loops.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod canonical;

pub use canonical::CanonicalForm;

/// Largest supported ground set. A [`VertexSet`] is one machine word.
pub const MAX_VERTICES: usize = 63;

/// Largest ground set accepted by [`SimplicialComplex::canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("ground set of size {0} exceeds the supported maximum of 63")]
    GroundSetTooLarge(usize),
    #[error("vertex {vertex} is outside the ground set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("operation is undefined on the void complex")]
    Void,
    #[error("operation requires a complex of dimension at most one")]
    DimensionTooLarge,
    #[error("vertex {0} is a loop")]
    Loop(usize),
    #[error("canonical labelling is limited to ground sets of size at most 10, got {0}")]
    CanonicalBound(usize),
    #[error("invalid complex JSON: {0}")]
    Json(String),
}

/// A subset of `{0, .., 62}` stored as a bit mask.
///
/// The total order is by cardinality first, then lexicographic on the sorted
/// element lists, so `{2} < {0,1} < {0,2} < {1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        assert!(bits >> MAX_VERTICES == 0, "vertex index 63 is out of range");
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex index {v} is out of range");
        VertexSet(1 << v)
    }

    /// `{0, .., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "ground set {n} is out of range");
        VertexSet(if n == 0 { 0 } else { u64::MAX >> (64 - n) })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        self.union(Self::singleton(v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets, including `∅` and the set itself, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(mask);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & mask) };
            Some(VertexSet(cur))
        })
    }

    /// Shifts every element up by `k`.
    pub fn shift(self, k: usize) -> Self {
        if self.0 == 0 {
            return self;
        }
        Self::from_bits(self.0 << k)
    }

    /// Shifts every element down by `k`; elements below `k` must be absent.
    pub fn shift_down(self, k: usize) -> Self {
        assert!(k >= 64 || self.0 & ((1u64 << k) - 1) == 0, "elements below the shift");
        if k >= 64 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 >> k)
        }
    }

    /// Image under the vertex map `v -> perm[v]`.
    pub fn map(self, perm: &[usize]) -> Self {
        self.iter().map(|v| perm[v]).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                std::cmp::Ordering::Equal
            } else if self.0 >> diff.trailing_zeros() & 1 == 1 {
                // equal cardinality: whoever owns the lowest differing element is smaller
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Keeps the inclusion-maximal members of `sets`, sorted and deduplicated.
fn maximal_elements(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.cmp(a));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // sorted by decreasing cardinality, so only earlier sets can contain s
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// A simplicial complex on the ground set `{0, .., n-1}`, given by its facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `generators`; non-maximal generators
    /// are dropped. An empty generator list gives the void complex.
    pub fn new(n: usize, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self, ComplexError> {
        if n > MAX_VERTICES {
            return Err(ComplexError::GroundSetTooLarge(n));
        }
        let ground = VertexSet::range(n);
        let mut sets = Vec::new();
        for g in generators {
            if let Some(v) = g.difference(ground).min_element() {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n });
            }
            sets.push(g);
        }
        Ok(SimplicialComplex { n, facets: maximal_elements(sets) })
    }

    pub fn from_facet_lists<L: AsRef<[usize]>>(n: usize, lists: &[L]) -> Result<Self, ComplexError> {
        let mut sets = Vec::with_capacity(lists.len());
        for list in lists {
            let mut s = VertexSet::EMPTY;
            for &v in list.as_ref() {
                if v >= n || v >= MAX_VERTICES {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, n });
                }
                s = s.with(v);
            }
            sets.push(s);
        }
        Self::new(n, sets)
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex { n, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `{0, .., n-1}`.
    pub fn full_simplex(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex { n, facets: vec![VertexSet::range(n)] }
    }

    /// `n` isolated points.
    pub fn points(n: usize) -> Self {
        Self::new(n, (0..n).map(VertexSet::singleton)).expect("in range")
    }

    /// All subsets of `{0, .., n-1}` of cardinality at most `r`.
    pub fn uniform(n: usize, r: usize) -> Self {
        assert!(r <= n && n <= MAX_VERTICES);
        let facets = VertexSet::range(n).subsets().filter(|s| s.len() == r).collect();
        SimplicialComplex { n, facets: maximal_elements(facets) }
    }

    /// The graph with the given edges; vertices not covered by an edge are
    /// isolated points, so the result has no loops.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Self, ComplexError> {
        let mut gens: Vec<VertexSet> = Vec::with_capacity(edges.len() + n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(ComplexError::VertexOutOfRange { vertex: w, n });
                }
            }
            gens.push(VertexSet::singleton(u).with(v));
        }
        gens.extend((0..n).map(VertexSet::singleton));
        Self::new(n, gens)
    }

    /// The cycle `0 - 1 - .. - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::graph(n, &edges).expect("in range")
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::graph(n, &edges).expect("in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in increasing (cardinality, lex) order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Elements of the ground set that are vertices (not loops).
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn loops(&self) -> VertexSet {
        VertexSet::range(self.n).difference(self.vertices())
    }

    pub fn is_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces in increasing (cardinality, lex) order.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<_> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// Faces of cardinality exactly `k`.
    pub fn faces_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut seen = HashSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= k) {
            seen.extend(f.subsets().filter(|s| s.len() == k));
        }
        let mut faces: Vec<_> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    fn check_in_range(&self, set: VertexSet) -> Result<(), ComplexError> {
        match set.difference(VertexSet::range(self.n)).min_element() {
            Some(v) => Err(ComplexError::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    fn require_face(&self, face: VertexSet) -> Result<(), ComplexError> {
        self.check_in_range(face)?;
        if self.is_face(face) {
            Ok(())
        } else {
            Err(ComplexError::NotAFace(face))
        }
    }

    /// `link F = {A : A ∩ F = ∅, A ∪ F ∈ Δ}` on the same ground set.
    pub fn link(&self, face: VertexSet) -> Result<Self, ComplexError> {
        self.require_face(face)?;
        let facets = self.facets.iter().filter(|g| face.is_subset(**g)).map(|g| g.difference(face)).collect();
        Ok(SimplicialComplex { n: self.n, facets: maximal_elements(facets) })
    }

    /// `star F = {G : G ∪ F ∈ Δ}`.
    pub fn star(&self, face: VertexSet) -> Result<Self, ComplexError> {
        self.require_face(face)?;
        let facets = self.facets.iter().copied().filter(|g| face.is_subset(*g)).collect();
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Faces contained in `w`.
    pub fn restriction(&self, w: VertexSet) -> Self {
        let facets = self.facets.iter().map(|g| g.intersection(w)).collect();
        SimplicialComplex { n: self.n, facets: maximal_elements(facets) }
    }

    /// Faces disjoint from `w`.
    pub fn deletion(&self, w: VertexSet) -> Self {
        self.restriction(VertexSet::range(self.n).difference(w))
    }

    /// The join, with `other`'s ground set shifted past this one.
    pub fn join(&self, other: &Self) -> Result<Self, ComplexError> {
        if self.is_void() || other.is_void() {
            return Err(ComplexError::Void);
        }
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(ComplexError::GroundSetTooLarge(n));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(g.shift(self.n)));
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { n, facets })
    }

    /// Inclusion-minimal nonfaces, in (cardinality, lex) order. Loops appear
    /// as singletons.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::Void);
        }
        let mut out: Vec<VertexSet> = self.loops().iter().map(VertexSet::singleton).collect();
        let verts = self.vertices();
        let mut seen = HashSet::new();
        // every minimal nonface C with #C >= 2 is F ∪ {v} for the face F = C \ {v}
        for face in self.faces() {
            for v in verts.difference(face).iter() {
                let cand = face.with(v);
                if !seen.insert(cand) || self.is_face(cand) {
                    continue;
                }
                if cand.iter().all(|w| self.is_face(cand.without(w))) {
                    out.push(cand);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The relabelled complex with vertex `v` sent to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must match the ground set");
        let facets = self.facets.iter().map(|f| f.map(perm)).collect();
        SimplicialComplex { n: self.n, facets: maximal_elements(facets) }
    }

    /// Same complex on a ground set of size `n >= self.n()`.
    pub fn with_ground_set(&self, n: usize) -> Result<Self, ComplexError> {
        if n < self.n {
            if let Some(v) = self.vertices().difference(VertexSet::range(n)).min_element() {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n });
            }
        }
        Self::new(n, self.facets.iter().copied())
    }

    fn require_graph(&self) -> Result<(), ComplexError> {
        match self.dim() {
            Some(d) if d > 1 => Err(ComplexError::DimensionTooLarge),
            _ => Ok(()),
        }
    }

    /// Closed neighbourhood `ν(v) = {v} ∪ {w : {v,w} ∈ Δ}` of a non-loop vertex.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, ComplexError> {
        self.require_graph()?;
        if v >= self.n {
            return Err(ComplexError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if !self.vertices().contains(v) {
            return Err(ComplexError::Loop(v));
        }
        Ok(self.facets.iter().filter(|f| f.contains(v)).fold(VertexSet::singleton(v), |acc, f| acc.union(*f)))
    }

    /// `ν(M)`, the union of the neighbourhoods of the elements of `m`.
    pub fn nbhd_of_set(&self, m: VertexSet) -> Result<VertexSet, ComplexError> {
        m.iter().try_fold(VertexSet::EMPTY, |acc, v| Ok(acc.union(self.neighborhood(v)?)))
    }

    /// `b̂ = b ∪ ⋂_{v ∈ b} ν(v)`.
    pub fn b_hat(&self, b: VertexSet) -> Result<VertexSet, ComplexError> {
        let mut common: Option<VertexSet> = None;
        for v in b.iter() {
            let nv = self.neighborhood(v)?;
            common = Some(common.map_or(nv, |c| c.intersection(nv)));
        }
        Ok(b.union(common.unwrap_or(VertexSet::EMPTY)))
    }

    /// Number of edges containing `v`.
    pub fn local_degree(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.len() == 2 && f.contains(v)).count()
    }

    /// Vertex sets of the connected components of the 1-skeleton, ordered by
    /// smallest element. Loops are not vertices and belong to no component.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.facets.clone();
        let mut comps: Vec<VertexSet> = Vec::new();
        while let Some(seed) = remaining.pop() {
            let mut comp = seed;
            loop {
                let before = remaining.len();
                remaining.retain(|f| {
                    if f.is_disjoint(comp) {
                        true
                    } else {
                        comp = comp.union(*f);
                        false
                    }
                });
                if remaining.len() == before {
                    break;
                }
            }
            if !comp.is_empty() {
                comps.push(comp);
            }
        }
        comps.sort_unstable_by_key(|c| c.min_element());
        comps
    }

    /// Void, `{∅}` and single-vertex complexes count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Canonical isomorphism label; see [`CanonicalForm`].
    pub fn canonical_form(&self) -> Result<CanonicalForm, ComplexError> {
        Ok(self.canonical_labeling()?.0)
    }

    /// Canonical label together with a relabelling `perm` such that
    /// `self.relabel(&perm)` is the canonical representative.
    pub fn canonical_labeling(&self) -> Result<(CanonicalForm, Vec<usize>), ComplexError> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(ComplexError::CanonicalBound(self.n));
        }
        Ok(canonical::canonical_labeling(self.n, &self.facets))
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { n: self.n, facets: self.facets.iter().map(|f| f.iter().collect()).collect() }
    }

    pub fn from_json_str(text: &str) -> Result<Self, ComplexError> {
        let raw: ComplexJson = serde_json::from_str(text).map_err(|e| ComplexError::Json(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("])")
    }
}

/// Wire format `{"n": 4, "facets": [[0,1],[1,2,3]]}` with 0-based indices.
/// `"facets": []` is the void complex and `"facets": [[]]` is `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = ComplexError;

    fn try_from(raw: ComplexJson) -> Result<Self, Self::Error> {
        if raw.n > MAX_VERTICES {
            return Err(ComplexError::GroundSetTooLarge(raw.n));
        }
        SimplicialComplex::from_facet_lists(raw.n, &raw.facets)
    }
}
