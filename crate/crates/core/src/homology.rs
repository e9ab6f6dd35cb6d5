//! Cohomology in degrees 0 and 1 of the spaces `⟨Γ⟩` and of pairs of them.
//!
//! A face collection `Γ` is modelled by its order complex: one vertex per
//! nonempty member, one simplex per chain under inclusion. If `∅ ∈ Γ` an
//! apex vertex is added and coned over everything, which is exactly the
//! order complex with `∅` as bottom element. Only the 2-skeleton is kept,
//! since `H⁰` and `H¹` need coboundaries up to degree two.
//!
//! Vertices of an order complex are ordered by (cardinality, lex) of the
//! underlying face with the apex last; simplices are oriented by that order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::linalg::SparseMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not a prime below 65536")]
    InvalidPrime(u64),
    #[error("unknown field `{0}` (expected q, gf2 or gf<p>)")]
    UnknownField(String),
    #[error("the subcomplex is not contained in the total complex")]
    NotASubcomplex,
    #[error("simplex list is not closed under taking faces")]
    NotClosed,
}

/// Coefficient field for all rank computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldChoice {
    #[default]
    Rationals,
    PrimeField(u32),
}

impl FieldChoice {
    pub fn prime(p: u64) -> Result<Self, HomologyError> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if p < 1 << 16 && is_prime {
            Ok(FieldChoice::PrimeField(p as u32))
        } else {
            Err(HomologyError::InvalidPrime(p))
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => f.write_str("Q"),
            FieldChoice::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Parses `q`, `gf2`, `gf3`, ... (case-insensitive).
impl FromStr for FieldChoice {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldChoice::Rationals);
        }
        match lower.strip_prefix("gf").map(str::parse::<u64>) {
            Some(Ok(p)) => FieldChoice::prime(p),
            _ => Err(HomologyError::UnknownField(s.to_string())),
        }
    }
}

/// A finite collection of faces ordered by inclusion, not necessarily closed
/// under taking subsets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FacePoset {
    elements: Vec<VertexSet>,
    contains_empty: bool,
}

impl FacePoset {
    pub fn new(faces: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut elements: Vec<VertexSet> = faces.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        let contains_empty = elements.first().is_some_and(|f| f.is_empty());
        if contains_empty {
            elements.remove(0);
        }
        FacePoset { elements, contains_empty }
    }

    /// The nonempty members in (cardinality, lex) order.
    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn contains_empty(&self) -> bool {
        self.contains_empty
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        if face.is_empty() {
            self.contains_empty
        } else {
            self.elements.binary_search(&face).is_ok()
        }
    }

    /// Number of members, counting `∅`.
    pub fn len(&self) -> usize {
        self.elements.len() + self.contains_empty as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All members (with `∅` first when present).
    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.contains_empty.then_some(VertexSet::EMPTY).into_iter().chain(self.elements.iter().copied())
    }

    /// Number of path components of `⟨Γ⟩` (comparability components, or one
    /// if `∅ ∈ Γ`), computed without linear algebra.
    pub fn component_count(&self) -> usize {
        if self.contains_empty {
            return 1;
        }
        let k = self.elements.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = k;
        for j in 0..k {
            for i in 0..j {
                if self.elements[i].is_subset(self.elements[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                        comps -= 1;
                    }
                }
            }
        }
        comps
    }
}

/// An abstract simplicial complex on vertex ids `u32`, truncated to its
/// 2-skeleton. Each simplex is stored as an increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Skeleton {
    vertices: Vec<u32>,
    edges: Vec<[u32; 2]>,
    triangles: Vec<[u32; 3]>,
}

impl Skeleton {
    /// Validates that the lists are sorted, deduplicated and closed under faces.
    pub fn new(
        mut vertices: Vec<u32>,
        mut edges: Vec<[u32; 2]>,
        mut triangles: Vec<[u32; 3]>,
    ) -> Result<Self, HomologyError> {
        for e in &mut edges {
            e.sort_unstable();
        }
        for t in &mut triangles {
            t.sort_unstable();
        }
        vertices.sort_unstable();
        vertices.dedup();
        edges.sort_unstable();
        edges.dedup();
        triangles.sort_unstable();
        triangles.dedup();
        let sk = Skeleton { vertices, edges, triangles };
        let closed = sk.edges.iter().all(|e| e[0] != e[1] && e.iter().all(|v| sk.vertices.binary_search(v).is_ok()))
            && sk.triangles.iter().all(|t| {
                t[0] != t[1] && t[1] != t[2] && triangle_faces(t).iter().all(|e| sk.edges.binary_search(e).is_ok())
            });
        if closed {
            Ok(sk)
        } else {
            Err(HomologyError::NotClosed)
        }
    }

    /// The 2-skeleton of a complex; vertex ids are ground-set indices.
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let to_list = |s: VertexSet| s.iter().map(|v| v as u32).collect::<Vec<u32>>();
        let vertices = c.faces_of_size(1).into_iter().map(|s| s.min_element().unwrap() as u32).collect();
        let edges = c.faces_of_size(2).into_iter().map(|s| {
            let l = to_list(s);
            [l[0], l[1]]
        });
        let triangles = c.faces_of_size(3).into_iter().map(|s| {
            let l = to_list(s);
            [l[0], l[1], l[2]]
        });
        Skeleton::new(vertices, edges.collect(), triangles.collect()).expect("faces of a complex are closed")
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[u32; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    /// No vertices, so the realization is the empty space.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Full subcomplex on the vertices for which `keep` holds.
    pub fn induced(&self, keep: impl Fn(u32) -> bool) -> Self {
        Skeleton {
            vertices: self.vertices.iter().copied().filter(|v| keep(*v)).collect(),
            edges: self.edges.iter().copied().filter(|e| e.iter().all(|v| keep(*v))).collect(),
            triangles: self.triangles.iter().copied().filter(|t| t.iter().all(|v| keep(*v))).collect(),
        }
    }

    fn contains_all(&self, other: &Skeleton) -> bool {
        other.vertices.iter().all(|v| self.vertices.binary_search(v).is_ok())
            && other.edges.iter().all(|e| self.edges.binary_search(e).is_ok())
            && other.triangles.iter().all(|t| self.triangles.binary_search(t).is_ok())
    }
}

fn triangle_faces(t: &[u32; 3]) -> [[u32; 2]; 3] {
    // ∂[a,b,c] = [b,c] - [a,c] + [a,b]
    [[t[1], t[2]], [t[0], t[2]], [t[0], t[1]]]
}

/// Order complex of `Γ`: vertex `i` is `Γ.elements()[i]`, the apex (if
/// `∅ ∈ Γ`) is vertex `Γ.elements().len()`. `Γ = ∅` gives the empty skeleton.
pub fn order_complex(gamma: &FacePoset) -> Skeleton {
    let elems = gamma.elements();
    let k = elems.len() as u32;
    let mut vertices: Vec<u32> = (0..k).collect();
    let mut edges = Vec::new();
    // strict inclusion forces strictly larger cardinality, hence larger index
    let above: Vec<Vec<u32>> = (0..elems.len())
        .map(|i| {
            ((i + 1)..elems.len())
                .filter(|&j| elems[i].len() < elems[j].len() && elems[i].is_subset(elems[j]))
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    for (i, ups) in above.iter().enumerate() {
        for &j in ups {
            edges.push([i as u32, j]);
        }
    }
    let mut triangles = Vec::new();
    for (i, ups) in above.iter().enumerate() {
        for &j in ups {
            for &l in &above[j as usize] {
                triangles.push([i as u32, j, l]);
            }
        }
    }
    if gamma.contains_empty() {
        let apex = k;
        vertices.push(apex);
        let chain_edges = edges.clone();
        edges.extend((0..k).map(|i| [i, apex]));
        triangles.extend(chain_edges.iter().map(|e| [e[0], e[1], apex]));
    }
    edges.sort_unstable();
    triangles.sort_unstable();
    Skeleton { vertices, edges, triangles }
}

/// A skeleton with a distinguished subcomplex on the same vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPair {
    total: Skeleton,
    sub: Skeleton,
}

impl SimplicialPair {
    pub fn new(total: Skeleton, sub: Skeleton) -> Result<Self, HomologyError> {
        if total.contains_all(&sub) {
            Ok(SimplicialPair { total, sub })
        } else {
            Err(HomologyError::NotASubcomplex)
        }
    }

    /// `(order complex of big, order complex of small)` for `small ⊆ big`,
    /// the latter realized as an induced subcomplex of the former.
    pub fn from_posets(big: &FacePoset, small: &FacePoset) -> Result<Self, HomologyError> {
        if !small.iter().all(|f| big.contains(f)) {
            return Err(HomologyError::NotASubcomplex);
        }
        let total = order_complex(big);
        let apex = big.elements().len() as u32;
        let keep: Vec<bool> = big.elements().iter().map(|f| small.contains(*f)).collect();
        let sub = total.induced(|v| if v == apex { small.contains_empty() } else { keep[v as usize] });
        Ok(SimplicialPair { total, sub })
    }

    pub fn total(&self) -> &Skeleton {
        &self.total
    }

    pub fn sub(&self) -> &Skeleton {
        &self.sub
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub h0: usize,
    pub h1: usize,
    pub reduced: bool,
}

/// Ranks of the restriction maps `H⁰(total) → H⁰(sub)` and `H¹(total) → H¹(sub)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InducedRanks {
    pub h0: usize,
    pub h1: usize,
}

/// Positions of the simplices of one dimension, optionally skipping those of
/// a subcomplex.
struct Index<K> {
    pos: HashMap<K, usize>,
}

impl<K: std::hash::Hash + Eq + Copy> Index<K> {
    fn new(all: &[K], skip: &[K]) -> Self
    where
        K: Ord,
    {
        let pos = all.iter().filter(|s| skip.binary_search(s).is_err()).enumerate().map(|(i, s)| (*s, i)).collect();
        Index { pos }
    }

    fn len(&self) -> usize {
        self.pos.len()
    }

    fn get(&self, k: &K) -> Option<usize> {
        self.pos.get(k).copied()
    }
}

/// Rows for `δ⁰` restricted to the simplices indexed by `vidx`/`eidx`.
fn push_delta0(m: &mut SparseMatrix, edges: &[[u32; 2]], vidx: &Index<u32>, eidx: &Index<[u32; 2]>, col_offset: usize) {
    for e in edges {
        if eidx.get(e).is_none() {
            continue;
        }
        let entries =
            [(e[1], 1), (e[0], -1)].into_iter().filter_map(|(v, sign)| vidx.get(&v).map(|c| (c + col_offset, sign)));
        m.push_row(entries);
    }
}

fn push_delta1(m: &mut SparseMatrix, triangles: &[[u32; 3]], eidx: &Index<[u32; 2]>, tidx: &Index<[u32; 3]>) {
    for t in triangles {
        if tidx.get(t).is_none() {
            continue;
        }
        let entries =
            triangle_faces(t).into_iter().zip([1i64, -1, 1]).filter_map(|(e, sign)| eidx.get(&e).map(|c| (c, sign)));
        m.push_row(entries);
    }
}

/// `H⁰` and `H¹` of the relative cochain complex (cochains on `total`
/// vanishing on `sub`). Reduced and unreduced agree unless `sub` is empty,
/// in which case the reduced `h0` drops by one for a nonempty `total`.
pub fn relative_cohomology_dims(pair: &SimplicialPair, field: FieldChoice, reduced: bool) -> CohomologyDims {
    let (x, a) = (&pair.total, &pair.sub);
    let vidx = Index::new(&x.vertices, &a.vertices);
    let eidx = Index::new(&x.edges, &a.edges);
    let tidx = Index::new(&x.triangles, &a.triangles);

    let mut d0 = SparseMatrix::new(vidx.len());
    push_delta0(&mut d0, &x.edges, &vidx, &eidx, 0);
    let mut d1 = SparseMatrix::new(eidx.len());
    push_delta1(&mut d1, &x.triangles, &eidx, &tidx);

    let r0 = d0.rank(field);
    let r1 = d1.rank(field);
    let mut h0 = vidx.len() - r0;
    let h1 = eidx.len() - r1 - r0;
    if reduced && a.is_empty() && !x.is_empty() {
        h0 -= 1;
    }
    CohomologyDims { h0, h1, reduced }
}

/// Absolute cohomology of a skeleton.
pub fn cohomology_dims(x: &Skeleton, field: FieldChoice, reduced: bool) -> CohomologyDims {
    let pair = SimplicialPair { total: x.clone(), sub: Skeleton::default() };
    relative_cohomology_dims(&pair, field, reduced)
}

/// Absolute cohomology of a simplicial complex (through its 2-skeleton).
pub fn complex_cohomology_dims(c: &SimplicialComplex, field: FieldChoice, reduced: bool) -> CohomologyDims {
    cohomology_dims(&Skeleton::from_complex(c), field, reduced)
}

/// Ranks of the restriction maps on cohomology.
///
/// With `R` the restriction of cochains and `D = δ^{k-1}` of the subcomplex,
/// the rank of `H^k(X) → H^k(A)` equals
/// `rank [[δ^k_X, 0], [R, D]] - rank D - rank δ^k_X`, so only ranks of
/// explicit matrices are needed.
pub fn induced_h_maps(pair: &SimplicialPair, field: FieldChoice) -> InducedRanks {
    let (x, a) = (&pair.total, &pair.sub);
    let none_v: &[u32] = &[];
    let none_e: &[[u32; 2]] = &[];
    let none_t: &[[u32; 3]] = &[];
    let xv = Index::new(&x.vertices, none_v);
    let xe = Index::new(&x.edges, none_e);
    let xt = Index::new(&x.triangles, none_t);
    let av = Index::new(&a.vertices, none_v);
    let ae = Index::new(&a.edges, none_e);

    // degree 0
    let mut dx0 = SparseMatrix::new(xv.len());
    push_delta0(&mut dx0, &x.edges, &xv, &xe, 0);
    let rank_dx0 = dx0.rank(field);
    let mut m0 = dx0.clone();
    for v in &a.vertices {
        m0.push_row([(xv.get(v).expect("sub vertex in total"), 1)]);
    }
    let h0 = m0.rank(field) - rank_dx0;

    // degree 1: columns are edges of X then vertices of A
    let mut dx1 = SparseMatrix::new(xe.len());
    push_delta1(&mut dx1, &x.triangles, &xe, &xt);
    let rank_dx1 = dx1.rank(field);
    let mut da0 = SparseMatrix::new(av.len());
    push_delta0(&mut da0, &a.edges, &av, &ae, 0);
    let rank_da0 = da0.rank(field);
    let mut m1 = SparseMatrix::new(xe.len() + av.len());
    push_delta1(&mut m1, &x.triangles, &xe, &xt);
    for e in &a.edges {
        let mut row = vec![(xe.get(e).expect("sub edge in total"), 1i64)];
        row.extend([(e[1], 1i64), (e[0], -1)].into_iter().map(|(v, s)| (xe.len() + av.get(&v).expect("closed"), s)));
        m1.push_row(row);
    }
    let h1 = m1.rank(field) - rank_da0 - rank_dx1;
    InducedRanks { h0, h1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIELDS: [FieldChoice; 3] = [FieldChoice::Rationals, FieldChoice::PrimeField(2), FieldChoice::PrimeField(3)];

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Rationals);
        assert_eq!("GF2".parse::<FieldChoice>().unwrap(), FieldChoice::PrimeField(2));
        assert_eq!("gf65521".parse::<FieldChoice>().unwrap(), FieldChoice::PrimeField(65521));
        assert_eq!("gf4".parse::<FieldChoice>(), Err(HomologyError::InvalidPrime(4)));
        assert_eq!("gf65537".parse::<FieldChoice>(), Err(HomologyError::InvalidPrime(65537)));
        assert!("r".parse::<FieldChoice>().is_err());
        assert_eq!(FieldChoice::PrimeField(3).to_string(), "GF(3)");
    }

    #[test]
    fn order_complex_of_irrelevant_poset_is_a_point() {
        let oc = order_complex(&FacePoset::new([VertexSet::EMPTY]));
        assert_eq!(oc.vertices(), &[0]);
        assert!(oc.edges().is_empty());
        assert!(order_complex(&FacePoset::default()).is_empty());
    }

    #[test]
    fn order_complex_of_edge_poset_is_a_path() {
        let gamma = FacePoset::new([vs(&[0]), vs(&[1]), vs(&[0, 1])]);
        let oc = order_complex(&gamma);
        // vertices: {0}=0, {1}=1, {0,1}=2
        assert_eq!(oc.vertices(), &[0, 1, 2]);
        assert_eq!(oc.edges(), &[[0, 2], [1, 2]]);
        assert!(oc.triangles().is_empty());
    }

    #[test]
    fn order_complex_with_empty_is_a_cone() {
        let gamma = FacePoset::new([VertexSet::EMPTY, vs(&[0]), vs(&[0, 1])]);
        let oc = order_complex(&gamma);
        assert_eq!(oc.vertices().len(), gamma.len());
        assert_eq!(oc.edges(), &[[0, 1], [0, 2], [1, 2]]);
        assert_eq!(oc.triangles(), &[[0, 1, 2]]);
    }

    #[test]
    fn uniform_nb_order_complex_shape() {
        // N_b(U^3_6) with #b = 2: the 2- and 3-subsets of a 4-set
        let rest = vs(&[0, 1, 2, 3]);
        let gamma = FacePoset::new(rest.subsets().filter(|s| s.len() == 2 || s.len() == 3));
        let oc = order_complex(&gamma);
        assert_eq!(oc.vertices().len(), binom(4, 2) + binom(4, 3));
        assert_eq!(oc.edges().len(), 3 * binom(4, 3));
        assert!(oc.triangles().is_empty());
        for f in FIELDS {
            let d = cohomology_dims(&oc, f, false);
            assert_eq!(d.h0, 1);
            // r*C(n-2,r) - (C(n-2,r) + C(n-2,r-1)) + 1 at n=6, r=3
            assert_eq!(d.h1, 3 * binom(4, 3) + 1 - binom(4, 3) - binom(4, 2));
            assert_eq!(d.h1, 3);
        }
    }

    #[test]
    fn cohomology_of_basic_spaces() {
        for f in FIELDS {
            let circle = complex_cohomology_dims(&SimplicialComplex::cycle(5), f, false);
            assert_eq!((circle.h0, circle.h1), (1, 1));
            let pts = complex_cohomology_dims(&SimplicialComplex::points(3), f, true);
            assert_eq!((pts.h0, pts.h1), (2, 0));
            let disk = complex_cohomology_dims(&SimplicialComplex::full_simplex(3), f, false);
            assert_eq!((disk.h0, disk.h1), (1, 0));
            let sphere = complex_cohomology_dims(&SimplicialComplex::uniform(4, 3), f, false);
            assert_eq!((sphere.h0, sphere.h1), (1, 0));
            for reduced in [false, true] {
                let void = complex_cohomology_dims(&SimplicialComplex::void(3), f, reduced);
                assert_eq!((void.h0, void.h1), (0, 0));
            }
        }
    }

    #[test]
    fn real_projective_plane_depends_on_field() {
        // 6-vertex triangulation of RP^2: H^1 is Z/2-torsion
        let faces: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [1, 3, 5],
            [2, 4, 5],
        ];
        let rp2 = SimplicialComplex::from_facet_lists(6, &faces).unwrap();
        let q = complex_cohomology_dims(&rp2, FieldChoice::Rationals, false);
        let gf2 = complex_cohomology_dims(&rp2, FieldChoice::PrimeField(2), false);
        assert_eq!((q.h0, q.h1), (1, 0));
        assert_eq!((gf2.h0, gf2.h1), (1, 1));
    }

    #[test]
    fn relative_cohomology_examples() {
        let tri = Skeleton::from_complex(&SimplicialComplex::cycle(3));
        let same = SimplicialPair::new(tri.clone(), tri.clone()).unwrap();
        for f in FIELDS {
            let d = relative_cohomology_dims(&same, f, false);
            assert_eq!((d.h0, d.h1), (0, 0));
        }
        let point = order_complex(&FacePoset::new([VertexSet::EMPTY]));
        let pair = SimplicialPair::new(point, Skeleton::default()).unwrap();
        let d = relative_cohomology_dims(&pair, FieldChoice::Rationals, false);
        assert_eq!((d.h0, d.h1), (1, 0));
        let d = relative_cohomology_dims(&pair, FieldChoice::Rationals, true);
        assert_eq!((d.h0, d.h1), (0, 0));
    }

    #[test]
    fn relative_pair_of_five_points() {
        // N_b and Ñ_b for five isolated points and b = {0,1}
        let n = FacePoset::new([VertexSet::EMPTY, vs(&[2]), vs(&[3]), vs(&[4])]);
        let nt = FacePoset::new([vs(&[2]), vs(&[3]), vs(&[4])]);
        let pair = SimplicialPair::from_posets(&n, &nt).unwrap();
        for f in FIELDS {
            let d = relative_cohomology_dims(&pair, f, false);
            assert_eq!((d.h0, d.h1), (0, 2));
        }
    }

    #[test]
    fn non_subcomplex_is_rejected() {
        let a = Skeleton::from_complex(&SimplicialComplex::path(3));
        let b = Skeleton::from_complex(&SimplicialComplex::cycle(3));
        assert_eq!(SimplicialPair::new(a, b), Err(HomologyError::NotASubcomplex));
        let big = FacePoset::new([vs(&[0])]);
        let small = FacePoset::new([vs(&[1])]);
        assert!(SimplicialPair::from_posets(&big, &small).is_err());
        assert_eq!(Skeleton::new(vec![0], vec![[0, 1]], vec![]), Err(HomologyError::NotClosed));
    }

    #[test]
    fn induced_map_ranks() {
        let path = Skeleton::from_complex(&SimplicialComplex::path(3));
        let empty = SimplicialPair::new(path.clone(), Skeleton::default()).unwrap();
        assert_eq!(induced_h_maps(&empty, FieldChoice::Rationals), InducedRanks { h0: 0, h1: 0 });
        let edge = path.induced(|v| v < 2);
        let pair = SimplicialPair::new(path, edge).unwrap();
        assert_eq!(induced_h_maps(&pair, FieldChoice::Rationals).h0, 1);

        // circle restricted to itself: identity on H^1
        let c = Skeleton::from_complex(&SimplicialComplex::cycle(4));
        let pair = SimplicialPair::new(c.clone(), c.clone()).unwrap();
        assert_eq!(induced_h_maps(&pair, FieldChoice::Rationals), InducedRanks { h0: 1, h1: 1 });
        // circle restricted to an arc: zero on H^1
        let arc = c.induced(|v| v != 3);
        let pair = SimplicialPair::new(c, arc).unwrap();
        assert_eq!(induced_h_maps(&pair, FieldChoice::PrimeField(2)), InducedRanks { h0: 1, h1: 0 });
    }

    #[test]
    fn component_count_matches_h0() {
        let gamma = FacePoset::new([vs(&[0]), vs(&[1]), vs(&[0, 1]), vs(&[3]), vs(&[2, 4])]);
        assert_eq!(gamma.component_count(), 3);
        let d = cohomology_dims(&order_complex(&gamma), FieldChoice::Rationals, false);
        assert_eq!(d.h0, 3);
    }
}
