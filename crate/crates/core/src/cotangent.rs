//! Dimensions of the multigraded pieces of `T¹` and `T²` of a Stanley-Reisner
//! ring.
//!
//! A multidegree `c = a - b` (with `b` a 0/1 vector) is recorded by the class
//! `(A, b)` with `A = supp a`. Nonzero pieces need `b ≠ ∅`, `A ∈ Δ` and
//! `b ⊆ [link A]`, and then `T^i_{a-b}(Δ) = T^i_{-b}(link A)`. The latter is
//! the relative cohomology `H^{i-1}(⟨N_b⟩, ⟨Ñ_b⟩)`, reduced when `#b = 1`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex, VertexSet};
use crate::homology::{
    cohomology_dims, induced_h_maps, relative_cohomology_dims, FacePoset, FieldChoice, HomologyError, SimplicialPair,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotangentError {
    #[error("b must be nonempty")]
    EmptyB,
    #[error("the complex is void")]
    Void,
    #[error("the exact sequence check needs #b >= 2, got {0}")]
    SingletonB(VertexSet),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct TDims {
    pub t1: usize,
    pub t2: usize,
}

impl TDims {
    pub const ZERO: TDims = TDims { t1: 0, t2: 0 };
}

/// `N_b = {F ∈ Δ : F ∩ b = ∅, F ∪ b ∉ Δ}` and
/// `Ñ_b = {F ∈ N_b : F ∪ b' ∉ Δ for some b' ⊊ b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbPair {
    pub b: VertexSet,
    pub n: FacePoset,
    pub ntilde: FacePoset,
}

fn check_b(delta: &SimplicialComplex, b: VertexSet) -> Result<(), CotangentError> {
    if delta.is_void() {
        return Err(CotangentError::Void);
    }
    if b.is_empty() {
        return Err(CotangentError::EmptyB);
    }
    if let Some(v) = b.max_element().filter(|&v| v >= delta.n()) {
        return Err(ComplexError::VertexOutOfRange { vertex: v, n: delta.n() }.into());
    }
    Ok(())
}

pub fn build_nb_pair(delta: &SimplicialComplex, b: VertexSet) -> Result<NbPair, CotangentError> {
    check_b(delta, b)?;
    let mut n = Vec::new();
    let mut ntilde = Vec::new();
    for f in delta.deletion(b).faces() {
        if delta.is_face(f.union(b)) {
            continue;
        }
        n.push(f);
        // F ∪ b' ∉ Δ is monotone in b', so maximal proper subsets suffice
        if b.iter().any(|v| !delta.is_face(f.union(b.without(v)))) {
            ntilde.push(f);
        }
    }
    let pair = NbPair { b, n: FacePoset::new(n), ntilde: FacePoset::new(ntilde) };
    debug_assert_eq!(pair.n, n_via_star(delta, b), "N_b disagrees with the star description");
    Ok(pair)
}

/// `N_b` as the faces of `Δ ∖ b` outside `star b` (or all of them if `b ∉ Δ`).
fn n_via_star(delta: &SimplicialComplex, b: VertexSet) -> FacePoset {
    let del = delta.deletion(b).faces();
    match delta.star(b) {
        Ok(star) => FacePoset::new(del.into_iter().filter(|f| !star.is_face(*f))),
        Err(_) => FacePoset::new(del),
    }
}

/// Shortcuts that decide `T^i_{-b}` without building the pair of spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FastPath {
    /// `b = {i}` with `i` a loop: `⟨N_b⟩` is a cone.
    Loop,
    /// `b` is neither a face nor a minimal nonface: `N_b = Ñ_b`.
    NotFaceNotCircuit,
    /// `b` is a minimal nonface with `#b >= 2`: `⟨N_b⟩` is a cone, so
    /// `T²` is the reduced `H⁰` of `⟨Ñ_b⟩`.
    Circuit,
}

/// Which shortcut applies to `b`, if any.
pub fn fast_path(delta: &SimplicialComplex, b: VertexSet) -> Result<Option<FastPath>, CotangentError> {
    check_b(delta, b)?;
    if delta.is_face(b) {
        return Ok(None);
    }
    let proper_subsets_are_faces = b.iter().all(|v| delta.is_face(b.without(v)));
    Ok(Some(match (b.len(), proper_subsets_are_faces) {
        (1, _) => FastPath::Loop,
        (_, true) => FastPath::Circuit,
        (_, false) => FastPath::NotFaceNotCircuit,
    }))
}

/// The dimensions given by the applicable shortcut. The circuit case counts
/// components of `⟨Ñ_b⟩` directly rather than through linear algebra.
pub fn fast_path_dims(delta: &SimplicialComplex, b: VertexSet) -> Result<Option<(FastPath, TDims)>, CotangentError> {
    let Some(path) = fast_path(delta, b)? else {
        return Ok(None);
    };
    let dims = match path {
        FastPath::Loop | FastPath::NotFaceNotCircuit => TDims::ZERO,
        FastPath::Circuit => {
            let ntilde = build_nb_pair(delta, b)?.ntilde;
            let comps = ntilde.component_count();
            TDims { t1: (comps == 0) as usize, t2: comps.saturating_sub(1) }
        }
    };
    Ok(Some((path, dims)))
}

/// Relative cohomology of the pair of order complexes, with no shortcuts.
pub fn t_dims_negative_general(
    delta: &SimplicialComplex,
    b: VertexSet,
    field: FieldChoice,
) -> Result<TDims, CotangentError> {
    let pair = build_nb_pair(delta, b)?;
    let spaces = SimplicialPair::from_posets(&pair.n, &pair.ntilde)?;
    let h = relative_cohomology_dims(&spaces, field, b.len() == 1);
    Ok(TDims { t1: h.h0, t2: h.h1 })
}

/// `dim T¹_{-b}` and `dim T²_{-b}`, using a shortcut when one applies.
pub fn t_dims_negative(delta: &SimplicialComplex, b: VertexSet, field: FieldChoice) -> Result<TDims, CotangentError> {
    match fast_path_dims(delta, b)? {
        Some((_, dims)) => Ok(dims),
        None => t_dims_negative_general(delta, b, field),
    }
}

/// Dimensions in the class `(A, b)`; zero whenever the class is not one of
/// the admissible ones.
pub fn t_dims_multigraded(
    delta: &SimplicialComplex,
    a: VertexSet,
    b: VertexSet,
    field: FieldChoice,
) -> Result<TDims, CotangentError> {
    if delta.is_void() {
        return Err(CotangentError::Void);
    }
    if b.is_empty() || !delta.is_face(a) {
        return Ok(TDims::ZERO);
    }
    let link = delta.link(a)?;
    if !b.is_subset(link.vertices()) {
        return Ok(TDims::ZERO);
    }
    t_dims_negative(&link, b, field)
}

/// `T¹` and `T²` assembled from the long exact sequence
/// `0 → T¹ → H⁰⟨N⟩ → H⁰⟨Ñ⟩ → T² → H¹⟨N⟩ → H¹⟨Ñ⟩`.
pub fn les_cross_check(delta: &SimplicialComplex, b: VertexSet, field: FieldChoice) -> Result<TDims, CotangentError> {
    check_b(delta, b)?;
    if b.len() < 2 {
        return Err(CotangentError::SingletonB(b));
    }
    let pair = build_nb_pair(delta, b)?;
    let spaces = SimplicialPair::from_posets(&pair.n, &pair.ntilde)?;
    let hn = cohomology_dims(spaces.total(), field, false);
    let hnt = cohomology_dims(spaces.sub(), field, false);
    let r = induced_h_maps(&spaces, field);
    Ok(TDims { t1: hn.h0 - r.h0, t2: (hnt.h0 - r.h0) + (hn.h1 - r.h1) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDims {
    pub a: VertexSet,
    pub b: VertexSet,
    pub dims: TDims,
}

/// Candidate sets `b` for a link: nonempty faces and minimal nonfaces on its
/// vertex set. Every other `b` has `T² = 0`.
fn pruned_candidates(link: &SimplicialComplex) -> Vec<VertexSet> {
    let verts = link.vertices();
    let mut cands: Vec<VertexSet> = link.faces().into_iter().filter(|f| !f.is_empty()).collect();
    cands.extend(link.minimal_nonfaces().expect("links are not void").into_iter().filter(|c| c.is_subset(verts)));
    cands.sort_unstable();
    cands
}

fn all_candidates(link: &SimplicialComplex) -> Vec<VertexSet> {
    let mut cands: Vec<VertexSet> = link.vertices().subsets().filter(|s| !s.is_empty()).collect();
    cands.sort_unstable();
    cands
}

fn first_obstruction(
    delta: &SimplicialComplex,
    field: FieldChoice,
    candidates: fn(&SimplicialComplex) -> Vec<VertexSet>,
) -> Result<Option<ClassDims>, CotangentError> {
    if delta.is_void() {
        return Err(CotangentError::Void);
    }
    let faces = delta.faces();
    faces
        .par_iter()
        .map(|&a| -> Result<Option<ClassDims>, CotangentError> {
            let link = delta.link(a)?;
            for b in candidates(&link) {
                let dims = t_dims_negative(&link, b, field)?;
                if dims.t2 > 0 {
                    return Ok(Some(ClassDims { a, b, dims }));
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

/// The first class `(A, b)` with `T² ≠ 0` in (|A|, lex A, |b|, lex b) order,
/// or `None` if `T²(Δ) = 0`.
pub fn t2_witness(delta: &SimplicialComplex, field: FieldChoice) -> Result<Option<ClassDims>, CotangentError> {
    first_obstruction(delta, field, pruned_candidates)
}

pub fn t2_vanishes(delta: &SimplicialComplex, field: FieldChoice) -> Result<bool, CotangentError> {
    Ok(t2_witness(delta, field)?.is_none())
}

/// As [`t2_witness`] but trying every nonempty `b ⊆ [link A]`.
pub fn t2_witness_exhaustive(
    delta: &SimplicialComplex,
    field: FieldChoice,
) -> Result<Option<ClassDims>, CotangentError> {
    first_obstruction(delta, field, all_candidates)
}

/// Every admissible class `(A, b)` with its dimensions, in
/// (|A|, lex A, |b|, lex b) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedT2Report {
    pub n: usize,
    pub field: String,
    pub entries: Vec<ClassDims>,
}

impl GradedT2Report {
    pub fn nonzero(&self) -> impl Iterator<Item = &ClassDims> {
        self.entries.iter().filter(|e| e.dims != TDims::ZERO)
    }

    pub fn t2_vanishes(&self) -> bool {
        self.entries.iter().all(|e| e.dims.t2 == 0)
    }
}

pub fn graded_report(delta: &SimplicialComplex, field: FieldChoice) -> Result<GradedT2Report, CotangentError> {
    if delta.is_void() {
        return Err(CotangentError::Void);
    }
    let per_face: Vec<Vec<ClassDims>> = delta
        .faces()
        .par_iter()
        .map(|&a| {
            let link = delta.link(a)?;
            all_candidates(&link)
                .into_iter()
                .map(|b| Ok(ClassDims { a, b, dims: t_dims_negative(&link, b, field)? }))
                .collect::<Result<Vec<_>, CotangentError>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(GradedT2Report { n: delta.n(), field: field.to_string(), entries: per_face.into_iter().flatten().collect() })
}

/// A class of the join where the product formula failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinMismatch {
    pub a: VertexSet,
    pub b: VertexSet,
    pub join_t2: usize,
    pub expected_t2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinCheck {
    pub classes_checked: usize,
    pub mismatches: Vec<JoinMismatch>,
    pub left_vanishes: bool,
    pub right_vanishes: bool,
    pub join_vanishes: bool,
}

impl JoinCheck {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty() && self.join_vanishes == (self.left_vanishes && self.right_vanishes)
    }
}

/// Compares every class of `T²(Δ ∗ Γ)` with
/// `T²_{c_Δ}(Δ)·h_Γ(c_Γ) + h_Δ(c_Δ)·T²_{c_Γ}(Γ)`, where `h` is the 0/1
/// Hilbert function of the Stanley-Reisner ring. A class whose `b` meets
/// both sides must vanish.
pub fn join_graded_check(
    delta: &SimplicialComplex,
    gamma: &SimplicialComplex,
    field: FieldChoice,
) -> Result<JoinCheck, CotangentError> {
    let join = delta.join(gamma)?;
    let k = delta.n();
    let left_mask = VertexSet::range(k);
    let split = |s: VertexSet| (s.intersection(left_mask), s.difference(left_mask).shift_down(k));
    // h(c) = 1 iff c >= 0 and supp c is a face
    let hilb = |cx: &SimplicialComplex, a: VertexSet, b: VertexSet| (b.is_empty() && cx.is_face(a)) as usize;
    let t2 = |cx: &SimplicialComplex, a: VertexSet, b: VertexSet| -> Result<usize, CotangentError> {
        Ok(if b.is_empty() { 0 } else { t_dims_multigraded(cx, a, b, field)?.t2 })
    };

    let ground = VertexSet::range(join.n());
    let classes: Vec<(VertexSet, VertexSet)> = ground
        .subsets()
        .flat_map(|a| ground.difference(a).subsets().filter(|b| !b.is_empty()).map(move |b| (a, b)))
        .collect();
    let results: Vec<Option<JoinMismatch>> = classes
        .par_iter()
        .map(|&(a, b)| -> Result<Option<JoinMismatch>, CotangentError> {
            let join_t2 = t_dims_multigraded(&join, a, b, field)?.t2;
            let ((a1, a2), (b1, b2)) = (split(a), split(b));
            let expected_t2 = t2(delta, a1, b1)? * hilb(gamma, a2, b2) + hilb(delta, a1, b1) * t2(gamma, a2, b2)?;
            Ok((join_t2 != expected_t2).then_some(JoinMismatch { a, b, join_t2, expected_t2 }))
        })
        .collect::<Result<_, _>>()?;
    let mut mismatches: Vec<JoinMismatch> = results.into_iter().flatten().collect();
    mismatches.sort_unstable_by_key(|m| (m.a, m.b));
    Ok(JoinCheck {
        classes_checked: classes.len(),
        mismatches,
        left_vanishes: t2_vanishes(delta, field)?,
        right_vanishes: t2_vanishes(gamma, field)?,
        join_vanishes: t2_vanishes(&join, field)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldChoice = FieldChoice::Rationals;

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn nb_pair_of_three_points() {
        let pair = build_nb_pair(&SimplicialComplex::points(3), vs(&[0, 1])).unwrap();
        assert_eq!(pair.n, FacePoset::new([VertexSet::EMPTY, vs(&[2])]));
        assert_eq!(pair.ntilde, FacePoset::new([vs(&[2])]));
    }

    #[test]
    fn nb_pair_of_a_circuit_is_the_deletion() {
        let c4 = SimplicialComplex::cycle(4);
        let b = vs(&[0, 2]);
        let pair = build_nb_pair(&c4, b).unwrap();
        assert_eq!(pair.n, FacePoset::new(c4.deletion(b).faces()));
    }

    #[test]
    fn non_minimal_nonface_has_equal_posets() {
        let c5 = SimplicialComplex::cycle(5);
        let b = vs(&[0, 1, 2]);
        assert_eq!(fast_path(&c5, b).unwrap(), Some(FastPath::NotFaceNotCircuit));
        let pair = build_nb_pair(&c5, b).unwrap();
        assert_eq!(pair.n, pair.ntilde);
    }

    #[test]
    fn star_description_uses_the_deletion() {
        let path = SimplicialComplex::path(3);
        let b = vs(&[1, 2]);
        assert_eq!(build_nb_pair(&path, b).unwrap().n, FacePoset::new([vs(&[0])]));
        assert_eq!(n_via_star(&path, b), FacePoset::new([vs(&[0])]));
    }

    #[test]
    fn empty_b_is_rejected() {
        let c = SimplicialComplex::points(2);
        assert_eq!(t_dims_negative(&c, VertexSet::EMPTY, Q), Err(CotangentError::EmptyB));
        assert_eq!(build_nb_pair(&SimplicialComplex::void(2), vs(&[0])), Err(CotangentError::Void));
        assert!(les_cross_check(&c, vs(&[0]), Q).is_err());
    }

    #[test]
    fn points_have_the_expected_t2() {
        for n in 2..=7 {
            let c = SimplicialComplex::points(n);
            let b = vs(&[0, 1]);
            let expected = n.saturating_sub(3);
            assert_eq!(t_dims_negative(&c, b, Q).unwrap().t2, expected);
            assert_eq!(t_dims_negative_general(&c, b, Q).unwrap().t2, expected);
            assert_eq!(les_cross_check(&c, b, Q).unwrap().t2, expected);
        }
    }

    #[test]
    fn uniform_six_three() {
        let u = SimplicialComplex::uniform(6, 3);
        let b = vs(&[0, 1]);
        assert_eq!(t_dims_negative_general(&u, b, Q).unwrap(), TDims { t1: 0, t2: 6 });
        assert_eq!(les_cross_check(&u, b, Q).unwrap(), TDims { t1: 0, t2: 6 });
        assert_eq!(t_dims_negative(&u, vs(&[0, 1, 2]), Q).unwrap().t2, 0);
        assert_eq!(t_dims_negative(&u, vs(&[0]), Q).unwrap().t2, 0);
    }

    #[test]
    fn loops_are_inert() {
        let c = SimplicialComplex::from_facet_lists(3, &[[0, 1]]).unwrap();
        assert_eq!(fast_path(&c, vs(&[2])).unwrap(), Some(FastPath::Loop));
        assert_eq!(t_dims_negative_general(&c, vs(&[2]), Q).unwrap(), TDims::ZERO);
    }

    #[test]
    fn two_points_have_a_smoothing() {
        let c = SimplicialComplex::points(2);
        let b = vs(&[0, 1]);
        assert_eq!(t_dims_negative_general(&c, b, Q).unwrap(), TDims { t1: 1, t2: 0 });
        assert_eq!(fast_path_dims(&c, b).unwrap(), Some((FastPath::Circuit, TDims { t1: 1, t2: 0 })));
    }

    #[test]
    fn inadmissible_classes_are_zero() {
        let c = SimplicialComplex::cycle(5);
        assert_eq!(t_dims_multigraded(&c, vs(&[0, 2]), vs(&[1]), Q).unwrap(), TDims::ZERO);
        assert_eq!(t_dims_multigraded(&c, vs(&[0]), vs(&[2]), Q).unwrap(), TDims::ZERO);
        assert_eq!(t_dims_multigraded(&c, vs(&[0]), VertexSet::EMPTY, Q).unwrap(), TDims::ZERO);
        for b in VertexSet::range(5).subsets() {
            assert_eq!(t_dims_multigraded(&c, vs(&[0, 1]), b, Q).unwrap(), TDims::ZERO);
        }
    }

    #[test]
    fn vanishing_examples() {
        assert!(t2_vanishes(&SimplicialComplex::cycle(5), Q).unwrap());
        assert!(t2_vanishes(&SimplicialComplex::cycle(4), Q).unwrap());
        assert!(t2_vanishes(&SimplicialComplex::irrelevant(0), Q).unwrap());
        assert!(t2_vanishes(&SimplicialComplex::full_simplex(4), Q).unwrap());
        let w = t2_witness(&SimplicialComplex::cycle(7), Q).unwrap().expect("7-cycle is obstructed");
        assert!(w.dims.t2 >= 1);
        assert_eq!(w, t2_witness_exhaustive(&SimplicialComplex::cycle(7), Q).unwrap().unwrap());
    }

    #[test]
    fn graded_report_of_five_points() {
        let report = graded_report(&SimplicialComplex::points(5), Q).unwrap();
        let t2_rows: Vec<_> = report.entries.iter().filter(|e| e.dims.t2 > 0).collect();
        assert_eq!(t2_rows.len(), 10);
        assert!(t2_rows.iter().all(|e| e.a.is_empty() && e.b.len() == 2 && e.dims.t2 == 2));
        assert!(graded_report(&SimplicialComplex::full_simplex(3), Q).unwrap().nonzero().next().is_none());
    }

    #[test]
    fn join_of_point_pairs() {
        let two = SimplicialComplex::points(2);
        let check = join_graded_check(&two, &two, Q).unwrap();
        assert!(check.passes());
        assert!(check.join_vanishes);
        let four = SimplicialComplex::points(4);
        let point = SimplicialComplex::points(1);
        let check = join_graded_check(&four, &point, Q).unwrap();
        assert!(check.passes());
        assert!(!check.join_vanishes);
        let cone = four.join(&point).unwrap();
        assert_eq!(t_dims_multigraded(&cone, VertexSet::EMPTY, vs(&[0, 1]), Q).unwrap().t2, 1);
    }
}
