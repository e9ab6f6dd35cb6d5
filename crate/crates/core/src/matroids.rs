//! Matroids given by their bases, viewed as simplicial complexes (the
//! independent sets).
//!
//! Revlex indicator strings list the `r`-subsets of `{0, .., n-1}` ordered by
//! their largest differing element, i.e. by the bit mask as an integer. For
//! `n = 4, r = 2`:
//!
//! | position | 1     | 2     | 3     | 4     | 5     | 6     |
//! |----------|-------|-------|-------|-------|-------|-------|
//! | subset   | {0,1} | {0,2} | {1,2} | {0,3} | {1,3} | {2,3} |

use std::collections::{HashMap, HashSet};
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{CanonicalForm, ComplexError, SimplicialComplex, VertexSet, MAX_CANONICAL_VERTICES};
use crate::cotangent::{t2_witness, ClassDims, CotangentError};
use crate::homology::FieldChoice;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("bases {0} and {1} have different sizes")]
    MixedRank(VertexSet, VertexSet),
    #[error("basis exchange fails for {b1}, {b2} and element {x}")]
    Exchange { b1: VertexSet, b2: VertexSet, x: usize },
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("expected {expected} characters for n={n} r={r}, got {found}")]
    Length { n: usize, r: usize, expected: usize, found: usize },
    #[error("invalid character {ch:?} at position {position}")]
    Character { position: usize, ch: char },
    #[error("not a matroid: basis exchange fails for the bases at positions {p1} and {p2} (element {x})")]
    ExchangeAt { p1: usize, p2: usize, x: usize },
    #[error("enumeration is limited to {max} elements, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cotangent(#[from] CotangentError),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<VertexSet>,
}

/// Finds a violation of basis exchange: `x ∈ B1 ∖ B2` such that no
/// `y ∈ B2 ∖ B1` makes `B1 - x + y` a basis.
fn exchange_violation(bases: &[VertexSet]) -> Option<(VertexSet, VertexSet, usize)> {
    let set: HashSet<VertexSet> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).iter() {
                let ok = b2.difference(b1).iter().any(|y| set.contains(&b1.without(x).with(y)));
                if !ok {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

/// Whether the facets of `delta` are the bases of a matroid.
pub fn is_matroid(delta: &SimplicialComplex) -> bool {
    Matroid::from_complex(delta).is_ok()
}

impl Matroid {
    pub fn new(n: usize, bases: impl IntoIterator<Item = VertexSet>) -> Result<Self, MatroidError> {
        let mut bases: Vec<VertexSet> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(MatroidError::NoBases)?;
        // validates the ground set
        SimplicialComplex::new(n, bases.iter().copied())?;
        if let Some(b) = bases.iter().find(|b| b.len() != first.len()) {
            return Err(MatroidError::MixedRank(first, *b));
        }
        if let Some((b1, b2, x)) = exchange_violation(&bases) {
            return Err(MatroidError::Exchange { b1, b2, x });
        }
        Ok(Matroid { n, rank: first.len(), bases })
    }

    pub fn from_complex(delta: &SimplicialComplex) -> Result<Self, MatroidError> {
        Self::new(delta.n(), delta.facets().iter().copied())
    }

    /// All `r`-subsets are bases.
    pub fn uniform(n: usize, r: usize) -> Self {
        assert!(r <= n, "rank exceeds ground set");
        let bases: Vec<VertexSet> = VertexSet::range(n).subsets().filter(|s| s.len() == r).collect();
        Matroid::new(n, bases).expect("uniform matroids satisfy exchange")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `n - rank`, the rank of the dual.
    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    /// Bases in (cardinality, lex) order.
    pub fn bases(&self) -> &[VertexSet] {
        &self.bases
    }

    pub fn as_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.n, self.bases.iter().copied()).expect("bases are in range")
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.bases.iter().any(|b| s.is_subset(*b))
    }

    pub fn rank_of(&self, s: VertexSet) -> usize {
        self.bases.iter().map(|b| b.intersection(s).len()).max().unwrap_or(0)
    }

    pub fn closure(&self, s: VertexSet) -> VertexSet {
        let r = self.rank_of(s);
        VertexSet::range(self.n).iter().filter(|&e| self.rank_of(s.with(e)) == r).collect()
    }

    pub fn dual(&self) -> Self {
        let ground = VertexSet::range(self.n);
        let mut bases: Vec<VertexSet> = self.bases.iter().map(|b| ground.difference(*b)).collect();
        bases.sort_unstable();
        Matroid { n: self.n, rank: self.n - self.rank, bases }
    }

    /// Minimal dependent sets, in (cardinality, lex) order.
    pub fn circuits(&self) -> Vec<VertexSet> {
        self.as_complex().minimal_nonfaces().expect("matroids are not void")
    }

    /// Elements in no basis.
    pub fn loops(&self) -> VertexSet {
        let covered = self.bases.iter().fold(VertexSet::EMPTY, |acc, b| acc.union(*b));
        VertexSet::range(self.n).difference(covered)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> VertexSet {
        self.bases.iter().fold(VertexSet::range(self.n), |acc, b| acc.intersection(*b))
    }

    /// Non-loops grouped by `{v, w}` being dependent.
    pub fn parallel_classes(&self) -> PartitionSpec {
        let loops = self.loops();
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in VertexSet::range(self.n).difference(loops).iter() {
            match classes
                .iter_mut()
                .find(|c| !self.is_independent(VertexSet::singleton(c.min_element().unwrap()).with(v)))
            {
                Some(c) => *c = c.with(v),
                None => classes.push(VertexSet::singleton(v)),
            }
        }
        PartitionSpec { n: self.n, loops, classes }
    }

    /// Element sets of the connected components: two elements are equivalent
    /// when some circuit contains both. Ordered by smallest element.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut comps: Vec<VertexSet> = (0..self.n).map(VertexSet::singleton).collect();
        for c in self.circuits() {
            let (touching, rest): (Vec<VertexSet>, Vec<VertexSet>) = comps.into_iter().partition(|s| !s.is_disjoint(c));
            comps = rest;
            comps.push(touching.into_iter().fold(VertexSet::EMPTY, |acc, s| acc.union(s)));
        }
        comps.sort_unstable_by_key(|s| s.min_element());
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// The restriction of `self` to `s`, relabelled to `{0, .., #s-1}` in
    /// increasing order.
    pub fn restrict(&self, s: VertexSet) -> Matroid {
        let index: HashMap<usize, usize> = s.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let r = self.rank_of(s);
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(s))
            .filter(|b| b.len() == r)
            .map(|b| b.iter().map(|v| index[&v]).collect::<VertexSet>());
        Matroid::new(s.len(), bases.collect::<Vec<_>>()).expect("restrictions are matroids")
    }

    /// Connected components as matroids on their own ground sets.
    pub fn connected_components(&self) -> Vec<Matroid> {
        self.component_sets().into_iter().map(|s| self.restrict(s)).collect()
    }

    /// `b ∩ C ∈ {∅, b}` for every circuit `C`.
    pub fn is_cycle_atomic(&self, b: VertexSet) -> bool {
        self.circuits().iter().all(|c| c.is_disjoint(b) || b.is_subset(*c))
    }

    /// Flats of rank `rank - 1`.
    pub fn hyperplanes(&self) -> Vec<VertexSet> {
        if self.rank == 0 {
            return Vec::new();
        }
        let mut hs: Vec<VertexSet> = self
            .bases
            .iter()
            .flat_map(|b| b.iter().map(move |x| b.without(x)))
            .collect::<HashSet<_>>()
            .into_iter()
            .map(|s| self.closure(s))
            .collect();
        hs.sort_unstable();
        hs.dedup();
        hs
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm, MatroidError> {
        Ok(self.as_complex().canonical_form()?)
    }

    /// Indicator string in revlex order.
    pub fn to_revlex(&self) -> String {
        let set: HashSet<VertexSet> = self.bases.iter().copied().collect();
        revlex_subsets(self.n, self.rank).into_iter().map(|s| if set.contains(&s) { '*' } else { '0' }).collect()
    }
}

/// Loops plus a partition of the remaining elements into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionSpec {
    pub n: usize,
    pub loops: VertexSet,
    pub classes: Vec<VertexSet>,
}

impl PartitionSpec {
    pub fn validate(&self) -> Result<(), MatroidError> {
        let mut seen = self.loops;
        for c in &self.classes {
            if c.is_empty() {
                return Err(MatroidError::Partition("empty class".into()));
            }
            if !c.is_disjoint(seen) {
                return Err(MatroidError::Partition(format!("class {c} overlaps loops or another class")));
            }
            seen = seen.union(*c);
        }
        if seen != VertexSet::range(self.n) {
            return Err(MatroidError::Partition(format!("classes and loops do not cover {{0..{}}}", self.n)));
        }
        Ok(())
    }
}

/// The rank-2 matroid whose bases are the pairs meeting two distinct classes.
pub fn rank2_from_partition(spec: &PartitionSpec) -> Result<Matroid, MatroidError> {
    spec.validate()?;
    if spec.classes.len() < 2 {
        return Err(MatroidError::Partition("rank two needs at least two classes".into()));
    }
    let mut bases = Vec::new();
    for (i, p) in spec.classes.iter().enumerate() {
        for q in &spec.classes[i + 1..] {
            for u in p.iter() {
                for v in q.iter() {
                    bases.push(VertexSet::singleton(u).with(v));
                }
            }
        }
    }
    Matroid::new(spec.n, bases)
}

/// The matroid of rank `min(#classes, 2)` with the given loops and parallel
/// classes.
fn rank_at_most2_from_partition(spec: &PartitionSpec) -> Result<Matroid, MatroidError> {
    match spec.classes.len() {
        0 => {
            spec.validate()?;
            Matroid::new(spec.n, [VertexSet::EMPTY])
        }
        1 => {
            spec.validate()?;
            Matroid::new(spec.n, spec.classes[0].iter().map(VertexSet::singleton).collect::<Vec<_>>())
        }
        _ => rank2_from_partition(spec),
    }
}

/// Integer partitions of `n` into parts of size at most `max`, largest part first.
fn integer_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in integer_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The partition spec with `loops` loops (the last elements) and consecutive
/// classes of the given sizes.
fn spec_from_sizes(n: usize, loops: usize, sizes: &[usize]) -> PartitionSpec {
    let mut next = 0;
    let classes = sizes
        .iter()
        .map(|&k| {
            let c = VertexSet::range(next + k).difference(VertexSet::range(next));
            next += k;
            c
        })
        .collect();
    let loops = VertexSet::range(n).difference(VertexSet::range(n - loops));
    PartitionSpec { n, loops, classes }
}

/// Coloop-free matroids of corank exactly two on `n` elements, one per
/// isomorphism class: duals of loopless rank-2 matroids, i.e. partitions of
/// `n` into at least two parts.
pub fn corank2_enumerate(n: usize) -> Vec<Matroid> {
    integer_partitions(n, n)
        .into_iter()
        .filter(|p| p.len() >= 2)
        .map(|p| rank2_from_partition(&spec_from_sizes(n, 0, &p)).expect("valid partition").dual())
        .collect()
}

/// All matroids of corank at most two on `n` elements, one per isomorphism
/// class (coloops allowed): duals of all matroids of rank at most two.
pub fn corank_at_most2_enumerate(n: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for loops in 0..=n {
        for p in integer_partitions(n - loops, n - loops) {
            let m = rank_at_most2_from_partition(&spec_from_sizes(n, loops, &p)).expect("valid partition");
            out.push(m.dual());
        }
    }
    out
}

/// `r`-subsets of `{0, .., n-1}` in revlex order.
pub fn revlex_subsets(n: usize, r: usize) -> Vec<VertexSet> {
    let mut subs: Vec<VertexSet> = VertexSet::range(n).subsets().filter(|s| s.len() == r).collect();
    subs.sort_unstable_by_key(|s| s.bits());
    subs
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Parses a revlex indicator string; positions in errors are 1-based.
pub fn parse_revlex(line: &str, n: usize, r: usize) -> Result<Matroid, MatroidError> {
    let line = line.trim();
    let expected = binomial(n, r);
    let found = line.chars().count();
    if r > n || found != expected {
        return Err(MatroidError::Length { n, r, expected, found });
    }
    let subsets = revlex_subsets(n, r);
    let mut bases = Vec::new();
    let mut position_of = HashMap::new();
    for (i, (ch, s)) in line.chars().zip(&subsets).enumerate() {
        match ch {
            '*' => {
                bases.push(*s);
                position_of.insert(*s, i + 1);
            }
            '0' => {}
            _ => return Err(MatroidError::Character { position: i + 1, ch }),
        }
    }
    match Matroid::new(n, bases) {
        Err(MatroidError::Exchange { b1, b2, x }) => {
            Err(MatroidError::ExchangeAt { p1: position_of[&b1], p2: position_of[&b2], x })
        }
        other => other,
    }
}

/// One matroid read from a database stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbEntry {
    pub line: usize,
    pub n: usize,
    pub r: usize,
    pub text: String,
    pub matroid: Matroid,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct DbError {
    pub line: usize,
    pub message: String,
}

fn parse_header(text: &str) -> Option<Result<(usize, usize), String>> {
    let body = text.strip_prefix('#')?.trim();
    if !body.contains("n=") {
        return None;
    }
    let mut n = None;
    let mut r = None;
    for token in body.split_whitespace() {
        let parsed = |v: &str| v.parse::<usize>().map_err(|_| format!("bad number in header token `{token}`"));
        if let Some(v) = token.strip_prefix("n=") {
            n = Some(parsed(v));
        } else if let Some(v) = token.strip_prefix("r=") {
            r = Some(parsed(v));
        }
    }
    Some(match (n, r) {
        (Some(Ok(n)), Some(Ok(r))) => Ok((n, r)),
        (Some(Err(e)), _) | (_, Some(Err(e))) => Err(e),
        _ => Err("header must have the form `# n=<n> r=<r>`".into()),
    })
}

/// Streams a matroid database: `# n=<n> r=<r>` headers switch the context,
/// other `#` lines and blank lines are ignored, every other line is a revlex
/// string. Line numbers are 1-based.
pub fn parse_database<R: BufRead>(reader: R) -> impl Iterator<Item = Result<DbEntry, DbError>> {
    let mut context: Option<(usize, usize)> = None;
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line_no = i + 1;
        let err = |message: String| Some(Err(DbError { line: line_no, message }));
        let text = match line {
            Ok(t) => t,
            Err(e) => return err(e.to_string()),
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return None;
        }
        if trimmed.starts_with('#') {
            return match parse_header(trimmed)? {
                Ok(nr) => {
                    context = Some(nr);
                    None
                }
                Err(message) => err(message),
            };
        }
        let Some((n, r)) = context else {
            return err("matroid line before any `# n=<n> r=<r>` header".into());
        };
        match parse_revlex(trimmed, n, r) {
            Ok(matroid) => Some(Ok(DbEntry { line: line_no, n, r, text: trimmed.to_string(), matroid })),
            Err(e) => err(e.to_string()),
        }
    })
}

/// Largest ground set for [`enumerate_matroids`].
pub const MAX_ENUMERATED_ELEMENTS: usize = 7;

/// Hyperplane sets `H` closed under: if `H1, H2 ∈ H` meet in a flat of rank
/// `r - 2`, every hyperplane containing `H1 ∩ H2` is in `H`. These index the
/// rank-preserving single-element extensions.
fn linear_subclasses(m: &Matroid) -> Vec<Vec<bool>> {
    let hs = m.hyperplanes();
    let k = hs.len();
    let r = m.rank();
    // for each pair meeting in a corank-2 flat, the hyperplanes over that flat
    let mut forced: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in (i + 1)..k {
            let meet = hs[i].intersection(hs[j]);
            if r >= 2 && m.rank_of(meet) == r - 2 {
                let over: Vec<usize> = (0..k).filter(|&l| meet.is_subset(hs[l])).collect();
                forced[i].push((j, over.clone()));
                forced[j].push((i, over));
            }
        }
    }
    #[derive(Clone, Copy, PartialEq)]
    enum S {
        Open,
        In,
        Out,
    }
    fn include(state: &mut [S], start: usize, forced: &[Vec<(usize, Vec<usize>)>]) -> bool {
        let mut queue = vec![start];
        state[start] = S::In;
        while let Some(h) = queue.pop() {
            for (other, over) in &forced[h] {
                if state[*other] != S::In {
                    continue;
                }
                for &l in over {
                    match state[l] {
                        S::Out => return false,
                        S::Open => {
                            state[l] = S::In;
                            queue.push(l);
                        }
                        S::In => {}
                    }
                }
            }
        }
        true
    }
    fn search(i: usize, state: &mut Vec<S>, forced: &[Vec<(usize, Vec<usize>)>], out: &mut Vec<Vec<bool>>) {
        if i == state.len() {
            out.push(state.iter().map(|s| *s == S::In).collect());
            return;
        }
        if state[i] != S::Open {
            search(i + 1, state, forced, out);
            return;
        }
        let saved = state.clone();
        state[i] = S::Out;
        search(i + 1, state, forced, out);
        *state = saved.clone();
        if include(state, i, forced) {
            search(i + 1, state, forced, out);
        }
        *state = saved;
    }
    let mut out = Vec::new();
    search(0, &mut vec![S::Open; k], &forced, &mut out);
    out
}

/// All single-element extensions of `m` by a new element `n`, including the
/// coloop extension. Every result is validated against the axioms.
fn single_element_extensions(m: &Matroid) -> Vec<Matroid> {
    let n = m.n();
    let e = n;
    let hs = m.hyperplanes();
    let mut out = Vec::new();
    let coloop = m.bases().iter().map(|b| b.with(e)).collect::<Vec<_>>();
    out.push(Matroid::new(n + 1, coloop).expect("adding a coloop keeps a matroid"));
    // the new element lies in exactly the hyperplanes of the subclass; with
    // rank 0 the only extension is a loop
    let independent_rm1: Vec<VertexSet> = if m.rank() == 0 {
        Vec::new()
    } else {
        m.bases().iter().flat_map(|b| b.iter().map(move |x| b.without(x))).collect::<HashSet<_>>().into_iter().collect()
    };
    let subclasses = if m.rank() == 0 { vec![Vec::new()] } else { linear_subclasses(m) };
    for chosen in subclasses {
        let mut bases: Vec<VertexSet> = m.bases().to_vec();
        for s in &independent_rm1 {
            let h = m.closure(*s);
            let idx = hs.binary_search(&h).expect("closure of a rank r-1 independent set is a hyperplane");
            if !chosen[idx] {
                bases.push(s.with(e));
            }
        }
        out.push(Matroid::new(n + 1, bases).expect("linear subclasses give matroids"));
    }
    out
}

fn dedup_iso(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut keyed: Vec<(CanonicalForm, Matroid)> = ms
        .into_par_iter()
        .map(|m| {
            let (form, perm) = m.as_complex().canonical_labeling().expect("small ground set");
            let relabelled =
                Matroid::new(m.n(), m.bases().iter().map(|b| b.map(&perm)).collect::<Vec<_>>()).expect("relabelling");
            (form, relabelled)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, m)| m).collect()
}

/// One matroid per isomorphism class on `n` elements (loops and coloops
/// allowed), in canonical representation, ordered by (rank, canonical form).
pub fn enumerate_matroids(n: usize) -> Result<Vec<Matroid>, MatroidError> {
    if n > MAX_ENUMERATED_ELEMENTS || n > MAX_CANONICAL_VERTICES {
        return Err(MatroidError::TooLarge { n, max: MAX_ENUMERATED_ELEMENTS });
    }
    let mut level = vec![Matroid::new(0, [VertexSet::EMPTY]).expect("rank 0")];
    for _ in 0..n {
        let next: Vec<Matroid> = level.par_iter().flat_map_iter(single_element_extensions).collect();
        level = dedup_iso(next);
    }
    level.sort_by_key(|m| m.rank());
    Ok(level)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Agree,
    /// `T² ≠ 0` although every component has corank at most two.
    ObstructedLowCorank,
    /// `T² = 0` although some component has corank above two.
    ConjectureCounterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub t2_vanishes: bool,
    pub components_corank_at_most2: bool,
    pub kind: VerdictKind,
    pub component_coranks: Vec<usize>,
    pub witness: Option<ClassDims>,
}

/// Compares `T²(M) = 0` with "every connected component has corank at most
/// two".
pub fn conjecture_check(m: &Matroid, field: FieldChoice) -> Result<Verdict, MatroidError> {
    let witness = t2_witness(&m.as_complex(), field)?;
    let component_coranks: Vec<usize> = m.connected_components().iter().map(Matroid::corank).collect();
    let lhs = witness.is_none();
    let rhs = component_coranks.iter().all(|&c| c <= 2);
    let kind = match (lhs, rhs) {
        (false, true) => VerdictKind::ObstructedLowCorank,
        (true, false) => VerdictKind::ConjectureCounterexample,
        _ => VerdictKind::Agree,
    };
    Ok(Verdict { t2_vanishes: lhs, components_corank_at_most2: rhs, kind, component_coranks, witness })
}

/// Closed form for `dim T²_{-b}` of the uniform matroid of rank `r` on `n`
/// elements with `#b = nb`: `r·C(n-2, r) - C(n-2, r-1)` when `nb = 2` and
/// `r < n - 1`, and zero otherwise.
pub fn uniform_t2_closed_form(n: usize, r: usize, nb: usize) -> usize {
    if nb != 2 || n < 2 || r + 1 >= n {
        return 0;
    }
    let value = (r * binomial(n - 2, r)) as i64 - if r == 0 { 0 } else { binomial(n - 2, r - 1) as i64 };
    usize::try_from(value).expect("the closed form is nonnegative for r < n - 1")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UniformRow {
    pub n: usize,
    pub r: usize,
    pub nb: usize,
    pub computed: usize,
    pub formula: usize,
}

impl UniformRow {
    pub fn passes(&self) -> bool {
        self.computed == self.formula
    }
}

/// `dim T²_{-b}` of every uniform matroid with `1 <= r <= n <= max_n`, for
/// `b = {0, .., nb-1}` and every `1 <= nb <= n`, through the relative
/// cohomology of the pair of spaces (no shortcuts). By symmetry only `#b`
/// matters.
pub fn uniform_table(max_n: usize, field: FieldChoice) -> Result<Vec<UniformRow>, MatroidError> {
    let cases: Vec<(usize, usize, usize)> =
        (1..=max_n).flat_map(|n| (1..=n).flat_map(move |r| (1..=n).map(move |nb| (n, r, nb)))).collect();
    cases
        .par_iter()
        .map(|&(n, r, nb)| {
            let u = SimplicialComplex::uniform(n, r);
            let b = VertexSet::range(nb);
            let computed = crate::cotangent::t_dims_negative_general(&u, b, field)?.t2;
            Ok(UniformRow { n, r, nb, computed, formula: uniform_t2_closed_form(n, r, nb) })
        })
        .collect()
}

/// Outcome of checking `T² = 0` on every matroid of corank at most two on
/// `n` elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corank2Report {
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

pub fn verify_corank_at_most2(n: usize, field: FieldChoice) -> Result<Corank2Report, MatroidError> {
    let ms = corank_at_most2_enumerate(n);
    let failures: Vec<Option<String>> = ms
        .par_iter()
        .map(|m| {
            let ok = m.corank() <= 2
                && is_matroid(&m.as_complex())
                && crate::cotangent::t2_vanishes(&m.as_complex(), field)?;
            Ok((!ok).then(|| format!("n={} r={} {}", m.n(), m.rank(), m.to_revlex())))
        })
        .collect::<Result<_, MatroidError>>()?;
    Ok(Corank2Report { n, checked: ms.len(), failures: failures.into_iter().flatten().collect() })
}
