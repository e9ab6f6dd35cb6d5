//! Exact ranks of sparse integer matrices over Q and GF(p).
//!
//! Rational elimination first runs on `i64` fractions with checked
//! arithmetic and restarts on arbitrary-precision fractions on overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::homology::FieldChoice;

/// Sparse matrix with integer entries, one sorted `(column, value)` list per row.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Appends a row; entries may be unsorted and repeated (they are summed).
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut row: Vec<(u32, i64)> = entries
            .into_iter()
            .map(|(c, v)| {
                assert!(c < self.cols, "column {c} out of range");
                (c as u32, v)
            })
            .collect();
        row.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(u32, i64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        self.rows.push(merged);
    }

    pub fn rank(&self, field: FieldChoice) -> usize {
        match field {
            FieldChoice::PrimeField(p) => eliminate(&PrimeField(p as u64), self).expect("GF(p) never overflows"),
            FieldChoice::Rationals => eliminate(&SmallRationals, self)
                .or_else(|| eliminate(&BigRationals, self))
                .expect("arbitrary precision never overflows"),
        }
    }
}

/// Scalar arithmetic that may refuse (overflow).
trait Scalars {
    type E: Clone;
    fn embed(&self, v: i64) -> Option<Self::E>;
    fn is_zero(&self, e: &Self::E) -> bool;
    /// `a - c * b`
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Option<Self::E>;
    /// `a / b` for nonzero `b`
    fn div(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
}

struct PrimeField(u64);

impl Scalars for PrimeField {
    type E = u64;

    fn embed(&self, v: i64) -> Option<u64> {
        Some(v.rem_euclid(self.0 as i64) as u64)
    }

    fn is_zero(&self, e: &u64) -> bool {
        *e == 0
    }

    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> Option<u64> {
        let p = self.0;
        Some((a + p - (c * b) % p) % p)
    }

    fn div(&self, a: &u64, b: &u64) -> Option<u64> {
        // Fermat inverse
        let p = self.0;
        let (mut base, mut exp, mut inv) = (*b % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                inv = inv * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(a * inv % p)
    }
}

struct SmallRationals;

impl Scalars for SmallRationals {
    type E = Ratio<i64>;

    fn embed(&self, v: i64) -> Option<Ratio<i64>> {
        Some(Ratio::from_integer(v))
    }

    fn is_zero(&self, e: &Ratio<i64>) -> bool {
        e.is_zero()
    }

    fn sub_mul(&self, a: &Ratio<i64>, c: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
        a.checked_sub(&c.checked_mul(b)?)
    }

    fn div(&self, a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
        a.checked_div(b)
    }
}

struct BigRationals;

impl Scalars for BigRationals {
    type E = BigRational;

    fn embed(&self, v: i64) -> Option<BigRational> {
        Some(BigRational::from_integer(BigInt::from(v)))
    }

    fn is_zero(&self, e: &BigRational) -> bool {
        e.is_zero()
    }

    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a - c * b)
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a / b)
    }
}

type SparseRow<E> = Vec<(u32, E)>;

/// Online row echelon form: each incoming row is reduced against the stored
/// pivot rows (leading coefficient one) until it vanishes or has a new
/// leading column. Returns `None` if the scalars overflowed.
fn eliminate<S: Scalars>(s: &S, m: &SparseMatrix) -> Option<usize> {
    let mut pivots: Vec<Option<SparseRow<S::E>>> = vec![None; m.cols];
    let mut rank = 0;
    for raw in &m.rows {
        let mut row: Vec<(u32, S::E)> = Vec::with_capacity(raw.len());
        for &(c, v) in raw {
            let e = s.embed(v)?;
            if !s.is_zero(&e) {
                row.push((c, e));
            }
        }
        while let Some((lead_col, lead)) = row.first().cloned() {
            match &pivots[lead_col as usize] {
                Some(pivot) => row = axpy(s, &row, &lead, pivot)?,
                None => {
                    let normalized =
                        row.iter().map(|(c, e)| Some((*c, s.div(e, &lead)?))).collect::<Option<Vec<_>>>()?;
                    pivots[lead_col as usize] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `row - coef * pivot`, merging sorted sparse rows and dropping zeros.
fn axpy<S: Scalars>(s: &S, row: &[(u32, S::E)], coef: &S::E, pivot: &[(u32, S::E)]) -> Option<Vec<(u32, S::E)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    let zero = s.embed(0)?;
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            let v = s.sub_mul(&zero, coef, &pivot[j].1)?;
            if !s.is_zero(&v) {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = s.sub_mul(&row[i].1, coef, &pivot[j].1)?;
            if !s.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}
