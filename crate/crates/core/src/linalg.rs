//! Exact linear algebra over the rationals.
//!
//! Matrices are stored as sparse rows (sorted `(column, value)` lists).
//! Every kernel here is built on Gauss-Jordan elimination to reduced row
//! echelon form. Since the RREF of a matrix is unique, the bases returned by
//! [`nullspace`], [`solve`] and [`quotient_basis`] depend only on the input
//! matrix and never on the pivot rule.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Dense vector of rationals.
pub type Vector = Vec<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

/// Formats a rational as `"num/den"`; integers are written with denominator 1.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"3"`, `"-2"` or `"1/2"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma separated list such as `3,-2,1/2`. The empty string is the
/// empty vector.
pub fn parse_rational_list(s: &str) -> Result<Vector> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

type SparseRow = Vec<(usize, Rational)>;

/// Sparse matrix over the rationals. Absent entries are zero and stored
/// entries are never zero.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, Rational::one())))
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed; zeros are dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut data: Vec<SparseRow> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r}, {c}) outside {rows}x{cols}"
            );
            data[r].push((c, v));
        }
        for row in &mut data {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: SparseRow = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        Self { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vector]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_dense_rows(cols, rows)
    }

    /// Dense rows with an explicit column count, so that zero rows are allowed.
    pub fn from_dense_rows(cols: usize, rows: &[Vector]) -> Self {
        let data = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_triplets(
            rows,
            columns.len(),
            columns.iter().enumerate().flat_map(|(c, col)| {
                assert_eq!(col.len(), rows, "column length mismatch");
                col.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(r, v)| (r, c, v.clone()))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        lookup(&self.data[row], col)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries of one row, sorted by column.
    pub fn row_entries(&self, row: usize) -> &[(usize, Rational)] {
        &self.data[row]
    }

    /// All nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn column(&self, col: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vector> {
        self.data
            .iter()
            .map(|row| {
                let mut dense = zero_vector(self.cols);
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.entries().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (c, v)| acc + v * &x[*c])
            })
            .collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut triplets = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    triplets.push((r, *c, a * b));
                }
            }
        }
        Self::from_triplets(self.rows, other.cols, triplets)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        rref_rows(self.data.clone(), self.cols)
    }
}

fn lookup(row: &[(usize, Rational)], col: usize) -> Option<&Rational> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// `target - factor * source`, both sparse and sorted.
fn axpy(
    target: &[(usize, Rational)],
    factor: &Rational,
    source: &[(usize, Rational)],
) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let tc = target.get(i).map(|e| e.0);
        let sc = source.get(j).map(|e| e.0);
        match (tc, sc) {
            (Some(a), Some(b)) if a == b => {
                let v = &target[i].1 - factor * &source[j].1;
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(target[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(target[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b, -(factor * &source[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Result of Gauss-Jordan elimination: the nonzero rows of the RREF and the
/// pivot column of each of them.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, Rational)>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

// Pivot rule: among the unreduced rows with an entry in the current column,
// take the sparsest one, ties broken by lowest row index. The final RREF does
// not depend on this choice.
fn rref_rows(mut rows: Vec<SparseRow>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let candidate = (next..rows.len())
            .filter(|&r| rows[r].first().is_some_and(|(c, _)| *c == col))
            .min_by_key(|&r| (rows[r].len(), r));
        let Some(p) = candidate else { continue };
        rows.swap(next, p);
        let lead = rows[next][0].1.clone();
        if !lead.is_one() {
            for (_, v) in rows[next].iter_mut() {
                *v /= &lead;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next {
                continue;
            }
            if let Some(factor) = lookup(row, col).cloned() {
                *row = axpy(row, &factor, &pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    Echelon { cols, rows, pivots }
}

/// Exact rank over the rationals.
pub fn rank(a: &RationalMatrix) -> usize {
    a.rref().rank()
}

/// Linearly independent vectors in a fixed ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    pub fn empty(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    /// Wraps `vectors`, checking lengths and linear independence.
    pub fn new(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        let basis = Self {
            ambient_dim,
            vectors,
        };
        if rank(&basis.as_columns()) != basis.len() {
            return Err(Error::Invalid(
                "basis vectors are linearly dependent".into(),
            ));
        }
        Ok(basis)
    }

    /// Greedily keeps the vectors (in order) that are independent of the
    /// earlier ones.
    pub fn from_spanning<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut reducer = IncrementalEchelon::new(ambient_dim);
        let kept = vectors.into_iter().filter(|v| reducer.insert(v)).collect();
        Self {
            ambient_dim,
            vectors: kept,
        }
    }

    /// Basis of the column space, chosen among the columns of `a`.
    pub fn column_space(a: &RationalMatrix) -> Self {
        let t = a.transpose();
        let columns = (0..t.rows()).map(|r| {
            let mut v = zero_vector(a.rows());
            for (c, x) in t.row_entries(r) {
                v[*c] = x.clone();
            }
            v
        });
        Self::from_spanning(a.rows(), columns)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vector> {
        self.vectors
    }

    /// The basis vectors as the columns of an `ambient_dim × len` matrix.
    pub fn as_columns(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient_dim, &self.vectors)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut reducer = IncrementalEchelon::new(self.ambient_dim);
        for b in &self.vectors {
            reducer.insert(b);
        }
        reducer.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Incremental row reduction used for greedy independence tests.
#[derive(Clone, Debug)]
pub struct IncrementalEchelon {
    dim: usize,
    rows: Vec<(usize, Vector)>,
}

impl IncrementalEchelon {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if w[*pivot].is_zero() {
                continue;
            }
            let factor = w[*pivot].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        w
    }

    /// Adds `v` if it is independent of the stored rows; returns whether it was.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = w[pivot].clone();
        for x in &mut w {
            *x /= &lead;
        }
        self.rows.push((pivot, w));
        true
    }
}

/// Basis of `{x : Ax = 0}` read off the RREF: one vector per free column.
pub fn nullspace(a: &RationalMatrix) -> SubspaceBasis {
    let ech = a.rref();
    let mut is_pivot = vec![false; a.cols()];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..a.cols())
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = zero_vector(a.cols());
            x[free] = Rational::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if let Some(v) = lookup(row, free) {
                    x[p] = -v;
                }
            }
            x
        })
        .collect();
    SubspaceBasis {
        ambient_dim: a.cols(),
        vectors,
    }
}

/// Some exact solution of `Ax = b` (free variables set to zero), or `None`
/// when `b` is outside the image of `A`.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Option<Vector> {
    assert_eq!(
        b.len(),
        a.rows(),
        "right-hand side length must equal row count"
    );
    let n = a.cols();
    let rows = a
        .data
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            if !rhs.is_zero() {
                r.push((n, rhs.clone()));
            }
            r
        })
        .collect();
    let ech = rref_rows(rows, n + 1);
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        if let Some(v) = lookup(row, n) {
            x[p] = v.clone();
        }
    }
    Some(x)
}

/// Representatives in `span(z)` whose classes form a basis of
/// `span(z) / span(b)`.
///
/// Fails with [`Error::InconsistentSubspace`] when `span(b)` is not contained
/// in `span(z)`.
pub fn quotient_basis(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    assert_eq!(z.ambient_dim, b.ambient_dim, "ambient dimensions differ");
    let mut span_z = IncrementalEchelon::new(z.ambient_dim);
    for v in &z.vectors {
        span_z.insert(v);
    }
    if b.vectors.iter().any(|v| span_z.insert(v)) {
        return Err(Error::InconsistentSubspace);
    }
    let mut reducer = IncrementalEchelon::new(z.ambient_dim);
    for v in &b.vectors {
        reducer.insert(v);
    }
    let vectors = z
        .vectors
        .iter()
        .filter(|v| reducer.insert(v))
        .cloned()
        .collect();
    Ok(SubspaceBasis {
        ambient_dim: z.ambient_dim,
        vectors,
    })
}

/// Determinant by exact elimination; `None` for non-square input.
pub fn determinant(a: &RationalMatrix) -> Option<Rational> {
    if a.rows() != a.cols() {
        return None;
    }
    let mut m = a.to_dense();
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Some(Rational::zero());
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let lead = m[col][col].clone();
        det *= &lead;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &lead;
            let (upper, lower) = m.split_at_mut(r);
            for (target, pivot) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * pivot;
            }
        }
    }
    Some(det)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Largest absolute numerator or denominator, handy for reporting growth.
pub fn height(v: &[Rational]) -> BigInt {
    v.iter()
        .flat_map(|q| [q.numer().abs(), q.denom().clone()])
        .max()
        .unwrap_or_else(BigInt::zero)
}
