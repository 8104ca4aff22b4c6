//! Exact integer linear algebra.
//!
//! Matrices are stored as sorted sparse rows of arbitrary-precision integers.
//! Rank and Smith normal form go through a sparse elimination phase that
//! pivots on unit entries (chosen by a Markowitz-style cost to limit fill-in),
//! followed by a dense Smith reduction of whatever is left. The sparse phase
//! runs on machine integers first and restarts on big integers if any
//! intermediate value overflows.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

type SparseRow<T> = Vec<(usize, T)>;

/// An integer matrix with sparse row storage and dense semantics.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, BigInt::one())]).collect();
        IntMatrix { nrows: n, ncols: n, rows }
    }

    /// An empty matrix (no rows) with the given number of columns.
    pub fn empty(ncols: usize) -> Self {
        Self::zeros(0, ncols)
    }

    /// Builds a matrix from dense rows. All rows must have length `ncols`.
    pub fn from_rows<R: AsRef<[i64]>>(ncols: usize, rows: &[R]) -> Self {
        let mut m = Self::empty(ncols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), ncols, "row length {} != {}", r.len(), ncols);
            m.push_sparse_row(
                r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(j, v)| (j, BigInt::from(*v))).collect(),
            );
        }
        m
    }

    pub fn from_dense(rows: &[Vec<BigInt>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::empty(ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            m.push_sparse_row(r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect());
        }
        m
    }

    /// Appends a row given as `(column, value)` pairs in any order.
    /// Repeated columns are summed and zeros dropped.
    pub fn push_sparse_row(&mut self, mut entries: Vec<(usize, BigInt)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: SparseRow<BigInt> = Vec::with_capacity(entries.len());
        for (j, v) in entries {
            assert!(j < self.ncols, "column {} out of range {}", j, self.ncols);
            match row.last_mut() {
                Some((lj, lv)) if *lj == j => *lv += v,
                _ => row.push((j, v)),
            }
        }
        row.retain(|(_, v)| !v.is_zero());
        self.rows.push(row);
        self.nrows += 1;
    }

    pub fn push_row_i64(&mut self, entries: &[(usize, i64)]) {
        self.push_sparse_row(entries.iter().map(|&(j, v)| (j, BigInt::from(v))).collect());
    }

    /// Stacks the rows of `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.ncols });
        }
        let mut m = self.clone();
        m.rows.extend(other.rows.iter().cloned());
        m.nrows += other.nrows;
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Entry at `(i, j)`. Panics outside the matrix.
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        assert!(i < self.nrows && j < self.ncols, "index ({i}, {j}) out of bounds");
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn row_entries(&self, i: usize) -> &[(usize, BigInt)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.ncols];
                for (j, v) in r {
                    d[*j] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut cols: Vec<SparseRow<BigInt>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        IntMatrix { nrows: self.ncols, ncols: self.nrows, rows: cols }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: rhs.nrows });
        }
        let mut out = IntMatrix::empty(rhs.ncols);
        for r in &self.rows {
            let mut acc = vec![BigInt::zero(); rhs.ncols];
            for (k, a) in r {
                for (j, b) in &rhs.rows[*k] {
                    acc[*j] += a * b;
                }
            }
            out.push_sparse_row(acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.nrows, self.ncols)?;
        for r in self.to_dense() {
            let s: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", s.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Invariants of a finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    /// Elementary divisors greater than one, each dividing the next.
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl QuotientInvariants {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

pub(crate) fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Row-style Hermite normal form.
///
/// Nonzero rows come first with strictly increasing pivot columns, pivots
/// are positive and entries above a pivot lie in `[0, pivot)`. The shape of
/// the input is kept, so trailing rows are zero.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.to_dense();
    let nrows = m.nrows;
    let mut r = 0;
    for col in 0..m.ncols {
        if r == nrows {
            break;
        }
        loop {
            // smallest nonzero entry at or below row r
            let pick = (r..nrows).filter(|&i| !a[i][col].is_zero()).min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(p) = pick else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[r][col]);
                let (top, bottom) = a.split_at_mut(i);
                sub_scaled(&mut bottom[0], &top[r], &q, col);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[col].is_zero()) {
            continue;
        }
        if a[r][col].is_negative() {
            for v in a[r][col..].iter_mut() {
                *v = -&*v;
            }
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if !q.is_zero() {
                let (top, bottom) = a.split_at_mut(r);
                sub_scaled(&mut top[i], &bottom[0], &q, col);
            }
        }
        r += 1;
    }
    let mut out = IntMatrix::from_dense(&a);
    out.ncols = m.ncols;
    out.nrows = nrows;
    out
}

/// `row -= q * pivot`, only touching columns from `start` on.
fn sub_scaled(row: &mut [BigInt], pivot: &[BigInt], q: &BigInt, start: usize) {
    for (x, p) in row[start..].iter_mut().zip(&pivot[start..]) {
        if !p.is_zero() {
            *x -= q * p;
        }
    }
}

/// Diagonal of the Smith normal form, of length `min(rows, cols)`.
///
/// Nonzero divisors come first and each divides the next; the number of
/// nonzero divisors is the rank.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let (units, rest) = unit_pivot_reduce(m);
    let mut divisors = vec![BigInt::one(); units];
    divisors.extend(dense_smith_diagonal(rest));
    divisors.resize(m.nrows.min(m.ncols), BigInt::zero());
    divisors
}

/// Rank over the rationals.
pub fn row_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).iter().filter(|d| !d.is_zero()).count()
}

/// Invariants of `Z^ambient_dim / rowspace(span)`.
pub fn quotient_invariants(span: &IntMatrix, ambient_dim: usize) -> Result<QuotientInvariants> {
    if span.ncols != ambient_dim {
        return Err(Error::DimensionMismatch { expected: ambient_dim, found: span.ncols });
    }
    let divisors = smith_normal_form(span);
    let rank = divisors.iter().filter(|d| !d.is_zero()).count();
    let torsion = divisors.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
    Ok(QuotientInvariants { free_rank: ambient_dim - rank, torsion })
}

// ---------------------------------------------------------------------------
// Sparse unit-pivot elimination

trait Elt: Clone + PartialEq {
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    /// `self - f * b`
    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self>;
    fn neg_mul(f: &Self, b: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Elt for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*b)?)
    }
    fn neg_mul(f: &Self, b: &Self) -> Option<Self> {
        f.checked_mul(*b)?.checked_neg()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Elt for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self> {
        Some(self - f * b)
    }
    fn neg_mul(f: &Self, b: &Self) -> Option<Self> {
        Some(-(f * b))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Eliminates unit pivots. Returns the number of pivots removed and the
/// remaining (nonzero) rows as dense big-integer rows over the surviving
/// columns.
fn unit_pivot_reduce(m: &IntMatrix) -> (usize, Vec<Vec<BigInt>>) {
    let small: Option<Vec<SparseRow<i64>>> =
        m.rows.iter().map(|r| r.iter().map(|(j, v)| v.to_i64().map(|x| (*j, x))).collect()).collect();
    if let Some(rows) = small {
        if let Some(res) = unit_pivot_kernel(rows, m.ncols) {
            return res;
        }
    }
    unit_pivot_kernel(m.rows.clone(), m.ncols).expect("big integer elimination cannot overflow")
}

const PIVOT_CANDIDATE_COLUMNS: usize = 6;

fn unit_pivot_kernel<T: Elt>(mut rows: Vec<SparseRow<T>>, ncols: usize) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for (j, _) in r {
            col_rows[*j].insert(i);
        }
    }
    let mut pivots = 0;
    let mut order: Vec<usize> = Vec::with_capacity(ncols);
    loop {
        order.clear();
        order.extend((0..ncols).filter(|&j| !col_rows[j].is_empty()));
        order.sort_by_key(|&j| (col_rows[j].len(), j));

        let mut best: Option<(usize, usize, usize)> = None; // (cost, row, col)
        let mut seen = 0;
        for &j in &order {
            let count = col_rows[j].len();
            if let Some((cost, _, _)) = best {
                if cost == 0 || count.saturating_sub(1) > cost {
                    break;
                }
            }
            let mut found = false;
            for &i in &col_rows[j] {
                let k = rows[i].binary_search_by_key(&j, |e| e.0).expect("column index out of sync");
                if rows[i][k].1.is_unit() {
                    found = true;
                    let cost = (rows[i].len() - 1) * (count - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, i, j));
                    }
                }
            }
            if found {
                seen += 1;
                if seen >= PIVOT_CANDIDATE_COLUMNS {
                    break;
                }
            }
        }
        let Some((_, p, q)) = best else { break };

        let prow = std::mem::take(&mut rows[p]);
        let pval = prow[prow.binary_search_by_key(&q, |e| e.0).unwrap()].1.clone();
        for (j, _) in &prow {
            col_rows[*j].remove(&p);
        }
        let targets: Vec<usize> = col_rows[q].iter().copied().collect();
        for r in targets {
            let old = std::mem::take(&mut rows[r]);
            let k = old.binary_search_by_key(&q, |e| e.0).unwrap();
            // pval is ±1, so it is its own inverse
            let f = old[k].1.mul(&pval)?;
            let (merged, added, removed) = merge_sub(&old, &f, &prow)?;
            for j in added {
                col_rows[j].insert(r);
            }
            for j in removed {
                col_rows[j].remove(&r);
            }
            rows[r] = merged;
        }
        debug_assert!(col_rows[q].is_empty());
        pivots += 1;
    }

    let live_cols: Vec<usize> = (0..ncols).filter(|&j| !col_rows[j].is_empty()).collect();
    let mut pos = vec![usize::MAX; ncols];
    for (k, &j) in live_cols.iter().enumerate() {
        pos[j] = k;
    }
    let rest = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut d = vec![BigInt::zero(); live_cols.len()];
            for (j, v) in r {
                d[pos[j]] = v.to_big();
            }
            d
        })
        .collect();
    Some((pivots, rest))
}

/// `a - f * b` for sparse rows; also reports columns that became nonzero
/// and columns that became zero.
fn merge_sub<T: Elt>(a: &[(usize, T)], f: &T, b: &[(usize, T)]) -> Option<(SparseRow<T>, Vec<usize>, Vec<usize>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut added = Vec::new();
    let mut removed = Vec::new();
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let ja = a.get(i).map_or(usize::MAX, |e| e.0);
        let jb = b.get(k).map_or(usize::MAX, |e| e.0);
        if ja < jb {
            out.push(a[i].clone());
            i += 1;
        } else if jb < ja {
            out.push((jb, T::neg_mul(f, &b[k].1)?));
            added.push(jb);
            k += 1;
        } else {
            let v = a[i].1.sub_mul(f, &b[k].1)?;
            if v.is_nil() {
                removed.push(ja);
            } else {
                out.push((ja, v));
            }
            i += 1;
            k += 1;
        }
    }
    Some((out, added, removed))
}

// ---------------------------------------------------------------------------
// Dense Smith reduction

/// Nonzero invariant factors of a dense matrix, in divisibility order.
fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // minimal-absolute-value pivot keeps entry growth down
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            // clear column t
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, bottom) = a.split_at_mut(i);
                sub_scaled(&mut bottom[0], &top[t], &q, t);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            // clear row t
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    if !row[t].is_zero() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..nrows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    normalize_divisors(&mut diag);
    diag
}

/// Turns a diagonal into invariant-factor order via repeated gcd/lcm swaps.
fn normalize_divisors(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[i].is_one() {
                break;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}
