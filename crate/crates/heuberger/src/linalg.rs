//! Exact integer lattice algebra: Hermite and Smith normal forms, lattice
//! membership and kernels, determinants, and generalized cross products.
//!
//! Everything here runs over arbitrary-precision integers; intermediate
//! entries in the normal-form eliminations are never bounded by a machine
//! word, so no routine rounds or overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Index, IndexMut};
use thiserror::Error;

/// Serializes a `BigInt` field as a decimal string.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serializes a `Vec<BigInt>` field as decimal strings.
pub mod serde_bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings.into_iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("entry count {got} does not match a {rows}x{cols} matrix")]
    EntryCount { rows: usize, cols: usize, got: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is {rows}x{cols}, expected one more row than columns")]
    NotCrossShape { rows: usize, cols: usize },
}

/// Errors from the shared matrix text format (`m r` header, then `m` rows
/// of `r` integers; `#` comments and blank lines ignored).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixTextError {
    #[error("missing header: expected `m r`")]
    MissingHeader,
    #[error("bad header token `{0}`: expected a nonnegative integer")]
    BadHeader(String),
    #[error("bad entry `{0}`: expected an integer")]
    BadEntry(String),
    #[error("expected {expected} entries for a {rows}x{cols} matrix, found {got}")]
    WrongEntryCount { rows: usize, cols: usize, expected: usize, got: usize },
}

/// A dense matrix of arbitrary-precision integers, row-major.
///
/// Serialized as `{rows, cols, entries}` with entries written as decimal
/// strings so JSON reports stay exact regardless of magnitude.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl From<IntMatrix> for MatrixRepr {
    fn from(m: IntMatrix) -> Self {
        let entries = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m[(i, j)].to_string()).collect())
            .collect();
        MatrixRepr { rows: m.rows, cols: m.cols, entries }
    }
}

impl TryFrom<MatrixRepr> for IntMatrix {
    type Error = String;

    fn try_from(r: MatrixRepr) -> Result<Self, String> {
        let mut data = Vec::with_capacity(r.rows * r.cols);
        for row in &r.entries {
            for s in row {
                data.push(s.parse::<BigInt>().map_err(|e| format!("bad entry `{s}`: {e}"))?);
            }
        }
        IntMatrix::new(r.rows, r.cols, data).map_err(|e| e.to_string())
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::EntryCount { rows, cols, got: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from i64 row slices; panics on ragged input.
    /// Intended for literals in tests and examples.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    /// A single-column matrix.
    pub fn column(entries: Vec<BigInt>) -> Self {
        let rows = entries.len();
        IntMatrix { rows, cols: 1, data: entries }
    }

    /// A single-row matrix.
    pub fn row_vector(entries: Vec<BigInt>) -> Self {
        let cols = entries.len();
        IntMatrix { rows: 1, cols, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self[(i, j)].is_zero())
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        (0..self.cols).all(|j| self[(i, j)].is_zero())
    }

    pub fn col_sum(&self, j: usize) -> BigInt {
        (0..self.rows).map(|i| &self[(i, j)]).sum()
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.col_sum(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { left: self.cols, right: rhs.rows });
        }
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch { left: self.cols, right: v.len() });
        }
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] += &self[(i, j)] * &v[j];
            }
        }
        Ok(out)
    }

    pub fn delete_row(&self, i: usize) -> IntMatrix {
        assert!(i < self.rows);
        let mut data = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in 0..self.rows {
            if r != i {
                data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
            }
        }
        IntMatrix { rows: self.rows - 1, cols: self.cols, data }
    }

    pub fn delete_col(&self, j: usize) -> IntMatrix {
        assert!(j < self.cols);
        let mut out = IntMatrix::zero(self.rows, self.cols - 1);
        for i in 0..self.rows {
            let mut jj = 0;
            for c in 0..self.cols {
                if c != j {
                    out[(i, jj)] = self[(i, c)].clone();
                    jj += 1;
                }
            }
        }
        out
    }

    pub fn append_col(&self, col: &[BigInt]) -> Result<IntMatrix, LinalgError> {
        if col.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { left: self.rows, right: col.len() });
        }
        let mut out = IntMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            out[(i, self.cols)] = col[i].clone();
        }
        Ok(out)
    }

    pub fn append_zero_row(&self) -> IntMatrix {
        let mut data = self.data.clone();
        data.extend(std::iter::repeat_with(BigInt::zero).take(self.cols));
        IntMatrix { rows: self.rows + 1, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::DimensionMismatch { left: self.rows, right: rhs.rows });
        }
        let mut out = IntMatrix::zero(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Block diagonal `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let idx_a = i * self.cols + a;
            let idx_b = i * self.cols + b;
            self.data.swap(idx_a, idx_b);
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let idx_a = a * self.cols + j;
            let idx_b = b * self.cols + j;
            self.data.swap(idx_a, idx_b);
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// `col_dst += factor * col_src`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = factor * &self[(i, src)];
            self[(i, dst)] += add;
        }
    }

    /// `row_dst += factor * row_src`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = factor * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }

    /// Parses the shared matrix text format: an `m r` header followed by
    /// `m` rows of `r` whitespace-separated integers. `#` starts a comment
    /// running to end of line; blank lines are skipped.
    pub fn parse_text(input: &str) -> Result<IntMatrix, MatrixTextError> {
        let tokens: Vec<&str> = input
            .lines()
            .flat_map(|line| {
                let body = line.split('#').next().unwrap_or("");
                body.split_whitespace()
            })
            .collect();
        if tokens.len() < 2 {
            return Err(MatrixTextError::MissingHeader);
        }
        let rows: usize =
            tokens[0].parse().map_err(|_| MatrixTextError::BadHeader(tokens[0].to_string()))?;
        let cols: usize =
            tokens[1].parse().map_err(|_| MatrixTextError::BadHeader(tokens[1].to_string()))?;
        let expected = rows * cols;
        if tokens.len() - 2 != expected {
            return Err(MatrixTextError::WrongEntryCount {
                rows,
                cols,
                expected,
                got: tokens.len() - 2,
            });
        }
        let mut data = Vec::with_capacity(expected);
        for t in &tokens[2..] {
            data.push(t.parse::<BigInt>().map_err(|_| MatrixTextError::BadEntry(t.to_string()))?);
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Writes the matrix text format accepted by [`IntMatrix::parse_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut widths = vec![0usize; self.cols];
        for j in 0..self.cols {
            for i in 0..self.rows {
                widths[j] = widths[j].max(self[(i, j)].to_string().len());
            }
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self[(i, j)].to_string(), width = widths[j])?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Column-style Hermite normal form of a matrix `m`, with `m · u = h`.
///
/// `h` is lower echelon by columns: pivot rows strictly increase from left
/// to right, each pivot is positive, entries to the left of a pivot in its
/// row lie in `[0, pivot)`, and zero columns are pushed to the right. The
/// nonzero columns of `h` are the canonical basis of the column lattice,
/// so two matrices span the same lattice exactly when those columns agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// `pivots[j]` is the pivot row of column `j`; its length is the rank.
    pub pivots: Vec<usize>,
}

pub fn hnf(m: &IntMatrix) -> HermiteForm {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let mut pivots = Vec::new();
    let mut c = 0;
    for i in 0..m.rows() {
        if c == m.cols() {
            break;
        }
        loop {
            let jmin = (c..m.cols())
                .filter(|&j| !h[(i, j)].is_zero())
                .min_by_key(|&j| h[(i, j)].abs());
            let Some(jmin) = jmin else { break };
            h.swap_cols(c, jmin);
            u.swap_cols(c, jmin);
            let mut clean = true;
            for j in c + 1..m.cols() {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = -(&h[(i, j)] / &h[(i, c)]);
                h.add_col_multiple(j, c, &q);
                u.add_col_multiple(j, c, &q);
                if !h[(i, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(i, c)].is_zero() {
            continue;
        }
        if h[(i, c)].is_negative() {
            h.negate_col(c);
            u.negate_col(c);
        }
        for j in 0..c {
            let q = -h[(i, j)].div_floor(&h[(i, c)]);
            h.add_col_multiple(j, c, &q);
            u.add_col_multiple(j, c, &q);
        }
        pivots.push(i);
        c += 1;
    }
    HermiteForm { h, u, pivots }
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero columns of `h`: a canonical basis of the column lattice.
    pub fn canonical_basis(&self) -> IntMatrix {
        let rank = self.rank();
        let mut out = IntMatrix::zero(self.h.rows(), rank);
        for j in 0..rank {
            for i in 0..self.h.rows() {
                out[(i, j)] = self.h[(i, j)].clone();
            }
        }
        out
    }

    /// Product of the pivot entries: the index of the lattice in the
    /// sublattice of `Z^m` it saturates. Equals the vertex count of the
    /// quotient when the lattice has full rank.
    pub fn pivot_product(&self) -> BigInt {
        let mut p = BigInt::one();
        for (j, &row) in self.pivots.iter().enumerate() {
            p *= &self.h[(row, j)];
        }
        p
    }

    /// Solves `original · c = v` over the integers; `None` when `v` is not
    /// in the column lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.h.rows(), "ambient dimension mismatch");
        let mut resid = v.to_vec();
        let mut y = vec![BigInt::zero(); self.h.cols()];
        for (j, &p) in self.pivots.iter().enumerate() {
            let (q, r) = resid[p].div_rem(&self.h[(p, j)]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for i in p..self.h.rows() {
                    let sub = &q * &self.h[(i, j)];
                    resid[i] -= sub;
                }
            }
            y[j] = q;
        }
        if resid.iter().any(|x| !x.is_zero()) {
            return None;
        }
        self.u.mul_vec(&y).ok()
    }

    /// The unique representative of `v` modulo the column lattice: each
    /// pivot-row coordinate is reduced into `[0, pivot)`. Two vectors reduce
    /// to the same representative iff their difference is in the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.h.rows(), "ambient dimension mismatch");
        let mut w = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            let q = w[p].div_floor(&self.h[(p, j)]);
            if !q.is_zero() {
                for i in p..self.h.rows() {
                    let sub = &q * &self.h[(i, j)];
                    w[i] -= sub;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Smith normal form `u · m · v = d` with unimodular `u`, `v` and diagonal
/// `d` whose nonnegative entries form a divisibility chain (zeros last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub diag: Vec<BigInt>,
}

pub fn snf(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        let mut min: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[(i, j)].is_zero()
                    && min.is_none_or(|(mi, mj)| d[(i, j)].abs() < d[(mi, mj)].abs())
                {
                    min = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = min else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            // Divisibility chain: fold any non-multiple into the pivot column
            // and re-run the elimination at this position.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&d[(i, j)] % &d[(t, t)]).is_zero());
            match offender {
                Some((_, j)) => {
                    d.add_col_multiple(t, j, &BigInt::one());
                    v.add_col_multiple(t, j, &BigInt::one());
                }
                None => break,
            }
        }
        t += 1;
    }
    let diag = (0..n).map(|i| d[(i, i)].clone()).collect();
    SmithForm { d, u, v, diag }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Generalized cross product of an `(r+1) x r` matrix: component `i`
/// (0-based) is `(-1)^(i+1)` times the minor with row `i` deleted. The
/// result is orthogonal to every column.
pub fn cross_product(m: &IntMatrix) -> Result<Vec<BigInt>, LinalgError> {
    if m.rows() != m.cols() + 1 {
        return Err(LinalgError::NotCrossShape { rows: m.rows(), cols: m.cols() });
    }
    let mut v = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let minor = det(&m.delete_row(i))?;
        v.push(if i % 2 == 0 { -minor } else { minor });
    }
    Ok(v)
}

/// gcd of a list, nonnegative; the empty list and the all-zero list both
/// give 0 so callers can detect "no nonzero entry" directly.
pub fn gcd_vec(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Integer coefficients `c` with `basis · c = v`, if `v` lies in the
/// column lattice of `basis`.
pub fn lattice_membership(
    basis: &IntMatrix,
    v: &[BigInt],
) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if v.len() != basis.rows() {
        return Err(LinalgError::DimensionMismatch { left: basis.rows(), right: v.len() });
    }
    Ok(hnf(basis).solve(v))
}

/// Whether two generating sets span the same integer column lattice,
/// decided by comparing canonical Hermite bases.
pub fn lattice_equal(a: &IntMatrix, b: &IntMatrix) -> Result<bool, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch { left: a.rows(), right: b.rows() });
    }
    Ok(hnf(a).canonical_basis() == hnf(b).canonical_basis())
}

/// Basis of the kernel of `a` as columns of an `a.cols() x k` matrix.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let hf = hnf(a);
    let rank = hf.rank();
    let free = a.cols() - rank;
    let mut out = IntMatrix::zero(a.cols(), free);
    for (jj, j) in (rank..a.cols()).enumerate() {
        for i in 0..a.cols() {
            out[(i, jj)] = hf.u[(i, j)].clone();
        }
    }
    out
}

/// Canonical basis of `{x in Z^m : gen_images · x  ∈  column span of
/// relations}`, computed as the kernel of the stacked map
/// `(x, y) ↦ gen_images·x − relations·y` projected to the `x` block.
pub fn kernel_mod_lattice(
    gen_images: &IntMatrix,
    relations: &IntMatrix,
) -> Result<IntMatrix, LinalgError> {
    if gen_images.rows() != relations.rows() {
        return Err(LinalgError::DimensionMismatch {
            left: gen_images.rows(),
            right: relations.rows(),
        });
    }
    let m = gen_images.cols();
    let mut neg_rel = relations.clone();
    for j in 0..neg_rel.cols() {
        neg_rel.negate_col(j);
    }
    let stacked = gen_images.hstack(&neg_rel)?;
    let kern = kernel_basis(&stacked);
    let mut proj = IntMatrix::zero(m, kern.cols());
    for i in 0..m {
        for j in 0..kern.cols() {
            proj[(i, j)] = kern[(i, j)].clone();
        }
    }
    Ok(hnf(&proj).canonical_basis())
}
