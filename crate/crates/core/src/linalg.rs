//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Lattice elements
//! are column vectors and morphisms act by left multiplication, so a lattice
//! map `Z^n -> Z^m` is an `m x n` matrix.
//!
//! The normal forms are computed with plain extended-gcd elimination. That is
//! quadratic in the bit length of the entries, which is irrelevant at the
//! sizes this crate deals with (a handful of rows and columns).

use std::fmt;
use std::ops::{Index, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map is not surjective onto the target lattice")]
    NotSurjective,
    #[error("sublattice is not saturated (elementary divisors {0:?})")]
    NotSaturated(Vec<BigInt>),
    #[error("columns are linearly dependent")]
    RankDeficient,
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_row_vectors(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    pub fn mul_rational_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (a, x) in self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                    if !a.is_zero() {
                        acc += BigRational::from_integer(a.clone()) * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack row count");
        let mut cols = self.columns();
        cols.extend(other.columns());
        IntMatrix::from_columns(self.rows, &cols)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack column count");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let rows: Vec<_> = range.map(|i| self.row(i)).collect();
        IntMatrix::from_row_vectors(self.cols, &rows)
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let cols: Vec<_> = idx.iter().map(|&j| self.column(j)).collect();
        IntMatrix::from_columns(self.rows, &cols)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// `col_a, col_b <- a*col_a + b*col_b, c*col_a + d*col_b`
    fn combine_cols(&mut self, ia: usize, ib: usize, m: &[BigInt; 4]) {
        let [a, b, c, d] = m;
        for i in 0..self.rows {
            let x = self.get(i, ia).clone();
            let y = self.get(i, ib).clone();
            self.set(i, ia, a * &x + b * &y);
            self.set(i, ib, c * x + d * y);
        }
    }

    fn combine_rows(&mut self, ia: usize, ib: usize, m: &[BigInt; 4]) {
        let [a, b, c, d] = m;
        for j in 0..self.cols {
            let x = self.get(ia, j).clone();
            let y = self.get(ib, j).clone();
            self.set(ia, j, a * &x + b * &y);
            self.set(ib, j, c * x + d * y);
        }
    }

    /// `col_target -= q * col_source`
    fn sub_col_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, target) - q * self.get(i, source);
            self.set(i, target, v);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shapes")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Returns `(g, x, y)` with `g = gcd(a, b) >= 0` and `a*x + b*y = g`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Unimodular 2x2 block sending `(a, b)` to `(gcd, 0)`.
fn gcd_block(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    // plain elimination when possible: the general block may swap the two
    // lines, and the Smith loop would then cycle
    if !a.is_zero() && b.is_multiple_of(a) {
        let one = BigInt::one();
        return [one.clone(), BigInt::zero(), -(b / a), one];
    }
    let (g, x, y) = extended_gcd(a, b);
    let (ag, bg) = (a / &g, b / &g);
    [x, y, -bg, ag]
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn dot_rational(a: &[BigInt], x: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (a, x) in a.iter().zip(x) {
        if !a.is_zero() {
            acc += BigRational::from_integer(a.clone()) * x;
        }
    }
    acc
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content of a vector. The zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_of(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and content, preserving direction.
pub fn primitive_from_rational(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    primitive(&ints)
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Column Hermite normal form: `m * u = h` with `u` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteDecomposition {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Number of nonzero columns of `h`; they come first.
    pub rank: usize,
}

/// Computes the column Hermite form of `m`.
///
/// `h` is in column echelon form: the pivot rows strictly increase from left
/// to right, pivots are positive, entries right of a pivot are zero and
/// entries left of a pivot are reduced into `[0, pivot)`. The integer column
/// span of `h` equals that of `m`, and trailing columns are zero.
pub fn hermite_normal_form(m: &IntMatrix) -> HermiteDecomposition {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols);
    let mut pc = 0;
    for row in 0..m.rows {
        if pc == m.cols {
            break;
        }
        for j in pc + 1..m.cols {
            if h.get(row, j).is_zero() {
                continue;
            }
            let block = gcd_block(h.get(row, pc), h.get(row, j));
            h.combine_cols(pc, j, &block);
            u.combine_cols(pc, j, &block);
        }
        if h.get(row, pc).is_zero() {
            continue;
        }
        if h.get(row, pc).is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let p = h.get(row, pc).clone();
        for j in 0..pc {
            let q = h.get(row, j).div_floor(&p);
            if !q.is_zero() {
                h.sub_col_multiple(j, pc, &q);
                u.sub_col_multiple(j, pc, &q);
            }
        }
        pc += 1;
    }
    HermiteDecomposition { h, u, rank: pc }
}

/// `u * m * v = s` with `s` diagonal and `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Diagonal entries `d_1 | d_2 | ...`, including trailing zeros, up to `min(rows, cols)`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors()
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = s.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            for i in t + 1..rows {
                if !s.get(i, t).is_zero() {
                    let block = gcd_block(s.get(t, t), s.get(i, t));
                    s.combine_rows(t, i, &block);
                    u.combine_rows(t, i, &block);
                }
            }
            for j in t + 1..cols {
                if !s.get(t, j).is_zero() {
                    let block = gcd_block(s.get(t, t), s.get(t, j));
                    s.combine_cols(t, j, &block);
                    v.combine_cols(t, j, &block);
                }
            }
            if (t + 1..rows).any(|i| !s.get(i, t).is_zero()) {
                continue;
            }
            let p = s.get(t, t).clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    let block = [one.clone(), one.clone(), BigInt::zero(), one];
                    s.combine_rows(t, i, &block);
                    u.combine_rows(t, i, &block);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfDecomposition { s, u, v }
}

pub fn rank(m: &IntMatrix) -> usize {
    hermite_normal_form(m).rank
}

/// Canonical basis (columns) of the integer column span of `m`.
pub fn lattice_basis(m: &IntMatrix) -> IntMatrix {
    let hnf = hermite_normal_form(m);
    let idx: Vec<usize> = (0..hnf.rank).collect();
    hnf.h.select_columns(&idx)
}

/// Basis of the saturated lattice `ker(m)`, in canonical (Hermite) form.
///
/// The result has `m.cols()` rows. An injective map gives a matrix with no
/// columns.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let hnf = hermite_normal_form(m);
    let idx: Vec<usize> = (hnf.rank..m.cols).collect();
    let raw = hnf.u.select_columns(&idx);
    lattice_basis(&raw)
}

/// Basis of `span(m) ∩ Z^n`, the saturation of the column span.
pub fn saturation(m: &IntMatrix) -> IntMatrix {
    let left = kernel_basis(&m.transpose());
    kernel_basis(&left.transpose())
}

/// True iff the image lattice of `m` is saturated in the target.
pub fn is_saturated_image(m: &IntMatrix) -> bool {
    smith_normal_form(m)
        .elementary_divisors()
        .iter()
        .all(|d| d.is_zero() || d.is_one())
}

/// Finds an integer `x` with `m x = b`, if one exists.
pub fn solve_integral(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows, "right-hand side length");
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b);
    let k = m.rows.min(m.cols);
    let mut y = vec![BigInt::zero(); m.cols];
    for (i, ci) in c.iter().enumerate() {
        let d = if i < k {
            snf.s.get(i, i).clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ci.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Finds a rational `x` with `m x = b`, if one exists.
pub fn solve_rational(m: &IntMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(b.len(), m.rows, "right-hand side length");
    let snf = smith_normal_form(m);
    let c = snf.u.mul_rational_vec(b);
    let k = m.rows.min(m.cols);
    let mut y = vec![BigRational::zero(); m.cols];
    for (i, ci) in c.iter().enumerate() {
        let d = if i < k {
            snf.s.get(i, i).clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            y[i] = ci / BigRational::from_integer(d);
        }
    }
    Some(snf.v.mul_rational_vec(&y))
}

/// An integer section `r` with `m r = I` for a surjective lattice map `m`.
///
/// The choice is deterministic but otherwise arbitrary; any two sections
/// differ by columns in `ker(m)`.
pub fn right_inverse(m: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    let snf = smith_normal_form(m);
    let divisors = snf.elementary_divisors();
    if snf.rank() != m.rows || !divisors.iter().all(One::is_one) {
        return Err(LinalgError::NotSurjective);
    }
    let mut cols = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut e = vec![BigInt::zero(); m.rows];
        e[i] = BigInt::one();
        cols.push(solve_integral(m, &e).ok_or(LinalgError::NotSurjective)?);
    }
    Ok(IntMatrix::from_columns(m.cols, &cols))
}

/// Presentation of the free quotient `Z^n / K` for a saturated sublattice `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_rank: usize,
    pub kernel_basis: IntMatrix,
    pub quotient_rank: usize,
    /// Surjection `Z^n -> Z^(n - rank K)` with kernel exactly `K`.
    pub projection: IntMatrix,
}

pub fn quotient_by(
    kernel: &IntMatrix,
    ambient_rank: usize,
) -> Result<QuotientPresentation, LinalgError> {
    if kernel.rows != ambient_rank {
        return Err(LinalgError::Shape(format!(
            "kernel vectors have length {}, ambient rank is {ambient_rank}",
            kernel.rows
        )));
    }
    let snf = smith_normal_form(kernel);
    let k = kernel.cols;
    if snf.rank() != k {
        return Err(LinalgError::RankDeficient);
    }
    let divisors = snf.elementary_divisors();
    if !divisors.iter().all(One::is_one) {
        return Err(LinalgError::NotSaturated(divisors));
    }
    // the last n - k rows of u annihilate the kernel and together form a
    // unimodular complement, so they present the quotient
    let raw = snf.u.select_rows(k..ambient_rank);
    let projection = row_hermite(&raw);
    Ok(QuotientPresentation {
        ambient_rank,
        kernel_basis: kernel.clone(),
        quotient_rank: ambient_rank - k,
        projection,
    })
}

/// Row Hermite form (the transpose of the column form of the transpose).
pub fn row_hermite(m: &IntMatrix) -> IntMatrix {
    hermite_normal_form(&m.transpose()).h.transpose()
}

/// Basis of `{x in span(basis) : equations * x = 0}` intersected with the
/// lattice spanned by `basis`.
pub fn restrict_lattice(basis: &IntMatrix, equations: &IntMatrix) -> IntMatrix {
    if equations.rows() == 0 {
        return lattice_basis(basis);
    }
    let k = kernel_basis(&(equations * basis));
    lattice_basis(&(basis * &k))
}

/// Basis of the intersection of the lattices spanned by the columns of `a` and `b`.
pub fn lattice_intersection(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let neg_b = IntMatrix::from_columns(
        b.rows(),
        &b.columns()
            .into_iter()
            .map(|c| c.into_iter().map(|x| -x).collect())
            .collect::<Vec<_>>(),
    );
    let k = kernel_basis(&a.hstack(&neg_b));
    let top = k.select_rows(0..a.cols());
    lattice_basis(&(a * &top))
}
