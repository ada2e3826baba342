//! Exact rational vectors, matrices, and Gaussian elimination.
//!
//! Everything is dense and `BigRational`-valued. Pivoting is always
//! left-to-right by column, so eliminations, solutions and kernel bases
//! are canonical: the same input produces the same output, which keeps
//! downstream certificates reproducible.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. `BigRational` keeps itself in lowest terms.
pub type Rat = BigRational;

/// Shorthand for `n/d` as a [`Rat`].
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a [`Rat`].
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A dense vector of exact rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RatVec(Vec<Rat>);

impl RatVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        RatVec(vec![Rat::zero(); n])
    }

    /// Standard basis vector `e_i` of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v[i] = Rat::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVec(entries.iter().map(|&n| rint(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        self.0
            .iter()
            .zip(other.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.len(), other.len(), "add: length mismatch");
        RatVec(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.len(), other.len(), "sub: length mismatch");
        RatVec(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec(self.iter().map(|a| a * c).collect())
    }

    /// Concatenation, used to assemble direct-sum coordinates.
    pub fn concat(&self, other: &RatVec) -> RatVec {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        RatVec(v)
    }

    /// The sub-vector with coordinates `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> RatVec {
        RatVec(self.0[range].to_vec())
    }

    /// The sub-vector picking out `coords` in the given order.
    pub fn select(&self, coords: &[usize]) -> RatVec {
        RatVec(coords.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Scales to the unique primitive integer vector on the same ray.
    /// The zero vector stays zero.
    pub fn primitive(&self) -> RatVec {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for x in self.iter() {
            lcm = lcm.lcm(x.denom());
        }
        let ints: Vec<BigInt> = self.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let mut gcd = BigInt::zero();
        for n in &ints {
            gcd = gcd.gcd(n);
        }
        RatVec(ints.iter().map(|n| Rat::from_integer(n / &gcd)).collect())
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.denom().is_one())
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVec {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<Rat> for RatVec {
    fn from_iter<T: IntoIterator<Item = Rat>>(iter: T) -> Self {
        RatVec(iter.into_iter().collect())
    }
}

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must share a length;
    /// an empty row list needs an explicit column count.
    pub fn from_rows(rows: Vec<RatVec>, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "from_rows: ragged row");
            data.extend(r.iter().cloned());
        }
        RatMat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| RatVec::from_ints(r)).collect(), cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> RatVec {
        RatVec(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = RatVec> + '_ {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn col(&self, j: usize) -> RatVec {
        RatVec((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &RatVec) -> RatVec {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        (0..self.rows).map(|i| self.row(i).dot(v)).collect()
    }

    pub fn mul_mat(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "mul_mat: dimension mismatch");
        let mut out = RatMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = Rat::zero();
                for k in 0..self.cols {
                    s += &self[(i, k)] * &other[(k, j)];
                }
                out[(i, j)] = s;
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    /// Pivots are chosen left to right, so the result is canonical.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &f * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols, "inverse: not square");
        let n = self.rows;
        let mut aug = RatMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = RatMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Raised when an operation receives inconsistently-sized operands.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("dimension mismatch: expected {expected}, got {got}")]
pub struct DimMismatch {
    pub expected: usize,
    pub got: usize,
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<(), DimMismatch> {
    if expected == got {
        Ok(())
    } else {
        Err(DimMismatch { expected, got })
    }
}

/// Solves `m x = b` exactly. When the solution space has free
/// variables they are set to zero under the left-to-right pivot order,
/// so the returned solution is canonical. `None` means inconsistent.
pub fn solve_linear(m: &RatMat, b: &RatVec) -> Result<Option<RatVec>, DimMismatch> {
    check_dim(m.nrows(), b.len())?;
    let mut aug = RatMat::zeros(m.nrows(), m.ncols() + 1);
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.ncols())] = b[i].clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.contains(&m.ncols()) {
        return Ok(None);
    }
    let mut x = RatVec::zeros(m.ncols());
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[(r, m.ncols())].clone();
    }
    Ok(Some(x))
}

/// A basis of the null space of `m`, one vector per free column in
/// ascending column order. Injective matrices yield an empty list.
pub fn kernel_basis(m: &RatMat) -> Vec<RatVec> {
    let (red, pivots) = m.rref();
    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for f in 0..m.ncols() {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut v = RatVec::zeros(m.ncols());
        v[f] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[(r, f)].clone();
        }
        basis.push(v);
    }
    basis
}

/// The canonical (RREF) basis of the row space of the given vectors.
pub fn row_space_basis(vectors: &[RatVec], dim: usize) -> Vec<RatVec> {
    let m = RatMat::from_rows(vectors.to_vec(), dim);
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|i| red.row(i)).collect()
}

/// Whether `x` lies in the span of `basis` (all over `Q`).
pub fn in_span(basis: &[RatVec], x: &RatVec) -> bool {
    if x.is_zero() {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let cols = RatMat::from_rows(basis.to_vec(), x.len()).transpose();
    matches!(solve_linear(&cols, x), Ok(Some(_)))
}

/// Coefficients expressing `x` in the given spanning vectors, if any.
pub fn span_coefficients(vectors: &[RatVec], x: &RatVec) -> Option<RatVec> {
    if vectors.is_empty() {
        return x.is_zero().then(|| RatVec::zeros(0));
    }
    let cols = RatMat::from_rows(vectors.to_vec(), x.len()).transpose();
    solve_linear(&cols, x).ok().flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_identity() {
        let m = RatMat::identity(2);
        let b = RatVec::from_ints(&[3, 5]);
        assert_eq!(solve_linear(&m, &b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_underdetermined_zeroes_free_vars() {
        let m = RatMat::from_int_rows(&[&[1, 1]]);
        let b = RatVec::from_ints(&[1]);
        let x = solve_linear(&m, &b).unwrap().unwrap();
        assert_eq!(x, RatVec::from_ints(&[1, 0]));
    }

    #[test]
    fn solve_inconsistent() {
        let m = RatMat::from_int_rows(&[&[1, 1], &[1, 1]]);
        let b = RatVec::from_ints(&[1, 2]);
        assert_eq!(solve_linear(&m, &b).unwrap(), None);
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let m = RatMat::zeros(2, 2);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![RatVec::basis(2, 0), RatVec::basis(2, 1)]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&RatMat::identity(3)).is_empty());
    }

    #[test]
    fn kernel_spans_plane() {
        let m = RatMat::from_int_rows(&[&[1, 1, -1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn primitive_normalizes_ray() {
        let v = RatVec::new(vec![rat(2, 3), rat(-4, 3)]);
        assert_eq!(v.primitive(), RatVec::from_ints(&[1, -2]));
        assert!(RatVec::zeros(2).primitive().is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMat::from_int_rows(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), RatMat::identity(2));
    }
}
