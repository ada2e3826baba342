//! Integer lattice arithmetic via the Smith normal form.
//!
//! The distinction between integer combinations and rational
//! combinations of a generating set is what separates a `Z`-span from
//! its divisible hull, and several order-theoretic constructions here
//! break down when a subgroup is not saturated. Everything in this
//! module reduces to one primitive: `U A V = D` with `U`, `V`
//! unimodular and `D` diagonal with each entry dividing the next.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::{Rat, RatMat, RatVec};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn mul_int_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn to_rat(&self) -> RatMat {
        let mut m = RatMat::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = Rat::from_integer(self.get(i, j).clone());
            }
        }
        m
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

    /// row[a] += f * row[b]
    fn add_row(&mut self, a: usize, b: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(a, j) + f * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// col[a] += f * col[b]
    fn add_col(&mut self, a: usize, b: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, a) + f * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j);
            self.set(a, j, v);
        }
    }
}

/// `U A V = D` with `U`, `V` unimodular and `D = diag(d_1..d_r)`,
/// `d_i >= 1`, `d_i | d_{i+1}`.
pub struct Snf {
    pub divisors: Vec<BigInt>,
    pub u: IntMat,
    pub v: IntMat,
}

/// Smith normal form by alternating row/column reduction.
pub fn smith_normal_form(a: &IntMat) -> Snf {
    let mut m = a.clone();
    let mut u = IntMat::identity(a.nrows());
    let mut v = IntMat::identity(a.ncols());
    let n = a.nrows().min(a.ncols());

    for t in 0..n {
        // Move a nonzero entry of minimal absolute value to (t, t).
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m.nrows() {
                for j in t..m.ncols() {
                    if !m.get(i, j).is_zero()
                        && best
                            .map(|(bi, bj)| m.get(i, j).abs() < m.get(bi, bj).abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                // Remaining block is zero.
                let mut divisors = Vec::new();
                for k in 0..t {
                    divisors.push(m.get(k, k).clone());
                }
                return finish(m, u, v, divisors);
            };
            m.swap_rows(t, bi);
            u.swap_rows(t, bi);
            m.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            for i in (t + 1)..m.nrows() {
                if !m.get(i, t).is_zero() {
                    let q = div_round(m.get(i, t), m.get(t, t));
                    if !q.is_zero() {
                        m.add_row(i, t, &-&q);
                        u.add_row(i, t, &-&q);
                    }
                    if !m.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in (t + 1)..m.ncols() {
                if !m.get(t, j).is_zero() {
                    let q = div_round(m.get(t, j), m.get(t, t));
                    if !q.is_zero() {
                        m.add_col(j, t, &-&q);
                        v.add_col(j, t, &-&q);
                    }
                    if !m.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // Pivot must divide the rest of the block for the
                // divisor chain; fold a bad entry into column t.
                let mut bad = None;
                'scan: for i in (t + 1)..m.nrows() {
                    for j in (t + 1)..m.ncols() {
                        if !(m.get(i, j) % m.get(t, t)).is_zero() {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                match bad {
                    Some(i) => {
                        m.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
        }
        if m.get(t, t).is_negative() {
            m.negate_row(t);
            u.negate_row(t);
        }
    }
    let divisors: Vec<BigInt> = (0..n)
        .map(|k| m.get(k, k).clone())
        .take_while(|d| !d.is_zero())
        .collect();
    finish(m, u, v, divisors)
}

fn finish(_m: IntMat, u: IntMat, v: IntMat, divisors: Vec<BigInt>) -> Snf {
    debug_assert!(divisors.iter().all(|d| d.is_positive()));
    debug_assert!(divisors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    Snf { divisors, u, v }
}

/// Nearest-integer division, which keeps coefficient growth down
/// during the reduction.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Clears denominators: returns (integer columns matrix, scale) where
/// column j equals scale * vectors[j].
fn integer_columns(vectors: &[RatVec], dim: usize) -> (IntMat, BigInt) {
    let mut lcm = BigInt::one();
    for v in vectors {
        for x in v.iter() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut m = IntMat::zeros(dim, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for i in 0..dim {
            m.set(i, j, v[i].numer() * (&lcm / v[i].denom()));
        }
    }
    (m, lcm)
}

/// Whether `x` is an integer combination of `generators`. Decided
/// exactly through the Smith normal form of the generator matrix.
pub fn zspan_contains(generators: &[RatVec], x: &RatVec) -> bool {
    zspan_coefficients(generators, x).is_some()
}

/// Integer coefficients expressing `x` over `generators`, if any.
pub fn zspan_coefficients(generators: &[RatVec], x: &RatVec) -> Option<Vec<BigInt>> {
    if x.is_zero() {
        return Some(vec![BigInt::zero(); generators.len()]);
    }
    if generators.is_empty() {
        return None;
    }
    let dim = x.len();
    let mut all = generators.to_vec();
    all.push(x.clone());
    let (scaled, _) = integer_columns(&all, dim);
    // Split back: columns 0..m are generators, last column is x.
    let m = generators.len();
    let mut a = IntMat::zeros(dim, m);
    let mut target = Vec::with_capacity(dim);
    for i in 0..dim {
        for j in 0..m {
            a.set(i, j, scaled.get(i, j).clone());
        }
        target.push(scaled.get(i, m).clone());
    }
    let snf = smith_normal_form(&a);
    let ux = snf.u.mul_int_vec(&target);
    let r = snf.divisors.len();
    let mut t = vec![BigInt::zero(); m];
    for (i, uxi) in ux.iter().enumerate() {
        if i < r {
            let (q, rem) = uxi.div_rem(&snf.divisors[i]);
            if !rem.is_zero() {
                return None;
            }
            t[i] = q;
        } else if !uxi.is_zero() {
            return None;
        }
    }
    let coeffs = snf.v.mul_int_vec(&t);
    Some(coeffs)
}

/// Outcome of the saturation check for a `Z`-span.
pub enum Saturation {
    Holds,
    /// `witness` is outside the span while `k * witness` is inside.
    Fails { witness: RatVec, k: BigInt },
}

/// Checks whether the lattice spanned by `generators` (denominators
/// cleared) is saturated: no proper fraction of a lattice vector that
/// is itself integral over the ambient lattice is missing. The failure
/// witness `x` satisfies `k x` in the span, `x` not in the span.
pub fn saturation(generators: &[RatVec], dim: usize) -> Saturation {
    if generators.is_empty() {
        return Saturation::Holds;
    }
    let (a, scale) = integer_columns(generators, dim);
    let snf = smith_normal_form(&a);
    for (i, d) in snf.divisors.iter().enumerate() {
        if !d.is_one() {
            // In U-coordinates the lattice is d_i Z on slot i; pull the
            // unit vector back and undo the denominator scaling.
            let u_inv = snf
                .u
                .to_rat()
                .inverse()
                .expect("unimodular matrix is invertible");
            let col = u_inv.col(i);
            let witness = col.scale(&Rat::new(BigInt::one(), scale.clone()));
            debug_assert!(!zspan_contains(generators, &witness));
            return Saturation::Fails {
                witness,
                k: d.clone(),
            };
        }
    }
    Saturation::Holds
}

/// Basis of the integer kernel `{c : A c = 0}` of an integer matrix.
pub fn int_kernel_basis(a: &IntMat) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let r = snf.divisors.len();
    (r..a.ncols())
        .map(|j| (0..a.ncols()).map(|i| snf.v.get(i, j).clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::linalg::rat;

    fn int_mat(rows: &[&[i64]]) -> IntMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    fn check_snf(a: &IntMat) {
        let snf = smith_normal_form(a);
        // U A V must equal diag(divisors).
        let ua = snf.u.to_rat().mul_mat(&a.to_rat());
        let uav = ua.mul_mat(&snf.v.to_rat());
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                let expect = if i == j && i < snf.divisors.len() {
                    Rat::from_integer(snf.divisors[i].clone())
                } else {
                    Rat::zero()
                };
                assert_eq!(uav[(i, j)], expect, "slot ({i},{j})");
            }
        }
        for w in snf.divisors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn snf_small_cases() {
        check_snf(&int_mat(&[&[2, 4], &[6, 8]]));
        check_snf(&int_mat(&[&[1, 0], &[0, 1]]));
        check_snf(&int_mat(&[&[0, 0], &[0, 0]]));
        check_snf(&int_mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]));
        check_snf(&int_mat(&[&[3], &[6]]));
    }

    #[test]
    fn zspan_parity_obstruction() {
        let gens = vec![RatVec::from_ints(&[2, 0]), RatVec::from_ints(&[0, 2])];
        assert!(!zspan_contains(&gens, &RatVec::from_ints(&[1, 1])));
        assert!(zspan_contains(&gens, &RatVec::from_ints(&[4, -2])));
    }

    #[test]
    fn zspan_standard_lattice() {
        let gens = vec![RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])];
        assert!(zspan_contains(&gens, &RatVec::from_ints(&[7, -3])));
    }

    #[test]
    fn zspan_coefficients_reconstruct() {
        let gens = vec![
            RatVec::from_ints(&[2, 1, 0]),
            RatVec::from_ints(&[1, 1, 3]),
        ];
        let x = RatVec::from_ints(&[5, 4, 9]); // 1*g0 + 3*g1
        let c = zspan_coefficients(&gens, &x).unwrap();
        let mut acc = RatVec::zeros(3);
        for (k, g) in c.iter().zip(&gens) {
            acc = acc.add(&g.scale(&Rat::from_integer(k.clone())));
        }
        assert_eq!(acc, x);
    }

    #[test]
    fn saturation_index_two() {
        let gens = vec![RatVec::from_ints(&[2, 0])];
        match saturation(&gens, 2) {
            Saturation::Fails { witness, k } => {
                assert_eq!(k, BigInt::from(2));
                // witness = (±1/2... scaled); k*witness must be in span.
                let kw = witness.scale(&Rat::from_integer(k));
                assert!(zspan_contains(&gens, &kw));
                assert!(!zspan_contains(&gens, &witness));
            }
            Saturation::Holds => panic!("index-2 sublattice must fail saturation"),
        }
    }

    #[test]
    fn saturation_full_lattice() {
        let gens = vec![RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])];
        assert!(matches!(saturation(&gens, 2), Saturation::Holds));
    }

    #[test]
    fn int_kernel() {
        let a = int_mat(&[&[1, 1, -1]]);
        let k = int_kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let img = a.mul_int_vec(v);
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn saturation_rational_generators() {
        // (1/2, 0) spans a lattice that is saturated after clearing
        // denominators.
        let gens = vec![RatVec::new(vec![rat(1, 2), rat(0, 1)])];
        assert!(matches!(saturation(&gens, 2), Saturation::Holds));
    }
}
