//! Dense matrices over the coefficient rings, exact Gaussian elimination
//! over the scalar fields, and fraction-free integer determinants.

use num::BigInt;
use num::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::Coeff;
use crate::scalar::Scalar;

/// Row-major dense matrix. The exponent denominator rides along so that
/// generic code can construct entries of the right ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<C> {
    rows: usize,
    cols: usize,
    denom: u32,
    data: Vec<C>,
}

impl<C: Coeff> Mat<C> {
    pub fn zero(rows: usize, cols: usize, denom: u32) -> Mat<C> {
        Mat {
            rows,
            cols,
            denom,
            data: vec![C::zero(denom); rows * cols],
        }
    }

    pub fn identity(n: usize, denom: u32) -> Mat<C> {
        let mut m = Mat::zero(n, n, denom);
        for i in 0..n {
            m.set(i, i, C::one(denom));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>, denom: u32) -> Mat<C> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            denom,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn mul(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Mat<C> = Mat::zero(self.rows, other.cols, self.denom);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = C::zero(self.denom);
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> Mat<C> {
        self.map(|c| c.neg())
    }

    pub fn scale_i64(&self, n: i64) -> Mat<C> {
        self.map(|c| c.scale_i64(n))
    }

    pub fn transpose(&self) -> Mat<C> {
        let mut out = Mat::zero(self.cols, self.rows, self.denom);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> Mat<C> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            denom: self.denom,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }
}

/// Reduced row echelon form with the list of pivot columns.
pub fn rref(a: &Mat<Scalar>) -> (Mat<Scalar>, Vec<usize>) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).inverse().expect("nonzero pivot");
        for j in c..cols {
            let v = m.get(r, j).mul(&inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in c..cols {
                let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(a: &Mat<Scalar>) -> usize {
    rref(a).1.len()
}

/// Basis of the right kernel {x : Ax = 0}, one vector per free column.
pub fn nullspace(a: &Mat<Scalar>) -> Vec<Vec<Scalar>> {
    let (m, pivots) = rref(a);
    let cols = a.cols();
    let mut basis = Vec::new();
    for f in 0..cols {
        if pivots.contains(&f) {
            continue;
        }
        let mut x = vec![Scalar::zero(); cols];
        x[f] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = m.get(row, f).neg();
        }
        basis.push(x);
    }
    basis
}

/// One solution of Ax = b if the system is consistent (free variables zero).
pub fn solve(a: &Mat<Scalar>, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows(), b.len());
    let cols = a.cols();
    let mut aug = Mat::zero(a.rows(), cols + 1, a.denom());
    for i in 0..a.rows() {
        for j in 0..cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let (m, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = m.get(row, cols).clone();
    }
    Some(x)
}

/// Determinant of a small integer matrix by fraction-free elimination.
/// Intermediate values are minors, so i128 is ample at these sizes.
pub fn det_bareiss(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    assert!(a.iter().all(|row| row.len() == n), "not square");
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                debug_assert_eq!(num % prev, 0, "fraction-free step not exact");
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Scale a rational vector to a primitive integer vector with its first
/// nonzero entry positive. None if any entry has a ξ-part or all are zero.
pub fn primitive_integer_vector(v: &[Scalar]) -> Option<Vec<i64>> {
    if v.iter().any(|s| !s.is_rational()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for s in v {
        lcm = lcm.lcm(s.re().denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|s| s.re().numer() * &lcm / s.re().denom())
        .collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return None;
    }
    let mut out: Vec<BigInt> = ints.into_iter().map(|n| n / &g).collect();
    if let Some(first) = out.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            for n in &mut out {
                *n = -n.clone();
            }
        }
    }
    out.into_iter()
        .map(|n| i64::try_from(n).ok())
        .collect::<Option<Vec<i64>>>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_nullspace_of_a_singular_matrix() {
        let a = Mat::from_rows(
            vec![vec![s(2), s(-2)], vec![s(-2), s(2)]],
            1,
        );
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        assert_eq!(primitive_integer_vector(&ns[0]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn solve_finds_solutions_and_detects_inconsistency() {
        let a = Mat::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]], 1);
        let x = solve(&a, &[s(5), s(11)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![s(5), s(11)]);

        let b = Mat::from_rows(vec![vec![s(1), s(1)], vec![s(2), s(2)]], 1);
        assert!(solve(&b, &[s(1), s(3)]).is_none());
        assert!(solve(&b, &[s(1), s(2)]).is_some());
    }

    #[test]
    fn gaussian_elimination_works_over_the_cyclotomic_field() {
        let xi = Scalar::xi();
        // rows (1, ξ), (ξ², ξ·ξ² = 1): second row is ξ² times the first
        let a = Mat::from_rows(
            vec![
                vec![s(1), xi.clone()],
                vec![Scalar::xi_pow(2), Scalar::one()],
            ],
            1,
        );
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn bareiss_matches_known_determinants() {
        assert_eq!(det_bareiss(&[vec![2, -3], vec![-1, 2]]), 1);
        assert_eq!(det_bareiss(&[vec![2, -1], vec![-4, 2]]), 0);
        assert_eq!(
            det_bareiss(&[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ]),
            1
        );
        // needs a row swap
        assert_eq!(det_bareiss(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_bareiss(&[vec![0, 0], vec![0, 1]]), 0);
    }

    #[test]
    fn primitive_vector_clears_denominators_and_signs() {
        let v = vec![Scalar::rational(-1, 2), s(-1), Scalar::rational(-3, 2)];
        assert_eq!(primitive_integer_vector(&v).unwrap(), vec![1, 2, 3]);
        assert!(primitive_integer_vector(&[Scalar::zero()]).is_none());
        assert!(primitive_integer_vector(&[Scalar::xi()]).is_none());
    }

    #[test]
    fn matrix_algebra_basics() {
        let a: Mat<Scalar> = Mat::identity(3, 1);
        let b = a.scale_i64(2);
        assert_eq!(b.mul(&b), a.scale_i64(4));
        assert!(b.sub(&b).is_zero());
        assert!(a.mul(&b).mul(&a).sub(&b).is_zero());
        let c = Mat::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]], 1);
        assert_eq!(c.transpose().transpose(), c);
        assert!(!c.is_identity());
    }
}
