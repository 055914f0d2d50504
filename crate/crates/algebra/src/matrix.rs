//! Dense exact matrices over ℚ or a number field, with Gaussian elimination,
//! characteristic polynomials and hermitian inertia.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::field::{FieldElem, NumberField};
use crate::poly::Poly;
use crate::rational::{int, parse_rational, sign, Rational};
use crate::AlgebraError;

/// Arithmetic needed by the elimination routines.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    /// Whatever is needed to build constants (the field, or nothing for ℚ).
    type Ctx: Clone + fmt::Debug;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rational_in(ctx: &Self::Ctx, q: &Rational) -> Self;
    fn is_zero_s(&self) -> bool;
    fn add_s(&self, o: &Self) -> Self;
    fn sub_s(&self, o: &Self) -> Self;
    fn mul_s(&self, o: &Self) -> Self;
    fn neg_s(&self) -> Self;
    fn inv_s(&self) -> Option<Self>;
    fn conj_s(&self) -> Self;
    /// Sign of a real (self-conjugate) value.
    fn real_sign(&self) -> i32;
}

impl Scalar for Rational {
    type Ctx = ();
    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn from_rational_in(_: &(), q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
    fn add_s(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_s(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_s(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_s(&self) -> Self {
        -self
    }
    fn inv_s(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn conj_s(&self) -> Self {
        self.clone()
    }
    fn real_sign(&self) -> i32 {
        sign(self)
    }
}

impl Scalar for FieldElem {
    type Ctx = Arc<NumberField>;
    fn zero_in(k: &Self::Ctx) -> Self {
        FieldElem::from_rational(k, Rational::zero())
    }
    fn one_in(k: &Self::Ctx) -> Self {
        FieldElem::from_rational(k, Rational::one())
    }
    fn from_rational_in(k: &Self::Ctx, q: &Rational) -> Self {
        FieldElem::from_rational(k, q.clone())
    }
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
    fn add_s(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_s(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_s(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_s(&self) -> Self {
        self.neg()
    }
    fn inv_s(&self) -> Option<Self> {
        self.inv()
    }
    fn conj_s(&self) -> Self {
        self.conj()
    }
    fn real_sign(&self) -> i32 {
        FieldElem::real_sign(self)
    }
}

#[derive(Clone)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    ctx: T::Ctx,
}

impl<T: Scalar> PartialEq for Matrix<T> {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.data == o.data
    }
}

/// Matrix over ℚ.
pub type QMatrix = Matrix<Rational>;

/// Counts of positive, negative and zero eigenvalues of a hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }
    pub fn size(&self) -> usize {
        self.plus + self.minus + self.zero
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros_in(ctx: &T::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero_in(ctx); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity_in(ctx: &T::Ctx, n: usize) -> Self {
        let mut m = Matrix::zeros_in(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = T::one_in(ctx);
        }
        m
    }

    pub fn from_fn_in(
        ctx: &T::Ctx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            ctx: ctx.clone(),
        }
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn_in(&self.ctx, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix::from_fn_in(&self.ctx, self.cols, self.rows, |i, j| self[(j, i)].conj_s())
    }

    pub fn map<U: Scalar>(&self, ctx: &U::Ctx, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_fn_in(ctx, self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix::from_fn_in(&self.ctx, self.rows, self.cols, |i, j| self[(i, j)].add_s(&o[(i, j)]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix::from_fn_in(&self.ctx, self.rows, self.cols, |i, j| self[(i, j)].sub_s(&o[(i, j)]))
    }

    pub fn neg(&self) -> Self {
        Matrix::from_fn_in(&self.ctx, self.rows, self.cols, |i, j| self[(i, j)].neg_s())
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix::from_fn_in(&self.ctx, self.rows, self.cols, |i, j| self[(i, j)].mul_s(s))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut m: Self = Matrix::zeros_in(&self.ctx, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero_s() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero_s() {
                        m[(i, j)] = m[(i, j)].add_s(&a.mul_s(b));
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero_in(&self.ctx);
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero_s() && !self[(i, j)].is_zero_s() {
                        acc = acc.add_s(&self[(i, j)].mul_s(vj));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_s())
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn_in(&self.ctx, rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let (r, c) = (self.rows + o.rows, self.cols + o.cols);
        Matrix::from_fn_in(&self.ctx, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                o[(i - self.rows, j - self.cols)].clone()
            } else {
                T::zero_in(&self.ctx)
            }
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ctx: &T::Ctx, rows: usize, cols: &[Vec<T>]) -> Self {
        Matrix::from_fn_in(ctx, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero_s()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].inv_s().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul_s(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero_s() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let d = f.mul_s(&m[(r, j)]);
                        m[(i, j)] = m[(i, j)].sub_s(&d);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // fraction-free would be faster for big entries; forward elimination suffices here
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero_s()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].inv_s().expect("nonzero pivot");
            for i in r + 1..m.rows {
                if !m[(i, c)].is_zero_s() {
                    let f = m[(i, c)].mul_s(&inv);
                    for j in c..m.cols {
                        let d = f.mul_s(&m[(r, j)]);
                        m[(i, j)] = m[(i, j)].sub_s(&d);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    /// The unique `x` with `self · x = b`, or `None` when there is no solution or it
    /// is not unique.
    pub fn solve_vec(&self, b: &[T]) -> Option<Vec<T>> {
        if b.len() != self.rows {
            return None;
        }
        let aug = Matrix::from_fn_in(&self.ctx, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() != self.cols || pivots.contains(&self.cols) {
            return None;
        }
        Some((0..self.cols).map(|r| m[(r, self.cols)].clone()).collect())
    }

    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero_in(&self.ctx); self.cols];
            v[free] = T::one_in(&self.ctx);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[(r, free)].neg_s();
            }
            out.push(v);
        }
        out
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one_in(&self.ctx);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero_s()) else {
                return T::zero_in(&self.ctx);
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg_s();
            }
            det = det.mul_s(&m[(c, c)]);
            let inv = m[(c, c)].inv_s().expect("nonzero pivot");
            for i in c + 1..n {
                if !m[(i, c)].is_zero_s() {
                    let f = m[(i, c)].mul_s(&inv);
                    for j in c..n {
                        let d = f.mul_s(&m[(c, j)]);
                        m[(i, j)] = m[(i, j)].sub_s(&d);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn_in(&self.ctx, n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one_in(&self.ctx)
            } else {
                T::zero_in(&self.ctx)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(AlgebraError::Singular);
        }
        aug = r;
        Ok(Matrix::from_fn_in(&self.ctx, n, n, |i, j| aug[(i, j + n)].clone()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| self[(i, j)] == self[(j, i)].conj_s()))
    }

    /// Inertia of a hermitian matrix by congruence pivoting.
    ///
    /// A nonzero diagonal entry is used as a 1×1 pivot. When the remaining diagonal
    /// vanishes but an off-diagonal entry does not, the 2×2 block it spans is a
    /// hyperbolic plane and contributes one positive and one negative direction.
    pub fn hermitian_inertia(&self) -> Result<Inertia, AlgebraError> {
        if !self.is_hermitian() {
            return Err(AlgebraError::NotHermitian);
        }
        let mut m = self.clone();
        let mut active: Vec<usize> = (0..m.rows).collect();
        let mut res = Inertia::default();
        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&i| !m[(i, i)].is_zero_s()) {
                let p = active.remove(pos);
                let d = m[(p, p)].clone();
                match d.real_sign() {
                    1 => res.plus += 1,
                    -1 => res.minus += 1,
                    _ => unreachable!("nonzero real pivot with zero sign"),
                }
                let dinv = d.inv_s().unwrap();
                for &i in &active {
                    if m[(i, p)].is_zero_s() {
                        continue;
                    }
                    let f = m[(i, p)].mul_s(&dinv);
                    for &j in &active {
                        if !m[(p, j)].is_zero_s() {
                            let t = f.mul_s(&m[(p, j)]);
                            m[(i, j)] = m[(i, j)].sub_s(&t);
                        }
                    }
                }
                continue;
            }
            let hit = active.iter().enumerate().find_map(|(a, &i)| {
                active[a + 1..]
                    .iter()
                    .find(|&&j| !m[(i, j)].is_zero_s())
                    .map(|&j| (i, j))
            });
            let Some((i, j)) = hit else {
                res.zero += active.len();
                break;
            };
            active.retain(|&k| k != i && k != j);
            res.plus += 1;
            res.minus += 1;
            // Schur complement of the block [[0, a], [ā, 0]]
            let a_inv = m[(i, j)].inv_s().unwrap();
            let abar_inv = m[(j, i)].inv_s().unwrap();
            let upd: Vec<(usize, usize, T)> = active
                .iter()
                .flat_map(|&k| active.iter().map(move |&l| (k, l)))
                .map(|(k, l)| {
                    let t1 = m[(k, i)].mul_s(&abar_inv).mul_s(&m[(j, l)]);
                    let t2 = m[(k, j)].mul_s(&a_inv).mul_s(&m[(i, l)]);
                    (k, l, m[(k, l)].sub_s(&t1.add_s(&t2)))
                })
                .collect();
            for (k, l, v) in upd {
                m[(k, l)] = v;
            }
        }
        Ok(res)
    }

    /// Ranks of `(M − λ·Id)^k` for `k = 0..=kmax`.
    pub fn rank_profile(&self, lambda: &T, kmax: usize) -> Vec<usize> {
        assert!(self.is_square());
        let n = self.rows;
        let shifted = self.sub(&Matrix::identity_in(&self.ctx, n).scale(lambda));
        let mut out = vec![n];
        let mut pw = Matrix::identity_in(&self.ctx, n);
        for _ in 0..kmax {
            pw = pw.mul(&shifted);
            out.push(pw.rank());
        }
        out
    }
}

/// Number of Jordan blocks of each size `k ≥ 1` from a rank profile.
pub fn jordan_block_counts(ranks: &[usize]) -> Vec<usize> {
    let r = |k: usize| ranks.get(k).copied().unwrap_or(*ranks.last().unwrap());
    (1..ranks.len())
        .map(|k| (r(k - 1) + r(k + 1)) - 2 * r(k))
        .collect()
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::zeros_in(&(), rows, cols)
    }

    pub fn identity(n: usize) -> Self {
        Matrix::identity_in(&(), n)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Rational) -> Self {
        Matrix::from_fn_in(&(), rows, cols, f)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| rows[i][j].clone()))
    }

    pub fn parse_rows(rows: &[Vec<String>]) -> Result<Self, AlgebraError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        QMatrix::from_rows(parsed)
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Lifts into a number field.
    pub fn over(&self, k: &Arc<NumberField>) -> Matrix<FieldElem> {
        self.map(k, |q| FieldElem::from_rational(k, q.clone()))
    }

    /// `det(M − t·Id)` by exact interpolation at `n + 1` integer points.
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let xs: Vec<Rational> = (0..=n as i64).map(int).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|x| self.sub(&QMatrix::identity(n).scale(x)).determinant())
            .collect();
        lagrange(&xs, &ys)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn symmetric_part_times_two(&self) -> Self {
        self.add(&self.transpose())
    }
}

/// Interpolating polynomial through `(xs[i], ys[i])`.
pub fn lagrange(xs: &[Rational], ys: &[Rational]) -> Poly {
    let mut acc = Poly::zero();
    for (i, xi) in xs.iter().enumerate() {
        if ys[i].is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &Poly::new(vec![-xj.clone(), Rational::one()]);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(&ys[i] / denom));
    }
    acc
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn inertia_examples() {
        let m = QMatrix::from_ints(&[&[-4, 2], &[2, -4]]);
        assert_eq!(m.hermitian_inertia().unwrap(), Inertia { plus: 0, minus: 2, zero: 0 });
        let m = QMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.hermitian_inertia().unwrap(), Inertia { plus: 1, minus: 1, zero: 0 });
        let m = QMatrix::from_ints(&[&[2]]);
        assert_eq!(m.hermitian_inertia().unwrap(), Inertia { plus: 1, minus: 0, zero: 0 });
        let m = QMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert_eq!(m.hermitian_inertia().unwrap(), Inertia { plus: 1, minus: 1, zero: 1 });
        assert!(QMatrix::from_ints(&[&[0, 1], &[2, 0]]).hermitian_inertia().is_err());
    }

    #[test]
    fn rank_profiles() {
        let h = QMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(h.rank_profile(&int(1), 3), vec![2, 1, 0, 0]);
        assert_eq!(jordan_block_counts(&[2, 1, 0, 0]), vec![0, 1, 0]);
        let id = QMatrix::identity(2);
        assert_eq!(id.rank_profile(&int(1), 2), vec![2, 0, 0]);
        let k = NumberField::cyclotomic_upper(1, 6);
        let h = QMatrix::from_ints(&[&[1, -1], &[1, 0]]).over(&k);
        let z = FieldElem::generator(&k);
        assert_eq!(h.rank_profile(&z, 2), vec![2, 1, 1]);
    }

    #[test]
    fn inverse_kernel_charpoly() {
        let m = QMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(2));
        let s = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = s.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(s.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        let h = QMatrix::from_ints(&[&[1, -1], &[1, 0]]);
        assert_eq!(h.char_poly(), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(QMatrix::zeros(0, 0).char_poly(), Poly::one());
        assert_eq!(m.determinant(), int(1));
        assert_eq!(QMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(), Err(AlgebraError::Singular));
        let _ = rat(1, 2);
    }

    #[test]
    fn cyclotomic_hermitian() {
        // (1−ζ)S + (1−ζ̄)Sᵀ for the trefoil at ζ = −1 has inertia (0,2,0)
        let k = NumberField::cyclotomic_upper(1, 2);
        let s = QMatrix::from_ints(&[&[-1, 1], &[0, -1]]).over(&k);
        let z = FieldElem::generator(&k);
        let one = FieldElem::from_rational(&k, int(1));
        let h = s.scale(&one.sub(&z)).add(&s.transpose().scale(&one.sub(&z.conj())));
        assert_eq!(h.hermitian_inertia().unwrap().minus, 2);
    }
}
