//! Keef normal form `S ≅ 0_Irr ⊕ S_ndeg` up to S-equivalence, and the variation
//! structure of the nondegenerate part.

use linkspec_algebra::{QMatrix, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// One move of the reduction, recorded so that it can be replayed.
#[derive(Clone, Debug, PartialEq)]
pub enum KeefStep {
    /// `v` lies in `ker S ∩ ker Sᵀ`; after moving it to the last basis slot its
    /// zero row and column are dropped.
    SplitCommonKernel { vector: Vec<Rational> },
    /// Inverse of a column expansion: `vᵀS = 0`, `wᵀSv = 1`, and the matrix is
    /// restricted to `basis`, a complement of `v` in `{x : xᵀSv = 0}`.
    Reduction {
        kernel: Vec<Rational>,
        dual: Vec<Rational>,
        basis: Vec<Vec<Rational>>,
    },
    /// A unimodular congruence `S ↦ PᵀSP` chosen to keep entries small.
    SizeReduction { basis: QMatrix },
}

#[derive(Clone, Debug)]
pub struct KeefDecomposition {
    pub irr: usize,
    pub s_ndeg: QMatrix,
    pub reduction_moves: usize,
    pub steps: Vec<KeefStep>,
}

/// The positive multiple of `v` with coprime integer entries. Rescaling basis
/// vectors is a rational congruence, so nothing downstream changes, and integral
/// input stays integral with modest entries.
fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let mut den = BigInt::one();
    for x in &v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// A basis of `{x : uᵀx = 0}` pivoting on the entry of `u` of least absolute value,
/// so that it is integral and unimodular whenever that entry is `±1`.
fn hyperplane_basis(u: &[Rational]) -> Vec<Vec<Rational>> {
    let n = u.len();
    let i = smallest_nonzero(u).expect("nonzero normal vector");
    (0..n)
        .filter(|&j| j != i)
        .map(|j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            e[i] = -(&u[j] / &u[i]);
            primitive(e)
        })
        .collect()
}

fn smallest_nonzero(v: &[Rational]) -> Option<usize> {
    (0..v.len()).filter(|&i| !v[i].is_zero()).min_by(|&a, &b| v[a].abs().cmp(&v[b].abs()))
}

/// Basis change whose last column is `v` and whose other columns are unit vectors.
fn completion_with_last(v: &[Rational]) -> QMatrix {
    let n = v.len();
    let p = smallest_nonzero(v).expect("nonzero vector");
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for i in 0..n {
        if i != p {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            cols.push(e);
        }
    }
    cols.push(v.to_vec());
    QMatrix::from_columns(&(), n, &cols)
}

fn is_integral(s: &QMatrix) -> bool {
    (0..s.rows()).all(|i| (0..s.cols()).all(|j| s[(i, j)].is_integer()))
}

/// Euclid on the entries of an integral vector by column operations on the
/// identity: returns `U` unimodular and `p` with `uᵀU` supported on entry `p`.
fn euclid_columns(u: &[Rational]) -> (QMatrix, usize) {
    let n = u.len();
    let mut r = u.to_vec();
    let mut m = QMatrix::identity(n);
    loop {
        let p = smallest_nonzero(&r).expect("nonzero vector");
        let mut done = true;
        for j in 0..n {
            if j == p || r[j].is_zero() {
                continue;
            }
            let q = (&r[j] / &r[p]).round();
            r[j] = &r[j] - &q * &r[p];
            for row in 0..n {
                let v = &m[(row, j)] - &q * &m[(row, p)];
                m[(row, j)] = v;
            }
            done = false;
        }
        if done {
            return (m, p);
        }
    }
}

/// Integral basis of `{x ∈ ℤⁿ : uᵀx = 0}` for integral `u ≠ 0`.
fn integral_hyperplane_basis(u: &[Rational]) -> Vec<Vec<Rational>> {
    let (m, p) = euclid_columns(u);
    (0..u.len())
        .filter(|&j| j != p)
        .map(|j| (0..u.len()).map(|r| m[(r, j)].clone()).collect())
        .collect()
}

/// Unimodular matrix whose last column is the primitive integral vector `c`.
fn integral_completion(c: &[Rational]) -> QMatrix {
    let n = c.len();
    // cᵀU = ±e_pᵀ, so the p-th column of (U⁻¹)ᵀ is ±c
    let (u, p) = euclid_columns(c);
    let m = u.inverse().expect("unimodular").transpose();
    let sign = c.iter().zip(0..n).map(|(x, r)| x * &u[(r, p)]).fold(Rational::zero(), |a, b| a + b);
    let mut cols: Vec<Vec<Rational>> = (0..n)
        .filter(|&j| j != p)
        .map(|j| (0..n).map(|r| m[(r, j)].clone()).collect())
        .collect();
    cols.push((0..n).map(|r| &m[(r, p)] * &sign).collect());
    QMatrix::from_columns(&(), n, &cols)
}

fn to_i128(s: &QMatrix) -> Option<Vec<Vec<i128>>> {
    (0..s.rows())
        .map(|i| (0..s.cols()).map(|j| s[(i, j)].to_integer().to_i128()).collect())
        .collect()
}

fn checked_sq_sum(xs: impl IntoIterator<Item = Option<i128>>) -> Option<i128> {
    xs.into_iter().try_fold(0i128, |acc, x| acc.checked_add(x?.checked_mul(x?)?))
}

/// Sum of squares of row `i` and column `i` after `e_i ↦ e_i + k e_j`.
fn sheared_norm(s: &[Vec<i128>], i: usize, j: usize, k: i128) -> Option<i128> {
    let n = s.len();
    let off = (0..n).filter(|&l| l != i).flat_map(|l| {
        [
            k.checked_mul(s[j][l]).and_then(|x| x.checked_add(s[i][l])),
            k.checked_mul(s[l][j]).and_then(|x| x.checked_add(s[l][i])),
        ]
    });
    let d = s[i][j]
        .checked_add(s[j][i])
        .and_then(|x| x.checked_mul(k))
        .and_then(|x| x.checked_add(k.checked_mul(k)?.checked_mul(s[j][j])?))
        .and_then(|x| x.checked_add(s[i][i]));
    checked_sq_sum(off.chain(std::iter::once(d)))
}

/// Greedy integral shears `e_i ↦ e_i + k e_j` that lower the sum of squared
/// entries of an integral matrix. Returns the reduced matrix and the basis
/// change, or `None` if nothing moved or the entries do not fit machine words.
fn size_reduce(s: &QMatrix) -> Option<(QMatrix, QMatrix)> {
    if !is_integral(s) {
        return None;
    }
    let n = s.rows();
    let mut cur = to_i128(s)?;
    let mut p: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut changed = false;
    for _sweep in 0..32 {
        let mut improved = false;
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                // least squares estimate for k from the off-diagonal part of row and column i
                let (mut ab, mut bb) = (0f64, 0f64);
                for l in (0..n).filter(|&l| l != i && l != j) {
                    let (a, b, c, d) = (cur[i][l] as f64, cur[j][l] as f64, cur[l][i] as f64, cur[l][j] as f64);
                    ab += a * b + c * d;
                    bb += b * b + d * d;
                }
                if bb == 0.0 {
                    continue;
                }
                let k = (-ab / bb).round() as i128;
                if k == 0 {
                    continue;
                }
                match (sheared_norm(&cur, i, j, k), sheared_norm(&cur, i, j, 0)) {
                    (Some(new), Some(old)) if new < old => {}
                    (Some(_), Some(_)) => continue,
                    _ => return None,
                }
                for l in 0..n {
                    cur[i][l] += k * cur[j][l];
                }
                for l in 0..n {
                    cur[l][i] += k * cur[l][j];
                }
                for row in p.iter_mut() {
                    row[i] += k * row[j];
                }
                improved = true;
                changed = true;
            }
        }
        if !improved {
            break;
        }
    }
    let back = |m: &[Vec<i128>]| QMatrix::from_fn(n, n, |i, j| Rational::from_integer(BigInt::from(m[i][j])));
    changed.then(|| (back(&cur), back(&p)))
}

/// Reduces `S` to `0 ⊕ S_ndeg`.
pub fn keef_reduce(s: &QMatrix) -> Result<KeefDecomposition, Error> {
    if !s.is_square() {
        return Err(Error::Invalid("Seifert matrix must be square".into()));
    }
    let mut cur = s.clone();
    let mut irr = 0;
    let mut moves = 0;
    let mut steps = Vec::new();
    loop {
        let n = cur.rows();
        if n == 0 {
            break;
        }
        // ker S ∩ ker Sᵀ sits inside ker Sᵀ, so only the small system S·K·c = 0 is needed
        let left = cur.transpose().kernel();
        if left.is_empty() {
            break;
        }
        let kmat = QMatrix::from_columns(&(), n, &left);
        if let Some(c) = cur.mul(&kmat).kernel().into_iter().next() {
            let v = primitive(kmat.mul_vec(&c));
            let p = if is_integral(&cur) { integral_completion(&v) } else { completion_with_last(&v) };
            let t = p.transpose().mul(&cur).mul(&p);
            let keep: Vec<usize> = (0..n - 1).collect();
            debug_assert!((0..n).all(|i| t[(i, n - 1)].is_zero() && t[(n - 1, i)].is_zero()));
            cur = t.select(&keep, &keep);
            irr += 1;
            steps.push(KeefStep::SplitCommonKernel { vector: v });
            continue;
        }
        let v = primitive(left.into_iter().next().expect("degenerate"));
        let u = cur.mul_vec(&v);
        let i = u.iter().position(|x| !x.is_zero()).expect("common kernel is trivial");
        let mut w = vec![Rational::zero(); n];
        w[i] = u[i].recip();
        // restrict to u^⊥, where v spans the common kernel, then split v off
        let integral = is_integral(&cur);
        let lattice = if integral { integral_hyperplane_basis(&u) } else { hyperplane_basis(&u) };
        let lmat = QMatrix::from_columns(&(), n, &lattice);
        let restricted = lmat.transpose().mul(&cur).mul(&lmat);
        let c = lmat
            .solve_vec(&v)
            .ok_or_else(|| Error::Inconsistent("kernel vector outside u^⊥".into()))?;
        let c = primitive(c);
        let p = if integral { integral_completion(&c) } else { completion_with_last(&c) };
        let t = p.transpose().mul(&restricted).mul(&p);
        let keep: Vec<usize> = (0..n - 2).collect();
        cur = t.select(&keep, &keep);
        let basis: Vec<Vec<Rational>> = {
            let b = lmat.mul(&p);
            (0..n - 2).map(|j| (0..n).map(|r| b[(r, j)].clone()).collect()).collect()
        };
        moves += 1;
        steps.push(KeefStep::Reduction {
            kernel: v,
            dual: w,
            basis,
        });
        if let Some((reduced, p)) = size_reduce(&cur) {
            cur = reduced;
            steps.push(KeefStep::SizeReduction { basis: p });
        }
    }
    Ok(KeefDecomposition {
        irr,
        s_ndeg: cur,
        reduction_moves: moves,
        steps,
    })
}

/// Hermitian variation structure `(U; b, h, V)` of a nondegenerate Seifert matrix.
#[derive(Clone, Debug)]
pub struct Hvs {
    pub n: usize,
    pub b: QMatrix,
    pub h: QMatrix,
    pub v: QMatrix,
    pub epsilon: i32,
}

impl Hvs {
    /// `V·b = h − Id`, `Vᵀ = V·hᵀ` and `hᵀ·b·h = b`.
    pub fn identities_hold(&self) -> bool {
        let id = QMatrix::identity(self.n);
        self.v.mul(&self.b) == self.h.sub(&id)
            && self.v.transpose() == self.v.mul(&self.h.transpose())
            && self.h.transpose().mul(&self.b).mul(&self.h) == self.b
    }
}

pub fn hvs_of(s_ndeg: &QMatrix) -> Result<Hvs, Error> {
    let v = s_ndeg
        .transpose()
        .inverse()
        .map_err(|_| Error::Invalid("hvs_of needs a nondegenerate matrix".into()))?;
    let h = v.mul(s_ndeg);
    let b = s_ndeg.sub(&s_ndeg.transpose());
    Ok(Hvs {
        n: s_ndeg.rows(),
        b,
        h,
        v,
        epsilon: -1,
    })
}
