//! Seifert matrices of torus links and S-equivalence moves on them.

use linkspec_algebra::{int, QMatrix, Rational};
use num_traits::{One, Zero};
use rand::Rng;

use crate::Error;

fn lambda(n: usize) -> QMatrix {
    QMatrix::from_fn(n - 1, n - 1, |i, j| {
        if i == j {
            Rational::one()
        } else if j == i + 1 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Kronecker product.
pub fn kronecker(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let (br, bc) = (b.rows(), b.cols());
    QMatrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        &a[(i / br, j / bc)] * &b[(i % br, j % bc)]
    })
}

/// A Seifert matrix for the torus link `T(p, q)`, of size `(p−1)(q−1)`.
///
/// This is the matrix of the Milnor fibre of `x^p + y^q`, up to the sign making
/// the trefoil `T(2, 3)` come out as `[[−1, 1], [0, −1]]`.
pub fn torus_seifert(p: usize, q: usize) -> Result<QMatrix, Error> {
    if p < 2 || q < 2 {
        return Err(Error::Invalid(format!("torus link T({p}, {q}) needs p, q ≥ 2")));
    }
    Ok(kronecker(&lambda(p), &lambda(q)).neg())
}

fn elementary(n: usize, i: usize, j: usize, c: i64) -> QMatrix {
    let mut e = QMatrix::identity(n);
    e[(i, j)] = int(c);
    e
}

/// A random integral matrix of determinant `±1`, a product of `moves` elementary
/// matrices and one signed permutation.
pub fn random_unimodular<R: Rng>(n: usize, moves: usize, rng: &mut R) -> QMatrix {
    let mut p = QMatrix::identity(n);
    if n == 0 {
        return p;
    }
    for _ in 0..moves {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        p = p.mul(&elementary(n, i, j, c));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let signs: Vec<i64> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let s = QMatrix::from_fn(n, n, |i, j| if perm[i] == j { int(signs[i]) } else { Rational::zero() });
    p.mul(&s)
}

/// One elementary enlargement `S ↦ [[S, ξ, 0], [0, 0, 1], [0, 0, 0]]` (or its transpose
/// pattern), composed with a random unimodular congruence. S-equivalence preserves all
/// invariants computed from the nondegenerate part.
pub fn stabilize<R: Rng>(s: &QMatrix, rng: &mut R) -> QMatrix {
    let n = s.rows();
    let xi: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-2..=2))).collect();
    let column = rng.gen_bool(0.5);
    let big = QMatrix::from_fn(n + 2, n + 2, |i, j| {
        if i < n && j < n {
            s[(i, j)].clone()
        } else if column && i < n && j == n {
            xi[i].clone()
        } else if !column && j < n && i == n {
            xi[j].clone()
        } else if i == n && j == n + 1 {
            if column {
                Rational::one()
            } else {
                Rational::zero()
            }
        } else if i == n + 1 && j == n {
            if column {
                Rational::zero()
            } else {
                Rational::one()
            }
        } else {
            Rational::zero()
        }
    });
    let p = random_unimodular(n + 2, n + 2, rng);
    p.transpose().mul(&big).mul(&p)
}

/// A random congruence `PᵀSP` by a unimodular `P`.
pub fn random_congruence<R: Rng>(s: &QMatrix, rng: &mut R) -> QMatrix {
    let p = random_unimodular(s.rows(), s.rows() + 1, rng);
    p.transpose().mul(s).mul(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trefoil_and_sizes() {
        assert_eq!(torus_seifert(2, 3).unwrap(), QMatrix::from_ints(&[&[-1, 1], &[0, -1]]));
        assert_eq!(torus_seifert(3, 4).unwrap().rows(), 6);
        assert!(torus_seifert(1, 4).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u = random_unimodular(4, 10, &mut rng);
        assert!(num_traits::Signed::abs(&u.determinant()) == Rational::one());
        let s = stabilize(&torus_seifert(2, 3).unwrap(), &mut rng);
        assert_eq!(s.rows(), 4);
        assert!(s.is_integral());
    }
}
