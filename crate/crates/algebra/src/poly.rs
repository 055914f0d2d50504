//! Dense univariate polynomials over ℚ, stored low degree first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{format_rational, int, to_f64, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Integer polynomial with coprime coefficients and positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for n in &nums {
            g = g.gcd(n);
        }
        if nums.last().is_some_and(|n| n.is_negative()) {
            g = -g;
        }
        for n in nums.iter_mut() {
            *n = &*n / &g;
        }
        Poly::new(nums.into_iter().map(Rational::from_integer).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients in reverse order, `t^deg · p(1/t)`.
    pub fn reverse(&self) -> Poly {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    /// True when `p` equals its reverse up to sign, so roots are closed under `λ ↦ 1/λ`.
    pub fn is_self_reciprocal(&self) -> bool {
        if self.is_zero() || self.coeff(0).is_zero() {
            return false;
        }
        let r = self.reverse();
        r == *self || r == -self
    }

    /// Long division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(q), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s·self ≡ g (mod m)`.
    pub fn gcd_ext(&self, m: &Poly) -> (Poly, Poly) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero());
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    /// `self(q(t))`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of `d` as a factor.
    pub fn multiplicity_of(&self, d: &Poly) -> u32 {
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.exact_div(d) {
            p = q;
            m += 1;
        }
        m
    }

    /// True when `self = u·other` for a nonzero rational `u`.
    pub fn associated(&self, other: &Poly) -> bool {
        self.monic() == other.monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", format_rational(&a))?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The d-th cyclotomic polynomial, from `t^d − 1 = Π_{e | d} Φ_e`.
pub fn cyclotomic(d: u64) -> Poly {
    let mut p = &Poly::monomial(Rational::one(), d as usize) - &Poly::one();
    for e in divisors(d) {
        if e < d {
            p = p.exact_div(&cyclotomic(e)).expect("cyclotomic recursion");
        }
    }
    p
}

/// Splits off every cyclotomic factor. Returns the multiplicity of each Φ_d
/// together with the cofactor, which carries the leading coefficient.
pub fn cyclotomic_factor(p: &Poly) -> (BTreeMap<u64, u32>, Poly) {
    assert!(!p.is_zero(), "cyclotomic_factor of the zero polynomial");
    let mut rem = p.clone();
    let mut found = BTreeMap::new();
    let n = p.deg() as u64;
    if n == 0 {
        return (found, rem);
    }
    // φ(d) ≥ sqrt(d/2), so φ(d) ≤ n forces d ≤ 2n².
    for d in 1..=(2 * n * n).max(2) {
        let phi = euler_phi(d);
        if phi > rem.deg() as u64 {
            continue;
        }
        let cd = cyclotomic(d);
        let m = rem.multiplicity_of(&cd);
        if m > 0 {
            for _ in 0..m {
                rem = rem.exact_div(&cd).unwrap();
            }
            found.insert(d, m);
        }
    }
    (found, rem)
}

/// Yun's square-free decomposition: `p = lc · Π a_i^i` with the `a_i` monic,
/// square-free and pairwise coprime. Only nonconstant parts are returned.
pub fn square_free(p: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let pm = p.monic();
    let dp = pm.derivative();
    let a0 = pm.gcd(&dp);
    let mut b = pm.exact_div(&a0).unwrap();
    let mut c = dp.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Numeric roots by the Aberth–Ehrlich iteration followed by Newton polishing.
pub fn complex_roots(p: &Poly) -> Vec<Complex64> {
    let n = p.deg();
    if n == 0 {
        return Vec::new();
    }
    let lc = to_f64(&p.lc());
    let a: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| Complex64::new(to_f64(c) / lc, 0.0))
        .collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in a.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };
    let radius = 1.0 + a[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius.min(2.0) * 0.9 + 0.05 * k as f64 / n as f64, th)
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = eval(*zi);
            if dv.norm() > 0.0 {
                let step = v / dv;
                if step.is_finite() {
                    *zi -= step;
                }
            }
        }
    }
    z
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    // enumerates k-subsets of 1..n (index 0 is always included by the caller)
    let mut idx: Vec<usize> = (1..=k).collect();
    if k == 0 {
        f(&idx);
        return;
    }
    if k > n.saturating_sub(1) {
        return;
    }
    loop {
        if f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn round_to_integer_poly(lc: f64, roots: &[Complex64]) -> Option<Poly> {
    let mut c = vec![Complex64::new(lc, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= ck * r;
        }
        c = next;
    }
    let mut out = Vec::with_capacity(c.len());
    for ck in c {
        let scale = 1.0 + ck.re.abs();
        if ck.im.abs() > 1e-6 * scale || (ck.re - ck.re.round()).abs() > 1e-5 * scale {
            return None;
        }
        out.push(Rational::from_integer(BigInt::from(ck.re.round() as i128)));
    }
    Some(Poly::new(out))
}

/// Factorisation of a square-free polynomial into monic irreducible factors.
///
/// Numeric roots are grouped into candidate factors, and each candidate is
/// accepted only after exact division succeeds.
pub fn irreducible_factors_squarefree(p: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut q = p.primitive();
    // peel off rational roots first
    let t = Poly::t();
    while q.deg() >= 1 && q.coeff(0).is_zero() {
        q = q.exact_div(&t).unwrap();
        out.push(t.clone());
    }
    let mut roots = complex_roots(&q);
    while q.deg() > 1 {
        let n = roots.len();
        let lc = to_f64(&q.lc());
        let mut hit: Option<(Poly, Vec<usize>)> = None;
        for k in 1..n {
            combinations(n, k - 1, |rest| {
                let mut sel = vec![0usize];
                sel.extend_from_slice(rest);
                let sum: Complex64 = sel.iter().map(|&i| roots[i]).sum();
                let tr = sum * lc;
                if tr.im.abs() > 1e-6 * (1.0 + tr.re.abs())
                    || (tr.re - tr.re.round()).abs() > 1e-5 * (1.0 + tr.re.abs())
                {
                    return false;
                }
                let rs: Vec<Complex64> = sel.iter().map(|&i| roots[i]).collect();
                if let Some(cand) = round_to_integer_poly(lc, &rs) {
                    let cand = cand.primitive();
                    if cand.deg() == k && q.exact_div(&cand).is_some() {
                        hit = Some((cand, sel));
                        return true;
                    }
                }
                false
            });
            if hit.is_some() {
                break;
            }
        }
        match hit {
            Some((f, sel)) => {
                q = q.exact_div(&f).unwrap().primitive();
                out.push(f.monic());
                let mut keep = Vec::new();
                for (i, r) in roots.iter().enumerate() {
                    if !sel.contains(&i) {
                        keep.push(*r);
                    }
                }
                roots = keep;
            }
            None => break,
        }
    }
    if q.deg() >= 1 {
        out.push(q.monic());
    }
    out
}

/// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
pub fn factor(p: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    for (part, m) in square_free(p) {
        for f in irreducible_factors_squarefree(&part) {
            out.push((f, m));
        }
    }
    out.sort_by(|a, b| poly_order(&a.0, &b.0));
    out
}

/// A total order on polynomials: degree first, then coefficients from the top.
pub fn poly_order(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        for k in (0..=a.deg()).rev() {
            let o = a.coeff(k).cmp(&b.coeff(k));
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Sturm sequence of a square-free polynomial.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        // positive rescaling keeps sign changes intact
        let s = r.primitive();
        let s = if r.lc().is_negative() == s.lc().is_negative() { -s } else { s };
        seq.push(s);
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_real_roots(seq: &[Poly], lo: &Rational, hi: &Rational) -> usize {
    sign_changes(seq, lo) - sign_changes(seq, hi)
}

/// Trace polynomial: for self-reciprocal `f` of even degree `2e`,
/// the unique `g` of degree `e` with `f(t) = t^e · g(t + 1/t)`.
pub fn trace_polynomial(f: &Poly) -> Option<Poly> {
    let n = f.deg();
    if n % 2 != 0 || f.reverse() != *f {
        return None;
    }
    let e = n / 2;
    let c = Poly::t();
    // D_0 = 2, D_1 = c, D_{j+1} = c·D_j − D_{j−1}, with t^j + t^{-j} = D_j(t + 1/t)
    let mut g = Poly::constant(f.coeff(e));
    let mut d_prev = Poly::constant(int(2));
    let mut d_cur = c.clone();
    for j in 1..=e {
        g = &g + &d_cur.scale(&f.coeff(e + j));
        let next = &(&c * &d_cur) - &d_prev;
        d_prev = d_cur;
        d_cur = next;
    }
    Some(g)
}

/// Chebyshev-type polynomials `D_k` with `D_k(t + 1/t) = t^k + t^{-k}` and `D_0 = 2`.
pub fn dickson_polys(count: usize) -> Vec<Poly> {
    let c = Poly::t();
    let mut out = Vec::with_capacity(count);
    let mut a = Poly::constant(int(2));
    let mut b = c.clone();
    for _ in 0..count {
        out.push(a.clone());
        let next = &(&c * &b) - &a;
        a = b;
        b = next;
    }
    out
}

/// Upper bound on the absolute value of any root (Cauchy).
pub fn root_bound(p: &Poly) -> Rational {
    let lc = p.lc().abs();
    let mut m = Rational::zero();
    for c in &p.coeffs()[..p.deg()] {
        let r = c.abs() / &lc;
        if r > m {
            m = r;
        }
    }
    m + Rational::one()
}

/// `p` with integer coefficients, as machine integers when they fit.
pub fn to_i64_coeffs(p: &Poly) -> Option<Vec<i64>> {
    p.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(15).deg(), 8);
    }

    #[test]
    fn cyclotomic_factor_examples() {
        let (m, r) = cyclotomic_factor(&p(&[1, -1, 1]));
        assert_eq!(m, BTreeMap::from([(6, 1)]));
        assert_eq!(r, Poly::one());
        let f = &p(&[-1, 0, 1]) * &p(&[1, 1, 1]);
        let (m, r) = cyclotomic_factor(&f);
        assert_eq!(m, BTreeMap::from([(1, 1), (2, 1), (3, 1)]));
        assert_eq!(r, Poly::one());
        let (m, r) = cyclotomic_factor(&p(&[1, -3, 1]));
        assert!(m.is_empty());
        assert_eq!(r, p(&[1, -3, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 0, 1]) * &p(&[2, 1]);
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, &p(&[1, 1]) * &p(&[2, 1]));
        assert_eq!(a.gcd(&p(&[1, 2, 1])), p(&[1, 1]));
        let (g, s) = p(&[1, 1]).gcd_ext(&p(&[1, 0, 1]));
        assert_eq!(g, Poly::one());
        assert_eq!((&s * &p(&[1, 1])).rem(&p(&[1, 0, 1])), Poly::one());
    }

    #[test]
    fn square_free_parts() {
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[1, 1])) * &p(&[1, 0, 1]).pow(2);
        let parts = square_free(&f.scale(&rat(3, 2)));
        assert_eq!(
            parts,
            vec![(p(&[1, 1]), 1), (p(&[1, 0, 1]), 2), (p(&[-1, 1]), 3)]
        );
    }

    #[test]
    fn factorisation() {
        let f = &(&p(&[1, -3, 1]) * &p(&[2, 0, 0, 1])) * &p(&[1, 1, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(Poly::one(), |acc, (g, m)| &acc * &g.pow(*m));
        assert_eq!(prod, f.monic());
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(factor(&lehmer), vec![(lehmer.clone(), 1)]);
    }

    #[test]
    fn trace_and_sturm() {
        let g = trace_polynomial(&p(&[1, -1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        let g = trace_polynomial(&cyclotomic(5)).unwrap();
        assert_eq!(g, p(&[-1, 1, 1]));
        let seq = sturm_sequence(&g);
        assert_eq!(count_real_roots(&seq, &int(-2), &int(2)), 2);
        assert_eq!(count_real_roots(&seq, &int(0), &int(2)), 1);
        let d = dickson_polys(4);
        assert_eq!(d[3], p(&[0, -3, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2t");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
