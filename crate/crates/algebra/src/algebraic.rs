//! Real algebraic numbers: an irreducible polynomial plus an isolating interval.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::poly::{count_real_roots, root_bound, sturm_sequence, Poly};
use crate::rational::{int, rat, sign, to_f64, Rational};

/// A real root of an irreducible integer polynomial.
///
/// `index` is the position of the root among all real roots in ascending order,
/// so two values with the same polynomial are equal exactly when their indices are.
/// The interval `(lo, hi]` contains this root and no other; for degree one it is a point.
#[derive(Clone)]
pub struct RealAlgebraic {
    poly: Poly,
    index: usize,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    pub fn rational(q: Rational) -> Self {
        let poly = Poly::new(vec![-q.clone(), Rational::one()]);
        RealAlgebraic {
            poly,
            index: 0,
            lo: q.clone(),
            hi: q,
        }
    }

    /// Every real root of an irreducible polynomial, ascending.
    pub fn roots_of(p: &Poly) -> Vec<RealAlgebraic> {
        let poly = p.primitive();
        if poly.deg() == 0 {
            return Vec::new();
        }
        if poly.deg() == 1 {
            let q = -poly.coeff(0) / poly.coeff(1);
            return vec![RealAlgebraic::rational(q)];
        }
        let seq = sturm_sequence(&poly);
        let b = root_bound(&poly);
        let mut out = Vec::new();
        isolate(&seq, -b.clone(), b, &mut out);
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.into_iter()
            .enumerate()
            .map(|(index, (lo, hi))| RealAlgebraic {
                poly: poly.clone(),
                index,
                lo,
                hi,
            })
            .collect()
    }

    /// Real roots strictly inside `(a, b)`.
    pub fn roots_in(p: &Poly, a: &Rational, b: &Rational) -> Vec<RealAlgebraic> {
        let mut out = Vec::new();
        for mut r in RealAlgebraic::roots_of(p) {
            if r.cmp_rational(a) == Ordering::Greater && r.cmp_rational(b) == Ordering::Less {
                r.refine_until_inside(a, b);
                out.push(r);
            }
        }
        out
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.poly.deg() == 1).then(|| self.lo.clone())
    }

    pub fn approx(&self) -> f64 {
        if self.poly.deg() == 1 {
            return to_f64(&self.lo);
        }
        let mut r = self.clone();
        while to_f64(&(&r.hi - &r.lo)) > 1e-15 * (1.0 + to_f64(&r.hi).abs()) {
            r.bisect();
        }
        to_f64(&((&r.lo + &r.hi) / int(2)))
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        if self.poly.deg() <= 1 {
            return;
        }
        let mid = (&self.lo + &self.hi) / int(2);
        let s_mid = sign(&self.poly.eval(&mid));
        if s_mid == 0 {
            // irreducible of degree ≥ 2 has no rational root
            unreachable!("rational root of an irreducible polynomial");
        }
        let s_hi = sign(&self.poly.eval(&self.hi));
        if s_mid == s_hi {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Shrinks the interval until its width is below `eps`.
    pub fn refine_to(&mut self, eps: &Rational) {
        while &(&self.hi - &self.lo) > eps {
            self.bisect();
        }
    }

    fn refine_until_inside(&mut self, a: &Rational, b: &Rational) {
        while self.poly.deg() > 1 && (&self.lo < a || &self.hi >= b) {
            self.bisect();
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if self.poly.deg() == 1 {
            return self.lo.cmp(q);
        }
        if &self.hi < q {
            return Ordering::Less;
        }
        if &self.lo >= q {
            return Ordering::Greater;
        }
        let sq = sign(&self.poly.eval(q));
        assert!(sq != 0, "rational root of an irreducible polynomial");
        if sq == sign(&self.poly.eval(&self.hi)) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Sign of `p(self)` for an arbitrary rational polynomial `p`.
    pub fn sign_of(&self, p: &Poly) -> i32 {
        if let Some(q) = self.as_rational() {
            return sign(&p.eval(&q));
        }
        let red = p.rem(&self.poly);
        if red.is_zero() {
            return 0;
        }
        let mut r = self.clone();
        loop {
            let (a, b) = eval_interval(&red, &r.lo, &r.hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            r.bisect();
        }
    }

    /// An exact rational strictly between `self` and a larger value `other`.
    pub fn rational_between(&self, other: &RealAlgebraic) -> Rational {
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return (&a.hi + &b.lo) / int(2);
            }
            if a.hi == b.lo && a.as_rational().is_none() && b.as_rational().is_none() {
                return a.hi.clone();
            }
            a.bisect();
            b.bisect();
        }
    }
}

fn isolate(seq: &[Poly], lo: Rational, hi: Rational, out: &mut Vec<(Rational, Rational)>) {
    let n = count_real_roots(seq, &lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((lo, hi));
        return;
    }
    let mid = (&lo + &hi) / int(2);
    isolate(seq, lo, mid.clone(), out);
    isolate(seq, mid, hi, out);
}

/// Interval Horner evaluation over `[lo, hi]`.
pub fn eval_interval(p: &Poly, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for c in p.coeffs().iter().rev() {
        let prods = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mn = prods.iter().min().unwrap().clone();
        let mx = prods.iter().max().unwrap().clone();
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.index == other.index
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if self.poly == other.poly {
            return self.index.cmp(&other.index);
        }
        if let Some(q) = other.as_rational() {
            return self.cmp_rational(&q);
        }
        if let Some(q) = self.as_rational() {
            return other.cmp_rational(&q).reverse();
        }
        // distinct minimal polynomials: the values differ, so refining separates them
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.bisect();
            b.bisect();
        }
    }
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "root#{} of {} ≈ {:.12}", self.index, self.poly, self.approx()),
        }
    }
}

/// `2·cos(2π a / m)` as an exact real algebraic number.
pub fn two_cos_rational_angle(a: i64, m: i64) -> RealAlgebraic {
    use num_integer::Integer;
    let m = m.abs();
    let mut a = a.rem_euclid(m);
    let g = a.gcd(&m);
    a /= g;
    let m = m / g;
    if a > m / 2 || (m % 2 == 0 && a == m / 2 && m != 2) {
        a = m - a;
    }
    match m {
        1 => return RealAlgebraic::rational(int(2)),
        2 => return RealAlgebraic::rational(int(-2)),
        3 => return RealAlgebraic::rational(int(-1)),
        4 => return RealAlgebraic::rational(int(0)),
        6 => return RealAlgebraic::rational(int(1)),
        _ => {}
    }
    let phi = crate::poly::cyclotomic(m as u64);
    let g = crate::poly::trace_polynomial(&phi).expect("cyclotomic polynomials are palindromic");
    // roots 2cos(2πb/m), gcd(b,m)=1, 0<b<m/2, are decreasing in b
    let bs: Vec<i64> = (1..m).filter(|b| 2 * b < m && b.gcd(&m) == 1).collect();
    let pos = bs.iter().position(|&b| b == a).expect("reduced numerator");
    let roots = RealAlgebraic::roots_of(&g);
    roots[roots.len() - 1 - pos].clone()
}

/// Shorthand used in tests.
pub fn ra(q: (i64, i64)) -> RealAlgebraic {
    RealAlgebraic::rational(rat(q.0, q.1))
}
