//! Points `e^{2πix}` of the unit circle and spectral values `x + shift`.
//!
//! Jump points of a signature function are roots of the characteristic polynomial.
//! For links of singularities these are roots of unity and `x` is rational, but an
//! arbitrary Seifert matrix can have roots whose angle is irrational. Both cases are
//! stored through the exact trace `c = 2cos(2πx)` and the half of the circle.

use std::cmp::Ordering;
use std::fmt;

use linkspec_algebra::algebraic::two_cos_rational_angle;
use linkspec_algebra::rational::{format_rational, frac, rat, to_f64};
use linkspec_algebra::{RealAlgebraic, Rational};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    /// `x ∈ (0, 1/2]`
    Upper,
    /// `x ∈ (1/2, 1]`
    Lower,
}

/// An angle `x ∈ (0, 1]`, standing for `λ = e^{2πix}`.
#[derive(Clone)]
pub struct Angle {
    trace: RealAlgebraic,
    half: Half,
    exact: Option<Rational>,
}

impl Angle {
    /// From a rational `x`, reduced into `(0, 1]`.
    pub fn from_rational(x: &Rational) -> Angle {
        let mut x = frac(x);
        if x.is_zero() {
            x = Rational::one();
        }
        let (a, m) = (
            x.numer().to_i64().expect("angle numerator"),
            x.denom().to_i64().expect("angle denominator"),
        );
        let half = if x <= rat(1, 2) { Half::Upper } else { Half::Lower };
        Angle {
            trace: two_cos_rational_angle(a, m),
            half,
            exact: Some(x),
        }
    }

    /// From a trace value in `[−2, 2]` and a half.
    pub fn from_trace(trace: RealAlgebraic, half: Half) -> Angle {
        let mut a = Angle {
            trace,
            half,
            exact: None,
        };
        a.exact = a.detect_rational();
        if let Some(x) = &a.exact {
            // normalise the half for the two fixed points of conjugation
            a.half = if *x <= rat(1, 2) { Half::Upper } else { Half::Lower };
        }
        a
    }

    fn detect_rational(&self) -> Option<Rational> {
        let q = self.trace.as_rational()?;
        let x = match q.to_integer().to_i64()? {
            _ if !q.is_integer() => return None,
            2 => Rational::one(),
            1 => rat(1, 6),
            0 => rat(1, 4),
            -1 => rat(1, 3),
            -2 => return Some(rat(1, 2)),
            _ => return None,
        };
        if x.is_one() {
            return Some(x);
        }
        Some(match self.half {
            Half::Upper => x,
            Half::Lower => Rational::one() - x,
        })
    }

    /// The angle of a root of unity `e^{2πi a/m}`, if it is one whose order is known.
    pub fn root_of_unity(a: i64, m: i64) -> Angle {
        Angle::from_rational(&rat(a, m))
    }

    pub fn trace(&self) -> &RealAlgebraic {
        &self.trace
    }

    pub fn half(&self) -> Half {
        self.half
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    /// Root-of-unity order and numerator, `(a, m)` with `x = a/m` in lowest terms.
    pub fn as_root_of_unity(&self) -> Option<(i64, i64)> {
        let x = self.exact.as_ref()?;
        Some((x.numer().to_i64()?, x.denom().to_i64()?))
    }

    pub fn is_one(&self) -> bool {
        self.exact.as_ref().is_some_and(|x| x.is_one())
    }

    /// The conjugate point `1 − x` (with `1` fixed).
    pub fn mirror(&self) -> Angle {
        if self.is_one() || self.exact.as_ref().is_some_and(|x| *x == rat(1, 2)) {
            return self.clone();
        }
        Angle {
            trace: self.trace.clone(),
            half: match self.half {
                Half::Upper => Half::Lower,
                Half::Lower => Half::Upper,
            },
            exact: self.exact.as_ref().map(|x| Rational::one() - x),
        }
    }

    pub fn approx(&self) -> f64 {
        if let Some(x) = &self.exact {
            return to_f64(x);
        }
        let c = self.trace.approx().clamp(-2.0, 2.0);
        let up = (c / 2.0).acos() / (2.0 * std::f64::consts::PI);
        match self.half {
            Half::Upper => up,
            Half::Lower => 1.0 - up,
        }
    }

    /// Compares with a rational `y ∈ (0, 1]`.
    pub fn cmp_rational(&self, y: &Rational) -> Ordering {
        if let Some(x) = &self.exact {
            return x.cmp(y);
        }
        // an irrational angle never equals y; decide numerically when clearly apart
        let d = self.approx() - to_f64(y);
        if d.abs() > 1e-9 {
            return if d < 0.0 { Ordering::Less } else { Ordering::Greater };
        }
        self.cmp(&Angle::from_rational(y))
    }

    fn key_cmp(&self, o: &Angle) -> Ordering {
        match (self.half, o.half) {
            (Half::Upper, Half::Lower) => Ordering::Less,
            (Half::Lower, Half::Upper) => Ordering::Greater,
            (Half::Upper, Half::Upper) => o.trace.cmp(&self.trace),
            (Half::Lower, Half::Lower) => self.trace.cmp(&o.trace),
        }
    }
}

impl PartialEq for Angle {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Angle {}

impl PartialOrd for Angle {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Angle {
    fn cmp(&self, o: &Self) -> Ordering {
        match (&self.exact, &o.exact) {
            (Some(a), Some(b)) => a.cmp(b),
            _ => self.key_cmp(o),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(x) => write!(f, "{}", format_rational(x)),
            None => write!(f, "~{:.12}", self.approx()),
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({self})")
    }
}

/// A real spectral number `x + shift` with `x ∈ (0, 1]` and `shift ∈ {0, 1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpecValue {
    // field order gives the numeric order
    shift: u8,
    angle: Angle,
}

impl SpecValue {
    pub fn new(angle: Angle, shift: u8) -> SpecValue {
        assert!(shift <= 1, "spectral numbers live in (0, 2]");
        SpecValue { shift, angle }
    }

    /// From a rational in `(0, 2]`.
    pub fn from_rational(v: &Rational) -> Option<SpecValue> {
        if *v <= Rational::zero() || *v > Rational::from_integer(2.into()) {
            return None;
        }
        let shift = if *v <= Rational::one() { 0 } else { 1 };
        let x = v - Rational::from_integer(shift.into());
        Some(SpecValue::new(Angle::from_rational(&x), shift as u8))
    }

    pub fn angle(&self) -> &Angle {
        &self.angle
    }

    pub fn shift(&self) -> u8 {
        self.shift
    }

    pub fn exact(&self) -> Option<Rational> {
        self.angle
            .exact()
            .map(|x| x + Rational::from_integer(self.shift.into()))
    }

    pub fn is_integer(&self) -> bool {
        self.angle.is_one()
    }

    /// `⌊value⌋`, which is 0 or 1 except for the value 2.
    pub fn floor(&self) -> i64 {
        self.shift as i64 + if self.angle.is_one() { 1 } else { 0 }
    }

    /// The reflected value `2 − v`.
    pub fn reflect(&self) -> Option<SpecValue> {
        if self.angle.is_one() {
            // 1 ↔ 1, 2 ↦ 0 which is outside the range
            return (self.shift == 0).then(|| self.clone());
        }
        Some(SpecValue::new(self.angle.mirror(), 1 - self.shift))
    }

    pub fn approx(&self) -> f64 {
        self.angle.approx() + self.shift as f64
    }

    /// Compares with a rational in `[0, 2]` (or anywhere on the line).
    pub fn cmp_rational(&self, y: &Rational) -> Ordering {
        let s = Rational::from_integer(self.shift.into());
        if *y <= s {
            return Ordering::Greater;
        }
        if *y > &s + Rational::one() {
            return Ordering::Less;
        }
        self.angle.cmp_rational(&(y - s))
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{}", format_rational(&v)),
            None => write!(f, "~{:.12}", self.approx()),
        }
    }
}

impl fmt::Debug for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Greatest common divisor helper for angle bookkeeping.
pub fn reduced(a: i64, m: i64) -> (i64, i64) {
    let g = a.gcd(&m);
    (a / g, m / g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkspec_algebra::Poly;

    #[test]
    fn ordering_matches_numbers() {
        let xs = [rat(1, 12), rat(1, 6), rat(1, 4), rat(2, 5), rat(1, 2), rat(3, 5), rat(5, 6), rat(1, 1)];
        let angles: Vec<Angle> = xs.iter().map(Angle::from_rational).collect();
        for w in angles.windows(2) {
            assert!(w[0] < w[1]);
            assert!(w[0].key_cmp(&w[1]) == Ordering::Less, "{:?} {:?}", w[0], w[1]);
        }
        assert_eq!(angles[1].mirror(), Angle::from_rational(&rat(5, 6)));
    }

    #[test]
    fn irrational_angles() {
        // trace root of c² − c − 1: golden ratio > 1 gives x ≈ 0.1
        let rs = RealAlgebraic::roots_of(&Poly::from_ints(&[-1, -1, 1]));
        let a = Angle::from_trace(rs[1].clone(), Half::Upper);
        assert!(a.exact().is_none());
        assert!(a < Angle::from_rational(&rat(1, 5)));
        assert!(a > Angle::from_rational(&rat(1, 12)));
        assert_eq!(a.cmp_rational(&rat(1, 5)), Ordering::Less);
        let m = a.mirror();
        assert!(m > Angle::from_rational(&rat(4, 5)));
        assert!((a.approx() + m.approx() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spec_values() {
        let v = SpecValue::from_rational(&rat(7, 6)).unwrap();
        assert_eq!(v.shift(), 1);
        assert_eq!(v.exact(), Some(rat(7, 6)));
        assert_eq!(v.reflect().unwrap().exact(), Some(rat(5, 6)));
        assert!(SpecValue::from_rational(&rat(5, 6)).unwrap() < v);
        let one = SpecValue::from_rational(&rat(1, 1)).unwrap();
        let two = SpecValue::from_rational(&rat(2, 1)).unwrap();
        assert!(one < v && v < two);
        assert_eq!(two.floor(), 2);
        assert_eq!(v.cmp_rational(&rat(3, 2)), Ordering::Less);
        assert_eq!(one.cmp_rational(&rat(1, 1)), Ordering::Equal);
        assert_eq!(Angle::from_trace(RealAlgebraic::rational(rat(0, 1)), Half::Lower).exact(), Some(&rat(3, 4)));
    }
}
