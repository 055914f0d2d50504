//! Tristram–Levine signatures `σ(ζ)` and nullities of `(1−ζ)S + (1−ζ̄)Sᵀ`.

use std::sync::Arc;

use linkspec_algebra::rational::{frac, rat};
use linkspec_algebra::{int, FieldElem, Inertia, Matrix, NumberField, QMatrix, Rational, RealAlgebraic};
use num_traits::{One, ToPrimitive, Zero};

use super::angle::{Angle, Half};
use super::charpoly::CharPolyData;
use crate::Error;

/// The hermitian form `(1−ζ)S + (1−ζ̄)Sᵀ` with `ζ` the generator of `k`.
pub fn tl_form(s: &QMatrix, k: &Arc<NumberField>) -> Matrix<FieldElem> {
    let z = FieldElem::generator(k);
    let one = FieldElem::from_rational(k, Rational::one());
    let a = one.sub(&z);
    let b = one.sub(&z.conj());
    let sk = s.over(k);
    sk.scale(&a).add(&sk.transpose().scale(&b))
}

pub fn inertia_in(s: &QMatrix, k: &Arc<NumberField>) -> Inertia {
    tl_form(s, k)
        .hermitian_inertia()
        .expect("the Tristram–Levine form is hermitian")
}

/// The field of the point `e^{2πix}` (or of its conjugate) for rational `x ∈ (0, 1)`.
pub fn field_at_rational(x: &Rational) -> Arc<NumberField> {
    let x = if *x > rat(1, 2) { Rational::one() - x } else { x.clone() };
    let (a, m) = (x.numer().to_i64().unwrap(), x.denom().to_i64().unwrap());
    NumberField::cyclotomic_upper(a, m)
}

/// The field of a point given by its trace `c ∈ [−2, 2)`.
pub fn field_at_trace(c: &RealAlgebraic, modulus: Option<&linkspec_algebra::Poly>) -> Arc<NumberField> {
    if let Some(q) = c.as_rational() {
        if q == int(-2) {
            return NumberField::cyclotomic_upper(1, 2);
        }
        if modulus.is_none_or(|f| f.deg() == 2) {
            return NumberField::quadratic_circle_point(&q);
        }
    }
    let f = modulus.expect("irrational trace needs its modulus");
    NumberField::with_circle_root(f, c.clone()).expect("valid circle embedding")
}

/// Signature and nullity at a rational angle, straight from the definition.
///
/// Returns `(σ, n, ñ)`. At `x ∈ {0, 1}` the signature is 0 and `ñ` is the
/// multiplicity of 1 as a root of `Δ^h`.
pub fn tristram_levine_with(s: &QMatrix, x: &Rational, cpd: &CharPolyData) -> (i64, usize, usize) {
    let xf = frac(x);
    if xf.is_zero() {
        let m1 = cpd.multiplicity_of_one() as usize;
        return (0, m1 + cpd.irr, m1);
    }
    let k = field_at_rational(&xf);
    let i = inertia_in(s, &k);
    (i.signature(), i.zero, i.zero - cpd.irr)
}

/// Jump point of the signature function together with its exact value there.
#[derive(Clone, Debug, PartialEq)]
pub struct JumpPoint {
    pub angle: Angle,
    pub sigma: i64,
    /// Nullity of the Seifert form itself (including the irregular part).
    pub nullity: usize,
}

/// Piecewise constant signature on `(0, 1)`.
///
/// `plateaus[i]` is the value between `jumps[i-1]` and `jumps[i]`, with the
/// obvious conventions at both ends, so there is one more plateau than jump.
#[derive(Clone, Debug, PartialEq)]
pub struct SignatureProfile {
    pub jumps: Vec<JumpPoint>,
    pub plateaus: Vec<i64>,
    pub irr: usize,
}

impl SignatureProfile {
    pub fn jump_index(&self, a: &Angle) -> Option<usize> {
        self.jumps.iter().position(|j| j.angle == *a)
    }

    /// `σ(x₀⁺) − σ(x₀⁻)` at the `i`-th jump.
    pub fn jump(&self, i: usize) -> i64 {
        self.plateaus[i + 1] - self.plateaus[i]
    }

    /// `σ(1⁻)`, the value just below the point 1.
    pub fn sigma_before_one(&self) -> i64 {
        *self.plateaus.last().unwrap()
    }

    /// `(σ, n)` at a rational `x ∈ [0, 1]` from the stored profile.
    pub fn value_at(&self, x: &Rational) -> (i64, usize) {
        let xf = frac(x);
        if xf.is_zero() {
            return (0, usize::MAX);
        }
        let mut plateau = 0;
        for (i, j) in self.jumps.iter().enumerate() {
            match j.angle.cmp_rational(&xf) {
                std::cmp::Ordering::Less => plateau = i + 1,
                std::cmp::Ordering::Equal => return (j.sigma, j.nullity),
                std::cmp::Ordering::Greater => break,
            }
        }
        (self.plateaus[plateau], self.irr)
    }
}

struct UpperPoint {
    angle: Angle,
}

fn field_for_angle(a: &Angle, cpd: &CharPolyData) -> Arc<NumberField> {
    if let Some((num, den)) = a.as_root_of_unity() {
        return NumberField::cyclotomic_upper(num, den);
    }
    let f = cpd.factor_of(a).expect("root belongs to a factor");
    field_at_trace(a.trace(), Some(&f.poly))
}

fn plateau_value(s: &QMatrix, samples: &[RealAlgebraic]) -> Result<i64, Error> {
    let mut value = None;
    for c in samples {
        let k = field_at_trace(c, None);
        let i = inertia_in(s, &k);
        if i.zero != 0 {
            return Err(Error::Inconsistent(format!(
                "degenerate form at a sample point {c:?} away from the roots of Δ^h"
            )));
        }
        match value {
            None => value = Some(i.signature()),
            Some(v) if v != i.signature() => {
                return Err(Error::Inconsistent(format!(
                    "signature not constant on a gap: {v} vs {} at {c:?}",
                    i.signature()
                )))
            }
            _ => {}
        }
    }
    Ok(value.unwrap())
}

fn three_between(lo: &RealAlgebraic, hi: &RealAlgebraic) -> Vec<RealAlgebraic> {
    let mid = lo.rational_between(hi);
    let m = RealAlgebraic::rational(mid);
    let a = lo.rational_between(&m);
    let b = m.rational_between(hi);
    vec![RealAlgebraic::rational(a), m, RealAlgebraic::rational(b)]
}

/// The full signature profile of a nondegenerate Seifert matrix.
///
/// Plateaus are sampled at three exact points in each gap; the gap containing
/// `x = 1/2` is sampled at `ζ = −1` itself, plus two more points on one side.
pub fn signature_profile(s_ndeg: &QMatrix, cpd: &CharPolyData) -> Result<SignatureProfile, Error> {
    let irr = cpd.irr;
    let mut upper: Vec<UpperPoint> = cpd
        .unit_circle_roots
        .iter()
        .filter(|(a, _)| a.half() == Half::Upper)
        .map(|(a, _)| UpperPoint { angle: a.clone() })
        .collect();
    upper.sort_by(|a, b| a.angle.cmp(&b.angle));
    let minus_one_is_root = upper
        .last()
        .is_some_and(|p| p.angle.exact().is_some_and(|x| *x == rat(1, 2)));

    let two = RealAlgebraic::rational(int(2));
    let minus_two = RealAlgebraic::rational(int(-2));
    // traces decrease as x runs through the upper half
    let mut bounds: Vec<RealAlgebraic> = vec![two];
    bounds.extend(upper.iter().map(|p| p.angle.trace().clone()));
    let mut upper_plateaus = Vec::new();
    for w in bounds.windows(2) {
        upper_plateaus.push(plateau_value(s_ndeg, &three_between(&w[1], &w[0]))?);
    }
    if !minus_one_is_root {
        let last = bounds.last().unwrap();
        let mut samples = vec![minus_two.clone()];
        let m = RealAlgebraic::rational(minus_two.rational_between(last));
        samples.push(RealAlgebraic::rational(minus_two.rational_between(&m)));
        samples.push(m);
        upper_plateaus.push(plateau_value(s_ndeg, &samples)?);
    }

    let mut upper_jumps = Vec::new();
    for (idx, p) in upper.iter().enumerate() {
        let simple = cpd.factor_of(&p.angle).is_some_and(|f| f.multiplicity == 1);
        let half = p.angle.exact().is_some_and(|x| *x == rat(1, 2));
        if simple && !half {
            // one Jordan block of size one: the value at the root is the mean of the
            // neighbouring plateaus and the reduced nullity is 1
            let sum = upper_plateaus[idx] + upper_plateaus[idx + 1];
            if sum % 2 == 0 {
                upper_jumps.push(JumpPoint {
                    angle: p.angle.clone(),
                    sigma: sum / 2,
                    nullity: 1 + irr,
                });
                continue;
            }
        }
        let i = inertia_in(s_ndeg, &field_for_angle(&p.angle, cpd));
        upper_jumps.push(JumpPoint {
            angle: p.angle.clone(),
            sigma: i.signature(),
            nullity: i.zero + irr,
        });
    }

    let mut jumps = upper_jumps.clone();
    let mut plateaus = upper_plateaus.clone();
    let mirrored_jumps = if minus_one_is_root {
        &upper_jumps[..upper_jumps.len() - 1]
    } else {
        &upper_jumps[..]
    };
    for j in mirrored_jumps.iter().rev() {
        jumps.push(JumpPoint {
            angle: j.angle.mirror(),
            ..j.clone()
        });
    }
    let mirrored_plateaus = if minus_one_is_root {
        &upper_plateaus[..]
    } else {
        &upper_plateaus[..upper_plateaus.len() - 1]
    };
    plateaus.extend(mirrored_plateaus.iter().rev().copied());
    debug_assert_eq!(plateaus.len(), jumps.len() + 1);
    Ok(SignatureProfile {
        jumps,
        plateaus,
        irr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::charpoly::char_poly_data;
    use crate::seifert::keef::hvs_of;

    fn profile(rows: &[&[i64]]) -> SignatureProfile {
        let s = QMatrix::from_ints(rows);
        let cpd = char_poly_data(&hvs_of(&s).unwrap(), 0);
        signature_profile(&s, &cpd).unwrap()
    }

    #[test]
    fn trefoil_profile() {
        let p = profile(&[&[-1, 1], &[0, -1]]);
        let xs: Vec<_> = p.jumps.iter().map(|j| j.angle.exact().cloned().unwrap()).collect();
        assert_eq!(xs, vec![rat(1, 6), rat(5, 6)]);
        assert_eq!(p.plateaus, vec![0, -2, 0]);
        assert_eq!((p.jumps[0].sigma, p.jumps[0].nullity), (-1, 1));
    }

    #[test]
    fn t24_profile() {
        let p = profile(&[&[-1, 1, 0], &[0, -1, 1], &[0, 0, -1]]);
        let xs: Vec<_> = p.jumps.iter().map(|j| j.angle.exact().cloned().unwrap()).collect();
        assert_eq!(xs, vec![rat(1, 4), rat(3, 4)]);
        assert_eq!(p.plateaus, vec![-1, -3, -1]);
    }

    #[test]
    fn direct_values() {
        let s = QMatrix::from_ints(&[&[-1, 1], &[0, -1]]);
        let cpd = char_poly_data(&hvs_of(&s).unwrap(), 0);
        assert_eq!(tristram_levine_with(&s, &rat(1, 2), &cpd), (-2, 0, 0));
        let h = QMatrix::from_ints(&[&[0, 1], &[0, 0]]);
        let k = field_at_rational(&rat(1, 2));
        assert_eq!(inertia_in(&h, &k).signature(), 0);
        let t24 = QMatrix::from_ints(&[&[-1, 1, 0], &[0, -1, 1], &[0, 0, -1]]);
        assert_eq!(inertia_in(&t24, &k).signature(), -3);
    }
}
