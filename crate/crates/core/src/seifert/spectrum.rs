//! The spectrum of a link: real part from signature limits, imaginary part from the
//! roots of `Δ^h` inside the unit disc.

use std::cmp::Ordering;

use linkspec_algebra::{Poly, Rational};
use num_traits::One;

use super::angle::{Angle, SpecValue};
use super::charpoly::CharPolyData;
use super::signature::SignatureProfile;
use crate::Error;

/// One entry `α + iβ` of the imaginary part of the spectrum.
#[derive(Clone, Debug)]
pub struct IspEntry {
    pub re: f64,
    pub im: f64,
    /// Irreducible factor of `Δ^h` the value comes from.
    pub factor: Poly,
}

impl PartialEq for IspEntry {
    fn eq(&self, o: &Self) -> bool {
        self.factor == o.factor && (self.re - o.re).abs() < 1e-9 && (self.im - o.im).abs() < 1e-9
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SpectrumData {
    /// Real spectrum, sorted, with repetition.
    pub sp: Vec<SpecValue>,
    /// Imaginary spectrum, sorted by real then imaginary part.
    pub isp: Vec<IspEntry>,
}

impl SpectrumData {
    pub fn from_rationals(values: &[Rational]) -> Result<SpectrumData, Error> {
        let mut sp = values
            .iter()
            .map(|v| {
                SpecValue::from_rational(v)
                    .ok_or_else(|| Error::Invalid(format!("spectral number {v} outside (0, 2]")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        sp.sort();
        Ok(SpectrumData { sp, isp: Vec::new() })
    }

    /// `|ESp| = |Sp| + |ISp|`.
    pub fn extended_len(&self) -> usize {
        self.sp.len() + self.isp.len()
    }

    /// All values as rationals, when none is irrational.
    pub fn rationals(&self) -> Option<Vec<Rational>> {
        self.sp.iter().map(SpecValue::exact).collect()
    }

    /// Non-integral part is symmetric about 1.
    pub fn is_symmetric(&self) -> bool {
        let mut a: Vec<SpecValue> = self.sp.iter().filter(|v| !v.is_integer()).cloned().collect();
        let mut b: Vec<SpecValue> = a.iter().filter_map(SpecValue::reflect).collect();
        a.sort();
        b.sort();
        a == b
    }

    /// Multiset union.
    pub fn union(&self, o: &SpectrumData) -> SpectrumData {
        let mut sp = self.sp.clone();
        sp.extend(o.sp.iter().cloned());
        sp.sort();
        let mut isp = self.isp.clone();
        isp.extend(o.isp.iter().cloned());
        sort_isp(&mut isp);
        SpectrumData { sp, isp }
    }

    pub fn count(&self, v: &SpecValue) -> usize {
        self.sp.iter().filter(|w| *w == v).count()
    }
}

fn sort_isp(isp: &mut [IspEntry]) {
    isp.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
    });
}

fn quarter(num: i64, what: &str) -> Result<usize, Error> {
    if num < 0 || num % 4 != 0 {
        return Err(Error::Inconsistent(format!(
            "signature data give a non-integral or negative multiplicity for {what}"
        )));
    }
    Ok((num / 4) as usize)
}

/// Spectrum from a signature profile by the jump rule.
///
/// At `λ = e^{2πix₀}` with multiplicity `m` and jump `j = σ(x₀⁺) − σ(x₀⁻)`, the
/// value `x₀` occurs `(m + j/2)/2` times and `x₀ + 1` occurs `(m − j/2)/2` times.
/// At `λ = 1` the values 1 and 2 occur `(m − σ(1⁻))/2` and `(m + σ(1⁻))/2` times.
pub fn spectrum_from_profile(cpd: &CharPolyData, profile: &SignatureProfile) -> Result<SpectrumData, Error> {
    let mut sp = Vec::new();
    for (angle, m) in &cpd.unit_circle_roots {
        let m = *m as i64;
        let (a, b) = if angle.is_one() {
            let s = profile.sigma_before_one();
            (quarter(2 * (m - s), "the value 1")?, quarter(2 * (m + s), "the value 2")?)
        } else {
            let i = profile
                .jump_index(angle)
                .ok_or_else(|| Error::Inconsistent(format!("no jump recorded at {angle}")))?;
            let j = profile.jump(i);
            (quarter(2 * m + j, "a jump point")?, quarter(2 * m - j, "a jump point")?)
        };
        for _ in 0..a {
            sp.push(SpecValue::new(angle.clone(), 0));
        }
        for _ in 0..b {
            sp.push(SpecValue::new(angle.clone(), 1));
        }
    }
    sp.sort();
    Ok(SpectrumData { sp, isp: isp_of(cpd) })
}

/// Imaginary spectrum: each root `λ` inside the disc contributes `α + iβ` and
/// `(α + 1) − iβ`, with `e^{2πiα} = λ/|λ|`, `α ∈ (0, 1]` and `β = −ln|λ| / 2π`.
pub fn isp_of(cpd: &CharPolyData) -> Vec<IspEntry> {
    let tau = 2.0 * std::f64::consts::PI;
    let mut out = Vec::new();
    for f in &cpd.factors {
        for z in &f.inside_roots {
            let mut alpha = z.arg() / tau;
            if alpha <= 0.0 {
                alpha += 1.0;
            }
            let beta = -z.norm().ln() / tau;
            for _ in 0..f.multiplicity {
                out.push(IspEntry {
                    re: alpha,
                    im: beta,
                    factor: f.poly.clone(),
                });
                out.push(IspEntry {
                    re: alpha + 1.0,
                    im: -beta,
                    factor: f.poly.clone(),
                });
            }
        }
    }
    sort_isp(&mut out);
    out
}

/// Counts `(|Sp ∩ (x, x+1)|, |Sp \ [x, x+1]|, |Sp ∩ {x, x+1}|)`.
pub fn interval_counts(sp: &SpectrumData, x: &Rational) -> (usize, usize, usize) {
    let x1 = x + Rational::one();
    let (mut inside, mut outside, mut boundary) = (0, 0, 0);
    for v in &sp.sp {
        let a = v.cmp_rational(x);
        let b = v.cmp_rational(&x1);
        if a == Ordering::Equal || b == Ordering::Equal {
            boundary += 1;
        } else if a == Ordering::Greater && b == Ordering::Less {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    (inside, outside, boundary)
}

/// `|Sp ∩ (0, 1]|`.
pub fn delta_invariant(sp: &SpectrumData) -> usize {
    sp.sp.iter().filter(|v| v.shift() == 0).count()
}

/// Multiplicity of the value `x + shift` where `angle` is given.
pub fn multiplicity(sp: &SpectrumData, angle: &Angle, shift: u8) -> usize {
    sp.count(&SpecValue::new(angle.clone(), shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkspec_algebra::rat;

    #[test]
    fn counts() {
        let t = SpectrumData::from_rationals(&[rat(5, 6), rat(7, 6)]).unwrap();
        assert_eq!(interval_counts(&t, &rat(1, 2)), (2, 0, 0));
        let t24 = SpectrumData::from_rationals(&[rat(3, 4), rat(1, 1), rat(5, 4)]).unwrap();
        assert_eq!(interval_counts(&t24, &rat(3, 4)), (2, 0, 1));
        assert_eq!(interval_counts(&SpectrumData::default(), &rat(1, 3)), (0, 0, 0));
        assert_eq!(delta_invariant(&t), 1);
        assert_eq!(delta_invariant(&t24), 2);
        assert_eq!(delta_invariant(&SpectrumData::default()), 0);
        assert!(t24.is_symmetric());
        assert!(!SpectrumData::from_rationals(&[rat(3, 4)]).unwrap().is_symmetric());
    }
}
