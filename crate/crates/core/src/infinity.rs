//! Spectrum at infinity of a polynomial from the regular link at infinity.

use linkspec_algebra::{int, rat, Rational};
use num_traits::One;
use serde_json::{json, Value};

use crate::report;
use crate::seifert::{analyze, interval_counts, validate_infinity, Analysis, SeifertMatrix, SpecValue, SpectrumData};
use crate::Error;

/// Link-at-infinity data: a Seifert matrix of the regular link (or just its
/// spectrum), the arrowhead count `ν`, the reduced multiplicities `n_i'` and
/// optionally the Euler characteristic of the generic fibre.
#[derive(Clone, Debug)]
pub struct InfinityModel {
    pub seifert: Option<SeifertMatrix>,
    pub spectrum_hvs: Option<SpectrumData>,
    pub nu: usize,
    pub n_prime: Vec<i64>,
    pub chi: Option<i64>,
    analysis: Option<Box<Analysis>>,
}

impl InfinityModel {
    pub fn new(
        seifert: Option<SeifertMatrix>,
        spectrum_hvs: Option<SpectrumData>,
        nu: usize,
        n_prime: Vec<i64>,
        chi: Option<i64>,
    ) -> Result<InfinityModel, Error> {
        if seifert.is_none() && spectrum_hvs.is_none() {
            return Err(Error::Invalid("an infinity model needs a Seifert matrix or a spectrum".into()));
        }
        if n_prime.iter().any(|&n| n < 1) {
            return Err(Error::Invalid("every n' must be at least 1".into()));
        }
        let analysis = match &seifert {
            Some(s) => Some(Box::new(analyze(&s.matrix)?)),
            None => None,
        };
        Ok(InfinityModel {
            seifert,
            spectrum_hvs,
            nu,
            n_prime,
            chi,
            analysis,
        })
    }

    pub fn from_json(text: &str) -> Result<InfinityModel, Error> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        InfinityModel::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<InfinityModel, Error> {
        let seifert = match v.get("seifert") {
            None | Some(Value::Null) => None,
            Some(s) => Some(SeifertMatrix::from_value(s)?),
        };
        let spectrum_hvs = match v.get("spectrum_hvs") {
            None | Some(Value::Null) => None,
            Some(s) => Some(parse_spectrum(s)?),
        };
        let nu = v
            .get("nu")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("\"nu\" must be a non-negative integer".into()))? as usize;
        let n_prime = v
            .get("n_prime")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"n_prime\" array".into()))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| Error::Parse("n_prime entries must be integers".into())))
            .collect::<Result<Vec<_>, _>>()?;
        let chi = match v.get("chi") {
            None | Some(Value::Null) => None,
            Some(c) => Some(c.as_i64().ok_or_else(|| Error::Parse("\"chi\" must be an integer".into()))?),
        };
        InfinityModel::new(seifert, spectrum_hvs, nu, n_prime, chi).map_err(|e| match e {
            Error::Invalid(m) => Error::Parse(m),
            e => e,
        })
    }

    pub fn analysis(&self) -> Option<&Analysis> {
        self.analysis.as_deref()
    }

    /// `Sp_HVS` of the regular link at infinity.
    pub fn hvs_spectrum(&self) -> SpectrumData {
        match (&self.analysis, &self.spectrum_hvs) {
            (Some(a), _) => a.spectrum.clone(),
            (None, Some(s)) => s.clone(),
            (None, None) => unreachable!("checked in the constructor"),
        }
    }

    /// `Σ (n_i' − 1)`.
    pub fn ladder_size(&self) -> usize {
        self.n_prime.iter().map(|&n| (n - 1) as usize).sum()
    }

    /// The irregularity, from the matrix when present.
    pub fn irr(&self) -> usize {
        self.analysis.as_ref().map_or(self.ladder_size(), |a| a.irr())
    }

    /// `deg Δ_Irr`, which equals `deg Δ^h`.
    pub fn delta_degree(&self) -> usize {
        match &self.analysis {
            Some(a) => a.cpd.degree(),
            None => self.hvs_spectrum().extended_len(),
        }
    }
}

/// Parses a list of `"p/q"` strings (or integers) as a spectrum.
pub fn parse_spectrum(v: &Value) -> Result<SpectrumData, Error> {
    let xs = v
        .as_array()
        .ok_or_else(|| Error::Parse("a spectrum is an array of rationals".into()))?
        .iter()
        .map(crate::seifert::parse_number)
        .collect::<Result<Vec<_>, _>>()?;
    SpectrumData::from_rationals(&xs).map_err(|e| Error::Parse(e.to_string()))
}

/// One named check; `ok == None` means it could not be run.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub ok: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelReport {
    pub checks: Vec<Check>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok != Some(false))
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.ok == Some(false)).collect()
    }

    pub fn to_value(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "status": match c.ok { Some(true) => "pass", Some(false) => "fail", None => "unverified" },
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn check(name: &'static str, ok: bool, detail: String) -> Check {
    Check {
        name,
        ok: Some(ok),
        detail,
    }
}

fn unverified(name: &'static str, why: &str) -> Check {
    Check {
        name,
        ok: None,
        detail: why.to_string(),
    }
}

/// Checks the identities a regular link at infinity has to satisfy.
pub fn validate_model(m: &InfinityModel) -> ModelReport {
    let mut checks = Vec::new();
    checks.push(check(
        "n_prime_count",
        m.n_prime.len() == m.nu,
        format!("{} values of n' for ν = {}", m.n_prime.len(), m.nu),
    ));
    let no_matrix = "no Seifert matrix supplied";
    match m.analysis() {
        Some(a) => {
            checks.push(check(
                "irregularity",
                a.irr() == m.ladder_size(),
                format!("Irr = {}, Σ(n'−1) = {}", a.irr(), m.ladder_size()),
            ));
            checks.push(check(
                "roots_of_unity",
                a.cpd.all_roots_of_unity(),
                format!("Δ^h = {}", a.cpd.delta_h),
            ));
            let m1 = a.cpd.multiplicity_of_one() as usize;
            checks.push(check(
                "root_one_multiplicity",
                m1 + 1 == m.nu,
                format!("multiplicity of 1 in Δ^h is {m1}, ν − 1 = {}", m.nu as i64 - 1),
            ));
            match &a.h_numbers {
                Ok(hn) => {
                    let r = validate_infinity(hn);
                    let mut detail: Vec<String> =
                        r.violations.iter().map(|v| format!("({}) {}", v.clause, v.detail)).collect();
                    detail.extend(r.unverified.iter().map(|v| format!("unverified ({}) {}", v.clause, v.detail)));
                    checks.push(Check {
                        name: "h_numbers_at_infinity",
                        ok: if !r.passed {
                            Some(false)
                        } else if r.unverified.is_empty() {
                            Some(true)
                        } else {
                            None
                        },
                        detail: detail.join("; "),
                    });
                }
                Err(e) => checks.push(unverified("h_numbers_at_infinity", e)),
            }
            if let Some(s) = &m.spectrum_hvs {
                checks.push(check(
                    "spectrum_agrees",
                    s.sp == a.spectrum.sp,
                    "supplied spectrum against the one computed from the matrix".into(),
                ));
            }
        }
        None => {
            for name in ["irregularity", "roots_of_unity", "root_one_multiplicity", "h_numbers_at_infinity"] {
                checks.push(unverified(name, no_matrix));
            }
        }
    }
    let sp = m.hvs_spectrum();
    let one = SpecValue::from_rational(&Rational::one()).unwrap();
    let two = SpecValue::from_rational(&int(2)).unwrap();
    let (c1, c2) = (sp.count(&one), sp.count(&two));
    checks.push(check(
        "eigenvalue_one_part",
        c1 + 1 == m.nu && c2 == 0,
        format!("{c1} copies of 1 and {c2} of 2, expected ν − 1 = {} copies of 1", m.nu as i64 - 1),
    ));
    ModelReport { checks }
}

/// `Sp_HVS ∪ {j/n_i' : 1 ≤ j < n_i'}`.
pub fn spectrum_at_infinity(m: &InfinityModel) -> Result<SpectrumData, Error> {
    let r = validate_model(m);
    if !r.passed() {
        let names: Vec<String> = r.failures().iter().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::Inconsistent(format!("model fails validation ({})", names.join("; "))));
    }
    let mut ladder = Vec::new();
    for &n in &m.n_prime {
        for j in 1..n {
            ladder.push(rat(j, n));
        }
    }
    Ok(m.hvs_spectrum().union(&SpectrumData::from_rationals(&ladder)?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerReport {
    pub lhs: i64,
    pub delta_degree: usize,
    pub irr: usize,
    pub ok: bool,
}

/// `1 − χ(Y_∞) = deg Δ_Irr + Irr`.
pub fn euler_identity(m: &InfinityModel) -> Result<EulerReport, Error> {
    let chi = m
        .chi
        .ok_or_else(|| Error::Invalid("the Euler identity needs \"chi\"".into()))?;
    let lhs = 1 - chi;
    let (d, irr) = (m.delta_degree(), m.irr());
    Ok(EulerReport {
        lhs,
        delta_degree: d,
        irr,
        ok: lhs == (d + irr) as i64,
    })
}

impl EulerReport {
    pub fn to_value(&self) -> Value {
        json!({
            "one_minus_chi": self.lhs,
            "delta_degree": self.delta_degree,
            "irr": self.irr,
            "rhs": self.delta_degree + self.irr,
            "ok": self.ok,
        })
    }
}

/// One sandwich `low ≤ mid ≤ low + Irr`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sandwich {
    pub window: &'static str,
    pub hvs: usize,
    pub infinity: usize,
    pub irr: usize,
}

impl Sandwich {
    pub fn ok(&self) -> bool {
        self.hvs <= self.infinity && self.infinity <= self.hvs + self.irr
    }

    pub fn to_value(&self) -> Value {
        json!({
            "window": self.window,
            "hvs": self.hvs,
            "infinity": self.infinity,
            "hvs_plus_irr": self.hvs + self.irr,
            "ok": self.ok(),
        })
    }
}

/// The bounds between `Sp_HVS` and `Sp_∞` in both windows at `x ∈ [0, 1]`.
pub fn infinity_bounds(m: &InfinityModel, x: &Rational) -> Result<[Sandwich; 2], Error> {
    let hvs = m.hvs_spectrum();
    let inf = spectrum_at_infinity(m)?;
    let (hi, ho, _) = interval_counts(&hvs, x);
    let (ii, io, _) = interval_counts(&inf, x);
    let irr = m.irr();
    Ok([
        Sandwich {
            window: "inside",
            hvs: hi,
            infinity: ii,
            irr,
        },
        Sandwich {
            window: "outside",
            hvs: ho,
            infinity: io,
            irr,
        },
    ])
}

pub fn spectrum_value(s: &SpectrumData) -> Value {
    report::spectrum(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkspec_algebra::QMatrix;

    pub(crate) fn briancon() -> InfinityModel {
        InfinityModel::from_json(include_str!("../fixtures/briancon_model.json")).unwrap()
    }

    #[test]
    fn briancon_model() {
        let m = briancon();
        let r = validate_model(&m);
        assert!(r.passed(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.ok == Some(true)), "{r:?}");
        let sp = spectrum_at_infinity(&m).unwrap();
        assert_eq!(sp.rationals().unwrap(), vec![rat(1, 2), rat(2, 3), rat(1, 1), rat(4, 3)]);
        let e = euler_identity(&m).unwrap();
        assert_eq!((e.lhs, e.delta_degree, e.irr, e.ok), (4, 3, 1, true));
        let b = infinity_bounds(&m, &rat(3, 5)).unwrap();
        assert_eq!((b[0].hvs, b[0].infinity), (3, 3));
        let b = infinity_bounds(&m, &rat(2, 5)).unwrap();
        assert_eq!((b[0].hvs, b[0].infinity), (3, 4));
        assert!(b.iter().all(Sandwich::ok));
    }

    #[test]
    fn spectrum_only_models() {
        let m = InfinityModel::new(None, Some(SpectrumData::default()), 1, vec![3], None).unwrap();
        assert_eq!(spectrum_at_infinity(&m).unwrap().rationals().unwrap(), vec![rat(1, 3), rat(2, 3)]);
        assert!(validate_model(&m).checks.iter().any(|c| c.ok.is_none()));
        let knot = InfinityModel::new(
            Some(SeifertMatrix::new(QMatrix::from_ints(&[&[-1, 1], &[0, -1]]))),
            None,
            1,
            vec![1],
            Some(-1),
        )
        .unwrap();
        assert!(validate_model(&knot).passed());
        assert!(euler_identity(&knot).unwrap().ok);
        let bad = InfinityModel::new(
            Some(SeifertMatrix::new(QMatrix::from_ints(&[&[-1, 1], &[0, -1]]))),
            None,
            1,
            vec![2],
            None,
        )
        .unwrap();
        let r = validate_model(&bad);
        let f = r.failures();
        assert_eq!(f[0].name, "irregularity");
        assert!(f[0].detail.contains("Irr = 0") && f[0].detail.contains("= 1"));
        let unknot = InfinityModel::new(Some(SeifertMatrix::new(QMatrix::zeros(0, 0))), None, 1, vec![1], Some(1)).unwrap();
        assert!(euler_identity(&unknot).unwrap().ok);
    }
}
