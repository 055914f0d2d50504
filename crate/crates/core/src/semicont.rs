//! Spectral semicontinuity and surgery inequalities evaluated on scenarios.
//!
//! A checker never decides whether a scenario is geometrically realisable. It
//! evaluates both inequalities of each pair at the requested angles after checking
//! the hypothesis on the angle.

use std::collections::BTreeSet;

use linkspec_algebra::rational::{format_rational, frac};
use linkspec_algebra::{int, rat, Rational};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::infinity::{parse_spectrum, spectrum_at_infinity, InfinityModel};
use crate::report;
use crate::seifert::{analyze, delta_invariant, interval_counts, torus_seifert, Angle, SeifertMatrix, SpectrumData};
use crate::Error;

/// A spectrum together with what is known about the roots of the Alexander polynomial.
#[derive(Clone, Debug)]
pub struct SpectrumSource {
    pub spectrum: SpectrumData,
    /// Circle points of the roots; from the matrix when one was given, otherwise
    /// `e^{2πiα}` for `α` in the spectrum.
    pub roots: Vec<Angle>,
    pub components: Option<usize>,
}

impl SpectrumSource {
    pub fn from_spectrum(spectrum: SpectrumData, components: Option<usize>) -> SpectrumSource {
        let mut roots: Vec<Angle> = spectrum.sp.iter().map(|v| v.angle().clone()).collect();
        roots.sort();
        roots.dedup();
        SpectrumSource {
            spectrum,
            roots,
            components,
        }
    }

    pub fn from_matrix(s: &SeifertMatrix) -> Result<SpectrumSource, Error> {
        let a = analyze(&s.matrix)?;
        let roots: Vec<Angle> = a.cpd.unit_circle_roots.iter().map(|(r, _)| r.clone()).collect();
        Ok(SpectrumSource {
            spectrum: a.spectrum,
            roots,
            components: s.components,
        })
    }

    /// Accepts a bare array (a spectrum), `{"spectrum": [...]}`, `{"seifert": ...}`
    /// or `{"torus": [p, q]}`, each with an optional `"components"`.
    pub fn from_value(v: &Value) -> Result<SpectrumSource, Error> {
        if v.is_array() {
            return Ok(SpectrumSource::from_spectrum(parse_spectrum(v)?, None));
        }
        let components = match v.get("components") {
            None | Some(Value::Null) => None,
            Some(c) => Some(
                c.as_u64()
                    .filter(|&c| c >= 1)
                    .ok_or_else(|| Error::Parse("\"components\" must be a positive integer".into()))?
                    as usize,
            ),
        };
        let mut src = if let Some(s) = v.get("spectrum") {
            SpectrumSource::from_spectrum(parse_spectrum(s)?, None)
        } else if let Some(s) = v.get("seifert") {
            SpectrumSource::from_matrix(&SeifertMatrix::from_value(s)?)?
        } else if let Some(t) = v.get("torus") {
            let (p, q) = torus_pair(t)?;
            SpectrumSource::from_matrix(&SeifertMatrix::new(torus_seifert(p, q)?))?
        } else {
            return Err(Error::Parse("a spectrum source needs \"spectrum\", \"seifert\" or \"torus\"".into()));
        };
        if components.is_some() {
            src.components = components;
        }
        Ok(src)
    }

    fn has_root_at(&self, x: &Rational) -> bool {
        let a = Angle::from_rational(x);
        self.roots.contains(&a)
    }
}

fn torus_pair(t: &Value) -> Result<(usize, usize), Error> {
    let a = t.as_array().filter(|a| a.len() == 2);
    let p = a.and_then(|a| a[0].as_u64());
    let q = a.and_then(|a| a[1].as_u64());
    match (p, q) {
        (Some(p), Some(q)) => Ok((p as usize, q as usize)),
        _ => Err(Error::Parse("\"torus\" must be [p, q]".into())),
    }
}

/// One evaluated inequality `lhs ≥ rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub x: Rational,
    pub inequality: String,
    pub lhs: i64,
    pub rhs: i64,
}

impl Record {
    pub fn ok(&self) -> bool {
        self.lhs >= self.rhs
    }

    pub fn margin(&self) -> i64 {
        self.lhs - self.rhs
    }

    pub fn to_value(&self) -> Value {
        json!({
            "x": report::q(&self.x),
            "inequality": self.inequality,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ok": self.ok(),
        })
    }
}

fn rec(x: &Rational, inequality: &str, lhs: i64, rhs: i64) -> Record {
    Record {
        x: x.clone(),
        inequality: inequality.to_string(),
        lhs,
        rhs,
    }
}

/// An angle that was asked for but fails the hypothesis.
#[derive(Clone, Debug, PartialEq)]
pub struct Refusal {
    pub x: Rational,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScenarioReport {
    pub kind: String,
    pub records: Vec<Record>,
    pub refused: Vec<Refusal>,
}

impl ScenarioReport {
    /// At least one inequality evaluated and none failed.
    pub fn passed(&self) -> bool {
        !self.records.is_empty() && self.records.iter().all(Record::ok)
    }

    pub fn failures(&self) -> Vec<&Record> {
        self.records.iter().filter(|r| !r.ok()).collect()
    }

    pub fn to_value(&self) -> Value {
        json!({
            "scenario": self.kind,
            "records": self.records.iter().map(Record::to_value).collect::<Vec<_>>(),
            "refused": self.refused.iter().map(|r| json!({"x": report::q(&r.x), "reason": r.reason})).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

/// Which angles to evaluate.
#[derive(Clone, Debug, PartialEq)]
pub enum AngleChoice {
    Auto,
    List(Vec<Rational>),
}

impl AngleChoice {
    /// `"auto"` or a comma separated list of fractions.
    pub fn parse(s: &str) -> Result<AngleChoice, Error> {
        if s.trim() == "auto" {
            return Ok(AngleChoice::Auto);
        }
        let xs = s
            .split(',')
            .map(|t| linkspec_algebra::parse_rational(t.trim()).map_err(Error::from))
            .collect::<Result<Vec<_>, _>>()?;
        for x in &xs {
            if *x < Rational::zero() || *x > Rational::one() {
                return Err(Error::Parse(format!("angle {} outside [0, 1]", format_rational(x))));
            }
        }
        Ok(AngleChoice::List(xs))
    }
}

/// Midpoints between consecutive points of `{0, 1}`, the fractional parts of the
/// spectra and the angles of the Alexander roots.
pub fn admissible_midpoints(spectra: &[&SpectrumData], roots: &[Angle]) -> Vec<Rational> {
    let mut pts: Vec<Rational> = vec![Rational::zero(), Rational::one()];
    let mut approx: Vec<f64> = Vec::new();
    for s in spectra {
        for v in &s.sp {
            match v.exact() {
                Some(x) => pts.push(frac(&x)),
                None => approx.push(v.angle().approx()),
            }
        }
    }
    for r in roots {
        match r.exact() {
            Some(x) => pts.push(frac(x)),
            None => approx.push(r.approx()),
        }
    }
    let set: BTreeSet<Rational> = pts.into_iter().collect();
    let pts: Vec<Rational> = set.into_iter().collect();
    let mut out = Vec::new();
    for w in pts.windows(2) {
        let mid = (&w[0] + &w[1]) / int(2);
        // irrational points inside a gap: split around them
        let inner: Vec<f64> = approx
            .iter()
            .copied()
            .filter(|&a| a > linkspec_algebra::rational::to_f64(&w[0]) && a < linkspec_algebra::rational::to_f64(&w[1]))
            .collect();
        if inner.is_empty() {
            out.push(mid);
        } else {
            let mut cuts: Vec<Rational> = vec![w[0].clone()];
            let mut inner = inner;
            inner.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for a in inner {
                cuts.push(linkspec_algebra::rational::from_f64_dyadic(a, 40));
            }
            cuts.push(w[1].clone());
            for c in cuts.windows(2) {
                out.push((&c[0] + &c[1]) / int(2));
            }
        }
    }
    out
}

/// `|Sp ∩ (x, x+1)|` and `|Sp \ [x, x+1]|`.
fn counts(sp: &SpectrumData, x: &Rational) -> (i64, i64) {
    let (i, o, _) = interval_counts(sp, x);
    (i as i64, o as i64)
}

#[derive(Clone, Debug)]
pub struct LocalScenario {
    pub central: SpectrumSource,
    pub singular_points: Vec<SpectrumSource>,
    pub angles: AngleChoice,
}

fn gate_local(s: &LocalScenario, x: &Rational) -> Result<(), String> {
    let integral = frac(x).is_zero();
    if integral && s.central.components.is_some_and(|c| c > 1) {
        return Err("the central link has several components; x ∈ {0, 1} is not covered".into());
    }
    if s.central.has_root_at(x) {
        return Err(format!(
            "e^(2πi·{}) is a root of the Alexander polynomial of the central link",
            format_rational(x)
        ));
    }
    Ok(())
}

/// Both local inequalities at one angle; at `x ∈ {0, 1}` the delta invariants are
/// compared as well.
pub fn check_local(s: &LocalScenario, x: &Rational) -> Result<Vec<Record>, Error> {
    gate_local(s, x).map_err(Error::Invalid)?;
    let (ci, co) = counts(&s.central.spectrum, x);
    let (mut si, mut so) = (0, 0);
    for p in &s.singular_points {
        let (a, b) = counts(&p.spectrum, x);
        si += a;
        so += b;
    }
    let mut out = vec![rec(x, "inside", ci, si), rec(x, "outside", co, so)];
    if frac(x).is_zero() {
        let d0 = delta_invariant(&s.central.spectrum) as i64;
        let dj: i64 = s.singular_points.iter().map(|p| delta_invariant(&p.spectrum) as i64).sum();
        out.push(rec(x, "delta", d0, dj));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct FamilyScenario {
    pub sp_t: SpectrumData,
    pub irr_t: i64,
    pub sp_0: SpectrumData,
    pub irr_0: i64,
    pub angles: AngleChoice,
}

pub fn check_family(s: &FamilyScenario, x: &Rational) -> Result<Vec<Record>, Error> {
    let x1 = x + Rational::one();
    if s.sp_t.sp.iter().any(|v| v.cmp_rational(x).is_eq() || v.cmp_rational(&x1).is_eq()) {
        return Err(Error::Invalid(format!(
            "{} or {} lies in the generic spectrum",
            format_rational(x),
            format_rational(&x1)
        )));
    }
    let (ti, to) = counts(&s.sp_t, x);
    let (zi, zo) = counts(&s.sp_0, x);
    Ok(vec![rec(x, "inside", ti + s.irr_t, zi), rec(x, "outside", to + s.irr_t, zo)])
}

#[derive(Clone, Debug)]
pub struct CurveScenario {
    pub model: InfinityModel,
    pub singular_points: Vec<SpectrumSource>,
    pub angles: AngleChoice,
}

fn curve_roots(m: &InfinityModel) -> Vec<Angle> {
    match m.analysis() {
        Some(a) => a.cpd.unit_circle_roots.iter().map(|(r, _)| r.clone()).collect(),
        None => SpectrumSource::from_spectrum(m.hvs_spectrum(), None).roots,
    }
}

pub fn check_curve(s: &CurveScenario, x: &Rational) -> Result<Vec<Record>, Error> {
    let a = Angle::from_rational(x);
    if curve_roots(&s.model).contains(&a) {
        return Err(Error::Invalid(format!(
            "e^(2πi·{}) is a root of the Alexander polynomial of the regular link at infinity",
            format_rational(x)
        )));
    }
    let irr = s.model.irr() as i64;
    let (hi, ho) = counts(&s.model.hvs_spectrum(), x);
    let (ii, io) = counts(&spectrum_at_infinity(&s.model)?, x);
    let (mut si, mut so) = (0, 0);
    for p in &s.singular_points {
        let (a, b) = counts(&p.spectrum, x);
        si += a;
        so += b;
    }
    Ok(vec![
        rec(x, "hvs_inside", hi + irr, si),
        rec(x, "infinity_inside", ii + irr, si),
        rec(x, "hvs_outside", ho + irr, so),
        rec(x, "infinity_outside", io + irr, so),
    ])
}

/// Signature data of a link at an angle.
#[derive(Clone, Debug, PartialEq)]
pub struct LinkSigData {
    pub sigma: i64,
    pub nullity: i64,
    pub components: i64,
}

/// `w = −σ + 1 − c + n` and `u` with `−u = σ + 1 − c + n`.
pub fn murasugi_w_u(l: &LinkSigData) -> (i64, i64) {
    let w = -l.sigma + 1 - l.components + l.nullity;
    let u = -(l.sigma + 1 - l.components + l.nullity);
    (w, u)
}

/// Link data given either as a Seifert matrix or as fixed values valid at the
/// scenario angle.
#[derive(Clone, Debug)]
pub enum LinkInput {
    Matrix { s: SeifertMatrix, components: i64 },
    Fixed(LinkSigData),
}

impl LinkInput {
    pub fn from_value(v: &Value) -> Result<LinkInput, Error> {
        let components = v.get("components").and_then(Value::as_i64);
        if let Some(sigma) = v.get("sigma") {
            let sigma = sigma.as_i64().ok_or_else(|| Error::Parse("\"sigma\" must be an integer".into()))?;
            let nullity = v.get("nullity").and_then(Value::as_i64).unwrap_or(0);
            return Ok(LinkInput::Fixed(LinkSigData {
                sigma,
                nullity,
                components: components.ok_or_else(|| Error::Parse("link data needs \"components\"".into()))?,
            }));
        }
        let s = if let Some(s) = v.get("seifert") {
            SeifertMatrix::from_value(s)?
        } else if let Some(t) = v.get("torus") {
            let (p, q) = torus_pair(t)?;
            SeifertMatrix::new(torus_seifert(p, q)?)
        } else {
            return Err(Error::Parse("link data needs \"sigma\", \"seifert\" or \"torus\"".into()));
        };
        let components = components
            .or(s.components.map(|c| c as i64))
            .ok_or_else(|| Error::Parse("link data needs \"components\"".into()))?;
        Ok(LinkInput::Matrix { s, components })
    }

    pub fn at(&self, x: &Rational) -> Result<LinkSigData, Error> {
        match self {
            LinkInput::Fixed(d) => Ok(d.clone()),
            LinkInput::Matrix { s, components } => {
                let (sigma, n, _) = crate::seifert::tristram_levine(&s.matrix, x)?;
                Ok(LinkSigData {
                    sigma,
                    nullity: n as i64,
                    components: *components,
                })
            }
        }
    }

    fn roots(&self) -> Result<Vec<Angle>, Error> {
        match self {
            LinkInput::Fixed(_) => Ok(Vec::new()),
            LinkInput::Matrix { s, .. } => Ok(SpectrumSource::from_matrix(s)?.roots),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryCheck {
    WBound,
    SmoothCobordism,
    SingularBall,
}

#[derive(Clone, Debug, Default)]
pub struct Topology {
    pub g0: Option<i64>,
    pub g1: Option<i64>,
    pub c0: Option<i64>,
    pub c1: Option<i64>,
    pub k0: Option<i64>,
    pub k1: Option<i64>,
    /// `χ(C₀₁)` for the smooth cobordism, `χ(C_smooth)` for the singular ball.
    pub chi: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub link: LinkInput,
    pub mu: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct SurgeryScenario {
    pub check: SurgeryCheck,
    pub l0: Option<LinkInput>,
    pub l1: LinkInput,
    pub singular: Vec<SingularPoint>,
    pub topology: Topology,
    pub angles: AngleChoice,
}

fn need(v: Option<i64>, name: &str) -> Result<i64, Error> {
    v.ok_or_else(|| Error::Invalid(format!("missing topology field \"{name}\"")))
}

fn unknot() -> LinkSigData {
    LinkSigData {
        sigma: 0,
        nullity: 0,
        components: 1,
    }
}

fn gate_surgery(x: &Rational) -> Result<(), Error> {
    if frac(x).is_zero() {
        return Err(Error::Invalid("ζ = 1 is excluded".into()));
    }
    Ok(())
}

/// Both Morse-type inequalities for `w` and `−u`.
pub fn check_wbound(s: &SurgeryScenario, x: &Rational) -> Result<Vec<Record>, Error> {
    gate_surgery(x)?;
    let t = &s.topology;
    let l1 = s.l1.at(x)?;
    let l0 = match &s.l0 {
        Some(l) => l.at(x)?,
        None => unknot(),
    };
    let c1 = t.c1.unwrap_or(l1.components);
    let c0 = t.c0.unwrap_or(l0.components);
    let rhs = -2 * (need(t.g1, "g1")? - need(t.g0, "g0")? + c1 - c0 - need(t.k1, "k1")? + need(t.k0, "k0")?);
    let (w1, u1) = murasugi_w_u(&l1);
    let (w0, u0) = murasugi_w_u(&l0);
    let (mut ws, mut us) = (0, 0);
    for p in &s.singular {
        let (w, u) = murasugi_w_u(&p.link.at(x)?);
        ws += w;
        us += u;
    }
    Ok(vec![rec(x, "w", w1 - ws - w0, rhs), rec(x, "u", -(u1 - us - u0), rhs)])
}

pub fn check_smooth_cobordism(s: &SurgeryScenario, x: &Rational) -> Result<Vec<Record>, Error> {
    gate_surgery(x)?;
    let chi = need(s.topology.chi, "chi")?;
    let l1 = s.l1.at(x)?;
    let l0 = match &s.l0 {
        Some(l) => l.at(x)?,
        None => unknot(),
    };
    Ok(vec![
        rec(x, "minus_sigma", -l1.sigma + l1.nullity - (-l0.sigma + l0.nullity), chi),
        rec(x, "plus_sigma", l1.sigma + l1.nullity - (l0.sigma + l0.nullity), chi),
    ])
}

pub fn check_singular_ball(s: &SurgeryScenario, x: &Rational) -> Result<Vec<Record>, Error> {
    gate_surgery(x)?;
    let chi = need(s.topology.chi, "chi")?;
    let l = s.l1.at(x)?;
    let (mut minus, mut plus) = (0, 0);
    for (i, p) in s.singular.iter().enumerate() {
        let d = p.link.at(x)?;
        let mu = p
            .mu
            .ok_or_else(|| Error::Invalid(format!("singular point {i} needs \"mu\"")))?;
        minus += -d.sigma + d.nullity + mu;
        plus += d.sigma + d.nullity + mu;
    }
    Ok(vec![
        rec(x, "minus_sigma", -l.sigma + l.nullity + (1 - chi), minus),
        rec(x, "plus_sigma", l.sigma + l.nullity + (1 - chi), plus),
    ])
}

#[derive(Clone, Debug)]
pub enum Scenario {
    Local(LocalScenario),
    Family(FamilyScenario),
    Curve(CurveScenario),
    Surgery(SurgeryScenario),
}

fn angles_of(v: &Value) -> Result<AngleChoice, Error> {
    match v.get("angles") {
        None | Some(Value::Null) => Ok(AngleChoice::Auto),
        Some(Value::String(s)) => AngleChoice::parse(s),
        Some(Value::Array(a)) => {
            let xs = a
                .iter()
                .map(crate::seifert::parse_number)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AngleChoice::List(xs))
        }
        Some(_) => Err(Error::Parse("\"angles\" must be \"auto\" or a list".into())),
    }
}

fn sources(v: &Value, key: &str) -> Result<Vec<SpectrumSource>, Error> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(Value::Array(a)) => a.iter().map(SpectrumSource::from_value).collect(),
        Some(_) => Err(Error::Parse(format!("\"{key}\" must be an array"))),
    }
}

fn int_field(v: &Value, key: &str) -> Result<Option<i64>, Error> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x
            .as_i64()
            .map(Some)
            .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an integer"))),
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario, Error> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Scenario::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Scenario, Error> {
        let angles = angles_of(v)?;
        let kind = v.get("kind").and_then(Value::as_str).unwrap_or("");
        match kind {
            "local" => {
                let central = SpectrumSource::from_value(
                    v.get("central").ok_or_else(|| Error::Parse("missing \"central\"".into()))?,
                )?;
                let mut central = central;
                if let Some(extra) = v.get("alexander_roots") {
                    for x in extra.as_array().into_iter().flatten() {
                        central.roots.push(Angle::from_rational(&crate::seifert::parse_number(x)?));
                    }
                    central.roots.sort();
                    central.roots.dedup();
                }
                Ok(Scenario::Local(LocalScenario {
                    central,
                    singular_points: sources(v, "singular_points")?,
                    angles,
                }))
            }
            "family" => {
                let sp = |k: &str| {
                    parse_spectrum(v.get(k).ok_or_else(|| Error::Parse(format!("missing \"{k}\"")))?)
                };
                Ok(Scenario::Family(FamilyScenario {
                    sp_t: sp("sp_t")?,
                    irr_t: int_field(v, "irr_t")?.unwrap_or(0),
                    sp_0: sp("sp_0")?,
                    irr_0: int_field(v, "irr_0")?.unwrap_or(0),
                    angles,
                }))
            }
            "curve" => Ok(Scenario::Curve(CurveScenario {
                model: InfinityModel::from_value(
                    v.get("infinity_model")
                        .ok_or_else(|| Error::Parse("missing \"infinity_model\"".into()))?,
                )?,
                singular_points: sources(v, "singular_points")?,
                angles,
            })),
            "surgery" => {
                let check = match v.get("check").and_then(Value::as_str) {
                    Some("wbound") => SurgeryCheck::WBound,
                    Some("smooth_cobordism") => SurgeryCheck::SmoothCobordism,
                    Some("singular_ball") => SurgeryCheck::SingularBall,
                    other => return Err(Error::Parse(format!("unknown surgery check {other:?}"))),
                };
                let l0 = match v.get("l0") {
                    None | Some(Value::Null) => None,
                    Some(l) => Some(LinkInput::from_value(l)?),
                };
                let l1 = LinkInput::from_value(v.get("l1").ok_or_else(|| Error::Parse("missing \"l1\"".into()))?)?;
                let mut singular = Vec::new();
                for p in v.get("singular").and_then(Value::as_array).into_iter().flatten() {
                    singular.push(SingularPoint {
                        link: LinkInput::from_value(p)?,
                        mu: int_field(p, "mu")?,
                    });
                }
                let topology = Topology {
                    g0: int_field(v, "g0")?,
                    g1: int_field(v, "g1")?,
                    c0: int_field(v, "c0")?,
                    c1: int_field(v, "c1")?,
                    k0: int_field(v, "k0")?,
                    k1: int_field(v, "k1")?,
                    chi: int_field(v, "chi")?,
                };
                Ok(Scenario::Surgery(SurgeryScenario {
                    check,
                    l0,
                    l1,
                    singular,
                    topology,
                    angles,
                }))
            }
            other => Err(Error::Parse(format!(
                "scenario \"kind\" must be local, family, curve or surgery, got {other:?}"
            ))),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Scenario::Local(_) => "local",
            Scenario::Family(_) => "family",
            Scenario::Curve(_) => "curve",
            Scenario::Surgery(_) => "surgery",
        }
    }

    pub fn angles(&self) -> &AngleChoice {
        match self {
            Scenario::Local(s) => &s.angles,
            Scenario::Family(s) => &s.angles,
            Scenario::Curve(s) => &s.angles,
            Scenario::Surgery(s) => &s.angles,
        }
    }

    /// The automatic angle grid.
    pub fn admissible_angles(&self) -> Result<Vec<Rational>, Error> {
        Ok(match self {
            Scenario::Local(s) => {
                let mut sp = vec![&s.central.spectrum];
                sp.extend(s.singular_points.iter().map(|p| &p.spectrum));
                admissible_midpoints(&sp, &s.central.roots)
            }
            Scenario::Family(s) => admissible_midpoints(&[&s.sp_t, &s.sp_0], &[]),
            Scenario::Curve(s) => {
                let hvs = s.model.hvs_spectrum();
                let inf = spectrum_at_infinity(&s.model)?;
                let mut sp = vec![&hvs, &inf];
                sp.extend(s.singular_points.iter().map(|p| &p.spectrum));
                admissible_midpoints(&sp, &curve_roots(&s.model))
            }
            Scenario::Surgery(s) => {
                let fixed = matches!(s.l1, LinkInput::Fixed(_))
                    || s.l0.as_ref().is_some_and(|l| matches!(l, LinkInput::Fixed(_)))
                    || s.singular.iter().any(|p| matches!(p.link, LinkInput::Fixed(_)));
                if fixed {
                    // fixed signature data is only meaningful at an explicit angle
                    Vec::new()
                } else {
                    let mut roots = s.l1.roots()?;
                    if let Some(l) = &s.l0 {
                        roots.extend(l.roots()?);
                    }
                    for p in &s.singular {
                        roots.extend(p.link.roots()?);
                    }
                    admissible_midpoints(&[], &roots)
                }
            }
        })
    }

    /// Evaluates at one angle.
    pub fn check_at(&self, x: &Rational) -> Result<Vec<Record>, Error> {
        match self {
            Scenario::Local(s) => check_local(s, x),
            Scenario::Family(s) => check_family(s, x),
            Scenario::Curve(s) => check_curve(s, x),
            Scenario::Surgery(s) => match s.check {
                SurgeryCheck::WBound => check_wbound(s, x),
                SurgeryCheck::SmoothCobordism => check_smooth_cobordism(s, x),
                SurgeryCheck::SingularBall => check_singular_ball(s, x),
            },
        }
    }

    /// Evaluates at every requested angle, in increasing order.
    pub fn run(&self, choice: Option<&AngleChoice>) -> Result<ScenarioReport, Error> {
        let choice = choice.unwrap_or(self.angles());
        let mut xs = match choice {
            AngleChoice::Auto => self.admissible_angles()?,
            AngleChoice::List(xs) => xs.clone(),
        };
        if xs.is_empty() {
            xs.push(rat(1, 2));
        }
        xs.sort();
        xs.dedup();
        let mut out = ScenarioReport {
            kind: self.kind().to_string(),
            ..Default::default()
        };
        for x in xs {
            match self.check_at(&x) {
                Ok(r) => out.records.extend(r),
                Err(Error::Invalid(reason)) => out.refused.push(Refusal { x, reason }),
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(xs: &[(i64, i64)]) -> SpectrumData {
        SpectrumData::from_rationals(&xs.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn midpoints() {
        let t = sp(&[(5, 6), (7, 6)]);
        assert_eq!(admissible_midpoints(&[&t], &[]), vec![rat(1, 12), rat(1, 2), rat(11, 12)]);
        assert_eq!(admissible_midpoints(&[], &[]), vec![rat(1, 2)]);
    }

    #[test]
    fn local_examples() {
        let node = SpectrumSource::from_spectrum(sp(&[(1, 1)]), Some(2));
        let s = LocalScenario {
            central: SpectrumSource::from_spectrum(sp(&[(3, 4), (1, 1), (5, 4)]), Some(2)),
            singular_points: vec![node.clone(), node],
            angles: AngleChoice::Auto,
        };
        let r = check_local(&s, &rat(1, 2)).unwrap();
        assert_eq!((r[0].lhs, r[0].rhs), (3, 2));
        assert!(check_local(&s, &rat(0, 1)).is_err());
        assert!(check_local(&s, &rat(3, 4)).is_err());
        let empty = LocalScenario {
            singular_points: Vec::new(),
            ..s
        };
        assert!(check_local(&empty, &rat(1, 2)).unwrap().iter().all(|r| r.rhs == 0));
    }

    #[test]
    fn w_and_u() {
        assert_eq!(murasugi_w_u(&unknot()), (0, 0));
        let tre = LinkSigData {
            sigma: -2,
            nullity: 0,
            components: 1,
        };
        assert_eq!(murasugi_w_u(&tre).0, 2);
        let hopf = LinkSigData {
            sigma: -1,
            nullity: 0,
            components: 2,
        };
        assert_eq!(murasugi_w_u(&hopf), (0, 2));
    }

    #[test]
    fn family_example() {
        let s = FamilyScenario {
            sp_t: sp(&[(1, 2), (2, 3), (1, 1), (4, 3)]),
            irr_t: 1,
            sp_0: sp(&[(5, 6), (7, 6)]),
            irr_0: 0,
            angles: AngleChoice::Auto,
        };
        let x = rat(1, 2) - rat(1, 100);
        let r = check_family(&s, &x).unwrap();
        assert_eq!((r[0].lhs, r[0].rhs), (5, 2));
        assert!(check_family(&s, &rat(1, 2)).is_err());
    }
}
