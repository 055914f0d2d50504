//! The Seifert-matrix pipeline.
//!
//! [`analyze`] runs everything: Keef reduction, the variation structure, the
//! characteristic polynomial, the signature profile, the spectrum and the H-numbers.

pub mod angle;
pub mod charpoly;
pub mod hnumbers;
pub mod keef;
pub mod signature;
pub mod spectrum;
pub mod torus;

use linkspec_algebra::{parse_rational, QMatrix, Rational};
use serde_json::Value;

pub use angle::{Angle, Half, SpecValue};
pub use charpoly::{char_poly_data, char_poly_data_of, CharPolyData, FactorInfo, FactorKind};
pub use hnumbers::{
    h_numbers, h_numbers_from_entries, reconstruct_signature, spectrum_from_h, validate_infinity, validate_local,
    HNumbers, ValidationReport, Violation,
};
pub use keef::{hvs_of, keef_reduce, Hvs, KeefDecomposition, KeefStep};
pub use signature::{signature_profile, tristram_levine_with, JumpPoint, SignatureProfile};
pub use spectrum::{delta_invariant, interval_counts, spectrum_from_profile, IspEntry, SpectrumData};
pub use torus::{random_congruence, random_unimodular, stabilize, torus_seifert};

use crate::Error;

/// A Seifert matrix with optional metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct SeifertMatrix {
    pub name: Option<String>,
    pub matrix: QMatrix,
    pub components: Option<usize>,
}

impl SeifertMatrix {
    pub fn new(matrix: QMatrix) -> SeifertMatrix {
        SeifertMatrix {
            name: None,
            matrix,
            components: None,
        }
    }

    pub fn named(name: &str, matrix: QMatrix) -> SeifertMatrix {
        SeifertMatrix {
            name: Some(name.to_string()),
            ..SeifertMatrix::new(matrix)
        }
    }

    /// Parses `{"name"?, "matrix": [[int | "p/q"]], "components"?}`.
    pub fn from_json(text: &str) -> Result<SeifertMatrix, Error> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SeifertMatrix::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<SeifertMatrix, Error> {
        let matrix = match v {
            Value::Object(o) => o
                .get("matrix")
                .ok_or_else(|| Error::Parse("missing \"matrix\"".into()))?,
            Value::Array(_) => v,
            _ => return Err(Error::Parse("a Seifert matrix must be an object or an array".into())),
        };
        let matrix = parse_matrix(matrix)?;
        let name = v.get("name").and_then(Value::as_str).map(String::from);
        let components = match v.get("components") {
            None | Some(Value::Null) => None,
            Some(c) => {
                let c = c
                    .as_u64()
                    .filter(|&c| c >= 1)
                    .ok_or_else(|| Error::Parse("\"components\" must be a positive integer".into()))?;
                Some(c as usize)
            }
        };
        Ok(SeifertMatrix {
            name,
            matrix,
            components,
        })
    }
}

/// An integer or `"p/q"` string.
pub fn parse_number(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(linkspec_algebra::int)
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer"))),
        Value::String(s) => parse_rational(s).map_err(|e| Error::Parse(e.to_string())),
        _ => Err(Error::Parse(format!("expected a number, got {v}"))),
    }
}

pub fn parse_matrix(v: &Value) -> Result<QMatrix, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                .iter()
                .map(parse_number)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = QMatrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))?;
    if !m.is_square() {
        return Err(Error::Parse(format!("Seifert matrix must be square, got {}×{}", m.rows(), m.cols())));
    }
    Ok(m)
}

/// Everything computed from one Seifert matrix.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub keef: KeefDecomposition,
    pub hvs: Hvs,
    pub cpd: CharPolyData,
    pub profile: SignatureProfile,
    pub spectrum: SpectrumData,
    /// `Err` carries the reason sign extraction was abandoned.
    pub h_numbers: Result<HNumbers, String>,
}

impl Analysis {
    pub fn irr(&self) -> usize {
        self.keef.irr
    }

    /// `(σ, n, ñ)` at a rational angle from the stored profile.
    pub fn signature_at(&self, x: &Rational) -> (i64, usize, usize) {
        let xf = linkspec_algebra::rational::frac(x);
        if num_traits::Zero::is_zero(&xf) {
            let m1 = self.cpd.multiplicity_of_one() as usize;
            return (0, m1 + self.irr(), m1);
        }
        let (s, n) = self.profile.value_at(&xf);
        (s, n, n - self.irr())
    }
}

pub fn analyze(s: &QMatrix) -> Result<Analysis, Error> {
    let keef = keef_reduce(s)?;
    let hvs = hvs_of(&keef.s_ndeg)?;
    let cpd = char_poly_data(&hvs, keef.irr);
    let profile = signature_profile(&keef.s_ndeg, &cpd)?;
    let spectrum = spectrum_from_profile(&cpd, &profile)?;
    let h_numbers = h_numbers(&hvs, &keef.s_ndeg, &profile, &cpd, &spectrum).map_err(|e| e.to_string());
    Ok(Analysis {
        keef,
        hvs,
        cpd,
        profile,
        spectrum,
        h_numbers,
    })
}

/// `(σ, n, ñ)` of `S` at `e^{2πix}`, evaluated directly.
pub fn tristram_levine(s: &QMatrix, x: &Rational) -> Result<(i64, usize, usize), Error> {
    let keef = keef_reduce(s)?;
    let hvs = hvs_of(&keef.s_ndeg)?;
    let cpd = char_poly_data(&hvs, keef.irr);
    Ok(tristram_levine_with(s, x, &cpd))
}

/// The spectrum by the signature-limit route.
pub fn spectrum(s: &QMatrix) -> Result<SpectrumData, Error> {
    Ok(analyze(s)?.spectrum)
}
