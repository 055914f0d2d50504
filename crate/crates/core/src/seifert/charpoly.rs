//! The characteristic polynomial `Δ^h = det(h − t·Id)` and where its roots lie.

use linkspec_algebra::poly::{complex_roots, cyclotomic, irreducible_factors_squarefree, square_free, trace_polynomial};
use linkspec_algebra::{cyclotomic_factor, int, Poly, QMatrix, RealAlgebraic};
use num_complex::Complex64;
use num_integer::Integer;

use super::angle::{Angle, Half};
use super::keef::Hvs;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// The cyclotomic polynomial of the given order.
    Cyclotomic(u64),
    /// Self-reciprocal, all roots on the circle, not cyclotomic.
    Circle,
    /// No roots on the circle.
    OffCircle,
    /// Some roots on the circle and some off it.
    Mixed,
}

/// An irreducible factor of `Δ^h`.
#[derive(Clone, Debug)]
pub struct FactorInfo {
    pub poly: Poly,
    pub multiplicity: u32,
    pub kind: FactorKind,
    /// Roots on the circle with `x ∈ (0, 1/2]`, or `x = 1` for `t − 1`.
    pub upper_roots: Vec<Angle>,
    /// Numeric roots strictly inside the unit disc.
    pub inside_roots: Vec<Complex64>,
}

impl FactorInfo {
    pub fn on_circle_count(&self) -> usize {
        self.upper_roots
            .iter()
            .map(|a| {
                if a.is_one() || a.exact().is_some_and(|x| *x == linkspec_algebra::rat(1, 2)) {
                    1
                } else {
                    2
                }
            })
            .sum()
    }

    pub fn is_cyclotomic(&self) -> bool {
        matches!(self.kind, FactorKind::Cyclotomic(_))
    }
}

#[derive(Clone, Debug)]
pub struct CharPolyData {
    pub delta_h: Poly,
    pub irr: usize,
    pub factors: Vec<FactorInfo>,
    /// Every root on the circle with `x ∈ (0, 1]`, ascending, with multiplicity.
    pub unit_circle_roots: Vec<(Angle, u32)>,
    pub diagnostics: Vec<String>,
}

impl CharPolyData {
    pub fn degree(&self) -> usize {
        self.delta_h.deg()
    }

    pub fn has_off_circle_roots(&self) -> bool {
        self.factors.iter().any(|f| !f.inside_roots.is_empty())
    }

    pub fn all_roots_of_unity(&self) -> bool {
        self.factors.iter().all(FactorInfo::is_cyclotomic)
    }

    pub fn multiplicity_at(&self, a: &Angle) -> u32 {
        self.unit_circle_roots
            .iter()
            .find(|(b, _)| b == a)
            .map_or(0, |(_, m)| *m)
    }

    /// The factor having `a` (or its mirror) as a root.
    pub fn factor_of(&self, a: &Angle) -> Option<&FactorInfo> {
        let up = if a.half() == Half::Upper || a.is_one() { a.clone() } else { a.mirror() };
        self.factors.iter().find(|f| f.upper_roots.contains(&up))
    }

    /// Multiplicity of the root 1.
    pub fn multiplicity_of_one(&self) -> u32 {
        self.delta_h.multiplicity_of(&Poly::from_ints(&[-1, 1]))
    }
}

fn cyclotomic_upper_angles(m: u64) -> Vec<Angle> {
    let m = m as i64;
    (1..=m)
        .filter(|&a| a.gcd(&m) == 1 && (m == 1 || 2 * a <= m))
        .map(|a| Angle::root_of_unity(a, m))
        .collect()
}

fn classify(f: &Poly, mult: u32) -> FactorInfo {
    let mut upper = Vec::new();
    if f.deg() >= 2 {
        if let Some(g) = trace_polynomial(f) {
            for c in RealAlgebraic::roots_in(&g, &int(-2), &int(2)) {
                upper.push(Angle::from_trace(c, Half::Upper));
            }
        }
    } else if *f == Poly::from_ints(&[1, 1]) {
        upper.push(Angle::root_of_unity(1, 2));
    } else if *f == Poly::from_ints(&[-1, 1]) {
        upper.push(Angle::root_of_unity(1, 1));
    }
    upper.sort();
    let on = if f.deg() == 1 { upper.len() } else { 2 * upper.len() };
    let mut roots = complex_roots(f);
    roots.sort_by(|a, b| a.norm().ln().abs().partial_cmp(&b.norm().ln().abs()).unwrap());
    let inside: Vec<Complex64> = roots[on.min(roots.len())..]
        .iter()
        .filter(|z| z.norm() < 1.0)
        .copied()
        .collect();
    let kind = if on == 0 {
        FactorKind::OffCircle
    } else if on == f.deg() {
        FactorKind::Circle
    } else {
        FactorKind::Mixed
    };
    FactorInfo {
        poly: f.clone(),
        multiplicity: mult,
        kind,
        upper_roots: upper,
        inside_roots: inside,
    }
}

/// Factors `Δ^h` and locates its roots relative to the unit circle.
pub fn char_poly_data(hvs: &Hvs, irr: usize) -> CharPolyData {
    char_poly_data_of(&hvs.h.char_poly(), irr)
}

pub fn char_poly_data_of(delta_h: &Poly, irr: usize) -> CharPolyData {
    let mut factors = Vec::new();
    let (cyc, rest) = cyclotomic_factor(delta_h);
    for (&m, &e) in &cyc {
        factors.push(FactorInfo {
            poly: cyclotomic(m),
            multiplicity: e,
            kind: FactorKind::Cyclotomic(m),
            upper_roots: cyclotomic_upper_angles(m),
            inside_roots: Vec::new(),
        });
    }
    for (part, e) in square_free(&rest) {
        for f in irreducible_factors_squarefree(&part) {
            factors.push(classify(&f, e));
        }
    }
    let mut diagnostics = Vec::new();
    let mut unit = Vec::new();
    for f in &factors {
        if matches!(f.kind, FactorKind::Circle | FactorKind::Mixed) {
            diagnostics.push(format!(
                "unsupported on-circle factor {}: roots on the unit circle that are not roots of unity",
                f.poly
            ));
        }
        for a in &f.upper_roots {
            unit.push((a.clone(), f.multiplicity));
            let m = a.mirror();
            if m != *a {
                unit.push((m, f.multiplicity));
            }
        }
    }
    unit.sort_by(|a, b| a.0.cmp(&b.0));
    CharPolyData {
        delta_h: delta_h.clone(),
        irr,
        factors,
        unit_circle_roots: unit,
        diagnostics,
    }
}

/// `Δ^h` of a matrix directly.
pub fn delta_of(h: &QMatrix) -> Poly {
    h.char_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::keef::hvs_of;
    use linkspec_algebra::rat;

    #[test]
    fn trefoil_and_t24() {
        let h = hvs_of(&QMatrix::from_ints(&[&[-1, 1], &[0, -1]])).unwrap();
        let c = char_poly_data(&h, 0);
        assert_eq!(c.delta_h, Poly::from_ints(&[1, -1, 1]));
        let xs: Vec<_> = c.unit_circle_roots.iter().map(|(a, m)| (a.exact().cloned().unwrap(), *m)).collect();
        assert_eq!(xs, vec![(rat(1, 6), 1), (rat(5, 6), 1)]);
        let h = hvs_of(&QMatrix::from_ints(&[&[-1, 1, 0], &[0, -1, 1], &[0, 0, -1]])).unwrap();
        let c = char_poly_data(&h, 0);
        assert!(c.delta_h.associated(&(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[1, 0, 1]))));
        let xs: Vec<_> = c.unit_circle_roots.iter().map(|(a, _)| a.exact().cloned().unwrap()).collect();
        assert_eq!(xs, vec![rat(1, 4), rat(3, 4), rat(1, 1)]);
        let c = char_poly_data_of(&Poly::one(), 0);
        assert!(c.factors.is_empty());
    }

    #[test]
    fn classification() {
        let c = char_poly_data_of(&Poly::from_ints(&[1, -3, 1]), 0);
        assert_eq!(c.factors[0].kind, FactorKind::OffCircle);
        assert_eq!(c.factors[0].inside_roots.len(), 1);
        let lehmer = Poly::from_ints(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let c = char_poly_data_of(&lehmer, 0);
        assert_eq!(c.factors[0].kind, FactorKind::Mixed);
        assert_eq!(c.factors[0].upper_roots.len(), 4);
        assert_eq!(c.factors[0].inside_roots.len(), 1);
        assert_eq!(c.unit_circle_roots.len(), 8);
        assert!(!c.diagnostics.is_empty());
        // t² − t/2 + 1 has irrational angle roots
        let c = char_poly_data_of(&Poly::new(vec![rat(1, 1), rat(-1, 2), rat(1, 1)]), 0);
        assert_eq!(c.factors[0].kind, FactorKind::Circle);
    }
}
