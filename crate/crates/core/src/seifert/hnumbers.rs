//! H-numbers: multiplicities of the indecomposable pieces `W^k_λ(±1)` and `V^{2k}_λ`
//! of the variation structure, and the two monodromy-type validity checks.

use linkspec_algebra::matrix::jordan_block_counts;
use linkspec_algebra::{Poly, QMatrix, Rational};
use num_complex::Complex64;

use super::angle::{Angle, SpecValue};
use super::charpoly::CharPolyData;
use super::keef::Hvs;
use super::signature::SignatureProfile;
use super::spectrum::{isp_of, multiplicity, SpectrumData};
use crate::Error;

/// `p^k_λ(u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PEntry {
    pub angle: Angle,
    pub k: usize,
    pub u: i8,
    pub count: usize,
}

/// Unsigned number of Jordan blocks of size `k` at a circle eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockEntry {
    pub angle: Angle,
    pub k: usize,
    pub count: usize,
}

/// Blocks of an irreducible factor with no (or only some) roots on the circle.
/// `blocks[k-1]` is `q^k_λ` for every root `λ` of the factor inside the disc.
#[derive(Clone, Debug)]
pub struct OffCircleFactor {
    pub factor: Poly,
    pub inside_roots: Vec<Complex64>,
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct HNumbers {
    pub p: Vec<PEntry>,
    pub blocks: Vec<BlockEntry>,
    pub off_circle: Vec<OffCircleFactor>,
    /// `(λ, k)` whose sign split is not determined.
    pub unresolved: Vec<(Angle, usize)>,
}

impl HNumbers {
    pub fn p(&self, angle: &Angle, k: usize, u: i8) -> usize {
        self.p
            .iter()
            .filter(|e| e.angle == *angle && e.k == k && e.u == u)
            .map(|e| e.count)
            .sum()
    }

    pub fn blocks_at(&self, angle: &Angle, k: usize) -> usize {
        self.blocks
            .iter()
            .filter(|e| e.angle == *angle && e.k == k)
            .map(|e| e.count)
            .sum()
    }

    pub fn angles(&self) -> Vec<Angle> {
        let mut v: Vec<Angle> = self.blocks.iter().map(|b| b.angle.clone()).collect();
        v.dedup();
        v
    }

    /// `(factor, k, q^k)` for every nonzero q-number.
    pub fn q(&self) -> Vec<(Poly, usize, usize)> {
        let mut out = Vec::new();
        for f in &self.off_circle {
            if f.inside_roots.is_empty() {
                continue;
            }
            for (i, &c) in f.blocks.iter().enumerate() {
                if c > 0 {
                    out.push((f.factor.clone(), i + 1, c));
                }
            }
        }
        out
    }

    pub fn is_resolved(&self) -> bool {
        self.unresolved.is_empty()
    }

    /// Dimension accounted for by all blocks; equals `deg Δ^h`.
    pub fn total_dimension(&self) -> usize {
        let circle: usize = self.blocks.iter().map(|b| b.k * b.count).sum();
        let off: usize = self
            .off_circle
            .iter()
            .map(|f| f.factor.deg() * f.blocks.iter().enumerate().map(|(i, c)| (i + 1) * c).sum::<usize>())
            .sum();
        circle + off
    }

    fn set(&mut self, angle: &Angle, k: usize, u: i8, count: usize) {
        if count > 0 {
            self.p.push(PEntry {
                angle: angle.clone(),
                k,
                u,
                count,
            });
        }
    }
}

/// Jordan block counts at one root of the irreducible factor `f`.
///
/// Over `ℚ`, `dim ker f(H)^k = deg f · dim ker (H − λ)^k`, so the rank profile is
/// read off rational matrices instead of matrices over `ℚ[t]/(f)`.
fn block_counts(h: &QMatrix, f: &Poly, mult: u32) -> Vec<usize> {
    let n = h.rows();
    let d = f.deg();
    if mult == 1 {
        return vec![1];
    }
    let mut fh = QMatrix::zeros(n, n);
    for c in f.coeffs().iter().rev() {
        fh = fh.mul(h).add(&QMatrix::identity(n).scale(c));
    }
    let mut ranks = vec![n];
    let mut power = QMatrix::identity(n);
    for _ in 0..=mult {
        power = power.mul(&fh);
        let null = n - power.rank();
        ranks.push(n - null / d);
    }
    let mut counts = jordan_block_counts(&ranks);
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn signed(num: i64, what: &str) -> Result<usize, Error> {
    if num < 0 {
        return Err(Error::Inconsistent(format!("negative H-number for {what}")));
    }
    Ok(num as usize)
}

/// Solves for the H-numbers of a nondegenerate part.
///
/// Block sizes come from rank profiles. For eigenvalues that are roots of unity
/// and blocks of size at most two, the signs follow from the spectrum and the
/// point value of the signature at the jump. At `λ = 1` with only simple blocks the
/// signs are read off the restriction of `S` to the eigenspace.
pub fn h_numbers(
    hvs: &Hvs,
    s_ndeg: &QMatrix,
    profile: &SignatureProfile,
    cpd: &CharPolyData,
    spectrum: &SpectrumData,
) -> Result<HNumbers, Error> {
    let mut hn = HNumbers::default();
    for f in &cpd.factors {
        let counts = block_counts(&hvs.h, &f.poly, f.multiplicity);
        if !f.inside_roots.is_empty() || f.on_circle_count() < f.poly.deg() {
            hn.off_circle.push(OffCircleFactor {
                factor: f.poly.clone(),
                inside_roots: f.inside_roots.clone(),
                blocks: counts.clone(),
            });
        }
        let mut angles = Vec::new();
        for a in &f.upper_roots {
            angles.push(a.clone());
            let m = a.mirror();
            if m != *a {
                angles.push(m);
            }
        }
        let nk = |k: usize| counts.get(k - 1).copied().unwrap_or(0);
        for angle in angles {
            for (i, &c) in counts.iter().enumerate() {
                if c > 0 {
                    hn.blocks.push(BlockEntry {
                        angle: angle.clone(),
                        k: i + 1,
                        count: c,
                    });
                }
            }
            if counts.len() >= 3 || !f.is_cyclotomic() {
                for (i, &c) in counts.iter().enumerate() {
                    if c > 0 {
                        hn.unresolved.push((angle.clone(), i + 1));
                    }
                }
                continue;
            }
            let (n1, n2) = (nk(1) as i64, nk(2) as i64);
            let a = multiplicity(spectrum, &angle, 0) as i64;
            let b = multiplicity(spectrum, &angle, 1) as i64;
            if angle.is_one() {
                let plus = signed(a - n2, "p¹₁(+1)")?;
                let minus = signed(b - n2, "p¹₁(−1)")?;
                if n2 == 0 {
                    let ker = hvs.h.sub(&QMatrix::identity(hvs.n)).kernel();
                    let kmat = QMatrix::from_columns(&(), hvs.n, &ker);
                    let r = kmat.transpose().mul(s_ndeg).mul(&kmat);
                    let sym = r.add(&r.transpose());
                    let i = sym.hermitian_inertia()?;
                    if i.zero != 0 || i.minus != plus || i.plus != minus {
                        return Err(Error::Inconsistent(format!(
                            "eigenvalue 1: restricted form has inertia ({}, {}, {}) but the spectrum gives p¹(+1)={plus}, p¹(−1)={minus}",
                            i.plus, i.minus, i.zero
                        )));
                    }
                } else {
                    hn.unresolved.push((angle.clone(), 2));
                }
                hn.set(&angle, 1, 1, plus);
                hn.set(&angle, 1, -1, minus);
                continue;
            }
            let j = profile
                .jump_index(&angle)
                .ok_or_else(|| Error::Inconsistent(format!("no jump at {angle}")))?;
            let twice_e = 2 * profile.jumps[j].sigma - profile.plateaus[j] - profile.plateaus[j + 1];
            if twice_e % 2 != 0 || (n2 + twice_e / 2) % 2 != 0 {
                return Err(Error::Inconsistent(format!("odd sign excess at {angle}")));
            }
            let e = twice_e / 2;
            let p1m = signed(a - n2, "p¹(−1)")?;
            let p1p = signed(b - n2, "p¹(+1)")?;
            if (p1m + p1p) as i64 != n1 {
                return Err(Error::Inconsistent(format!(
                    "simple blocks at {angle}: {n1} from ranks, {} from the spectrum",
                    p1m + p1p
                )));
            }
            hn.set(&angle, 1, -1, p1m);
            hn.set(&angle, 1, 1, p1p);
            hn.set(&angle, 2, 1, signed((n2 + e) / 2, "p²(+1)")?);
            hn.set(&angle, 2, -1, signed((n2 - e) / 2, "p²(−1)")?);
        }
    }
    hn.blocks.sort_by(|x, y| x.angle.cmp(&y.angle).then(x.k.cmp(&y.k)));
    hn.p.sort_by(|x, y| x.angle.cmp(&y.angle).then(x.k.cmp(&y.k)).then(x.u.cmp(&y.u)));
    hn.unresolved.sort();
    hn.unresolved.dedup();
    Ok(hn)
}

/// `s(α)` summed over the blocks at the eigenvalue of `v`.
fn s_of(hn: &HNumbers, v: &SpecValue) -> usize {
    let fl = v.floor();
    let sgn = if fl % 2 == 0 { 1 } else { -1 };
    let mut twice = 0i64;
    for e in hn.p.iter().filter(|e| e.angle == *v.angle()) {
        let k = e.k as i64;
        let c = e.count as i64;
        if k % 2 == 1 {
            twice += (k - e.u as i64 * sgn) * c;
        } else {
            twice += k * c;
        }
    }
    (twice / 2) as usize
}

/// The spectrum defined by a full set of H-numbers.
pub fn spectrum_from_h(hn: &HNumbers) -> Result<SpectrumData, Error> {
    if !hn.is_resolved() {
        return Err(Error::Unresolved(format!(
            "{} (eigenvalue, block size) pairs have undetermined signs",
            hn.unresolved.len()
        )));
    }
    let mut sp = Vec::new();
    let mut angles: Vec<Angle> = hn.p.iter().map(|e| e.angle.clone()).collect();
    angles.dedup();
    for a in angles {
        for shift in [0u8, 1] {
            let v = SpecValue::new(a.clone(), shift);
            for _ in 0..s_of(hn, &v) {
                sp.push(v.clone());
            }
        }
    }
    sp.sort();
    // imaginary part: Σ k·q^k copies per inside root
    let mut cpd_like = Vec::new();
    for f in &hn.off_circle {
        let w: usize = f.blocks.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
        cpd_like.push(super::charpoly::FactorInfo {
            poly: f.factor.clone(),
            multiplicity: w as u32,
            kind: super::charpoly::FactorKind::OffCircle,
            upper_roots: Vec::new(),
            inside_roots: f.inside_roots.clone(),
        });
    }
    let fake = CharPolyData {
        delta_h: Poly::one(),
        irr: 0,
        factors: cpd_like,
        unit_circle_roots: Vec::new(),
        diagnostics: Vec::new(),
    };
    Ok(SpectrumData { sp, isp: isp_of(&fake) })
}

/// `σ` and `ñ` at `ζ = e^{2πix}` rebuilt from resolved H-numbers and the spectrum.
pub fn reconstruct_signature(hn: &HNumbers, sp: &SpectrumData, x: &Rational) -> (i64, usize) {
    let (inside, outside, _) = super::spectrum::interval_counts(sp, x);
    let angle = Angle::from_rational(x);
    let mut even = 0i64;
    let mut blocks = 0usize;
    for e in hn.p.iter().filter(|e| e.angle == angle) {
        if e.k % 2 == 0 {
            even += e.u as i64 * e.count as i64;
        }
        blocks += e.count;
    }
    (outside as i64 - inside as i64 + even, blocks)
}

/// Outcome of a clause-by-clause check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Clauses that could not be decided because signs are unresolved.
    pub unverified: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub clause: char,
    pub detail: String,
}

impl ValidationReport {
    fn finish(mut self) -> Self {
        self.passed = self.violations.is_empty();
        self
    }

    fn flag(&mut self, clause: char, detail: String) {
        self.violations.push(Violation { clause, detail });
    }

    pub fn clauses(&self) -> Vec<char> {
        let mut c: Vec<char> = self.violations.iter().map(|v| v.clause).collect();
        c.dedup();
        c
    }
}

fn common_ab(hn: &HNumbers, r: &mut ValidationReport) {
    for (f, k, c) in hn.q() {
        r.flag('a', format!("q^{k} = {c} for the factor {f}"));
    }
    for b in &hn.blocks {
        if b.angle.as_root_of_unity().is_none() {
            r.flag('a', format!("eigenvalue at x = {} is not a root of unity", b.angle));
        }
    }
    for b in &hn.blocks {
        if b.k > 2 {
            r.flag('b', format!("{} Jordan block(s) of size {} at x = {}", b.count, b.k, b.angle));
        }
        if b.k == 2 && b.angle.is_one() {
            r.flag('b', format!("p²₁(±1) total {} at λ = 1", b.count));
        }
    }
}

fn sign_clause(hn: &HNumbers, r: &mut ValidationReport, clause: char, k: usize, u: i8, at_one: bool) {
    let name = if u > 0 { "+1" } else { "−1" };
    for a in hn.angles() {
        if a.is_one() != at_one {
            continue;
        }
        let c = hn.p(&a, k, u);
        if c > 0 {
            r.flag(clause, format!("p^{k}({name}) = {c} at x = {a}"));
        } else if hn.unresolved.contains(&(a.clone(), k)) && hn.blocks_at(&a, k) > 0 {
            r.unverified.push(Violation {
                clause,
                detail: format!("p^{k}({name}) at x = {a} is unresolved"),
            });
        }
    }
}

/// Constraints satisfied by links of isolated plane curve singularities.
pub fn validate_local(hn: &HNumbers) -> ValidationReport {
    let mut r = ValidationReport::default();
    common_ab(hn, &mut r);
    sign_clause(hn, &mut r, 'c', 2, -1, false);
    sign_clause(hn, &mut r, 'c', 1, -1, true);
    r.finish()
}

/// Constraints satisfied by regular links at infinity.
pub fn validate_infinity(hn: &HNumbers) -> ValidationReport {
    let mut r = ValidationReport::default();
    common_ab(hn, &mut r);
    sign_clause(hn, &mut r, 'c', 1, -1, true);
    sign_clause(hn, &mut r, 'd', 2, 1, false);
    r.finish()
}

/// Builds H-numbers by hand, for tests and for checking external data.
pub fn h_numbers_from_entries(entries: &[(Angle, usize, i8, usize)]) -> HNumbers {
    let mut hn = HNumbers::default();
    for (a, k, u, c) in entries {
        hn.set(a, *k, *u, *c);
    }
    let mut tallies: Vec<BlockEntry> = Vec::new();
    for e in &hn.p {
        match tallies.iter_mut().find(|b| b.angle == e.angle && b.k == e.k) {
            Some(b) => b.count += e.count,
            None => tallies.push(BlockEntry {
                angle: e.angle.clone(),
                k: e.k,
                count: e.count,
            }),
        }
    }
    tallies.sort_by(|x, y| x.angle.cmp(&y.angle).then(x.k.cmp(&y.k)));
    hn.blocks = tallies;
    hn.p.sort_by(|x, y| x.angle.cmp(&y.angle).then(x.k.cmp(&y.k)).then(x.u.cmp(&y.u)));
    hn
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkspec_algebra::rat;

    #[test]
    fn from_h_examples() {
        let one = Angle::from_rational(&rat(1, 1));
        let hn = h_numbers_from_entries(&[(one.clone(), 1, 1, 1)]);
        assert_eq!(spectrum_from_h(&hn).unwrap().rationals().unwrap(), vec![rat(1, 1)]);
        let hn = h_numbers_from_entries(&[(one.clone(), 1, -1, 1)]);
        assert_eq!(spectrum_from_h(&hn).unwrap().rationals().unwrap(), vec![rat(2, 1)]);
        let validation = validate_local(&hn);
        assert!(!validation.passed);
        assert_eq!(validation.clauses(), vec!['c']);
        let trefoil = h_numbers_from_entries(&[
            (Angle::from_rational(&rat(1, 6)), 1, 1, 1),
            (Angle::from_rational(&rat(5, 6)), 1, -1, 1),
        ]);
        assert_eq!(
            spectrum_from_h(&trefoil).unwrap().rationals().unwrap(),
            vec![rat(5, 6), rat(7, 6)]
        );
        assert!(validate_local(&trefoil).passed);
        let i = Angle::from_rational(&rat(1, 4));
        let bad = h_numbers_from_entries(&[(i, 2, 1, 1)]);
        let v = validate_infinity(&bad);
        assert_eq!(v.clauses(), vec!['d']);
        assert!(validate_local(&bad).passed);
    }
}
