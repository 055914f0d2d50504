//! Simple algebraic extensions ℚ[t]/(f) with an optional embedding onto the unit circle.
//!
//! When the modulus is self-reciprocal and a root `ζ` on the unit circle is chosen,
//! complex conjugation acts by `t ↦ 1/t` and every element has an exact real part,
//! which is a polynomial in `c = ζ + 1/ζ` evaluated at a real algebraic point.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebraic::RealAlgebraic;
use crate::poly::{cyclotomic, dickson_polys, trace_polynomial, Poly};
use crate::rational::{int, Rational};
use crate::AlgebraError;

/// Where the generator lands: `t = ζ` with `ζ + 1/ζ = c₀` and `Im ζ ≥ 0`.
#[derive(Clone, Debug)]
pub struct CircleEmbedding {
    /// Real subfield modulus in the variable `c`.
    pub trace: Poly,
    /// The chosen root of `trace`, in `[−2, 2]`.
    pub c0: RealAlgebraic,
}

#[derive(Debug)]
pub struct NumberField {
    modulus: Poly,
    embedding: Option<CircleEmbedding>,
    conj_powers: Vec<Vec<Rational>>,
    dickson: Vec<Poly>,
}

impl NumberField {
    /// ℚ[t]/(f) for a monic irreducible `f`, without an embedding.
    pub fn new(f: &Poly) -> Arc<NumberField> {
        Arc::new(NumberField {
            modulus: f.monic(),
            embedding: None,
            conj_powers: Vec::new(),
            dickson: Vec::new(),
        })
    }

    /// ℚ[t]/(f) with `t` sent to the unit-circle root whose trace is `c0`.
    ///
    /// `f` must be irreducible and self-reciprocal (or `t ∓ 1`), and `c0` a root
    /// of its trace polynomial.
    pub fn with_circle_root(f: &Poly, c0: RealAlgebraic) -> Result<Arc<NumberField>, AlgebraError> {
        let f = f.monic();
        let trace = match f.deg() {
            1 => Poly::new(vec![-c0.as_rational().ok_or_else(|| {
                AlgebraError::Field("linear modulus needs a rational trace".into())
            })?, Rational::one()]),
            _ => trace_polynomial(&f)
                .ok_or_else(|| AlgebraError::Field(format!("{f} is not self-reciprocal")))?,
        };
        if f.deg() == 1 {
            let root = -f.coeff(0);
            let want = if root == int(1) {
                int(2)
            } else if root == int(-1) {
                int(-2)
            } else {
                return Err(AlgebraError::Field(format!("{f} has no root on the circle")));
            };
            if c0.as_rational() != Some(want) {
                return Err(AlgebraError::Field(format!("{f} has no root with trace {c0:?}")));
            }
        } else if c0.sign_of(&trace) != 0 {
            return Err(AlgebraError::Field(format!("{c0:?} is not a root of {trace}")));
        }
        let d = f.deg();
        let base = NumberField {
            modulus: f.clone(),
            embedding: None,
            conj_powers: Vec::new(),
            dickson: Vec::new(),
        };
        // powers of t^{-1} realise the conjugation t ↦ 1/t
        let tinv = base.inverse_coeffs(&base.reduce(&Poly::t())).expect("t is a unit");
        let mut conj_powers = Vec::with_capacity(d);
        let mut cur = base.reduce(&Poly::one());
        for _ in 0..d {
            conj_powers.push(pad(cur.coeffs(), d));
            cur = (&cur * &tinv).rem(&f);
        }
        Ok(Arc::new(NumberField {
            modulus: f,
            embedding: Some(CircleEmbedding { trace, c0 }),
            conj_powers,
            dickson: dickson_polys(d),
        }))
    }

    /// ℚ(ζ) for `ζ = e^{2πi a/m}` with `0 < a/m ≤ 1/2`.
    pub fn cyclotomic_upper(a: i64, m: i64) -> Arc<NumberField> {
        let c0 = crate::algebraic::two_cos_rational_angle(a, m);
        let mm = m / num_integer::gcd(a, m);
        NumberField::with_circle_root(&cyclotomic(mm as u64), c0).expect("cyclotomic embedding")
    }

    /// ℚ[t]/(t² − c t + 1) for a rational `c` in (−2, 2), a cheap exact point on the circle.
    pub fn quadratic_circle_point(c: &Rational) -> Arc<NumberField> {
        let f = Poly::new(vec![Rational::one(), -c.clone(), Rational::one()]);
        NumberField::with_circle_root(&f, RealAlgebraic::rational(c.clone()))
            .expect("t² − ct + 1 is irreducible for |c| < 2")
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn embedding(&self) -> Option<&CircleEmbedding> {
        self.embedding.as_ref()
    }

    fn reduce(&self, p: &Poly) -> Poly {
        p.rem(&self.modulus)
    }

    fn inverse_coeffs(&self, a: &Poly) -> Option<Poly> {
        if a.is_zero() {
            return None;
        }
        let (g, s) = a.gcd_ext(&self.modulus);
        (g == Poly::one()).then_some(s)
    }
}

fn pad(c: &[Rational], d: usize) -> Vec<Rational> {
    let mut v = c.to_vec();
    v.resize(d, Rational::zero());
    v
}

/// An element of a [`NumberField`].
#[derive(Clone)]
pub struct FieldElem {
    field: Arc<NumberField>,
    value: Poly,
}

impl FieldElem {
    pub fn new(field: &Arc<NumberField>, p: &Poly) -> Self {
        FieldElem {
            field: field.clone(),
            value: field.reduce(p),
        }
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> Self {
        FieldElem::new(field, &Poly::constant(q))
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        FieldElem::new(field, &Poly::t())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, o: &FieldElem) {
        debug_assert!(Arc::ptr_eq(&self.field, &o.field) || self.field.modulus == o.field.modulus);
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem {
            field: self.field.clone(),
            value: &self.value + &o.value,
        }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem {
            field: self.field.clone(),
            value: &self.value - &o.value,
        }
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem::new(&self.field, &(&self.value * &o.value))
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            value: -&self.value,
        }
    }

    pub fn scale(&self, q: &Rational) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            value: self.value.scale(q),
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        self.field.inverse_coeffs(&self.value).map(|v| FieldElem {
            field: self.field.clone(),
            value: v,
        })
    }

    /// Complex conjugate under the circle embedding; the identity without one.
    pub fn conj(&self) -> FieldElem {
        if self.field.embedding.is_none() {
            return self.clone();
        }
        let d = self.field.degree();
        let mut out = vec![Rational::zero(); d];
        for (k, a) in self.value.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.field.conj_powers[k].iter().enumerate() {
                out[j] += a * b;
            }
        }
        FieldElem {
            field: self.field.clone(),
            value: Poly::new(out),
        }
    }

    /// Real part as a polynomial in `c`, reduced modulo the trace polynomial.
    pub fn real_part_in_c(&self) -> Option<Poly> {
        let emb = self.field.embedding.as_ref()?;
        let half = Rational::new(1.into(), 2.into());
        let mut r = Poly::constant(self.value.coeff(0));
        for (k, a) in self.value.coeffs().iter().enumerate().skip(1) {
            r = &r + &self.field.dickson[k].scale(&(a * &half));
        }
        Some(r.rem(&emb.trace))
    }

    /// Sign of the real part under the embedding, decided exactly.
    pub fn real_sign(&self) -> i32 {
        let emb = self
            .field
            .embedding
            .as_ref()
            .expect("real_sign needs a circle embedding");
        let r = self.real_part_in_c().unwrap();
        emb.c0.sign_of(&r)
    }

    pub fn approx(&self) -> num_complex::Complex64 {
        match &self.field.embedding {
            None => panic!("no embedding"),
            Some(e) => {
                let c = e.c0.approx();
                let th = (c / 2.0).clamp(-1.0, 1.0).acos();
                self.value
                    .eval_complex(num_complex::Complex64::from_polar(1.0, th))
            }
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, o: &Self) -> bool {
        self.value == o.value
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.value)
    }
}
