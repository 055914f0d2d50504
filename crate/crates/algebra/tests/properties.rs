use linkspec_algebra::matrix::jordan_block_counts;
use linkspec_algebra::poly::{complex_roots, cyclotomic};
use linkspec_algebra::{cyclotomic_factor, factor, int, FieldElem, NumberField, Poly, QMatrix, Rational};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|mut c| {
        if c.iter().all(|&x| x == 0) {
            c[0] = 1;
        }
        Poly::from_ints(&c)
    })
}

fn cyclo_product() -> impl Strategy<Value = Poly> {
    prop::collection::vec(1u64..=12, 0..3)
        .prop_map(|ds| ds.into_iter().fold(Poly::one(), |acc, d| &acc * &cyclotomic(d)))
}

fn matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| QMatrix::from_fn(n, n, |i, j| int(v[i * n + j])))
}

fn unimodular(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..8).prop_map(move |ops| {
        let mut p = QMatrix::identity(n);
        for (i, j, c) in ops {
            if i != j {
                let mut e = QMatrix::identity(n);
                e[(i, j)] = int(c);
                p = p.mul(&e);
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_multiplicities_add(a in cyclo_product(), b in cyclo_product(), r in small_poly()) {
        let pa = &a * &r;
        let pb = b.clone();
        let (ma, _) = cyclotomic_factor(&pa);
        let (mb, _) = cyclotomic_factor(&pb);
        let (mab, rem) = cyclotomic_factor(&(&pa * &pb));
        let mut sum = ma.clone();
        for (d, m) in mb {
            *sum.entry(d).or_insert(0) += m;
        }
        prop_assert_eq!(mab, sum);
        prop_assert!(cyclotomic_factor(&rem).0.is_empty());
    }

    #[test]
    fn factorisation_reassembles(a in small_poly(), b in small_poly(), c in small_poly()) {
        let p = &(&a * &b) * &c;
        prop_assume!(p.deg() > 0);
        let fs = factor(&p);
        let prod = fs.iter().fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        prop_assert_eq!(prod, p.monic());
        for (f, _) in &fs {
            prop_assert_eq!(f.lc(), Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn inertia_is_congruence_invariant(m in matrix(4), p in unimodular(4)) {
        let h = m.add(&m.transpose());
        let i0 = h.hermitian_inertia().unwrap();
        let i1 = p.transpose().mul(&h).mul(&p).hermitian_inertia().unwrap();
        prop_assert_eq!(i0, i1);
        prop_assert_eq!(i0.size(), 4);
        // nullity agrees with rank
        prop_assert_eq!(i0.zero, 4 - h.rank());
    }

    #[test]
    fn cyclotomic_inertia_is_congruence_invariant(m in matrix(3), p in unimodular(3), a in 1i64..5) {
        let k = NumberField::cyclotomic_upper(a, 10);
        let z = FieldElem::generator(&k);
        let one = FieldElem::from_rational(&k, int(1));
        let s = m.over(&k);
        let h = s.scale(&one.sub(&z)).add(&s.transpose().scale(&one.sub(&z.conj())));
        let pk = p.over(&k);
        let i0 = h.hermitian_inertia().unwrap();
        let i1 = pk.adjoint().mul(&h).mul(&pk).hermitian_inertia().unwrap();
        prop_assert_eq!(i0, i1);
    }

    #[test]
    fn rank_profiles_account_for_every_dimension(m in matrix(4)) {
        let cp = m.char_poly();
        let mut total = 0;
        for (f, _) in factor(&cp) {
            let k = NumberField::new(&f);
            let mk = m.over(&k);
            let z = FieldElem::generator(&k);
            let ranks = mk.rank_profile(&z, 4);
            let counts = jordan_block_counts(&ranks);
            let dim: usize = counts.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
            total += dim * f.deg();
        }
        prop_assert_eq!(total, 4);
    }
}

#[test]
fn numeric_roots_match_degree() {
    let p = Poly::from_ints(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let r = complex_roots(&p);
    assert_eq!(r.len(), 10);
    for z in r {
        assert!(p.eval_complex(z).norm() < 1e-9);
    }
}
