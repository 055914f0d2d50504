mod common;

use common::numeric_signature;
use linkspec::algebra::{int, rat, QMatrix, Rational};
use linkspec::seifert::{analyze, random_unimodular, Angle, SpectrumData};
use linkspec::semicont::{admissible_midpoints, Record};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seifert(max: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| QMatrix::from_fn(n, n, |i, j| int(v[i * n + j])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectrum_is_symmetric_and_sized_by_the_alexander_degree(s in seifert(4)) {
        let a = analyze(&s).unwrap();
        prop_assert!(a.spectrum.is_symmetric());
        prop_assert_eq!(a.spectrum.extended_len(), a.cpd.delta_h.deg());
        prop_assert_eq!(a.irr() + a.keef.s_ndeg.rows(), s.rows() - 2 * a.keef.reduction_moves);
    }

    #[test]
    fn profile_matches_numeric_signatures(s in seifert(4), num in 1i64..40) {
        let a = analyze(&s).unwrap();
        let x = rat(num, 41);
        let (sigma, nullity) = a.profile.value_at(&x);
        prop_assert_eq!(numeric_signature(&s, &x), (sigma, nullity));
    }

    #[test]
    fn congruence_preserves_every_invariant(s in seifert(4), seed in any::<u64>()) {
        let p = random_unimodular(s.rows(), 3, &mut ChaCha8Rng::seed_from_u64(seed));
        let t = p.transpose().mul(&s).mul(&p);
        let (a, b) = (analyze(&s).unwrap(), analyze(&t).unwrap());
        prop_assert_eq!(a.profile, b.profile);
        prop_assert_eq!(a.spectrum.sp, b.spectrum.sp);
    }

    #[test]
    fn midpoints_avoid_the_spectrum(vals in prop::collection::vec((1i64..24, 1i64..12), 1..6)) {
        let mut xs: Vec<Rational> = vals.iter().map(|&(a, b)| rat(a, b + 12)).collect();
        let mirrored: Vec<Rational> = xs.iter().map(|x| int(2) - x).collect();
        xs.extend(mirrored);
        xs.sort();
        let sp = SpectrumData::from_rationals(&xs).unwrap();
        let roots: Vec<Angle> = xs.iter().map(Angle::from_rational).collect();
        let mids = admissible_midpoints(&[&sp], &roots);
        prop_assert!(!mids.is_empty());
        prop_assert!(mids.windows(2).all(|w| w[0] < w[1]));
        for m in &mids {
            prop_assert!(*m > int(0) && *m < int(1));
            prop_assert!(xs.iter().all(|x| x.fract() != *m));
        }
    }

    #[test]
    fn record_verdict_is_the_sign_of_the_margin(lhs in -50i64..50, rhs in -50i64..50) {
        let r = Record { x: rat(1, 2), inequality: "inside".into(), lhs, rhs };
        prop_assert_eq!(r.ok(), lhs >= rhs);
        prop_assert_eq!(r.margin(), lhs - rhs);
    }
}
