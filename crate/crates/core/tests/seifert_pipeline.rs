use linkspec::algebra::{rat, Rational};
use linkspec::seifert::{analyze, spectrum_from_h, torus_seifert, validate_local};

fn torus_formula(p: i64, q: i64) -> Vec<Rational> {
    let mut v: Vec<Rational> = (1..p).flat_map(|i| (1..q).map(move |j| rat(i, p) + rat(j, q))).collect();
    v.sort();
    v
}

#[test]
fn torus_spectra_match_formula() {
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (2, 4), (3, 3)] {
        let a = analyze(&torus_seifert(p, q).unwrap()).unwrap();
        assert_eq!(a.spectrum.rationals().unwrap(), torus_formula(p as i64, q as i64), "T({p},{q})");
        let hn = a.h_numbers.as_ref().unwrap();
        assert!(validate_local(hn).passed, "T({p},{q})");
        assert_eq!(spectrum_from_h(hn).unwrap().sp, a.spectrum.sp, "T({p},{q})");
    }
}
