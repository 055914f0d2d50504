//! Spectra of torus links from their Seifert matrices against the closed form
//! `{i/p + j/q : 0 < i < p, 0 < j < q}`.

use linkspec::cli::torus_formula;
use linkspec::seifert::{analyze, torus_seifert};

fn main() -> Result<(), linkspec::Error> {
    for (p, q) in [(2, 3), (2, 4), (3, 4), (3, 5), (4, 6)] {
        let a = analyze(&torus_seifert(p, q)?)?;
        let computed: Vec<_> = a.spectrum.sp.iter().filter_map(|v| v.exact()).collect();
        let expected = torus_formula(p, q);
        let shown: Vec<String> = computed.iter().map(|x| x.to_string()).collect();
        println!(
            "T({p},{q}): {} values, formula {} | {}",
            computed.len(),
            if computed == expected { "agrees" } else { "DISAGREES" },
            shown.join(" ")
        );
    }
    Ok(())
}
