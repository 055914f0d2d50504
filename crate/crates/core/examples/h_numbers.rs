//! H-numbers of a torus link, the two realisability validators, and what they
//! report once an impossible Jordan block is added by hand.

use linkspec::algebra::int;
use linkspec::seifert::{analyze, torus_seifert, validate_infinity, validate_local, h_numbers_from_entries, Angle, HNumbers};

fn show(label: &str, h: &HNumbers) {
    let local = validate_local(h);
    let inf = validate_infinity(h);
    println!("{label}: local {}, infinity {}", local.passed, inf.passed);
    for v in local.violations.iter().chain(&inf.violations) {
        println!("  clause ({}) {}", v.clause, v.detail);
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = analyze(&torus_seifert(3, 4)?)?;
    let h = a.h_numbers.map_err(|e| e.to_string())?;
    for e in &h.p {
        println!("p^{}_{}({:+}) = {}", e.k, e.angle, e.u, e.count);
    }
    show("T(3,4)", &h);

    // a size-one block at λ = 1 with sign −1 cannot come from an isolated singularity
    let mut entries: Vec<_> = h.p.iter().map(|e| (e.angle.clone(), e.k, e.u, e.count)).collect();
    entries.push((Angle::from_rational(&int(1)), 1, -1, 1));
    let bad = h_numbers_from_entries(&entries);
    show("T(3,4) + p¹₁(−1)", &bad);
    Ok(())
}
