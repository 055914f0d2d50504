//! The Tristram–Levine signature function of the (2,5) torus knot, and the
//! spectrum counts it is built from.

use linkspec::algebra::rational::rat;
use linkspec::seifert::{analyze, interval_counts, torus_seifert, tristram_levine_with};

fn main() -> Result<(), linkspec::Error> {
    let s = torus_seifert(2, 5)?;
    let a = analyze(&s)?;
    for (i, j) in a.profile.jumps.iter().enumerate() {
        println!(
            "plateau {:>3} | jump at x = {} with σ = {}, n = {}",
            a.profile.plateaus[i], j.angle, j.sigma, j.nullity
        );
    }
    println!("plateau {:>3}", a.profile.sigma_before_one());

    // away from the jumps, 2·#Sp∩(x, x+1) = deg Δ − σ(x) and 2·#Sp∖[x, x+1] = deg Δ + σ(x)
    let deg = a.cpd.delta_h.deg() as i64;
    for x in [rat(1, 7), rat(1, 3), rat(1, 2), rat(4, 5)] {
        let (sigma, _, _) = tristram_levine_with(&s, &x, &a.cpd);
        let (inside, outside, _) = interval_counts(&a.spectrum, &x);
        println!(
            "x = {x}: σ = {sigma}, inside {inside} (deg−σ)/2 = {}, outside {outside} (deg+σ)/2 = {}",
            (deg - sigma) / 2,
            (deg + sigma) / 2
        );
    }
    Ok(())
}
