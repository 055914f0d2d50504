//! Spectrum at infinity of a polynomial from its link at infinity.
//!
//!     cargo run --example infinity_spectrum -- fixtures/briancon_model.json

use linkspec::infinity::{euler_identity, infinity_bounds, spectrum_at_infinity, validate_model, InfinityModel};
use linkspec::algebra::rational::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "fixtures/briancon_model.json".into());
    let m = InfinityModel::from_json(&std::fs::read_to_string(&path)?)?;
    for c in &validate_model(&m).checks {
        println!("{:<24} {:?} {}", c.name, c.ok, c.detail);
    }
    let sp = spectrum_at_infinity(&m)?;
    let shown: Vec<String> = sp.sp.iter().map(|v| v.to_string()).collect();
    println!("Sp_∞ = {{{}}}", shown.join(", "));
    let e = euler_identity(&m)?;
    println!("Euler identity: {} = deg Δ {} + Irr {} → {}", e.lhs, e.delta_degree, e.irr, e.ok);
    for s in infinity_bounds(&m, &rat(1, 3))? {
        println!("window {} at x = 1/3: hvs {}, infinity {}, Irr {}", s.window, s.hvs, s.infinity, s.irr);
    }
    Ok(())
}
