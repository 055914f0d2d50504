//! Full analysis of a Seifert matrix read from a JSON file (defaults to the trefoil).
//!
//!     cargo run --example seifert_analyze -- fixtures/trefoil.json

use linkspec::report;
use linkspec::seifert::{analyze, SeifertMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "fixtures/trefoil.json".into());
    let link = SeifertMatrix::from_json(&std::fs::read_to_string(&path)?)?;
    let a = analyze(&link.matrix)?;

    println!("Irr = {}, size of the nondegenerate part = {}", a.irr(), a.keef.s_ndeg.rows());
    println!("Δ^h = {}", a.cpd.delta_h);
    let sp: Vec<String> = a.spectrum.sp.iter().map(|v| v.to_string()).collect();
    println!("Sp = {{{}}}", sp.join(", "));
    for e in &a.spectrum.isp {
        println!("ISp ∋ {:.6} + {:.6}i", e.re, e.im);
    }
    match &a.h_numbers {
        Ok(h) => println!("{}", serde_json::to_string_pretty(&report::h_numbers(h))?),
        Err(e) => println!("H-numbers unavailable: {e}"),
    }
    Ok(())
}
