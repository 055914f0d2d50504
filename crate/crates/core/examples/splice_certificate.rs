//! Linking data and the negative-definiteness certificate of a splice diagram.
//!
//!     cargo run --example splice_certificate -- fixtures/briancon_diagram.json

use linkspec::splice::{boundary_char_poly, certify, linking_data, SpliceDiagram};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "fixtures/briancon_diagram.json".into());
    let d = SpliceDiagram::from_json(&std::fs::read_to_string(&path)?)?;
    let ld = linking_data(&d)?;
    println!("ν = {}, n' = {:?}", ld.nu(), ld.n_prime);
    println!("boundary characteristic polynomial: {}", boundary_char_poly(&ld.n_prime)?);

    let cert = certify(&d)?;
    for step in &cert.steps {
        println!("{}", serde_json::to_string(&step.to_value())?);
    }
    println!(
        "predicted inertia {:?}, direct inertia {:?}, null dimension {}",
        cert.predicted, cert.inertia, cert.null_dimension
    );
    println!("negative semidefinite: {}", cert.negative_semidefinite);
    Ok(())
}
