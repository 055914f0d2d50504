//! Stabilises a random Seifert matrix, scrambles it by a unimodular congruence
//! and checks that every invariant survives the Keef reduction.

use linkspec::algebra::{int, QMatrix};
use linkspec::seifert::{analyze, random_congruence, stabilize};
use rand::{Rng, SeedableRng};

fn main() -> Result<(), linkspec::Error> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let n = rng.gen_range(2..=6);
    let s = QMatrix::from_fn(n, n, |_, _| int(rng.gen_range(-2..=2)));
    let mut t = stabilize(&s, &mut rng);
    t = stabilize(&t, &mut rng);
    t = random_congruence(&t, &mut rng);
    println!("original {n}×{n}, stabilised {}×{}", t.rows(), t.cols());

    let (a, b) = (analyze(&s)?, analyze(&t)?);
    println!("reduction moves: {} vs {}", a.keef.reduction_moves, b.keef.reduction_moves);
    println!("Irr: {} vs {}", a.irr(), b.irr());
    println!("Δ^h associated: {}", a.cpd.delta_h.associated(&b.cpd.delta_h));
    println!("profiles equal: {}", a.profile == b.profile);
    println!("spectra equal: {}", a.spectrum.sp == b.spectrum.sp);
    Ok(())
}
