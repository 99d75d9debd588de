//! Numerical cross-checks: trace evaluation, gauge invariance and the
//! generic Jacobian rank.
//!
//! Run with `cargo run --example oracle`.

use quivarity::cycles::quasi_primitive_cycles;
use quivarity::oracle::{apply_gauge, estimate_iss_dimension, eval_cycle_trace, GaugeElement, Representation};
use quivarity::simples::has_simple;
use quivarity::QuiverSetting;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quivarity::Result<()> {
    let s = QuiverSetting::builder()
        .vertex("a", 2)
        .vertex("b", 1)
        .arrow("a", "b")
        .arrow("b", "a")
        .loops("a", 1)
        .build()?;
    let q = s.quiver();
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let w = Representation::random(&s, &mut rng);
    let g = GaugeElement::random(s.alpha(), &mut rng, 1e6);
    let moved = apply_gauge(q, &w, &g)?;
    for c in quasi_primitive_cycles(&s, 4)? {
        let before = eval_cycle_trace(q, &w, &c)?;
        let after = eval_cycle_trace(q, &moved, &c)?;
        println!("{:<20} {before:>12.6} {after:>12.6}", c.display(q).to_string());
    }

    let rank = estimate_iss_dimension(&s, 8, 1e-8, 42)?;
    println!("generic rank {rank}, 1 - chi(alpha, alpha) = {:?}", has_simple(&s).iss_dimension);
    Ok(())
}
