//! Step through a reduction, replay the trace, and compare randomized step
//! orders.
//!
//! Run with `cargo run --example reduce`.

use quivarity::reduction::{applicable_steps, reduce, Strategy};
use quivarity::QuiverSetting;

fn main() -> quivarity::Result<()> {
    let s = QuiverSetting::builder()
        .vertex("a", 1)
        .vertex("b", 2)
        .vertex("c", 1)
        .arrow("a", "b")
        .arrow("b", "c")
        .arrow("c", "a")
        .loops("b", 1)
        .build()?;

    println!("start: {s}");
    println!("applicable: {:?}", applicable_steps(&s));

    let canonical = reduce(&s, Strategy::Canonical);
    for step in &canonical.steps {
        println!("  {step}");
    }
    println!("reduced: {} with {} variables split off", canonical.final_setting, canonical.polynomial_part);
    assert_eq!(canonical.replay(&s)?, canonical.final_setting);

    for seed in [0, 2, 4] {
        let t = reduce(&s, Strategy::Randomized(seed));
        let steps: Vec<String> = t.steps.iter().map(ToString::to_string).collect();
        println!("seed {seed}: [{}] -> {}", steps.join(", "), t.final_setting);
    }
    Ok(())
}
