//! Quasi-primitive cycles and the α = 𝟙 criterion.
//!
//! Run with `cargo run --example cycles`.

use quivarity::cycles::{coregular_alpha_one, primitive_cycles, quasi_primitive_cycles};
use quivarity::QuiverSetting;

fn main() -> quivarity::Result<()> {
    let loops = QuiverSetting::builder().vertex("v", 2).loops("v", 2).build()?;
    let cycles = quasi_primitive_cycles(&loops, 5)?;
    println!("{loops}: {} cycles of length <= 5", cycles.len());
    for c in cycles.iter().filter(|c| c.len() == 4) {
        println!("  {}", c.display(loops.quiver()));
    }

    let double = QuiverSetting::builder()
        .vertex("a", 1)
        .vertex("b", 1)
        .arrows_n("a", "b", 2)
        .arrows_n("b", "a", 2)
        .build()?;
    let q = double.quiver();
    println!(
        "{double}: {} primitive cycles, #A - #V + 1 = {}, coregular {}",
        primitive_cycles(q).len(),
        q.arrow_count() + 1 - q.vertex_count(),
        coregular_alpha_one(&double)?
    );
    Ok(())
}
