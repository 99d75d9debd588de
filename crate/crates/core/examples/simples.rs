//! Simple representations and semisimple types.
//!
//! Run with `cargo run --example simples`.

use quivarity::simples::{enumerate_decompositions, enumerate_simple_dimvectors, has_simple, Decomposition};
use quivarity::QuiverSetting;

fn main() -> quivarity::Result<()> {
    let two_cycle = QuiverSetting::builder()
        .vertex("a", 2)
        .vertex("b", 1)
        .arrow("a", "b")
        .arrow("b", "a")
        .loops("a", 1)
        .build()?;

    let info = has_simple(&two_cycle);
    println!("{two_cycle}: simples {} ({:?} classes, dimension {:?})", info.exists, info.class_count, info.iss_dimension);

    let simple: Vec<String> = enumerate_simple_dimvectors(two_cycle.quiver(), 2)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("simple dimension vectors with entries <= 2: {}", simple.join(" "));

    let all = enumerate_decompositions(&two_cycle, 100);
    println!("{} semisimple types of {}:", all.items.len(), two_cycle.alpha());
    for d in &all.items {
        println!("  {d}");
    }

    let typed = Decomposition::parse("1x(1,0)+1x(1,1)", 2)?;
    typed.validate(&two_cycle)?;
    println!("parsed and validated {typed}");
    Ok(())
}
