//! Connected-sum decomposition of symmetric settings, checked against the
//! reduction engine.
//!
//! Run with `cargo run --example symmetric`.

use quivarity::symm::{classify_symmetric, connected_sum_decompose, match_type};
use quivarity::{classify, QuiverSetting};

fn main() -> quivarity::Result<()> {
    // 3 ⇄ 1 ⇄ 2 ⇄ 4: glued at the dimension-1 vertex.
    let s = QuiverSetting::builder()
        .vertex("a", 3)
        .vertex("b", 1)
        .vertex("c", 2)
        .vertex("d", 4)
        .arrow("a", "b")
        .arrow("b", "a")
        .arrow("b", "c")
        .arrow("c", "b")
        .arrow("c", "d")
        .arrow("d", "c")
        .build()?;

    let d = connected_sum_decompose(&s)?;
    println!("{s} splits at {:?}", d.junction_vertices);
    for piece in &d.components {
        println!("  {piece}: {:?}", match_type(piece));
    }
    println!("symmetric classifier: {}", classify_symmetric(&s)?);
    println!("reduction engine:     {}", classify(&s).coregular);
    Ok(())
}
