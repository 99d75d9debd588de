//! Decide coregularity of a few settings and show how each strongly
//! connected component ends up.
//!
//! Run with `cargo run --example classify`.

use quivarity::{classify, QuiverSetting};

fn main() -> quivarity::Result<()> {
    let settings = [
        QuiverSetting::builder().vertex("v", 2).loops("v", 2).build()?,
        QuiverSetting::builder().vertex("v", 2).loops("v", 3).build()?,
        QuiverSetting::builder()
            .vertex("n", 5)
            .vertex("o", 1)
            .arrows_n("o", "n", 2)
            .arrows_n("n", "o", 2)
            .build()?,
        // Two strongly connected components joined by a single arrow.
        QuiverSetting::builder()
            .vertex("a", 3)
            .vertex("b", 1)
            .loops("a", 1)
            .loops("b", 4)
            .arrow("a", "b")
            .build()?,
    ];

    for s in &settings {
        let v = classify(s);
        println!("{s}: {}", if v.coregular { "coregular" } else { "not coregular" });
        for c in &v.components {
            let end = c.terminal.map_or("stuck", |t| t.label());
            println!("  {} reduces to {} ({end})", c.setting, c.trace.final_setting);
        }
        if let Some(d) = v.ring_dimension() {
            println!("  invariant ring is polynomial in {d} variables");
        }
    }
    Ok(())
}
