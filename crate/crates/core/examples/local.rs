//! Local quiver settings, and a non-coregularity witness found among them.
//!
//! Run with `cargo run --example local`.

use quivarity::local::{local_consistency_check, local_quiver};
use quivarity::simples::Decomposition;
use quivarity::QuiverSetting;

fn main() -> quivarity::Result<()> {
    let s = QuiverSetting::builder().vertex("v", 2).loops("v", 2).build()?;
    let split = Decomposition::parse("1x(1)+1x(1)", 1)?;
    let local = local_quiver(&s, &split)?;
    println!("local quiver of {s} at {split}: {}", local.setting);

    let noncoregular = QuiverSetting::builder()
        .vertex("a", 1)
        .vertex("b", 1)
        .vertex("c", 2)
        .arrows_n("a", "b", 2)
        .arrows_n("b", "a", 2)
        .arrow("b", "c")
        .arrow("c", "a")
        .build()?;
    let report = local_consistency_check(&noncoregular, 500);
    println!(
        "{noncoregular}: coregular {}, {} types checked",
        report.coregular, report.decompositions_checked
    );
    if let Some(w) = report.witness {
        println!("  local quiver {} at {}", w.local.setting, w.local.provenance);
        println!("  shrinks to the non-coregular {}", w.subquiver);
    }
    Ok(())
}
