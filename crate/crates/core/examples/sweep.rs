//! Exhaustive sweep: all symmetric loopless settings on up to three
//! vertices, classified two independent ways.
//!
//! Run with `cargo run --example sweep`.

use quivarity::classify;
use quivarity::sweep::{for_each_setting, SweepBounds};
use quivarity::symm::classify_symmetric;

fn main() -> quivarity::Result<()> {
    let bounds = SweepBounds::symmetric(3, 3, 2);
    let (mut total, mut coregular, mut disagreements) = (0, 0, 0);
    let mut failure = None;
    for_each_setting(&bounds, |s| {
        total += 1;
        let by_reduction = classify(&s).coregular;
        match classify_symmetric(&s) {
            Ok(by_pieces) => {
                coregular += usize::from(by_reduction);
                if by_pieces != by_reduction {
                    disagreements += 1;
                    println!("disagreement on {s}");
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    println!("{total} settings, {coregular} coregular, {disagreements} disagreements");
    Ok(())
}
