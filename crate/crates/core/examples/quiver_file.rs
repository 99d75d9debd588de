//! Read a quiver file, print it in canonical form and as DOT.
//!
//! Run with `cargo run --example quiver_file -- quivers/type_two.toml`.

use quivarity::format::{parse_setting, to_dot, to_toml};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/quivers/type_two.toml").to_owned());
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    match parse_setting(&text) {
        Ok(s) => {
            println!("{s}\n");
            print!("{}", to_toml(&s));
            println!();
            print!("{}", to_dot(&s));
        }
        Err(e) => {
            eprintln!("{path}:{e}");
            std::process::exit(3);
        }
    }
}
