//! The expression language: parsing, pretty printing and evaluation.
//!
//! ```text
//! cargo run --example expressions
//! ```

use w22::expr::{eval, parse};
use w22::{QuotientSpec, WhittakerType};

fn main() {
    let phi = WhittakerType::from_ints(1, 1, 1, 1).unwrap();
    let m = QuotientSpec::Universal;
    for src in [
        "L[-1]^2 * W[0]",
        "W[1]*L[-1]",
        "(W[1] - 3/2) * w",
        "W[1]*L[-1]*w",
        "z*w",
        "-(L[1] - (W[1] - z))",
    ] {
        let e = parse(src).unwrap();
        println!(
            "{src:<22} parsed as {e:<22} = {}",
            eval(&e, &phi, &m).unwrap()
        );
    }
    for bad in ["L[1.5]", "w*L[1]", "L[1]^-2", "(L[1]"] {
        println!("{bad:<22} {}", parse(bad).unwrap_err());
    }
}
