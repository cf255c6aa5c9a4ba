//! Whittaker vectors inside a finite window, found by exact nullspace
//! computation over the rationals.
//!
//! ```text
//! cargo run --example whittaker_vectors
//! ```

use w22::solver::{whittaker_nullspace, whittaker_system};
use w22::{ratio, QuotientSpec, Truncation, WhittakerType};

fn main() {
    let phi = WhittakerType::new(ratio(1, 2), ratio(-3, 1), ratio(2, 1), ratio(5, 1)).unwrap();
    let trunc = Truncation::new(4, 3, 2);

    let specs = [
        QuotientSpec::Universal,
        QuotientSpec::single(ratio(1, 1), 1).unwrap(),
        QuotientSpec::single(ratio(1, 1), 2).unwrap(),
        QuotientSpec::quotient(vec![(ratio(-1, 2), 2), (ratio(3, 1), 1)]).unwrap(),
    ];
    for spec in specs {
        let system = whittaker_system(&phi, &spec, &trunc);
        let basis = whittaker_nullspace(&phi, &spec, &trunc);
        println!(
            "{spec}: {} unknowns, {} equations, {} Whittaker vectors",
            system.coordinates.len(),
            system.rows.len(),
            basis.len()
        );
        for b in basis {
            println!("    {b}");
        }
    }
}
