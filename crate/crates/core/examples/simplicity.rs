//! Simplicity certificates at a window: L_{phi,xi} passes, while
//! M/(z-xi)^2 M and M_phi come back with a proper submodule.
//!
//! ```text
//! cargo run --release --example simplicity
//! ```

use w22::structure::{simplicity_check_in, SimplicityVerdict};
use w22::{ratio, QuotientSpec, Truncation, WhittakerType};

fn main() {
    let phi = WhittakerType::from_ints(1, 1, 1, 1).unwrap();
    let xi = ratio(-2, 1);
    let trunc = Truncation::new(4, 3, 1);
    for spec in [
        QuotientSpec::single(xi.clone(), 1).unwrap(),
        QuotientSpec::single(xi.clone(), 2).unwrap(),
        QuotientSpec::Universal,
    ] {
        match simplicity_check_in(&phi, &spec, &xi, &trunc).unwrap() {
            SimplicityVerdict::SimpleAtWindow { probes } => {
                println!("{spec}: simple at window {trunc} ({probes} probes descended to units)")
            }
            SimplicityVerdict::NotSimple { witness, closure } => println!(
                "{spec}: not simple, {witness} spans rank {} of {} (complete: {})",
                closure.rank, closure.window_rank, closure.complete
            ),
        }
    }
}
