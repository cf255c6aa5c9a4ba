//! The chain M/(z-xi)^a M = V_0 > V_1 > ... > V_a = 0 with V_i generated by
//! the Whittaker vector (z-xi)^i w.
//!
//! ```text
//! cargo run --example composition_series
//! ```

use w22::structure::{composition_series, submodule_closure};
use w22::{ratio, Truncation, WhittakerType};

fn main() {
    let phi = WhittakerType::from_ints(2, -1, 1, 3).unwrap();
    let trunc = Truncation::new(3, 2, 0);
    let s = composition_series(&phi, &ratio(1, 2), 3, &trunc).unwrap();
    println!(
        "{}: {} proper layers, chain ends in zero: {}",
        s.spec,
        s.layers.len(),
        s.terminates
    );
    for layer in &s.layers {
        let span = submodule_closure(&layer.cyclic, &phi, &s.spec, &trunc).unwrap();
        println!(
            "  V{} = U(W)({})  whittaker {}  simple quotient {}  rank {} of {}",
            layer.index, layer.cyclic, layer.whittaker, layer.simple, span.rank, span.window_rank
        );
    }
}
