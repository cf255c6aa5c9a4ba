//! Elements of U(W) that kill the cyclic vector: p(z) and the shifted
//! positive monomials L_lambda W_mu - phi(L_lambda W_mu).
//!
//! ```text
//! cargo run --example annihilator
//! ```

use w22::expr::{eval_algebra, parse, parse_quotient};
use w22::solver::ann_contains;
use w22::WhittakerType;

fn main() {
    let phi = WhittakerType::from_ints(2, 3, 5, 7).unwrap();
    let spec = parse_quotient("(z-4)^2").unwrap();
    for src in [
        "z^2 - 8*z + 16",
        "z - 4",
        "L[1]*W[1] - 10",
        "L[-3]*(W[2] - 7) + W[0]*(z - 4)^2",
        "L[3]*W[1]",
        "L[0]",
        "W[0]",
        "L[-1]",
    ] {
        let u = eval_algebra(&parse(src).unwrap()).unwrap();
        println!(
            "{src:>34}  kills w in {spec}: {}",
            ann_contains(&u, &phi, &spec)
        );
    }
}
