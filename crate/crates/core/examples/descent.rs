//! Driving an arbitrary vector down to a Whittaker vector q(z)w by applying
//! shifted positive generators, and reading off the generator of the
//! Whittaker vectors of the submodule it spans.
//!
//! ```text
//! cargo run --example descent
//! ```

use w22::expr::{eval_vector, parse};
use w22::solver::{descend, extract_whittaker_generator};
use w22::{QuotientSpec, WhittakerType};

fn main() {
    let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
    let m = QuotientSpec::Universal;
    for src in [
        "L[-1]*w",
        "W[-1]*w",
        "(z - 1)*L[-1]*w + (z - 1)*w",
        "L[-2]*L[-1]*W[0]*w + z^2*W[-3]*w",
    ] {
        let v = eval_vector(&parse(src).unwrap(), &phi, &m).unwrap();
        let (witness, trace) = descend(&v, &phi, &m).unwrap();
        println!("{v}");
        for step in &trace.steps {
            println!(
                "  apply {} - phi: mindeg {} -> {}, length {} -> {}",
                step.operator,
                step.before.mindeg,
                step.after.mindeg,
                step.before.length,
                step.after.length
            );
        }
        println!(
            "  reached {witness}; generator {}",
            extract_whittaker_generator(&v, &phi).unwrap()
        );
    }
}
