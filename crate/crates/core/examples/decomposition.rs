//! Splitting M_phi / p(z) M_phi into the summands belonging to the roots of p.
//!
//! ```text
//! cargo run --example decomposition
//! ```

use w22::expr::{eval_vector, parse, parse_quotient};
use w22::structure::{decompose, project};
use w22::WhittakerType;

fn main() {
    let phi = WhittakerType::from_ints(1, 2, 3, 4).unwrap();
    let spec = parse_quotient("(z-1)^2*(z+3)").unwrap();
    let d = decompose(&phi, &spec).unwrap();
    println!("{spec}: Bezout identity holds: {}", d.bezout_holds);
    for c in &d.components {
        println!(
            "  root {} (multiplicity {}): p_j = {}, q_j = {}, projector {}",
            c.root, c.multiplicity, c.complement, c.cofactor, c.projector
        );
    }

    let v = eval_vector(&parse("L[-1]*w + z*W[0]*w").unwrap(), &phi, &spec).unwrap();
    println!("v = {v}");
    for c in &d.components {
        println!(
            "  component at {}: {}",
            c.root,
            project(&v, c, &spec).unwrap()
        );
    }
}
