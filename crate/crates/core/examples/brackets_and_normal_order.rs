//! Lie brackets in W(2,2) and PBW normal ordering in its enveloping algebra.
//!
//! ```text
//! cargo run --example brackets_and_normal_order
//! ```

use w22::pbw::{heights, mindeg};
use w22::{bracket, multiply, normalize, Generator::*};

fn main() {
    for (a, b) in [(L(2), L(-2)), (L(1), W(-1)), (W(3), W(5)), (W(1), L(-1))] {
        println!("[{a}, {b}] = {}", bracket(a, b));
    }

    // straightening a word into L(<=0) W(<=0) L(>0) W(>0) order
    let x = normalize(&[W(1), L(-1)]);
    let (ht, ht1) = heights(&x).unwrap();
    println!(
        "W[1]*L[-1] = {x}  (mindeg {}, height {ht}, L-height {ht1})",
        mindeg(&x).unwrap()
    );

    let y = normalize(&[L(2), W(-2), L(-1)]);
    println!("L[2]*W[-2]*L[-1] = {y}");
    println!("(W[1]*L[-1]) * (L[2]*W[-2]*L[-1]) = {}", multiply(&x, &y));
}
