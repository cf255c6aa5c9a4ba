//! Acting on the universal Whittaker module M_phi and on a quotient
//! M_phi / p(z) M_phi.
//!
//! ```text
//! cargo run --example module_action
//! ```

use w22::{
    act, normalize, ratio, vector_diagnostics, BasisKey, Generator::*, ModuleVector, QuotientSpec,
    WhittakerType,
};

fn main() {
    let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
    let m = QuotientSpec::Universal;
    let v = ModuleVector::basis(&m, BasisKey::new(vec![-1], vec![]));

    for word in [vec![W(1)], vec![W(3)], vec![L(-2), W(0)], vec![Z, Z]] {
        let u = normalize(&word);
        let (image, _) = act(&u, &v, None, &phi);
        println!("({u}) . {v} = {image}");
    }

    let d = vector_diagnostics(
        &ModuleVector::basis(&m, BasisKey::new(vec![-1], vec![])).add(&ModuleVector::basis(
            &m,
            BasisKey::new(vec![], vec![-2, -1]),
        )),
    )
    .unwrap();
    println!(
        "L[-1]*w + W[-2]*W[-1]*w: mindeg {}, length {}, L-length {}",
        d.mindeg, d.length, d.l_length
    );

    // in M/(z-1)^2 M the central element acts through the residue ring
    let q = QuotientSpec::single(ratio(1, 1), 2).unwrap();
    let mut x = ModuleVector::cyclic(&q);
    for k in 1..=3 {
        x = act(&normalize(&[Z]), &x, None, &phi).0;
        println!("z^{k} . w = {x}   in {q}");
    }
}
