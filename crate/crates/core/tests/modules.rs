use proptest::prelude::*;

use w22::whittaker::{act_generator, act_shifted};
use w22::{
    act, multiply, ratio, sample, BasisKey, CentralPoly, Generator, ModuleVector, QuotientSpec,
    Truncation, UeaElement, WhittakerType,
};

fn specs() -> Vec<QuotientSpec> {
    vec![
        QuotientSpec::Universal,
        QuotientSpec::single(ratio(2, 1), 1).unwrap(),
        QuotientSpec::quotient(vec![(ratio(1, 1), 2), (ratio(-3, 1), 1)]).unwrap(),
    ]
}

fn inputs(
    seed: u64,
) -> (
    WhittakerType,
    QuotientSpec,
    UeaElement,
    UeaElement,
    ModuleVector,
) {
    let mut rng = sample::rng(seed);
    let phi = sample::phi(&mut rng);
    let spec = specs()[(seed % 3) as usize].clone();
    let u = sample::uea(&mut rng, 2, 3, 2);
    let u2 = sample::uea(&mut rng, 2, 3, 2);
    let v = sample::vector(&mut rng, &spec, &Truncation::new(3, 2, 2), 3);
    (phi, spec, u, u2, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_a_module_structure(seed in any::<u64>()) {
        let (phi, _, u, u2, v) = inputs(seed);
        let lhs = act(&multiply(&u, &u2), &v, None, &phi).0;
        let rhs = act(&u, &act(&u2, &v, None, &phi).0, None, &phi).0;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_linear_over_central_polynomials(seed in any::<u64>(), c0 in -3i64..=3, c1 in -3i64..=3) {
        let (phi, _, u, _, v) = inputs(seed);
        let p = CentralPoly::from_coeffs(vec![ratio(c0, 1), ratio(c1, 2)]);
        prop_assert_eq!(act(&u, &v.scale(&p), None, &phi).0, act(&u, &v, None, &phi).0.scale(&p));
        let pu = u.scale(&p);
        prop_assert_eq!(act(&pu, &v, None, &phi).0, act(&u, &v, None, &phi).0.scale(&p));
    }

    #[test]
    fn quotient_map_is_a_module_map(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let phi = sample::phi(&mut rng);
        let u = sample::uea(&mut rng, 2, 3, 2);
        let v = sample::vector(&mut rng, &QuotientSpec::Universal, &Truncation::new(3, 2, 3), 3);
        for spec in specs().into_iter().skip(1) {
            let down_then_act = act(&u, &v.reduce_into(&spec), None, &phi).0;
            let act_then_down = act(&u, &v, None, &phi).0.reduce_into(&spec);
            prop_assert_eq!(down_then_act, act_then_down);
        }
    }
}

#[test]
fn cyclic_vector_is_whittaker_in_every_module() {
    let phi = WhittakerType::from_ints(2, -3, 5, 7).unwrap();
    for spec in specs() {
        let w = ModuleVector::cyclic(&spec);
        for g in [
            Generator::L(1),
            Generator::L(2),
            Generator::W(1),
            Generator::W(2),
        ] {
            assert_eq!(
                act_generator(g, &w, &phi),
                w.scale_rational(&phi.value(g).unwrap())
            );
        }
        for n in 3..=8 {
            assert!(act_generator(Generator::L(n), &w, &phi).is_zero());
            assert!(act_generator(Generator::W(n), &w, &phi).is_zero());
        }
    }
}

#[test]
fn act_examples() {
    let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
    let u = QuotientSpec::Universal;
    let w = ModuleVector::cyclic(&u);
    let lw = ModuleVector::basis(&u, BasisKey::new(vec![-1], vec![]));
    assert_eq!(
        act_generator(Generator::W(1), &w, &phi),
        w.scale_rational(&ratio(2, 1))
    );
    let expected = lw
        .scale_rational(&ratio(2, 1))
        .sub(&ModuleVector::basis(&u, BasisKey::new(vec![], vec![0])).scale_rational(&ratio(2, 1)));
    assert_eq!(act_generator(Generator::W(1), &lw, &phi), expected);
    assert_eq!(
        act_generator(Generator::W(3), &lw, &phi),
        w.scale_rational(&ratio(-12, 1))
    );
    let z = act_generator(Generator::Z, &lw, &phi);
    assert_eq!(z, lw.scale(&CentralPoly::z_pow(1)));
    let q = QuotientSpec::single(ratio(5, 1), 1).unwrap();
    assert_eq!(
        act_generator(Generator::Z, &ModuleVector::cyclic(&q), &phi),
        ModuleVector::cyclic(&q).scale_rational(&ratio(5, 1))
    );
}

#[test]
fn defining_operators_keep_the_window() {
    let phi = WhittakerType::from_ints(1, 2, 3, 4).unwrap();
    let trunc = Truncation::new(4, 3, 0);
    for key in trunc.keys() {
        let v = ModuleVector::basis(&QuotientSpec::Universal, key.clone());
        for g in [
            Generator::L(1),
            Generator::L(2),
            Generator::W(1),
            Generator::W(2),
        ] {
            let image = act_shifted(g, &v, &phi);
            let (_, report) = image.truncate(&trunc);
            assert!(
                !report.truncated,
                "{g} - phi moves {key:?} out of the window"
            );
            if !image.is_zero() {
                assert!(image.mindeg().unwrap() >= key.degree());
            }
        }
    }
}

#[test]
fn basis_sizes() {
    for spec in specs() {
        let trunc = Truncation::new(2, 2, 1);
        let labels = w22::basis_enumerate(&spec, &trunc);
        let per_key = spec.coefficient_rank().unwrap_or(2);
        assert_eq!(labels.len(), trunc.keys().len() * per_key);
    }
}
