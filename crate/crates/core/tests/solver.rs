use w22::solver::{
    ann_contains, descend, extract_whittaker_generator, is_whittaker, kills_higher_generators,
    whittaker_nullspace, whittaker_system,
};
use w22::{
    ratio, sample, BasisKey, CentralPoly, Generator, ModuleVector, QuotientSpec, Truncation,
    UeaElement, WhittakerType,
};

fn key(l: &[i64], m: &[i64]) -> BasisKey {
    BasisKey::new(l.to_vec(), m.to_vec())
}

#[test]
fn whittaker_vectors_of_the_universal_module() {
    let mut rng = sample::rng(5);
    for trunc in [
        Truncation::new(2, 2, 2),
        Truncation::new(4, 3, 2),
        Truncation::new(3, 3, 4),
    ] {
        let phi = sample::phi(&mut rng);
        let system = whittaker_system(&phi, &QuotientSpec::Universal, &trunc);
        assert_eq!(system.escaped.dropped, 0);
        let basis = whittaker_nullspace(&phi, &QuotientSpec::Universal, &trunc);
        assert_eq!(basis.len(), trunc.max_z as usize + 1);
        for (k, b) in basis.iter().enumerate() {
            assert!(b.is_cyclic_multiple());
            assert!(is_whittaker(b, &phi).unwrap());
            assert!(kills_higher_generators(b, &phi, 8));
            assert_eq!(b.coefficient(&BasisKey::top()).degree(), Some(k));
        }
    }
}

#[test]
fn whittaker_vectors_of_quotients() {
    let phi = WhittakerType::from_ints(1, 1, 1, 1).unwrap();
    let trunc = Truncation::new(4, 3, 2);
    for (roots, d) in [
        (vec![(ratio(1, 1), 1)], 1),
        (vec![(ratio(1, 1), 2)], 2),
        (vec![(ratio(1, 1), 1), (ratio(2, 3), 2)], 3),
    ] {
        let spec = QuotientSpec::quotient(roots).unwrap();
        let basis = whittaker_nullspace(&phi, &spec, &trunc);
        assert_eq!(basis.len(), d, "{spec}");
        assert!(basis.iter().all(ModuleVector::is_cyclic_multiple));
    }
}

#[test]
fn is_whittaker_examples() {
    let phi = WhittakerType::from_ints(1, 2, 3, 4).unwrap();
    let u = QuotientSpec::Universal;
    let w = ModuleVector::cyclic(&u);
    assert!(is_whittaker(&w, &phi).unwrap());
    let p = CentralPoly::from_coeffs(vec![ratio(-1, 1), ratio(0, 1), ratio(3, 1)]);
    assert!(is_whittaker(&w.scale(&p), &phi).unwrap());
    assert!(!is_whittaker(&ModuleVector::basis(&u, key(&[-1], &[])), &phi).unwrap());
}

#[test]
fn descent_examples() {
    let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
    let u = QuotientSpec::Universal;
    let (wit, trace) = descend(&ModuleVector::basis(&u, key(&[-1], &[])), &phi, &u).unwrap();
    assert_eq!(trace.len(), 1);
    assert_eq!(trace.steps[0].operator, "W[3]");
    assert_eq!(
        wit.vector,
        ModuleVector::cyclic(&u).scale_rational(&ratio(-12, 1))
    );

    let (wit, trace) = descend(&ModuleVector::basis(&u, key(&[], &[-1])), &phi, &u).unwrap();
    assert_eq!(trace.steps[0].operator, "L[3]");
    assert_eq!(
        wit.vector,
        ModuleVector::cyclic(&u).scale_rational(&ratio(-12, 1))
    );

    let (wit, trace) = descend(&ModuleVector::cyclic(&u), &phi, &u).unwrap();
    assert!(trace.is_empty());
    assert_eq!(wit.vector, ModuleVector::cyclic(&u));

    assert!(descend(&ModuleVector::zero(&u), &phi, &u).is_err());
}

#[test]
fn descent_measure_drops_on_random_vectors() {
    let mut rng = sample::rng(21);
    let trunc = Truncation::new(4, 3, 2);
    let phi = sample::phi(&mut rng);
    for spec in [
        QuotientSpec::Universal,
        QuotientSpec::single(ratio(1, 2), 2).unwrap(),
    ] {
        for _ in 0..40 {
            let v = sample::vector(&mut rng, &spec, &trunc, 5);
            let (wit, trace) = descend(&v, &phi, &spec).unwrap();
            for s in &trace.steps {
                assert!((-s.after.mindeg, s.after.length) < (-s.before.mindeg, s.before.length));
            }
            assert!(!wit.vector.is_zero() && wit.vector.is_cyclic_multiple());
        }
    }
}

#[test]
fn extraction_examples() {
    let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
    let u = QuotientSpec::Universal;
    let zm1 = CentralPoly::linear(&ratio(1, 1));
    assert_eq!(
        extract_whittaker_generator(&ModuleVector::cyclic(&u).scale(&zm1), &phi).unwrap(),
        zm1
    );
    assert!(
        extract_whittaker_generator(&ModuleVector::basis(&u, key(&[-1], &[])), &phi)
            .unwrap()
            .is_one()
    );
    let v = ModuleVector::basis(&u, key(&[-1], &[]))
        .add(&ModuleVector::cyclic(&u))
        .scale(&zm1);
    assert_eq!(extract_whittaker_generator(&v, &phi).unwrap(), zm1);
    let q = QuotientSpec::single(ratio(1, 1), 1).unwrap();
    assert!(extract_whittaker_generator(&ModuleVector::cyclic(&q), &phi).is_err());
}

#[test]
fn annihilator_examples() {
    let phi = WhittakerType::from_ints(2, 3, 5, 7).unwrap();
    let xi = ratio(4, 1);
    let q = QuotientSpec::single(xi.clone(), 1).unwrap();
    assert!(ann_contains(
        &UeaElement::scalar(CentralPoly::linear(&xi)),
        &phi,
        &q
    ));
    let l1w1 = w22::normalize(&[Generator::L(1), Generator::W(1)])
        .sub(&UeaElement::rational(ratio(10, 1)));
    for spec in [QuotientSpec::Universal, q.clone()] {
        assert!(ann_contains(&l1w1, &phi, &spec));
        assert!(!ann_contains(
            &UeaElement::generator(Generator::L(0)),
            &phi,
            &spec
        ));
    }
    assert!(!ann_contains(
        &UeaElement::scalar(CentralPoly::linear(&xi)),
        &phi,
        &QuotientSpec::Universal
    ));
}
