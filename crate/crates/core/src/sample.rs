//! Seeded random inputs for property checks. Everything here is driven by a
//! `ChaCha8Rng`, so a seed reproduces the same sample on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Generator;
use crate::pbw::{normalize, UeaElement};
use crate::poly::CentralPoly;
use crate::whittaker::{ModuleVector, QuotientSpec, Truncation, WhittakerType};
use crate::{ratio, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `n/d` with `n ∈ [−5,5]`, `d ∈ [1,3]`.
pub fn rational(rng: &mut SampleRng) -> Rational {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_rational(rng: &mut SampleRng) -> Rational {
    loop {
        let r = rational(rng);
        if r != ratio(0, 1) {
            return r;
        }
    }
}

pub fn phi(rng: &mut SampleRng) -> WhittakerType {
    let mut v = || nonzero_rational(rng);
    WhittakerType::new(v(), v(), v(), v()).expect("values are nonzero")
}

/// `L_n`, `W_n` with `|n| ≤ bound`, or `z` (rarely).
pub fn generator(rng: &mut SampleRng, bound: i64) -> Generator {
    let n = rng.gen_range(-bound..=bound);
    match rng.gen_range(0..9) {
        0..=3 => Generator::L(n),
        4..=7 => Generator::W(n),
        _ => Generator::Z,
    }
}

/// The normal form of a random word of length `1..=max_len`.
pub fn word(rng: &mut SampleRng, bound: i64, max_len: usize) -> UeaElement {
    let len = rng.gen_range(1..=max_len);
    let gens: Vec<Generator> = (0..len).map(|_| generator(rng, bound)).collect();
    normalize(&gens)
}

/// A combination of up to `max_terms` normalized words with rational
/// coefficients; never zero.
pub fn uea(rng: &mut SampleRng, max_terms: usize, bound: i64, max_len: usize) -> UeaElement {
    loop {
        let mut u = UeaElement::zero();
        for _ in 0..rng.gen_range(1..=max_terms) {
            u = u.add(
                &word(rng, bound, max_len).scale(&CentralPoly::constant(nonzero_rational(rng))),
            );
        }
        if !u.is_zero() {
            return u;
        }
    }
}

/// A coefficient polynomial of degree `≤ max_deg`.
pub fn poly(rng: &mut SampleRng, max_deg: usize) -> CentralPoly {
    let deg = rng.gen_range(0..=max_deg);
    CentralPoly::from_coeffs((0..=deg).map(|_| rational(rng)).collect())
}

/// A nonzero vector with up to `max_terms` window terms. In `M_φ` the
/// coefficient degrees stay `≤ K`; in a quotient they are reduced mod `p`.
pub fn vector(
    rng: &mut SampleRng,
    spec: &QuotientSpec,
    trunc: &Truncation,
    max_terms: usize,
) -> ModuleVector {
    let keys = trunc.keys();
    let max_deg = match spec.coefficient_rank() {
        Some(d) => d - 1,
        None => trunc.max_z as usize,
    };
    loop {
        let mut v = ModuleVector::zero(spec);
        for _ in 0..rng.gen_range(1..=max_terms) {
            let key = keys.choose(rng).expect("window has the top key").clone();
            v.add_term(key, &poly(rng, max_deg));
        }
        if !v.is_zero() {
            return v;
        }
    }
}
