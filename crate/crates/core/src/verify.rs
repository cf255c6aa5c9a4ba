//! Named property checks at a configurable window, run by `w22 verify`.
//!
//! Every suite is deterministic for a given [`VerifyConfig`]: random inputs
//! come from [`crate::sample`] seeded with `config.seed`.

use serde::Serialize;

use crate::algebra::{bracket_combinations, Generator, GeneratorCombination, Partition};
use crate::error::Result;
use crate::pbw::{commutator, multiply, normalize, PbwMonomial, UeaElement};
use crate::poly::CentralPoly;
use crate::ratio;
use crate::sample;
use crate::solver::{ann_contains, descend, is_whittaker, whittaker_nullspace};
use crate::structure::{
    composition_series, decompose_roots, multiplication_invertible_on, project, simplicity_check,
    simplicity_check_in, submodule_closure, SimplicityVerdict,
};
use crate::whittaker::{act, phi_extend, ModuleVector, QuotientSpec, Truncation, WhittakerType};

/// Suite names accepted by [`run`], in execution order.
pub const SUITES: [&str; 10] = [
    "lie-axioms",
    "straightening",
    "heights",
    "whittaker-universal",
    "whittaker-quotient",
    "descent",
    "decomposition",
    "composition-series",
    "simplicity",
    "module-annihilator",
];

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub trunc: Truncation,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trunc: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

struct Checks {
    suite: &'static str,
    out: Vec<CheckResult>,
}

impl Checks {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            out: Vec::new(),
        }
    }

    fn push(&mut self, check: &str, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckResult {
            suite: self.suite.into(),
            check: check.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a check from a count of failures among `total` cases.
    fn count(&mut self, check: &str, failures: usize, total: usize) {
        self.push(
            check,
            failures == 0,
            format!("{}/{total} cases hold", total - failures),
        );
    }
}

/// Runs the named suite (`all` runs every suite).
pub fn run(suite: &str, config: &VerifyConfig) -> Result<Option<VerifyReport>> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Ok(None);
    };
    let mut checks = Vec::new();
    for name in names {
        checks.extend(run_suite(name, config)?);
    }
    Ok(Some(VerifyReport {
        seed: config.seed,
        trunc: config.trunc.to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    }))
}

fn run_suite(name: &str, c: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let mut rng = sample::rng(c.seed);
    match name {
        "lie-axioms" => Ok(lie_axioms(6)),
        "straightening" => Ok(straightening(&mut rng, 200)),
        "heights" => heights(&mut rng, 200),
        "whittaker-universal" => whittaker_universal(&mut rng, &c.trunc, 3),
        "whittaker-quotient" => whittaker_quotient(&mut rng, &c.trunc),
        "descent" => descent(&mut rng, &c.trunc, 100),
        "decomposition" => decomposition(&mut rng, &c.trunc, 25),
        "composition-series" => composition(&mut rng, &c.trunc),
        "simplicity" => simplicity(&mut rng, &c.trunc),
        "module-annihilator" => module_annihilator(&mut rng, &c.trunc, 100, 20),
        _ => unreachable!("suite names are checked by run"),
    }
}

fn all_generators(bound: i64) -> Vec<Generator> {
    let mut gens = vec![Generator::Z];
    for n in -bound..=bound {
        gens.push(Generator::L(n));
        gens.push(Generator::W(n));
    }
    gens
}

/// Antisymmetry and the Jacobi identity on all generators with `|n| ≤ bound`.
pub fn lie_axioms(bound: i64) -> Vec<CheckResult> {
    let mut ch = Checks::new("lie-axioms");
    let gens: Vec<GeneratorCombination> =
        all_generators(bound).into_iter().map(Into::into).collect();
    let (mut bad, mut total) = (0, 0);
    for a in &gens {
        for b in &gens {
            total += 1;
            let mut s = bracket_combinations(a, b);
            s.add(&bracket_combinations(b, a));
            bad += usize::from(!s.is_zero());
        }
    }
    ch.count("antisymmetry", bad, total);
    let (mut bad, mut total) = (0, 0);
    for a in &gens {
        for b in &gens {
            let ab = bracket_combinations(a, b);
            for c in &gens {
                total += 1;
                let mut s = bracket_combinations(a, &bracket_combinations(b, c));
                s.add(&bracket_combinations(b, &bracket_combinations(c, a)));
                s.add(&bracket_combinations(c, &ab));
                bad += usize::from(!s.is_zero());
            }
        }
    }
    ch.count("jacobi", bad, total);
    ch.out
}

/// Associativity of the normal-form product, idempotence of normalization
/// and preservation of the grading.
pub fn straightening(rng: &mut sample::SampleRng, triples: usize) -> Vec<CheckResult> {
    let mut ch = Checks::new("straightening");
    let mut assoc_bad = 0;
    let mut idem = (0, 0);
    for _ in 0..triples {
        let a = sample::uea(rng, 3, 3, 3);
        let b = sample::uea(rng, 3, 3, 3);
        let c = sample::uea(rng, 3, 3, 3);
        let ab_c = multiply(&multiply(&a, &b), &c);
        let a_bc = multiply(&a, &multiply(&b, &c));
        assoc_bad += usize::from(ab_c != a_bc);
        for (m, _) in ab_c.terms() {
            idem.1 += 1;
            idem.0 += usize::from(normalize(&m.factors()) != UeaElement::monomial(m.clone()));
        }
    }
    ch.count("associativity", assoc_bad, triples);
    ch.count("normal-forms-fixed", idem.0, idem.1);

    let mut grading_bad = 0;
    for _ in 0..triples {
        let len = rand::Rng::gen_range(rng, 1..=6);
        let word: Vec<Generator> = (0..len).map(|_| sample::generator(rng, 4)).collect();
        let d: i64 = word.iter().map(|g| g.grade()).sum();
        let n = normalize(&word);
        grading_bad += usize::from(!n.is_zero() && !n.is_homogeneous_of(d));
    }
    ch.count("grading", grading_bad, triples);
    ch.out
}

fn power(g: Generator, k: u32) -> Vec<Generator> {
    vec![g; k as usize]
}

/// Reordering powers, the `[W_m, L_λ]` height bound and the height drop of
/// commutators with a positive generator.
pub fn heights(rng: &mut sample::SampleRng, pairs: usize) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("heights");
    let (mut bad, mut total) = (0, 0);
    type Maker = fn(i64) -> Generator;
    let makers: [(Maker, Maker); 4] = [
        (Generator::L, Generator::L),
        (Generator::L, Generator::W),
        (Generator::W, Generator::L),
        (Generator::W, Generator::W),
    ];
    for (fa, fb) in makers {
        let both_l = matches!(fa(0), Generator::L(_)) && matches!(fb(0), Generator::L(_));
        for m in -3..=3 {
            for n in -3..=3 {
                for t in 1..=3u32 {
                    for k in 1..=3u32 {
                        total += 1;
                        let mut mn = power(fa(m), t);
                        mn.extend(power(fb(n), k));
                        let mut nm = power(fb(n), k);
                        nm.extend(power(fa(m), t));
                        let diff = normalize(&mn).sub(&normalize(&nm));
                        if diff.is_zero() {
                            continue;
                        }
                        let (ht, ht1) = diff.heights()?;
                        let bound = (t + k) as usize;
                        bad += usize::from(ht >= bound || (both_l && ht1 >= bound));
                    }
                }
            }
        }
    }
    ch.count("reorder-powers", bad, total);

    let (mut bad, mut total) = (0, 0);
    let lambdas = crate::algebra::enumerate_nonpositive(6, 4);
    for lambda in lambdas.iter().filter(|l| !l.is_empty()) {
        let l_word: Vec<Generator> = lambda.parts().iter().map(|&p| Generator::L(p)).collect();
        for m in -4..=4 {
            total += 1;
            let c = commutator(&UeaElement::generator(Generator::W(m)), &normalize(&l_word));
            if !c.is_zero() && c.heights()?.1 >= lambda.len() {
                bad += 1;
            }
        }
    }
    ch.count("w-past-l-block", bad, total);

    let keys = Truncation::new(4, 3, 0).keys();
    let mut bad = 0;
    for _ in 0..pairs {
        let n = rand::Rng::gen_range(rng, 1..=4);
        let x = if rand::Rng::gen_bool(rng, 0.5) {
            Generator::L(n)
        } else {
            Generator::W(n)
        };
        let degree = -rand::Rng::gen_range(rng, 0..=4);
        let pool: Vec<_> = keys.iter().filter(|k| k.degree() == degree).collect();
        let mut y = UeaElement::zero();
        for _ in 0..rand::Rng::gen_range(rng, 1..=3) {
            let key = pool[rand::Rng::gen_range(rng, 0..pool.len())];
            y.add_term(
                key.monomial(),
                &CentralPoly::constant(sample::nonzero_rational(rng)),
            );
        }
        if y.is_zero() {
            continue;
        }
        let ht_y = y.heights()?.0;
        let c = commutator(&UeaElement::generator(x), &y);
        let ok = c.terms().all(|(mono, _)| {
            let (nonpos, pos) = mono.split();
            pos.is_one() || (pos.height() == 1 && nonpos.height() < ht_y)
        });
        bad += usize::from(!ok);
    }
    ch.count("commutator-height-drop", bad, pairs);
    Ok(ch.out)
}

/// Whittaker vectors of `M_φ` in the window are exactly `S(z)_{≤K}·w`.
pub fn whittaker_universal(
    rng: &mut sample::SampleRng,
    trunc: &Truncation,
    types: usize,
) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("whittaker-universal");
    for i in 0..types {
        let phi = sample::phi(rng);
        let basis = whittaker_nullspace(&phi, &QuotientSpec::Universal, trunc);
        let ok = basis.len() == trunc.max_z as usize + 1
            && basis.iter().all(ModuleVector::is_cyclic_multiple);
        ch.push(
            &format!("nullspace-{i}"),
            ok,
            format!(
                "phi {phi}: dimension {} (expected {})",
                basis.len(),
                trunc.max_z + 1
            ),
        );
    }
    Ok(ch.out)
}

fn sample_quotients() -> Vec<QuotientSpec> {
    [
        vec![(ratio(1, 1), 1)],
        vec![(ratio(1, 1), 1), (ratio(-2, 1), 1)],
        vec![(ratio(-1, 2), 2), (ratio(3, 1), 1)],
    ]
    .into_iter()
    .map(|r| QuotientSpec::quotient(r).expect("distinct roots"))
    .collect()
}

/// Whittaker vectors of `M_φ/pM_φ` are the `deg p` multiples `z^k w̄`.
pub fn whittaker_quotient(
    rng: &mut sample::SampleRng,
    trunc: &Truncation,
) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("whittaker-quotient");
    let phi = sample::phi(rng);
    for spec in sample_quotients() {
        let d = spec.coefficient_rank().expect("quotient");
        let basis = whittaker_nullspace(&phi, &spec, trunc);
        let ok = basis.len() == d && basis.iter().all(ModuleVector::is_cyclic_multiple);
        ch.push(
            &format!("nullspace-{spec}"),
            ok,
            format!("dimension {} (expected {d})", basis.len()),
        );
    }
    Ok(ch.out)
}

/// Descent from random window vectors ends at a nonzero `c(z)·w`, with the
/// measure `(−mindeg, ℓ)` dropping at every step.
pub fn descent(
    rng: &mut sample::SampleRng,
    trunc: &Truncation,
    per_spec: usize,
) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("descent");
    let phi = sample::phi(rng);
    let mut specs = vec![QuotientSpec::Universal];
    specs.extend(sample_quotients());
    for spec in specs {
        let mut bad = 0;
        let mut steps = 0;
        for _ in 0..per_spec {
            let v = sample::vector(rng, &spec, trunc, 4);
            let ok = match descend(&v, &phi, &spec) {
                Ok((wit, trace)) => {
                    steps += trace.len();
                    let drops = trace.steps.iter().all(|s| {
                        (-s.after.mindeg, s.after.length) < (-s.before.mindeg, s.before.length)
                    });
                    drops
                        && !wit.vector.is_zero()
                        && wit.vector.is_cyclic_multiple()
                        && is_whittaker(&wit.vector, &phi)?
                }
                Err(_) => false,
            };
            bad += usize::from(!ok);
        }
        ch.push(
            &format!("descend-{spec}"),
            bad == 0,
            format!(
                "{}/{per_spec} vectors reach S(z)w in {steps} steps",
                per_spec - bad
            ),
        );
    }
    Ok(ch.out)
}

/// Projectors from the Bezout cofactors, and invertibility of `z − ξ_i` on
/// the other components.
pub fn decomposition(
    rng: &mut sample::SampleRng,
    trunc: &Truncation,
    vectors: usize,
) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("decomposition");
    let phi = sample::phi(rng);
    let small = Truncation::new(trunc.max_depth.min(3), trunc.max_len.min(2), 0);
    for roots in [
        vec![(ratio(1, 1), 1), (ratio(2, 1), 1)],
        vec![(ratio(1, 1), 2), (ratio(-3, 1), 1)],
    ] {
        let d = decompose_roots(&phi, roots)?;
        let name = d.spec.to_string();
        ch.push(
            &format!("bezout-{name}"),
            d.bezout_holds,
            "sum of q_j p_j is 1",
        );
        let mut bad = 0;
        for _ in 0..vectors {
            let v = sample::vector(rng, &d.spec, trunc, 4);
            let parts: Vec<ModuleVector> = d
                .components
                .iter()
                .map(|c| project(&v, c, &d.spec))
                .collect::<Result<_>>()?;
            let sum = parts
                .iter()
                .fold(ModuleVector::zero(&d.spec), |acc, p| acc.add(p));
            let mut ok = sum == v;
            for (j, pj) in parts.iter().enumerate() {
                for (i, ci) in d.components.iter().enumerate() {
                    let again = project(pj, ci, &d.spec)?;
                    ok &= if i == j {
                        &again == pj
                    } else {
                        again.is_zero()
                    };
                }
            }
            bad += usize::from(!ok);
        }
        ch.count(&format!("projectors-{name}"), bad, vectors);
        let mut bad = 0;
        let mut total = 0;
        for (j, cj) in d.components.iter().enumerate() {
            for (i, ci) in d.components.iter().enumerate() {
                total += 1;
                let factor = CentralPoly::linear(&ci.root);
                let inv = multiplication_invertible_on(cj, &factor, &d.spec, &small);
                bad += usize::from(inv != (i != j));
            }
        }
        ch.count(&format!("invertibility-{name}"), bad, total);
    }
    Ok(ch.out)
}

/// `V_i = (z−ξ)^i V` is a chain of Whittaker-generated submodules with
/// simple quotients.
pub fn composition(rng: &mut sample::SampleRng, trunc: &Truncation) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("composition-series");
    let phi = sample::phi(rng);
    let xi = sample::rational(rng);
    for a in 1..=3 {
        let s = composition_series(&phi, &xi, a, trunc)?;
        let ok = s.layers.len() == a as usize
            && s.terminates
            && s.layers.iter().all(|l| l.whittaker && l.simple);
        ch.push(
            &format!("series-length-{a}"),
            ok,
            format!("xi = {xi}: {} proper layers", s.layers.len()),
        );
        let small = Truncation::new(trunc.max_depth.min(3), trunc.max_len.min(2), 0);
        let mut strict = true;
        for pair in s.layers.windows(2) {
            let lower = submodule_closure(&pair[1].cyclic, &phi, &s.spec, &small)?;
            strict &= !lower.contains(&pair[0].cyclic);
        }
        ch.push(
            &format!("strict-chain-{a}"),
            strict,
            "each V_{i+1} misses the generator of V_i",
        );
    }
    Ok(ch.out)
}

/// `L_{φ,ξ}` is simple at the window; `M/(z−ξ)²` and `M_φ` are not, with
/// the expected witnesses.
pub fn simplicity(rng: &mut sample::SampleRng, trunc: &Truncation) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("simplicity");
    let phi = sample::phi(rng);
    let xi = sample::rational(rng);
    let verdict = simplicity_check(&phi, &xi, trunc)?;
    ch.push("simple-quotient", verdict.is_simple(), format!("xi = {xi}"));

    let lin = CentralPoly::linear(&xi);
    let square = QuotientSpec::single(xi.clone(), 2)?;
    let ok = match simplicity_check_in(&phi, &square, &xi, trunc)? {
        SimplicityVerdict::NotSimple { witness, closure } => {
            witness == ModuleVector::cyclic(&square).scale(&lin)
                && !closure.contains(&ModuleVector::cyclic(&square))
        }
        SimplicityVerdict::SimpleAtWindow { .. } => false,
    };
    ch.push("square-witness", ok, "witness (z - xi)w generates V_1");

    let u = QuotientSpec::Universal;
    let ok = match simplicity_check_in(&phi, &u, &xi, trunc)? {
        SimplicityVerdict::NotSimple { witness, closure } => {
            witness == ModuleVector::cyclic(&u).scale(&lin)
                && !closure.contains(&ModuleVector::cyclic(&u))
        }
        SimplicityVerdict::SimpleAtWindow { .. } => false,
    };
    ch.push(
        "universal-witness",
        ok,
        "witness (z - xi)w generates (z - xi)M",
    );
    Ok(ch.out)
}

/// A random element of the left ideal generated by `p(z)` and the elements
/// `L_λ W_μ − φ(L_λ W_μ)` with `λ, μ` positive.
pub fn sample_annihilator(
    rng: &mut sample::SampleRng,
    phi: &WhittakerType,
    spec: &QuotientSpec,
) -> Result<UeaElement> {
    let mut out = UeaElement::zero();
    for _ in 0..rand::Rng::gen_range(rng, 1..=2) {
        let lam: Vec<i64> = (0..rand::Rng::gen_range(rng, 0..=2))
            .map(|_| rand::Rng::gen_range(rng, 1..=4))
            .collect();
        let mu: Vec<i64> = (0..rand::Rng::gen_range(rng, 1..=2))
            .map(|_| rand::Rng::gen_range(rng, 1..=4))
            .collect();
        let m = PbwMonomial::new(
            Partition::empty(),
            Partition::empty(),
            Partition::new(lam),
            Partition::new(mu),
        )?;
        let shifted =
            UeaElement::monomial(m.clone()).sub(&UeaElement::rational(phi_extend(phi, &m)?));
        out = out.add(&multiply(&sample::uea(rng, 2, 3, 2), &shifted));
    }
    if let Some(p) = spec.modulus() {
        out = out.add(&sample::uea(rng, 2, 3, 2).scale(p));
    }
    Ok(out)
}

/// `act(uu′, v) = act(u, act(u′, v))` and membership in the annihilator of `w`.
pub fn module_annihilator(
    rng: &mut sample::SampleRng,
    trunc: &Truncation,
    triples: usize,
    ideal_samples: usize,
) -> Result<Vec<CheckResult>> {
    let mut ch = Checks::new("module-annihilator");
    let phi = sample::phi(rng);
    let specs = [
        QuotientSpec::Universal,
        QuotientSpec::quotient(vec![(ratio(1, 1), 2), (ratio(-3, 1), 1)])?,
    ];
    let mut bad = 0;
    for i in 0..triples {
        let spec = &specs[i % 2];
        let u = sample::uea(rng, 2, 3, 2);
        let u2 = sample::uea(rng, 2, 3, 2);
        let v = sample::vector(rng, spec, trunc, 3);
        let lhs = act(&multiply(&u, &u2), &v, None, &phi).0;
        let rhs = act(&u, &act(&u2, &v, None, &phi).0, None, &phi).0;
        bad += usize::from(lhs != rhs);
    }
    ch.count("module-axiom", bad, triples);
    for spec in &specs {
        let mut bad = 0;
        for _ in 0..ideal_samples {
            let u = sample_annihilator(rng, &phi, spec)?;
            bad += usize::from(!ann_contains(&u, &phi, spec));
        }
        ch.count(&format!("ideal-annihilates-{spec}"), bad, ideal_samples);
        let rejects = [Generator::L(0), Generator::W(0), Generator::L(-1)]
            .iter()
            .all(|&g| !ann_contains(&UeaElement::generator(g), &phi, spec));
        ch.push(
            &format!("rejects-{spec}"),
            rejects,
            "L[0], W[0], L[-1] do not annihilate w",
        );
    }
    Ok(ch.out)
}
