//! Submodule structure of Whittaker modules: composition series of
//! `M_φ/(z−ξ)^a M_φ`, the direct-sum decomposition along the factors of
//! `p(z)`, windowed submodule closure and the simplicity certificate.

use serde::Serialize;

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::pbw::UeaElement;
use crate::poly::CentralPoly;
use crate::solver::{descend, is_whittaker, Coordinates};
use crate::whittaker::{
    act, ModuleVector, QuotientSpec, Truncation, TruncationReport, VectorJson, WhittakerType,
};
use crate::Rational;

/// `V_i = U(W)(z−ξ)^i w̄` inside `M_φ/(z−ξ)^a M_φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesLayer {
    pub index: u32,
    pub cyclic: ModuleVector,
    /// The cyclic vector is a Whittaker vector of the whole module.
    pub whittaker: bool,
    /// `V_i / V_{i+1}` passed the descent certificate on the window.
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSeries {
    pub spec: QuotientSpec,
    /// The proper layers `V_0 ⊋ V_1 ⊋ … ⊋ V_{a−1}`.
    pub layers: Vec<SeriesLayer>,
    /// `(z−ξ)^a w̄ = 0`, i.e. `V_a = 0`.
    pub terminates: bool,
}

/// Descent certificate for `V_i / V_{i+1}`: every window vector
/// `(z−ξ)^i L_λ W_μ w̄` descends to `c(z)(z−ξ)^i w̄` with `c(ξ) ≠ 0`, so it
/// generates all of `V_i` modulo `V_{i+1}`.
pub fn layer_is_simple(
    phi: &WhittakerType,
    xi: &Rational,
    a: u32,
    i: u32,
    trunc: &Truncation,
) -> Result<bool> {
    let spec = QuotientSpec::single(xi.clone(), a)?;
    let shift = CentralPoly::linear(xi).pow(i);
    for key in trunc.keys() {
        let v = ModuleVector::term(&spec, key, shift.clone());
        let (wit, _) = descend(&v, phi, &spec)?;
        if wit.coefficient.valuation_at(xi) != Some(i as usize) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn composition_series(
    phi: &WhittakerType,
    xi: &Rational,
    a: u32,
    trunc: &Truncation,
) -> Result<CompositionSeries> {
    if a == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let spec = QuotientSpec::single(xi.clone(), a)?;
    let factor = CentralPoly::linear(xi);
    let mut layers = Vec::with_capacity(a as usize);
    for i in 0..a {
        let cyclic = ModuleVector::cyclic(&spec).scale(&factor.pow(i));
        layers.push(SeriesLayer {
            index: i,
            whittaker: !cyclic.is_zero() && is_whittaker(&cyclic, phi)?,
            simple: layer_is_simple(phi, xi, a, i, trunc)?,
            cyclic,
        });
    }
    let terminates = ModuleVector::cyclic(&spec).scale(&factor.pow(a)).is_zero();
    Ok(CompositionSeries {
        spec,
        layers,
        terminates,
    })
}

/// One summand `V_j = U(W) p_j(z) w̄` of `M_φ / p(z) M_φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionComponent {
    pub index: usize,
    pub root: Rational,
    pub multiplicity: u32,
    /// `p_j = Π_{i≠j} (z−ξ_i)^{a_i}`.
    pub complement: CentralPoly,
    /// `q_j` with `Σ q_j p_j = 1`.
    pub cofactor: CentralPoly,
    /// `q_j p_j` reduced modulo `p`.
    pub projector: CentralPoly,
    /// `w_j = p_j w̄`.
    pub cyclic: ModuleVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub spec: QuotientSpec,
    pub components: Vec<DecompositionComponent>,
    /// `Σ q_j p_j = 1` holds as polynomials.
    pub bezout_holds: bool,
}

/// Splits `M_φ / p(z) M_φ` along the distinct roots of `p`.
pub fn decompose(_phi: &WhittakerType, spec: &QuotientSpec) -> Result<Decomposition> {
    let QuotientSpec::Quotient(q) = spec else {
        return Err(Error::InvalidQuotient(
            "decomposition needs a quotient".into(),
        ));
    };
    let mut components = Vec::new();
    let mut bezout = CentralPoly::zero();
    for (j, (root, a)) in q.roots().iter().enumerate() {
        let own = CentralPoly::linear(root).pow(*a);
        let complement = q
            .roots()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .fold(CentralPoly::one(), |acc, (_, (r, b))| {
                &acc * &CentralPoly::linear(r).pow(*b)
            });
        // q_j ≡ p_j^{-1} mod (z−ξ_j)^{a_j}; then Σ q_j p_j has degree < deg p
        // and is ≡ 1 modulo every factor, hence equals 1.
        let cofactor = complement
            .inverse_mod(&own)
            .ok_or_else(|| Error::InvalidQuotient(format!("repeated root {root}")))?;
        let product = &cofactor * &complement;
        bezout += &product;
        components.push(DecompositionComponent {
            index: j,
            root: root.clone(),
            multiplicity: *a,
            projector: spec.reduce(&product),
            cyclic: ModuleVector::cyclic(spec).scale(&complement),
            complement,
            cofactor,
        });
    }
    Ok(Decomposition {
        spec: spec.clone(),
        components,
        bezout_holds: bezout.is_one(),
    })
}

/// Decomposition from a list of `(ξ_i, a_i)`; repeated roots are rejected.
pub fn decompose_roots(phi: &WhittakerType, roots: Vec<(Rational, u32)>) -> Result<Decomposition> {
    decompose(phi, &QuotientSpec::quotient(roots)?)
}

/// The component of `v` in `V_j`: `q_j(z) p_j(z) · v`.
pub fn project(
    v: &ModuleVector,
    comp: &DecompositionComponent,
    spec: &QuotientSpec,
) -> Result<ModuleVector> {
    v.ensure_spec(spec)?;
    Ok(v.scale(&comp.projector))
}

/// Whether multiplication by `factor` is a bijection of `V_j` cut to the window.
pub fn multiplication_invertible_on(
    comp: &DecompositionComponent,
    factor: &CentralPoly,
    spec: &QuotientSpec,
    trunc: &Truncation,
) -> bool {
    let coords = Coordinates::new(spec, trunc);
    let mut domain = Echelon::new();
    let mut images = Echelon::new();
    let mut joint = Echelon::new();
    for key in trunc.keys() {
        for k in 0..comp.multiplicity as usize {
            let b = ModuleVector::term(spec, key.clone(), comp.complement.shift(k));
            let img = b.scale(factor);
            let (Some(rb), Some(ri)) = (coords.to_row(&b), coords.to_row(&img)) else {
                return false;
            };
            domain.insert(&rb);
            images.insert(&ri);
            joint.insert(&rb);
            joint.insert(&ri);
        }
    }
    // injective on V_j and landing back in V_j
    images.rank() == domain.rank() && joint.rank() == domain.rank()
}

/// Span reached by [`submodule_closure`].
#[derive(Debug, Clone)]
pub struct Closure {
    pub basis: Vec<ModuleVector>,
    pub rank: usize,
    pub window_rank: usize,
    /// No term was ever dropped at the window boundary.
    pub complete: bool,
    pub report: TruncationReport,
    echelon: Echelon,
    coords: Coordinates,
}

impl Closure {
    pub fn contains(&self, v: &ModuleVector) -> bool {
        self.coords
            .to_row(v)
            .is_some_and(|r| self.echelon.contains(&r))
    }

    pub fn to_json(&self) -> ClosureJson {
        ClosureJson {
            rank: self.rank,
            window_rank: self.window_rank,
            complete: self.complete,
            dropped: self.report.dropped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureJson {
    pub rank: usize,
    pub window_rank: usize,
    pub complete: bool,
    pub dropped: usize,
}

/// Generators applied by the closure: `z`, and `L_n`, `W_n` with `|n| ≤ N+2`.
pub fn closure_generators(trunc: &Truncation) -> Vec<Generator> {
    let bound = trunc.max_depth as i64 + 2;
    let mut gens = vec![Generator::Z];
    for n in -bound..=bound {
        gens.push(Generator::L(n));
        gens.push(Generator::W(n));
    }
    gens
}

/// Smallest subspace of the window containing `v` and stable under the
/// closure generators followed by truncation.
///
/// Terms outside the `(N, H)` window are dropped and counted. In `M_φ` a
/// vector whose coefficients exceed `z^K` is discarded whole (and counted),
/// since cutting single powers of `z` does not preserve submodules.
pub fn submodule_closure(
    v: &ModuleVector,
    phi: &WhittakerType,
    spec: &QuotientSpec,
    trunc: &Truncation,
) -> Result<Closure> {
    v.ensure_spec(spec)?;
    if v.is_zero() {
        return Err(Error::ZeroElement("submodule_closure"));
    }
    let coords = Coordinates::new(spec, trunc);
    let gens = closure_generators(trunc);
    let mut report = TruncationReport::default();
    let mut echelon = Echelon::new();
    let mut queue = std::collections::VecDeque::new();

    let admit = |x: &ModuleVector,
                 echelon: &mut Echelon,
                 report: &mut TruncationReport,
                 queue: &mut std::collections::VecDeque<ModuleVector>| {
        let (kept, r) = x.truncate(trunc);
        report.merge(r);
        if kept.is_zero() {
            return;
        }
        if spec == &QuotientSpec::Universal && kept.z_degree().unwrap_or(0) > trunc.max_z as usize {
            report.record(1);
            return;
        }
        let row = coords
            .to_row(&kept)
            .expect("truncated vector lies in the window");
        if echelon.insert(&row) {
            queue.push_back(kept);
        }
    };

    admit(v, &mut echelon, &mut report, &mut queue);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let (image, _) = act(&UeaElement::generator(g), &x, None, phi);
            admit(&image, &mut echelon, &mut report, &mut queue);
        }
    }
    echelon.reduce_fully();
    let basis = echelon.rows().map(|r| coords.to_vector(r)).collect();
    Ok(Closure {
        basis,
        rank: echelon.rank(),
        window_rank: coords.len(),
        complete: !report.truncated,
        report,
        echelon,
        coords,
    })
}

/// Outcome of [`simplicity_check`].
#[derive(Debug, Clone)]
pub enum SimplicityVerdict {
    /// Every probe descended to a unit multiple of `w̄`.
    SimpleAtWindow { probes: usize },
    /// A probe descended to `q(z) w̄` with `q` not invertible; `witness` is
    /// that vector made monic and `closure` the proper submodule it generates.
    NotSimple {
        witness: ModuleVector,
        closure: Box<Closure>,
    },
}

impl SimplicityVerdict {
    pub fn is_simple(&self) -> bool {
        matches!(self, Self::SimpleAtWindow { .. })
    }
}

/// Monic proper divisors of `p` built from its factored form, `1` first.
fn proper_divisors(spec: &QuotientSpec, probe_root: &Rational) -> Vec<CentralPoly> {
    match spec {
        QuotientSpec::Universal => vec![CentralPoly::one(), CentralPoly::linear(probe_root)],
        QuotientSpec::Quotient(q) => {
            let mut out = vec![CentralPoly::one()];
            for (root, a) in q.roots() {
                let lin = CentralPoly::linear(root);
                out = out
                    .iter()
                    .flat_map(|d| (0..=*a).map(|j| d * &lin.pow(j)).collect::<Vec<_>>())
                    .collect();
            }
            out.retain(|d| d != q.modulus());
            out.sort_by_key(CentralPoly::degree);
            out
        }
    }
}

fn is_unit(q: &CentralPoly, spec: &QuotientSpec) -> bool {
    match spec.modulus() {
        None => q.degree() == Some(0),
        Some(p) => CentralPoly::gcd(q, p).is_one(),
    }
}

/// Descends from every window vector `d(z) L_λ W_μ w̄`, `d` a proper divisor
/// of `p` (in `M_φ`: `d ∈ {1, z − probe_root}`). The module is simple at the
/// window iff every terminal coefficient is a unit.
pub fn simplicity_check_in(
    phi: &WhittakerType,
    spec: &QuotientSpec,
    probe_root: &Rational,
    trunc: &Truncation,
) -> Result<SimplicityVerdict> {
    let divisors = proper_divisors(spec, probe_root);
    let mut probes = 0;
    for key in trunc.keys() {
        for d in &divisors {
            let v = ModuleVector::term(spec, key.clone(), d.clone());
            if v.is_zero() {
                continue;
            }
            probes += 1;
            let (wit, _) = descend(&v, phi, spec)?;
            if !is_unit(&wit.coefficient, spec) {
                let witness = ModuleVector::cyclic(spec).scale(&wit.monic);
                let closure = submodule_closure(&witness, phi, spec, trunc)?;
                return Ok(SimplicityVerdict::NotSimple {
                    witness,
                    closure: Box::new(closure),
                });
            }
        }
    }
    Ok(SimplicityVerdict::SimpleAtWindow { probes })
}

/// [`simplicity_check_in`] for `L_{φ,ξ} = M_φ/(z−ξ)M_φ`.
pub fn simplicity_check(
    phi: &WhittakerType,
    xi: &Rational,
    trunc: &Truncation,
) -> Result<SimplicityVerdict> {
    simplicity_check_in(phi, &QuotientSpec::single(xi.clone(), 1)?, xi, trunc)
}

#[derive(Debug, Clone, Serialize)]
pub struct LayerJson {
    pub index: u32,
    pub cyclic: VectorJson,
    pub whittaker: bool,
    pub simple: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesJson {
    pub module: String,
    pub length: usize,
    pub terminates: bool,
    pub layers: Vec<LayerJson>,
}

impl CompositionSeries {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            module: self.spec.to_string(),
            length: self.layers.len(),
            terminates: self.terminates,
            layers: self
                .layers
                .iter()
                .map(|l| LayerJson {
                    index: l.index,
                    cyclic: l.cyclic.to_json(),
                    whittaker: l.whittaker,
                    simple: l.simple,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentJson {
    pub root: String,
    pub multiplicity: u32,
    pub complement: String,
    pub cofactor: String,
    pub projector: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionJson {
    pub module: String,
    pub bezout_holds: bool,
    pub components: Vec<ComponentJson>,
}

impl Decomposition {
    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            module: self.spec.to_string(),
            bezout_holds: self.bezout_holds,
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    root: c.root.to_string(),
                    multiplicity: c.multiplicity,
                    complement: c.complement.to_string(),
                    cofactor: c.cofactor.to_string(),
                    projector: c.projector.to_string(),
                })
                .collect(),
        }
    }
}
