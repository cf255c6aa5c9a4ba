//! Whittaker types, the universal Whittaker module `M_φ` and its quotients
//! `M_φ / p(z) M_φ`.
//!
//! A module vector is a finite sum `Σ c_{λ,μ}(z) L_λ W_μ w` over pairs of
//! non-positive partitions. In a quotient every coefficient is kept reduced
//! modulo `p(z)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{enumerate_nonpositive, Generator, Partition};
use crate::error::{Error, Result};
use crate::pbw::{monomial_times, PbwMonomial, UeaElement};
use crate::poly::CentralPoly;
use crate::render::{push_block, render_terms};
use crate::Rational;

/// A nonsingular Lie homomorphism `φ: W₊ → ℚ`, stored by its values on the
/// generators `L₁, L₂, W₁, W₂`. It vanishes on `L_n, W_n` for `n ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WhittakerType {
    l1: Rational,
    l2: Rational,
    w1: Rational,
    w2: Rational,
}

impl WhittakerType {
    pub fn new(l1: Rational, l2: Rational, w1: Rational, w2: Rational) -> Result<Self> {
        for (name, v) in [("L1", &l1), ("L2", &l2), ("W1", &w1), ("W2", &w2)] {
            if v.is_zero() {
                return Err(Error::SingularPhi(name));
            }
        }
        Ok(Self { l1, l2, w1, w2 })
    }

    pub fn from_ints(l1: i64, l2: i64, w1: i64, w2: i64) -> Result<Self> {
        let r = |x: i64| Rational::from_integer(x.into());
        Self::new(r(l1), r(l2), r(w1), r(w2))
    }

    /// `(φ(L₁), φ(L₂), φ(W₁), φ(W₂))`.
    pub fn values(&self) -> [&Rational; 4] {
        [&self.l1, &self.l2, &self.w1, &self.w2]
    }

    /// `φ(g)` for a positive generator; `None` for `z` and non-positive indices.
    pub fn value(&self, g: Generator) -> Option<Rational> {
        match g {
            Generator::L(1) => Some(self.l1.clone()),
            Generator::L(2) => Some(self.l2.clone()),
            Generator::W(1) => Some(self.w1.clone()),
            Generator::W(2) => Some(self.w2.clone()),
            g if g.is_positive() => Some(Rational::zero()),
            _ => None,
        }
    }

    /// Like [`value`](Self::value) but with `0` outside `W₊`; used for the
    /// uniform operator `x − φ(x)`.
    pub fn value_or_zero(&self, g: Generator) -> Rational {
        self.value(g).unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for WhittakerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.l1, self.l2, self.w1, self.w2)
    }
}

/// `φ` on a monomial of `U(W₊)`: the product of `φ` over all factors.
pub fn phi_extend(phi: &WhittakerType, m: &PbwMonomial) -> Result<Rational> {
    if m.has_nonpositive_part() {
        return Err(Error::NonPositiveMonomial);
    }
    let mut out = Rational::one();
    for g in m.factors() {
        out *= phi.value(g).expect("positive factor");
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Which module vectors live in: `M_φ`, or `M_φ / p(z) M_φ` with
/// `p(z) = Π (z − ξᵢ)^{aᵢ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuotientSpec {
    Universal,
    Quotient(Quotient),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quotient {
    roots: Vec<(Rational, u32)>,
    modulus: CentralPoly,
}

impl Quotient {
    pub fn roots(&self) -> &[(Rational, u32)] {
        &self.roots
    }

    pub fn modulus(&self) -> &CentralPoly {
        &self.modulus
    }
}

impl QuotientSpec {
    pub fn quotient(roots: Vec<(Rational, u32)>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidQuotient("no factors".into()));
        }
        for (i, (xi, a)) in roots.iter().enumerate() {
            if *a == 0 {
                return Err(Error::InvalidQuotient(format!(
                    "multiplicity 0 at root {xi}"
                )));
            }
            if roots[..i].iter().any(|(other, _)| other == xi) {
                return Err(Error::InvalidQuotient(format!("repeated root {xi}")));
            }
        }
        let modulus = roots.iter().fold(CentralPoly::one(), |acc, (xi, a)| {
            &acc * &CentralPoly::linear(xi).pow(*a)
        });
        Ok(Self::Quotient(Quotient { roots, modulus }))
    }

    /// `M_φ / (z − ξ)^a M_φ`.
    pub fn single(xi: Rational, a: u32) -> Result<Self> {
        Self::quotient(vec![(xi, a)])
    }

    pub fn modulus(&self) -> Option<&CentralPoly> {
        match self {
            Self::Universal => None,
            Self::Quotient(q) => Some(&q.modulus),
        }
    }

    /// `deg p`, the rank of the coefficient ring over ℚ; `None` for `M_φ`.
    pub fn coefficient_rank(&self) -> Option<usize> {
        self.modulus().and_then(CentralPoly::degree)
    }

    pub fn reduce(&self, p: &CentralPoly) -> CentralPoly {
        match self.modulus() {
            None => p.clone(),
            Some(m) => p.rem(m),
        }
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Universal => f.write_str("universal"),
            Self::Quotient(q) => {
                for (i, (xi, a)) in q.roots.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "({})", CentralPoly::linear(xi))?;
                    if *a != 1 {
                        write!(f, "^{a}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// The label `(λ, μ)` of the basis vector `L_λ W_μ w`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct BasisKey {
    pub lambda: Partition,
    pub mu: Partition,
}

impl BasisKey {
    pub fn new(lambda: impl Into<Partition>, mu: impl Into<Partition>) -> Self {
        let key = Self {
            lambda: lambda.into(),
            mu: mu.into(),
        };
        debug_assert!(key.lambda.is_nonpositive() && key.mu.is_nonpositive());
        key
    }

    /// `(0̄, 0̄)`, the label of `w`.
    pub fn top() -> Self {
        Self::default()
    }

    pub fn is_top(&self) -> bool {
        self.lambda.is_empty() && self.mu.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.lambda.weight() + self.mu.weight()
    }

    pub fn len(&self) -> usize {
        self.lambda.len() + self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_top()
    }

    pub fn monomial(&self) -> PbwMonomial {
        PbwMonomial::nonpositive(self.lambda.clone(), self.mu.clone())
    }

    pub(crate) fn body(&self) -> String {
        let mut parts = Vec::new();
        push_block(&mut parts, &self.lambda, Generator::L);
        push_block(&mut parts, &self.mu, Generator::W);
        parts.push("w".into());
        parts.join("*")
    }
}

/// Degree descending, then length, then `λ`, then `μ`.
impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.lambda.cmp(&other.lambda))
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite window on a module: keep `L_λ W_μ` with `|λ|+|μ| ≥ −max_depth` and
/// `ℓ(λ)+ℓ(μ) ≤ max_len`; `max_z` bounds the power of `z` in `M_φ` bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Truncation {
    pub max_depth: u32,
    pub max_len: u32,
    pub max_z: u32,
}

impl Truncation {
    pub fn new(max_depth: u32, max_len: u32, max_z: u32) -> Self {
        Self {
            max_depth,
            max_len,
            max_z,
        }
    }

    pub fn contains(&self, key: &BasisKey) -> bool {
        key.degree() >= -(self.max_depth as i64) && key.len() <= self.max_len as usize
    }

    /// All labels `(λ, μ)` inside the window, in canonical order.
    pub fn keys(&self) -> Vec<BasisKey> {
        let parts = enumerate_nonpositive(self.max_depth, self.max_len);
        let mut out = Vec::new();
        for lambda in &parts {
            for mu in &parts {
                let key = BasisKey {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                };
                if self.contains(&key) {
                    out.push(key);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.max_depth, self.max_len, self.max_z)
    }
}

/// Terms discarded because they fell outside a [`Truncation`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TruncationReport {
    pub truncated: bool,
    pub dropped: usize,
}

impl TruncationReport {
    pub fn record(&mut self, n: usize) {
        self.dropped += n;
        self.truncated = self.dropped > 0;
    }

    pub fn merge(&mut self, other: TruncationReport) {
        self.record(other.dropped);
    }
}

/// Element of `M_φ` or of a quotient `M_φ / p(z) M_φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    spec: QuotientSpec,
    terms: BTreeMap<BasisKey, CentralPoly>,
}

impl ModuleVector {
    pub fn zero(spec: &QuotientSpec) -> Self {
        Self {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The cyclic Whittaker vector `w` (or its image `w̄`).
    pub fn cyclic(spec: &QuotientSpec) -> Self {
        Self::basis(spec, BasisKey::top())
    }

    pub fn basis(spec: &QuotientSpec, key: BasisKey) -> Self {
        Self::term(spec, key, CentralPoly::one())
    }

    pub fn term(spec: &QuotientSpec, key: BasisKey, coeff: CentralPoly) -> Self {
        let mut v = Self::zero(spec);
        v.add_term(key, &coeff);
        v
    }

    pub fn spec(&self) -> &QuotientSpec {
        &self.spec
    }

    pub fn ensure_spec(&self, expected: &QuotientSpec) -> Result<()> {
        if &self.spec != expected {
            return Err(Error::QuotientMismatch {
                expected: expected.to_string(),
                found: self.spec.to_string(),
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &CentralPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &BasisKey) -> CentralPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Support is at most `{(0̄, 0̄)}`.
    pub fn is_cyclic_multiple(&self) -> bool {
        self.terms.keys().all(BasisKey::is_top)
    }

    /// Adds `coeff · L_λ W_μ w`, reducing modulo `p(z)` in a quotient.
    pub fn add_term(&mut self, key: BasisKey, coeff: &CentralPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += coeff;
        let reduced = self.spec.reduce(entry);
        *entry = reduced;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, by: &CentralPoly) {
        assert_eq!(
            self.spec, other.spec,
            "adding vectors from different modules"
        );
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &(c * by));
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &CentralPoly::one());
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &CentralPoly::from_int(-1));
        out
    }

    /// `p(z) · v`.
    pub fn scale(&self, by: &CentralPoly) -> ModuleVector {
        let mut out = Self::zero(&self.spec);
        out.add_scaled(self, by);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> ModuleVector {
        self.scale(&CentralPoly::constant(c.clone()))
    }

    /// Reinterprets the vector in another module, reducing coefficients.
    pub fn reduce_into(&self, spec: &QuotientSpec) -> ModuleVector {
        let mut out = Self::zero(spec);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn mindeg(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(BasisKey::degree)
            .min()
            .ok_or(Error::ZeroElement("mindeg"))
    }

    /// Splits into (kept inside the window, dropped count).
    pub fn truncate(&self, trunc: &Truncation) -> (ModuleVector, TruncationReport) {
        let mut report = TruncationReport::default();
        let mut out = Self::zero(&self.spec);
        for (k, c) in &self.terms {
            if trunc.contains(k) {
                out.terms.insert(k.clone(), c.clone());
            } else {
                report.record(1);
            }
        }
        (out, report)
    }

    /// Maximal `z`-degree of any coefficient; `None` for the zero vector.
    pub fn z_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(CentralPoly::degree).max()
    }

    pub fn to_json(&self) -> VectorJson {
        VectorJson {
            module: self.spec.to_string(),
            text: self.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermJson {
                    lambda: k.lambda.parts().to_vec(),
                    mu: k.mu.parts().to_vec(),
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|(k, c)| (c, k.body()))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub coefficient: String,
}

/// JSON form of a module vector: terms in canonical basis order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorJson {
    pub module: String,
    pub text: String,
    pub terms: Vec<TermJson>,
}

/// `u · v`, optionally cut down to a window.
pub fn act(
    u: &UeaElement,
    v: &ModuleVector,
    trunc: Option<&Truncation>,
    phi: &WhittakerType,
) -> (ModuleVector, TruncationReport) {
    let mut out = ModuleVector::zero(&v.spec);
    for (key, c) in &v.terms {
        let base = UeaElement::monomial(key.monomial());
        for (m, d) in u.terms() {
            let coeff = c * d;
            let product = monomial_times(m, &base);
            for (pm, e) in product.terms() {
                let (lower, upper) = pm.split();
                let value = phi_extend(phi, &upper).expect("positive block");
                if value.is_zero() {
                    continue;
                }
                let key = BasisKey {
                    lambda: lower.l_neg().clone(),
                    mu: lower.w_neg().clone(),
                };
                out.add_term(key, &(&coeff * e).scale(&value));
            }
        }
    }
    match trunc {
        Some(t) => out.truncate(t),
        None => (out, TruncationReport::default()),
    }
}

/// [`act`] after checking that `v` lives in `spec`.
pub fn act_in(
    u: &UeaElement,
    v: &ModuleVector,
    spec: &QuotientSpec,
    trunc: Option<&Truncation>,
    phi: &WhittakerType,
) -> Result<(ModuleVector, TruncationReport)> {
    v.ensure_spec(spec)?;
    Ok(act(u, v, trunc, phi))
}

/// `g · v` for a single generator.
pub fn act_generator(g: Generator, v: &ModuleVector, phi: &WhittakerType) -> ModuleVector {
    act(&UeaElement::generator(g), v, None, phi).0
}

/// `(x − φ(x)) · v`, with `φ` extended by zero outside `W₊`.
pub fn act_shifted(g: Generator, v: &ModuleVector, phi: &WhittakerType) -> ModuleVector {
    let mut out = act_generator(g, v, phi);
    let shift = phi.value_or_zero(g);
    if !shift.is_zero() {
        out.add_scaled(v, &CentralPoly::constant(-shift));
    }
    out
}

/// Degree and length data of the lowest homogeneous component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub mindeg: i64,
    /// `ℓ(v)`: height of the lowest component.
    pub length: usize,
    /// `ℓ'(v)`: `L`-height of the lowest component.
    pub l_length: usize,
}

pub fn vector_diagnostics(v: &ModuleVector) -> Result<Diagnostics> {
    let mindeg = v.mindeg()?;
    let lowest = v.terms.keys().filter(|k| k.degree() == mindeg);
    let (length, l_length) =
        lowest.fold((0, 0), |(a, b), k| (a.max(k.len()), b.max(k.lambda.len())));
    Ok(Diagnostics {
        mindeg,
        length,
        l_length,
    })
}

/// A basis vector `z^power L_λ W_μ w` of the ℚ-vector space underlying a module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisLabel {
    pub key: BasisKey,
    pub power: usize,
}

impl BasisLabel {
    pub fn vector(&self, spec: &QuotientSpec) -> ModuleVector {
        ModuleVector::term(spec, self.key.clone(), CentralPoly::z_pow(self.power))
    }
}

/// Number of `z`-power slots per label: `K + 1` in `M_φ`, `deg p` in a quotient.
pub fn coefficient_slots(spec: &QuotientSpec, trunc: &Truncation) -> usize {
    spec.coefficient_rank().unwrap_or(trunc.max_z as usize + 1)
}

/// ℚ-basis of the window: labels in canonical order, `z`-powers innermost.
pub fn basis_enumerate(spec: &QuotientSpec, trunc: &Truncation) -> Vec<BasisLabel> {
    let slots = coefficient_slots(spec, trunc);
    trunc
        .keys()
        .into_iter()
        .flat_map(|key| {
            (0..slots).map(move |power| BasisLabel {
                key: key.clone(),
                power,
            })
        })
        .collect()
}
