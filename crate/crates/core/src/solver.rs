//! Whittaker vectors: exact nullspace computation on a window, the descent
//! procedure driving any nonzero vector to a nonzero Whittaker vector, and
//! annihilator membership.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::linalg::{row_reduce, sparse_row, SparseRow};
use crate::pbw::UeaElement;
use crate::poly::CentralPoly;
use crate::whittaker::{
    act, act_generator, act_shifted, basis_enumerate, vector_diagnostics, BasisKey, BasisLabel,
    Diagnostics, ModuleVector, QuotientSpec, Truncation, TruncationReport, WhittakerType,
};
use crate::Rational;

/// The generators of `W₊` whose action determines the Whittaker condition,
/// in the order their equations are stacked.
pub const DEFINING_GENERATORS: [Generator; 4] = [
    Generator::L(1),
    Generator::L(2),
    Generator::W(1),
    Generator::W(2),
];

pub fn is_whittaker(v: &ModuleVector, phi: &WhittakerType) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroElement("is_whittaker"));
    }
    Ok(DEFINING_GENERATORS
        .iter()
        .all(|&g| act_shifted(g, v, phi).is_zero()))
}

/// Column indexing of a window basis, translating module vectors to sparse rows.
#[derive(Debug, Clone)]
pub struct Coordinates {
    spec: QuotientSpec,
    labels: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
}

impl Coordinates {
    pub fn new(spec: &QuotientSpec, trunc: &Truncation) -> Self {
        let labels = basis_enumerate(spec, trunc);
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Self {
            spec: spec.clone(),
            labels,
            index,
        }
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn column(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Coordinates of `v`, or `None` if some term lies outside the window.
    pub fn to_row(&self, v: &ModuleVector) -> Option<SparseRow> {
        let mut entries = Vec::new();
        for (key, c) in v.terms() {
            for (power, a) in c.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let label = BasisLabel {
                    key: key.clone(),
                    power,
                };
                entries.push((self.column(&label)?, a.clone()));
            }
        }
        Some(sparse_row(entries))
    }

    pub fn to_vector(&self, row: &[(usize, Rational)]) -> ModuleVector {
        let mut v = ModuleVector::zero(&self.spec);
        for (c, a) in row {
            let label = &self.labels[*c];
            v.add_term(label.key.clone(), &CentralPoly::z_pow(label.power).scale(a));
        }
        v
    }
}

/// The stacked system `(g − φ(g)) x = 0`, `g ∈ {L₁, L₂, W₁, W₂}`, over a window basis.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub coordinates: Coordinates,
    /// One row per (operator, output basis label), operators in stacking order.
    pub rows: Vec<SparseRow>,
    /// Terms of operator images that left the `(N, H)` window. The system
    /// keeps them as extra rows, so the nullspace stays exact; a nonzero count
    /// means the window was not closed under the operators.
    pub escaped: TruncationReport,
}

pub fn whittaker_system(
    phi: &WhittakerType,
    spec: &QuotientSpec,
    trunc: &Truncation,
) -> LinearSystem {
    let coordinates = Coordinates::new(spec, trunc);
    let mut rows: BTreeMap<(usize, BasisKey, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    let mut escaped = TruncationReport::default();
    // images of L_λ W_μ w; z-powers follow by S(z)-linearity
    let mut images: HashMap<(usize, BasisKey), ModuleVector> = HashMap::new();
    for (col, label) in coordinates.labels().iter().enumerate() {
        for (op, &g) in DEFINING_GENERATORS.iter().enumerate() {
            let image = images.entry((op, label.key.clone())).or_insert_with(|| {
                act_shifted(g, &ModuleVector::basis(spec, label.key.clone()), phi)
            });
            let shifted = image.scale(&CentralPoly::z_pow(label.power));
            for (key, c) in shifted.terms() {
                if !trunc.contains(key) {
                    escaped.record(1);
                }
                for (power, a) in c.coeffs().iter().enumerate() {
                    if !a.is_zero() {
                        rows.entry((op, key.clone(), power))
                            .or_default()
                            .push((col, a.clone()));
                    }
                }
            }
        }
    }
    LinearSystem {
        coordinates,
        rows: rows.into_values().map(sparse_row).collect(),
        escaped,
    }
}

/// Basis of the Whittaker vectors inside the window, from the reduced row
/// echelon form of the stacked system (one vector per free column).
pub fn whittaker_nullspace(
    phi: &WhittakerType,
    spec: &QuotientSpec,
    trunc: &Truncation,
) -> Vec<ModuleVector> {
    let system = whittaker_system(phi, spec, trunc);
    let mut echelon = row_reduce(&system.rows);
    echelon
        .nullspace(system.coordinates.len())
        .iter()
        .map(|row| system.coordinates.to_vector(row))
        .collect()
}

/// Which part of the support a descent step attacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum DescentChoice {
    /// Some `λ ≠ 0̄`: apply `W_{2−m₀}` where `m₀` is the least first part
    /// among the `λ` of maximal length.
    LPart { m0: i64 },
    /// Only `W`-parts remain: apply `L_{2−n₀}` where `n₀` is the least first part of `μ`.
    WPart { n0: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub operator: String,
    #[serde(flatten)]
    pub choice: DescentChoice,
    pub before: Diagnostics,
    pub after: Diagnostics,
}

/// Record of a descent. The measure `(−mindeg, ℓ)` strictly decreases
/// lexicographically from step to step.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
}

impl DescentTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Terminal vector of a descent: `q(z)·w` (or its residue in a quotient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhittakerWitness {
    pub vector: ModuleVector,
    /// `q(z)` as produced, including the unit picked up on the way.
    pub coefficient: CentralPoly,
    pub leading_unit: Rational,
    /// `q(z)` divided by its leading coefficient.
    pub monic: CentralPoly,
}

impl fmt::Display for WhittakerWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vector)
    }
}

/// Chooses the operator for the next descent step, or `None` if the support
/// is already `{(0̄, 0̄)}`.
pub fn descent_operator(v: &ModuleVector) -> Option<(Generator, DescentChoice)> {
    let max_l = v.terms().map(|(k, _)| k.lambda.len()).max()?;
    if max_l > 0 {
        let m0 = v
            .terms()
            .filter(|(k, _)| k.lambda.len() == max_l)
            .filter_map(|(k, _)| k.lambda.first())
            .min()?;
        return Some((Generator::W(2 - m0), DescentChoice::LPart { m0 }));
    }
    let n0 = v.terms().filter_map(|(k, _)| k.mu.first()).min()?;
    Some((Generator::L(2 - n0), DescentChoice::WPart { n0 }))
}

fn decreased(before: &Diagnostics, after: &Diagnostics) -> bool {
    after.mindeg > before.mindeg || (after.mindeg == before.mindeg && after.length < before.length)
}

/// Drives `v` to a nonzero multiple of `w` by repeatedly applying `x − φ(x)`.
pub fn descend(
    v: &ModuleVector,
    phi: &WhittakerType,
    spec: &QuotientSpec,
) -> Result<(WhittakerWitness, DescentTrace)> {
    v.ensure_spec(spec)?;
    if v.is_zero() {
        return Err(Error::ZeroElement("descend"));
    }
    let mut current = v.clone();
    let mut trace = DescentTrace::default();
    while let Some((g, choice)) = descent_operator(&current) {
        let before = vector_diagnostics(&current)?;
        let next = act_shifted(g, &current, phi);
        if next.is_zero() {
            return Err(Error::DescentVanished {
                operator: g.to_string(),
            });
        }
        let after = vector_diagnostics(&next)?;
        if !decreased(&before, &after) {
            return Err(Error::DescentStalled {
                step: trace.steps.len(),
            });
        }
        trace.steps.push(DescentStep {
            operator: g.to_string(),
            choice,
            before,
            after,
        });
        current = next;
    }
    let coefficient = current.coefficient(&BasisKey::top());
    let leading_unit = coefficient
        .leading()
        .cloned()
        .expect("terminal vector is nonzero");
    let monic = coefficient.monic();
    Ok((
        WhittakerWitness {
            vector: current,
            coefficient,
            leading_unit,
            monic,
        },
        trace,
    ))
}

/// Monic `q(z)` such that `q(z)·w` lies in the submodule generated by `v ∈ M_φ`.
pub fn extract_whittaker_generator(v: &ModuleVector, phi: &WhittakerType) -> Result<CentralPoly> {
    if v.spec() != &QuotientSpec::Universal {
        return Err(Error::RequiresUniversal);
    }
    Ok(descend(v, phi, &QuotientSpec::Universal)?.0.monic)
}

/// Whether `u` annihilates the cyclic vector of the given module.
pub fn ann_contains(u: &UeaElement, phi: &WhittakerType, spec: &QuotientSpec) -> bool {
    act(u, &ModuleVector::cyclic(spec), None, phi).0.is_zero()
}

/// `act(g, v) − 0` for the generators that act by zero on Whittaker vectors.
pub fn kills_higher_generators(v: &ModuleVector, phi: &WhittakerType, upto: i64) -> bool {
    (3..=upto).all(|n| {
        let lhs = act_generator(Generator::L(n), v, phi);
        let rhs = act_generator(Generator::W(n), v, phi);
        lhs.is_zero() && rhs.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use Generator::*;

    fn key(l: &[i64], m: &[i64]) -> BasisKey {
        BasisKey::new(l.to_vec(), m.to_vec())
    }

    #[test]
    fn whittaker_examples() {
        let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
        let u = QuotientSpec::Universal;
        let w = ModuleVector::cyclic(&u);
        assert!(is_whittaker(&w, &phi).unwrap());
        let p = CentralPoly::from_coeffs(vec![ratio(-1, 1), ratio(0, 1), ratio(3, 1)]);
        assert!(is_whittaker(&w.scale(&p), &phi).unwrap());
        assert!(!is_whittaker(&ModuleVector::basis(&u, key(&[-1], &[])), &phi).unwrap());
        assert!(is_whittaker(&ModuleVector::zero(&u), &phi).is_err());
    }

    #[test]
    fn descend_examples() {
        let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
        let u = QuotientSpec::Universal;

        let (wit, trace) = descend(&ModuleVector::basis(&u, key(&[-1], &[])), &phi, &u).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.steps[0].operator, "W[3]");
        assert_eq!(trace.steps[0].choice, DescentChoice::LPart { m0: -1 });
        assert_eq!(
            wit.vector,
            ModuleVector::cyclic(&u).scale_rational(&ratio(-12, 1))
        );

        let (wit, trace) = descend(&ModuleVector::basis(&u, key(&[], &[-1])), &phi, &u).unwrap();
        assert_eq!(trace.steps[0].operator, "L[3]");
        assert_eq!(wit.coefficient, CentralPoly::from_int(-12));

        let (wit, trace) = descend(&ModuleVector::cyclic(&u), &phi, &u).unwrap();
        assert!(trace.is_empty());
        assert_eq!(wit.vector, ModuleVector::cyclic(&u));

        assert!(descend(&ModuleVector::zero(&u), &phi, &u).is_err());
    }

    #[test]
    fn extract_examples() {
        let phi = WhittakerType::from_ints(1, 1, 2, 3).unwrap();
        let u = QuotientSpec::Universal;
        let zm1 = CentralPoly::linear(&ratio(1, 1));
        let v = ModuleVector::cyclic(&u).scale(&zm1);
        assert_eq!(extract_whittaker_generator(&v, &phi).unwrap(), zm1);
        let v = ModuleVector::basis(&u, key(&[-1], &[]));
        assert!(extract_whittaker_generator(&v, &phi).unwrap().is_one());
        let v = ModuleVector::basis(&u, key(&[-1], &[]))
            .add(&ModuleVector::cyclic(&u))
            .scale(&zm1);
        assert_eq!(extract_whittaker_generator(&v, &phi).unwrap(), zm1);
        let q = QuotientSpec::single(ratio(1, 1), 1).unwrap();
        assert_eq!(
            extract_whittaker_generator(&ModuleVector::cyclic(&q), &phi),
            Err(Error::RequiresUniversal)
        );
    }

    #[test]
    fn ann_examples() {
        let phi = WhittakerType::from_ints(2, 1, 3, 1).unwrap();
        let xi = ratio(5, 1);
        let spec = QuotientSpec::single(xi.clone(), 1).unwrap();
        let u = UeaElement::scalar(CentralPoly::linear(&xi));
        assert!(ann_contains(&u, &phi, &spec));
        assert!(!ann_contains(&u, &phi, &QuotientSpec::Universal));

        let l1w1 = crate::normalize(&[L(1), W(1)]);
        let u = l1w1.sub(&UeaElement::rational(ratio(6, 1)));
        assert!(ann_contains(&u, &phi, &spec));
        assert!(ann_contains(&u, &phi, &QuotientSpec::Universal));

        assert!(!ann_contains(&UeaElement::generator(L(0)), &phi, &spec));
    }

    #[test]
    fn small_nullspaces() {
        let phi = WhittakerType::from_ints(1, 2, 3, 4).unwrap();
        let t = Truncation::new(2, 2, 2);
        let u = QuotientSpec::Universal;
        let ns = whittaker_nullspace(&phi, &u, &t);
        let want: Vec<ModuleVector> = (0..3)
            .map(|k| ModuleVector::cyclic(&u).scale(&CentralPoly::z_pow(k)))
            .collect();
        assert_eq!(ns, want);

        let spec = QuotientSpec::single(ratio(2, 1), 1).unwrap();
        assert_eq!(
            whittaker_nullspace(&phi, &spec, &t),
            vec![ModuleVector::cyclic(&spec)]
        );

        let spec = QuotientSpec::single(ratio(2, 1), 2).unwrap();
        let ns = whittaker_nullspace(&phi, &spec, &t);
        assert_eq!(ns.len(), 2);
        assert!(ns.iter().all(ModuleVector::is_cyclic_multiple));
    }

    #[test]
    fn window_is_closed_under_defining_operators() {
        let phi = WhittakerType::from_ints(1, 2, 3, 4).unwrap();
        let sys = whittaker_system(&phi, &QuotientSpec::Universal, &Truncation::new(3, 3, 0));
        assert!(!sys.escaped.truncated);
    }
}
