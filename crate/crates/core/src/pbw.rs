//! The universal enveloping algebra `U(W)` over `S(z)`.
//!
//! Elements are finite sums of PBW monomials `L_λ W_λ' L_μ W_μ'` with
//! `λ, λ' ∈ P₋` and `μ, μ' ∈ P₊`, each carrying a `CentralPoly` coefficient.
//! Products are brought to this form by straightening: the leftmost
//! out-of-order pair `x y` is replaced by `y x + [x, y]` until none remain.
//! Results of left-multiplying a generator onto a monomial are memoized in a
//! process-wide table.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use crate::algebra::{bracket, Generator, Partition};
use crate::error::{Error, Result};
use crate::poly::CentralPoly;
use crate::render::{push_block, render_terms};
use crate::Rational;

const L_NEG: usize = 0;
const W_NEG: usize = 1;
const L_POS: usize = 2;
const W_POS: usize = 3;

/// An ordered PBW monomial `L_{λL} W_{λW} L_{μL} W_{μW}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    blocks: [Partition; 4],
}

impl PbwMonomial {
    /// The empty monomial, i.e. `1`.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(
        l_neg: Partition,
        w_neg: Partition,
        l_pos: Partition,
        w_pos: Partition,
    ) -> Result<Self> {
        let ok = l_neg.is_nonpositive()
            && w_neg.is_nonpositive()
            && l_pos.parts().iter().all(|&p| p >= 1)
            && w_pos.parts().iter().all(|&p| p >= 1);
        if !ok {
            return Err(Error::Expr(
                "PBW blocks must be (non-positive, non-positive, positive, positive)".into(),
            ));
        }
        Ok(Self {
            blocks: [l_neg, w_neg, l_pos, w_pos],
        })
    }

    /// `L_λ W_μ` with `λ, μ ∈ P₋`.
    pub fn nonpositive(lambda: Partition, mu: Partition) -> Self {
        debug_assert!(lambda.is_nonpositive() && mu.is_nonpositive());
        Self {
            blocks: [lambda, mu, Partition::empty(), Partition::empty()],
        }
    }

    pub fn generator(g: Generator) -> Self {
        let mut m = Self::one();
        let (block, n) = g.pbw_key().expect("z is not a PBW factor");
        m.blocks[block as usize].push_front(n);
        m
    }

    pub fn l_neg(&self) -> &Partition {
        &self.blocks[L_NEG]
    }

    pub fn w_neg(&self) -> &Partition {
        &self.blocks[W_NEG]
    }

    pub fn l_pos(&self) -> &Partition {
        &self.blocks[L_POS]
    }

    pub fn w_pos(&self) -> &Partition {
        &self.blocks[W_POS]
    }

    pub fn is_one(&self) -> bool {
        self.blocks.iter().all(Partition::is_empty)
    }

    /// Factors in PBW order.
    pub fn factors(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.height());
        for (b, block) in self.blocks.iter().enumerate() {
            let make = block_generator(b);
            out.extend(block.parts().iter().map(|&n| make(n)));
        }
        out
    }

    /// Sum of all parts.
    pub fn degree(&self) -> i64 {
        self.blocks.iter().map(Partition::weight).sum()
    }

    /// Total number of factors.
    pub fn height(&self) -> usize {
        self.blocks.iter().map(Partition::len).sum()
    }

    /// Number of `L` factors.
    pub fn l_height(&self) -> usize {
        self.blocks[L_NEG].len() + self.blocks[L_POS].len()
    }

    pub fn has_positive_part(&self) -> bool {
        !self.blocks[L_POS].is_empty() || !self.blocks[W_POS].is_empty()
    }

    pub fn has_nonpositive_part(&self) -> bool {
        !self.blocks[L_NEG].is_empty() || !self.blocks[W_NEG].is_empty()
    }

    /// Splits into the `U(W_{≤0})` factor and the `U(W_+)` factor.
    pub fn split(&self) -> (PbwMonomial, PbwMonomial) {
        let [a, b, c, d] = self.blocks.clone();
        let e = Partition::empty;
        (
            Self {
                blocks: [a, b, e(), e()],
            },
            Self {
                blocks: [e(), e(), c, d],
            },
        )
    }

    fn first(&self) -> Option<(Generator, PbwMonomial)> {
        for (b, block) in self.blocks.iter().enumerate() {
            if let Some((n, rest)) = block.split_first() {
                let mut tail = self.clone();
                tail.blocks[b] = rest;
                return Some((block_generator(b)(n), tail));
            }
        }
        None
    }

    /// `g · self` when `g` precedes every factor.
    fn prepend(&self, g: Generator) -> PbwMonomial {
        let (block, n) = g.pbw_key().expect("z is not a PBW factor");
        let mut out = self.clone();
        out.blocks[block as usize].push_front(n);
        out
    }

    fn can_prepend(&self, g: Generator) -> bool {
        match self.first() {
            None => true,
            Some((f, _)) => g.pbw_key() <= f.pbw_key(),
        }
    }
}

fn block_generator(b: usize) -> fn(i64) -> Generator {
    match b {
        L_NEG | L_POS => Generator::L,
        _ => Generator::W,
    }
}

/// Canonical order: degree descending, then height, then blocks lexicographically.
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |m: &Self| (Reverse(m.degree()), m.height());
        key(self).cmp(&key(other)).then_with(|| {
            for (a, b) in self.blocks.iter().zip(&other.blocks) {
                let c = a.len().cmp(&b.len()).then_with(|| a.parts().cmp(b.parts()));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        f.write_str(&self.body())
    }
}

impl PbwMonomial {
    /// `*`-joined factors, empty for the unit monomial.
    pub(crate) fn body(&self) -> String {
        let mut parts = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            push_block(&mut parts, block, block_generator(b));
        }
        parts.join("*")
    }
}

/// Element of `U(W)`: a finite map from PBW monomials to `S(z)` coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, CentralPoly>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(CentralPoly::one())
    }

    pub fn scalar(p: CentralPoly) -> Self {
        Self::term(PbwMonomial::one(), p)
    }

    pub fn rational(c: Rational) -> Self {
        Self::scalar(CentralPoly::constant(c))
    }

    pub fn term(m: PbwMonomial, p: CentralPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &p);
        out
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        Self::term(m, CentralPoly::one())
    }

    /// A single generator; `z` becomes the scalar `z`.
    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Z => Self::scalar(CentralPoly::z_pow(1)),
            g => Self::monomial(PbwMonomial::generator(g)),
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &CentralPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> CentralPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: PbwMonomial, p: &CentralPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(c) => {
                *c += p;
                if c.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, p.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, by: &CentralPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(c * by));
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &CentralPoly::one());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &CentralPoly::from_int(-1));
        out
    }

    pub fn scale(&self, by: &CentralPoly) -> UeaElement {
        let mut out = Self::zero();
        out.add_scaled(self, by);
        out
    }

    /// `(ht, ht₁)`: maximal total height and maximal `L`-height over monomials.
    pub fn heights(&self) -> Result<(usize, usize)> {
        if self.is_zero() {
            return Err(Error::ZeroElement("heights"));
        }
        let ht = self
            .terms
            .keys()
            .map(PbwMonomial::height)
            .max()
            .unwrap_or(0);
        let ht1 = self
            .terms
            .keys()
            .map(PbwMonomial::l_height)
            .max()
            .unwrap_or(0);
        Ok((ht, ht1))
    }

    pub fn mindeg(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(PbwMonomial::degree)
            .min()
            .ok_or(Error::ZeroElement("mindeg"))
    }

    /// True when every monomial has degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|(m, c)| (c, m.body()))))
    }
}

type Memo = RwLock<HashMap<(Generator, PbwMonomial), Arc<UeaElement>>>;

static MEMO: LazyLock<Memo> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Number of cached generator-times-monomial products.
pub fn memo_size() -> usize {
    MEMO.read().map(|m| m.len()).unwrap_or(0)
}

/// `g · m` in PBW form.
fn gen_times_monomial(g: Generator, m: &PbwMonomial) -> Arc<UeaElement> {
    if g == Generator::Z {
        return Arc::new(UeaElement::term(m.clone(), CentralPoly::z_pow(1)));
    }
    if m.can_prepend(g) {
        return Arc::new(UeaElement::monomial(m.prepend(g)));
    }
    let key = (g, m.clone());
    if let Some(hit) = MEMO.read().expect("memo poisoned").get(&key) {
        return Arc::clone(hit);
    }
    // g f rest = f (g rest) + [g, f] rest
    let (f, rest) = m.first().expect("non-empty monomial");
    let mut out = gen_times_element(f, &gen_times_monomial(g, &rest));
    for (h, c) in bracket(g, f).iter() {
        let c = CentralPoly::constant(c.clone());
        match h {
            Generator::Z => out.add_term(rest.clone(), &c.shift(1)),
            _ => out.add_scaled(&gen_times_monomial(*h, &rest), &c),
        }
    }
    let out = Arc::new(out);
    MEMO.write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&out));
    out
}

fn gen_times_element(g: Generator, x: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, c) in x.terms() {
        out.add_scaled(&gen_times_monomial(g, m), c);
    }
    out
}

/// PBW normal form of the product `word[0] · word[1] · …`.
pub fn normalize(word: &[Generator]) -> UeaElement {
    let mut acc = UeaElement::one();
    for &g in word.iter().rev() {
        acc = gen_times_element(g, &acc);
    }
    acc
}

/// `m · x` for a monomial `m`.
pub fn monomial_times(m: &PbwMonomial, x: &UeaElement) -> UeaElement {
    let mut acc = x.clone();
    for g in m.factors().into_iter().rev() {
        acc = gen_times_element(g, &acc);
    }
    acc
}

/// The product `a · b` in PBW form.
pub fn multiply(a: &UeaElement, b: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, c) in a.terms() {
        out.add_scaled(&monomial_times(m, b), c);
    }
    out
}

/// `xy − yx`.
pub fn commutator(a: &UeaElement, b: &UeaElement) -> UeaElement {
    multiply(a, b).sub(&multiply(b, a))
}

pub fn degree(m: &PbwMonomial) -> i64 {
    m.degree()
}

pub fn heights(x: &UeaElement) -> Result<(usize, usize)> {
    x.heights()
}

pub fn mindeg(x: &UeaElement) -> Result<i64> {
    x.mindeg()
}

/// Convenience: a rational constant as a coefficient.
pub fn constant(c: i64) -> CentralPoly {
    CentralPoly::constant(Rational::from_integer(c.into()))
}

#[cfg(test)]
fn is_normal_word(word: &[Generator]) -> bool {
    word.iter().all(|g| *g != Generator::Z)
        && word.windows(2).all(|w| w[0].pbw_key() <= w[1].pbw_key())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn mono(word: &[Generator]) -> PbwMonomial {
        let mut m = PbwMonomial::one();
        for &g in word.iter().rev() {
            assert!(m.can_prepend(g));
            m = m.prepend(g);
        }
        m
    }

    #[test]
    fn normalize_examples() {
        let got = normalize(&[L(1), L(-1)]);
        let mut want = UeaElement::monomial(mono(&[L(-1), L(1)]));
        want.add_term(mono(&[L(0)]), &constant(-2));
        assert_eq!(got, want);

        assert_eq!(normalize(&[W(0)]), UeaElement::generator(W(0)));

        let got = normalize(&[L(2), W(-2)]);
        let mut want = UeaElement::monomial(mono(&[W(-2), L(2)]));
        want.add_term(mono(&[W(0)]), &constant(-4));
        want.add_term(PbwMonomial::one(), &CentralPoly::z_pow(1).scale(&q(1, 2)));
        assert_eq!(got, want);

        let got = normalize(&[W(1), L(-1)]);
        let mut want = UeaElement::monomial(mono(&[L(-1), W(1)]));
        want.add_term(mono(&[W(0)]), &constant(-2));
        assert_eq!(got, want);
        assert_eq!(got.to_string(), "-2*W[0] + L[-1]*W[1]");
    }

    #[test]
    fn multiply_examples() {
        let l1 = UeaElement::generator(L(1));
        assert_eq!(
            multiply(&l1, &l1),
            UeaElement::monomial(mono(&[L(1), L(1)]))
        );
        let z = UeaElement::generator(Z);
        let l0 = UeaElement::generator(L(0));
        assert_eq!(
            multiply(&z, &l0),
            UeaElement::term(mono(&[L(0)]), CentralPoly::z_pow(1))
        );
        let w1 = UeaElement::generator(W(1));
        let lm1 = UeaElement::generator(L(-1));
        assert_eq!(multiply(&w1, &lm1), normalize(&[W(1), L(-1)]));
    }

    #[test]
    fn degrees() {
        let m = PbwMonomial::new(
            [-2].into(),
            Partition::empty(),
            Partition::empty(),
            [3].into(),
        )
        .unwrap();
        assert_eq!(degree(&m), 1);
        assert_eq!(degree(&PbwMonomial::one()), 0);
        assert_eq!(degree(&mono(&[L(-1), L(-1), W(0)])), -2);
    }

    #[test]
    fn heights_and_mindeg() {
        let x = UeaElement::monomial(mono(&[L(-1), L(-1), W(0)]));
        assert_eq!(heights(&x).unwrap(), (3, 2));
        let s = UeaElement::scalar(CentralPoly::z_pow(2).scale(&q(5, 1)));
        assert_eq!(heights(&s).unwrap(), (0, 0));
        let y = normalize(&[W(1), L(-1)]);
        assert_eq!(heights(&y).unwrap(), (2, 1));
        assert_eq!(mindeg(&y).unwrap(), 0);
        let x = UeaElement::generator(L(-2)).add(&UeaElement::generator(L(-1)));
        assert_eq!(mindeg(&x).unwrap(), -2);
        assert_eq!(mindeg(&UeaElement::rational(q(7, 1))).unwrap(), 0);
        assert!(heights(&UeaElement::zero()).is_err());
        assert!(mindeg(&UeaElement::zero()).is_err());
    }

    #[test]
    fn z_is_absorbed() {
        let x = normalize(&[L(0), Z, W(-1), Z]);
        assert_eq!(
            x,
            UeaElement::term(mono(&[L(0), W(-1)]), CentralPoly::z_pow(2))
        );
    }

    #[test]
    fn normal_words_are_fixed() {
        let w = [L(-2), L(0), W(-1), W(-1), L(1), L(3), W(2)];
        assert!(is_normal_word(&w));
        assert_eq!(normalize(&w), UeaElement::monomial(mono(&w)));
    }

    #[test]
    fn invalid_blocks_rejected() {
        assert!(PbwMonomial::new(
            [1].into(),
            Partition::empty(),
            Partition::empty(),
            Partition::empty()
        )
        .is_err());
        assert!(PbwMonomial::new(
            Partition::empty(),
            Partition::empty(),
            [0].into(),
            Partition::empty()
        )
        .is_err());
    }
}
