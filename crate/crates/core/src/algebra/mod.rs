//! The Lie algebra W(2,2): basis `L_n`, `W_n` (n ∈ ℤ) and a central `z`.
//!
//! Brackets:
//!
//! ```text
//! [L_n, L_m] = (m - n) L_{m+n} + (n^3 - n)/12 δ_{m+n,0} z
//! [L_n, W_m] = (m - n) W_{m+n} + (n^3 - n)/12 δ_{m+n,0} z
//! [W_n, W_m] = [z, L_m] = [z, W_m] = 0
//! ```
//!
//! `[W_n, L_m]` follows by antisymmetry.

mod partition;

pub use partition::{enumerate_nonpositive, Partition};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::Rational;

/// Basis element of W(2,2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    L(i64),
    W(i64),
    Z,
}

impl Generator {
    pub fn grade(self) -> i64 {
        match self {
            Generator::L(n) | Generator::W(n) => n,
            Generator::Z => 0,
        }
    }

    pub fn index(self) -> Option<i64> {
        match self {
            Generator::L(n) | Generator::W(n) => Some(n),
            Generator::Z => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self.grade() > 0 && self != Generator::Z
    }

    /// Position in the PBW order `L_{≤0} < W_{≤0} < L_{>0} < W_{>0}`,
    /// ascending index inside each block. `z` has no position.
    pub fn pbw_key(self) -> Option<(u8, i64)> {
        match self {
            Generator::L(n) if n <= 0 => Some((0, n)),
            Generator::W(n) if n <= 0 => Some((1, n)),
            Generator::L(n) => Some((2, n)),
            Generator::W(n) => Some((3, n)),
            Generator::Z => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(n) => write!(f, "L[{n}]"),
            Generator::W(n) => write!(f, "W[{n}]"),
            Generator::Z => f.write_str("z"),
        }
    }
}

/// Finite linear combination of generators; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorCombination {
    terms: BTreeMap<Generator, Rational>,
}

impl GeneratorCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: Generator, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn coefficient(&self, g: Generator) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (g, v) in &self.terms {
            out.add_term(*g, v * c);
        }
        out
    }

    pub fn add(&mut self, other: &Self) {
        for (g, v) in &other.terms {
            self.add_term(*g, v.clone());
        }
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Rational::one())
    }
}

impl fmt::Display for GeneratorCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{abs}*{g}")?;
            }
        }
        Ok(())
    }
}

/// `(n^3 - n)/12 δ_{n+m,0}`: the coefficient of `z` in `[L_n, L_m]` and `[L_n, W_m]`.
fn central_term(n: i64, m: i64) -> Rational {
    if n + m != 0 {
        return Rational::zero();
    }
    let n = Rational::from_integer(n.into());
    (&n * &n * &n - &n) / Rational::from_integer(12.into())
}

/// The Lie bracket `[g, h]`.
pub fn bracket(g: Generator, h: Generator) -> GeneratorCombination {
    use Generator::*;
    let mut out = GeneratorCombination::zero();
    match (g, h) {
        (Z, _) | (_, Z) | (W(_), W(_)) => {}
        (L(n), L(m)) => {
            out.add_term(L(n + m), Rational::from_integer((m - n).into()));
            out.add_term(Z, central_term(n, m));
        }
        (L(n), W(m)) => {
            out.add_term(W(n + m), Rational::from_integer((m - n).into()));
            out.add_term(Z, central_term(n, m));
        }
        (W(_), L(_)) => return bracket(h, g).neg(),
    }
    out
}

/// The bracket extended bilinearly to combinations.
pub fn bracket_combinations(
    a: &GeneratorCombination,
    b: &GeneratorCombination,
) -> GeneratorCombination {
    let mut out = GeneratorCombination::zero();
    for (g, x) in a.iter() {
        for (h, y) in b.iter() {
            out.add(&bracket(*g, *h).scaled(&(x * y)));
        }
    }
    out
}

/// A single generator as a combination.
impl From<Generator> for GeneratorCombination {
    fn from(g: Generator) -> Self {
        let mut out = Self::zero();
        out.add_term(g, Rational::one());
        out
    }
}

pub fn grade(g: Generator) -> i64 {
    g.grade()
}
