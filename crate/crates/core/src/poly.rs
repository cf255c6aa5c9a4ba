//! Polynomials in the central element `z` with rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Element of `S(z) = ℚ[z]`, stored densely with no trailing zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CentralPoly {
    coeffs: Vec<Rational>,
}

impl CentralPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `z^k`.
    pub fn z_pow(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self { coeffs }
    }

    /// `z - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::from_coeffs(vec![-root.clone(), Rational::one()])
    }

    /// Coefficients in ascending powers of `z`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Divides out the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        match (self.degree(), modulus.degree()) {
            (Some(a), Some(b)) if a < b => self.clone(),
            (None, _) => Self::zero(),
            _ => self.div_rem(modulus).1,
        }
    }

    /// Extended Euclid: returns monic `g = gcd(a, b)` with `s·a + t·b = g`.
    /// For `a = b = 0` returns `(0, 0, 0)`.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (Self::zero(), Self::zero(), Self::zero()),
        }
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        Self::ext_gcd(a, b).0
    }

    /// Inverse modulo `modulus`, if `gcd(self, modulus) = 1`.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        let (g, s, _) = Self::ext_gcd(self, modulus);
        g.is_one().then(|| s.rem(modulus))
    }

    /// Multiplicity of `root` as a zero; `None` for the zero polynomial.
    pub fn valuation_at(&self, root: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = Self::linear(root);
        let mut p = self.clone();
        let mut v = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return Some(v);
            }
            p = q;
            v += 1;
        }
    }
}

impl From<Rational> for CentralPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &CentralPoly {
    type Output = CentralPoly;
    fn add(self, rhs: &CentralPoly) -> CentralPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CentralPoly {
    type Output = CentralPoly;
    fn sub(self, rhs: &CentralPoly) -> CentralPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&CentralPoly> for CentralPoly {
    fn add_assign(&mut self, rhs: &CentralPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&CentralPoly> for CentralPoly {
    fn sub_assign(&mut self, rhs: &CentralPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Mul for &CentralPoly {
    type Output = CentralPoly;
    fn mul(self, rhs: &CentralPoly) -> CentralPoly {
        if self.is_zero() || rhs.is_zero() {
            return CentralPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CentralPoly::from_coeffs(coeffs)
    }
}

impl Neg for &CentralPoly {
    type Output = CentralPoly;
    fn neg(self) -> CentralPoly {
        CentralPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Renders e.g. `z^2 - 1/2*z + 3`, highest power first; `0` for zero.
impl fmt::Display for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            match (abs.is_one(), zpart.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => f.write_str(&zpart)?,
                (false, false) => write!(f, "{abs}*{zpart}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(c: &[i64]) -> CentralPoly {
        CentralPoly::from_coeffs(c.iter().map(|&x| q(x, 1)).collect())
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(CentralPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[1, 0, 2]).degree(), Some(2));
    }

    #[test]
    fn division() {
        // z^3 - 1 = (z - 1)(z^2 + z + 1)
        let (quot, rem) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(quot, p(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (quot, rem) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(quot, CentralPoly::from_coeffs(vec![q(0, 1), q(1, 2)]));
        assert_eq!(rem, p(&[1]));
    }

    #[test]
    fn extended_euclid() {
        // (z - 1)^2 and z + 3
        let a = p(&[1, -2, 1]);
        let b = p(&[3, 1]);
        let (g, s, t) = CentralPoly::ext_gcd(&a, &b);
        assert!(g.is_one());
        assert!((&(&s * &a) + &(&t * &b)).is_one());
        let inv = b.inverse_mod(&a).unwrap();
        assert_eq!(inv, CentralPoly::from_coeffs(vec![q(5, 16), q(-1, 16)]));
        assert!(p(&[-1, 1]).inverse_mod(&a).is_none());
    }

    #[test]
    fn valuation() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(f.valuation_at(&q(1, 1)), Some(2));
        assert_eq!(f.valuation_at(&q(-2, 1)), Some(1));
        assert_eq!(f.valuation_at(&q(0, 1)), Some(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 3]).to_string(), "3*z^2 - 1");
        assert_eq!(
            CentralPoly::from_coeffs(vec![q(0, 1), q(-1, 2)]).to_string(),
            "-1/2*z"
        );
        assert_eq!(p(&[0, 1]).to_string(), "z");
        assert_eq!(CentralPoly::zero().to_string(), "0");
    }
}
