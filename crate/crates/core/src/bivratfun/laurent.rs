use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Laurent polynomial in `X` with integer coefficients.
///
/// Zero coefficients are never stored, so derived equality is mathematical
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·X^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `X^e`.
    pub fn x_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` if this is a single term `c·X^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(&e, c)| (c, e)),
            _ => None,
        }
    }

    /// Multiplies by `X^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// `X ↦ X^{-1}`.
    pub fn invert_x(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect() }
    }

    /// `X ↦ X^s` for a positive or negative integer `s`.
    pub fn substitute_power(&self, s: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (k * s, c.clone())))
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += rational_pow(q, e) * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact division by a unit monomial `±X^e`.
    pub fn div_unit(&self, unit: &LaurentPoly) -> Option<Self> {
        let (c, e) = unit.as_monomial()?;
        if c.is_one() {
            Some(self.shift(-e))
        } else if (-c).is_one() {
            Some(-self.shift(-e))
        } else {
            None
        }
    }
}

/// `q^e` for any integer `e`; panics on `0^e` with `e < 0`.
pub fn rational_pow(q: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    let mut exp = e.unsigned_abs();
    let mut acc = BigRational::one();
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
