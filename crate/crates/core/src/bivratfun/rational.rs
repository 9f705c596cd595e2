use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{BivError, LaurentPoly, TPoly, UnivariateRational};

/// `num / ∏_a (1 - X^a T)^{den[a]}` in reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BivariateRational {
    num: TPoly,
    den: BTreeMap<i64, u32>,
}

impl BivariateRational {
    /// Builds and reduces `num / ∏ (1 - X^a T)` over the given factor list.
    pub fn new<I>(num: TPoly, factors: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let mut den = BTreeMap::new();
        for a in factors {
            *den.entry(a).or_insert(0) += 1;
        }
        Self::from_parts(num, den)
    }

    pub(crate) fn from_parts(num: TPoly, den: BTreeMap<i64, u32>) -> Self {
        let mut f = BivariateRational { num, den };
        f.reduce();
        f
    }

    /// Unreduced construction for callers that reduce once at the end.
    pub(crate) fn raw(num: TPoly, den: BTreeMap<i64, u32>) -> Self {
        BivariateRational { num, den }
    }

    /// Sum without reducing; the denominator is the lcm of the two.
    pub(crate) fn add_unreduced(&self, other: &Self) -> Self {
        let (den, a, b) = self.common_den(other);
        Self::raw(&a + &b, den)
    }

    pub(crate) fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    pub(crate) fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<i64> = self.den.keys().copied().collect();
        for a in keys {
            let m = self.den.get_mut(&a).expect("key taken from map");
            while *m > 0 {
                match self.num.div_factor(a) {
                    Some(q) => {
                        self.num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
            if *m == 0 {
                self.den.remove(&a);
            }
        }
    }

    pub fn zero() -> Self {
        Self::from_tpoly(TPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_tpoly(TPoly::one())
    }

    pub fn from_tpoly(num: TPoly) -> Self {
        BivariateRational { num, den: BTreeMap::new() }
    }

    pub fn from_laurent(c: LaurentPoly) -> Self {
        Self::from_tpoly(TPoly::constant(c))
    }

    /// `c·X^x·T^t`.
    pub fn monomial(c: impl Into<BigInt>, x: i64, t: usize) -> Self {
        Self::from_tpoly(TPoly::monomial(c, x, t))
    }

    /// `1 / (1 - X^a T)`.
    pub fn geometric(a: i64) -> Self {
        Self::new(TPoly::one(), [a])
    }

    pub fn numerator(&self) -> &TPoly {
        &self.num
    }

    /// Denominator factor exponents with multiplicity, in decreasing order.
    pub fn denominator_factors(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (&a, &m) in self.den.iter().rev() {
            out.extend(core::iter::repeat_n(a, m as usize));
        }
        out
    }

    pub fn denominator_multiplicities(&self) -> &BTreeMap<i64, u32> {
        &self.den
    }

    pub fn denominator_degree(&self) -> usize {
        self.den.values().map(|&m| m as usize).sum()
    }

    pub fn denominator_poly(&self) -> TPoly {
        let mut d = TPoly::one();
        for (&a, &m) in &self.den {
            for _ in 0..m {
                d = d.mul_factor(a);
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Local poles: the exponents `a` of the reduced denominator, increasing.
    pub fn local_poles(&self) -> Vec<i64> {
        let mut p = self.denominator_factors();
        p.reverse();
        p
    }

    /// Multiplicity of the factor `(1 - T)`.
    pub fn pole_order_at_t1(&self) -> u32 {
        self.den.get(&0).copied().unwrap_or(0)
    }

    /// Integer content of the numerator, sign fixed positive.
    pub fn numerator_content(&self) -> BigInt {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for c in self.num.coeffs() {
            for (_, v) in c.terms() {
                g = g.gcd(v);
            }
        }
        g
    }

    fn common_den(&self, other: &Self) -> (BTreeMap<i64, u32>, TPoly, TPoly) {
        let mut den = self.den.clone();
        for (&a, &m) in &other.den {
            let e = den.entry(a).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &Self| {
            let mut n = f.num.clone();
            for (&a, &m) in &den {
                for _ in f.den.get(&a).copied().unwrap_or(0)..m {
                    n = n.mul_factor(a);
                }
            }
            n
        };
        let (a, b) = (lift(self), lift(other));
        (den, a, b)
    }

    pub fn mul_by_factor(&self, a: i64) -> Self {
        let mut den = self.den.clone();
        if let Some(m) = den.get_mut(&a) {
            *m -= 1;
            if *m == 0 {
                den.remove(&a);
            }
            return Self::from_parts(self.num.clone(), den);
        }
        Self::from_parts(self.num.mul_factor(a), den)
    }

    pub fn div_by_factor(&self, a: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        *den.entry(a).or_insert(0) += 1;
        Self::from_parts(self.num.clone(), den)
    }

    /// Multiplies by `X^c`.
    pub fn scale_by_monomial(&self, c: i64) -> Self {
        Self::raw(self.num.map_coeffs(|p| p.shift(c)), self.den.clone())
    }

    pub fn mul_tpoly(&self, p: &TPoly) -> Self {
        Self::from_parts(&self.num * p, self.den.clone())
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        self.mul_tpoly(&TPoly::constant(p.clone()))
    }

    /// Division by another value; fails if the divisor's numerator is not a
    /// unit monomial times factors `(1 - X^a T)`.
    pub fn checked_div(&self, other: &Self) -> Result<Self, BivError> {
        if other.is_zero() {
            return Err(BivError::DivisionByZero);
        }
        let (unit, factors) = split_factors(&other.num).ok_or(BivError::NonFactorDenominator)?;
        let mut num = &self.num * &other.denominator_poly();
        num = num.map_coeffs(|c| c.div_unit(&unit).expect("unit monomial divides"));
        let mut den = self.den.clone();
        for a in factors {
            *den.entry(a).or_insert(0) += 1;
        }
        Ok(Self::from_parts(num, den))
    }

    /// `T ↦ X^c T`.
    pub fn subst_t_scale(&self, c: i64) -> Self {
        let den = self.den.iter().map(|(&a, &m)| (a + c, m)).collect();
        Self::raw(self.num.scale_t(c), den)
    }

    /// `X ↦ X^{-1}`.
    pub fn subst_x_inverse(&self) -> Self {
        let den = self.den.iter().map(|(&a, &m)| (-a, m)).collect();
        Self::raw(self.num.invert_x(), den)
    }

    /// Coefficients of `T^0..=T^n` in the power series expansion.
    pub fn series_prefix(&self, n: usize) -> Vec<LaurentPoly> {
        let d = self.denominator_poly();
        let dc = d.coeffs();
        let mut c: Vec<LaurentPoly> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut ck = self.num.coeff(k);
            for j in 1..dc.len().min(k + 1) {
                ck = &ck - &(&dc[j] * &c[k - j]);
            }
            c.push(ck);
        }
        c
    }

    pub fn coefficient(&self, k: usize) -> LaurentPoly {
        self.series_prefix(k).pop().expect("prefix has k + 1 entries")
    }

    /// Specialises `X = q`.
    pub fn evaluate_q(&self, q: &BigRational) -> Result<UnivariateRational, BivError> {
        if q.is_zero() {
            return Err(BivError::ZeroX);
        }
        let num = self.num.coeffs().iter().map(|c| c.eval(q)).collect();
        let den = self.denominator_poly().coeffs().iter().map(|c| c.eval(q)).collect();
        Ok(UnivariateRational::new(num, den))
    }

    /// Specialises `X = q`, `T = t`.
    pub fn evaluate_qt(&self, q: &BigRational, t: &BigRational) -> Result<BigRational, BivError> {
        self.evaluate_q(q)?.eval(t).ok_or(BivError::Pole)
    }
}

/// Writes `p = u·∏(1 - X^a T)` with `u = ±X^e`, if possible.
fn split_factors(p: &TPoly) -> Option<(LaurentPoly, Vec<i64>)> {
    let c0 = p.coeff(0);
    let (c, _) = c0.as_monomial()?;
    if !c.abs().is_one() {
        return None;
    }
    let mut rest = p.map_coeffs(|x| x.div_unit(&c0).expect("checked unit"));
    let candidates: Vec<i64> = rest.coeff(1).terms().map(|(e, _)| e).collect();
    let mut factors = Vec::new();
    for a in candidates {
        while let Some(q) = rest.div_factor(a) {
            rest = q;
            factors.push(a);
        }
    }
    rest.is_one().then_some((c0, factors))
}

impl Add for &BivariateRational {
    type Output = BivariateRational;
    fn add(self, rhs: &BivariateRational) -> BivariateRational {
        let (den, a, b) = self.common_den(rhs);
        BivariateRational::from_parts(&a + &b, den)
    }
}

impl Sub for &BivariateRational {
    type Output = BivariateRational;
    fn sub(self, rhs: &BivariateRational) -> BivariateRational {
        let (den, a, b) = self.common_den(rhs);
        BivariateRational::from_parts(&a - &b, den)
    }
}

impl Mul for &BivariateRational {
    type Output = BivariateRational;
    fn mul(self, rhs: &BivariateRational) -> BivariateRational {
        let mut den = self.den.clone();
        for (&a, &m) in &rhs.den {
            *den.entry(a).or_insert(0) += m;
        }
        BivariateRational::from_parts(&self.num * &rhs.num, den)
    }
}

impl Neg for &BivariateRational {
    type Output = BivariateRational;
    fn neg(self) -> BivariateRational {
        BivariateRational::raw(-&self.num, self.den.clone())
    }
}

impl Neg for BivariateRational {
    type Output = BivariateRational;
    fn neg(self) -> BivariateRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariateRational {
            type Output = BivariateRational;
            fn $m(self, rhs: BivariateRational) -> BivariateRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(a: i64) -> TPoly {
        TPoly::factor(a)
    }

    #[test]
    fn reduces_common_factor() {
        let f = BivariateRational::new(one_minus(0), [0, 1]);
        assert_eq!(f, BivariateRational::geometric(1));
    }

    #[test]
    fn sum_identity() {
        // 1/(1-XT) + (1-X)T/((1-XT)(1-T)) = 1/(1-T)
        let a = BivariateRational::geometric(1);
        let n = &TPoly::monomial(1, 0, 1) - &TPoly::monomial(1, 1, 1);
        let b = BivariateRational::new(n, [1, 0]);
        assert_eq!(&a + &b, BivariateRational::geometric(0));
    }

    #[test]
    fn factor_mul_div_identity() {
        let f = BivariateRational::new(&TPoly::one() + &TPoly::monomial(3, -1, 2), [2, -1]);
        assert_eq!(f.mul_by_factor(0).div_by_factor(0), f);
        assert_eq!(f.div_by_factor(0).mul_by_factor(0), f);
    }

    #[test]
    fn t_scaling() {
        let w = BivariateRational::geometric(1);
        assert_eq!(w.subst_t_scale(-1), BivariateRational::geometric(0));
        assert_eq!(w.subst_t_scale(0), w);
    }

    #[test]
    fn x_inversion() {
        let f = BivariateRational::new(one_minus(-1), [0, 0]);
        let g = BivariateRational::new(one_minus(1), [0, 0]);
        assert_eq!(f.subst_x_inverse(), g);
        assert_eq!(f.subst_x_inverse().subst_x_inverse(), f);
    }

    #[test]
    fn series_of_k2() {
        let w = BivariateRational::new(one_minus(-1), [0, 1]);
        let c = w.series_prefix(1);
        assert!(c[0].is_one());
        let expected = LaurentPoly::from_terms([(1, 1.into()), (0, 1.into()), (-1, (-1).into())]);
        assert_eq!(c[1], expected);
        assert_eq!(BivariateRational::geometric(1).coefficient(5), LaurentPoly::x_pow(5));
    }

    #[test]
    fn division_by_factor_products() {
        let num = &one_minus(-1) * &one_minus(-2);
        let f = BivariateRational::from_tpoly(num);
        let d = BivariateRational::from_tpoly(&(&one_minus(0) * &one_minus(0)) * &one_minus(1));
        let q = f.checked_div(&d).unwrap();
        assert_eq!(q.denominator_factors(), [1, 0, 0]);
        let bad = BivariateRational::from_tpoly(&TPoly::one() + &TPoly::monomial(1, 0, 2));
        assert_eq!(f.checked_div(&bad), Err(BivError::NonFactorDenominator));
        assert_eq!(f.checked_div(&BivariateRational::zero()), Err(BivError::DivisionByZero));
    }

    #[test]
    fn poles() {
        let w = BivariateRational::new(one_minus(-1), [0, 0]);
        assert_eq!(w.local_poles(), [0, 0]);
        assert_eq!(w.pole_order_at_t1(), 2);
        assert_eq!(BivariateRational::geometric(1).pole_order_at_t1(), 0);
    }

    #[test]
    fn evaluation_at_q() {
        let w = BivariateRational::geometric(1);
        let u = w.evaluate_q(&BigRational::from_integer(3.into())).unwrap();
        assert_eq!(u.coefficient(2), BigRational::from_integer(9.into()));
        assert!(w.evaluate_q(&BigRational::zero()).is_err());
        let pole = w.evaluate_qt(&BigRational::from_integer(3.into()), &BigRational::new(1.into(), 3.into()));
        assert_eq!(pole, Err(BivError::Pole));
    }
}
