use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::LaurentPoly;

/// Polynomial in `T` whose coefficients are Laurent polynomials in `X`.
///
/// `coeffs[d]` is the coefficient of `T^d`; trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPoly {
    coeffs: Vec<LaurentPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·X^x·T^t`.
    pub fn monomial(c: impl Into<BigInt>, x: i64, t: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); t + 1];
        coeffs[t] = LaurentPoly::monomial(c, x);
        Self::from_coeffs(coeffs)
    }

    /// `1 - X^a·T`.
    pub fn factor(a: i64) -> Self {
        Self::from_coeffs(vec![LaurentPoly::one(), LaurentPoly::monomial(-1, a)])
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `T`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, t: usize) -> LaurentPoly {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(LaurentPoly::term_count).sum()
    }

    /// Multiplies by `(1 - X^a·T)`.
    pub fn mul_factor(&self, a: i64) -> Self {
        let mut out = self.coeffs.clone();
        out.push(LaurentPoly::zero());
        for t in (1..out.len()).rev() {
            let shifted = self.coeffs[t - 1].shift(a);
            out[t] = &out[t] - &shifted;
        }
        Self::from_coeffs(out)
    }

    /// Exact quotient by `(1 - X^a·T)`, if it divides.
    pub fn div_factor(&self, a: i64) -> Option<Self> {
        let d = match self.degree() {
            None => return Some(Self::zero()),
            Some(0) => return None,
            Some(d) => d,
        };
        let mut q: Vec<LaurentPoly> = Vec::with_capacity(d);
        for t in 0..d {
            let prev = if t == 0 { LaurentPoly::zero() } else { q[t - 1].shift(a) };
            q.push(&self.coeffs[t] + &prev);
        }
        let top = -q[d - 1].shift(a);
        (top == self.coeffs[d]).then(|| Self::from_coeffs(q))
    }

    /// Whether `(1 - X^a·T)` divides, i.e. the polynomial vanishes at `T = X^{-a}`.
    pub fn divisible_by_factor(&self, a: i64) -> bool {
        let mut acc = LaurentPoly::zero();
        for (t, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &c.shift(-a * t as i64);
        }
        acc.is_zero()
    }

    /// `T ↦ X^c·T`.
    pub fn scale_t(&self, c: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().map(|(t, p)| p.shift(c * t as i64)).collect())
    }

    /// `X ↦ X^{-1}`.
    pub fn invert_x(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(LaurentPoly::invert_x).collect())
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Keeps terms of degree `<= max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_deg + 1).cloned().collect())
    }

    /// Long division by `d` whose leading coefficient is a unit `±X^s`.
    /// Returns `(quotient, remainder)`.
    pub fn div_rem_unit_leading(&self, d: &TPoly) -> Option<(TPoly, TPoly)> {
        let dd = d.degree()?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((TPoly::zero(), self.clone()));
        }
        let mut quot = vec![LaurentPoly::zero(); rem.len() - dd];
        for t in (dd..rem.len()).rev() {
            if rem[t].is_zero() {
                continue;
            }
            let q = rem[t].div_unit(lead)?;
            for (j, dj) in d.coeffs.iter().enumerate() {
                let idx = t - dd + j;
                rem[idx] = &rem[idx] - &(&q * dj);
            }
            quot[t - dd] = q;
        }
        Some((TPoly::from_coeffs(quot), TPoly::from_coeffs(rem)))
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|t| &self.coeff(t) + &rhs.coeff(t)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|t| &self.coeff(t) - &rhs.coeff(t)).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.map_coeffs(|c| -c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
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

    #[test]
    fn factor_division_round_trip() {
        let p = &TPoly::monomial(3, -2, 1) + &TPoly::monomial(1, 4, 0);
        for a in [-2, 0, 1, 5] {
            let m = p.mul_factor(a);
            assert!(m.divisible_by_factor(a));
            assert_eq!(m.div_factor(a), Some(p.clone()));
        }
        assert!(p.div_factor(0).is_none());
        assert!(!TPoly::one().divisible_by_factor(0));
    }

    #[test]
    fn long_division() {
        let d = &TPoly::factor(1) * &TPoly::factor(0);
        let q = &TPoly::monomial(2, 1, 1) + &TPoly::one();
        let r = TPoly::monomial(7, -3, 1);
        let n = &(&q * &d) + &r;
        assert_eq!(n.div_rem_unit_leading(&d), Some((q, r)));
    }
}
