use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::mappings::Monomial;

/// Integer polynomial in `X_0..X_{n-1}`, as a sparse map from exponent
/// vectors to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedMonomialPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SignedMonomialPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: BigInt, mon: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mon, coeff);
        p
    }

    pub fn add_term(&mut self, mon: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(mon.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&mon);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// `Some((c, mon))` if this is a single term.
    pub fn as_term(&self) -> Option<(&BigInt, &Monomial)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(m, c)| (c, m)),
            _ => None,
        }
    }

    /// Multiplies by `coeff·X_var`.
    pub(crate) fn mul_var(&self, var: usize, negative: bool) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.exps().to_vec();
            e[var] += 1;
            out.terms.insert(Monomial::new(e), if negative { -c } else { c.clone() });
        }
        out
    }

    pub(crate) fn add_assign(&mut self, other: &Self, negate: bool) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
    }

    /// The polynomial or its negative, whichever has a positive leading coefficient.
    pub fn normalize_sign(&self) -> Self {
        match self.terms.values().next_back() {
            Some(c) if c.is_negative() => {
                SignedMonomialPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
            }
            _ => self.clone(),
        }
    }

    pub(crate) fn one(vars: usize) -> Self {
        Self::term(BigInt::one(), Monomial::one(vars))
    }
}

impl fmt::Display for SignedMonomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let parts: Vec<(&Monomial, &BigInt)> = self.terms.iter().rev().collect();
        for (i, (m, c)) in parts.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let mon = alloc::format!("{m}");
            if mon == "1" {
                out.push_str(&alloc::format!("{mag}"));
            } else if mag.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&alloc::format!("{mag}*{mon}"));
            }
        }
        f.write_str(&out)
    }
}
