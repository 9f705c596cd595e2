//! Canonical text and LaTeX rendering.
//!
//! Rational functions print as `N / F1^m1 * F2^m2` where every factor after
//! the slash belongs to the denominator, e.g. `(1 - X^-1*T) / (1 - T)^2`.
//! Numerator terms are sorted by `T`-degree, then `X`-degree; denominator
//! factors by decreasing exponent.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{BivariateRational, LaurentPoly, TPoly};

struct Term<'a> {
    coeff: &'a BigInt,
    x: i64,
    t: usize,
}

fn plain_monomial(x: i64, t: usize) -> String {
    let mut parts = Vec::new();
    match x {
        0 => {}
        1 => parts.push(String::from("X")),
        _ => parts.push(format!("X^{x}")),
    }
    match t {
        0 => {}
        1 => parts.push(String::from("T")),
        _ => parts.push(format!("T^{t}")),
    }
    parts.join("*")
}

fn latex_monomial(x: i64, t: usize) -> String {
    let mut s = String::new();
    match x {
        0 => {}
        1 => s.push('X'),
        _ => s.push_str(&format!("X^{{{x}}}")),
    }
    match t {
        0 => {}
        1 => s.push('T'),
        _ => s.push_str(&format!("T^{{{t}}}")),
    }
    s
}

fn write_terms(terms: &[Term<'_>], latex: bool) -> String {
    if terms.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, term) in terms.iter().enumerate() {
        let neg = term.coeff.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = term.coeff.abs();
        let mon = if latex { latex_monomial(term.x, term.t) } else { plain_monomial(term.x, term.t) };
        if mon.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mon);
        } else if latex {
            out.push_str(&format!("{mag}{mon}"));
        } else {
            out.push_str(&format!("{mag}*{mon}"));
        }
    }
    out
}

fn numerator_terms(num: &TPoly) -> Vec<Term<'_>> {
    num.coeffs()
        .iter()
        .enumerate()
        .flat_map(|(t, c)| c.terms().map(move |(x, coeff)| Term { coeff, x, t }))
        .collect()
}

fn factor_text(a: i64, m: u32, latex: bool) -> String {
    let base = match (a, latex) {
        (0, _) => String::from("(1 - T)"),
        (1, false) => String::from("(1 - X*T)"),
        (1, true) => String::from("(1 - XT)"),
        (_, false) => format!("(1 - X^{a}*T)"),
        (_, true) => format!("(1 - X^{{{a}}}T)"),
    };
    match (m, latex) {
        (1, _) => base,
        (_, false) => format!("{base}^{m}"),
        (_, true) => format!("{base}^{{{m}}}"),
    }
}

impl BivariateRational {
    /// Display form `\frac{N}{∏ (1 - X^a T)^m}`.
    pub fn to_latex(&self) -> String {
        let num = write_terms(&numerator_terms(self.numerator()), true);
        if self.is_polynomial() {
            return num;
        }
        let den: Vec<String> = self
            .denominator_multiplicities()
            .iter()
            .rev()
            .map(|(&a, &m)| factor_text(a, m, true))
            .collect();
        format!("\\frac{{{num}}}{{{}}}", den.join(""))
    }
}

impl fmt::Display for BivariateRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = numerator_terms(self.numerator());
        let num = write_terms(&terms, false);
        if self.is_polynomial() {
            return f.write_str(&num);
        }
        if terms.len() > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        let den: Vec<String> = self
            .denominator_multiplicities()
            .iter()
            .rev()
            .map(|(&a, &m)| factor_text(a, m, false))
            .collect();
        write!(f, " / {}", den.join(" * "))
    }
}

/// Terms in decreasing exponent order, e.g. `X + 1 - X^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<Term<'_>> = self.terms().rev().map(|(x, coeff)| Term { coeff, x, t: 0 }).collect();
        f.write_str(&write_terms(&terms, false))
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_terms(&numerator_terms(self), false))
    }
}
