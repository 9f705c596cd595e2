use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational function of `T` over `Q`, kept as an unreduced pair of coefficient
/// lists. The denominator has nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateRational {
    num: Vec<BigRational>,
    den: Vec<BigRational>,
}

impl UnivariateRational {
    pub fn new(num: Vec<BigRational>, den: Vec<BigRational>) -> Self {
        assert!(den.first().is_some_and(|d| !d.is_zero()), "denominator needs a nonzero constant term");
        UnivariateRational { num, den }
    }

    pub fn numerator(&self) -> &[BigRational] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigRational] {
        &self.den
    }

    pub fn series_prefix(&self, n: usize) -> Vec<BigRational> {
        let d0 = &self.den[0];
        let mut c: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut ck = self.num.get(k).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..self.den.len().min(k + 1) {
                ck -= &self.den[j] * &c[k - j];
            }
            c.push(ck / d0);
        }
        c
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.series_prefix(k).pop().expect("prefix has k + 1 entries")
    }

    /// Value at `t`, or `None` at a zero of the denominator.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let horner = |cs: &[BigRational]| cs.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c);
        let d = horner(&self.den);
        if d.is_zero() {
            return None;
        }
        Some(horner(&self.num) / d)
    }
}

/// `c_0 + c_1*T + ...` with rational coefficients.
fn write_poly(cs: &[BigRational]) -> (String, usize) {
    let mut out = String::new();
    let mut count = 0;
    for (k, c) in cs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let mon = match k {
            0 => String::new(),
            1 => String::from("T"),
            _ => format!("T^{k}"),
        };
        let body = if mon.is_empty() {
            format!("{mag}")
        } else if mag.is_one() {
            mon
        } else {
            format!("{mag}*{mon}")
        };
        if count == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
        count += 1;
    }
    if count == 0 {
        out.push('0');
    }
    (out, count)
}

/// `(num) / (den)`, both in ascending powers of `T`.
impl fmt::Display for UnivariateRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, nc) = write_poly(&self.num);
        let (den, dc) = write_poly(&self.den);
        let wrap = |s: String, c: usize| if c > 1 { format!("({s})") } else { s };
        if dc == 1 && self.den.len() == 1 && self.den[0].is_one() {
            return f.write_str(&num);
        }
        write!(f, "{} / {}", wrap(num, nc), wrap(den, dc))
    }
}
