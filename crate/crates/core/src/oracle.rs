//! Brute-force averages of kernel sizes over `Z/p^k`, used as ground truth
//! for the coefficients of computed generating functions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bivratfun::BivariateRational;
use crate::linmat::{Entry, LinearFormMatrix};

/// Default cap on the number of specializations `p^{kℓ}`.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{points} specializations exceed the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("modulus {p}^{k} is too large")]
    ModulusTooLarge { p: u64, k: u32 },
}

/// Rank and `p`-adic valuations `λ₁ ≤ … ≤ λ_r` of the elementary divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryDivisorProfile {
    pub rank: usize,
    pub valuations: Vec<u32>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn valuation_int(x: &BigInt, p: &BigInt) -> u32 {
    let mut x = x.abs();
    let mut v = 0;
    while !x.is_zero() && (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

/// Smith normal form valuations at `p`, by elimination over `Z_(p)`.
pub fn smith_valuations(m: &[Vec<BigInt>], p: u64) -> ElementaryDivisorProfile {
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut valuations = Vec::new();
    loop {
        let mut best: Option<(usize, usize, u32)> = None;
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let v = valuation_int(x.numer(), &pb);
                if best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        valuations.push(v);
        let pivot_row = a.swap_remove(pi);
        for row in a.iter_mut() {
            let f = &row[pj] / &pivot_row[pj];
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        for row in a.iter_mut() {
            row.swap_remove(pj);
        }
    }
    valuations.sort_unstable();
    ElementaryDivisorProfile { rank: valuations.len(), valuations }
}

/// Arithmetic modulo `q = p^k` with `q < 2^63`.
#[derive(Clone, Copy, Debug)]
struct Modulus {
    p: u64,
    k: u32,
    q: u64,
}

impl Modulus {
    fn new(p: u64, k: u32) -> Result<Self, OracleError> {
        if k == 0 {
            return Err(OracleError::ZeroLevel);
        }
        if !is_prime(p) {
            return Err(OracleError::NotPrime(p));
        }
        let q = p.checked_pow(k).filter(|&q| q < 1 << 62).ok_or(OracleError::ModulusTooLarge { p, k })?;
        Ok(Modulus { p, k, q })
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    fn valuation(self, mut x: u64) -> u32 {
        let mut v = 0;
        while x.is_multiple_of(self.p) && v < self.k {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Inverse of a unit modulo `q`.
    fn inverse(self, a: u64) -> u64 {
        let (mut r0, mut r1) = (self.q as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let t = r0 / r1;
            (r0, r1) = (r1, r0 - t * r1);
            (s0, s1) = (s1, s0 - t * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.q as i128) as u64
    }
}

/// Exponent `e` with `|ker| = p^e` for `x ↦ xM` on `(Z/q)^rows`; `buf` is the
/// row-major matrix reduced mod `q` and is destroyed.
fn kernel_exponent_mod(md: Modulus, buf: &mut [u64], rows: usize, cols: usize) -> u32 {
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    let mut image = 0u32;
    loop {
        let mut best: Option<(usize, usize, u32)> = None;
        'scan: for (ri, &r) in live_rows.iter().enumerate() {
            for (ci, &c) in live_cols.iter().enumerate() {
                let x = buf[r * cols + c];
                if x == 0 {
                    continue;
                }
                let v = md.valuation(x);
                if best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((ri, ci, v));
                    if v == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((ri, ci, v)) = best else { break };
        image += md.k - v;
        let pr = live_rows.swap_remove(ri);
        let pc = live_cols.swap_remove(ci);
        let pv = buf[pr * cols + pc];
        let scale = md.p.pow(v);
        let u_inv = md.inverse(pv / scale);
        for &r in &live_rows {
            let a = buf[r * cols + pc];
            if a == 0 {
                continue;
            }
            let f = md.mul(a / scale, u_inv);
            for &c in &live_cols {
                let y = buf[pr * cols + c];
                if y != 0 {
                    let x = &mut buf[r * cols + c];
                    *x = (*x + md.q - md.mul(f, y)) % md.q;
                }
            }
            buf[r * cols + pc] = 0;
        }
    }
    md.k * rows as u32 - image
}

fn reduce_mod(m: &[Vec<BigInt>], md: Modulus) -> (Vec<u64>, usize, usize) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let q = BigInt::from(md.q);
    let buf = m.iter().flatten().map(|x| x.mod_floor(&q).to_u64().unwrap_or(0)).collect();
    (buf, rows, cols)
}

/// `|ker|` of `x ↦ xM` on `(Z/p^k)^rows`.
pub fn kernel_size(m: &[Vec<BigInt>], p: u64, k: u32) -> Result<BigUint, OracleError> {
    let md = Modulus::new(p, k)?;
    let (mut buf, rows, cols) = reduce_mod(m, md);
    Ok(BigUint::from(p).pow(kernel_exponent_mod(md, &mut buf, rows, cols)))
}

/// `|image|` of `x ↦ xM` on `(Z/p^k)^rows`.
pub fn image_size(m: &[Vec<BigInt>], p: u64, k: u32) -> Result<BigUint, OracleError> {
    let md = Modulus::new(p, k)?;
    let (mut buf, rows, cols) = reduce_mod(m, md);
    let e = kernel_exponent_mod(md, &mut buf, rows, cols);
    Ok(BigUint::from(p).pow(k * rows as u32 - e))
}

/// Kernel-size counts over a set of specializations: exponent `e` of
/// `|ker| = p^e` ↦ number of points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KernelTally {
    pub points: u64,
    pub histogram: BTreeMap<u32, u64>,
}

impl KernelTally {
    pub fn merge(&mut self, other: &KernelTally) {
        self.points += other.points;
        for (&e, &c) in &other.histogram {
            *self.histogram.entry(e).or_insert(0) += c;
        }
    }

    /// `Σ |ker|` over the tallied points.
    pub fn kernel_sum(&self, p: u64) -> BigUint {
        self.histogram.iter().map(|(&e, &c)| BigUint::from(p).pow(e) * BigUint::from(c)).sum()
    }
}

/// Number of specializations `p^{kℓ}` of `a`.
pub fn point_count(a: &LinearFormMatrix, p: u64, k: u32) -> u128 {
    let q = p as u128;
    let mut total = 1u128;
    for _ in 0..k as usize * a.var_count() {
        total = total.saturating_mul(q);
    }
    total
}

pub fn check_budget(a: &LinearFormMatrix, p: u64, k: u32, budget: u64) -> Result<u64, OracleError> {
    let points = point_count(a, p, k);
    if points > budget as u128 {
        return Err(OracleError::BudgetExceeded { points, budget });
    }
    Ok(points as u64)
}

/// Tallies the specializations with mixed-radix index in `start..end`, the
/// first variable being the most significant digit.
pub fn tally_range(a: &LinearFormMatrix, p: u64, k: u32, start: u64, end: u64) -> Result<KernelTally, OracleError> {
    let md = Modulus::new(p, k)?;
    let (rows, cols, vars) = (a.rows(), a.cols(), a.var_count());
    let pattern: Vec<(usize, usize, bool)> = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| (r, c)))
        .filter_map(|(r, c)| match a.get(r, c) {
            Entry::Zero => None,
            Entry::Var { index, negative } => Some((r * cols + c, index, negative)),
        })
        .collect();
    let mut digits = vec![0u64; vars];
    let mut rest = start;
    for d in digits.iter_mut().rev() {
        *d = rest % md.q;
        rest /= md.q;
    }
    let mut buf = vec![0u64; rows * cols];
    let mut tally = KernelTally::default();
    for _ in start..end {
        buf.iter_mut().for_each(|x| *x = 0);
        for &(pos, var, neg) in &pattern {
            let x = digits[var];
            buf[pos] = if neg && x != 0 { md.q - x } else { x };
        }
        let e = kernel_exponent_mod(md, &mut buf, rows, cols);
        *tally.histogram.entry(e).or_insert(0) += 1;
        tally.points += 1;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < md.q {
                break;
            }
            *d = 0;
        }
    }
    Ok(tally)
}

/// Average kernel size of the specializations of a matrix of linear forms
/// over `Z/p^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AskAverage {
    pub p: u64,
    pub k: u32,
    pub vars: usize,
    pub value: BigRational,
    pub tally: KernelTally,
}

impl AskAverage {
    pub fn from_tally(a: &LinearFormMatrix, p: u64, k: u32, tally: KernelTally) -> Self {
        let den = BigUint::from(p).pow(k * a.var_count() as u32);
        assert_eq!(BigUint::from(tally.points), den, "tally does not cover every point");
        let value = BigRational::new(BigInt::from(tally.kernel_sum(p)), BigInt::from(den));
        AskAverage { p, k, vars: a.var_count(), value, tally }
    }
}

pub fn ask_average(a: &LinearFormMatrix, p: u64, k: u32) -> Result<AskAverage, OracleError> {
    ask_average_with_budget(a, p, k, DEFAULT_BUDGET)
}

pub fn ask_average_with_budget(a: &LinearFormMatrix, p: u64, k: u32, budget: u64) -> Result<AskAverage, OracleError> {
    Modulus::new(p, k)?;
    let points = check_budget(a, p, k, budget)?;
    let tally = tally_range(a, p, k, 0, points)?;
    Ok(AskAverage::from_tally(a, p, k, tally))
}

/// Coefficient of `T^k` in `w` at `X = p`.
pub fn formula_value(w: &BivariateRational, p: u64, k: u32) -> BigRational {
    w.coefficient(k as usize).eval(&BigRational::from_integer(BigInt::from(p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    OutOfContract,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::OutOfContract => "OUT_OF_CONTRACT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub ask: BigRational,
    pub formula: BigRational,
    pub verdict: Verdict,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ask={} formula={} verdict={}", self.ask, self.formula, self.verdict)
    }
}

/// The symmetric matrices `A⁺` only match the formulas for odd `p`.
pub fn out_of_contract(plus_sign: bool, p: u64) -> bool {
    plus_sign && p == 2
}

/// Compares an oracle average with the formula; a mismatch under
/// `out_of_contract` is reported as such rather than as a failure.
pub fn judge(ask: BigRational, formula: BigRational, out_of_contract: bool) -> Comparison {
    let verdict = if ask == formula {
        Verdict::Pass
    } else if out_of_contract {
        Verdict::OutOfContract
    } else {
        Verdict::Fail
    };
    Comparison { ask, formula, verdict }
}

pub fn compare(
    a: &LinearFormMatrix,
    w: &BivariateRational,
    p: u64,
    k: u32,
    budget: u64,
    out_of_contract: bool,
) -> Result<Comparison, OracleError> {
    let ask = ask_average_with_budget(a, p, k, budget)?.value;
    Ok(judge(ask, formula_value(w, p, k), out_of_contract))
}

/// `p^{kn}`, the value for a zero map on `n` rows.
pub fn zero_map_value(p: u64, k: u32, n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(p).pow(k * n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{Graph, Hypergraph};
    use crate::linmat::{build_a_graph, build_a_hyper, Sign};
    use crate::zetacalc::{wminus, wsharp};
    use alloc::string::ToString;
    use num_traits::One;

    fn int(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn smith_examples() {
        let p = smith_valuations(&int(&[&[1, 0, 0], &[0, 3, 0], &[0, 0, 0]]), 3);
        assert_eq!(p, ElementaryDivisorProfile { rank: 2, valuations: vec![0, 1] });
        let p = smith_valuations(&int(&[&[0, 1], &[-1, 0]]), 5);
        assert_eq!(p.valuations, vec![0, 0]);
        assert_eq!(smith_valuations(&int(&[&[0]]), 2).rank, 0);
        let p = smith_valuations(&int(&[&[2, 4], &[6, 8]]), 2);
        assert_eq!(p.valuations, vec![1, 2]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_size(&int(&[&[0]]), 3, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(kernel_size(&int(&[&[1, 0], &[0, 1]]), 5, 3).unwrap(), BigUint::one());
        assert_eq!(kernel_size(&int(&[&[0, 1], &[-1, 0]]), 3, 1).unwrap(), BigUint::one());
        assert_eq!(kernel_size(&int(&[&[0, 0], &[0, 0]]), 3, 1).unwrap(), BigUint::from(9u32));
        assert_eq!(kernel_size(&int(&[&[2, 4], &[6, 8]]), 2, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(image_size(&int(&[&[2, 4], &[6, 8]]), 2, 2).unwrap(), BigUint::from(2u32));
        assert!(matches!(kernel_size(&int(&[&[0]]), 4, 1), Err(OracleError::NotPrime(4))));
    }

    #[test]
    fn averages() {
        let a = build_a_graph(&Graph::complete(2), Sign::Minus);
        assert_eq!(ask_average(&a, 3, 1).unwrap().value.to_string(), "11/3");
        let a = build_a_graph(&Graph::empty(3), Sign::Minus);
        assert_eq!(ask_average(&a, 2, 2).unwrap().value, zero_map_value(2, 2, 3));
        let h = Hypergraph::edgeless(1).with_covering_hyperedge();
        assert_eq!(ask_average(&build_a_hyper(&h), 2, 1).unwrap().value.to_string(), "3/2");
        assert!(matches!(
            ask_average_with_budget(&build_a_graph(&Graph::complete(4), Sign::Minus), 5, 2, 1000),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn compare_with_formulas() {
        let a = build_a_graph(&Graph::complete(2), Sign::Minus);
        let w = wminus(&Graph::complete(2)).unwrap().value;
        let c = compare(&a, &w, 3, 1, DEFAULT_BUDGET, false).unwrap();
        assert_eq!(c.to_string(), "ask=11/3 formula=11/3 verdict=PASS");
        let looped = Graph::empty(1).reflexive_closure();
        let w = wsharp(&Graph::empty(1)).unwrap().value;
        let c = compare(&build_a_graph(&looped, Sign::Minus), &w, 2, 2, DEFAULT_BUDGET, false).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
    }

    #[test]
    fn ranges_merge() {
        let a = build_a_graph(&Graph::cycle(3), Sign::Minus);
        let whole = tally_range(&a, 3, 1, 0, 27).unwrap();
        let mut parts = tally_range(&a, 3, 1, 0, 10).unwrap();
        parts.merge(&tally_range(&a, 3, 1, 10, 27).unwrap());
        assert_eq!(whole, parts);
    }
}
