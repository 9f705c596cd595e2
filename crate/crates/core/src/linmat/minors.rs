use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::matrix::{Entry, LinearFormMatrix};
use super::poly::SignedMonomialPolynomial;
use super::LinmatError;
use crate::mappings::Monomial;

/// Largest `C(rows, k)·C(cols, k)` accepted by [`nonzero_minors`].
pub const DEFAULT_MINOR_GUARD: u128 = 10_000_000;

/// A nonzero minor together with the rows and columns it was taken from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: SignedMonomialPolynomial,
}

fn check_indices(idx: &[usize], len: usize) -> Result<(), LinmatError> {
    match idx.iter().find(|&&i| i >= len) {
        Some(&index) => Err(LinmatError::OutOfRange { index, len }),
        None => Ok(()),
    }
}

/// Expands `rows` of `m` restricted to `cols`: the result maps each `k`-subset
/// of positions in `cols` (as a bitmask) to the corresponding minor.
fn expand(m: &LinearFormMatrix, rows: &[usize], cols: &[usize]) -> BTreeMap<u64, SignedMonomialPolynomial> {
    let mut layer: BTreeMap<u64, SignedMonomialPolynomial> = BTreeMap::new();
    layer.insert(0, SignedMonomialPolynomial::one(m.var_count()));
    for &r in rows {
        let mut next: BTreeMap<u64, SignedMonomialPolynomial> = BTreeMap::new();
        for (mask, p) in &layer {
            for (c, &col) in cols.iter().enumerate() {
                let bit = 1u64 << c;
                if mask & bit != 0 {
                    continue;
                }
                let Entry::Var { index, negative } = m.get(r, col) else { continue };
                let flips = (mask >> (c + 1)).count_ones() % 2 == 1;
                let term = p.mul_var(index, negative);
                let slot = next.entry(mask | bit).or_default();
                slot.add_assign(&term, flips);
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    layer
}

/// `det M[rows | cols]`, with rows and columns taken in the given order.
pub fn minor(m: &LinearFormMatrix, rows: &[usize], cols: &[usize]) -> Result<SignedMonomialPolynomial, LinmatError> {
    check_indices(rows, m.rows())?;
    check_indices(cols, m.cols())?;
    if rows.len() != cols.len() {
        return Err(LinmatError::NotSquare { rows: rows.len(), cols: cols.len() });
    }
    if cols.len() > 64 {
        return Err(LinmatError::TooManyColumns(cols.len()));
    }
    let full = if cols.is_empty() { 0 } else { u64::MAX >> (64 - cols.len()) };
    Ok(expand(m, rows, cols).remove(&full).unwrap_or_default())
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Nonzero minors on a fixed row subset, over all column subsets.
pub fn row_subset_minors(m: &LinearFormMatrix, rows: &[usize]) -> Result<Vec<Minor>, LinmatError> {
    check_indices(rows, m.rows())?;
    if m.cols() > 64 {
        return Err(LinmatError::TooManyColumns(m.cols()));
    }
    let cols: Vec<usize> = (0..m.cols()).collect();
    Ok(expand(m, rows, &cols)
        .into_iter()
        .map(|(mask, value)| Minor {
            rows: rows.to_vec(),
            cols: (0..m.cols()).filter(|c| mask >> c & 1 == 1).collect(),
            value,
        })
        .collect())
}

/// Checks the explosion guard for `k × k` minors of `m`.
pub fn check_minor_guard(m: &LinearFormMatrix, k: usize, guard: u128) -> Result<(), LinmatError> {
    let count = binomial(m.rows(), k).saturating_mul(binomial(m.cols(), k));
    if count > guard {
        return Err(LinmatError::TooManyMinors { count, guard });
    }
    Ok(())
}

/// All nonzero `k × k` minors, sorted by rows then columns.
pub fn nonzero_minors(m: &LinearFormMatrix, k: usize) -> Result<Vec<Minor>, LinmatError> {
    nonzero_minors_with_guard(m, k, DEFAULT_MINOR_GUARD)
}

pub fn nonzero_minors_with_guard(m: &LinearFormMatrix, k: usize, guard: u128) -> Result<Vec<Minor>, LinmatError> {
    check_minor_guard(m, k, guard)?;
    let mut out = Vec::new();
    for rows in k_subsets(m.rows(), k) {
        out.extend(row_subset_minors(m, &rows)?);
    }
    Ok(out)
}

/// Monomial ideal given by a divisibility antichain. Each generator remembers
/// the power of 2 stripped from the coefficient it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: usize,
    generators: BTreeMap<Monomial, u32>,
}

impl MonomialIdeal {
    pub fn zero(vars: usize) -> Self {
        MonomialIdeal { vars, generators: BTreeMap::new() }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal::from_monomials(vars, [(Monomial::one(vars), 0)])
    }

    /// Keeps the divisibility-minimal monomials; for equal monomials the
    /// smallest 2-power wins.
    pub fn from_monomials(vars: usize, items: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let mut all: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, t) in items {
            assert_eq!(m.exps().len(), vars, "monomial over the wrong variables");
            let slot = all.entry(m).or_insert(t);
            *slot = (*slot).min(t);
        }
        let mut sorted: Vec<(Monomial, u32)> = all.into_iter().collect();
        sorted.sort_by_key(|(m, _)| m.degree());
        let mut generators: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, t) in sorted {
            if !generators.keys().any(|g| g.divides(&m)) {
                generators.insert(m, t);
            }
        }
        MonomialIdeal { vars, generators }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn generators(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.keys()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Power of 2 stripped from the generator `m`, if `m` is one.
    pub fn two_power(&self, m: &Monomial) -> Option<u32> {
        self.generators.get(m).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.keys().any(|m| m.degree() == 0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.keys().any(|g| g.divides(m))
    }
}

/// Splits `c·mon` into `(mon, 2-adic valuation of c)`; fails unless `c = ±2^j`.
fn unit_times_two_power(p: &SignedMonomialPolynomial) -> Result<(Monomial, u32), LinmatError> {
    let (c, mon) = p.as_term().ok_or(LinmatError::NotMonomial)?;
    let mut c = c.abs();
    let mut j = 0u32;
    let two = BigInt::from(2);
    while c.is_even() {
        c /= &two;
        j += 1;
    }
    if !c.is_one() {
        return Err(LinmatError::NotMonomial);
    }
    Ok((mon.clone(), j))
}

/// Ideal generated by the `k × k` minors, taken over `Z[1/2]`: each minor
/// must be `±2^j` times a monomial.
pub fn ideal_generators(m: &LinearFormMatrix, k: usize) -> Result<MonomialIdeal, LinmatError> {
    if k == 0 {
        return Ok(MonomialIdeal::unit(m.var_count()));
    }
    let minors = nonzero_minors(m, k)?;
    let items = minors.iter().map(|mi| unit_times_two_power(&mi.value)).collect::<Result<Vec<_>, _>>()?;
    Ok(MonomialIdeal::from_monomials(m.var_count(), items))
}

/// Distinct minor values up to sign.
pub fn unsigned_minor_set(minors: &[Minor]) -> BTreeSet<SignedMonomialPolynomial> {
    minors.iter().map(|m| m.value.normalize_sign()).collect()
}
