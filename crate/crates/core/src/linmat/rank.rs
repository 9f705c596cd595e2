use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::LinearFormMatrix;
use super::LinmatError;

const DEFAULT_SEED: u64 = 0x5eed_a5c2;

/// Rank of an integer matrix by fraction-free elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for c in col + 1..ncols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn distinct_primes(rng: &mut ChaCha8Rng, count: usize) -> Vec<i64> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c: u64 = rng.gen_range(1u64 << 30..1u64 << 31);
        if is_prime(c) && seen.insert(c) {
            out.push(c as i64);
        }
    }
    out
}

fn rank_at(m: &LinearFormMatrix, x: &[i64]) -> usize {
    let spec: Vec<Vec<BigInt>> =
        m.specialize(x).into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    integer_rank(&spec)
}

/// Rank over the field of rational functions, from two independent evaluations
/// at distinct random 31-bit primes.
pub fn symbolic_rank(m: &LinearFormMatrix) -> Result<usize, LinmatError> {
    symbolic_rank_seeded(m, DEFAULT_SEED)
}

pub fn symbolic_rank_seeded(m: &LinearFormMatrix, seed: u64) -> Result<usize, LinmatError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rank_at(m, &distinct_primes(&mut rng, m.var_count()));
    let b = rank_at(m, &distinct_primes(&mut rng, m.var_count()));
    if a != b {
        return Err(LinmatError::RankMismatch(a, b));
    }
    Ok(a)
}
