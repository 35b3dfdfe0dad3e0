use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gaussian_binomial;
use crate::error::{Error, Result};
use crate::gf2n::{FieldCtx, FieldElem};
use crate::linalg;
use crate::moore::solve_first_var;

use super::{Certificate, Method};

/// Number of independent random streams; fixed so results do not depend on
/// the thread count.
pub const SHARDS: u64 = 8;

/// Default ceiling on the number of subspaces an exhaustive search may visit.
pub const DEFAULT_EXHAUSTIVE_CAP: u128 = 1 << 28;

// Above this degree the inverse is computed on the fly instead of tabulated.
const INVERSE_TABLE_MAX_N: u32 = 20;

fn check_k(ctx: &FieldCtx, k: usize, min: usize) -> Result<()> {
    if k < min || k > ctx.n() as usize {
        return Err(Error::DimensionOutOfRange { k, n: ctx.n() });
    }
    Ok(())
}

fn is_independent(v: &[FieldElem]) -> bool {
    linalg::is_independent(&v.iter().map(|x| x.0).collect::<Vec<_>>())
}

/// The first root `x` of `F_k(., v')` independent from `v'`, if any.
fn independent_root(ctx: &FieldCtx, vprime: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
    for x in solve_first_var(ctx, vprime)? {
        let mut basis = Vec::with_capacity(vprime.len() + 1);
        basis.push(x);
        basis.extend_from_slice(vprime);
        if is_independent(&basis) {
            return Ok(Some(basis));
        }
    }
    Ok(None)
}

/// Draws `v' = (v_2, ..., v_k)` at random and solves `F_k(x, v') = 0` for `x`,
/// up to `budget` draws split over [`SHARDS`] streams. `None` is not a proof
/// of anything; the lowest successful shard wins.
pub fn witness_search_random(
    ctx: &FieldCtx,
    k: usize,
    seed: u64,
    budget: u64,
) -> Result<Option<Certificate>> {
    check_k(ctx, k, 2)?;
    let found = (0..SHARDS).into_par_iter().find_map_first(|shard| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(shard);
        let draws = budget / SHARDS + u64::from(shard < budget % SHARDS);
        for draw in 0..draws {
            let vprime: Vec<FieldElem> = (1..k).map(|_| ctx.random_nonzero(&mut rng)).collect();
            if !is_independent(&vprime) {
                continue;
            }
            match independent_root(ctx, &vprime) {
                Ok(Some(basis)) => return Some(Ok((basis, shard, draw))),
                Ok(None) => {}
                Err(e) => return Some(Err(e)),
            }
        }
        None
    });
    match found {
        None => Ok(None),
        Some(Err(e)) => Err(e),
        Some(Ok((basis, shard, draw))) => {
            Certificate::new(ctx, basis, Method::RandomSolve { seed, shard, draw }).map(Some)
        }
    }
}

/// Deterministic search for `k = 3`: `v' = (1, y)` for `y = 2, 3, ...`.
/// Scaling makes `v_2 = 1` no loss of generality.
pub fn witness_scan3(ctx: &FieldCtx) -> Result<Certificate> {
    check_k(ctx, 3, 3)?;
    for y in (2..=ctx.mask()).map(FieldElem) {
        if let Some(basis) = independent_root(ctx, &[FieldElem::ONE, y])? {
            return Certificate::new(ctx, basis, Method::Scan { y });
        }
    }
    Err(Error::IdentityViolation(format!(
        "no 3-dimensional zero-sum subspace in GF(2^{})",
        ctx.n()
    )))
}

/// Result of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExhaustiveOutcome {
    Found(Certificate),
    SumFree(SumFreeReport),
}

/// A proof by enumeration that no `k`-subspace has zero inverse sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumFreeReport {
    pub n: u32,
    pub k: usize,
    pub result: String,
    pub enumerated: u128,
}

// Reduced echelon bases with the given pivot (leading bit) positions,
// ascending. Basis vector i has its pivot bit, zeros on the other pivots
// and free bits below its pivot.
struct EchelonCell {
    pivots: Vec<u32>,
    free: Vec<Vec<u32>>,
    free_bits: u32,
}

impl EchelonCell {
    fn new(pivots: Vec<u32>) -> Self {
        let free: Vec<Vec<u32>> = pivots
            .iter()
            .map(|&p| (0..p).filter(|j| !pivots.contains(j)).collect())
            .collect();
        let free_bits = free.iter().map(|f| f.len() as u32).sum();
        Self {
            pivots,
            free,
            free_bits,
        }
    }

    fn count(&self) -> u128 {
        1u128 << self.free_bits
    }

    fn basis(&self, mut assignment: u64, out: &mut [u64]) {
        for (i, (&p, free)) in self.pivots.iter().zip(&self.free).enumerate() {
            let mut v = 1u64 << p;
            for &j in free {
                v |= (assignment & 1) << j;
                assignment >>= 1;
            }
            out[i] = v;
        }
    }
}

fn k_subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..k as u32).collect();
    if k as u32 > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - (k - i) as u32) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Visits every `k`-dimensional subspace (reduced echelon bases, pivot sets
/// in lexicographic order) and returns the first with zero inverse sum, or a
/// proof that there is none. Refuses when the Gaussian binomial exceeds `cap`.
pub fn witness_search_exhaustive(ctx: &FieldCtx, k: usize, cap: u128) -> Result<ExhaustiveOutcome> {
    check_k(ctx, k, 1)?;
    let n = ctx.n();
    let count = gaussian_binomial(n, k as u32);
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    let table: Option<Vec<u64>> =
        (n <= INVERSE_TABLE_MAX_N).then(|| ctx.elements().map(|x| ctx.inv(x).0).collect());
    let inv = |x: u64| match &table {
        Some(t) => t[x as usize],
        None => ctx.inv(FieldElem(x)).0,
    };

    let cells: Vec<EchelonCell> = k_subsets(n, k).into_iter().map(EchelonCell::new).collect();
    let offsets: Vec<u128> = cells
        .iter()
        .scan(0u128, |acc, c| {
            let start = *acc;
            *acc += c.count();
            Some(start)
        })
        .collect();
    let total: u128 = cells.iter().map(EchelonCell::count).sum();
    if total != count {
        return Err(Error::IdentityViolation(format!(
            "echelon cells cover {total} subspaces, Gaussian binomial is {count}"
        )));
    }

    let hit = cells.par_iter().enumerate().find_map_first(|(ci, cell)| {
        let mut basis = vec![0u64; k];
        for a in 0..cell.count() as u64 {
            cell.basis(a, &mut basis);
            let mut cur = 0u64;
            let mut sum = 0u64;
            for i in 1u64..1 << k {
                cur ^= basis[i.trailing_zeros() as usize];
                sum ^= inv(cur);
            }
            if sum == 0 {
                return Some((basis, offsets[ci] + a as u128));
            }
        }
        None
    });
    match hit {
        Some((basis, index)) => {
            let basis = basis.into_iter().map(FieldElem).collect();
            Ok(ExhaustiveOutcome::Found(Certificate::new(
                ctx,
                basis,
                Method::Exhaustive { index },
            )?))
        }
        None => Ok(ExhaustiveOutcome::SumFree(SumFreeReport {
            n,
            k,
            result: "sum-free".into(),
            enumerated: count,
        })),
    }
}
