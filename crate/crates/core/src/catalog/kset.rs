use serde::{Deserialize, Serialize};

use crate::arith;
use crate::binpoly::{factorize_xn_minus_1, xn_plus_one, BinPoly, FactorEntry};
use crate::error::{Error, Result};

/// How many irreducible factors of index `d` a selection uses, split into
/// zero-trace (`mu`) and nonzero-trace (`nu`) ones, counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexChoice {
    pub d: u64,
    pub o: u64,
    pub mu: u64,
    pub nu: u64,
}

/// One way to reach `k`: the per-index counts and the factor they denote.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub k: usize,
    pub choices: Vec<IndexChoice>,
    /// Divisor of `X^n + 1` of degree `k` with zero `X^(k-1)` coefficient.
    pub factor: BinPoly,
    /// Its reciprocal, of shape `X^k + ... + a_2 X^2 + a_0`.
    pub reversed: BinPoly,
}

/// The degrees `k >= 2` of divisors of `X^n + 1` with zero `X^(k-1)`
/// coefficient (equivalently, whose reciprocal has no `X` term).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnReport {
    pub n: u64,
    pub kset: Vec<usize>,
    pub realizations: Vec<Realization>,
}

impl KnReport {
    pub fn contains(&self, k: usize) -> bool {
        self.kset.binary_search(&k).is_ok()
    }

    pub fn realization(&self, k: usize) -> Option<&Realization> {
        self.realizations.iter().find(|r| r.k == k)
    }
}

struct IndexData<'a> {
    d: u64,
    o: u64,
    zero: Vec<&'a FactorEntry>,
    other: Vec<&'a FactorEntry>,
}

// Multiplies `count` factors drawn from `pool`, each used at most `mult` times.
fn take(pool: &[&FactorEntry], mut count: u64, acc: &mut BinPoly) {
    for f in pool {
        let use_here = count.min(f.mult);
        for _ in 0..use_here {
            *acc = &*acc * &f.poly;
        }
        count -= use_here;
    }
    debug_assert_eq!(count, 0);
}

/// Builds `K_n` by a dynamic program over the divisors `d` of the odd part
/// of `n`, with state (degree so far, parity of the nonzero-trace count).
pub fn compute_kn(n: u64) -> Result<KnReport> {
    let fact = factorize_xn_minus_1(n)?;
    let scale = 1u64 << fact.e;
    let data: Vec<IndexData> = arith::divisors(fact.t)
        .into_iter()
        .map(|d| {
            let (zero, other) = fact.factors_of_index(d).partition(|f| f.zero_trace);
            IndexData {
                d,
                o: arith::order_of_two(d),
                zero,
                other,
            }
        })
        .collect();

    let size = n as usize + 1;
    // layers[i][k][p] = (mu, nu) chosen at index i to land on (k, p), if reachable.
    let mut reach = vec![[false; 2]; size];
    reach[0][0] = true;
    let mut layers: Vec<Vec<[Option<(u64, u64)>; 2]>> = Vec::with_capacity(data.len());
    for idx in &data {
        let mu_max = scale * idx.zero.len() as u64;
        let nu_max = scale * idx.other.len() as u64;
        let mut next = vec![[false; 2]; size];
        let mut layer = vec![[None; 2]; size];
        for k in 0..size {
            for p in 0..2 {
                if !reach[k][p] {
                    continue;
                }
                for mu in 0..=mu_max {
                    for nu in 0..=nu_max {
                        let nk = k + ((mu + nu) * idx.o) as usize;
                        if nk >= size {
                            break;
                        }
                        let np = p ^ (nu & 1) as usize;
                        if !next[nk][np] {
                            next[nk][np] = true;
                            layer[nk][np] = Some((mu, nu));
                        }
                    }
                }
            }
        }
        reach = next;
        layers.push(layer);
    }

    let target = xn_plus_one(n as usize);
    let mut kset = Vec::new();
    let mut realizations = Vec::new();
    for k in 2..size {
        if !reach[k][0] {
            continue;
        }
        let mut choices = Vec::with_capacity(data.len());
        let (mut ck, mut cp) = (k, 0usize);
        for (idx, layer) in data.iter().zip(&layers).rev() {
            let (mu, nu) = layer[ck][cp].expect("reachable state has a predecessor");
            choices.push(IndexChoice {
                d: idx.d,
                o: idx.o,
                mu,
                nu,
            });
            ck -= ((mu + nu) * idx.o) as usize;
            cp ^= (nu & 1) as usize;
        }
        choices.reverse();
        let mut factor = BinPoly::one();
        for (idx, c) in data.iter().zip(&choices) {
            take(&idx.zero, c.mu, &mut factor);
            take(&idx.other, c.nu, &mut factor);
        }
        let reversed = factor.reverse();
        let shaped = factor.degree() == Some(k) && !factor.coeff(k - 1) && !reversed.coeff(1);
        if !shaped || !factor.divides(&target) {
            return Err(Error::IdentityViolation(format!(
                "realization of k = {k} for n = {n} fails verification: {factor}"
            )));
        }
        kset.push(k);
        realizations.push(Realization {
            k,
            choices,
            factor,
            reversed,
        });
    }
    Ok(KnReport {
        n,
        kset,
        realizations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        assert_eq!(compute_kn(1).unwrap().kset, Vec::<usize>::new());
        assert_eq!(compute_kn(2).unwrap().kset, vec![2]);
        assert_eq!(compute_kn(6).unwrap().kset, vec![2, 3, 4, 6]);
        assert_eq!(compute_kn(7).unwrap().kset, vec![3, 4, 7]);
        assert_eq!(
            compute_kn(12).unwrap().kset,
            vec![2, 3, 4, 5, 6, 7, 8, 9, 10, 12]
        );
        assert_eq!(
            compute_kn(31).unwrap().kset,
            vec![5, 6, 10, 11, 15, 16, 20, 21, 25, 26, 31]
        );
    }

    #[test]
    fn realizations_have_expected_shape() {
        let r = compute_kn(9).unwrap();
        for real in &r.realizations {
            assert_eq!(real.reversed.degree(), Some(real.k));
            assert!(!real.reversed.coeff(1));
            assert!(real.reversed.divides(&xn_plus_one(9)));
        }
    }
}
