use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2n::FieldCtx;

use super::{witness_lift, witness_scan3, witness_search_random, witness_subfield, Certificate};

/// How one dimension of the even-`n` chain is justified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "justification", rename_all = "snake_case")]
pub enum ChainEntry {
    /// A certificate at this dimension.
    Direct { certificate: Certificate },
    /// Sum-freedom at `k` and at `n - k` are equivalent; the certificate is
    /// for `n - k`. `direct` holds a certificate at `k` if one was found.
    Dual {
        dual_k: usize,
        dual: Certificate,
        direct: Option<Certificate>,
    },
}

impl ChainEntry {
    /// A certificate at exactly this dimension, if the entry has one.
    pub fn direct(&self) -> Option<&Certificate> {
        match self {
            ChainEntry::Direct { certificate } => Some(certificate),
            ChainEntry::Dual { direct, .. } => direct.as_ref(),
        }
    }
}

fn chain_step(ctx: &FieldCtx, k: usize, below: Option<&Certificate>) -> Result<Certificate> {
    if ctx.n() as usize % k == 0 {
        witness_subfield(ctx, k as u32)
    } else if k == 3 {
        witness_scan3(ctx)
    } else {
        let below = match below {
            Some(c) => c.clone(),
            None => witness_even_direct(ctx, k - 2)?,
        };
        witness_lift(ctx, &below, 2)
    }
}

/// The chain's certificate at a single `k` with `2 <= k <= n/2 + 1`, `n` even.
pub fn witness_even_direct(ctx: &FieldCtx, k: usize) -> Result<Certificate> {
    let n = ctx.n() as usize;
    if n % 2 == 1 || n < 4 {
        return Err(Error::OddDegree(ctx.n()));
    }
    if k < 2 || k > (n / 2 + 1).min(n - 2).max(2) {
        return Err(Error::DimensionOutOfRange { k, n: ctx.n() });
    }
    chain_step(ctx, k, None)
}

/// Justifies non-sum-freedom for every `2 <= k <= n - 2` when `n` is even.
///
/// For `k <= n/2 + 1`: even `k` is a subfield when `k | n` and otherwise a
/// lift of `k - 2` by GF(4) (possible since `k - 2 < n/2`); odd `k` starts
/// from a deterministic 3-dimensional scan and is lifted by GF(4). Larger
/// `k` reuse the entry at `n - k`, with a direct certificate attempted
/// (subfield, else random search with `direct_budget` draws from seed 0).
pub fn witness_even_chain(
    ctx: &FieldCtx,
    direct_budget: u64,
) -> Result<BTreeMap<usize, ChainEntry>> {
    let n = ctx.n() as usize;
    if n % 2 == 1 || n < 4 {
        return Err(Error::OddDegree(ctx.n()));
    }
    let mut direct: BTreeMap<usize, Certificate> = BTreeMap::new();
    let top = (n / 2 + 1).min(n - 2);
    for k in 2..=top {
        let cert = if n % k == 0 {
            witness_subfield(ctx, k as u32)?
        } else if k == 3 {
            witness_scan3(ctx)?
        } else {
            witness_lift(ctx, &direct[&(k - 2)], 2)?
        };
        direct.insert(k, cert);
    }
    let mut out: BTreeMap<usize, ChainEntry> = BTreeMap::new();
    for (&k, cert) in &direct {
        out.insert(
            k,
            ChainEntry::Direct {
                certificate: cert.clone(),
            },
        );
    }
    for k in top + 1..=n - 2 {
        let attempt = if n % k == 0 {
            Some(witness_subfield(ctx, k as u32)?)
        } else {
            witness_search_random(ctx, k, 0, direct_budget)?
        };
        out.insert(
            k,
            ChainEntry::Dual {
                dual_k: n - k,
                dual: direct[&(n - k)].clone(),
                direct: attempt,
            },
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{verify_certificate, Method};

    #[test]
    fn chain_for_eight() {
        let ctx = FieldCtx::with_degree(8).unwrap();
        let chain = witness_even_chain(&ctx, 0).unwrap();
        assert_eq!(
            chain.keys().copied().collect::<Vec<_>>(),
            vec![2, 3, 4, 5, 6]
        );
        let five = chain[&5].direct().unwrap();
        assert!(matches!(&five.method, Method::Lift { l: 2, inner, .. } if inner.k == 3));
        match &chain[&6] {
            ChainEntry::Dual { dual_k, dual, .. } => {
                assert_eq!(*dual_k, 2);
                assert!(verify_certificate(dual).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn chain_for_six_and_twelve() {
        let ctx6 = FieldCtx::with_degree(6).unwrap();
        let c6 = witness_even_chain(&ctx6, 0).unwrap();
        assert_eq!(c6.keys().copied().collect::<Vec<_>>(), vec![2, 3, 4]);
        let ctx12 = FieldCtx::with_degree(12).unwrap();
        let c12 = witness_even_chain(&ctx12, 0).unwrap();
        assert_eq!(
            c12.keys().copied().collect::<Vec<_>>(),
            (2..=10).collect::<Vec<_>>()
        );
        for entry in c12.values() {
            if let Some(c) = entry.direct() {
                assert!(verify_certificate(c).unwrap());
            }
        }
    }

    #[test]
    fn odd_degree_rejected() {
        let ctx = FieldCtx::with_degree(9).unwrap();
        assert_eq!(witness_even_chain(&ctx, 0), Err(Error::OddDegree(9)));
    }
}
