use proptest::prelude::*;
use sumfree_core::catalog::compute_kn;
use sumfree_core::moore::{inverse_sum_enumerate, Subspace};
use sumfree_core::witness::{
    verify_certificate, witness_from_factor, witness_search_exhaustive, witness_search_random,
    Certificate, ExhaustiveOutcome,
};
use sumfree_core::{FieldCtx, FieldElem};

/// Brute force: does any k-subspace of GF(2^n) have zero inverse sum?
/// Walks all k-subsets of nonzero vectors, so only for tiny fields.
fn exists_zero_sum(ctx: &FieldCtx, k: usize) -> bool {
    fn rec(ctx: &FieldCtx, k: usize, start: u64, basis: &mut Vec<FieldElem>) -> bool {
        if basis.len() == k {
            return match Subspace::new(ctx, basis.clone()) {
                Ok(s) => inverse_sum_enumerate(&s).is_zero(),
                Err(_) => false,
            };
        }
        for x in start..ctx.order() as u64 {
            basis.push(FieldElem(x));
            if rec(ctx, k, x + 1, basis) {
                return true;
            }
            basis.pop();
        }
        false
    }
    rec(ctx, k, 1, &mut Vec::new())
}

#[test]
fn exhaustive_matches_brute_force() {
    for n in 2..=6u32 {
        let ctx = FieldCtx::with_degree(n).unwrap();
        for k in 1..=n as usize {
            let found = matches!(
                witness_search_exhaustive(&ctx, k, 1 << 20).unwrap(),
                ExhaustiveOutcome::Found(_)
            );
            assert_eq!(found, exists_zero_sum(&ctx, k), "n={n} k={k}");
        }
    }
}

#[test]
fn exhaustive_random_and_factor_agree() {
    for n in 2..=8u32 {
        let ctx = FieldCtx::with_degree(n).unwrap();
        let kn = compute_kn(n as u64).unwrap();
        for k in 2..=n as usize {
            let ex = match witness_search_exhaustive(&ctx, k, 1 << 20).unwrap() {
                ExhaustiveOutcome::Found(c) => Some(c),
                ExhaustiveOutcome::SumFree(_) => None,
            };
            let rnd = witness_search_random(&ctx, k, 7, 4096).unwrap();
            if let Some(c) = &rnd {
                assert!(
                    ex.is_some(),
                    "random found what exhaustive missed at n={n} k={k}"
                );
                assert!(verify_certificate(c).unwrap());
            }
            if let Some(real) = kn.realization(k) {
                let c = witness_from_factor(&ctx, &real.reversed).unwrap();
                assert!(verify_certificate(&c).unwrap());
                assert!(ex.is_some(), "n={n} k={k}");
            }
        }
    }
}

#[test]
fn certificate_json_round_trip() {
    let ctx = FieldCtx::with_degree(12).unwrap();
    let real = compute_kn(12).unwrap().realization(7).unwrap().clone();
    let c = witness_from_factor(&ctx, &real.reversed).unwrap();
    let text = serde_json::to_string(&c).unwrap();
    let back: Certificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    assert!(verify_certificate(&back).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The inverse sum over lambda * S is lambda^{-1} times the sum over S,
    /// so scaling a certificate basis gives another certificate.
    #[test]
    fn scaled_certificates_verify(n in 6u32..=14, seed in any::<u64>(), lambda in 1u64..) {
        let ctx = FieldCtx::with_degree(n).unwrap();
        let lambda = FieldElem(lambda & ctx.mask()).max(FieldElem::ONE);
        if let Some(c) = witness_search_random(&ctx, 3, seed, 4096).unwrap() {
            let mut scaled = c.clone();
            scaled.basis = c.basis.iter().map(|&b| ctx.mul(lambda, b)).collect();
            prop_assert!(verify_certificate(&scaled).unwrap());
        }
    }

    /// Verification recomputes the sum; a stale `verified` flag is ignored.
    #[test]
    fn verification_ignores_the_flag(n in 5u32..=11, seed in any::<u64>()) {
        let ctx = FieldCtx::with_degree(n).unwrap();
        let s = Subspace::new(&ctx, vec![FieldElem::ONE, ctx.generator_x()]).unwrap();
        let expect = inverse_sum_enumerate(&s).is_zero();
        let base = witness_search_random(&ctx, 3, seed, 4096).unwrap();
        if let Some(mut c) = base {
            c.k = 2;
            c.basis = s.basis().to_vec();
            c.verified = true;
            prop_assert_eq!(verify_certificate(&c).unwrap(), expect);
        }
    }
}
