use crate::binpoly::{xn_plus_one, BinPoly};
use crate::error::{Error, Result};
use crate::gf2n::{FieldCtx, FieldElem};
use crate::linalg;

use super::{Certificate, Method};

/// The subfield GF(2^k) of GF(2^n), `k | n`, `k >= 2`.
pub fn witness_subfield(ctx: &FieldCtx, k: u32) -> Result<Certificate> {
    if k < 2 || k > ctx.n() {
        return Err(Error::DimensionOutOfRange {
            k: k as usize,
            n: ctx.n(),
        });
    }
    let basis = ctx.subfield_basis(k)?;
    Certificate::new(ctx, basis, Method::Subfield { l: k })
}

/// The Frobenius-stable subspace `ker f(sigma)` for a divisor `f` of `X^n + 1`,
/// given as `(x, sigma x, ..., sigma^(k-1) x)` with `x = g(sigma) alpha`,
/// `g = (X^n + 1) / f` and `alpha` normal. No zero-sum check is made.
pub fn factor_span(ctx: &FieldCtx, f: &BinPoly) -> Result<(Vec<FieldElem>, FieldElem)> {
    let n = ctx.n() as usize;
    let k = match f.degree() {
        Some(k) if (1..=n).contains(&k) => k,
        d => {
            return Err(Error::DimensionOutOfRange {
                k: d.unwrap_or(0),
                n: ctx.n(),
            })
        }
    };
    if !f.coeff(0) {
        return Err(Error::ZeroConstantTerm(f.to_string()));
    }
    let g = xn_plus_one(n)
        .exact_div(f)
        .map_err(|_| Error::NotAFactor(f.to_string()))?;
    let alpha = ctx.find_normal_element();
    let x = ctx.apply_sigma_poly(&g, alpha);
    let basis: Vec<FieldElem> = (0..k as u64).map(|i| ctx.frobenius(x, i)).collect();
    debug_assert!(linalg::is_independent(
        &basis.iter().map(|b| b.0).collect::<Vec<_>>()
    ));
    Ok((basis, alpha))
}

/// Certificate from a factor `f` of `X^n + 1` of degree `k >= 2` with zero
/// coefficient of `X` and nonzero constant term.
pub fn witness_from_factor(ctx: &FieldCtx, f: &BinPoly) -> Result<Certificate> {
    witness_from_factor_with(ctx, f, |f, alpha| Method::Factor { f, alpha })
}

pub(crate) fn witness_from_factor_with(
    ctx: &FieldCtx,
    f: &BinPoly,
    method: impl FnOnce(BinPoly, FieldElem) -> Method,
) -> Result<Certificate> {
    if f.degree().unwrap_or(0) < 2 {
        return Err(Error::DimensionOutOfRange {
            k: f.degree().unwrap_or(0),
            n: ctx.n(),
        });
    }
    if !f.divides(&xn_plus_one(ctx.n() as usize)) {
        return Err(Error::NotAFactor(f.to_string()));
    }
    if f.coeff(1) {
        return Err(Error::NonzeroLinearTerm(f.to_string()));
    }
    let (basis, alpha) = factor_span(ctx, f)?;
    Certificate::new(ctx, basis, method(f.clone(), alpha))
}

/// Lifts an `r`-dimensional certificate `F` to dimension `l + r`:
/// picks `a != 0` with `Tr_{2^n/2^l}(a v) = 0` on `F`, solves
/// `x^(2^l) + x = a v_j` for each basis vector and adjoins GF(2^l).
pub fn witness_lift(ctx: &FieldCtx, inner: &Certificate, l: u32) -> Result<Certificate> {
    let n = ctx.n();
    if l < 2 || n % l != 0 {
        return Err(Error::NotADivisor { l, n });
    }
    if inner.n != n || inner.modulus != ctx.modulus() {
        return Err(Error::MalformedCertificate(
            "inner certificate lives in a different field".into(),
        ));
    }
    if !super::verify_certificate(inner)? {
        return Err(Error::MalformedCertificate(
            "inner certificate does not verify".into(),
        ));
    }
    let r = inner.k;
    if r >= (n / l) as usize {
        return Err(Error::LiftHypothesis { r, bound: n / l });
    }

    // Each trace condition is an n-bit linear form in `a` per output bit.
    let mut rows = Vec::with_capacity(r * n as usize);
    for &v in &inner.basis {
        let tr = ctx.linear_map(|a| ctx.rel_trace(ctx.mul(a, v), l).expect("l divides n"));
        for bit in 0..n {
            let row = (0..n)
                .filter(|&j| tr.apply(1 << j) >> bit & 1 == 1)
                .fold(0u64, |m, j| m | 1 << j);
            rows.push(row);
        }
    }
    let a = linalg::nullspace(&rows, n)
        .into_iter()
        .min()
        .map(FieldElem)
        .expect("dimension count leaves a nonzero kernel");

    let artin = ctx.linear_map(|x| ctx.frobenius(x, l as u64) + x);
    let mut basis = ctx.subfield_basis(l)?;
    for &v in &inner.basis {
        let w = ctx.mul(a, v);
        let pre = artin
            .solve(w.0)
            .ok_or_else(|| Error::IdentityViolation("a v has nonzero relative trace".into()))?;
        // Free coordinates set to zero: one fixed representative mod GF(2^l).
        basis.push(FieldElem(pre.particular));
    }
    Certificate::new(
        ctx,
        basis,
        Method::Lift {
            l,
            a,
            inner: Box::new(inner.clone()),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moore::{inverse_sum, Subspace};

    fn f(exps: &[usize]) -> BinPoly {
        BinPoly::from_exponents(exps)
    }

    #[test]
    fn subfield_certificates() {
        let ctx = FieldCtx::with_degree(6).unwrap();
        assert_eq!(witness_subfield(&ctx, 3).unwrap().k, 3);
        assert_eq!(witness_subfield(&ctx, 2).unwrap().k, 2);
        let ctx7 = FieldCtx::with_degree(7).unwrap();
        assert_eq!(
            witness_subfield(&ctx7, 2),
            Err(Error::NotADivisor { l: 2, n: 7 })
        );
    }

    #[test]
    fn factor_certificates() {
        let ctx6 = FieldCtx::with_degree(6).unwrap();
        assert_eq!(witness_from_factor(&ctx6, &f(&[3, 0])).unwrap().k, 3);
        let ctx9 = FieldCtx::with_degree(9).unwrap();
        assert_eq!(witness_from_factor(&ctx9, &f(&[6, 3, 0])).unwrap().k, 6);
        let ctx5 = FieldCtx::with_degree(5).unwrap();
        assert_eq!(
            witness_from_factor(&ctx5, &f(&[2, 1, 0])),
            Err(Error::NotAFactor("X^2 + X + 1".into()))
        );
    }

    #[test]
    fn linear_term_gives_nonzero_sum() {
        // X^3 + X + 1 divides X^7 + 1 but has a linear term.
        let ctx = FieldCtx::with_degree(7).unwrap();
        let p = f(&[3, 1, 0]);
        assert!(matches!(
            witness_from_factor(&ctx, &p),
            Err(Error::NonzeroLinearTerm(_))
        ));
        let (basis, _) = factor_span(&ctx, &p).unwrap();
        let s = Subspace::new(&ctx, basis).unwrap();
        assert!(!inverse_sum(&s).is_zero());
        // The reciprocal X^3 + X^2 + 1 works.
        assert_eq!(witness_from_factor(&ctx, &p.reverse()).unwrap().k, 3);
    }

    #[test]
    fn lift_examples() {
        let ctx10 = FieldCtx::with_degree(10).unwrap();
        let base = super::super::witness_scan3(&ctx10).unwrap();
        let lifted = witness_lift(&ctx10, &base, 2).unwrap();
        assert_eq!(lifted.k, 5);
        let s = lifted.subspace().unwrap();
        for g in ctx10.subfield_basis(2).unwrap() {
            assert!(s.contains(g));
        }

        let ctx8 = FieldCtx::with_degree(8).unwrap();
        let base = super::super::witness_scan3(&ctx8).unwrap();
        assert_eq!(witness_lift(&ctx8, &base, 2).unwrap().k, 5);

        let ctx6 = FieldCtx::with_degree(6).unwrap();
        let base = witness_subfield(&ctx6, 3).unwrap();
        assert_eq!(
            witness_lift(&ctx6, &base, 2),
            Err(Error::LiftHypothesis { r: 3, bound: 3 })
        );
    }
}
