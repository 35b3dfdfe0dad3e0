//! Certificates of non-sum-freedom: `k`-dimensional subspaces `E` of
//! GF(2^n) with `sum_{0 != x in E} 1/x = 0`, together with how they were
//! obtained.
//!
//! Constructions ([`witness_subfield`], [`witness_from_factor`],
//! [`witness_lift`]) are deterministic; searches ([`witness_search_random`],
//! [`witness_search_exhaustive`], [`witness_scan3`]) are reproducible given
//! their parameters. Only the exhaustive search may conclude sum-freedom.

mod chain;
mod construct;
mod search;

pub use chain::{witness_even_chain, witness_even_direct, ChainEntry};
pub(crate) use construct::witness_from_factor_with;
pub use construct::{factor_span, witness_from_factor, witness_lift, witness_subfield};
pub use search::{
    witness_scan3, witness_search_exhaustive, witness_search_random, ExhaustiveOutcome,
    SumFreeReport, DEFAULT_EXHAUSTIVE_CAP, SHARDS,
};

use serde::{Deserialize, Serialize};

use crate::binpoly::BinPoly;
use crate::error::{Error, Result};
use crate::gf2n::{FieldCtx, FieldElem};
use crate::moore::{self, Subspace};

/// How a certificate's subspace was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "method_params", rename_all = "snake_case")]
pub enum Method {
    /// The subfield GF(2^l).
    Subfield { l: u32 },
    /// `ker f(sigma)`, spanned by the conjugates of `g(sigma) alpha` with `g = (X^n+1)/f`.
    Factor { f: BinPoly, alpha: FieldElem },
    /// `GF(2^l) + E'` with `x^(2^l) + x` mapping `E'` onto `a F`, `F` the inner span.
    Lift {
        l: u32,
        a: FieldElem,
        inner: Box<Certificate>,
    },
    /// Random `v'`, then a root `x` of the affine polynomial `F_k(., v')`.
    RandomSolve { seed: u64, shard: u64, draw: u64 },
    /// First zero-sum subspace in reduced-echelon enumeration order, at
    /// position `index` of that order.
    Exhaustive { index: u128 },
    /// Deterministic `k = 3` scan over `v' = (1, y)` with `y` ascending.
    Scan { y: FieldElem },
    /// Factor built from a product of cyclotomic polynomials `Phi_d`, `d in divisors`.
    CorC2 {
        epsilon: Vec<u8>,
        divisors: Vec<u64>,
        f: BinPoly,
        alpha: FieldElem,
    },
    /// Factor `R(X^s)` with `R | X^(n/s) + 1`.
    CorCc3 {
        s: u64,
        r: BinPoly,
        f: BinPoly,
        alpha: FieldElem,
    },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Subfield { .. } => "subfield",
            Method::Factor { .. } => "factor",
            Method::Lift { .. } => "lift",
            Method::RandomSolve { .. } => "random_solve",
            Method::Exhaustive { .. } => "exhaustive",
            Method::Scan { .. } => "scan",
            Method::CorC2 { .. } => "cor_c2",
            Method::CorCc3 { .. } => "cor_cc3",
        }
    }
}

/// A claim that the inverse is not `k`th order sum-free over GF(2^n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: u32,
    pub modulus: BinPoly,
    pub k: usize,
    pub basis: Vec<FieldElem>,
    #[serde(flatten)]
    pub method: Method,
    pub verified: bool,
}

impl Certificate {
    /// Checks `basis` and wraps it; errors if the inverse sum is not zero.
    pub fn new(ctx: &FieldCtx, basis: Vec<FieldElem>, method: Method) -> Result<Self> {
        let mut cert = Self {
            n: ctx.n(),
            modulus: ctx.modulus(),
            k: basis.len(),
            basis,
            method,
            verified: false,
        };
        if !verify_certificate(&cert)? {
            return Err(Error::IdentityViolation(format!(
                "{} construction gave a subspace with nonzero inverse sum",
                cert.method.name()
            )));
        }
        cert.verified = true;
        Ok(cert)
    }

    pub fn ctx(&self) -> Result<FieldCtx> {
        FieldCtx::new(self.n, Some(&self.modulus))
    }

    pub fn subspace(&self) -> Result<Subspace> {
        Subspace::new(&self.ctx()?, self.basis.clone())
    }
}

/// Re-checks a certificate from scratch: independence, the `Delta_1 / Delta^2`
/// formula and, for `k <= 20`, direct enumeration. The stored `verified`
/// flag is ignored.
pub fn verify_certificate(cert: &Certificate) -> Result<bool> {
    let ctx = cert.ctx()?;
    if cert.k != cert.basis.len() {
        return Err(Error::MalformedCertificate(format!(
            "k = {} but basis has {} vectors",
            cert.k,
            cert.basis.len()
        )));
    }
    if cert.k == 0 || cert.k > ctx.n() as usize {
        return Err(Error::DimensionOutOfRange {
            k: cert.k,
            n: ctx.n(),
        });
    }
    if let Some(bad) = cert.basis.iter().find(|v| !ctx.contains(**v)) {
        return Err(Error::ElementOutOfRange {
            value: bad.0,
            n: ctx.n(),
        });
    }
    if moore::moore_det(&ctx, &cert.basis).is_zero() {
        return Ok(false);
    }
    let s = Subspace::new(&ctx, cert.basis.clone())?;
    if !moore::inverse_sum_formula(&s).is_zero() {
        return Ok(false);
    }
    if s.dim() <= moore::ENUMERATION_MAX_K && !moore::inverse_sum_enumerate(&s).is_zero() {
        return Ok(false);
    }
    Ok(true)
}
