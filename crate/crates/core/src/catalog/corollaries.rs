use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::binpoly::{cyclotomic_any, factorize_xn_minus_1, xn_plus_one, BinPoly};
use crate::error::{Error, Result};
use crate::gf2n::FieldCtx;
use crate::witness::{witness_from_factor_with, Certificate, Method};

// 2^positions hyper-matrices are enumerated; n <= 2^20 keeps this small.
const MAX_POSITIONS: usize = 20;

/// A binary hyper-matrix indexed by `prod_i {0..alpha_i}` over the prime
/// factorization `n = prod p_i^alpha_i` (primes ascending). Entries are
/// stored with the first index varying fastest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Epsilon {
    pub dims: Vec<u32>,
    pub entries: Vec<u8>,
}

impl Epsilon {
    fn index_of(&self, pos: usize) -> Vec<u32> {
        let mut rest = pos;
        self.dims
            .iter()
            .map(|&d| {
                let j = (rest % d as usize) as u32;
                rest /= d as usize;
                j
            })
            .collect()
    }
}

impl fmt::Display for Epsilon {
    /// Rows are indexed by the first prime's exponent; each row lists the
    /// entries over the remaining indices, second index fastest.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.dims.first().copied().unwrap_or(1) as usize;
        let per_row = self.entries.len() / rows.max(1);
        let rendered: Vec<String> = (0..rows)
            .map(|r| {
                (0..per_row)
                    .map(|c| char::from(b'0' + self.entries[r + c * rows]))
                    .collect()
            })
            .collect();
        write!(f, "[{}]", rendered.join(","))
    }
}

/// An admissible hyper-matrix, the divisors it selects and the resulting `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorC2Entry {
    pub epsilon: Epsilon,
    /// Selected divisors, listed position by position (first index fastest).
    pub divisors: Vec<u64>,
    pub k: usize,
    /// `prod_{d in divisors} Phi_d`; divides `X^n + 1` and has no `X` term.
    pub product: BinPoly,
}

impl fmt::Display for CorC2Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.divisors.iter().map(u64::to_string).collect();
        write!(f, "({}, {{{}}}, {})", self.epsilon, ds.join(","), self.k)
    }
}

/// Every nonzero hyper-matrix whose entries over `{0,1}^l` sum to an even
/// number, with `D_eps` and `k = sum_{d in D_eps} deg Phi_d`. Each product of
/// cyclotomic polynomials is checked to divide `X^n + 1` without an `X` term.
pub fn cor_c2_enumerate(n: u64) -> Result<Vec<CorC2Entry>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let primes = arith::factorize(n);
    let dims: Vec<u32> = primes.iter().map(|&(_, a)| a + 1).collect();
    let positions: usize = dims.iter().map(|&d| d as usize).product();
    if positions > MAX_POSITIONS {
        return Err(Error::TooManyDivisors(positions));
    }
    let shape = Epsilon {
        dims: dims.clone(),
        entries: vec![0; positions],
    };
    let index: Vec<Vec<u32>> = (0..positions).map(|p| shape.index_of(p)).collect();
    let divisor: Vec<u64> = index
        .iter()
        .map(|js| {
            primes
                .iter()
                .zip(js)
                .map(|(&(p, _), &j)| p.pow(j))
                .product()
        })
        .collect();
    let degree: Vec<usize> = index
        .iter()
        .map(|js| {
            primes
                .iter()
                .zip(js)
                .filter(|(_, &j)| j >= 1)
                .map(|(&(p, _), &j)| ((p - 1) * p.pow(j - 1)) as usize)
                .product()
        })
        .collect();
    let corner: Vec<bool> = index.iter().map(|js| js.iter().all(|&j| j <= 1)).collect();
    let phis: Vec<BinPoly> = divisor
        .iter()
        .map(|&d| cyclotomic_any(d))
        .collect::<Result<_>>()?;
    let target = xn_plus_one(n as usize);

    let mut out = Vec::new();
    for mask in 1u64..1 << positions {
        let on = |p: usize| mask >> p & 1 == 1;
        let corner_sum = (0..positions).filter(|&p| on(p) && corner[p]).count();
        if corner_sum % 2 == 1 {
            continue;
        }
        let selected: Vec<usize> = (0..positions).filter(|&p| on(p)).collect();
        let k = selected.iter().map(|&p| degree[p]).sum();
        let product = selected
            .iter()
            .fold(BinPoly::one(), |acc, &p| acc * &phis[p]);
        if product.degree() != Some(k) || product.coeff(1) || !product.divides(&target) {
            return Err(Error::IdentityViolation(format!(
                "cyclotomic product {product} for n = {n} is not an admissible factor"
            )));
        }
        out.push(CorC2Entry {
            epsilon: Epsilon {
                dims: dims.clone(),
                entries: (0..positions).map(|p| on(p) as u8).collect(),
            },
            divisors: selected.iter().map(|&p| divisor[p]).collect(),
            k,
            product,
        });
    }
    Ok(out)
}

/// `(s, R, k = s deg R)` with `P(X) = R(X^s)` a divisor of `X^n + 1` with no `X` term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorCc3Entry {
    pub s: u64,
    pub r: BinPoly,
    pub k: usize,
    pub product: BinPoly,
}

impl fmt::Display for CorCc3Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s={}, R={}, {})", self.s, self.r, self.k)
    }
}

// All monic divisors of degree >= 1 from a factor list with multiplicities.
fn all_divisors(factors: &[(BinPoly, u64)]) -> Vec<BinPoly> {
    let mut out = vec![BinPoly::one()];
    for (f, m) in factors {
        let mut next = Vec::with_capacity(out.len() * (*m as usize + 1));
        for base in &out {
            let mut acc = base.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = &acc * f;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.retain(|p| !p.is_one());
    out
}

/// For each divisor `s >= 2` of `n` and each divisor `R` of `X^(n/s) + 1`.
pub fn cor_cc3_enumerate(n: u64) -> Result<Vec<CorCc3Entry>> {
    if n < 4 || arith::is_prime(n) {
        return Ok(Vec::new());
    }
    let target = xn_plus_one(n as usize);
    let mut out = Vec::new();
    for s in arith::divisors(n).into_iter().filter(|&s| s >= 2) {
        let m = n / s;
        let fact = factorize_xn_minus_1(m)?;
        let factors: Vec<(BinPoly, u64)> = fact
            .factors
            .iter()
            .map(|f| (f.poly.clone(), f.mult))
            .collect();
        let mut rs = all_divisors(&factors);
        rs.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp_as_integer(b)));
        for r in rs {
            let product = r.compose_monomial(s as usize);
            let k = s as usize * r.degree().expect("nonconstant");
            if product.coeff(1) || !product.divides(&target) {
                return Err(Error::IdentityViolation(format!(
                    "R(X^{s}) = {product} is not an admissible factor of X^{n} + 1"
                )));
            }
            out.push(CorCc3Entry { s, r, k, product });
        }
    }
    Ok(out)
}

impl CorC2Entry {
    /// The subspace `ker P(sigma)` for `P = prod Phi_d`, as a certificate.
    pub fn certificate(&self, ctx: &FieldCtx) -> Result<Certificate> {
        witness_from_factor_with(ctx, &self.product, |f, alpha| Method::CorC2 {
            epsilon: self.epsilon.entries.clone(),
            divisors: self.divisors.clone(),
            f,
            alpha,
        })
    }
}

impl CorCc3Entry {
    /// The subspace `ker R(sigma^s)`, as a certificate.
    pub fn certificate(&self, ctx: &FieldCtx) -> Result<Certificate> {
        witness_from_factor_with(ctx, &self.product, |f, alpha| Method::CorCc3 {
            s: self.s,
            r: self.r.clone(),
            f,
            alpha,
        })
    }
}
