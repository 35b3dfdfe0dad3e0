//! Cyclotomic polynomials, 2-cyclotomic cosets and the factorization of
//! `X^n + 1` over GF(2) through minimal polynomials of roots of unity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::BinPoly;
use crate::arith;
use crate::error::{Error, Result};
use crate::gf2n::{FieldCtx, FieldElem, MAX_DEGREE};

pub fn xn_plus_one(n: usize) -> BinPoly {
    BinPoly::from_exponents(&[n, 0])
}

/// `Phi_d mod 2` for odd `d`, via `Phi_d = (X^d + 1) / prod_{d' | d, d' < d} Phi_d'`.
pub fn cyclotomic(d: u64) -> Result<BinPoly> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::InvalidCyclotomicIndex(d));
    }
    let mut table: BTreeMap<u64, BinPoly> = BTreeMap::new();
    for dd in arith::divisors(d) {
        let mut acc = xn_plus_one(dd as usize);
        for (_, phi) in table.range(..dd).filter(|(k, _)| dd % **k == 0) {
            acc = acc.exact_div(phi)?;
        }
        table.insert(dd, acc);
    }
    Ok(table.remove(&d).expect("d divides itself"))
}

/// `Phi_d mod 2` for any `d >= 1`: with `d = 2^a m`, `m` odd, this is
/// `Phi_m` if `a = 0` and `Phi_m(X^(2^(a-1)))` otherwise.
pub fn cyclotomic_any(d: u64) -> Result<BinPoly> {
    if d == 0 {
        return Err(Error::InvalidCyclotomicIndex(d));
    }
    let (a, m) = arith::split_two_power(d);
    let phi = cyclotomic(m)?;
    Ok(if a == 0 {
        phi
    } else {
        phi.compose_monomial(1 << (a - 1))
    })
}

/// 2-cyclotomic cosets of the units modulo odd `d`; `d = 1` yields `[[0]]`.
///
/// Cosets are listed by smallest representative, each in orbit order
/// `j, 2j, 4j, ...`.
pub fn cyclotomic_cosets(d: u64) -> Result<Vec<Vec<u64>>> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::InvalidCyclotomicIndex(d));
    }
    if d == 1 {
        return Ok(vec![vec![0]]);
    }
    let mut seen = vec![false; d as usize];
    let mut cosets = Vec::new();
    for j in 1..d {
        if seen[j as usize] || arith::gcd(j, d) != 1 {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = j;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = x * 2 % d;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// An element of exact multiplicative order `d` in `field`; `d` must divide `2^n - 1`.
pub(crate) fn root_of_unity(field: &FieldCtx, d: u64) -> FieldElem {
    let group = field.order() - 1;
    assert!(group % d as u128 == 0, "{d} does not divide 2^n - 1");
    let cofactor = group / d as u128;
    let primes: Vec<u64> = arith::factorize(d).into_iter().map(|(p, _)| p).collect();
    (2..=field.mask())
        .map(|x| field.pow(FieldElem(x), cofactor))
        .find(|&z| {
            primes
                .iter()
                .all(|&p| field.pow(z, (d / p) as u128) != FieldElem::ONE)
        })
        .expect("the multiplicative group is cyclic")
}

/// The irreducible factors of `Phi_d` (odd `d`), one per 2-cyclotomic coset,
/// as minimal polynomials `prod_{j in coset} (X - zeta^j)` computed in
/// `GF(2^{o_d(2)})` and checked to have binary coefficients.
pub fn cyclotomic_factors(d: u64) -> Result<Vec<BinPoly>> {
    let cosets = cyclotomic_cosets(d)?;
    if d == 1 {
        return Ok(vec![BinPoly::from_exponents(&[1, 0])]);
    }
    let l = arith::order_of_two(d);
    if l > MAX_DEGREE as u64 {
        return Err(Error::FieldTooLarge(l));
    }
    let field = FieldCtx::with_degree(l as u32)?;
    let zeta = root_of_unity(&field, d);
    cosets
        .iter()
        .map(|coset| {
            let mut coeffs = vec![FieldElem::ONE];
            for &j in coset {
                let root = field.pow(zeta, j as u128);
                let mut next = vec![FieldElem::ZERO; coeffs.len() + 1];
                for (i, &c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] += field.mul(root, c);
                }
                coeffs = next;
            }
            let mut poly = BinPoly::zero();
            for (i, c) in coeffs.into_iter().enumerate() {
                match c.bits() {
                    0 => {}
                    1 => poly.set_coeff(i, true),
                    _ => {
                        return Err(Error::IdentityViolation(format!(
                            "minimal polynomial for coset of {} mod {d} is not binary",
                            coset[0]
                        )))
                    }
                }
            }
            Ok(poly)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub poly: BinPoly,
    pub d: u64,
    pub mult: u64,
    pub zero_trace: bool,
}

/// `X^n + 1 = prod_{d | t} prod (irreducible factors of Phi_d)^(2^e)` with `n = 2^e t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationOfXnMinus1 {
    pub n: u64,
    pub t: u64,
    pub e: u32,
    pub factors: Vec<FactorEntry>,
}

impl FactorizationOfXnMinus1 {
    /// Product of all factors with multiplicity.
    pub fn product(&self) -> BinPoly {
        self.factors.iter().fold(BinPoly::one(), |acc, f| {
            (0..f.mult).fold(acc, |acc, _| acc * &f.poly)
        })
    }

    pub fn factors_of_index(&self, d: u64) -> impl Iterator<Item = &FactorEntry> {
        self.factors.iter().filter(move |f| f.d == d)
    }
}

/// A factor has zero trace when its `X^(deg-1)` coefficient vanishes.
pub fn has_zero_trace(f: &BinPoly) -> bool {
    match f.degree() {
        Some(d) if d >= 1 => !f.coeff(d - 1),
        _ => false,
    }
}

pub fn factorize_xn_minus_1(n: u64) -> Result<FactorizationOfXnMinus1> {
    if n == 0 {
        return Err(Error::InvalidCyclotomicIndex(0));
    }
    let (e, t) = arith::split_two_power(n);
    let mut factors = Vec::new();
    for d in arith::divisors(t) {
        for poly in cyclotomic_factors(d)? {
            factors.push(FactorEntry {
                zero_trace: has_zero_trace(&poly),
                poly,
                d,
                mult: 1 << e,
            });
        }
    }
    Ok(FactorizationOfXnMinus1 { n, t, e, factors })
}

// Square-free decomposition: (f_i, m_i) with f = prod f_i^m_i, f_i square-free and coprime.
fn square_free_parts(f: &BinPoly, mult_scale: u64, out: &mut Vec<(BinPoly, u64)>) {
    let mut dup = f.gcd(&f.derivative());
    let mut squarefree = f.exact_div(&dup).expect("gcd divides");
    let mut m = 0;
    while squarefree.degree().unwrap_or(0) > 0 {
        let common = dup.gcd(&squarefree);
        let factor = squarefree.exact_div(&common).expect("gcd divides");
        dup = dup.exact_div(&common).expect("gcd divides");
        squarefree = common;
        m += 1;
        if factor.degree().unwrap_or(0) > 0 {
            out.push((factor, m * mult_scale));
        }
    }
    if dup.degree().unwrap_or(0) > 0 {
        let root = dup.sqrt().expect("remaining part is a square");
        square_free_parts(&root, mult_scale * 2, out);
    }
}

// Distinct-degree split of a square-free polynomial: (degree, product of factors of that degree).
fn distinct_degree_parts(f: &BinPoly) -> Vec<(usize, BinPoly)> {
    let x = BinPoly::x();
    let mut rest = f.clone();
    let mut xp = x.clone();
    let mut out = Vec::new();
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        xp = xp.mul_mod(&xp, &rest).expect("nonzero");
        let h = rest.gcd(&(&xp + &x));
        if h.degree().unwrap_or(0) > 0 {
            rest = rest.exact_div(&h).expect("gcd divides");
            xp = xp.rem(&rest).expect("nonzero");
            out.push((i, h));
        }
        i += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((d, rest));
    }
    out
}

/// Smallest `e >= 1` with `P | X^e + 1`; requires `P(0) = 1`.
pub fn poly_order(p: &BinPoly) -> Result<u64> {
    if !p.coeff(0) {
        return Err(Error::ZeroConstantTerm(p.to_string()));
    }
    if p.is_one() {
        return Ok(1);
    }
    let mut parts = Vec::new();
    square_free_parts(p, 1, &mut parts);
    let max_mult = parts.iter().map(|(_, m)| *m).max().unwrap_or(1);
    let mut order = 1u64;
    for (g, _) in &parts {
        for (deg, h) in distinct_degree_parts(g) {
            if deg as u32 > MAX_DEGREE {
                return Err(Error::FieldTooLarge(deg as u64));
            }
            let group = if deg == 64 {
                u64::MAX
            } else {
                (1u64 << deg) - 1
            };
            let mut e = group;
            for (q, _) in arith::factorize(group) {
                while e % q == 0
                    && BinPoly::x().pow_mod((e / q) as u128, &h)? == BinPoly::one().rem(&h)?
                {
                    e /= q;
                }
            }
            order = arith::lcm(order, e);
        }
    }
    Ok(order * max_mult.next_power_of_two())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> BinPoly {
        BinPoly::from_exponents(exps)
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[1, 0]));
        assert_eq!(cyclotomic(3).unwrap(), p(&[2, 1, 0]));
        assert_eq!(cyclotomic(9).unwrap(), p(&[6, 3, 0]));
        assert_eq!(cyclotomic(5).unwrap(), p(&[4, 3, 2, 1, 0]));
        assert!(cyclotomic(4).is_err());
        assert_eq!(cyclotomic_any(4).unwrap(), p(&[2, 0]));
        assert_eq!(cyclotomic_any(6).unwrap(), p(&[2, 1, 0]));
        assert_eq!(cyclotomic_any(12).unwrap(), p(&[4, 2, 0]));
    }

    #[test]
    fn cyclotomic_products_rebuild_xt_plus_one() {
        for t in (1u64..=63).step_by(2) {
            let prod = arith::divisors(t)
                .into_iter()
                .fold(BinPoly::one(), |acc, d| acc * &cyclotomic(d).unwrap());
            assert_eq!(prod, xn_plus_one(t as usize), "t = {t}");
            assert_eq!(
                cyclotomic(t).unwrap().degree(),
                Some(arith::euler_phi(t) as usize)
            );
        }
        for n in 1u64..=40 {
            let prod = arith::divisors(n)
                .into_iter()
                .fold(BinPoly::one(), |acc, d| acc * &cyclotomic_any(d).unwrap());
            assert_eq!(prod, xn_plus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn coset_examples() {
        assert_eq!(
            cyclotomic_cosets(7).unwrap(),
            vec![vec![1, 2, 4], vec![3, 6, 5]]
        );
        assert_eq!(cyclotomic_cosets(1).unwrap(), vec![vec![0]]);
        assert_eq!(cyclotomic_cosets(5).unwrap(), vec![vec![1, 2, 4, 3]]);
        for d in (3u64..=63).step_by(2) {
            let cosets = cyclotomic_cosets(d).unwrap();
            let o = arith::order_of_two(d) as usize;
            assert!(cosets.iter().all(|c| c.len() == o));
            assert_eq!(cosets.len() * o, arith::euler_phi(d) as usize);
        }
    }

    #[test]
    fn factorization_examples() {
        let f3 = factorize_xn_minus_1(3).unwrap();
        let polys: Vec<_> = f3.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![p(&[1, 0]), p(&[2, 1, 0])]);

        let f7 = factorize_xn_minus_1(7).unwrap();
        let mut polys: Vec<_> = f7.factors.iter().map(|f| f.poly.clone()).collect();
        polys.sort_by(|a, b| a.cmp_as_integer(b));
        assert_eq!(polys, vec![p(&[1, 0]), p(&[3, 1, 0]), p(&[3, 2, 0])]);
        assert_eq!(f7.product(), xn_plus_one(7));
        assert_eq!(f7.factors.iter().filter(|f| f.zero_trace).count(), 1);
        // X + 1 is tracked with nonzero trace.
        assert!(!f7.factors[0].zero_trace);

        let f4 = factorize_xn_minus_1(4).unwrap();
        assert_eq!((f4.t, f4.e), (1, 2));
        assert_eq!(f4.factors.len(), 1);
        assert_eq!(f4.factors[0].mult, 4);
    }

    #[test]
    fn factorizations_are_complete_and_irreducible() {
        for n in 1u64..=64 {
            let fac = factorize_xn_minus_1(n).unwrap();
            assert_eq!(fac.product(), xn_plus_one(n as usize), "n = {n}");
            let mut degree_sum = 0;
            for f in &fac.factors {
                assert!(f.poly.is_irreducible());
                assert_eq!(f.poly.degree().unwrap() as u64, arith::order_of_two(f.d));
                degree_sum += f.poly.degree().unwrap() as u64;
            }
            assert_eq!(degree_sum, fac.t);
            for d in arith::divisors(fac.t) {
                let count = fac.factors_of_index(d).count() as u64;
                assert_eq!(count, arith::euler_phi(d) / arith::order_of_two(d));
            }
        }
    }

    fn order_brute(p: &BinPoly) -> u64 {
        (1u64..)
            .find(|&e| p.divides(&xn_plus_one(e as usize)))
            .unwrap()
    }

    #[test]
    fn poly_order_examples() {
        assert_eq!(poly_order(&p(&[1, 0])).unwrap(), 1);
        assert_eq!(poly_order(&p(&[2, 1, 0])).unwrap(), 3);
        assert_eq!(poly_order(&p(&[4, 3, 2, 1, 0])).unwrap(), 5);
        assert_eq!(order_brute(&p(&[4, 3, 2, 1, 0])), 5);
        assert!(poly_order(&p(&[3, 1])).is_err());
    }

    #[test]
    fn poly_order_matches_brute_force() {
        // Every polynomial of degree <= 9 with constant term 1.
        for bits in (3u64..1024).step_by(2) {
            let f = BinPoly::from_u64(bits);
            let e = poly_order(&f).unwrap();
            assert_eq!(e, order_brute(&f), "f = {f}");
        }
    }
}
