use serde::{Deserialize, Serialize};

use crate::arith;
use crate::binpoly::{cyclotomic_factors, has_zero_trace, root_of_unity};
use crate::error::{Error, Result};
use crate::gf2n::{FieldCtx, FieldElem, MAX_DEGREE};

// Up to this degree the whole field is scanned for elements of order d;
// above it only the powers of a primitive d-th root of unity are visited.
const FULL_SCAN_MAX_L: u64 = 20;

/// Per-index data for the irreducible factors of `Phi_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicRow {
    pub d: u64,
    /// Multiplicative order of 2 mod `d`: the degree of every factor.
    pub o: u64,
    /// `phi(d) / o`: the number of factors.
    pub cnt: u64,
    /// How many factors have zero trace (vanishing `X^(o-1)` coefficient).
    #[serde(rename = "Nd")]
    pub nd: u64,
}

/// `N_d` by factoring `Phi_d` and counting zero-trace factors.
pub fn zero_trace_count_by_factors(d: u64) -> Result<u64> {
    Ok(cyclotomic_factors(d)?
        .iter()
        .filter(|f| has_zero_trace(f))
        .count() as u64)
}

/// `N_d = |{x in GF(2^l) : o(x) = d, Tr(x) = 0}| / l` with `l = o_d(2)`.
pub fn zero_trace_count_by_field(d: u64) -> Result<u64> {
    if d % 2 == 0 || d == 0 {
        return Err(Error::InvalidCyclotomicIndex(d));
    }
    if d == 1 {
        // The only element of order 1 is 1, and Tr_{2/2}(1) = 1.
        return Ok(0);
    }
    let l = arith::order_of_two(d);
    if l > MAX_DEGREE as u64 {
        return Err(Error::FieldTooLarge(l));
    }
    let field = FieldCtx::with_degree(l as u32)?;
    let primes: Vec<u64> = arith::factorize(d).into_iter().map(|(p, _)| p).collect();
    let has_order_d = |x: FieldElem| {
        field.pow(x, d as u128) == FieldElem::ONE
            && primes
                .iter()
                .all(|&p| field.pow(x, (d / p) as u128) != FieldElem::ONE)
    };
    let count = if l <= FULL_SCAN_MAX_L {
        field
            .elements()
            .skip(1)
            .filter(|&x| !field.trace(x) && has_order_d(x))
            .count() as u64
    } else {
        let zeta = root_of_unity(&field, d);
        (1..d)
            .filter(|&j| arith::gcd(j, d) == 1)
            .map(|j| field.pow(zeta, j as u128))
            .filter(|&x| !field.trace(x))
            .count() as u64
    };
    if count % l != 0 {
        return Err(Error::IdentityViolation(format!(
            "{count} zero-trace elements of order {d} is not a multiple of {l}"
        )));
    }
    Ok(count / l)
}

/// One row per odd `d <= d_max`; errors if the two `N_d` computations disagree.
pub fn table1(d_max: u64) -> Result<Vec<CyclotomicRow>> {
    (1..=d_max)
        .step_by(2)
        .map(|d| {
            let o = arith::order_of_two(d);
            let cnt = arith::euler_phi(d) / o;
            let nd = zero_trace_count_by_factors(d)?;
            let alt = zero_trace_count_by_field(d)?;
            if nd != alt {
                return Err(Error::IdentityViolation(format!(
                    "N_{d}: factor count {nd} but field count {alt}"
                )));
            }
            Ok(CyclotomicRow { d, o, cnt, nd })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selected_rows() {
        let rows = table1(31).unwrap();
        assert_eq!(rows.len(), 16);
        let row = |d: u64| rows.iter().find(|r| r.d == d).unwrap().clone();
        assert_eq!(
            row(1),
            CyclotomicRow {
                d: 1,
                o: 1,
                cnt: 1,
                nd: 0
            }
        );
        assert_eq!(
            row(7),
            CyclotomicRow {
                d: 7,
                o: 3,
                cnt: 2,
                nd: 1
            }
        );
        assert_eq!(
            row(31),
            CyclotomicRow {
                d: 31,
                o: 5,
                cnt: 6,
                nd: 3
            }
        );
        for r in &rows {
            assert_eq!(r.o * r.cnt, arith::euler_phi(r.d));
            assert!(r.nd <= r.cnt);
        }
    }

    #[test]
    fn routes_agree_beyond_the_table() {
        for d in [33u64, 35, 41, 43, 45, 51, 63, 73, 85, 127] {
            assert_eq!(
                zero_trace_count_by_factors(d).unwrap(),
                zero_trace_count_by_field(d).unwrap(),
                "d = {d}"
            );
        }
    }
}
