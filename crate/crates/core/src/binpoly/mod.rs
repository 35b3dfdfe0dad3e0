//! The polynomial ring GF(2)[X].
//!
//! A [`BinPoly`] is a bitvector of coefficients (bit `i` is the coefficient
//! of `X^i`) stored in little-endian 64-bit limbs with no trailing zero limb,
//! so the zero polynomial is the empty vector and equality is structural.

mod cyclotomic;

pub(crate) use cyclotomic::root_of_unity;
pub use cyclotomic::{
    cyclotomic, cyclotomic_any, cyclotomic_cosets, cyclotomic_factors, factorize_xn_minus_1,
    has_zero_trace, poly_order, xn_plus_one, FactorEntry, FactorizationOfXnMinus1,
};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::clmul::clmul_soft;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    limbs: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::from_u64(2)
    }

    pub fn monomial(i: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(i, true);
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_u128(bits: u128) -> Self {
        Self::from_limbs(vec![bits as u64, (bits >> 64) as u64])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    /// Builds `sum X^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip_coeff(e);
        }
        p
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn to_u128(&self) -> Option<u128> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0] as u128),
            2 => Some(self.limbs[0] as u128 | (self.limbs[1] as u128) << 64),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|limb| (limb >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        if self.coeff(i) != value {
            self.flip_coeff(i);
        }
    }

    fn flip_coeff(&mut self, i: usize) {
        if self.limbs.len() <= i / 64 {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1 << (i % 64);
        self.normalize();
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(w, &limb)| {
            let mut bits = limb;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    fn xor_shifted(&mut self, other: &Self, s: usize) {
        let (words, bits) = (s / 64, s % 64);
        let need = other.limbs.len() + words + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &limb) in other.limbs.iter().enumerate() {
            self.limbs[i + words] ^= limb << bits;
            if bits != 0 {
                self.limbs[i + words + 1] ^= limb >> (64 - bits);
            }
        }
        self.normalize();
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            quo.flip_coeff(s);
            rem.xor_shifted(divisor, s);
        }
        Ok((quo, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.rem(self), Ok(r) if r.is_zero())
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotAFactor(divisor.to_string()));
        }
        Ok(q)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one().rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `X^(2^i) mod modulus` by `i` successive squarings.
    pub fn x_pow_two_pow_mod(i: usize, modulus: &Self) -> Result<Self> {
        let mut acc = Self::x().rem(modulus)?;
        for _ in 0..i {
            acc = acc.mul_mod(&acc, modulus)?;
        }
        Ok(acc)
    }

    /// Formal derivative; in characteristic 2 only odd exponents survive.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for e in self.support().filter(|e| e % 2 == 1) {
            out.flip_coeff(e - 1);
        }
        out
    }

    /// Square root of a polynomial with only even exponents.
    pub fn sqrt(&self) -> Option<Self> {
        let mut out = Self::zero();
        for e in self.support() {
            if e % 2 == 1 {
                return None;
            }
            out.flip_coeff(e / 2);
        }
        Some(out)
    }

    /// Reciprocal `X^deg * f(1/X)`; the zero polynomial maps to itself.
    pub fn reverse(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        for e in self.support() {
            out.flip_coeff(d - e);
        }
        out
    }

    /// `f(X^s)`.
    pub fn compose_monomial(&self, s: usize) -> Self {
        let mut out = Self::zero();
        for e in self.support() {
            out.flip_coeff(e * s);
        }
        out
    }

    /// Irreducibility over GF(2) (Rabin's test).
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        if !self.coeff(0) {
            return false;
        }
        let x = Self::x();
        // X^(2^j) mod f for j = 0..=d.
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.clone());
        for j in 0..d {
            let next = frob[j].mul_mod(&frob[j], self).expect("nonzero modulus");
            frob.push(next);
        }
        if frob[d] != x {
            return false;
        }
        arith::factorize(d as u64).into_iter().all(|(p, _)| {
            let diff = &frob[d / p as usize] + &x;
            self.gcd(&diff).is_one()
        })
    }

    /// Lowercase hex of the coefficient bitvector ("0" for the zero polynomial).
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = format!("{:x}", self.limbs.last().unwrap());
        for limb in self.limbs.iter().rev().skip(1) {
            s.push_str(&format!("{limb:016x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("0x");
        if t.is_empty() || !t.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(Error::InvalidHex(s.to_string()));
        }
        let bytes = t.as_bytes();
        let mut limbs = Vec::new();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&bytes[start..end]).expect("ascii");
            limbs.push(
                u64::from_str_radix(chunk, 16).map_err(|_| Error::InvalidHex(s.to_string()))?,
            );
            end = start;
        }
        Ok(Self::from_limbs(limbs))
    }

    /// Compares coefficient vectors as integers.
    pub fn cmp_as_integer(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl Add for &BinPoly {
    type Output = BinPoly;
    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BinPoly> for BinPoly {
    fn add_assign(&mut self, rhs: &BinPoly) {
        if self.limbs.len() < rhs.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (a, b) in self.limbs.iter_mut().zip(&rhs.limbs) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        if self.is_zero() || rhs.is_zero() {
            return BinPoly::zero();
        }
        let mut out = vec![0u64; self.limbs.len() + rhs.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.limbs.iter().enumerate() {
                let p = clmul_soft(a, b);
                out[i + j] ^= p as u64;
                out[i + j + 1] ^= (p >> 64) as u64;
            }
        }
        BinPoly::from_limbs(out)
    }
}

impl Mul<&BinPoly> for BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        &self * rhs
    }
}

impl fmt::Display for BinPoly {
    /// Human-readable form such as `X^3 + X + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let exps: Vec<usize> = self.support().collect();
        let terms: Vec<String> = exps
            .iter()
            .rev()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "X".to_string(),
                _ => format!("X^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({})", self)
    }
}

impl Serialize for BinPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for BinPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BinPoly::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(exps: &[usize]) -> BinPoly {
        BinPoly::from_exponents(exps)
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(BinPoly::zero().degree(), None);
        assert_eq!(BinPoly::one().degree(), Some(0));
        assert_eq!(p(&[130, 1]).degree(), Some(130));
        assert_eq!(p(&[3, 3]), BinPoly::zero());
    }

    #[test]
    fn ring_examples() {
        // gcd(X^2+1, X+1) = X+1
        assert_eq!(p(&[2, 0]).gcd(&p(&[1, 0])), p(&[1, 0]));
        // (X^3+1) / (X+1) = X^2+X+1 remainder 0
        let (q, r) = p(&[3, 0]).divrem(&p(&[1, 0])).unwrap();
        assert_eq!(q, p(&[2, 1, 0]));
        assert!(r.is_zero());
        assert!((&p(&[5, 2, 0]) * &BinPoly::zero()).is_zero());
        assert_eq!(p(&[2]).divrem(&BinPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(p(&[2, 1, 0]).is_irreducible());
        assert!(!p(&[2, 0]).is_irreducible());
        assert!(p(&[1]).is_irreducible());
        assert!(!p(&[0]).is_irreducible());
        assert!(p(&[64, 4, 3, 1, 0]).is_irreducible());
    }

    #[test]
    fn x5_x2_1_irreducible_by_trial_division() {
        // Oracle: no divisor among all polynomials of degree 1 and 2.
        let f = p(&[5, 2, 0]);
        let has_small_factor = (2u64..8).any(|bits| BinPoly::from_u64(bits).divides(&f));
        assert!(!has_small_factor);
        assert!(f.is_irreducible());
    }

    #[test]
    fn hex_round_trip_examples() {
        assert_eq!(p(&[3, 1, 0]).to_hex(), "b");
        assert_eq!(BinPoly::from_hex("b").unwrap(), p(&[3, 1, 0]));
        let big = p(&[64, 4, 3, 1, 0]);
        assert_eq!(big.to_hex(), "1000000000000001b");
        assert_eq!(BinPoly::from_hex(&big.to_hex()).unwrap(), big);
        assert!(BinPoly::from_hex("xyz").is_err());
        assert_eq!(format!("{}", p(&[3, 1, 0])), "X^3 + X + 1");
    }

    #[test]
    fn reverse_and_compose() {
        assert_eq!(p(&[3, 1, 0]).reverse(), p(&[3, 2, 0]));
        assert_eq!(p(&[1, 0]).compose_monomial(3), p(&[3, 0]));
        assert_eq!(p(&[3, 1]).derivative(), p(&[2, 0]));
        assert_eq!(p(&[4, 0]).sqrt(), Some(p(&[2, 0])));
    }

    fn arb_poly() -> impl Strategy<Value = BinPoly> {
        prop::collection::vec(any::<u64>(), 0..3).prop_map(BinPoly::from_limbs)
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(&(&q * &b) + &r, a);
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn hex_round_trip(a in arb_poly()) {
            prop_assert_eq!(BinPoly::from_hex(&a.to_hex()).unwrap(), a);
        }
    }
}
