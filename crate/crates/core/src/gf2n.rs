//! Arithmetic in GF(2^n) for 2 <= n <= 64, polynomial basis.
//!
//! Elements are `n`-bit words; bit `i` is the coefficient of `X^i`. A
//! [`FieldCtx`] is immutable once built and every operation is a pure
//! function of the context and its inputs.

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binpoly::BinPoly;
use crate::clmul;
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, XorBasis};

pub const MAX_DEGREE: u32 = 64;

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(pub u64);

impl FieldElem {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("0x");
        u64::from_str_radix(t, 16)
            .map(Self)
            .map_err(|_| Error::InvalidHex(s.to_string()))
    }
}

impl std::ops::Add for FieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FieldElem::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldCtx {
    n: u32,
    // Full modulus including the X^n bit.
    modulus: u128,
    // modulus - X^n
    tail: u64,
    mask: u64,
    hw: bool,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:x}", self.n, self.modulus)
    }
}

static DEFAULT_MODULI: [OnceLock<u128>; MAX_DEGREE as usize + 1] =
    [const { OnceLock::new() }; MAX_DEGREE as usize + 1];

/// The lexicographically smallest irreducible polynomial of degree `n`
/// (coefficient vector compared as an integer).
pub fn default_modulus(n: u32) -> Result<BinPoly> {
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    let bits = *DEFAULT_MODULI[n as usize].get_or_init(|| {
        // Irreducibles of degree >= 2 have constant term 1, so odd candidates only.
        let top = 1u128 << n;
        (0..top)
            .step_by(2)
            .map(|low| top | low | 1)
            .find(|&cand| BinPoly::from_u128(cand).is_irreducible())
            .expect("an irreducible polynomial exists in every degree")
    });
    Ok(BinPoly::from_u128(bits))
}

impl FieldCtx {
    /// Builds GF(2^n) with the given modulus, or the default modulus.
    pub fn new(n: u32, modulus: Option<&BinPoly>) -> Result<Self> {
        if !(2..=MAX_DEGREE).contains(&n) {
            return Err(Error::DegreeOutOfRange(n));
        }
        let modulus = match modulus {
            None => default_modulus(n)?,
            Some(m) => {
                if m.degree() != Some(n as usize) {
                    return Err(Error::DegreeMismatch {
                        expected: n,
                        found: m.degree(),
                    });
                }
                if !m.is_irreducible() {
                    return Err(Error::ReducibleModulus(m.to_string()));
                }
                m.clone()
            }
        };
        let bits = modulus.to_u128().expect("degree <= 64 fits in u128");
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Self {
            n,
            modulus: bits,
            tail: (bits & mask as u128) as u64,
            mask,
            hw: clmul::hw_available(),
        })
    }

    /// GF(2^n) with the default modulus.
    pub fn with_degree(n: u32) -> Result<Self> {
        Self::new(n, None)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of field elements as `u128` (2^n).
    pub fn order(&self) -> u128 {
        1u128 << self.n
    }

    pub fn modulus(&self) -> BinPoly {
        BinPoly::from_u128(self.modulus)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn elem(&self, bits: u64) -> Result<FieldElem> {
        if bits & !self.mask != 0 {
            return Err(Error::ElementOutOfRange {
                value: bits,
                n: self.n,
            });
        }
        Ok(FieldElem(bits))
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 & !self.mask == 0
    }

    /// The class of `X`, i.e. the element with bits `0b10`.
    pub fn generator_x(&self) -> FieldElem {
        FieldElem(2)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen::<u64>() & self.mask)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        a + b
    }

    #[inline]
    fn reduce(&self, mut p: u128) -> u64 {
        loop {
            let hi = p >> self.n;
            if hi == 0 {
                return p as u64;
            }
            p = (p & self.mask as u128) ^ clmul::clmul(hi as u64, self.tail, self.hw);
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.reduce(clmul::clmul(a.0, b.0, self.hw)))
    }

    #[inline]
    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// `a^e` by square-and-multiply; `a^0 = 1` (including `0^0`).
    pub fn pow(&self, a: FieldElem, mut e: u128) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// The inverse map `x -> x^(2^n - 2)`: the field inverse, with `0 -> 0`.
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        self.inv_euclid(a)
    }

    /// `x^(2^n - 2)` by exponentiation.
    pub fn inv_pow(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.order() - 2)
    }

    /// Inverse by the binary extended Euclidean algorithm on GF(2)[X].
    pub fn inv_euclid(&self, a: FieldElem) -> FieldElem {
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let deg = |x: u128| 127 - x.leading_zeros() as i32;
        let (mut u, mut v) = (a.0 as u128, self.modulus);
        let (mut g1, mut g2) = (1u128, 0u128);
        // Invariant: g1 * a = u and g2 * a = v (mod modulus).
        while u != 1 {
            let mut j = deg(u) - deg(v);
            if j < 0 {
                std::mem::swap(&mut u, &mut v);
                std::mem::swap(&mut g1, &mut g2);
                j = -j;
            }
            u ^= v << j;
            g1 ^= g2 << j;
        }
        FieldElem(self.reduce(g1))
    }

    /// `a / b`, with division by zero following the `0 -> 0` inverse convention.
    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b))
    }

    /// `a^(2^i)`; `i` is reduced modulo `n`.
    pub fn frobenius(&self, a: FieldElem, i: u64) -> FieldElem {
        let mut x = a;
        for _ in 0..(i % self.n as u64) {
            x = self.square(x);
        }
        x
    }

    /// The conjugates `a, a^2, ..., a^(2^(n-1))`.
    pub fn conjugates(&self, a: FieldElem) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut x = a;
        for _ in 0..self.n {
            out.push(x);
            x = self.square(x);
        }
        out
    }

    /// Relative trace `Tr_{2^n / 2^l}(a) = sum_{i < n/l} a^(2^(l i))`.
    pub fn rel_trace(&self, a: FieldElem, l: u32) -> Result<FieldElem> {
        if l == 0 || self.n % l != 0 {
            return Err(Error::NotADivisor { l, n: self.n });
        }
        let mut acc = FieldElem::ZERO;
        let mut x = a;
        for _ in 0..self.n / l {
            acc += x;
            for _ in 0..l {
                x = self.square(x);
            }
        }
        Ok(acc)
    }

    /// Absolute trace to GF(2), as a bit.
    pub fn trace(&self, a: FieldElem) -> bool {
        self.rel_trace(a, 1).expect("1 divides n").0 == 1
    }

    /// Whether `a` lies in the subfield GF(2^l) (`a^(2^l) = a`).
    pub fn in_subfield(&self, a: FieldElem, l: u32) -> bool {
        let mut x = a;
        for _ in 0..l {
            x = self.square(x);
        }
        x == a
    }

    pub fn is_normal(&self, a: FieldElem) -> bool {
        let mut basis = XorBasis::new();
        self.conjugates(a).into_iter().all(|c| basis.insert(c.0))
    }

    /// The smallest element (as an integer) whose conjugates form a basis.
    pub fn find_normal_element(&self) -> FieldElem {
        (1..=self.mask)
            .map(FieldElem)
            .find(|&a| self.is_normal(a))
            .expect("every finite field has a normal element")
    }

    /// `(g(sigma))(x) = sum_{g_i = 1} x^(2^i)`, with `sigma` the Frobenius.
    pub fn apply_sigma_poly(&self, g: &BinPoly, x: FieldElem) -> FieldElem {
        let conj = self.conjugates(x);
        g.support()
            .fold(FieldElem::ZERO, |acc, e| acc + conj[e % self.n as usize])
    }

    /// Matrix of a GF(2)-linear map of the field, built from images of `X^j`.
    pub fn linear_map(&self, f: impl Fn(FieldElem) -> FieldElem) -> LinearMap {
        let cols = (0..self.n).map(|j| f(FieldElem(1 << j)).0).collect();
        LinearMap::from_columns(cols, self.n)
    }

    /// A GF(2)-basis of the subfield GF(2^l), as the kernel of `x^(2^l) + x`.
    pub fn subfield_basis(&self, l: u32) -> Result<Vec<FieldElem>> {
        if l == 0 || self.n % l != 0 {
            return Err(Error::NotADivisor { l, n: self.n });
        }
        let map = self.linear_map(|x| self.frobenius(x, l as u64) + x);
        Ok(map.kernel().into_iter().map(FieldElem).collect())
    }

    /// All elements `0, 1, ..., 2^n - 1`; only sensible for small `n`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..=self.mask).map(FieldElem)
    }
}
