//! Carry-less 64x64 -> 128 bit multiplication.

/// Portable carry-less product using a 4-bit window table.
pub fn clmul_soft(a: u64, b: u64) -> u128 {
    let mut table = [0u128; 16];
    let a = a as u128;
    for i in 1..16usize {
        table[i] = if i & 1 == 1 {
            table[i - 1] ^ a
        } else {
            table[i >> 1] << 1
        };
    }
    let mut acc = 0u128;
    let mut shift = 60;
    loop {
        acc = (acc << 4) ^ table[((b >> shift) & 0xf) as usize];
        if shift == 0 {
            break;
        }
        shift -= 4;
    }
    acc
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq", enable = "sse2")]
unsafe fn clmul_hw(a: u64, b: u64) -> u128 {
    use core::arch::x86_64::*;
    let va = _mm_set_epi64x(0, a as i64);
    let vb = _mm_set_epi64x(0, b as i64);
    let r = _mm_clmulepi64_si128(va, vb, 0x00);
    let lo = _mm_cvtsi128_si64(r) as u64;
    let hi = _mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)) as u64;
    ((hi as u128) << 64) | lo as u128
}

/// Whether the hardware carry-less multiply instruction is usable.
pub fn hw_available() -> bool {
    #[cfg(target_arch = "x86_64")]
    {
        std::arch::is_x86_feature_detected!("pclmulqdq")
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        false
    }
}

/// Carry-less product, dispatching on `hw` (obtain it once from [`hw_available`]).
#[inline]
pub fn clmul(a: u64, b: u64, hw: bool) -> u128 {
    #[cfg(target_arch = "x86_64")]
    {
        if hw {
            // SAFETY: callers pass `hw = true` only when pclmulqdq was detected.
            return unsafe { clmul_hw(a, b) };
        }
    }
    let _ = hw;
    clmul_soft(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn clmul_bitwise(a: u64, b: u64) -> u128 {
        (0..64)
            .filter(|i| (b >> i) & 1 == 1)
            .fold(0u128, |acc, i| acc ^ ((a as u128) << i))
    }

    #[test]
    fn known_products() {
        assert_eq!(clmul_soft(0b1111, 0b1111), 0b1010101);
        assert_eq!(clmul_soft(u64::MAX, 1), u64::MAX as u128);
        assert_eq!(clmul_soft(1 << 63, 1 << 63), 1u128 << 126);
    }

    proptest! {
        #[test]
        fn soft_matches_bitwise(a: u64, b: u64) {
            prop_assert_eq!(clmul_soft(a, b), clmul_bitwise(a, b));
        }

        #[test]
        fn dispatch_matches_soft(a: u64, b: u64) {
            prop_assert_eq!(clmul(a, b, hw_available()), clmul_soft(a, b));
        }
    }
}
