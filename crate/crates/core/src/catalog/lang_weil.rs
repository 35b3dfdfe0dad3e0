//! Point-counting thresholds beyond which a zero-sum subspace must exist.
//!
//! With `L = log2(1 + sqrt 21)`:
//! * small: `k >= 3` and `n >= (L / 3)(13k - 6)`, giving non-sum-freedom at `k`;
//! * large: `n - k >= 3` and `n <= L (13k + 6) / (13L - 3)`, giving it at `n - k`
//!   (and hence at `k` by duality).
//!
//! `L` is only known to floating-point accuracy, so each side is evaluated
//! at the end of an interval around `L` that makes the inequality hardest,
//! with a further relative margin, and a predicate is reported true only if
//! it holds there.

use serde::{Deserialize, Serialize};

/// Half-width of the interval assumed to contain `log2(1 + sqrt 21)`.
pub const L_RADIUS: f64 = 1e-10;
/// Extra relative slack on every threshold comparison.
pub const REL_MARGIN: f64 = 1e-12;

/// Lower and upper end of an interval containing `log2(1 + sqrt 21)`.
pub fn l_interval() -> (f64, f64) {
    let l = (1.0 + 21f64.sqrt()).log2();
    (l - L_RADIUS, l + L_RADIUS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LangWeil {
    pub small: bool,
    pub large: bool,
}

/// Lower bound on `n` for the small-`k` criterion, valid for every `L` in the interval.
pub fn small_threshold(k: u64) -> f64 {
    let (_, hi) = l_interval();
    hi / 3.0 * (13.0 * k as f64 - 6.0) * (1.0 + REL_MARGIN)
}

/// Upper bound on `n` for the large-`k` criterion. `L / (13L - 3)` decreases
/// in `L`, so the upper end of the interval is the conservative choice.
pub fn large_threshold(k: u64) -> f64 {
    let (_, hi) = l_interval();
    hi / (13.0 * hi - 3.0) * (13.0 * k as f64 + 6.0) * (1.0 - REL_MARGIN)
}

pub fn lang_weil_applicable(n: u64, k: u64) -> LangWeil {
    let small = k >= 3 && n as f64 >= small_threshold(k);
    let large = n >= k + 3 && n as f64 <= large_threshold(k);
    LangWeil { small, large }
}

/// The coarser integer-friendly forms `n >= 10.8k - 5` and `n <= 1.1k + 0.5`.
pub fn lang_weil_rounded(n: u64, k: u64) -> LangWeil {
    let (n10, k10) = (10 * n as i64, k as i64);
    LangWeil {
        small: k >= 3 && n10 >= 108 * k10 - 50,
        large: n >= k + 3 && n10 <= 11 * k10 + 5,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_threshold_is_28() {
        assert!(!lang_weil_applicable(27, 3).small);
        assert!(lang_weil_applicable(28, 3).small);
        assert!(lang_weil_applicable(100, 3).small);
        assert!(!lang_weil_applicable(10_000, 2).small);
    }

    #[test]
    fn rounded_forms_imply_exact() {
        for k in 0..=50u64 {
            for n in 1..=600u64 {
                let r = lang_weil_rounded(n, k);
                let e = lang_weil_applicable(n, k);
                assert!(!r.small || e.small, "small n={n} k={k}");
                assert!(!r.large || e.large, "large n={n} k={k}");
            }
        }
    }
}
