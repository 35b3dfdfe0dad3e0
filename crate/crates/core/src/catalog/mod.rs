//! Catalogs of dimensions `k` at which the inverse over GF(2^n) is provably
//! not `k`th order sum-free, and a per-pair classifier combining them.
//!
//! The factor-based catalog `K_n` (degrees of divisors of `X^n + 1` whose
//! reciprocal has no `X` term) subsumes every special construction from
//! cyclotomic products, including the odd-`n` split of `(X^n + 1)/(X + 1)`
//! into two conjugate halves.

mod corollaries;
mod kset;
mod lang_weil;
mod render;
mod status;
mod table1;

pub use corollaries::{cor_c2_enumerate, cor_cc3_enumerate, CorC2Entry, CorCc3Entry, Epsilon};
pub use kset::{compute_kn, IndexChoice, KnReport, Realization};
pub use lang_weil::{
    l_interval, lang_weil_applicable, lang_weil_rounded, large_threshold, small_threshold,
    LangWeil, L_RADIUS, REL_MARGIN,
};
pub use render::{render_table1, render_table2};
pub use status::{
    classify, conjecture_row, conjecture_sweep, conjectured_range, AutoOutcome, Classifier,
    ConjectureRow, Criterion, SearchOptions, StatusVerdict, Verdict,
};
pub use table1::{table1, zero_trace_count_by_factors, zero_trace_count_by_field, CyclotomicRow};
