use serde::{Deserialize, Serialize};

use crate::arith::{self, gaussian_binomial};
use crate::error::{Error, Result};
use crate::gf2n::FieldCtx;
use crate::witness::{
    witness_even_direct, witness_from_factor, witness_lift, witness_scan3,
    witness_search_exhaustive, witness_search_random, witness_subfield, Certificate,
    ExhaustiveOutcome, SumFreeReport,
};

use super::kset::{compute_kn, KnReport};
use super::lang_weil::lang_weil_applicable;

/// Search knobs shared by the classifier and the automatic witness finder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub seed: u64,
    /// Number of random `v'` draws.
    pub budget: u64,
    /// Largest subspace count an exhaustive search may visit.
    pub exhaustive_cap: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            budget: 4096,
            exhaustive_cap: 1 << 20,
        }
    }
}

/// Known reasons for (non-)sum-freedom at `(n, k)`, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `k = 1` (the inverse is a bijection) or `k = n - 1` (its dual).
    Bijective,
    /// `k = 2` or `n - 2` with `n` odd: the inverse is APN for odd `n`.
    ApnOddDegree,
    /// `n` even and `2 <= k <= n - 2`: subfield, lift and duality chain.
    EvenDegree,
    /// `k` or `n - k` is the degree of a divisor of `X^n + 1` without `X` term.
    FactorDegree,
    /// `gcd(k, n) > 1`.
    CommonDivisor,
    /// `k` or `n - k` equals 3 and `n >= 6`.
    DimensionThree,
    /// Point-counting bound for large `n` relative to `k`.
    LangWeilSmall,
    /// Point-counting bound applied to `n - k`.
    LangWeilLarge,
    /// A witness found by random search.
    RandomSearch,
    /// Complete enumeration of `k`-subspaces.
    ExhaustiveSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotSumFree {
        criterion: Criterion,
        detail: String,
        /// A certificate at `k`, when one was built.
        certificate: Option<Certificate>,
        /// A certificate at `n - k`, attached when the argument goes through duality.
        dual_certificate: Option<Certificate>,
    },
    SumFree {
        criterion: Criterion,
        detail: String,
    },
    Unknown {
        detail: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusVerdict {
    pub n: u32,
    pub k: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub criteria_fired: Vec<Criterion>,
}

impl StatusVerdict {
    pub fn is_not_sum_free(&self) -> bool {
        matches!(self.verdict, Verdict::NotSumFree { .. })
    }

    pub fn is_sum_free(&self) -> bool {
        matches!(self.verdict, Verdict::SumFree { .. })
    }

    pub fn label(&self) -> &'static str {
        match self.verdict {
            Verdict::NotSumFree { .. } => "NOT_SUM_FREE",
            Verdict::SumFree { .. } => "SUM_FREE",
            Verdict::Unknown { .. } => "UNKNOWN",
        }
    }
}

/// Outcome of [`find_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutoOutcome {
    Certificate(Certificate),
    SumFree(SumFreeReport),
    Unknown,
}

/// Everything needed to reason about one field: the context and `K_n`.
pub struct Classifier {
    ctx: FieldCtx,
    kn: KnReport,
    opts: SearchOptions,
}

impl Classifier {
    pub fn new(n: u32, opts: SearchOptions) -> Result<Self> {
        let ctx = FieldCtx::with_degree(n)?;
        let kn = compute_kn(n as u64)?;
        Ok(Self { ctx, kn, opts })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn kn(&self) -> &KnReport {
        &self.kn
    }

    fn n(&self) -> usize {
        self.ctx.n() as usize
    }

    /// The factor-based certificate at `k`, if `k` is in `K_n`.
    pub fn factor_certificate(&self, k: usize) -> Result<Option<Certificate>> {
        match self.kn.realization(k) {
            Some(r) => witness_from_factor(&self.ctx, &r.reversed).map(Some),
            None => Ok(None),
        }
    }

    // GF(2^p) lifted by GF(2^p) until dimension k, with p the smallest prime of gcd(k, n).
    fn common_divisor_certificate(&self, k: usize) -> Result<Option<Certificate>> {
        let n = self.n();
        let g = arith::gcd(k as u64, n as u64);
        if g <= 1 {
            return Ok(None);
        }
        if n % k == 0 {
            return witness_subfield(&self.ctx, k as u32).map(Some);
        }
        let p = arith::factorize(g)[0].0 as usize;
        if k - p >= n / p {
            return Ok(None);
        }
        let mut cert = witness_subfield(&self.ctx, p as u32)?;
        while cert.k < k {
            cert = witness_lift(&self.ctx, &cert, p as u32)?;
        }
        Ok(Some(cert))
    }

    /// A certificate at `k` by the cheapest route that applies: subfield,
    /// factor, even-degree chain, 3-dimensional scan, random search, then
    /// exhaustive search under the cap (which may prove sum-freedom).
    pub fn find_certificate(&self, k: usize) -> Result<AutoOutcome> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::DimensionOutOfRange { k, n: n as u32 });
        }
        if k >= 2 && n % k == 0 {
            return witness_subfield(&self.ctx, k as u32).map(AutoOutcome::Certificate);
        }
        if let Some(c) = self.factor_certificate(k)? {
            return Ok(AutoOutcome::Certificate(c));
        }
        if n % 2 == 0 && (2..=(n / 2 + 1).min(n - 2)).contains(&k) {
            return witness_even_direct(&self.ctx, k).map(AutoOutcome::Certificate);
        }
        if let Some(c) = self.common_divisor_certificate(k)? {
            return Ok(AutoOutcome::Certificate(c));
        }
        if k == 3 && n >= 6 {
            return witness_scan3(&self.ctx).map(AutoOutcome::Certificate);
        }
        if k >= 2 {
            if let Some(c) = witness_search_random(&self.ctx, k, self.opts.seed, self.opts.budget)?
            {
                return Ok(AutoOutcome::Certificate(c));
            }
        }
        if gaussian_binomial(n as u32, k as u32) <= self.opts.exhaustive_cap {
            return Ok(
                match witness_search_exhaustive(&self.ctx, k, self.opts.exhaustive_cap)? {
                    ExhaustiveOutcome::Found(c) => AutoOutcome::Certificate(c),
                    ExhaustiveOutcome::SumFree(r) => AutoOutcome::SumFree(r),
                },
            );
        }
        Ok(AutoOutcome::Unknown)
    }

    fn certificate_or_none(&self, k: usize) -> Result<Option<Certificate>> {
        Ok(match self.find_certificate(k)? {
            AutoOutcome::Certificate(c) => Some(c),
            _ => None,
        })
    }

    /// Every criterion whose hypotheses hold at `(n, k)`.
    pub fn criteria(&self, k: usize) -> Vec<Criterion> {
        let n = self.n();
        let dual = n - k;
        let mut out = Vec::new();
        if k == 1 || (n >= 2 && k == n - 1) {
            out.push(Criterion::Bijective);
        }
        if n % 2 == 1 && (k == 2 || dual == 2) {
            out.push(Criterion::ApnOddDegree);
        }
        if n % 2 == 0 && (2..=n.saturating_sub(2)).contains(&k) {
            out.push(Criterion::EvenDegree);
        }
        if self.kn.contains(k) || self.kn.contains(dual) {
            out.push(Criterion::FactorDegree);
        }
        if arith::gcd(k as u64, n as u64) > 1 {
            out.push(Criterion::CommonDivisor);
        }
        if n >= 6 && (k == 3 || dual == 3) {
            out.push(Criterion::DimensionThree);
        }
        let lw = lang_weil_applicable(n as u64, k as u64);
        if lw.small {
            out.push(Criterion::LangWeilSmall);
        }
        if lw.large {
            out.push(Criterion::LangWeilLarge);
        }
        out
    }

    fn not_sum_free(
        &self,
        k: usize,
        criterion: Criterion,
        detail: String,
        direct: Option<Certificate>,
    ) -> Result<Verdict> {
        let dual = if direct.is_none() && k < self.n() {
            self.certificate_or_none(self.n() - k)?
        } else {
            None
        };
        Ok(Verdict::NotSumFree {
            criterion,
            detail,
            certificate: direct,
            dual_certificate: dual,
        })
    }

    pub fn classify(&self, k: usize) -> Result<StatusVerdict> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::DimensionOutOfRange { k, n: n as u32 });
        }
        let fired = self.criteria(k);
        let has = |c: Criterion| fired.contains(&c);
        let dual = n - k;
        let direct_if = |ok: bool| -> Result<Option<Certificate>> {
            if ok {
                self.certificate_or_none(k)
            } else {
                Ok(None)
            }
        };

        let verdict = if has(Criterion::Bijective) {
            Verdict::SumFree {
                criterion: Criterion::Bijective,
                detail: if k == 1 {
                    "nonzero x has nonzero inverse".into()
                } else {
                    format!("dual of k = 1 (k = n - 1 = {k})")
                },
            }
        } else if has(Criterion::ApnOddDegree) {
            Verdict::SumFree {
                criterion: Criterion::ApnOddDegree,
                detail: format!(
                    "inverse is APN for odd n = {n}{}",
                    if k == 2 { "" } else { ", by duality" }
                ),
            }
        } else if has(Criterion::EvenDegree) {
            let direct = direct_if(k <= n / 2 + 1)?;
            self.not_sum_free(
                k,
                Criterion::EvenDegree,
                format!("n = {n} even and 2 <= {k} <= n - 2"),
                direct,
            )?
        } else if has(Criterion::FactorDegree) {
            let (detail, direct) = if self.kn.contains(k) {
                (format!("{k} in K_{n}"), self.factor_certificate(k)?)
            } else {
                (format!("n - k = {dual} in K_{n}"), None)
            };
            self.not_sum_free(k, Criterion::FactorDegree, detail, direct)?
        } else if has(Criterion::CommonDivisor) {
            let g = arith::gcd(k as u64, n as u64);
            let direct = match self.common_divisor_certificate(k)? {
                Some(c) => Some(c),
                None => self.certificate_or_none(k)?,
            };
            self.not_sum_free(
                k,
                Criterion::CommonDivisor,
                format!("gcd({k}, {n}) = {g}"),
                direct,
            )?
        } else if has(Criterion::DimensionThree) {
            let direct = direct_if(k == 3)?;
            self.not_sum_free(
                k,
                Criterion::DimensionThree,
                format!(
                    "{} = 3 and n = {n} >= 6",
                    if k == 3 { "k" } else { "n - k" }
                ),
                direct,
            )?
        } else if has(Criterion::LangWeilSmall) || has(Criterion::LangWeilLarge) {
            let criterion = if has(Criterion::LangWeilSmall) {
                Criterion::LangWeilSmall
            } else {
                Criterion::LangWeilLarge
            };
            let direct = if k >= 2 {
                witness_search_random(&self.ctx, k, self.opts.seed, self.opts.budget)?
            } else {
                None
            };
            Verdict::NotSumFree {
                criterion,
                detail: format!("point-counting threshold holds at (n, k) = ({n}, {k})"),
                certificate: direct,
                dual_certificate: None,
            }
        } else {
            match self.find_certificate(k)? {
                AutoOutcome::Certificate(c) => {
                    let criterion = match c.method {
                        crate::witness::Method::Exhaustive { .. } => Criterion::ExhaustiveSearch,
                        _ => Criterion::RandomSearch,
                    };
                    Verdict::NotSumFree {
                        criterion,
                        detail: format!("witness via {}", c.method.name()),
                        certificate: Some(c),
                        dual_certificate: None,
                    }
                }
                AutoOutcome::SumFree(r) => Verdict::SumFree {
                    criterion: Criterion::ExhaustiveSearch,
                    detail: format!("all {} subspaces enumerated", r.enumerated),
                },
                AutoOutcome::Unknown => Verdict::Unknown {
                    detail: format!(
                        "no criterion applies and {} random draws found no witness",
                        self.opts.budget
                    ),
                },
            }
        };

        if let Verdict::SumFree { .. } = verdict {
            if let Some(c) = fired
                .iter()
                .find(|c| !matches!(c, Criterion::Bijective | Criterion::ApnOddDegree))
            {
                return Err(Error::IdentityViolation(format!(
                    "({n}, {k}) classified sum-free but {c:?} also applies"
                )));
            }
        }
        Ok(StatusVerdict {
            n: n as u32,
            k,
            verdict,
            criteria_fired: fired,
        })
    }
}

/// Classifies a single pair.
pub fn classify(n: u32, k: usize, opts: SearchOptions) -> Result<StatusVerdict> {
    Classifier::new(n, opts)?.classify(k)
}

/// The dimensions where non-sum-freedom is conjectured: `2..=n-2` for even
/// `n`, `3..=n-3` for odd `n`.
pub fn conjectured_range(n: usize) -> std::ops::RangeInclusive<usize> {
    if n % 2 == 0 {
        2..=n.saturating_sub(2)
    } else {
        3..=n.saturating_sub(3)
    }
}

/// Verdicts for every `k` at one `n`, compared with the conjectured pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: u32,
    pub not_sum_free: Vec<usize>,
    pub sum_free: Vec<usize>,
    pub unknown: Vec<usize>,
    /// No sum-free `k` inside the conjectured range and no non-sum-free `k`
    /// outside it (other than `k = n`).
    pub consistent: bool,
    /// Every `k` in the conjectured range is settled as non-sum-free.
    pub confirmed: bool,
}

pub fn conjecture_row(n: u32, opts: SearchOptions) -> Result<ConjectureRow> {
    let c = Classifier::new(n, opts)?;
    let nn = n as usize;
    let range = conjectured_range(nn);
    let mut row = ConjectureRow {
        n,
        not_sum_free: Vec::new(),
        sum_free: Vec::new(),
        unknown: Vec::new(),
        consistent: true,
        confirmed: true,
    };
    for k in 1..=nn {
        let v = c.classify(k)?;
        let inside = range.contains(&k);
        match v.verdict {
            Verdict::NotSumFree { .. } => {
                row.not_sum_free.push(k);
                if !inside && k != nn {
                    row.consistent = false;
                }
            }
            Verdict::SumFree { .. } => {
                row.sum_free.push(k);
                if inside {
                    row.consistent = false;
                    row.confirmed = false;
                }
            }
            Verdict::Unknown { .. } => {
                row.unknown.push(k);
                if inside {
                    row.confirmed = false;
                }
            }
        }
    }
    Ok(row)
}

/// [`conjecture_row`] for every `2 <= n <= n_max`.
pub fn conjecture_sweep(n_max: u32, opts: SearchOptions) -> Result<Vec<ConjectureRow>> {
    (2..=n_max).map(|n| conjecture_row(n, opts)).collect()
}
