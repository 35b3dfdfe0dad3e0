//! Moore determinants, subspace polynomials and the rational function
//! `F_k = Delta_1 / Delta`.
//!
//! For `v = (v_1, ..., v_k)` and a set of row exponents `R`, the generalized
//! Moore matrix has entry `v_j^(2^r)` in row `r in R`, column `j`. With
//! `R = {0..k-1}` its determinant is the Moore determinant `Delta(v)`,
//! which also equals the product of all nonzero GF(2)-combinations of `v`.
//! `Delta_i` drops row `i` from `{0..k}` and `Delta_ij` drops rows `i, j`
//! from `{0..k+1}`.
//!
//! Nothing here is symbolic: every quantity is evaluated at field points.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binpoly::BinPoly;
use crate::error::{Error, Result};
use crate::gf2n::{FieldCtx, FieldElem};
use crate::linalg;

/// Largest dimension for which [`inverse_sum`] enumerates the subspace.
pub const ENUMERATION_MAX_K: usize = 20;

/// An ordered GF(2)-independent tuple spanning a subspace of GF(2^n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ctx: FieldCtx,
    basis: Vec<FieldElem>,
}

impl Subspace {
    pub fn new(ctx: &FieldCtx, basis: Vec<FieldElem>) -> Result<Self> {
        let k = basis.len();
        if k == 0 || k > ctx.n() as usize {
            return Err(Error::DimensionOutOfRange { k, n: ctx.n() });
        }
        if let Some(bad) = basis.iter().find(|v| !ctx.contains(**v)) {
            return Err(Error::ElementOutOfRange {
                value: bad.0,
                n: ctx.n(),
            });
        }
        check_independent(&basis)?;
        Ok(Self {
            ctx: ctx.clone(),
            basis,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn basis(&self) -> &[FieldElem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All `2^k` elements in Gray-code order starting at zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let mut cur = FieldElem::ZERO;
        let mut first = true;
        (0u64..1 << self.dim()).map(move |i| {
            if !first {
                cur += self.basis[i.trailing_zeros() as usize];
            }
            first = false;
            cur
        })
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        let mut b = linalg::XorBasis::new();
        for v in &self.basis {
            b.insert(v.0);
        }
        b.contains(x.0)
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    n: u32,
    modulus: BinPoly,
    basis: Vec<FieldElem>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            n: self.ctx.n(),
            modulus: self.ctx.modulus(),
            basis: self.basis.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SubspaceRepr::deserialize(d)?;
        let ctx = FieldCtx::new(r.n, Some(&r.modulus)).map_err(serde::de::Error::custom)?;
        Subspace::new(&ctx, r.basis).map_err(serde::de::Error::custom)
    }
}

fn check_independent(v: &[FieldElem]) -> Result<()> {
    let bits: Vec<u64> = v.iter().map(|x| x.0).collect();
    if linalg::is_independent(&bits) {
        Ok(())
    } else {
        Err(Error::DependentBasis)
    }
}

/// `v_j^(2^r)` for `r = 0..=top`, indexed `[r][j]`.
fn frobenius_rows(ctx: &FieldCtx, v: &[FieldElem], top: usize) -> Vec<Vec<FieldElem>> {
    let mut rows = Vec::with_capacity(top + 1);
    rows.push(v.to_vec());
    for r in 1..=top {
        let next = rows[r - 1].iter().map(|&x| ctx.square(x)).collect();
        rows.push(next);
    }
    rows
}

/// Determinant of a square matrix by Gaussian elimination (no signs in characteristic 2).
fn det(ctx: &FieldCtx, mut m: Vec<Vec<FieldElem>>) -> FieldElem {
    let k = m.len();
    let mut acc = FieldElem::ONE;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !m[r][c].is_zero()) else {
            return FieldElem::ZERO;
        };
        m.swap(c, p);
        let pivot = m[c][c];
        acc = ctx.mul(acc, pivot);
        let pinv = ctx.inv(pivot);
        for r in c + 1..k {
            if m[r][c].is_zero() {
                continue;
            }
            let f = ctx.mul(m[r][c], pinv);
            for j in c..k {
                let t = ctx.mul(f, m[c][j]);
                m[r][j] += t;
            }
        }
    }
    acc
}

/// Determinant of the generalized Moore matrix with the given row exponents.
pub fn exp_rows_det(ctx: &FieldCtx, v: &[FieldElem], rows: &[usize]) -> FieldElem {
    assert_eq!(
        rows.len(),
        v.len(),
        "generalized Moore matrix must be square"
    );
    if v.is_empty() {
        return FieldElem::ONE;
    }
    let top = *rows.iter().max().expect("nonempty");
    let pw = frobenius_rows(ctx, v, top);
    det(ctx, rows.iter().map(|&r| pw[r].clone()).collect())
}

/// `Delta(v)` as the product of all nonzero GF(2)-combinations of `v`.
pub fn moore_det_product(ctx: &FieldCtx, v: &[FieldElem]) -> FieldElem {
    let mut acc = FieldElem::ONE;
    let mut cur = FieldElem::ZERO;
    for i in 1u64..1 << v.len() {
        cur += v[i.trailing_zeros() as usize];
        acc = ctx.mul(acc, cur);
    }
    acc
}

/// `Delta(v)` by elimination on the `k x k` Moore matrix.
pub fn moore_det_elimination(ctx: &FieldCtx, v: &[FieldElem]) -> FieldElem {
    let rows: Vec<usize> = (0..v.len()).collect();
    exp_rows_det(ctx, v, &rows)
}

/// The Moore determinant `Delta(v)`; zero exactly when `v` is dependent.
pub fn moore_det(ctx: &FieldCtx, v: &[FieldElem]) -> FieldElem {
    if v.len() <= 12 {
        moore_det_product(ctx, v)
    } else {
        moore_det_elimination(ctx, v)
    }
}

/// `Delta_i(v)`: rows `{0..k} \ {i}`.
pub fn delta_i(ctx: &FieldCtx, v: &[FieldElem], i: usize) -> FieldElem {
    let k = v.len();
    assert!(i <= k, "delta_i needs 0 <= i <= k");
    let rows: Vec<usize> = (0..=k).filter(|&r| r != i).collect();
    exp_rows_det(ctx, v, &rows)
}

/// `Delta_ij(v)`: rows `{0..k+1} \ {i, j}`.
pub fn delta_ij(ctx: &FieldCtx, v: &[FieldElem], i: usize, j: usize) -> FieldElem {
    let k = v.len();
    assert!(i < j && j <= k + 1, "delta_ij needs 0 <= i < j <= k+1");
    let rows: Vec<usize> = (0..=k + 1).filter(|&r| r != i && r != j).collect();
    exp_rows_det(ctx, v, &rows)
}

/// Coefficients of a subspace polynomial `L(X) = sum b_i X^(2^i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspacePolyCoeffs {
    pub b: Vec<FieldElem>,
}

impl SubspacePolyCoeffs {
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        let mut p = x;
        for &bi in &self.b {
            acc += ctx.mul(bi, p);
            p = ctx.square(p);
        }
        acc
    }
}

/// `L_S(X) = prod_{u in S} (X + u)` built one basis vector at a time:
/// `L_j = L_{j-1}^2 + L_{j-1}(v_j) L_{j-1}`.
pub fn subspace_poly(s: &Subspace) -> SubspacePolyCoeffs {
    let ctx = s.ctx();
    let mut l = SubspacePolyCoeffs {
        b: vec![FieldElem::ONE],
    };
    for &v in s.basis() {
        let c = l.eval(ctx, v);
        let mut next = vec![FieldElem::ZERO; l.b.len() + 1];
        for (i, &bi) in l.b.iter().enumerate() {
            next[i + 1] += ctx.square(bi);
            next[i] += ctx.mul(c, bi);
        }
        l.b = next;
    }
    l
}

/// `sum_{0 != x in S} 1/x` by walking all of `S`.
pub fn inverse_sum_enumerate(s: &Subspace) -> FieldElem {
    let ctx = s.ctx();
    s.elements()
        .fold(FieldElem::ZERO, |acc, x| acc + ctx.inv(x))
}

/// `sum_{0 != x in S} 1/x = Delta_1 / Delta^2`.
pub fn inverse_sum_formula(s: &Subspace) -> FieldElem {
    let ctx = s.ctx();
    let d = moore_det(ctx, s.basis());
    ctx.div(delta_i(ctx, s.basis(), 1), ctx.square(d))
}

/// The inverse sum over `S`, enumerating when `dim S <= 20`.
pub fn inverse_sum(s: &Subspace) -> FieldElem {
    if s.dim() <= ENUMERATION_MAX_K {
        inverse_sum_enumerate(s)
    } else {
        inverse_sum_formula(s)
    }
}

/// `sum_{u in c + S} 1/u`, cross-checked against
/// `prod_{0 != u in S} u / prod_{u in c + S} u`. Never zero.
pub fn affine_sum_nonzero_check(s: &Subspace, c: FieldElem) -> Result<FieldElem> {
    let ctx = s.ctx();
    if s.contains(c) {
        return Err(Error::CosetContainsZero);
    }
    let mut sum = FieldElem::ZERO;
    let mut coset_prod = FieldElem::ONE;
    for u in s.elements().map(|x| x + c) {
        sum += ctx.inv(u);
        coset_prod = ctx.mul(coset_prod, u);
    }
    let closed = ctx.div(moore_det(ctx, s.basis()), coset_prod);
    if closed != sum || sum.is_zero() {
        return Err(Error::IdentityViolation(format!(
            "affine inverse sum {sum:?} vs closed form {closed:?}"
        )));
    }
    Ok(sum)
}

/// `F_k(v) = Delta_1(v) / Delta(v)`.
pub fn eval_fk(ctx: &FieldCtx, v: &[FieldElem]) -> Result<FieldElem> {
    let d = moore_det(ctx, v);
    if d.is_zero() {
        return Err(Error::DependentBasis);
    }
    Ok(ctx.div(delta_i(ctx, v, 1), d))
}

/// `F_k(x, v')` as an affine 2-polynomial in `x`:
/// `sum_{i < k} linear[i] x^(2^i) + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstVarCoeffs {
    pub linear: Vec<FieldElem>,
    pub constant: FieldElem,
}

impl FirstVarCoeffs {
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        let mut acc = self.constant;
        let mut p = x;
        for &c in &self.linear {
            acc += ctx.mul(c, p);
            p = ctx.square(p);
        }
        acc
    }
}

/// Coefficients `C_{k-1}, ..., C_0, C_{-1}` of `F_k` in its first argument,
/// evaluated at `v' = (v_2, ..., v_k)` with `k >= 2`.
pub fn fk_first_var_coeffs(ctx: &FieldCtx, vprime: &[FieldElem]) -> Result<FirstVarCoeffs> {
    if vprime.is_empty() {
        return Err(Error::DimensionOutOfRange { k: 1, n: ctx.n() });
    }
    check_independent(vprime)?;
    let m = vprime.len();
    let d = moore_det(ctx, vprime);
    let f = ctx.div(delta_i(ctx, vprime, 1), d);
    let ratio = ctx.div(f, d);
    let mut linear: Vec<FieldElem> = (0..m)
        .map(|i| ctx.mul(ratio, delta_i(ctx, vprime, i)))
        .collect();
    linear.push(f);
    Ok(FirstVarCoeffs {
        linear,
        constant: ctx.square(d),
    })
}

/// Evaluates both sides of
/// `Delta_1i(v') = Delta_1 Delta_{i-1}^2 / Delta^2 + Delta_i Delta^2`.
pub fn delta_1i_identity_check(ctx: &FieldCtx, vprime: &[FieldElem], i: usize) -> Result<bool> {
    check_independent(vprime)?;
    let m = vprime.len();
    assert!(i >= 2 && i <= m, "identity is stated for 2 <= i <= k-1");
    let lhs = delta_ij(ctx, vprime, 1, i);
    let d = moore_det(ctx, vprime);
    let d1 = delta_i(ctx, vprime, 1);
    let dim1 = delta_i(ctx, vprime, i - 1);
    let rhs = ctx.div(ctx.mul(d1, ctx.square(dim1)), ctx.square(d))
        + ctx.mul(delta_i(ctx, vprime, i), ctx.square(d));
    Ok(lhs == rhs)
}

/// Every `x` in GF(2^n) with `F_k(x, v') = 0`, ascending. Solutions may be
/// dependent on `v'`; callers filter those.
pub fn solve_first_var(ctx: &FieldCtx, vprime: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let coeffs = fk_first_var_coeffs(ctx, vprime)?;
    let linear_part = FirstVarCoeffs {
        linear: coeffs.linear.clone(),
        constant: FieldElem::ZERO,
    };
    let map = ctx.linear_map(|x| linear_part.eval(ctx, x));
    let Some(sol) = map.solve(coeffs.constant.0) else {
        return Ok(Vec::new());
    };
    let mut out: Vec<FieldElem> = sol.elements().into_iter().map(FieldElem).collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_independent(ctx: &FieldCtx, k: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElem> {
        loop {
            let v: Vec<FieldElem> = (0..k).map(|_| ctx.random(rng)).collect();
            if check_independent(&v).is_ok() {
                return v;
            }
        }
    }

    fn brute_subspace_poly(s: &Subspace) -> Vec<FieldElem> {
        // Expand prod (X + u) as a dense polynomial with field coefficients.
        let ctx = s.ctx();
        let mut p = vec![FieldElem::ONE];
        for u in s.elements() {
            let mut next = vec![FieldElem::ZERO; p.len() + 1];
            for (i, &c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] += ctx.mul(c, u);
            }
            p = next;
        }
        p
    }

    #[test]
    fn small_moore_dets() {
        let ctx = FieldCtx::with_degree(8).unwrap();
        let (x, y) = (FieldElem(0x53), FieldElem(0xca));
        assert_eq!(moore_det(&ctx, &[x]), x);
        let expect = ctx.mul(ctx.mul(x, y), x + y);
        assert_eq!(moore_det(&ctx, &[x, y]), expect);
        assert_eq!(moore_det_elimination(&ctx, &[x, y]), expect);
        assert_eq!(moore_det(&ctx, &[x, x]), FieldElem::ZERO);
        assert_eq!(moore_det_elimination(&ctx, &[x, x]), FieldElem::ZERO);
    }

    #[test]
    fn subfield_subspace_poly_and_sum() {
        let ctx = FieldCtx::with_degree(12).unwrap();
        for l in [2u32, 3, 4, 6] {
            let s = Subspace::new(&ctx, ctx.subfield_basis(l).unwrap()).unwrap();
            let mut expect = vec![FieldElem::ZERO; l as usize + 1];
            expect[0] = FieldElem::ONE;
            expect[l as usize] = FieldElem::ONE;
            assert_eq!(subspace_poly(&s).b, expect);
            assert_eq!(inverse_sum(&s), FieldElem::ZERO);
            assert_eq!(inverse_sum_formula(&s), FieldElem::ZERO);
        }
    }

    #[test]
    fn one_dimensional_cases() {
        let ctx = FieldCtx::with_degree(9).unwrap();
        let v = FieldElem(0x1a3);
        let s = Subspace::new(&ctx, vec![v]).unwrap();
        assert_eq!(subspace_poly(&s).b, vec![v, FieldElem::ONE]);
        assert_eq!(inverse_sum(&s), ctx.inv(v));
        assert_eq!(inverse_sum_formula(&s), ctx.inv(v));
    }

    #[test]
    fn subspace_poly_matches_expanded_product() {
        let ctx = FieldCtx::with_degree(8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let s = Subspace::new(&ctx, random_independent(&ctx, 3, &mut rng)).unwrap();
            let dense = brute_subspace_poly(&s);
            let b = subspace_poly(&s).b;
            for (e, c) in dense.iter().enumerate() {
                let expect = if e.is_power_of_two() {
                    b[e.trailing_zeros() as usize]
                } else {
                    FieldElem::ZERO
                };
                assert_eq!(*c, expect, "coefficient of X^{e}");
            }
        }
    }

    #[test]
    fn delta_boundary_rows() {
        let ctx = FieldCtx::with_degree(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in 1..=5 {
            let v = random_independent(&ctx, k, &mut rng);
            let d = moore_det(&ctx, &v);
            assert_eq!(delta_i(&ctx, &v, 0), ctx.square(d));
            assert_eq!(delta_i(&ctx, &v, k), d);
        }
    }

    #[test]
    fn f2_closed_form() {
        let ctx = FieldCtx::with_degree(10).unwrap();
        let (x, y) = (FieldElem(0x2f1), FieldElem(0x0b7));
        let expect = ctx.square(x) + ctx.mul(x, y) + ctx.square(y);
        assert_eq!(eval_fk(&ctx, &[x, y]).unwrap(), expect);
        let c = fk_first_var_coeffs(&ctx, &[y]).unwrap();
        assert_eq!(c.linear, vec![y, FieldElem::ONE]);
        assert_eq!(c.constant, ctx.square(y));
    }

    #[test]
    fn f2_roots_exist_only_for_even_n() {
        for n in 3..=12 {
            let ctx = FieldCtx::with_degree(n).unwrap();
            let y = FieldElem(0b101);
            let sols = solve_first_var(&ctx, &[y]).unwrap();
            assert_eq!(!sols.is_empty(), n % 2 == 0, "n = {n}");
            for x in sols {
                let u = ctx.div(x, y);
                assert!(ctx.in_subfield(u, 2) && !ctx.in_subfield(u, 1));
            }
        }
    }

    #[test]
    fn solve_matches_brute_force_gf256() {
        let ctx = FieldCtx::with_degree(8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let vp = random_independent(&ctx, 2, &mut rng);
            let coeffs = fk_first_var_coeffs(&ctx, &vp).unwrap();
            let brute: Vec<FieldElem> = ctx
                .elements()
                .filter(|&x| coeffs.eval(&ctx, x).is_zero())
                .collect();
            assert_eq!(solve_first_var(&ctx, &vp).unwrap(), brute);
            for x in brute {
                let mut v = vec![x];
                v.extend(&vp);
                assert_eq!(delta_i(&ctx, &v, 1), FieldElem::ZERO);
            }
        }
    }

    #[test]
    fn affine_sums_are_nonzero() {
        let ctx = FieldCtx::with_degree(9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..30 {
            let s = Subspace::new(&ctx, random_independent(&ctx, 3, &mut rng)).unwrap();
            let c = ctx.random(&mut rng);
            match affine_sum_nonzero_check(&s, c) {
                Ok(sum) => assert!(!sum.is_zero()),
                Err(e) => {
                    assert_eq!(e, Error::CosetContainsZero);
                    assert!(s.contains(c));
                }
            }
        }
    }

    #[test]
    fn subspace_rejects_bad_input() {
        let ctx = FieldCtx::with_degree(4).unwrap();
        assert_eq!(
            Subspace::new(&ctx, vec![FieldElem(3), FieldElem(3)]),
            Err(Error::DependentBasis)
        );
        assert!(Subspace::new(&ctx, vec![]).is_err());
        assert!(Subspace::new(&ctx, vec![FieldElem(16)]).is_err());
    }

    #[test]
    fn subspace_json_roundtrip() {
        let ctx = FieldCtx::with_degree(8).unwrap();
        let s = Subspace::new(&ctx, vec![FieldElem(1), FieldElem(0x80)]).unwrap();
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"n":8,"modulus":"11b","basis":["1","80"]}"#);
        let back: Subspace = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }

    fn instance(
        max_n: u32,
        max_k: usize,
    ) -> impl Strategy<Value = (FieldCtx, Vec<FieldElem>, u64)> {
        (2..=max_n, any::<u64>()).prop_flat_map(move |(n, seed)| {
            let kmax = max_k.min(n as usize);
            (1..=kmax).prop_map(move |k| {
                let ctx = FieldCtx::with_degree(n).unwrap();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let v = random_independent(&ctx, k, &mut rng);
                let extra = rng.gen::<u64>();
                (ctx, v, extra)
            })
        })
    }

    use rand::Rng;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn product_formula_equals_determinant((ctx, v, _) in instance(16, 6)) {
            let d = moore_det_product(&ctx, &v);
            prop_assert!(!d.is_zero());
            prop_assert_eq!(d, moore_det_elimination(&ctx, &v));
        }

        #[test]
        fn inverse_sum_formula_agrees((ctx, v, _) in instance(20, 12)) {
            let s = Subspace::new(&ctx, v).unwrap();
            prop_assert_eq!(inverse_sum_enumerate(&s), inverse_sum_formula(&s));
        }

        #[test]
        fn coefficients_are_delta_ratios((ctx, v, _) in instance(16, 6)) {
            let s = Subspace::new(&ctx, v.clone()).unwrap();
            let b = subspace_poly(&s).b;
            let d = moore_det(&ctx, &v);
            prop_assert!(!b[0].is_zero());
            for (i, &bi) in b.iter().enumerate() {
                prop_assert_eq!(ctx.mul(bi, d), delta_i(&ctx, &v, i));
            }
            for &x in &v {
                prop_assert!(subspace_poly(&s).eval(&ctx, x).is_zero());
            }
        }

        #[test]
        fn delta1_is_delta_times_fk((ctx, v, _) in instance(16, 6)) {
            let f = eval_fk(&ctx, &v).unwrap();
            prop_assert_eq!(delta_i(&ctx, &v, 1), ctx.mul(moore_det(&ctx, &v), f));
            prop_assert_eq!(inverse_sum_formula(&Subspace::new(&ctx, v.clone()).unwrap()),
                ctx.div(f, moore_det(&ctx, &v)));
        }

        #[test]
        fn fk_symmetric_and_homogeneous((ctx, v, extra) in instance(16, 6)) {
            let f = eval_fk(&ctx, &v).unwrap();
            let mut w = v.clone();
            w.rotate_left((extra as usize) % v.len());
            if w.len() >= 2 { w.swap(0, 1); }
            prop_assert_eq!(eval_fk(&ctx, &w).unwrap(), f);
            let lambda = FieldElem((extra >> 8) & ctx.mask()).max(FieldElem::ONE);
            let scaled: Vec<FieldElem> = v.iter().map(|&x| ctx.mul(lambda, x)).collect();
            let k = v.len() as u32;
            let weight = ctx.pow(lambda, (1u128 << k) - 2);
            prop_assert_eq!(eval_fk(&ctx, &scaled).unwrap(), ctx.mul(weight, f));
        }

        #[test]
        fn first_var_coeffs_reproduce_fk((ctx, v, extra) in instance(16, 6)) {
            let x = FieldElem(extra & ctx.mask());
            let c = fk_first_var_coeffs(&ctx, &v).unwrap();
            prop_assert!(!c.constant.is_zero());
            let mut full = vec![x];
            full.extend(&v);
            // Delta_1 = Delta * F_k holds for every x, dependent or not.
            let delta = moore_det(&ctx, &full);
            prop_assert_eq!(delta_i(&ctx, &full, 1), ctx.mul(delta, c.eval(&ctx, x)));
            if !delta.is_zero() {
                prop_assert_eq!(eval_fk(&ctx, &full).unwrap(), c.eval(&ctx, x));
            }
        }

        #[test]
        fn delta_1i_identity((ctx, v, extra) in instance(16, 5)) {
            prop_assume!(v.len() >= 2);
            let i = 2 + (extra as usize) % (v.len() - 1);
            prop_assert!(delta_1i_identity_check(&ctx, &v, i).unwrap());
        }

        #[test]
        fn solutions_satisfy_fk((ctx, v, _) in instance(14, 4)) {
            for x in solve_first_var(&ctx, &v).unwrap() {
                let mut full = vec![x];
                full.extend(&v);
                prop_assert!(delta_i(&ctx, &full, 1).is_zero());
            }
        }
    }
}
