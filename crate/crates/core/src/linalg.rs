//! Linear algebra over GF(2) on vectors packed into `u64` words
//! (at most 64 coordinates, bit `j` is coordinate `j`).

/// Incrementally maintained echelon basis of a subspace of `GF(2)^64`.
#[derive(Clone, Debug)]
pub struct XorBasis {
    // rows[b] has highest set bit b, or is 0.
    rows: [u64; 64],
    rank: usize,
}

impl Default for XorBasis {
    fn default() -> Self {
        Self {
            rows: [0; 64],
            rank: 0,
        }
    }
}

impl XorBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: u64) -> u64 {
        while v != 0 {
            let b = 63 - v.leading_zeros() as usize;
            if self.rows[b] == 0 {
                return v;
            }
            v ^= self.rows[b];
        }
        0
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Inserts `v`; returns false (and leaves the basis unchanged) if dependent.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.rows[63 - r.leading_zeros() as usize] = r;
        self.rank += 1;
        true
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

pub fn rank(vectors: &[u64]) -> usize {
    let mut basis = XorBasis::new();
    vectors.iter().filter(|&&v| basis.insert(v)).count()
}

pub fn is_independent(vectors: &[u64]) -> bool {
    rank(vectors) == vectors.len()
}

/// Solution set `particular + span(kernel)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: u64,
    pub kernel: Vec<u64>,
}

impl AffineSolution {
    /// Every element of the solution coset, in Gray-code order from `particular`.
    pub fn elements(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(1 << self.kernel.len());
        let mut cur = self.particular;
        out.push(cur);
        for i in 1u64..(1 << self.kernel.len()) {
            cur ^= self.kernel[i.trailing_zeros() as usize];
            out.push(cur);
        }
        out
    }
}

const AUG: u32 = 64;

// Reduced row echelon form over the first `ncols` columns, lowest column first.
// Rows carry an augmented bit at position 64. Returns (pivot column, row) pairs.
fn rref(mut rows: Vec<u128>, ncols: u32) -> (Vec<(u32, u128)>, bool) {
    let mut pivots: Vec<(u32, u128)> = Vec::new();
    for c in 0..ncols {
        let bit = 1u128 << c;
        let Some(pos) = rows.iter().position(|r| r & bit != 0) else {
            continue;
        };
        let prow = rows.swap_remove(pos);
        for r in rows.iter_mut() {
            if *r & bit != 0 {
                *r ^= prow;
            }
        }
        for (_, r) in pivots.iter_mut() {
            if *r & bit != 0 {
                *r ^= prow;
            }
        }
        pivots.push((c, prow));
    }
    let consistent = rows.iter().all(|r| r >> AUG & 1 == 0);
    (pivots, consistent)
}

fn solve_rows(rows: Vec<u128>, ncols: u32) -> Option<AffineSolution> {
    let (pivots, consistent) = rref(rows, ncols);
    if !consistent {
        return None;
    }
    let pivot_mask: u64 = pivots.iter().fold(0, |m, (c, _)| m | 1 << c);
    let particular = pivots
        .iter()
        .filter(|(_, r)| r >> AUG & 1 == 1)
        .fold(0u64, |x, (c, _)| x | 1 << c);
    let kernel = (0..ncols)
        .filter(|f| pivot_mask >> f & 1 == 0)
        .map(|f| {
            pivots
                .iter()
                .filter(|(_, r)| r >> f & 1 == 1)
                .fold(1u64 << f, |v, (c, _)| v | 1 << c)
        })
        .collect();
    Some(AffineSolution { particular, kernel })
}

/// Basis of `{x : <row, x> = 0 for every row}` for `ncols`-coordinate vectors.
pub fn nullspace(rows: &[u64], ncols: u32) -> Vec<u64> {
    let rows = rows.iter().map(|&r| r as u128).collect();
    solve_rows(rows, ncols).expect("homogeneous system").kernel
}

/// A GF(2)-linear map `GF(2)^n_in -> GF(2)^n_out` given by the images of unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    cols: Vec<u64>,
    n_out: u32,
}

impl LinearMap {
    pub fn from_columns(cols: Vec<u64>, n_out: u32) -> Self {
        assert!(cols.len() <= 64 && n_out <= 64);
        Self { cols, n_out }
    }

    pub fn apply(&self, x: u64) -> u64 {
        self.cols
            .iter()
            .enumerate()
            .filter(|(j, _)| x >> j & 1 == 1)
            .fold(0, |acc, (_, c)| acc ^ c)
    }

    fn rows(&self, target: u64) -> Vec<u128> {
        (0..self.n_out)
            .map(|i| {
                let mask = self
                    .cols
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| *c >> i & 1 == 1)
                    .fold(0u128, |m, (j, _)| m | 1 << j);
                mask | ((target >> i & 1) as u128) << AUG
            })
            .collect()
    }

    /// All `x` with `self(x) = target`, or `None` if `target` is not in the image.
    pub fn solve(&self, target: u64) -> Option<AffineSolution> {
        solve_rows(self.rows(target), self.cols.len() as u32)
    }

    pub fn kernel(&self) -> Vec<u64> {
        self.solve(0).expect("homogeneous system").kernel
    }

    pub fn rank(&self) -> usize {
        rank(&self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn xor_basis_rank() {
        assert_eq!(rank(&[1, 2, 3]), 2);
        assert_eq!(rank(&[0]), 0);
        assert!(is_independent(&[1, 2, 4, 8]));
        assert!(!is_independent(&[5, 5]));
    }

    #[test]
    fn solve_small_system() {
        // map: e0 -> 1, e1 -> 1, e2 -> 2 on 2 output bits
        let m = LinearMap::from_columns(vec![1, 1, 2], 2);
        let sol = m.solve(3).unwrap();
        assert_eq!(m.apply(sol.particular), 3);
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!(m.apply(sol.kernel[0]), 0);
        let m2 = LinearMap::from_columns(vec![1, 1], 2);
        assert!(m2.solve(2).is_none());
    }

    proptest! {
        #[test]
        fn solutions_match_brute_force(cols in prop::collection::vec(0u64..256, 1..8), target in 0u64..256) {
            let m = LinearMap::from_columns(cols.clone(), 8);
            let brute: Vec<u64> = (0..(1u64 << cols.len())).filter(|&x| m.apply(x) == target).collect();
            match m.solve(target) {
                None => prop_assert!(brute.is_empty()),
                Some(sol) => {
                    let mut got = sol.elements();
                    got.sort_unstable();
                    prop_assert_eq!(got, brute);
                }
            }
        }

        #[test]
        fn nullspace_is_orthogonal(rows in prop::collection::vec(0u64..1024, 0..6)) {
            let ns = nullspace(&rows, 10);
            prop_assert_eq!(ns.len() + rank(&rows), 10);
            for v in ns {
                for r in &rows {
                    prop_assert_eq!((v & r).count_ones() % 2, 0);
                }
            }
        }
    }
}
