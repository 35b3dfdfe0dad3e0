use sumfree_core::binpoly::xn_plus_one;
use sumfree_core::catalog::{compute_kn, table1};

const TABLE1: [(u64, u64, u64, u64); 16] = [
    (1, 1, 1, 0),
    (3, 2, 1, 0),
    (5, 4, 1, 0),
    (7, 3, 2, 1),
    (9, 6, 1, 1),
    (11, 10, 1, 0),
    (13, 12, 1, 0),
    (15, 4, 2, 1),
    (17, 8, 2, 1),
    (19, 18, 1, 0),
    (21, 6, 2, 1),
    (23, 11, 2, 1),
    (25, 20, 1, 1),
    (27, 18, 1, 1),
    (29, 28, 1, 0),
    (31, 5, 6, 3),
];

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn table2(n: u64) -> Vec<usize> {
    let all_but_last = |n: usize| {
        let mut v = range(2, n - 2);
        v.push(n);
        v
    };
    match n {
        1 => vec![],
        2 => vec![2],
        3 => vec![3],
        4 => vec![2, 4],
        5 => vec![5],
        6 => vec![2, 3, 4, 6],
        7 => vec![3, 4, 7],
        8 => vec![2, 4, 6, 8],
        9 => vec![3, 6, 9],
        10 => vec![2, 5, 8, 10],
        11 => vec![11],
        12 | 14 | 24 | 28 | 30 => all_but_last(n as usize),
        13 => vec![13],
        15 => [range(3, 12), vec![15]].concat(),
        16 => (1..=8).map(|i| 2 * i).collect(),
        17 => vec![8, 9, 17],
        18 => vec![2, 3, 4, 6, 8, 9, 10, 12, 14, 15, 16, 18],
        19 => vec![19],
        20 => vec![2, 4, 5, 7, 8, 10, 12, 13, 15, 16, 18, 20],
        21 => [range(3, 18), vec![21]].concat(),
        22 => vec![2, 11, 20, 22],
        23 => vec![11, 12, 23],
        25 => vec![5, 20, 25],
        26 => vec![2, 13, 24, 26],
        27 => vec![3, 6, 9, 18, 21, 24, 27],
        29 => vec![29],
        31 => vec![5, 6, 10, 11, 15, 16, 20, 21, 25, 26, 31],
        32 => (1..=16).map(|i| 2 * i).collect(),
        _ => unreachable!(),
    }
}

#[test]
fn table1_rows() {
    let rows = table1(31).unwrap();
    let got: Vec<_> = rows.iter().map(|r| (r.d, r.o, r.cnt, r.nd)).collect();
    assert_eq!(got, TABLE1);
}

#[test]
fn table2_matches_reference() {
    for n in 1..=32 {
        assert_eq!(compute_kn(n).unwrap().kset, table2(n), "K_{n}");
    }
}

#[test]
fn realizations_divide_and_have_shape() {
    for n in 1..=32u64 {
        let r = compute_kn(n).unwrap();
        assert_eq!(r.realizations.len(), r.kset.len());
        for real in &r.realizations {
            let k = real.k;
            assert_eq!(real.factor.degree(), Some(k));
            assert!(!real.factor.coeff(k - 1), "n={n} k={k}");
            assert!(!real.reversed.coeff(1), "n={n} k={k}");
            let (_, rem) = xn_plus_one(n as usize).divrem(&real.factor).unwrap();
            assert!(rem.is_zero(), "n={n} k={k}");
        }
    }
}

#[test]
fn n_is_in_its_own_set_unless_trivial() {
    // X^n + 1 itself has zero X^{n-1} coefficient once n >= 2.
    for n in 2..=64u64 {
        assert!(compute_kn(n).unwrap().contains(n as usize));
    }
}
