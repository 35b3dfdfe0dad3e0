//! Integer number theory used by the catalogs: divisors, totients, orders
//! of 2 modulo odd integers and factorization of 64-bit integers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Splits `n = 2^e * t` with `t` odd. `n` must be nonzero.
pub fn split_two_power(n: u64) -> (u32, u64) {
    assert!(n > 0, "split_two_power(0)");
    let e = n.trailing_zeros();
    (e, n >> e)
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, a) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..a {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Multiplicative order of 2 modulo the odd integer `d`; `o_1(2) = 1`.
pub fn order_of_two(d: u64) -> u64 {
    assert!(d % 2 == 1, "order of 2 modulo even {d}");
    if d == 1 {
        return 1;
    }
    let mut x = 2 % d;
    let mut k = 1;
    while x != 1 {
        x = (x * 2) % d;
        k += 1;
    }
    k
}

/// Gaussian binomial coefficient `[n choose k]_2`, the number of
/// `k`-dimensional subspaces of `GF(2)^n`. Saturates at `u128::MAX`.
pub fn gaussian_binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // Product of (2^(n-i) - 1) / (2^(i+1) - 1); every partial quotient is an integer.
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (1u128 << (n - i)) - 1;
        let den = (1u128 << (i + 1)) - 1;
        acc = match acc.checked_mul(num) {
            Some(v) => v / den,
            None => return u128::MAX,
        };
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant of Pollard rho; `n` is odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        while g == 1 {
            x = f(x);
            y = f(f(y));
            g = gcd(x.abs_diff(y), n);
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            out.push(p);
            factor_into(n / p, out);
            return;
        }
    }
    let d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut primes = Vec::new();
    factor_into(n, &mut primes);
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, a)) if *q == p => *a += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_and_phi() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(21), 12);
        assert_eq!(euler_phi(31), 30);
    }

    #[test]
    fn order_two_matches_table_values() {
        let expected = [
            (1, 1),
            (3, 2),
            (5, 4),
            (7, 3),
            (9, 6),
            (15, 4),
            (23, 11),
            (31, 5),
        ];
        for (d, o) in expected {
            assert_eq!(order_of_two(d), o, "d = {d}");
        }
    }

    #[test]
    fn factorize_mersenne_numbers() {
        assert_eq!(factorize((1 << 61) - 1), vec![((1 << 61) - 1, 1)]);
        assert_eq!(factorize((1 << 32) + 1), vec![(641, 1), (6700417, 1)]);
        let m59 = (1u64 << 59) - 1;
        let f = factorize(m59);
        assert_eq!(f.iter().map(|(p, a)| p.pow(*a)).product::<u64>(), m59);
        assert!(f.iter().all(|(p, _)| is_prime(*p)));
        assert_eq!(factorize(u64::MAX).len(), 7);
    }

    #[test]
    fn gaussian_binomial_small_cases() {
        assert_eq!(gaussian_binomial(4, 2), 35);
        assert_eq!(gaussian_binomial(5, 3), 155);
        assert_eq!(gaussian_binomial(9, 2), 43435);
        assert_eq!(gaussian_binomial(7, 0), 1);
        assert_eq!(gaussian_binomial(7, 7), 1);
        assert_eq!(gaussian_binomial(3, 4), 0);
        // Brute count of 2-dim subspaces of GF(2)^5: pairs of distinct nonzero
        // vectors divided by the number of ordered bases of a plane.
        assert_eq!(gaussian_binomial(5, 2), (31 * 30 / 6) as u128);
    }
}
