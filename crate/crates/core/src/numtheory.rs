//! Small integer number theory used across the crate.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

/// Prime factorisation as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p < 1000 && p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            primes.push(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        split_large(n, &mut primes);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((r, e)) if *r == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// A nontrivial divisor of the odd composite `n` (Brent's variant, fixed seeds).
fn pollard_rho(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Exponent of `p` in `n` (n > 0).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

pub fn valuation_big(n: &BigUint, p: u64) -> u32 {
    let mut v = 0;
    let mut n = n.clone();
    let p = BigUint::from(p);
    while !n.is_zero() {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        n = q;
        v += 1;
    }
    v
}

/// Split `n = p^a * m` with `p` not dividing `m`; returns `(p^a, m)`.
pub fn split_p_part(n: u64, p: u64) -> (u64, u64) {
    let mut pa = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        pa *= p;
    }
    (pa, m)
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let phi = euler_phi(m);
    let mut ord = phi;
    for (q, _) in factorize(phi) {
        while ord.is_multiple_of(q) && pow_mod(a, ord / q, m) == 1 {
            ord /= q;
        }
    }
    ord
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Solve x = r1 mod m1, x = r2 mod m2 for coprime moduli.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let m = m1 * m2;
    if m == 1 {
        return 0;
    }
    let (r1, r2) = (r1 % m1, r2 % m2);
    let inv = inv_mod(m1 % m2, m2).expect("moduli must be coprime");
    // x = r1 + m1 * k with k = (r2 - r1) / m1 mod m2
    let diff = (r2 % m2 + m2 - r1 % m2) % m2;
    let k = mul_mod(diff, inv, m2);
    (r1 % m1 + mul_mod(m1, k, m)) % m
}

pub fn big_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}

pub fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
