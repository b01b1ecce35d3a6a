//! Dense polynomials over a prime field `Z/p`, coefficients lowest degree first.

use num_bigint::BigUint;

use crate::numtheory::{inv_mod, mul_mod};

pub type Poly = Vec<u64>;

pub fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = inv_mod(m[dm], p).expect("p is prime");
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = mul_mod(r[dr], lead_inv, p);
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate().take(dm + 1) {
            let t = mul_mod(factor, c, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        trim(&mut r);
    }
    r
}

pub fn make_monic(a: &mut Poly, p: u64) {
    trim(a);
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p).expect("p is prime");
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&mut x, p);
    x
}

pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

pub fn powmod(base: &[u64], exp: &BigUint, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = rem(&[1], m, p);
    let b = rem(base, m, p);
    for i in (0..exp.bits()).rev() {
        acc = mulmod(&acc, &acc, m, p);
        if exp.bit(i) {
            acc = mulmod(&acc, &b, m, p);
        }
    }
    acc
}

/// Quotient of `a` by `m` (exact division not required).
pub fn div(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = inv_mod(m[dm], p).expect("p is prime");
    let mut q = vec![0u64; r.len().saturating_sub(dm).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = mul_mod(r[dr], lead_inv, p);
        let shift = dr - dm;
        q[shift] = factor;
        for (i, &c) in m.iter().enumerate().take(dm + 1) {
            let t = mul_mod(factor, c, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    q
}

/// Rabin's test for irreducibility of a monic polynomial over `Z/p`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = match degree(f) {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let pb = BigUint::from(p);
    // x^(p^k) mod f for k = 1..n
    let mut frob = vec![x.clone()];
    for k in 1..=n {
        let next = powmod(&frob[k - 1], &pb, f, p);
        frob.push(next);
    }
    if !sub(&frob[n], &x, p).is_empty() {
        return false;
    }
    for (r, _) in crate::numtheory::factorize(n as u64) {
        let k = n / r as usize;
        let g = gcd(f, &sub(&frob[k], &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Distinct roots in `Z/p` of a polynomial that splits into linear factors
/// (or not; only roots in the prime field are returned). Deterministic
/// equal-degree splitting with shifts `x + 0, x + 1, ...`.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    make_monic(&mut f, p);
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    // product of the distinct linear factors: gcd(f, x^p - x)
    let xp = powmod(&[0, 1], &BigUint::from(p), &f, p);
    let g = gcd(&f, &sub(&xp, &[0, 1], p), p);
    let mut out = Vec::new();
    split_linear(g, p, &mut out, 0);
    out.sort_unstable();
    out
}

fn split_linear(g: Poly, p: u64, out: &mut Vec<u64>, mut shift: u64) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => {
            // monic x + c has root -c
            out.push((p - g[0] % p) % p);
        }
        Some(d) => {
            if p == 2 {
                // only candidates are 0 and 1
                for a in 0..2u64 {
                    let val = g.iter().rev().fold(0u64, |acc, &c| (acc * a + c) % 2);
                    if val == 0 {
                        out.push(a);
                    }
                }
                return;
            }
            if g[0] == 0 {
                out.push(0);
                let reduced = div(&g, &[0, 1], p);
                split_linear(reduced, p, out, shift);
                return;
            }
            let e = BigUint::from((p - 1) / 2);
            loop {
                let h = powmod(&[shift % p, 1], &e, &g, p);
                let cand = gcd(&g, &sub(&h, &[1], p), p);
                shift += 1;
                let dc = degree(&cand).unwrap_or(0);
                if dc > 0 && dc < d {
                    let other = div(&g, &cand, p);
                    split_linear(cand, p, out, shift);
                    split_linear(other, p, out, shift);
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility() {
        // x^2 + 1 is irreducible mod 3, reducible mod 5
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^2 + x + 1 over GF(2)
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn root_finding() {
        // (x - 1)(x - 3)(x - 10) mod 13
        let f = mul(&mul(&[12, 1], &[10, 1], 13), &[3, 1], 13);
        assert_eq!(roots(&f, 13), vec![1, 3, 10]);
        // repeated roots are reported once
        let g = mul(&[12, 1], &[12, 1], 13);
        assert_eq!(roots(&g, 13), vec![1]);
        assert_eq!(roots(&[0, 0, 1], 7), vec![0]);
        assert_eq!(roots(&[1, 0, 1], 3), Vec::<u64>::new());
    }
}
