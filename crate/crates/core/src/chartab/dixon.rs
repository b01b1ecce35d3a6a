//! Dixon-Schneider: common eigenvectors of the class matrices over `GF(q)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{ConjClassData, PermGroup};
use crate::numtheory::{inv_mod, is_prime, isqrt, mul_mod, pow_mod};
use crate::perm::Perm;
use crate::polyfp;

/// Least prime `q = 1 mod exponent` with `q > 2 * ceil(sqrt(order))`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut root = isqrt(order);
    if root * root < order {
        root += 1;
    }
    let bound = 2 * root;
    let mut q = exponent + 1;
    while q <= bound || !is_prime(q) {
        q += exponent;
    }
    q
}

/// Least primitive root modulo the prime `q`.
pub fn primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    let primes = crate::numtheory::prime_divisors(q - 1);
    (2..q)
        .find(|&g| primes.iter().all(|&r| pow_mod(g, (q - 1) / r, q) != 1))
        .expect("prime fields have primitive roots")
}

/// Elements of the class of `rep` under conjugation by `gens`.
pub fn class_elements(rep: &Perm, gens: &[Perm]) -> Vec<Perm> {
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(rep.clone());
    let mut out = vec![rep.clone()];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for s in gens {
            let y = x.conjugate_by(s);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
    }
    out
}

/// `M[j][k] = #{x in K_i : x^-1 g_k in K_j}`, reduced mod `q`.
fn class_matrix(
    group: &PermGroup,
    classes: &ConjClassData,
    i: usize,
    q: u64,
) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut m = vec![vec![0u64; r]; r];
    for x in class_elements(&classes.representatives[i], group.generators()) {
        let xinv = x.inverse();
        for (k, gk) in classes.representatives.iter().enumerate() {
            let y = xinv.compose(gk);
            let j = classes
                .class_of(&y)
                .ok_or_else(|| Error::internal("product left the group"))?;
            m[j][k] += 1;
        }
    }
    for row in m.iter_mut() {
        for c in row.iter_mut() {
            *c %= q;
        }
    }
    Ok(m)
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
fn rref(mut rows: Vec<Vec<u64>>, q: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(sel) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = inv_mod(rows[rank][col], q).expect("q is prime");
        for c in rows[rank].iter_mut() {
            *c = mul_mod(*c, inv, q);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..ncols {
                    let t = mul_mod(f, rows[rank][c], q);
                    rows[i][c] = (rows[i][c] + q - t) % q;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Basis of `{x : A x = 0}`.
fn null_space(a: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, |r| r.len());
    let (rows, pivots) = rref(a, q);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0u64; n];
        x[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            x[pc] = (q - row[free]) % q;
        }
        basis.push(x);
    }
    basis
}

/// Characteristic polynomial `det(xI - A)` via Hessenberg reduction.
fn char_poly(mut h: Vec<Vec<u64>>, q: u64) -> Vec<u64> {
    let n = h.len();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = inv_mod(h[col + 1][col], q).expect("q is prime");
        for i in col + 2..n {
            let f = mul_mod(h[i][col], inv, q);
            if f == 0 {
                continue;
            }
            // row_i -= f row_{col+1}; then col_{col+1} += f col_i
            for c in 0..n {
                let t = mul_mod(f, h[col + 1][c], q);
                h[i][c] = (h[i][c] + q - t) % q;
            }
            for row in h.iter_mut() {
                let t = mul_mod(f, row[i], q);
                row[col + 1] = (row[col + 1] + t) % q;
            }
        }
    }
    // p[m] is the characteristic polynomial of the leading m x m block
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let hmm = h[m - 1][m - 1];
        let mut next = polyfp::mul(&p[m - 1], &[(q - hmm) % q, 1], q);
        let mut prod = 1u64;
        for i in (1..m).rev() {
            prod = mul_mod(prod, h[i][i - 1], q);
            let coef = mul_mod(h[i - 1][m - 1], prod, q);
            if coef == 0 {
                continue;
            }
            let term: Vec<u64> = p[i - 1].iter().map(|&c| mul_mod(c, coef, q)).collect();
            next = polyfp::sub(&next, &term, q);
        }
        next.resize(m + 1, 0);
        p.push(next);
    }
    p.pop().unwrap()
}

/// Right eigenvectors `w` (normalized `w_0 = 1`) common to all class
/// matrices, one per irreducible character, in no particular order.
pub fn common_eigenvectors(
    group: &PermGroup,
    classes: &ConjClassData,
    q: u64,
) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    if r == 1 {
        return Ok(vec![vec![1]]);
    }
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![identity];
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut order: Vec<usize> = (1..r).collect();
    order.sort_by_key(|&i| (classes.sizes[i], i));
    for i in order {
        if pending.is_empty() {
            break;
        }
        let m = class_matrix(group, classes, i, q)?;
        let mut next = Vec::new();
        for basis in pending {
            let (_, pivots) = rref(basis.clone(), q);
            let d = basis.len();
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|j| {
                            m[j].iter()
                                .zip(b)
                                .fold(0, |acc, (&x, &y)| (acc + mul_mod(x, y, q)) % q)
                        })
                        .collect()
                })
                .collect();
            // a[l][c] = coefficient of basis row l in M b_c
            let a: Vec<Vec<u64>> = (0..d)
                .map(|l| (0..d).map(|c| images[c][pivots[l]]).collect())
                .collect();
            let roots = polyfp::roots(&char_poly(a.clone(), q), q);
            let mut total = 0;
            for lambda in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|l| {
                        (0..d)
                            .map(|c| {
                                if l == c {
                                    (a[l][c] + q - lambda) % q
                                } else {
                                    a[l][c]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let coords = null_space(shifted, q);
                total += coords.len();
                let vectors: Vec<Vec<u64>> = coords
                    .iter()
                    .map(|x| {
                        (0..r)
                            .map(|j| {
                                x.iter()
                                    .zip(&basis)
                                    .fold(0, |acc, (&c, b)| (acc + mul_mod(c, b[j], q)) % q)
                            })
                            .collect()
                    })
                    .collect();
                let (space, _) = rref(vectors, q);
                if space.len() == 1 {
                    done.push(space.into_iter().next().unwrap());
                } else {
                    next.push(space);
                }
            }
            if total != d {
                return Err(Error::internal("class matrix is not diagonalizable mod q"));
            }
        }
        pending = next;
    }
    if !pending.is_empty() || done.len() != r {
        return Err(Error::internal("eigenspaces did not split into lines"));
    }
    for w in done.iter_mut() {
        let inv = inv_mod(w[0], q).ok_or_else(|| Error::internal("eigenvector with w_0 = 0"))?;
        for c in w.iter_mut() {
            *c = mul_mod(*c, inv, q);
        }
    }
    Ok(done)
}
