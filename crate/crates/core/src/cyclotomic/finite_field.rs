use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, inv_mod, is_prime, mul_mod};
use crate::polyfp;

/// An element of `GF(p^f)`: coefficients of a polynomial of degree `< f`
/// in the generator, lowest degree first, always of length `f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(Box<[u64]>);

impl FieldElem {
    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `GF(p^f)` realized as `GF(p)[x] / (g)`, where `g` is the least monic
/// irreducible polynomial of degree `f` (coefficient vectors compared as
/// base-`p` numbers with the constant term least significant).
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    f: usize,
    modulus: Vec<u64>,
}

/// Monic polynomial of degree `f` whose lower coefficients are the base-`p`
/// digits of `index`.
fn monic_from_index(mut index: u64, p: u64, f: usize) -> Vec<u64> {
    let mut poly = vec![0u64; f + 1];
    for c in poly.iter_mut().take(f) {
        *c = index % p;
        index /= p;
    }
    poly[f] = 1;
    poly
}

impl GaloisField {
    pub fn new(p: u64, f: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::InvalidArgument(
                "field degree must be positive".into(),
            ));
        }
        let modulus = (0u64..)
            .map(|i| monic_from_index(i, p, f))
            .find(|g| polyfp::is_irreducible(g, p))
            .ok_or_else(|| Error::internal("no irreducible polynomial found"))?;
        Ok(GaloisField { p, f, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    /// Number of elements `p^f`.
    pub fn size_big(&self) -> BigUint {
        BigUint::from(self.p).pow(self.f as u32)
    }

    /// Number of elements, if it fits in 64 bits.
    pub fn size(&self) -> Option<u64> {
        self.p.checked_pow(self.f as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn wrap(&self, mut poly: Vec<u64>) -> FieldElem {
        poly.resize(self.f, 0);
        FieldElem(poly.into_boxed_slice())
    }

    pub fn zero(&self) -> FieldElem {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        self.wrap(vec![n.rem_euclid(self.p as i64) as u64])
    }

    /// The element whose coefficients are the base-`p` digits of `index`.
    pub fn element(&self, mut index: u64) -> FieldElem {
        let mut v = vec![0u64; self.f];
        for c in v.iter_mut() {
            *c = index % self.p;
            index /= self.p;
        }
        self.wrap(v)
    }

    /// Inverse of [`element`](Self::element).
    pub fn index_of(&self, a: &FieldElem) -> u64 {
        a.0.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// `a^p`.
    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        self.pow(a, self.p)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let v =
            a.0.iter()
                .zip(b.0.iter())
                .map(|(x, y)| (x + y) % self.p)
                .collect();
        self.wrap(v)
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let v =
            a.0.iter()
                .zip(b.0.iter())
                .map(|(x, y)| (x + self.p - y) % self.p)
                .collect();
        self.wrap(v)
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        self.sub(&self.zero(), a)
    }

    pub fn scale(&self, a: &FieldElem, c: u64) -> FieldElem {
        let v =
            a.0.iter()
                .map(|&x| mul_mod(x, c % self.p, self.p))
                .collect();
        self.wrap(v)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.f == 1 {
            return self.wrap(vec![mul_mod(a.0[0], b.0[0], self.p)]);
        }
        self.wrap(polyfp::mulmod(&a.0, &b.0, &self.modulus, self.p))
    }

    pub fn pow_big(&self, a: &FieldElem, e: &BigUint) -> FieldElem {
        self.wrap(polyfp::powmod(&a.0, e, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &FieldElem, e: u64) -> FieldElem {
        if self.f == 1 {
            return self.wrap(vec![crate::numtheory::pow_mod(a.0[0], e, self.p)]);
        }
        self.wrap(polyfp::powmod(
            &a.0,
            &BigUint::from(e),
            &self.modulus,
            self.p,
        ))
    }

    pub fn inverse(&self, a: &FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            return None;
        }
        if self.f == 1 {
            return inv_mod(a.0[0], self.p).map(|x| self.wrap(vec![x]));
        }
        Some(self.pow_big(a, &(self.size_big() - 2u32)))
    }

    /// Multiplicative order of a nonzero element known to satisfy `a^n = 1`.
    pub fn order_dividing(&self, a: &FieldElem, n: u64) -> u64 {
        let mut ord = n;
        for (q, _) in factorize(n) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == self.one() {
                ord /= q;
            }
        }
        ord
    }

    /// Multiplicative order of a nonzero element of a field of at most 2^64 elements.
    pub fn order(&self, a: &FieldElem) -> Result<u64> {
        let n = self.small_size()? - 1;
        Ok(self.order_dividing(a, n))
    }

    fn small_size(&self) -> Result<u64> {
        self.size()
            .ok_or_else(|| Error::ResourceCap(format!("GF({}^{}) is too large", self.p, self.f)))
    }

    /// The least primitive element in the enumeration order of
    /// [`element`](Self::element); fields of at most 2^64 elements.
    pub fn least_primitive_element(&self) -> Result<FieldElem> {
        let size = self.small_size()?;
        let n = size - 1;
        let primes: Vec<u64> = factorize(n).into_iter().map(|(q, _)| q).collect();
        let one = self.one();
        Ok((1..size)
            .map(|i| self.element(i))
            .find(|a| primes.iter().all(|&q| self.pow(a, n / q) != one))
            .expect("the multiplicative group is cyclic"))
    }

    /// `(p^f - 1) / m`-th power of the first element (enumeration order)
    /// for which it has order exactly `m`; `m` must divide `p^f - 1`.
    pub fn root_of_unity(&self, m: u64) -> FieldElem {
        let e = (self.size_big() - 1u32) / m;
        (1u64..)
            .map(|i| self.pow_big(&self.element(i), &e))
            .find(|b| self.order_dividing(b, m) == m)
            .expect("the multiplicative group is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f4 = GaloisField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let g = f4.least_primitive_element().unwrap();
        assert_eq!(f4.order(&g).unwrap(), 3);
        assert_eq!(f4.order(&f4.root_of_unity(3)).unwrap(), 3);
        let f9 = GaloisField::new(3, 2).unwrap();
        // x^2 + 1 is the least monic irreducible quadratic over GF(3)
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let a = f9.element(5);
        let inv = f9.inverse(&a).unwrap();
        assert_eq!(f9.mul(&a, &inv), f9.one());
        assert!(GaloisField::new(4, 1).is_err());
    }

    #[test]
    fn prime_field_primitive_root() {
        let f = GaloisField::new(7, 1).unwrap();
        assert_eq!(f.least_primitive_element().unwrap(), f.from_int(3));
        // 1^2 = 1 has order 1; 2^2 = 4 has order 3
        assert_eq!(f.root_of_unity(3), f.from_int(4));
        let big = GaloisField::new(2, 84).unwrap();
        let r = big.root_of_unity(29);
        assert_eq!(big.order_dividing(&r, 29), 29);
    }
}
