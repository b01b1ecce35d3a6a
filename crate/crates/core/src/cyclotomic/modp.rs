use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Cyclotomic, FieldElem, GaloisField};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, inv_mod, is_prime, mul_mod, multiplicative_order, split_p_part};

/// Reduction of `Z[E(N)]` modulo a prime ideal above `p`, sending
/// `E(p^a) -> 1` and `E(m) -> root_image` where `N = p^a m`.
#[derive(Clone, Debug)]
pub struct ModPEmbedding {
    p: u64,
    ambient: u64,
    p_part: u64,
    m: u64,
    field: GaloisField,
    root_image: FieldElem,
    /// `root_image^i` for `0 <= i < m`
    powers: Vec<FieldElem>,
    /// `(p^a)^-1 mod m`
    t: u64,
}

impl ModPEmbedding {
    /// The standard embedding for ambient modulus `n`: `root_image` is
    /// [`GaloisField::root_of_unity`] of order `m` in `GF(p^f)`, `f = ord_m(p)`.
    pub fn new(p: u64, n: u64) -> Result<Self> {
        Self::with_twist(p, n, 1)
    }

    /// The embedding whose root image is the `u`-th power of the standard
    /// one (`u` prime to `m`).
    pub fn with_twist(p: u64, n: u64, u: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "ambient modulus must be positive".into(),
            ));
        }
        let (p_part, m) = split_p_part(n, p);
        if gcd(u, m) != 1 {
            return Err(Error::InvalidArgument(format!(
                "twist {u} is not prime to {m}"
            )));
        }
        let f = multiplicative_order(p % m.max(1), m) as usize;
        let field = GaloisField::new(p, f.max(1))?;
        let root = field.root_of_unity(m);
        let root_image = field.pow(&root, u % m.max(1));
        let mut powers = Vec::with_capacity(m as usize);
        let mut x = field.one();
        for _ in 0..m {
            powers.push(x.clone());
            x = field.mul(&x, &root_image);
        }
        let t = inv_mod(p_part % m, m).unwrap_or(0);
        Ok(ModPEmbedding {
            p,
            ambient: n,
            p_part,
            m,
            field,
            root_image,
            powers,
            t,
        })
    }

    /// A second embedding giving a different prime ideal whenever one exists:
    /// twisted by the least unit mod `m` outside the subgroup generated by `p`
    /// (falling back to the least nontrivial unit).
    pub fn alternative(p: u64, n: u64) -> Result<Self> {
        let (_, m) = split_p_part(n, p);
        let mut frobenius = vec![false; m as usize];
        let mut x = 1 % m.max(1);
        loop {
            if frobenius[x as usize] {
                break;
            }
            frobenius[x as usize] = true;
            x = mul_mod(x, p, m);
        }
        let units = || (2..m).filter(|&u| gcd(u, m) == 1);
        let u = units()
            .find(|&u| !frobenius[u as usize])
            .or_else(|| units().next())
            .unwrap_or(1);
        Self::with_twist(p, n, u)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ambient_modulus(&self) -> u64 {
        self.ambient
    }

    pub fn p_part(&self) -> u64 {
        self.p_part
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn field_power(&self) -> usize {
        self.field.degree()
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn root_image(&self) -> &FieldElem {
        &self.root_image
    }

    fn reduce_rational(&self, c: &num_rational::BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let den = (c.denom() % &p).to_u64().unwrap_or(0);
        if den == 0 {
            return Err(Error::NonIntegral(format!("{c} at p = {}", self.p)));
        }
        let num = {
            let r = c.numer() % &p;
            let r = if r < BigInt::zero() { r + &p } else { r };
            r.to_u64().unwrap_or(0)
        };
        let inv = inv_mod(den, self.p).expect("p is prime");
        Ok(mul_mod(num, inv, self.p))
    }

    /// Image of a `p`-integral value whose conductor divides the ambient modulus.
    pub fn reduce(&self, v: &Cyclotomic) -> Result<FieldElem> {
        let n = v.conductor();
        if !self.ambient.is_multiple_of(n) {
            return Err(Error::ConductorMismatch {
                conductor: n,
                modulus: self.ambient,
            });
        }
        let lift = self.ambient / n;
        let mut acc = self.field.zero();
        for (k, c) in v.terms() {
            let c = self.reduce_rational(c)?;
            if c == 0 {
                continue;
            }
            let j = mul_mod(k * lift % self.ambient, self.t, self.m.max(1));
            let idx = if self.m == 1 { 0 } else { j };
            acc = self
                .field
                .add(&acc, &self.field.scale(&self.powers[idx as usize], c));
        }
        Ok(acc)
    }

    /// Reduction of a rational integer, for cross-checks.
    pub fn reduce_integer(&self, n: i64) -> FieldElem {
        self.field.from_int(n)
    }
}
