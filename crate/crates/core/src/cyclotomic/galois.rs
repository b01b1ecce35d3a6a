use super::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::{crt_pair, gcd, mul_mod, pow_mod, split_p_part};

/// The automorphism `E(n) -> E(n)^t` of `Q(E(n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisAut {
    modulus: u64,
    exponent: u64,
}

impl GaloisAut {
    pub fn new(modulus: u64, exponent: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let t = exponent.rem_euclid(modulus as i64) as u64;
        if gcd(t, modulus) != 1 {
            return Err(Error::InvalidArgument(format!(
                "{exponent} is not a unit mod {modulus}"
            )));
        }
        Ok(GaloisAut {
            modulus,
            exponent: t,
        })
    }

    pub fn identity(modulus: u64) -> Self {
        GaloisAut {
            modulus,
            exponent: 1 % modulus,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_identity(&self) -> bool {
        self.modulus == 1 || self.exponent == 1
    }

    pub fn compose(&self, other: &GaloisAut) -> Result<GaloisAut> {
        if self.modulus != other.modulus {
            return Err(Error::ConductorMismatch {
                conductor: other.modulus,
                modulus: self.modulus,
            });
        }
        Ok(GaloisAut {
            modulus: self.modulus,
            exponent: mul_mod(self.exponent, other.exponent, self.modulus),
        })
    }

    /// Order of the automorphism.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut x = self.exponent % self.modulus.max(1);
        let one = 1 % self.modulus;
        while x != one {
            x = mul_mod(x, self.exponent, self.modulus);
            k += 1;
        }
        k
    }

    /// Apply to a value whose conductor divides the modulus.
    pub fn apply(&self, v: &Cyclotomic) -> Result<Cyclotomic> {
        let n = v.conductor();
        if !self.modulus.is_multiple_of(n) {
            return Err(Error::ConductorMismatch {
                conductor: n,
                modulus: self.modulus,
            });
        }
        if n == 1 {
            return Ok(v.clone());
        }
        Ok(v.galois_conjugate((self.exponent % n) as i64))
    }
}

/// The automorphism of `Q(E(n))` fixing `p'`-roots of unity and raising
/// `p`-power roots of unity to the power `p^e + 1`.
pub fn sigma_e(p: u64, e: u32, n: u64) -> Result<GaloisAut> {
    if !crate::numtheory::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let (pa, m) = split_p_part(n, p);
    let t = if pa == 1 {
        1 % n
    } else {
        crt_pair(1, m, pow_mod(p, e as u64, pa) + 1, pa)
    };
    GaloisAut::new(n, t as i64)
}
