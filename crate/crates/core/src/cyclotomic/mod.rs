//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is stored over the Zumbroich basis of `Q(E(n))` at its
//! minimal conductor `n`, so equality of values is equality of the stored
//! data. For `n = prod q_i` (prime powers) the basis consists of the roots
//! `E(n)^k` whose local coordinates `k * (n/q)^-1 mod q` lie in
//! `{ i + j q/p : 0 <= i < q/p, j in J_p }`, with `J_2 = {0}` and
//! `J_p = {1, .., p-1}` for odd `p`.

mod finite_field;
mod galois;
mod modp;

pub use finite_field::{FieldElem, GaloisField};
pub use galois::{sigma_e, GaloisAut};
pub use modp::ModPEmbedding;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{crt_pair, factorize, gcd, inv_mod, lcm};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    /// nonzero coefficients by exponent, increasing
    terms: Vec<(u64, BigRational)>,
}

type Terms = BTreeMap<u64, BigRational>;

fn accumulate(map: &mut Terms, k: u64, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(k).or_insert_with(BigRational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&k);
    }
}

/// Rewrite every exponent into the Zumbroich basis of `Q(E(n))`.
fn zumbroich_reduce(n: u64, map: &mut Terms) {
    for (p, a) in factorize(n) {
        let q = p.pow(a);
        let m = n / q;
        let minv = inv_mod(m % q, q).expect("coprime parts");
        let step = n / p;
        let lower = q / p;
        let keys: Vec<u64> = map.keys().copied().collect();
        for k in keys {
            let j = (k % q) * minv % q;
            let outside = if p == 2 { j >= lower } else { j < lower };
            if !outside {
                continue;
            }
            let Some(c) = map.remove(&k) else { continue };
            if p == 2 {
                accumulate(map, (k + step) % n, -c);
            } else {
                for t in 1..p {
                    accumulate(map, (k + t * step) % n, -c.clone());
                }
            }
        }
    }
}

/// Reduce to the smallest conductor; `map` must already be in basis form at `n`.
fn minimize(mut n: u64, mut map: Terms) -> (u64, Terms) {
    'outer: loop {
        if map.is_empty() {
            return (1, map);
        }
        if n == 1 {
            return (1, map);
        }
        for (p, a) in factorize(n) {
            if p == 2 || a >= 2 {
                if map.keys().all(|&k| k % p == 0) {
                    let next: Terms = map.into_iter().map(|(k, c)| (k / p, c)).collect();
                    n /= p;
                    map = next;
                    zumbroich_reduce(n, &mut map);
                    continue 'outer;
                }
            } else {
                // odd p exactly dividing n: each residue class mod n/p must
                // carry p-1 equal coefficients
                let m = n / p;
                let mut groups: BTreeMap<u64, Vec<&BigRational>> = BTreeMap::new();
                for (&k, c) in &map {
                    groups.entry(k % m).or_default().push(c);
                }
                let ok = groups
                    .values()
                    .all(|cs| cs.len() as u64 == p - 1 && cs.iter().all(|c| *c == cs[0]));
                if ok {
                    let mut next = Terms::new();
                    for (r, cs) in groups {
                        let k0 = crt_pair(r, m, 0, p);
                        accumulate(&mut next, (k0 / p) % m, -cs[0].clone());
                    }
                    n = m;
                    map = next;
                    zumbroich_reduce(n, &mut map);
                    continue 'outer;
                }
            }
        }
        return (n, map);
    }
}

fn normalize(n: u64, mut map: Terms) -> Cyclotomic {
    zumbroich_reduce(n, &mut map);
    let (n, map) = minimize(n, map);
    Cyclotomic {
        conductor: n,
        terms: map.into_iter().collect(),
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Cyclotomic {
                conductor: 1,
                terms: vec![(0, q)],
            }
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `E(n)^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as u64;
        let mut map = Terms::new();
        map.insert(k, BigRational::one());
        normalize(n, map)
    }

    /// Sum of `coeffs[k] * E(n)^k`.
    pub fn from_coefficients(n: u64, coeffs: &[(u64, BigRational)]) -> Self {
        let mut map = Terms::new();
        for (k, c) in coeffs {
            accumulate(&mut map, k % n, c.clone());
        }
        normalize(n, map)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Basis coefficients at the minimal conductor.
    pub fn terms(&self) -> &[(u64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match (self.conductor, self.terms.as_slice()) {
            (1, []) => Some(BigRational::zero()),
            (1, [(0, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    /// Integral iff every basis coefficient is an integer (the basis is a
    /// Z-basis of the ring of integers).
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// No coefficient denominator is divisible by `p`.
    pub fn is_p_integral(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.terms
            .iter()
            .all(|(_, c)| !(c.denom() % &p).is_zero() || c.denom().is_one())
    }

    fn lifted(&self, n: u64, map: &mut Terms) {
        let f = n / self.conductor;
        for (k, c) in &self.terms {
            accumulate(map, k * f, c.clone());
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    /// Image under `E(n) -> E(n)^t`; `t` must be prime to the conductor.
    pub fn galois_conjugate(&self, t: i64) -> Self {
        let n = self.conductor;
        let t = t.rem_euclid(n as i64) as u64;
        debug_assert_eq!(gcd(t.max(1), n), 1);
        let mut map = Terms::new();
        for (k, c) in &self.terms {
            accumulate(&mut map, (k * t) % n, c.clone());
        }
        normalize(n, map)
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois_conjugate(-1)
    }

    pub fn sum<'a>(values: impl IntoIterator<Item = &'a Cyclotomic>) -> Self {
        let values: Vec<&Cyclotomic> = values.into_iter().collect();
        let n = values.iter().fold(1, |acc, v| lcm(acc, v.conductor));
        let mut map = Terms::new();
        for v in values {
            v.lifted(n, &mut map);
        }
        normalize(n, map)
    }

    /// Numeric value `(re, im)`; for tests and diagnostics only.
    #[doc(hidden)]
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * (*k as f64) / n;
            (re + x * angle.cos(), im + x * angle.sin())
        })
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::sum([self, rhs])
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let neg = -rhs;
        Cyclotomic::sum([self, &neg])
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(q) = self.to_rational() {
            return rhs.scale(&q);
        }
        if let Some(q) = rhs.to_rational() {
            return self.scale(&q);
        }
        let n = lcm(self.conductor, rhs.conductor);
        let fa = n / self.conductor;
        let fb = n / rhs.conductor;
        let mut map = Terms::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                accumulate(&mut map, (ka * fa + kb * fb) % n, ca * cb);
            }
        }
        normalize(n, map)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl fmt::Display for Cyclotomic {
    /// `q0 + q1*E(n)^1 + ...` with exact rationals `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*E({})^{k}", self.conductor)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::InvalidArgument(format!("bad cyclotomic term {t:?}"));
        let mut parts: Vec<Cyclotomic> = Vec::new();
        for term in s.split(" + ") {
            let term = term.trim();
            if let Some((coeff, root)) = term.split_once("*E(") {
                let (n, k) = root.split_once(")^").ok_or_else(|| bad(term))?;
                let n: u64 = n.parse().map_err(|_| bad(term))?;
                let k: i64 = k.parse().map_err(|_| bad(term))?;
                if n == 0 {
                    return Err(bad(term));
                }
                let q = parse_rational(coeff)?;
                parts.push(Cyclotomic::root_of_unity(n, k).scale(&q));
            } else {
                parts.push(Cyclotomic::from_rational(parse_rational(term)?));
            }
        }
        Ok(Cyclotomic::sum(parts.iter()))
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `|q|` for rationals, used in reports.
pub fn rational_abs(q: &BigRational) -> BigRational {
    q.abs()
}
